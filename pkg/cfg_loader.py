"""Loads ranklab's YAML configuration and layers command-line overrides on
top of it."""

from typing import Any

import yaml
from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter


DEFAULT_CONFIG = "config/ranklab.yaml"


def load(filename=None) -> dict[str, Any]:
    if not filename:
        args = make_parser().parse_args()
        filename = args.filename

    with open(filename, "r") as stream:
        cfg = yaml.safe_load(stream)

    return cfg


def merge_overrides(cfg: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    """recursive merge; `None` in `overrides` leaves the config value alone"""
    merged = dict(cfg)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            value = merge_overrides(merged[key], value)
        merged |= {key: value}
    return merged


def make_parser(parser: ArgumentParser | None = None) -> ArgumentParser:
    parser = parser or ArgumentParser(
        description=__doc__, formatter_class=ArgumentDefaultsHelpFormatter
    )

    parser.add_argument(
        "-f",
        "--file",
        dest="filename",
        help="configuration file",
        metavar="FILE",
        default=DEFAULT_CONFIG,
    )

    return parser
