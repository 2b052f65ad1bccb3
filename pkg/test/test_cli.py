import csv
import json

import pytest

from cfg_loader import load, merge_overrides
from cli import EXIT_IO, EXIT_PASS, EXIT_USAGE, main
from ranklab.errors import UsageError
from ranklab.ranks import partition_numbers, rank_mod_table
from suites import make_suite


CFG = "test/test.yaml"


def run(*argv) -> int:
    return main(list(argv) + ["-f", CFG, "--quiet"])


def test_table_rank_csv(tmp_path):
    out = tmp_path / "rank.csv"
    assert run("table", "rank", "--max-n", "12", "--format", "csv", "--output", str(out)) == EXIT_PASS

    with open(out, newline="") as fp:
        rows = list(csv.reader(fp))
    assert rows[0] == ["n", "m", "count"]
    totals = [0] * 13
    for n, _, count in rows[1:]:
        totals[int(n)] += int(count)
    assert totals == list(partition_numbers(12))


def test_table_partitions_json(tmp_path):
    out = tmp_path / "p.json"
    assert run("table", "p", "--max-n", "100", "--output", str(out)) == EXIT_PASS
    document = json.loads(out.read_text())
    assert document["columns"] == ["n", "p"]
    assert document["rows"][-1] == [100, 190569292]


def test_table_mod(tmp_path):
    out = tmp_path / "mod.json"
    assert run("table", "mod", "--t", "3", "--max-n", "30", "--output", str(out)) == EXIT_PASS
    document = json.loads(out.read_text())
    table = rank_mod_table(3, 30)
    assert document["params"] == {"max_n": 30, "t": 3}
    assert document["rows"] == [list(row) for row in table.csv_rows()]


def test_usage_errors(tmp_path):
    out = str(tmp_path / "x.json")
    assert run("table", "mod", "--max-n", "10", "--output", out) == EXIT_USAGE
    assert run("table", "rank", "--max-n", "-1", "--output", out) == EXIT_USAGE
    assert run("table", "cube", "--max-n", "3") == EXIT_USAGE
    assert run("verify", "lemmas", "--samples", "3", "--output", out) == EXIT_USAGE
    assert run("scan", "convexity", "--t", "3", "--r", "3", "--output", out) == EXIT_USAGE
    assert run("verify", "transforms", "--digits", "8", "--output", out) == EXIT_USAGE
    assert main(["--version"]) == EXIT_PASS


def test_precision_refusal(tmp_path):
    out = str(tmp_path / "a3.json")
    assert run("scan", "a3", "--eps", "1.0,0.1", "--digits", "30", "--output", out) == EXIT_USAGE


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    out = str(blocker / "table.csv")
    assert run("table", "p", "--max-n", "5", "--format", "csv", "--output", out) == EXIT_IO


def test_verify_monotonicity(tmp_path):
    out = tmp_path / "mono.json"
    assert run("verify", "monotonicity", "--max-n", "40", "--max-m", "5", "--output", str(out)) == EXIT_PASS
    document = json.loads(out.read_text())
    assert document["status"] == "pass"
    weak = document["reports"][0]
    assert weak["check"] == "weak_monotonicity"
    assert [0, 8] in weak["details"]["exceptions"]
    assert document["config"]["verify"]["monotonicity"]["N_max"] == 40


def test_verify_reports_are_reproducible(tmp_path):
    out = tmp_path / "transforms.json"
    assert run("verify", "transforms", "--samples", "2", "--seed", "5", "--output", str(out)) == EXIT_PASS
    first = out.read_bytes()
    assert run("verify", "transforms", "--samples", "2", "--seed", "5", "--output", str(out)) == EXIT_PASS
    assert out.read_bytes() == first


def test_failing_suite_exits_one(tmp_path):
    out = tmp_path / "eq.json"
    # an impossible gate
    cfg = merge_overrides(
        load(CFG), {"scan": {"equidistribution": {"gate": 1e-30, "output": str(out)}}, "quiet": True}
    )
    assert not make_suite(cfg, "scan", "equidistribution").run()
    assert json.loads(out.read_text())["status"] == "fail"


def test_scans(tmp_path):
    for name, extra in [("bessenrodt-ono", ["--cap", "40"]), ("phi", []), ("convexity", ["--cap", "60"])]:
        out = tmp_path / f"{name}.json"
        assert run("scan", name, *extra, "--output", str(out)) == EXIT_PASS
        assert json.loads(out.read_text())["reports"]


def test_verify_lemmas_and_identities(tmp_path):
    for name in ("lemmas", "identities", "bound"):
        out = tmp_path / f"{name}.json"
        assert run("verify", name, "--output", str(out)) == EXIT_PASS


def test_merge_overrides():
    cfg = {"a": {"b": 1, "c": 2}, "d": 3}
    merged = merge_overrides(cfg, {"a": {"b": None, "c": 5}, "d": None, "e": 6})
    assert merged == {"a": {"b": 1, "c": 5}, "d": 3, "e": 6}
    assert cfg == {"a": {"b": 1, "c": 2}, "d": 3}


def test_make_suite():
    cfg = load(CFG)
    assert make_suite(cfg, "verify", "lemmas").output == "test/artifacts/verify_lemmas.json"
    with pytest.raises(UsageError):
        make_suite(cfg, "verify", "nonexistent")
    with pytest.raises(AssertionError):
        make_suite(merge_overrides(cfg, {"verify": {"lemmas": {"suite_cls": "Nothing"}}}), "verify", "lemmas")
    # a verify suite registered under scan
    with pytest.raises(AssertionError):
        make_suite(merge_overrides(cfg, {"scan": {"lemmas": {"suite_cls": "LemmaSuite"}}}), "scan", "lemmas")


@pytest.mark.slow
@pytest.mark.parametrize("name, seed", [("transforms", 7), ("bound", 11)])
def test_shipped_sample_suites(tmp_path, name, seed):
    out = tmp_path / f"{name}.json"
    overrides = {"verify": {name: {"samples": 50, "seed": seed, "output": str(out)}}, "quiet": True}
    cfg = merge_overrides(load("config/ranklab.yaml"), overrides)
    assert make_suite(cfg, "verify", name).run()
    assert json.loads(out.read_text())["status"] == "pass"
