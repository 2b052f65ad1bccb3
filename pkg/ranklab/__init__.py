"""Exact and numerical tooling for Dyson's rank statistic."""

__version__ = "0.1.0"
