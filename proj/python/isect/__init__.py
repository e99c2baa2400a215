"""Intersection-graph models, structured algorithms and brute-force oracles."""

from ._core import Error, check, edges, generate, interval_apsp, oracle, run, solve

__all__ = ["Error", "check", "edges", "generate", "interval_apsp", "oracle", "run", "solve"]
