"""Bundled reference tables and their recomputation.

Each table is a CSV resource ``tableK.csv`` with header ``key,expected``.
Keys look like ``xi:n=10`` or ``beta:p=10,q=10``; expected values are exact
decimal strings.
"""
from __future__ import annotations

import csv
import io
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .banddeg import beta
from .nildeg import count_F, count_G, kappa
from .numerics import alpha, xi
from .rightnull import mu_rank1, rn_degree

__all__ = ["TABLES", "load_table", "evaluate", "TableReport", "verify_tables", "thread_count"]

TABLES = tuple(range(1, 8))

_EVAL = {
    "xi": lambda a: xi(a["n"]),
    "alpha": lambda a: alpha(a["n"]),
    "beta": lambda a: beta(a["p"], a["q"]).degree,
    "beta_rank": lambda a: beta(a["p"], a["q"]).rank,
    "F": lambda a: count_F(a["n"])[0],
    "F1": lambda a: count_F(a["n"])[1],
    "kappa": lambda a: kappa(a["n"])[0],
    "kappa_t": lambda a: kappa(a["n"])[1],
    "kappa_u": lambda a: kappa(a["n"])[2],
    "G": lambda a: count_G(a["n"])[0],
    "G1": lambda a: count_G(a["n"])[1],
    "rho": lambda a: rn_degree(a["p"], a["q"]).degree,
    "mu": lambda a: mu_rank1(a["n"]),
}

_KEY = re.compile(r"^(\w+):(.*)$")


def parse_key(key: str) -> tuple[str, dict[str, int]]:
    m = _KEY.match(key)
    if not m:
        raise ValueError(f"bad golden key {key!r}")
    args = {}
    for part in m.group(2).split(","):
        name, _, val = part.partition("=")
        args[name] = int(val)
    return m.group(1), args


def load_table(k: int) -> list[tuple[str, str]]:
    if k not in TABLES:
        raise ValueError(f"no table {k}; tables are 1..7")
    text = resources.files("semideg.goldens").joinpath(f"table{k}.csv").read_text()
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["key", "expected"]:
        raise ValueError(f"table{k}.csv has an unexpected header")
    return [(key, val) for key, val in rows[1:]]


def evaluate(key: str) -> str:
    name, args = parse_key(key)
    if name not in _EVAL:
        raise ValueError(f"unknown golden quantity {name!r}")
    return str(_EVAL[name](args))


@dataclass
class TableReport:
    table: int
    total: int = 0
    passed: int = 0
    mismatches: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "total": self.total,
            "passed": self.passed,
            "mismatches": [{"key": k, "expected": e, "got": g} for k, e, g in self.mismatches],
        }


def thread_count() -> int:
    """Worker cap from SEMIDEG_THREADS (default: CPU count, at most 8)."""
    env = os.environ.get("SEMIDEG_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("SEMIDEG_THREADS must be >= 1")
        return n
    return min(8, os.cpu_count() or 1)


def _verify_one(k: int) -> TableReport:
    rep = TableReport(k)
    for key, expected in load_table(k):
        got = evaluate(key)
        rep.total += 1
        if got == expected:
            rep.passed += 1
        else:
            rep.mismatches.append((key, expected, got))
    return rep


def verify_tables(selection: list[int] | None = None) -> list[TableReport]:
    """Recompute every cell of the selected tables; reports come back in table order."""
    tables = list(selection) if selection else list(TABLES)
    for k in tables:
        if k not in TABLES:
            raise ValueError(f"no table {k}; tables are 1..7")
    with ThreadPoolExecutor(max_workers=thread_count()) as ex:
        return list(ex.map(_verify_one, tables))
