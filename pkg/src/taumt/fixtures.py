"""Access to the packaged data tables.

Tables ship as CSV files under taumt/fixtures; the environment variable
TAUMT_FIXTURES overrides the directory, letting tests or users swap in
their own transcriptions.
"""

from __future__ import annotations

import csv
import os
from importlib import resources
from pathlib import Path

ENV_VAR = "TAUMT_FIXTURES"


def _read_rows(name: str) -> list[list[str]]:
    override = os.environ.get(ENV_VAR)
    if override:
        path = Path(override) / name
        text = path.read_text(encoding="utf-8")
    else:
        text = resources.files("taumt").joinpath("fixtures", name).read_text(encoding="utf-8")
    rows = []
    for row in csv.reader(text.splitlines()):
        if not row or row[0].lstrip().startswith("#"):
            continue
        rows.append([cell.strip() for cell in row])
    return rows


def load_orbit_table(name: str) -> list[tuple[str, int]]:
    """Rows (cusp representative, value) of a boundary-symbol table."""
    return [(r[0], int(r[1])) for r in _read_rows(name)]


def load_divisor_values(name: str) -> list[tuple[str, str, int]]:
    """Rows (r, s, value) giving a symbol's value on {r} - {s}."""
    return [(r[0], r[1], int(r[2])) for r in _read_rows(name)]


def load_table1() -> list[tuple[str, str, int, int]]:
    """The 55-row appendix table: (r, s, alpha column mod 9, phi9 column mod 9)."""
    return [(r[0], r[1], int(r[2]), int(r[3])) for r in _read_rows("appendix_table1.csv")]


def load_serre_congruences() -> list[tuple[int, int, int]]:
    """Rows (modulus, e1, e2) asserting tau(l) = l^e1 + l^e2 mod modulus at primes."""
    return [(int(r[0]), int(r[1]), int(r[2])) for r in _read_rows("serre_congruences.csv")]
