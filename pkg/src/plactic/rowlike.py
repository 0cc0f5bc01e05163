"""Stalactic tableaux and left/right patience-sorting tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

Columns = tuple[tuple[int, ...], ...]


def _render_columns(columns: Sequence[Sequence[int]]) -> str:
    if not columns:
        return "(empty)"
    width = max(len(str(a)) for col in columns for a in col)
    depth = max(len(col) for col in columns)
    lines = []
    for i in range(depth):
        cells = [str(col[i]).rjust(width) if i < len(col) else " " * width for col in columns]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


@dataclass(frozen=True)
class StalacticTableau:
    """Top-aligned columns, each a run of one symbol, stored as (symbol, height)."""

    columns: tuple[tuple[int, int], ...] = ()

    def is_valid(self) -> bool:
        symbols = [a for a, _ in self.columns]
        return len(set(symbols)) == len(symbols) and all(n >= 1 for _, n in self.columns)

    def key(self) -> tuple:
        return ("stal", self.columns)

    def to_record(self) -> dict:
        return {"kind": "stalactic_tableau", "columns": [[a, n] for a, n in self.columns]}

    def render(self) -> str:
        return _render_columns([(a,) * n for a, n in self.columns])


def stal_insert(tableau: StalacticTableau, a: int) -> StalacticTableau:
    cols = tableau.columns
    for i, (b, n) in enumerate(cols):
        if b == a:
            return StalacticTableau(cols[:i] + ((a, n + 1),) + cols[i + 1:])
    return StalacticTableau(((a, 1),) + cols)


def pstal(w: Sequence[int]) -> StalacticTableau:
    return reduce(stal_insert, reversed(w), StalacticTableau())


@dataclass(frozen=True)
class PSTableau:
    """Patience-sorting tableau; each column is listed top to bottom."""

    columns: Columns = ()
    flavor: str = "left"

    @property
    def top_row(self) -> tuple[int, ...]:
        return tuple(col[0] for col in self.columns)

    def is_valid(self) -> bool:
        top = self.top_row
        if any(not col for col in self.columns):
            return False
        if self.flavor == "left":
            row_ok = all(p <= q for p, q in zip(top, top[1:]))
            col_ok = all(p < q for col in self.columns for p, q in zip(col, col[1:]))
        else:
            row_ok = all(p < q for p, q in zip(top, top[1:]))
            col_ok = all(p <= q for col in self.columns for p, q in zip(col, col[1:]))
        return row_ok and col_ok

    def key(self) -> tuple:
        return ("lps" if self.flavor == "left" else "rps", self.columns)

    def to_record(self) -> dict:
        kind = "lps_tableau" if self.flavor == "left" else "rps_tableau"
        return {"kind": kind, "columns": [list(c) for c in self.columns]}

    def render(self) -> str:
        return _render_columns(self.columns)


def _ps_insert(tableau: PSTableau, a: int, strict: bool) -> PSTableau:
    cols = tableau.columns
    for i, col in enumerate(cols):
        if col[0] > a or (not strict and col[0] == a):
            return PSTableau(cols[:i] + ((a,) + col,) + cols[i + 1:], tableau.flavor)
    return PSTableau(cols + ((a,),), tableau.flavor)


def lps_insert(tableau: PSTableau, a: int) -> PSTableau:
    """Bump onto the leftmost column whose top is strictly greater than ``a``."""
    return _ps_insert(tableau, a, strict=True)


def rps_insert(tableau: PSTableau, a: int) -> PSTableau:
    """Bump onto the leftmost column whose top is at least ``a``."""
    return _ps_insert(tableau, a, strict=False)


def plps(w: Sequence[int]) -> PSTableau:
    return reduce(lps_insert, w, PSTableau((), "left"))


def prps(w: Sequence[int]) -> PSTableau:
    return reduce(rps_insert, w, PSTableau((), "right"))
