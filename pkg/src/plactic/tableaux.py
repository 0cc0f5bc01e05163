"""Young tableaux (plactic) and quasi-ribbon tableaux (hypoplactic)."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class YoungTableau:
    rows: Rows = ()

    def is_valid(self) -> bool:
        rows = self.rows
        for i, row in enumerate(rows):
            if not row or any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if i > 0:
                above = rows[i - 1]
                if len(row) > len(above):
                    return False
                if any(above[j] >= row[j] for j in range(len(row))):
                    return False
        return True

    def entries(self) -> list[int]:
        return [a for row in self.rows for a in row]

    def reading(self) -> tuple[int, ...]:
        """Row reading: bottom row to top row, each left to right."""
        return tuple(a for row in reversed(self.rows) for a in row)

    def key(self) -> tuple:
        return ("plac", self.rows)

    def to_record(self) -> dict:
        return {"kind": "young_tableau", "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(a)) for a in self.entries())
        return "\n".join(" ".join(str(a).rjust(width) for a in row) for row in self.rows)


def schensted_insert(tableau: YoungTableau, a: int) -> YoungTableau:
    rows = [list(r) for r in tableau.rows]
    for row in rows:
        # leftmost entry strictly greater than a
        j = bisect_right(row, a)
        if j == len(row):
            row.append(a)
            break
        row[j], a = a, row[j]
    else:
        rows.append([a])
    return YoungTableau(tuple(tuple(r) for r in rows))


def pplac(w: Sequence[int]) -> YoungTableau:
    return reduce(schensted_insert, w, YoungTableau())


@dataclass(frozen=True)
class QuasiRibbonTableau:
    """Rows listed top to bottom; consecutive rows overlap in exactly one column."""

    rows: Rows = ()

    @property
    def offsets(self) -> tuple[int, ...]:
        out = []
        col = 0
        for row in self.rows:
            out.append(col)
            col += len(row) - 1
        return tuple(out)

    def is_valid(self) -> bool:
        seen: set[int] = set()
        for i, row in enumerate(self.rows):
            if not row or any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if i > 0 and not self.rows[i - 1][-1] < row[0]:
                return False
            if seen & set(row):
                return False
            seen |= set(row)
        return True

    def entries(self) -> list[int]:
        return [a for row in self.rows for a in row]

    def key(self) -> tuple:
        return ("hypo", self.rows)

    def to_record(self) -> dict:
        return {
            "kind": "quasi_ribbon_tableau",
            "rows": [list(r) for r in self.rows],
            "offsets": list(self.offsets),
        }

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(a)) for a in self.entries())
        lines = []
        for off, row in zip(self.offsets, self.rows):
            cells = " ".join(str(a).rjust(width) for a in row)
            lines.append(" " * ((width + 1) * off) + cells)
        return "\n".join(lines)


def hypo_insert(tableau: QuasiRibbonTableau, a: int) -> QuasiRibbonTableau:
    rows = tableau.rows
    # entries along the ribbon are sorted, so the right-most bottom-most entry <= a
    # is the last one in ribbon order
    for r in range(len(rows) - 1, -1, -1):
        j = bisect_right(rows[r], a)
        if j:
            head, tail = rows[r][:j] + (a,), rows[r][j:]
            new_rows = rows[:r] + (head,) + ((tail,) if tail else ()) + rows[r + 1:]
            return QuasiRibbonTableau(new_rows)
    return QuasiRibbonTableau(((a,),) + rows)


def phypo(w: Sequence[int]) -> QuasiRibbonTableau:
    return reduce(hypo_insert, w, QuasiRibbonTableau())
