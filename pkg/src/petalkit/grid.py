"""
Grid diagrams.

Columns are numbered 1..g from the left, rows 1..g from the top. Column j
holds an X at row ``x_rows[j-1]`` and an O at row ``o_rows[j-1]``; each
row holds one X and one O as well. The vertical stick of a column joins its
X and O, the horizontal stick of a row joins its X and O, and vertical
sticks always pass over horizontal ones.

The knot is oriented X -> O along columns and O -> X along rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import PetalKitError
from .invariants import alexander_from_pd
from .laurent import LaurentPoly
from .pd import PDCode, pd_from_passages

# Re-exported so callers can treat PD codes as part of the grid surface.
__all__ = [
    "GridDiagram",
    "PDCode",
    "alexander_from_grid",
    "cyclic_col_shift",
    "cyclic_row_shift",
    "grid_to_pd",
    "grid_valid",
    "inflection_stick",
    "is_petal_form",
    "minimal_torus_grid",
    "stick_lengths",
]


@dataclass(frozen=True)
class GridDiagram:
    size: int
    x_rows: tuple[int, ...]
    o_rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x_rows", tuple(int(v) for v in self.x_rows))
        object.__setattr__(self, "o_rows", tuple(int(v) for v in self.o_rows))
        if len(self.x_rows) != self.size or len(self.o_rows) != self.size:
            raise PetalKitError(f"grid of size {self.size} needs {self.size} X and O entries")

    def to_json(self) -> dict:
        return {"size": self.size, "x": list(self.x_rows), "o": list(self.o_rows)}

    @classmethod
    def from_json(cls, data: dict) -> GridDiagram:
        return cls(int(data["size"]), tuple(data["x"]), tuple(data["o"]))

    # 0-based helpers: column of the X / O marking in each row
    def _row_cols(self) -> tuple[list[int], list[int]]:
        xcol = [0] * self.size
        ocol = [0] * self.size
        for j in range(self.size):
            xcol[self.x_rows[j] - 1] = j
            ocol[self.o_rows[j] - 1] = j
        return xcol, ocol


def _is_perm(v: Sequence[int], g: int) -> bool:
    return sorted(v) == list(range(1, g + 1))


def _column_cycle(gd: GridDiagram) -> list[int]:
    """Columns in the order the knot visits them, starting from column 0."""
    xcol, _ = gd._row_cols()
    order = [0]
    j = xcol[gd.o_rows[0] - 1]
    while j != 0 and len(order) <= gd.size:
        order.append(j)
        j = xcol[gd.o_rows[j] - 1]
    return order


def grid_valid(gd: GridDiagram) -> bool:
    g = gd.size
    if not isinstance(g, int) or g < 2:
        return False
    if not (_is_perm(gd.x_rows, g) and _is_perm(gd.o_rows, g)):
        return False
    if any(x == o for x, o in zip(gd.x_rows, gd.o_rows)):
        return False
    return len(_column_cycle(gd)) == g


def _require_valid(gd: GridDiagram) -> None:
    if not grid_valid(gd):
        raise PetalKitError("invalid grid diagram (needs X/O permutations, distinct per column, one component)")


def minimal_torus_grid(p: int, q: int) -> GridDiagram:
    """Cyclic staircase of size p+q: O on the diagonal, X shifted p rows down."""
    if not (isinstance(p, int) and isinstance(q, int)) or not 2 <= p < q:
        raise PetalKitError(f"need 2 <= p < q, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise PetalKitError(f"({p}, {q}) are not coprime")
    g = p + q
    o_rows = tuple(range(1, g + 1))
    x_rows = tuple(((j + p - 1) % g) + 1 for j in range(1, g + 1))
    return GridDiagram(g, x_rows, o_rows)


def cyclic_col_shift(gd: GridDiagram) -> GridDiagram:
    """Move the last column to the front."""
    _require_valid(gd)
    return GridDiagram(gd.size, gd.x_rows[-1:] + gd.x_rows[:-1], gd.o_rows[-1:] + gd.o_rows[:-1])


def cyclic_row_shift(gd: GridDiagram) -> GridDiagram:
    """Move the bottom row to the top."""
    _require_valid(gd)
    g = gd.size
    bump = lambda v: v % g + 1
    return GridDiagram(g, tuple(map(bump, gd.x_rows)), tuple(map(bump, gd.o_rows)))


def grid_crossings(gd: GridDiagram) -> list[tuple[int, int]]:
    """(row, column) pairs, 0-based, where a vertical stick passes over a horizontal one."""
    xcol, ocol = gd._row_cols()
    out = []
    for j in range(gd.size):
        lo, hi = sorted((gd.x_rows[j] - 1, gd.o_rows[j] - 1))
        for i in range(lo + 1, hi):
            a, b = sorted((xcol[i], ocol[i]))
            if a < j < b:
                out.append((i, j))
    return out


def grid_to_pd(gd: GridDiagram) -> PDCode:
    _require_valid(gd)
    g = gd.size
    xcol, ocol = gd._row_cols()
    crossing_ids = {rc: k for k, rc in enumerate(grid_crossings(gd))}
    if not crossing_ids:
        return PDCode(())
    signs = [0] * len(crossing_ids)
    for (i, j), k in crossing_ids.items():
        down = gd.o_rows[j] > gd.x_rows[j]
        right = xcol[i] > ocol[i]
        signs[k] = 1 if down == right else -1

    passages: list[tuple[int, bool]] = []
    j = 0
    for _ in range(g):
        # vertical: X -> O in column j
        r0, r1 = gd.x_rows[j] - 1, gd.o_rows[j] - 1
        step = 1 if r1 > r0 else -1
        for i in range(r0 + step, r1, step):
            if (i, j) in crossing_ids:
                passages.append((crossing_ids[i, j], True))
        # horizontal: O -> X in row r1
        c0, c1 = ocol[r1], xcol[r1]
        step = 1 if c1 > c0 else -1
        for c in range(c0 + step, c1, step):
            if (r1, c) in crossing_ids:
                passages.append((crossing_ids[r1, c], False))
        j = c1
    return pd_from_passages(passages, signs)


def stick_lengths(gd: GridDiagram) -> list[int]:
    """Horizontal stick length of each row (top to bottom), in column units."""
    xcol, ocol = gd._row_cols()
    return [abs(x - o) for x, o in zip(xcol, ocol)]


def _petal_r(g: int) -> int:
    return (g - 3) // 2


def inflection_stick(gd: GridDiagram) -> int | None:
    """1-based column of the unique vertical stick whose two horizontal neighbours
    both have length r+1 and leave it on opposite sides; None if there is not exactly one."""
    g = gd.size
    r = _petal_r(g)
    xcol, ocol = gd._row_cols()
    lengths = stick_lengths(gd)
    found = []
    for j in range(g):
        rows = (gd.x_rows[j] - 1, gd.o_rows[j] - 1)
        if all(lengths[i] == r + 1 for i in rows):
            others = [ocol[i] if xcol[i] == j else xcol[i] for i in rows]
            if (others[0] - j) * (others[1] - j) < 0:
                found.append(j + 1)
    return found[0] if len(found) == 1 else None


def is_petal_form(gd: GridDiagram) -> bool:
    """
    The shape of a grid coming from a petal projection with 2r+3 petals:
    one inflection stick whose horizontal neighbours both have length r+1,
    every other vertical stick meeting one stick of length r+1 and one of r+2.
    Even sizes are never of this shape.
    """
    _require_valid(gd)
    g = gd.size
    if g % 2 == 0 or g < 3:
        return False
    r = _petal_r(g)
    lengths = stick_lengths(gd)
    col = inflection_stick(gd)
    if col is None:
        return False
    for j in range(g):
        if j + 1 == col:
            continue
        adj = sorted((lengths[gd.x_rows[j] - 1], lengths[gd.o_rows[j] - 1]))
        if adj != [r + 1, r + 2]:
            return False
    return True


def alexander_from_grid(gd: GridDiagram) -> LaurentPoly:
    return alexander_from_pd(grid_to_pd(gd))


def grid_jones(gd: GridDiagram, max_crossings: int | None = None) -> LaurentPoly:
    from .invariants import DEFAULT_MAX_CROSSINGS, jones

    return jones(grid_to_pd(gd), max_crossings or DEFAULT_MAX_CROSSINGS)
