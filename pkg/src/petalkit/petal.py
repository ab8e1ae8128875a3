"""
Petal permutations, the (2r+3)-petal family for T(r, r+2), and the
arc-index lower bound.

A petal permutation of p strands (p odd) is the sequence of heights met
along the knot, one per strand through the multi-crossing, heights
numbered 1 (top) to p (bottom). Stored values are rotated to start at 1;
reflections are not identified (see ``same_up_to_symmetry``).

Grid layout: consecutive petals along the knot sit (p-1)/2 columns apart
(mod p), which is what makes every horizontal stick have length
(p-1)/2 or (p+1)/2. The first petal is placed in column (p-1)//4 + 1, which
orients the top stick leftward and, for the T(r, r+2) family, puts the
stick running from level r+2 to the bottom level in the middle column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PetalKitError
from .grid import GridDiagram, alexander_from_grid, grid_valid, is_petal_form
from .invariants import torus_alexander


@dataclass(frozen=True)
class PetalPermutation:
    levels: tuple[int, ...]

    def __post_init__(self):
        lv = tuple(int(v) for v in self.levels)
        p = len(lv)
        if p < 1 or p % 2 == 0:
            raise PetalKitError(f"petal permutation needs an odd number of entries, got {p}")
        if sorted(lv) != list(range(1, p + 1)):
            raise PetalKitError(f"levels must be a permutation of 1..{p}")
        k = lv.index(1)
        object.__setattr__(self, "levels", lv[k:] + lv[:k])

    def __len__(self) -> int:
        return len(self.levels)

    def to_json(self) -> dict:
        return {"levels": list(self.levels)}

    @classmethod
    def from_json(cls, data: dict) -> PetalPermutation:
        return cls(tuple(data["levels"]))


def same_up_to_symmetry(a: PetalPermutation, b: PetalPermutation) -> bool:
    """Equal after rotation and/or reading the other way round."""
    if len(a) != len(b):
        return False
    return b.levels in (a.levels, PetalPermutation(a.levels[::-1]).levels)


def torus_petal_permutation(n: int) -> PetalPermutation:
    """
    Petal permutation with 4n+5 petals for T(2n+1, 2n+3):
    1, 3n+4, [n+2, 3n+3], [n+1, 3n+2], ..., [2, 2n+3],
    [4n+5, 2n+2], ..., [3n+6, n+3], 3n+5.
    """
    if not isinstance(n, int) or n < 1:
        raise PetalKitError(f"n must be a positive integer, got {n}")
    seq = [1, 3 * n + 4]
    for j in range(n + 1):
        seq += [n + 2 - j, 3 * n + 3 - j]
    for j in range(n):
        seq += [4 * n + 5 - j, 2 * n + 2 - j]
    seq.append(3 * n + 5)
    return PetalPermutation(tuple(seq))


def petal_columns(p: int) -> list[int]:
    """0-based column of the k-th petal along the knot."""
    step = (p - 1) // 2
    start = (p - 1) // 4
    return [(start + k * step) % p for k in range(p)]


def petal_to_grid(pp: PetalPermutation) -> GridDiagram:
    lv = pp.levels
    p = len(lv)
    if p < 3:
        raise PetalKitError("petal permutations with fewer than 3 petals have no grid")
    x = [0] * p
    o = [0] * p
    for k, c in enumerate(petal_columns(p)):
        x[c] = lv[k]
        o[c] = lv[(k + 1) % p]
    return GridDiagram(p, tuple(x), tuple(o))


def read_petal_permutation(gd: GridDiagram) -> PetalPermutation:
    """Levels of the horizontal sticks met along the knot, starting on the
    top stick travelling left."""
    if gd.size % 2 == 0:
        raise PetalKitError("even-size grids are not petal grids")
    if not grid_valid(gd) or not is_petal_form(gd):
        raise PetalKitError("grid is not of petal shape")
    xcol, ocol = gd._row_cols()
    forward = xcol[0] < ocol[0]
    levels = []
    row = 0
    for _ in range(gd.size):
        levels.append(row + 1)
        if forward:
            j = xcol[row]
            row = gd.o_rows[j] - 1
        else:
            j = ocol[row]
            row = gd.x_rows[j] - 1
    return PetalPermutation(tuple(levels))


def petal_lower_bound(alpha: int) -> int:
    """Petal number bound from the arc index of a nontrivial knot."""
    if not isinstance(alpha, int) or alpha < 3:
        raise PetalKitError(f"arc index of a nontrivial knot is at least 3, got {alpha}")
    return alpha if alpha % 2 else alpha + 1


def arc_index_torus(r: int, s: int) -> int:
    if not (isinstance(r, int) and isinstance(s, int)) or not 2 <= r < s:
        raise PetalKitError(f"need 2 <= r < s, got ({r}, {s})")
    if math.gcd(r, s) != 1:
        raise PetalKitError(f"({r}, {s}) are not coprime")
    return r + s


@dataclass(frozen=True)
class TheoremReport:
    r: int
    lower: int
    upper: int
    verified: bool

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "verified": self.verified}


def theorem_check(r: int) -> TheoremReport:
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise PetalKitError(f"r must be an odd integer >= 3, got {r}")
    lower = petal_lower_bound(arc_index_torus(r, r + 2))
    pp = torus_petal_permutation((r - 1) // 2)
    got = alexander_from_grid(petal_to_grid(pp))
    want = torus_alexander(r, r + 2)
    if got != want:
        raise PetalKitError(
            f"petal grid for r={r} has Alexander polynomial {got}, expected {want}"
        )
    upper = len(pp)
    return TheoremReport(r, lower, upper, lower == upper == 2 * r + 3)
