"""
Knot invariants used as certificates of knot type.

Alexander polynomials are in the variable t and normalized (lowest exponent 0,
positive constant term). Bracket and Jones values are in the bracket variable
A; the Jones polynomial in t is recovered by t = A^-4.
"""

from __future__ import annotations

import math

from .errors import CrossingCapExceeded, NotAKnotError, PetalKitError
from .laurent import ONE, T, ZERO, LaurentPoly, det_sparse
from .pd import PDCode

DEFAULT_MAX_CROSSINGS = 24

A = LaurentPoly({1: 1})
A_INV = LaurentPoly({-1: 1})
LOOP = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        raise PetalKitError("cannot normalize the zero polynomial")
    q = p.shift(-p.min_exp)
    return -q if q.coeff(0) < 0 else q


# ---------------------------------------------------------------------------
# Alexander polynomial via the Wirtinger presentation


def alexander_matrix(pd: PDCode) -> list[list[LaurentPoly]]:
    """
    Abelianized Fox Jacobian of the Wirtinger presentation: one row per
    crossing, one column per over-arc. Looking along the over-strand, the
    under-arc on its left gets t and the one on its right gets -1.
    """
    parent: dict[int, int] = {e: e for e in pd.edges}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for a, b, c, d, s in pd.crossings:
        parent[find(b)] = find(d)
    arc_ids: dict[int, int] = {}
    for e in pd.edges:
        arc_ids.setdefault(find(e), len(arc_ids))

    def arc(e: int) -> int:
        return arc_ids[find(e)]

    n = len(arc_ids)
    rows = []
    for a, b, c, d, s in pd.crossings:
        row = [ZERO] * n
        left, right = (c, a) if s > 0 else (a, c)
        row[arc(b)] = row[arc(b)] + (1 - T)
        row[arc(left)] = row[arc(left)] + T
        row[arc(right)] = row[arc(right)] - 1
        rows.append(row)
    return rows


def alexander_from_pd(pd: PDCode, drop_row: int = -1, drop_col: int = -1) -> LaurentPoly:
    if not pd.crossings:
        return ONE
    if not pd.is_knot():
        raise NotAKnotError("PD code has more than one component")
    m = alexander_matrix(pd)
    n = len(m)
    if len(m[0]) != n:
        raise NotAKnotError("diagram is not connected")
    drop_row %= n
    drop_col %= n
    minor = [
        [x for j, x in enumerate(row) if j != drop_col]
        for i, row in enumerate(m) if i != drop_row
    ]
    d = det_sparse(minor)
    if d.is_zero():
        raise NotAKnotError("vanishing Alexander minor; diagram is not a knot")
    return normalize_alexander(d)


# ---------------------------------------------------------------------------
# Kauffman bracket by sweeping crossings and tracking boundary matchings


def _crossing_order(pd: PDCode) -> list[int]:
    """Greedy order keeping the set of half-open edges small."""
    remaining = set(range(len(pd.crossings)))
    open_edges: set[int] = set()
    order = []
    while remaining:
        best = min(
            remaining,
            key=lambda k: (-len(open_edges & set(pd.crossings[k][:4])), k),
        )
        remaining.discard(best)
        order.append(best)
        for e in pd.crossings[best][:4]:
            open_edges ^= {e}
    return order


def _join(partner: dict[int, int], x: int, y: int) -> int:
    """Add an arc x--y to a partial matching; returns the number of loops closed."""
    if x == y:
        return 1
    ex = partner.pop(x, None)
    if ex is None:
        ex = x
    else:
        del partner[ex]
        if ex == y:
            return 1
    ey = partner.pop(y, None)
    if ey is None:
        ey = y
    else:
        del partner[ey]
    partner[ex] = ey
    partner[ey] = ex
    return 0


def kauffman_bracket(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Bracket with <unknot> = 1; A-smoothing joins (a,b) and (c,d)."""
    n = len(pd.crossings)
    if n > max_crossings:
        raise CrossingCapExceeded(n, max_crossings)
    if n == 0:
        return ONE
    states: dict[tuple, LaurentPoly] = {(): ONE}
    for k in _crossing_order(pd):
        a, b, c, d, _ = pd.crossings[k]
        nxt: dict[tuple, LaurentPoly] = {}
        for key, weight in states.items():
            for pairs, w in (((a, b), (c, d)), A), (((a, d), (b, c)), A_INV):
                partner = dict(key_pairs(key))
                loops = _join(partner, *pairs[0]) + _join(partner, *pairs[1])
                val = weight * w
                if loops:
                    val = val * LOOP ** loops
                new_key = tuple(sorted((p, q) for p, q in partner.items() if p < q))
                nxt[new_key] = nxt.get(new_key, ZERO) + val
        states = {k2: v for k2, v in nxt.items() if v}
    total = states.get((), ZERO)
    if len(states) > 1 or (states and () not in states):
        raise PetalKitError("bracket sweep ended with open edges")
    return total.exact_div(LOOP)


def key_pairs(key: tuple) -> list[tuple[int, int]]:
    out = []
    for p, q in key:
        out.append((p, q))
        out.append((q, p))
    return out


def jones(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """(-A^3)^(-writhe) <D>, in the variable A."""
    w = pd.writhe()
    bracket = kauffman_bracket(pd, max_crossings)
    return bracket.shift(-3 * w) * (-1 if w % 2 else 1)


def jones_in_t(jones_a: LaurentPoly) -> LaurentPoly:
    """Convert a Jones polynomial in A to t = A^-4; knot values only use A^(4k)."""
    out = {}
    for e, c in jones_a.items():
        if e % 4:
            raise PetalKitError("Jones polynomial of a knot has exponents divisible by 4 in A")
        out[-e // 4] = c
    return LaurentPoly(out)


def t_to_a(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_power(-4)


def mirror(p: LaurentPoly) -> LaurentPoly:
    """Negate exponents: the value on the mirror knot for Jones or bracket."""
    return p.substitute_power(-1)


# ---------------------------------------------------------------------------
# Closed forms for torus knots


def _check_torus(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)) or not 2 <= p < q:
        raise PetalKitError(f"torus knot type needs 2 <= p < q, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise PetalKitError(f"({p}, {q}) are not coprime")


def torus_alexander(p: int, q: int) -> LaurentPoly:
    _check_torus(p, q)
    num = (T ** (p * q) - 1) * (T - 1)
    den = (T ** p - 1) * (T ** q - 1)
    return normalize_alexander(num.exact_div(den))


def torus_jones(p: int, q: int) -> LaurentPoly:
    """
    Jones polynomial in t of T(p,q), the closure of the positive braid
    (s1 ... s_{p-1})^q, for which the trefoil gives t + t^3 - t^4.
    """
    _check_torus(p, q)
    num = 1 - T ** (p + 1) - T ** (q + 1) + T ** (p + q)
    return num.exact_div(1 - T ** 2).shift((p - 1) * (q - 1) // 2)


def torus_jones_a(p: int, q: int) -> LaurentPoly:
    return t_to_a(torus_jones(p, q))
