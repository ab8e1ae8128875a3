"""
Exact Laurent polynomials in one variable with integer coefficients, plus
determinants of matrices over the Laurent ring.

A LaurentPoly is an immutable map from integer exponent to nonzero integer
coefficient. Nothing here touches floating point; division is exact or it
raises InexactDivisionError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import InexactDivisionError

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be int")
                if c:
                    clean[e] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> LaurentPoly:
        """Build c0 t^shift + c1 t^(shift+1) + ..."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for +-t^k, the units of Z[t, 1/t]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def coefficient_list(self) -> list[int]:
        """Dense coefficients from min_exp to max_exp (empty for zero)."""
        if not self._terms:
            return []
        lo, hi = self.min_exp, self.max_exp
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def is_palindromic(self) -> bool:
        c = self.coefficient_list()
        return c == c[::-1]

    def span(self) -> int:
        return self.max_exp - self.min_exp if self._terms else 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise InexactDivisionError("only units have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Substitute t -> t^k (k may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def exact_div(self, other: Scalar) -> LaurentPoly:
        """Quotient in Z[t, 1/t]; raises InexactDivisionError unless other divides self."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        # Strip powers of t, then long-divide over Z starting from the top degree.
        num = self.coefficient_list()
        den = other.coefficient_list()
        base = self.min_exp - other.min_exp
        if len(den) > len(num):
            raise InexactDivisionError(f"{other} does not divide {self}")
        num = num[:]
        lead = den[-1]
        quot = [0] * (len(num) - len(den) + 1)
        for i in range(len(quot) - 1, -1, -1):
            top = num[i + len(den) - 1]
            if top % lead:
                raise InexactDivisionError(f"{other} does not divide {self}")
            q = top // lead
            quot[i] = q
            if q:
                for j, d in enumerate(den):
                    num[i + j] -= q * d
        if any(num):
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentPoly.from_coeffs(quot, base)

    def eval_at_integer(self, x: int) -> Union[int, Fraction]:
        """Exact value at an integer point; a Fraction when negative powers of x != +-1 appear."""
        if x == 0 and self._terms and self.min_exp < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        total: Union[int, Fraction] = 0
        for e, c in self._terms.items():
            total += c * (x ** e if e >= 0 else Fraction(1, x ** (-e)))
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- formatting / serialization -----------------------------------

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format("t")

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def to_json(self, var: str = "t") -> dict:
        return {"var": var, "terms": [[e, c] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data["terms"]})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})
T_INV = LaurentPoly({-1: 1})


def poly_sum(items: Iterable[Scalar]) -> LaurentPoly:
    out: dict[int, int] = {}
    for p in items:
        for e, c in LaurentPoly.coerce(p).items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


# ---------------------------------------------------------------------------
# Matrices over Z[t, 1/t]. A matrix is a list of rows of LaurentPoly.

Matrix = list[list[LaurentPoly]]


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            row.append(poly_sum(a[i][l] * b[l][j] for l in range(m) if a[i][l] and b[l][j]))
        out.append(row)
    return out


def det_bareiss(matrix: Sequence[Sequence[Scalar]]) -> LaurentPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [[LaurentPoly.coerce(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = ZERO
        prev = pivot
    return m[n - 1][n - 1] * sign


def det_cofactor(matrix: Sequence[Sequence[Scalar]]) -> LaurentPoly:
    """Laplace expansion along the first row. Exponential; for cross-checks only."""
    m = [[LaurentPoly.coerce(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    total = ZERO
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_sparse(matrix: Sequence[Sequence[Scalar]]) -> LaurentPoly:
    """
    Determinant of a sparse matrix by Gaussian elimination on unit pivots
    (+-t^k), which keeps every entry in the Laurent ring without division.
    When no unit entry remains, the dense remainder goes to det_bareiss.
    """
    n = len(matrix)
    rows: dict[int, dict[int, LaurentPoly]] = {}
    for i, row in enumerate(matrix):
        rows[i] = {j: LaurentPoly.coerce(x) for j, x in enumerate(row) if x}
    cols: dict[int, set[int]] = {j: set() for j in range(n)}
    for i, row in rows.items():
        for j in row:
            cols[j].add(i)

    # Track the permutation sign by recording which original column each
    # eliminated row used; the final sign comes from that pairing.
    factor = ONE
    pairing: dict[int, int] = {}
    while rows:
        best = None
        for i, row in rows.items():
            if not row:
                return ZERO
            for j, v in row.items():
                if v.is_unit():
                    cost = (len(row) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        prow = rows.pop(pi)
        pivot = prow.pop(pj)
        cols[pj].discard(pi)
        for j in prow:
            cols[j].discard(pi)
        inv = pivot ** -1
        factor = factor * pivot
        pairing[pi] = pj
        for i in list(cols[pj]):
            row = rows[i]
            mult = row.pop(pj) * inv
            for j, v in prow.items():
                new = row.get(j, ZERO) - mult * v
                if new:
                    if j not in row:
                        cols[j].add(i)
                    row[j] = new
                elif j in row:
                    del row[j]
                    cols[j].discard(i)
        del cols[pj]

    if rows:
        rem_rows = sorted(rows)
        rem_cols = sorted(cols)
        dense = [[rows[i].get(j, ZERO) for j in rem_cols] for i in rem_rows]
        factor = factor * det_bareiss(dense)
        for i, j in zip(rem_rows, rem_cols):
            pairing[i] = j
    return factor * _pairing_sign(pairing)


def _pairing_sign(pairing: dict[int, int]) -> int:
    perm = [pairing[i] for i in sorted(pairing)]
    # Rank-compress column labels, then count cycle parity.
    order = {c: k for k, c in enumerate(sorted(perm))}
    perm = [order[c] for c in perm]
    seen = [False] * len(perm)
    sign = 1
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        k = s
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
