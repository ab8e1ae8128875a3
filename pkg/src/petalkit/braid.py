"""
Braid words in B_r and exact equality through the Garside left normal form.

Conventions
-----------
A word is read left to right, which is bottom to top in a braid picture; the
closure used throughout is the trace closure (top endpoint i joined to bottom
endpoint i). The letter (i, +1) is sigma_i, a positive crossing in which the
strand at position i passes over the strand at position i+1; (i, -1) is its
inverse.

A permutation braid is stored as a tuple ``p`` of 0-based images:
``p[k]`` is the final position of the strand that starts at position ``k``.
Its starting set is the descent set of ``p`` and its finishing set is the
descent set of ``p`` inverse (generators numbered from 1).

A braid is in left normal form Delta^k A_1 ... A_m when no A_j is the
identity or Delta and every adjacent pair is left-weighted:
S(A_{j+1}) is a subset of F(A_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InexactDivisionError, NotAKnotError, PetalKitError
from .laurent import ONE, T, ZERO, LaurentPoly, Matrix, det_bareiss, identity_matrix

Letter = tuple[int, int]
Perm = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise PetalKitError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise PetalKitError(f"generator index {i} out of range for B_{self.strands}")
            if s not in (1, -1):
                raise PetalKitError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, strands: int, word: Iterable[int]) -> BraidWord:
        """Signed-integer shorthand: 2 is sigma_2, -2 is its inverse."""
        return cls(strands, tuple((abs(x), 1 if x > 0 else -1) for x in word))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, n: int) -> BraidWord:
        return power(self, n)

    def __str__(self) -> str:
        if not self.letters:
            return f"e in B_{self.strands}"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [[i, s] for i, s in self.letters]}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["strands"]), tuple((int(i), int(s)) for i, s in data["letters"]))


# ---------------------------------------------------------------------------
# Permutation braids


def _identity(r: int) -> Perm:
    return tuple(range(r))


def _reversal(r: int) -> Perm:
    return tuple(range(r - 1, -1, -1))


def _invert(p: Perm) -> Perm:
    q = [0] * len(p)
    for k, v in enumerate(p):
        q[v] = k
    return tuple(q)


def _left_swap(p: Perm, i: int) -> Perm:
    """Append sigma_i after p: swap the final positions i-1 and i."""
    a, b = i - 1, i
    return tuple(b if v == a else a if v == b else v for v in p)


def _right_swap(p: Perm, i: int) -> Perm:
    """Prepend sigma_i before p: swap entries i-1 and i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _descents(p: Sequence[int]) -> frozenset[int]:
    return frozenset(k + 1 for k in range(len(p) - 1) if p[k] > p[k + 1])


@dataclass(frozen=True)
class PermutationBraid:
    perm: Perm

    def __post_init__(self):
        p = tuple(int(v) for v in self.perm)
        if sorted(p) != list(range(len(p))):
            raise PetalKitError(f"not a permutation of 0..{len(p) - 1}: {p}")
        object.__setattr__(self, "perm", p)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> PermutationBraid:
        """From the 1-based image list used in JSON."""
        return cls(tuple(v - 1 for v in images))

    def images(self) -> list[int]:
        return [v + 1 for v in self.perm]

    @property
    def strands(self) -> int:
        return len(self.perm)

    def starting_set(self) -> frozenset[int]:
        return _descents(self.perm)

    def finishing_set(self) -> frozenset[int]:
        return _descents(_invert(self.perm))

    def is_identity(self) -> bool:
        return self.perm == _identity(len(self.perm))

    def is_delta(self) -> bool:
        return self.perm == _reversal(len(self.perm))

    def word(self) -> BraidWord:
        """A positive word: peel off the smallest starting generator each step."""
        p = self.perm
        out = []
        while True:
            starts = _descents(p)
            if not starts:
                break
            i = min(starts)
            out.append((i, 1))
            p = _right_swap(p, i)
        return BraidWord(self.strands, tuple(out))


def left_weighted(a: PermutationBraid, b: PermutationBraid) -> bool:
    return b.starting_set() <= a.finishing_set()


@dataclass(frozen=True)
class CanonicalBraid:
    strands: int
    inf: int
    factors: tuple[PermutationBraid, ...] = ()

    def to_word(self) -> BraidWord:
        r = self.strands
        out = power(half_twist_word(r), self.inf) if r >= 2 else BraidWord(r)
        for f in self.factors:
            out = concat(out, f.word())
        return out

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "inf": self.inf,
            "factors": [f.images() for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> CanonicalBraid:
        return cls(
            int(data["strands"]),
            int(data["inf"]),
            tuple(PermutationBraid.from_images(f) for f in data["factors"]),
        )


# ---------------------------------------------------------------------------
# Word operations


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise PetalKitError(f"strand counts differ: {a.strands} vs {b.strands}")


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple((i, -s) for i, s in reversed(a.letters)))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """g^-1 w g."""
    return concat(inverse(g), concat(w, g))


def power(w: BraidWord, n: int) -> BraidWord:
    if n < 0:
        return power(inverse(w), -n)
    return BraidWord(w.strands, w.letters * n)


def word(strands: int, *gens: int) -> BraidWord:
    return BraidWord.from_ints(strands, gens)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, s in w.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(w.strands, tuple(stack))


def tau_word(r: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{r-1} for odd r >= 3."""
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise PetalKitError(f"tau_word needs an odd strand count >= 3, got {r}")
    return BraidWord(r, tuple((i, 1) for i in range(1, r)))


def _tau_block(r: int) -> tuple[Letter, ...]:
    return tuple((i, 1) for i in range(1, r))


def half_twist_word(r: int) -> BraidWord:
    """(s1)(s2 s1)...(s_{r-1} ... s1)."""
    if not isinstance(r, int) or r < 2:
        raise PetalKitError(f"half twist needs at least 2 strands, got {r}")
    letters = [(i, 1) for k in range(1, r) for i in range(k, 0, -1)]
    return BraidWord(r, tuple(letters))


def full_twist_word(r: int) -> BraidWord:
    return power(half_twist_word(r), 2)


def tau_shift(w: BraidWord, position: int) -> BraidWord:
    """
    Rewrite sigma_i^e tau -> tau sigma_{i-1}^e at the designated letter index.

    ``position`` indexes the letter sigma_i^e; the r-1 letters after it must be
    a tau block sigma_1 ... sigma_{r-1}.
    """
    r = w.strands
    if not 0 <= position < len(w.letters):
        raise PetalKitError(f"position {position} outside word of length {len(w.letters)}")
    i, e = w.letters[position]
    if i < 2:
        raise PetalKitError("tau shift does not apply to sigma_1")
    block = w.letters[position + 1: position + r]
    if block != _tau_block(r):
        raise PetalKitError(f"no tau block follows position {position}")
    new = w.letters[:position] + _tau_block(r) + ((i - 1, e),) + w.letters[position + r:]
    return BraidWord(r, new)


def underlying_permutation(w: BraidWord) -> Perm:
    """Final positions of each strand as 0-based images (signs ignored)."""
    p = _identity(w.strands)
    for i, _ in w.letters:
        p = _left_swap(p, i)
    return p


def permutation_cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    cycles = []
    for s in range(len(p)):
        if s in seen:
            continue
        cyc = []
        k = s
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = p[k]
        cycles.append(tuple(cyc))
    return cycles


def is_knot_closure(w: BraidWord) -> bool:
    return len(permutation_cycles(underlying_permutation(w))) == 1


# ---------------------------------------------------------------------------
# Garside left normal form


def _make_left_weighted(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Slide generators from the front of b onto the back of a until S(b) is inside F(a)."""
    while True:
        movable = _descents(b) - _descents(_invert(a))
        if not movable:
            return a, b
        i = min(movable)
        a = _left_swap(a, i)
        b = _right_swap(b, i)


def _flip(p: Perm) -> Perm:
    """Conjugation by Delta: sigma_i <-> sigma_{r-i}."""
    r = len(p)
    return tuple(r - 1 - p[r - 1 - k] for k in range(r))


class _NormalForm:
    """Mutable accumulator used while reading a word letter by letter."""

    def __init__(self, r: int):
        self.r = r
        self.inf = 0
        self.factors: list[Perm] = []
        self.delta = _reversal(r)
        self.ident = _identity(r)

    def append(self, x: Perm) -> None:
        self.factors.append(x)
        self._sweep()

    def _sweep(self) -> None:
        f = self.factors
        changed = True
        while changed:
            changed = False
            for j in range(len(f) - 2, -1, -1):
                a, b = _make_left_weighted(f[j], f[j + 1])
                if (a, b) != (f[j], f[j + 1]):
                    f[j], f[j + 1] = a, b
                    changed = True
        while f and f[0] == self.delta:
            f.pop(0)
            self.inf += 1
        while f and f[-1] == self.ident:
            f.pop()

    def mul_delta_inverse(self) -> None:
        # X Delta^-1 = Delta^-1 flip(X)
        self.factors = [_flip(p) for p in self.factors]
        self.inf -= 1


def to_canonical(w: BraidWord) -> CanonicalBraid:
    r = w.strands
    nf = _NormalForm(r)
    if r >= 2:
        delta = _reversal(r)
        for i, s in w.letters:
            if s > 0:
                nf.append(_left_swap(_identity(r), i))
            else:
                # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); Delta sigma_i^-1 is Delta with its last sigma_i removed
                nf.mul_delta_inverse()
                nf.append(_left_swap(delta, i))
    return CanonicalBraid(r, nf.inf, tuple(PermutationBraid(p) for p in nf.factors))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    return to_canonical(a) == to_canonical(b)


def is_left_weighted(c: CanonicalBraid) -> bool:
    return all(left_weighted(x, y) for x, y in zip(c.factors, c.factors[1:]))


# ---------------------------------------------------------------------------
# The conjugation sequence


def _check_nk(n: int, k: int, lo: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PetalKitError(f"n must be a positive integer, got {n}")
    if not lo <= k <= n:
        raise PetalKitError(f"k must lie in {lo}..{n}, got {k}")


def conjugator_c(n: int, k: int) -> BraidWord:
    """sigma_{k+1} sigma_{k+3} ... sigma_{2n-k+1} in B_{2n+1}."""
    _check_nk(n, k, 1)
    return BraidWord(2 * n + 1, tuple((i, 1) for i in range(k + 1, 2 * n - k + 2, 2)))


def base_braid(r: int) -> BraidWord:
    """Delta^2 tau^2 in B_r."""
    return concat(full_twist_word(r), power(tau_word(r), 2))


def beta(n: int, k: int) -> BraidWord:
    _check_nk(n, k, 0)
    b = base_braid(2 * n + 1)
    for j in range(1, k + 1):
        b = conjugate(b, conjugator_c(n, j))
    return b


def _run(r: int, lo: int, hi: int, sign: int) -> tuple[Letter, ...]:
    """sigma_lo^sign ... sigma_hi^sign, stepping down when lo > hi."""
    step = 1 if hi >= lo else -1
    return tuple((i, sign) for i in range(lo, hi + step, step))


def beta_closed_form(n: int, k: int) -> BraidWord:
    """
    Delta^2 tau (s_k^-1 ... s_1^-1) tau (s_2n s_2n-1 ... s_{2n-k+1}) for 1 <= k <= n,
    the displayed intermediate form of the conjugation sequence.
    """
    _check_nk(n, k, 1)
    r = 2 * n + 1
    tau = _tau_block(r)
    letters = (
        full_twist_word(r).letters + tau + _run(r, k, 1, -1) + tau + _run(r, 2 * n, 2 * n - k + 1, 1)
    )
    return BraidWord(r, letters)


def lemma_target(n: int) -> BraidWord:
    """Delta^2 tau (s_{n+1} ... s_2n)(s_2n ... s_{n+1})."""
    if not isinstance(n, int) or n < 1:
        raise PetalKitError(f"n must be a positive integer, got {n}")
    r = 2 * n + 1
    letters = full_twist_word(r).letters + _tau_block(r) + _run(r, n + 1, 2 * n, 1) + _run(r, 2 * n, n + 1, 1)
    return BraidWord(r, letters)


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    detail: str = ""


def lemma_checks(n: int) -> list[LemmaCheck]:
    """Every equality the conjugation argument asserts, mechanically decided."""
    checks = []
    for k in range(1, n):
        ok = braids_equal(beta(n, k), beta_closed_form(n, k))
        checks.append(LemmaCheck(f"beta_{k} closed form", ok, f"n={n}, k={k}"))
    ok = braids_equal(beta(n, n), lemma_target(n))
    checks.append(LemmaCheck(f"beta_{n} equals target", ok, f"n={n}"))
    return checks


def verify_lemma(n: int) -> bool:
    return all(c.passed for c in lemma_checks(n))


# ---------------------------------------------------------------------------
# Reduced Burau representation and the Alexander polynomial of the closure


def _burau_letter(r: int, i: int, s: int) -> Matrix:
    m = identity_matrix(r - 1)
    j = i - 1
    if s > 0:
        m[j][j] = -T
        if j - 1 >= 0:
            m[j][j - 1] = T
        if j + 1 <= r - 2:
            m[j][j + 1] = ONE
    else:
        t_inv = LaurentPoly({-1: 1})
        m[j][j] = -t_inv
        if j - 1 >= 0:
            m[j][j - 1] = ONE
        if j + 1 <= r - 2:
            m[j][j + 1] = t_inv
    return m


def _apply_letter_right(m: Matrix, r: int, i: int, s: int) -> Matrix:
    # Only column block around i-1 changes when multiplying on the right.
    g = _burau_letter(r, i, s)
    j = i - 1
    touched = [c for c in (j - 1, j, j + 1) if 0 <= c <= r - 2]
    out = [row[:] for row in m]
    for row_in, row_out in zip(m, out):
        for c in touched:
            acc = ZERO
            for l in touched:
                if row_in[l] and g[l][c]:
                    acc = acc + row_in[l] * g[l][c]
            row_out[c] = acc
    return out


def burau_reduced(w: BraidWord) -> Matrix:
    r = w.strands
    if r < 2:
        return []
    m = identity_matrix(r - 1)
    for i, s in w.letters:
        m = _apply_letter_right(m, r, i, s)
    return m


def alexander_from_braid(w: BraidWord) -> LaurentPoly:
    """det(I - Burau(w)) divided by 1 + t + ... + t^(r-1), normalized."""
    from .invariants import normalize_alexander

    if not is_knot_closure(w):
        raise NotAKnotError("braid closure has more than one component")
    r = w.strands
    if r == 1:
        return ONE
    b = burau_reduced(w)
    n = r - 1
    diff = [[(ONE if i == j else ZERO) - b[i][j] for j in range(n)] for i in range(n)]
    d = det_bareiss(diff)
    try:
        q = d.exact_div(LaurentPoly.from_coeffs([1] * r))
    except InexactDivisionError as exc:
        raise InexactDivisionError(f"closure polynomial not divisible by [r]_t: {exc}") from exc
    return normalize_alexander(q)


# ---------------------------------------------------------------------------
# Planar diagram of the closure


def braid_to_pd(w: BraidWord):
    """PD code of the trace closure, traversed from the bottom of strand 1."""
    from .pd import PDCode, pd_from_passages

    if not is_knot_closure(w):
        raise NotAKnotError("braid closure has more than one component")
    passages: list[tuple[int, bool]] = []
    pos = 0
    start = 0
    while True:
        for k, (i, s) in enumerate(w.letters):
            if pos == i - 1:
                # Strand moves right; it is the over strand exactly for positive letters.
                passages.append((k, s > 0))
                pos = i
            elif pos == i:
                passages.append((k, s < 0))
                pos = i - 1
        if pos == start:
            break
    signs = [s for _, s in w.letters]
    return pd_from_passages(passages, signs) if passages else PDCode(())
