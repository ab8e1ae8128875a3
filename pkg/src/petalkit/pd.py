"""
Planar diagram codes.

Each crossing is (a, b, c, d, sign): the four incident edge labels counter
clockwise starting at the incoming under-edge ``a`` (so ``c`` is the outgoing
under-edge). A positive crossing has its over-strand running d -> b, a
negative one b -> d. Edge labels are 1..2c, consecutive along the knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotAKnotError, PetalKitError

Crossing = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        xs = []
        for x in self.crossings:
            if len(x) != 5:
                raise PetalKitError(f"crossing needs four labels and a sign: {x!r}")
            a, b, c, d, s = x
            s = _parse_sign(s)
            xs.append((int(a), int(b), int(c), int(d), s))
        object.__setattr__(self, "crossings", tuple(xs))
        counts: dict[int, int] = {}
        for x in xs:
            for e in x[:4]:
                counts[e] = counts.get(e, 0) + 1
        bad = [e for e, n in counts.items() if n != 2]
        if bad:
            raise PetalKitError(f"edge labels must appear exactly twice: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        return sorted({e for x in self.crossings for e in x[:4]})

    def writhe(self) -> int:
        return sum(x[4] for x in self.crossings)

    def successor(self) -> dict[int, int]:
        """Next edge along the orientation, following both strands through every crossing."""
        nxt: dict[int, int] = {}
        for a, b, c, d, s in self.crossings:
            nxt[a] = c
            if s > 0:
                nxt[d] = b
            else:
                nxt[b] = d
        return nxt

    def components(self) -> list[list[int]]:
        nxt = self.successor()
        if len(nxt) != len(self.edges):
            raise PetalKitError("orientation data inconsistent with edge labels")
        seen: set[int] = set()
        comps = []
        for e in self.edges:
            if e in seen:
                continue
            comp = []
            k = e
            while k not in seen:
                seen.add(k)
                comp.append(k)
                k = nxt[k]
            comps.append(comp)
        return comps

    def is_knot(self) -> bool:
        return len(self.crossings) == 0 or len(self.components()) == 1

    def to_json(self) -> dict:
        return {"crossings": [[a, b, c, d, "+" if s > 0 else "-"] for a, b, c, d, s in self.crossings]}

    @classmethod
    def from_json(cls, data: dict) -> PDCode:
        return cls(tuple(tuple(x) for x in data["crossings"]))


def _parse_sign(s) -> int:
    if s in ("+", 1, "+1"):
        return 1
    if s in ("-", -1, "-1"):
        return -1
    raise PetalKitError(f"crossing sign must be '+' or '-', got {s!r}")


def pd_from_passages(passages: Sequence[tuple[int, bool]], signs: Sequence[int]) -> PDCode:
    """
    Build a PD code from the passages met while walking once around a knot.

    ``passages[k] = (crossing_id, is_over)``; every crossing must be passed once
    over and once under. Edge k+1 runs from passage k to passage k+1.
    """
    m = len(passages)
    if m == 0:
        return PDCode(())
    under: dict[int, int] = {}
    over: dict[int, int] = {}
    for k, (cid, is_over) in enumerate(passages):
        slot = over if is_over else under
        if cid in slot:
            raise NotAKnotError(f"crossing {cid} passed twice on the same level")
        slot[cid] = k
    if set(under) != set(over):
        raise NotAKnotError("some crossing is not visited by both strands")

    def edge_in(k: int) -> int:
        return m if k == 0 else k

    def edge_out(k: int) -> int:
        return k + 1

    crossings = []
    for cid in sorted(under):
        u, o = under[cid], over[cid]
        a, c = edge_in(u), edge_out(u)
        if signs[cid] > 0:
            b, d = edge_out(o), edge_in(o)
        else:
            b, d = edge_in(o), edge_out(o)
        crossings.append((a, b, c, d, signs[cid]))
    return PDCode(tuple(crossings))
