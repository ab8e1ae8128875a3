"""
petal-kit command line.

Every command prints JSON. By default only the command's output object is
printed; ``--json`` prints the full report (command, inputs, outputs,
checks). Exit status: 0 when every check passes, 1 when a check fails,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import braid as br
from .errors import PetalKitError
from .grid import GridDiagram, grid_to_pd, grid_valid, alexander_from_grid
from .invariants import DEFAULT_MAX_CROSSINGS, alexander_from_pd, jones
from .pd import PDCode
from .petal import (
    PetalPermutation,
    arc_index_torus,
    petal_lower_bound,
    petal_to_grid,
    theorem_check,
    torus_petal_permutation,
)
from .render import render_braid, render_grid, render_petal

SOURCES = ("braid", "grid", "petal", "pd")


class InputError(Exception):
    """Malformed input; reported with exit status 2."""


@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": [{"name": n, "pass": ok, "detail": d} for n, ok, d in self.checks],
        }


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# input handling


def _read_json(args) -> dict:
    try:
        text = Path(args.infile).read_text() if args.infile else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("input JSON must be an object")
    return data


def _load(source: str, data: dict):
    try:
        if source == "braid":
            return br.BraidWord.from_json(data)
        if source == "grid":
            gd = GridDiagram.from_json(data)
            if not grid_valid(gd):
                raise InputError("grid is not a valid one-component grid diagram")
            return gd
        if source == "petal":
            return PetalPermutation.from_json(data)
        if source == "pd":
            return PDCode.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad {source} JSON: {exc}") from exc
    raise InputError(f"unknown source {source!r}")


def _to_pd(source: str, obj) -> PDCode:
    if source == "braid":
        return br.braid_to_pd(obj)
    if source == "grid":
        return grid_to_pd(obj)
    if source == "petal":
        return grid_to_pd(petal_to_grid(obj))
    return obj


# ---------------------------------------------------------------------------
# commands


def cmd_petal_gen(args) -> RunReport:
    r = args.r
    if r < 3 or r % 2 == 0:
        raise InputError(f"--r must be an odd integer >= 3, got {r}")
    pp = torus_petal_permutation((r - 1) // 2)
    rep = RunReport("petal-gen", {"r": r}, pp.to_json())
    rep.check("length is 2r+3", len(pp) == 2 * r + 3, f"{len(pp)} petals")
    return rep


def cmd_verify_lemma(args) -> RunReport:
    n = args.n
    if n < 1:
        raise InputError(f"--n must be a positive integer, got {n}")
    rep = RunReport("verify-lemma", {"n": n})
    for c in br.lemma_checks(n):
        rep.check(c.name, c.passed, c.detail)
    rep.outputs = {"n": n, "strands": 2 * n + 1, "verified": rep.ok}
    return rep


def cmd_theorem(args) -> RunReport:
    r = args.r
    if r < 3 or r % 2 == 0:
        raise InputError(f"--r must be an odd integer >= 3, got {r}")
    rep = RunReport("theorem", {"r": r})
    try:
        t = theorem_check(r)
    except PetalKitError as exc:
        rep.check("petal grid presents T(r, r+2)", False, str(exc))
        rep.outputs = {"lower": None, "upper": None, "verified": False}
        return rep
    rep.check("petal grid presents T(r, r+2)", True, "Alexander polynomial matches")
    rep.check("lower bound is 2r+3", t.lower == 2 * r + 3, str(t.lower))
    rep.check("upper bound is 2r+3", t.upper == 2 * r + 3, str(t.upper))
    rep.outputs = t.to_json()
    return rep


def cmd_lower_bound(args) -> RunReport:
    if args.alpha is not None:
        alpha = args.alpha
        inputs = {"alpha": alpha}
    elif args.torus:
        r, s = args.torus
        try:
            alpha = arc_index_torus(r, s)
        except PetalKitError as exc:
            raise InputError(str(exc)) from exc
        inputs = {"torus": [r, s]}
    else:
        raise InputError("give --alpha or --torus R S")
    try:
        lower = petal_lower_bound(alpha)
    except PetalKitError as exc:
        raise InputError(str(exc)) from exc
    return RunReport("lower-bound", inputs, {"alpha": alpha, "lower": lower})


def cmd_alexander(args) -> RunReport:
    data = _read_json(args)
    obj = _load(args.source, data)
    if args.source == "braid":
        poly = br.alexander_from_braid(obj)
    elif args.source == "grid":
        poly = alexander_from_grid(obj)
    else:
        poly = alexander_from_pd(_to_pd(args.source, obj))
    return RunReport("alexander", {"source": args.source, "data": data}, poly.to_json("t"))


def cmd_jones(args) -> RunReport:
    data = _read_json(args)
    obj = _load(args.source, data)
    poly = jones(_to_pd(args.source, obj), args.max_crossings)
    return RunReport("jones", {"source": args.source, "data": data}, poly.to_json("A"))


def cmd_render(args) -> RunReport:
    data = _read_json(args)
    if args.source == "pd":
        raise InputError("render supports braid, grid and petal sources")
    obj = _load(args.source, data)
    if args.source == "braid":
        svg = render_braid(obj)
    elif args.source == "grid":
        svg = render_grid(obj)
    else:
        svg = render_grid(petal_to_grid(obj)) if args.as_grid else render_petal(obj)
    rep = RunReport("render", {"source": args.source, "data": data})
    if args.out:
        Path(args.out).write_text(svg)
        rep.outputs = {"svg": args.out, "bytes": len(svg.encode())}
    else:
        rep.outputs = {"svg": svg}
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="infile", help="read input JSON from this file instead of stdin")
    common.add_argument("--out", help="write the result here (the SVG for render)")
    common.add_argument("--json", action="store_true", help="print the full run report")
    common.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)

    parser = argparse.ArgumentParser(prog="petal-kit", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("petal-gen", parents=[common], help="petal permutation of T(r, r+2)")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_petal_gen)

    p = sub.add_parser("verify-lemma", parents=[common], help="decide the conjugation identities in B_{2n+1}")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("theorem", parents=[common], help="lower and upper petal bounds for T(r, r+2)")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("lower-bound", parents=[common], help="petal number bound from the arc index")
    p.add_argument("--alpha", type=int)
    p.add_argument("--torus", type=int, nargs=2, metavar=("R", "S"))
    p.set_defaults(func=cmd_lower_bound)

    for name, func, helptext in (
        ("alexander", cmd_alexander, "normalized Alexander polynomial"),
        ("jones", cmd_jones, "Jones polynomial in the bracket variable A"),
        ("render", cmd_render, "SVG drawing"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("source", choices=SOURCES)
        if name == "render":
            p.add_argument("--as-grid", action="store_true", help="draw a petal permutation as its grid")
        p.set_defaults(func=func)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        rep = args.func(args)
    except (InputError, PetalKitError) as exc:
        code = 2 if isinstance(exc, InputError) else 1
        err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(_dump(err) + "\n")
        return code
    payload = rep.to_json() if args.json else rep.outputs
    # render with --out already wrote the SVG; the report still goes to stdout.
    out = None if args.command == "render" else args.out
    _emit(_dump(payload), out)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
