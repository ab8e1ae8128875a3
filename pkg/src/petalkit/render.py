"""SVG drawings of grids, petal projections and braids. Output is deterministic text."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord
from .grid import GridDiagram, grid_crossings
from .petal import PetalPermutation


@dataclass(frozen=True)
class Style:
    cell: int = 30
    margin: int = 20
    gap: int = 5            # half-width of the break in an under-strand
    stroke: float = 2.0
    font_size: int = 13
    petal_radius: int = 160
    petal_samples: int = 1440


STYLE = Style()


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _line(x1, y1, x2, y2, style: Style) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="black" stroke-width="{_fmt(style.stroke)}" stroke-linecap="round"/>'
    )


def render_grid(gd: GridDiagram, style: Style = STYLE) -> str:
    """Sticks only; horizontal sticks are broken where a vertical stick passes over."""
    g = gd.size
    c, m = style.cell, style.margin
    pos = lambda k: m + c * k + c / 2
    xcol, ocol = gd._row_cols()
    under: dict[int, list[int]] = {}
    for i, j in grid_crossings(gd):
        under.setdefault(i, []).append(j)
    body = []
    for i in range(g):
        a, b = sorted((xcol[i], ocol[i]))
        y = pos(i)
        x = pos(a)
        for j in sorted(under.get(i, [])):
            body.append(_line(x, y, pos(j) - style.gap, y, style))
            x = pos(j) + style.gap
        body.append(_line(x, y, pos(b), y, style))
    for j in range(g):
        a, b = sorted((gd.x_rows[j] - 1, gd.o_rows[j] - 1))
        body.append(_line(pos(j), pos(a), pos(j), pos(b), style))
    side = 2 * m + c * g
    return _svg(side, side, body)


def render_petal(pp: PetalPermutation, style: Style = STYLE) -> str:
    """Rose curve with one loop per petal; strand labels read clockwise from the top strand."""
    p = len(pp)
    R = style.petal_radius
    cx = cy = R + style.margin + style.font_size
    # Rotate the rose so one strand through the centre is vertical.
    turn = math.pi / 2 - math.pi / (2 * p)
    pts = []
    for s in range(style.petal_samples + 1):
        th = math.pi * s / style.petal_samples
        rho = R * math.cos(p * th)
        pts.append(f"{_fmt(cx + rho * math.cos(th + turn))},{_fmt(cy - rho * math.sin(th + turn))}")
    body = [
        f'<polyline points="{" ".join(pts)}" fill="none" stroke="black" '
        f'stroke-width="{_fmt(style.stroke)}"/>'
    ]
    # Strand k lies along angle pi/2 - k pi/p: clockwise from the top strand.
    lab = 0.5 * R
    for k, level in enumerate(pp.levels):
        ang = math.pi / 2 - k * math.pi / p
        x, y = cx + lab * math.cos(ang), cy - lab * math.sin(ang)
        body.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{style.font_size}" '
            f'text-anchor="middle" dominant-baseline="middle" fill="firebrick">{level}</text>'
        )
    side = 2 * cx
    return _svg(side, side, body)


def render_braid(w: BraidWord, style: Style = STYLE) -> str:
    """Strands run bottom to top; the first letter is the lowest crossing."""
    r = w.strands
    c, m = style.cell, style.margin
    n = len(w.letters)
    height = 2 * m + c * (n + 1)
    x = lambda k: m + c * k + c / 2
    y = lambda level: height - m - c * level - c / 2
    body = []
    for level, (i, s) in enumerate(w.letters):
        y0, y1 = y(level), y(level + 1)
        for k in range(r):
            if k not in (i - 1, i):
                body.append(_line(x(k), y0, x(k), y1, style))
        left_up = (x(i - 1), y0, x(i), y1)
        right_up = (x(i), y0, x(i - 1), y1)
        over, under = (left_up, right_up) if s > 0 else (right_up, left_up)
        body.append(_line(*over, style))
        ux1, uy1, ux2, uy2 = under
        mx, my = (ux1 + ux2) / 2, (uy1 + uy2) / 2
        dx, dy = ux2 - ux1, uy2 - uy1
        f = style.gap * 1.5 / math.hypot(dx, dy)
        body.append(_line(ux1, uy1, mx - dx * f, my - dy * f, style))
        body.append(_line(mx + dx * f, my + dy * f, ux2, uy2, style))
    top = y(n)
    for k in range(r):
        body.append(_line(x(k), y(0) + c / 2, x(k), y(0), style))
        body.append(_line(x(k), top, x(k), top - c / 2, style))
    return _svg(2 * m + c * r, height, body)
