"""Alcove geometry for A~2 and SVG pictures of lower intervals.

Points use integer weight coordinates ``(a, b)``. The fundamental alcove
has vertices ``(1, 0)``, ``(0, 1)``, ``(0, 0)``, which are opposite the walls of
``s1``, ``s2`` and ``s3``. The squared length is ``a^2 + ab + b^2``, so
every alcove is equilateral with area ``1/2`` in these coordinates.
Rendering shears to ``x = a + b/2``, ``y = b*sqrt(3)/2``, which is only
for presentation.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from kla2 import coxeter as cx
from kla2.coxeter import Elt
from kla2.report import VerifyReport

__all__ = [
    "Point", "Triangle", "FUNDAMENTAL", "elt_to_triangle", "edge_type", "interval_svg",
    "svg_shade_counts", "centered_triangle", "region_is_equilateral_triangle", "hexagon_decomposition",
    "GRAYS", "EDGE_COLORS",
]

Point = tuple[int, int]

# light to dark, outermost interval first
GRAYS = ("#d9d9d9", "#a6a6a6", "#737373", "#404040")
EDGE_COLORS = {1: "red", 2: "green", 3: "blue"}


def _cross(o: Point, p: Point, q: Point) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


@dataclass(frozen=True)
class Triangle:
    """An alcove; ``vertices[t-1]`` is the vertex opposite the wall of type ``t``."""

    vertices: tuple[Point, Point, Point]

    @property
    def up(self) -> bool:
        """Same orientation as the fundamental alcove."""
        return _cross(*self.vertices) == _cross(*FUNDAMENTAL.vertices)

    @property
    def area(self) -> Fraction:
        return Fraction(abs(_cross(*self.vertices)), 2)

    @property
    def barycenter(self) -> tuple[Fraction, Fraction]:
        return (Fraction(sum(p[0] for p in self.vertices), 3),
                Fraction(sum(p[1] for p in self.vertices), 3))

    def reflect(self, s: int) -> "Triangle":
        """The neighbour across the wall of type ``s``."""
        v = list(self.vertices)
        i = s - 1
        a, b = (v[j] for j in range(3) if j != i)
        v[i] = (a[0] + b[0] - v[i][0], a[1] + b[1] - v[i][1])
        return Triangle(tuple(v))

    def edges(self) -> list[tuple[int, frozenset]]:
        """``(type, {p, q})`` for each wall."""
        v = self.vertices
        return [(t, frozenset(v[j] for j in range(3) if j != t - 1)) for t in (1, 2, 3)]


FUNDAMENTAL = Triangle(((1, 0), (0, 1), (0, 0)))

_tri_memo: dict[Elt, Triangle] = {}


def elt_to_triangle(x: Elt) -> Triangle:
    """The alcove ``x(A_0)``: cross one wall per letter of the canonical word."""
    t = _tri_memo.get(x)
    if t is None:
        t = FUNDAMENTAL
        for s in cx.to_canonical_word(x):
            t = t.reflect(s)
        t = _tri_memo.setdefault(x, t)
    return t


def word_to_triangle(word: Iterable[int]) -> Triangle:
    t = FUNDAMENTAL
    for s in cx.parse_word(word):
        t = t.reflect(s)
    return t


def edge_type(p: Point, q: Point) -> int:
    """Type of the wall through lattice points ``p`` and ``q``, from the vertex types."""
    missing = {1, 2, 3} - {vertex_type(p), vertex_type(q)}
    (t,) = missing
    return t


def vertex_type(p: Point) -> int:
    # (1,0) -> 1, (0,1) -> 2, (0,0) -> 3; the type is constant on cosets of the root lattice
    r = (p[0] + 2 * p[1]) % 3
    return r if r else 3


# ---- SVG -----------------------------------------------------------------------

_SCALE = 24


def _xy(p: Point, scale: int = _SCALE) -> tuple[float, float]:
    return (p[0] + p[1] / 2) * scale, -(p[1] * math.sqrt(3) / 2) * scale


def _fmt(z: float) -> str:
    s = f"{z:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def interval_svg(x: Elt, shading: Sequence[tuple[Elt, str]] | None = None,
                 scale: int = _SCALE) -> str:
    """SVG of ``[e, x]``; each alcove is filled by the innermost interval containing it.

    ``shading`` lists ``(element, fill)`` pairs from outermost to innermost.
    The default shades ``[e, x]`` with the lightest gray. Walls are stroked
    red, green and blue for ``s1``, ``s2``, ``s3``.
    """
    if shading is None:
        shading = [(x, GRAYS[0])]
    levels = [(cx.lower_interval(e), fill) for e, fill in shading]
    alcoves = cx.sorted_elts(cx.lower_interval(x).union(*(iv for iv, _ in levels)))
    tris = [(y, elt_to_triangle(y)) for y in alcoves]
    pts = [_xy(p, scale) for _, t in tris for p in t.vertices]
    pad = scale / 2
    x0, x1 = min(p[0] for p in pts) - pad, max(p[0] for p in pts) + pad
    y0, y1 = min(p[1] for p in pts) - pad, max(p[1] for p in pts) + pad

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}" '
        f'width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}">',
        f"<title>lower interval of {cx.word_str(x) or 'e'}</title>",
        '<g class="alcoves" stroke="none">',
    ]
    for y, t in tris:
        fill = "none"
        for iv, f in levels:
            if y in iv:
                fill = f
        if fill == "none":
            continue
        poly = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (_xy(p, scale) for p in t.vertices))
        out.append(f'<polygon class="alcove" data-elt="{cx.word_str(y)}" fill="{fill}" points="{poly}"/>')
    out.append("</g>")
    edges = sorted({(ty, tuple(sorted(e))) for _, t in tris for ty, e in t.edges()})
    out.append('<g class="walls" stroke-width="1.5">')
    for ty, (p, q) in edges:
        (ax, ay), (bx, by) = _xy(p, scale), _xy(q, scale)
        out.append(f'<line stroke="{EDGE_COLORS[ty]}" x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
                   f'x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_shade_counts(svg: str) -> dict[str, int]:
    """Number of shaded alcove polygons per fill color."""
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg)
    counts: dict[str, int] = defaultdict(int)
    for el in root.iter("{http://www.w3.org/2000/svg}polygon"):
        if el.get("class") == "alcove":
            counts[el.get("fill")] += 1
    return dict(counts)


# ---- region checks -----------------------------------------------------------------


# unit vectors along the three walls through the origin, 120 degrees apart
_MEDIANS = {
    "a": ((1, 0), (-1, 1), (0, -1)),
    "b": ((-1, 0), (1, -1), (0, 1)),
}


def _inner(p, q) -> Fraction:
    """Inner product for the form ``a^2 + ab + b^2``."""
    return p[0] * q[0] + Fraction(p[0] * q[1] + p[1] * q[0], 2) + p[1] * q[1]


def _tri_level(bary, orient: str) -> Fraction:
    return max(_inner(bary, u) for u in _MEDIANS[orient])


def _alcoves_in_box(R: int) -> Iterable[Triangle]:
    for i in range(-R, R):
        for j in range(-R, R):
            yield Triangle(((i, j), (i + 1, j), (i, j + 1)))
            yield Triangle(((i + 1, j), (i, j + 1), (i + 1, j + 1)))


def centered_triangle(elts: Iterable[Elt]) -> tuple[str, Fraction] | None:
    """``(orientation, level)`` if the alcoves of ``elts`` form a centered zigzag triangle.

    The triangle is centered at the origin and its medians run along the
    three walls through it. An alcove belongs to it when its barycenter
    does. The smallest such triangle containing ``elts`` is tried for both
    orientations and the alcove sets are compared exactly.
    """
    mine = {elt_to_triangle(y).barycenter for y in elts}
    R = 2 + 2 * math.ceil(max(abs(c) for b in mine for c in b))
    found = None
    for orient in sorted(_MEDIANS):
        h = max(_tri_level(b, orient) for b in mine)
        inside = {t.barycenter for t in _alcoves_in_box(R) if _tri_level(t.barycenter, orient) <= h}
        if any(abs(c) >= R - 1 for b in inside for c in b):
            # the triangle leaks out of the search box, so it is larger than elts
            continue
        if inside == mine:
            found = (orient, h)
    return found


def region_is_equilateral_triangle(m: int) -> VerifyReport:
    """``[e, theta(m,0)]`` is an equilateral triangle with zigzag sides, centered at the origin."""
    rep = VerifyReport("triangle-region", {"m": m})
    iv = cx.lower_interval(cx.theta_elt(m, 0))
    found = centered_triangle(iv)
    if found is None:
        rep.fail(reason="interval is not a centered triangle of alcoves", alcoves=len(iv))
    else:
        rep.info["orientation"], level = found
        rep.info["level"] = str(level)
    rep.info["alcoves"] = len(iv)
    return rep


def hexagon_decomposition(m: int, n: int) -> VerifyReport:
    """``[e, theta(m+1,n+1)] \\ [e, theta(m,n)]`` is a disjoint union of full hexagons.

    A hexagon is the star of six alcoves around a lattice point; all
    hexagons in the decomposition are centered at points of one type.
    """
    rep = VerifyReport("hexagon-geometry", {"m": m, "n": n})
    diff = cx.lower_interval(cx.theta_elt(m + 1, n + 1)) - cx.lower_interval(cx.theta_elt(m, n))
    star: dict[Point, set[Elt]] = defaultdict(set)
    for y in diff:
        for p in elt_to_triangle(y).vertices:
            star[p].add(y)
    full = {p: ys for p, ys in star.items() if len(ys) == 6}
    best = None
    for t in (1, 2, 3):
        centers = sorted(p for p in full if vertex_type(p) == t)
        covered = [y for p in centers for y in full[p]]
        if len(covered) == len(set(covered)) and set(covered) == diff:
            best = (t, centers)
    if best is None:
        rep.fail(reason="no single-type hexagon partition", size=len(diff))
    else:
        rep.info["type"] = best[0]
        rep.info["hexagons"] = len(best[1])
    return rep
