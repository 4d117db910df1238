"""SVG drawing of the universal Farey map in the upper half-plane.

Edges between finite rationals are semicircles centred on the real axis;
edges to ``1/0`` are vertical segments at the integers, clipped at the top of
the picture.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = ["RenderSpec", "farey_vertices", "farey_edges", "render_universal_farey"]


@dataclass(frozen=True)
class RenderSpec:
    max_denominator: int = 8
    x0: Fraction = Fraction(0)
    x1: Fraction = Fraction(1)
    width: int = 800
    height: int = 440

    def __post_init__(self):
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be >= 1")
        if not Fraction(self.x0) < Fraction(self.x1):
            raise ValueError("viewport must satisfy x0 < x1")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")


def farey_vertices(spec):
    """Reduced fractions ``(a, c)`` with ``1 <= c <= max_denominator`` inside the viewport, sorted by value."""
    x0, x1 = Fraction(spec.x0), Fraction(spec.x1)
    out = []
    for c in range(1, spec.max_denominator + 1):
        lo = -((-x0.numerator * c) // x0.denominator)  # ceil(x0 * c)
        hi = (x1.numerator * c) // x1.denominator
        for a in range(lo, hi + 1):
            if gcd(a, c) == 1:
                out.append((a, c))
    out.sort(key=lambda f: (Fraction(*f), f[1]))
    return out


def farey_edges(spec):
    """Edges of the finite part: pairs ``((a, c), (b, d))`` with ``|a d - b c| = 1``.

    Each edge is listed once, smaller value first. Vertical edges to ``1/0``
    are not included; they sit at every integer vertex.
    """
    verts = set(farey_vertices(spec))
    edges = []
    for a, c in verts:
        for d in range(1, spec.max_denominator + 1):
            for sign in (1, -1):
                top = a * d - sign
                if top % c:
                    continue
                b = top // c
                if (b, d) in verts and Fraction(a, c) < Fraction(b, d):
                    edges.append(((a, c), (b, d)))
    edges = sorted(set(edges), key=lambda e: (Fraction(*e[0]), Fraction(*e[1])))
    return edges


def _fmt(x):
    return f"{float(x):.4f}"


def render_universal_farey(spec):
    """Return the SVG document as bytes."""
    x0, x1 = Fraction(spec.x0), Fraction(spec.x1)
    scale = Fraction(spec.width) / (x1 - x0)
    base = spec.height - 24

    def px(x):
        return (Fraction(x) - x0) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        '<g fill="none" stroke="black" stroke-width="1">',
        f'<line class="axis" x1="0" y1="{base}" x2="{spec.width}" y2="{base}" stroke="gray"/>',
    ]
    for a, c in farey_vertices(spec):
        if c == 1:
            x = _fmt(px(a))
            lines.append(f'<line class="edge" data-u="1/0" data-v="{a}/1" x1="{x}" y1="{base}" x2="{x}" y2="0"/>')
    for (a, c), (b, d) in farey_edges(spec):
        left, right = px(Fraction(a, c)), px(Fraction(b, d))
        r = _fmt((right - left) / 2)
        lines.append(
            f'<path class="edge" data-u="{a}/{c}" data-v="{b}/{d}" '
            f'd="M {_fmt(left)} {base} A {r} {r} 0 0 1 {_fmt(right)} {base}"/>'
        )
    lines.append("</g>")
    lines.append('<g font-family="serif" font-size="10" text-anchor="middle">')
    for a, c in farey_vertices(spec):
        lines.append(f'<text class="vertex" data-value="{a}/{c}" x="{_fmt(px(Fraction(a, c)))}" y="{base + 14}">{a}/{c}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
