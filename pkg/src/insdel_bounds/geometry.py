"""The resilience polygon and the ray-scaling outer bound built on it.

The set of (insertion rate, deletion rate) pairs at which positive-rate
list decoding is possible for alphabet size ``q`` is a concave polygon:
the origin, then the chain of vertices ``(i(i-1)/q, (q-i)/q)`` for
``i = q, q-1, ..., 1``.  Membership follows the half-open convention: the
interior and the two axis segments anchored at the origin are in, the
outer chain (where resilience dies) is out.

All geometric predicates run on exact rationals.  Every vertex has
denominator ``q``, and query points are snapped to the nearest rational
on a 1e-12 grid before any sign test, so edge cases such as "exactly on
the chain" are decided without floating-point sign flips.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .bounds import SRC_LINEAR_OUTER, BoundValue, ErrorPoint, check_alphabet
from .errors import DegenerateRayError, DomainError

_SNAP_DENOMINATOR = 10**12

RationalPoint = tuple[Fraction, Fraction]


def snap_to_rational(x: float) -> Fraction:
    """Round a coordinate to the nearest multiple of 1e-12, exactly."""
    return Fraction(round(Fraction(x) * _SNAP_DENOMINATOR), _SNAP_DENOMINATOR)


@dataclass(frozen=True)
class ScalingResult:
    """Outcome of pushing a point radially until it exits the polygon.

    ``alpha`` is the factor that lands the query on the outer chain:
    greater than 1 strictly inside, exactly 1 on the chain, below 1
    outside.  ``boundary_point`` is where the ray crosses the chain.
    """

    alpha: float
    boundary_point: tuple[float, float]


@dataclass(frozen=True)
class ResiliencePolygon:
    """Vertex list of the resilience region for one alphabet size."""

    q: int
    vertices: tuple[RationalPoint, ...]

    def chain(self) -> tuple[RationalPoint, ...]:
        """Outer-chain vertices, from ``(q-1, 0)`` up to ``(0, (q-1)/q)``."""
        return self.vertices[1:]

    def chain_segments(self) -> tuple[tuple[RationalPoint, RationalPoint], ...]:
        ch = self.chain()
        return tuple(zip(ch, ch[1:]))

    def vertices_float(self) -> tuple[tuple[float, float], ...]:
        return tuple((float(g), float(d)) for g, d in self.vertices)

    def contains(self, point: tuple[float, float]) -> bool:
        return contains(self, point)

    def scaling_alpha(self, point: tuple[float, float]) -> ScalingResult:
        return scaling_alpha(self, point)


@functools.cache
def build_polygon(q: int) -> ResiliencePolygon:
    """Construct the resilience polygon, counterclockwise from the origin.

    Polygons are immutable, so construction is cached per alphabet size.
    """
    q = check_alphabet(q)
    verts: list[RationalPoint] = [(Fraction(0), Fraction(0))]
    for i in range(q, 0, -1):
        verts.append((Fraction(i * (i - 1), q), Fraction(q - i, q)))
    return ResiliencePolygon(q=q, vertices=tuple(verts))


def _snap_point(point: tuple[float, float]) -> RationalPoint:
    g, d = point
    gr, dr = snap_to_rational(float(g)), snap_to_rational(float(d))
    if gr < 0 or dr < 0:
        raise DomainError(f"point must have nonnegative coordinates, got {point}")
    return gr, dr


def _scaling_exact(
    poly: ResiliencePolygon, g: Fraction, d: Fraction
) -> tuple[Fraction, RationalPoint]:
    """Exact ray-chain intersection: smallest t > 0 with t*(g, d) on the chain."""
    if g == 0 and d == 0:
        raise DegenerateRayError("scaling ray is undefined for the zero vector")
    for (x1, y1), (x2, y2) in poly.chain_segments():
        dx, dy = x2 - x1, y2 - y1
        det = d * dx - g * dy
        if det == 0:
            continue
        t = (dx * y1 - dy * x1) / det
        s = (g * y1 - d * x1) / det
        if 0 <= s <= 1 and t > 0:
            return t, (x1 + s * dx, y1 + s * dy)
    raise DomainError(f"ray through ({g}, {d}) does not meet the outer chain")


def scaling_alpha(poly: ResiliencePolygon, point: tuple[float, float]) -> ScalingResult:
    """Scale factor taking ``point`` radially onto the polygon's outer chain."""
    g, d = _snap_point(point)
    t, (bg, bd) = _scaling_exact(poly, g, d)
    return ScalingResult(alpha=float(t), boundary_point=(float(bg), float(bd)))


def contains(poly: ResiliencePolygon, point: tuple[float, float]) -> bool:
    """Membership under the half-open border convention.

    True on the open interior and on the two axis segments
    ``[(0,0), (q-1, 0))`` and ``[(0,0), (0, 1-1/q))``; false on the outer
    chain itself and everywhere beyond it.
    """
    g, d = _snap_point(point)
    if g == 0 and d == 0:
        return True
    t, _ = _scaling_exact(poly, g, d)
    return t > 1


def linear_outer_bound(q: int, gamma: float, delta: float) -> BoundValue:
    """Rate bound ``1 - 1/alpha`` from radial distance to the resilience chain.

    Any code surviving error rates strictly inside the polygon can be
    pinched down to one surviving the alpha-scaled rates, which caps its
    rate at ``1 - 1/alpha``.  The noiseless origin is rate 1 by
    convention; points on or beyond the chain get rate 0.
    """
    point = ErrorPoint(q, gamma, delta)
    poly = build_polygon(point.q)
    g, d = snap_to_rational(point.gamma), snap_to_rational(point.delta)
    if g == 0 and d == 0:
        return BoundValue.from_raw(1.0, SRC_LINEAR_OUTER)
    t, _ = _scaling_exact(poly, g, d)
    return BoundValue.from_raw(float(1 - 1 / t), SRC_LINEAR_OUTER)
