"""Convex interpolation between neighbouring spokes, with optimal split.

For a deletion rate between two breakpoints ``d/q`` and ``(d+1)/q`` the
adversary splits each codeword into two segments, reduces the alphabet by
``d`` symbols on the first and ``d+1`` on the second, and distributes the
insertion budget ``gamma`` between the segments.  Any admissible split
``(gamma0, gamma1)`` yields a valid rate bound; the strongest one is the
minimum over splits, which is attained where

    (1 + 1/gamma1)(1 - 1/(q-d-1)) = (1 + 1/gamma0)(1 - 1/(q-d)).

The published closed form for that optimum is transcribed verbatim in
:func:`_closed_form_gamma0_as_printed` but fails validation on interior
points (it returns negative values), so the optimiser treats it strictly
as a candidate: each candidate must land in the admissible interval and
satisfy the stationarity relation, falling back to the quadratic solved
directly from the two defining equations and finally to golden-section
search.  Convexity of the spoke surface makes the objective unimodal on
the constraint line, so golden-section is sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bounds import (
    SRC_DELETION_ONLY,
    SRC_INSERTION_ONLY,
    SRC_INTERPOLATED_OUTER,
    SRC_LINEAR_OUTER,
    BoundValue,
    ErrorPoint,
    check_alphabet,
    deletion_only_piecewise_bound,
    insertion_only_bound,
    snap_floor,
    spoke_term,
)
from .errors import DomainError
from .geometry import linear_outer_bound

_DOMAIN_TOL = 1e-12
_STATIONARITY_RTOL = 1e-9
_GOLDEN_TOL = 1e-10
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class InterpolationSetup:
    """Band data for a deletion rate between spokes ``d/q`` and ``(d+1)/q``.

    ``alpha`` in (0, 1] is the length fraction of the first segment and
    the weights are the segment lengths after reduction, so any split
    must satisfy ``n0_weight*gamma0 + n1_weight*gamma1 = gamma``.
    """

    q: int
    delta: float
    d: int
    alpha: float
    n0_weight: float
    n1_weight: float


@dataclass(frozen=True)
class GammaSplit:
    """An insertion split between the two segments and its bound value.

    ``method`` records how the split was found: "exact-spoke" when the
    second segment vanishes, "degenerate-spoke" when a unary segment
    forces the split, "beyond-resilience" outside the polygon (rate 0),
    "closed-form" for the published expression, "stationarity" for the
    quadratic solved from the defining equations, "golden-section" for
    the numeric fallback.
    """

    gamma0: float
    gamma1: float
    objective: float
    method: str


def interpolation_setup(q: int, delta: float) -> InterpolationSetup:
    """Band decomposition ``d = floor(delta*q)``, ``alpha = 1 - delta*q + d``."""
    q = check_alphabet(q)
    delta = float(delta)
    if not -_DOMAIN_TOL <= delta <= (1.0 - 1.0 / q) + _DOMAIN_TOL:
        raise DomainError(f"delta must be in [0, 1 - 1/q], got {delta}")
    delta = min(max(delta, 0.0), 1.0 - 1.0 / q)
    d, frac = snap_floor(delta * q)
    alpha = 1.0 - frac
    n0 = alpha * (1.0 - d / q)
    n1 = (1.0 - alpha) * (1.0 - (d + 1) / q)
    return InterpolationSetup(q=q, delta=delta, d=d, alpha=alpha, n0_weight=n0, n1_weight=n1)


def interpolated_bound_at_split(q: int, gamma: float, delta: float, gamma0: float) -> float:
    """Raw two-segment bound value for one admissible choice of ``gamma0``.

    ``gamma1`` is implied by the linear constraint; a negative implied
    value is a domain error, and insertions on a unary segment raise
    :class:`DegenerateSpokeError`.
    """
    point = ErrorPoint(q, gamma, delta)
    setup = interpolation_setup(point.q, point.delta)
    gamma, q, d = point.gamma, point.q, setup.d
    g0 = float(gamma0)
    tol = _DOMAIN_TOL * max(1.0, gamma)
    if g0 < -tol:
        raise DomainError(f"gamma0 must be >= 0, got {g0}")
    g0 = max(g0, 0.0)
    if setup.n1_weight == 0.0:
        if abs(gamma - setup.n0_weight * g0) > 1e-9 * max(1.0, gamma):
            raise DomainError(
                "with a single active segment the constraint forces "
                f"gamma0 = {gamma / setup.n0_weight}, got {g0}"
            )
        return setup.n0_weight * spoke_term(q, q - d, g0)
    g1 = (gamma - setup.n0_weight * g0) / setup.n1_weight
    if g1 < -tol / setup.n1_weight:
        raise DomainError(f"implied gamma1 is negative ({g1}) for gamma0 = {g0}")
    if abs(g1) <= tol / setup.n1_weight:
        g1 = 0.0
    return setup.n0_weight * spoke_term(q, q - d, g0) + setup.n1_weight * spoke_term(
        q, q - d - 1, g1
    )


def golden_section_minimize(
    f: Callable[[float], float], lo: float, hi: float, tol: float = _GOLDEN_TOL
) -> float:
    """Golden-section search for the minimum of a unimodal f on [lo, hi]."""
    if hi - lo <= tol:
        return 0.5 * (lo + hi)
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _closed_form_gamma0_as_printed(q: int, gamma: float, d: int, alpha: float) -> float | None:
    # Verbatim transcription of the published optimum (A - sqrt(B^2 + C)) / (2 alpha (q - d)).
    A = (
        3 * alpha * d * d * q + d * d * q - 3 * alpha * d * q * q - 2 * d * q * q
        + 4 * alpha * d * q + 2 * d * q + alpha * q**3 - 2 * alpha * q * q
        + q**3 - 2 * q * q + gamma * q + q - alpha * d**3 - 2 * alpha * d * d
    )
    B = (
        alpha * d**3 + 2 * alpha * d * d - 3 * alpha * d * d * q - d * d * q
        + 3 * alpha * d * q * q + 2 * d * q * q - 4 * alpha * d * q - 2 * d * q
        - alpha * q**3 + 2 * alpha * q * q - q**3 + 2 * q * q - gamma * q - q
    )
    C = 4 * (alpha * q - alpha * d) * (
        gamma * d * d * q - 2 * gamma * d * q * q + 2 * gamma * d * q
        + gamma * q**3 - 2 * gamma * q * q
    )
    disc = B * B + C
    if disc < 0.0:
        return None
    return (A - math.sqrt(disc)) / (2.0 * alpha * (q - d))


def _stationarity_gamma0(q: int, gamma: float, d: int, alpha: float) -> float | None:
    # Positive root of the quadratic obtained by substituting the linear
    # constraint into the stationarity relation between the two segments.
    q0, q1 = q - d, q - d - 1
    k0, k1 = 1.0 - 1.0 / q0, 1.0 - 1.0 / q1
    n0 = alpha * (1.0 - d / q)
    n1 = (1.0 - alpha) * (1.0 - (d + 1) / q)
    a = n0 * (k0 - k1)
    b = n0 * k0 + n1 * k1 - gamma * (k0 - k1)
    c = -gamma * k0
    disc = b * b - 4.0 * a * c
    if disc <= 0.0 or a <= 0.0:
        return None
    root = math.sqrt(disc)
    if b >= 0.0:
        return -2.0 * c / (b + root)
    return (-b + root) / (2.0 * a)


def _stationarity_residual(q: int, d: int, g0: float, g1: float) -> float:
    lhs = (1.0 + 1.0 / g1) * (1.0 - 1.0 / (q - d - 1))
    rhs = (1.0 + 1.0 / g0) * (1.0 - 1.0 / (q - d))
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def optimal_gamma0(q: int, gamma: float, delta: float) -> GammaSplit:
    """Split of the insertion budget minimising the two-segment bound.

    Candidates are validated in order (published closed form, quadratic
    from the stationarity system, golden-section search); a candidate is
    accepted only if it lies in the admissible interval
    ``[0, gamma / n0_weight]``, satisfies the stationarity relation, and
    is a local minimum of the objective.
    """
    point = ErrorPoint(q, gamma, delta)
    setup = interpolation_setup(point.q, point.delta)
    q, gamma, d, alpha = point.q, point.gamma, setup.d, setup.alpha

    # Insertion rate of the resilience chain at this deletion rate: the
    # convex mix of the two neighbouring polygon vertices.  Beyond it the
    # point is outside the resilience region and the rate is just 0; the
    # split objective would re-increase there and give a weaker bound.
    chain_gamma = setup.n0_weight * (q - d - 1)
    if setup.n1_weight > 0.0:
        chain_gamma += setup.n1_weight * (q - d - 2)
    if gamma > chain_gamma + _DOMAIN_TOL:
        return GammaSplit(
            gamma0=0.0, gamma1=0.0, objective=-math.inf, method="beyond-resilience"
        )

    if q - d == 1:
        # Only a unary segment remains: zero rate, no insertions tolerated.
        raw = 0.0 if gamma == 0.0 else -math.inf
        return GammaSplit(gamma0=0.0, gamma1=0.0, objective=raw, method="degenerate-spoke")
    if gamma == 0.0:
        obj = interpolated_bound_at_split(q, 0.0, delta, 0.0)
        return GammaSplit(gamma0=0.0, gamma1=0.0, objective=obj, method="exact-spoke")
    if setup.n1_weight == 0.0:
        g0 = gamma / setup.n0_weight
        obj = interpolated_bound_at_split(q, gamma, delta, g0)
        return GammaSplit(gamma0=g0, gamma1=0.0, objective=obj, method="exact-spoke")

    hi = gamma / setup.n0_weight
    if q - d - 1 == 1:
        # The second segment is unary, so it can absorb no insertions.
        obj = interpolated_bound_at_split(q, gamma, delta, hi)
        return GammaSplit(gamma0=hi, gamma1=0.0, objective=obj, method="degenerate-spoke")

    def split_for(g0: float, method: str) -> GammaSplit:
        g1 = (gamma - setup.n0_weight * g0) / setup.n1_weight
        obj = interpolated_bound_at_split(q, gamma, delta, g0)
        return GammaSplit(gamma0=g0, gamma1=max(g1, 0.0), objective=obj, method=method)

    def acceptable(g0: float | None) -> bool:
        if g0 is None or not math.isfinite(g0) or not 0.0 < g0 < hi:
            return False
        g1 = (gamma - setup.n0_weight * g0) / setup.n1_weight
        if g1 <= 0.0:
            return False
        if _stationarity_residual(q, d, g0, g1) > _STATIONARITY_RTOL:
            return False
        # Local-minimum sanity: a stationary point of the convex objective
        # must not beat its immediate neighbourhood.
        h = max(1e-7, 1e-7 * g0)
        obj = interpolated_bound_at_split(q, gamma, delta, g0)
        for probe in (max(0.0, g0 - h), min(hi, g0 + h)):
            if interpolated_bound_at_split(q, gamma, delta, probe) < obj - 1e-12:
                return False
        return True

    g0 = _closed_form_gamma0_as_printed(q, gamma, d, alpha)
    if acceptable(g0):
        return split_for(g0, "closed-form")
    g0 = _stationarity_gamma0(q, gamma, d, alpha)
    if acceptable(g0):
        return split_for(g0, "stationarity")
    g0 = golden_section_minimize(
        lambda x: interpolated_bound_at_split(q, gamma, delta, x), 0.0, hi
    )
    return split_for(min(max(g0, 0.0), hi), "golden-section")


def interpolated_outer_bound(q: int, gamma: float, delta: float) -> BoundValue:
    """The strongest outer bound: optimally split convex spoke interpolation.

    Reproduces the single-spoke bound exactly when ``delta`` is a
    multiple of ``1/q`` and vanishes exactly on the resilience chain.
    """
    split = optimal_gamma0(q, gamma, delta)
    return BoundValue.from_raw(split.objective, SRC_INTERPOLATED_OUTER)


def outer_bound_breakdown(q: int, gamma: float, delta: float) -> dict[str, BoundValue]:
    """Every outer bound applicable at the query point, keyed by source tag."""
    point = ErrorPoint(q, gamma, delta)
    parts: dict[str, BoundValue] = {}
    if point.delta <= (1.0 - 1.0 / point.q) + _DOMAIN_TOL:
        parts[SRC_INTERPOLATED_OUTER] = interpolated_outer_bound(
            point.q, point.gamma, point.delta
        )
    parts[SRC_LINEAR_OUTER] = linear_outer_bound(point.q, point.gamma, point.delta)
    if point.delta == 0.0:
        parts[SRC_INSERTION_ONLY] = insertion_only_bound(point.q, point.gamma)
    if point.gamma == 0.0:
        parts[SRC_DELETION_ONLY] = deletion_only_piecewise_bound(point.q, point.delta)
    return parts


def combined_outer_bound(q: int, gamma: float, delta: float) -> BoundValue:
    """Minimum over all applicable outer bounds; source names the minimiser."""
    parts = outer_bound_breakdown(q, gamma, delta)
    best = None
    for value in parts.values():
        if best is None or value.rate < best.rate:
            best = value
    assert best is not None
    return best
