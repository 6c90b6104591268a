"""Closed-form rate bounds for list-decodable insertion-deletion codes.

Every function here is a pure scalar formula in IEEE double precision.
Logarithms are base ``q`` throughout, computed as ratios of natural logs,
and the removable singularities of the form ``x * log(x)`` at ``x = 0``
are handled by explicit branches rather than floating-point accident.

Conventions shared by all bounds:

* ``gamma`` is the number of adversarial insertions per codeword symbol,
  ``delta`` the number of deletions per codeword symbol.
* A raw formula value may be negative (the query lies beyond the error
  resilience of any positive-rate code); rates are clamped to ``[0, 1]``
  and the unclamped value is preserved on :class:`BoundValue`.
* A raw value of ``-inf`` marks points that are strictly infeasible, and
  ``nan`` marks points outside the formula's domain entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpokeError, DomainError

# Source tags recorded on BoundValue and used by the CLI / surface emitter.
SRC_INSERTION_ONLY = "insertion-only"
SRC_DELETION_ONLY = "deletion-only"
SRC_SPOKE = "spoke"
SRC_LINEAR_OUTER = "linear-outer"
SRC_INTERPOLATED_OUTER = "interpolated-outer"
SRC_COMBINED_OUTER = "combined-outer"
SRC_INNER = "inner"

_BREAKPOINT_SNAP = 1e-9
_DOMAIN_TOL = 1e-12


def check_alphabet(q: int) -> int:
    """Validate an alphabet size (an integer of at least 2) and return it."""
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise DomainError(f"alphabet size must be an integer, got {q!r}")
    if q < 2:
        raise DomainError(f"alphabet size must be >= 2, got {q}")
    return int(q)


def _logq(x: float, q: int) -> float:
    return math.log(x) / math.log(q)


def snap_floor(x: float, snap: float = _BREAKPOINT_SNAP) -> tuple[int, float]:
    """Split ``x`` into ``(floor, fractional part)``, snapping to integers.

    Values within ``snap`` of an integer are treated as exactly that
    integer; this keeps queries such as ``delta = d / q`` on the intended
    breakpoint even when ``delta * q`` rounds to ``d - 1ulp``.
    """
    d = math.floor(x)
    frac = x - d
    if frac >= 1.0 - snap:
        return d + 1, 0.0
    if frac <= snap:
        return d, 0.0
    return d, frac


@dataclass(frozen=True)
class ErrorPoint:
    """A (gamma, delta) error-rate query against a fixed alphabet size.

    Deletions per symbol must lie in ``[0, 1]`` and insertions per symbol
    in ``[0, q - 1]``; anything else is rejected with :class:`DomainError`.
    """

    q: int
    gamma: float
    delta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", check_alphabet(self.q))
        g, d = float(self.gamma), float(self.delta)
        if not (math.isfinite(g) and math.isfinite(d)):
            raise DomainError(f"error rates must be finite, got ({g}, {d})")
        if not -_DOMAIN_TOL <= d <= 1.0 + _DOMAIN_TOL:
            raise DomainError(f"deletion rate must be in [0, 1], got {d}")
        if not -_DOMAIN_TOL <= g <= (self.q - 1) + _DOMAIN_TOL:
            raise DomainError(
                f"insertion rate must be in [0, q-1] = [0, {self.q - 1}], got {g}"
            )
        object.__setattr__(self, "gamma", min(max(g, 0.0), float(self.q - 1)))
        object.__setattr__(self, "delta", min(max(d, 0.0), 1.0))


@dataclass(frozen=True)
class BoundValue:
    """A clamped rate in ``[0, 1]`` plus the raw formula value behind it.

    ``feasible`` is true when the unclamped value is nonnegative, i.e. the
    query point lies in the closure of the region where the producing
    bound still admits a positive-rate (or zero-rate boundary) code.
    """

    rate: float
    feasible: bool
    source: str
    raw: float

    @classmethod
    def from_raw(cls, raw: float, source: str) -> "BoundValue":
        if math.isnan(raw):
            return cls(rate=0.0, feasible=False, source=source, raw=raw)
        return cls(
            rate=min(max(raw, 0.0), 1.0),
            feasible=raw >= 0.0,
            source=source,
            raw=raw,
        )


def q_ary_entropy(x: float, q: int) -> float:
    """The q-ary entropy ``H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)``.

    Defined on ``[0, 1]`` with the continuity limits ``H_q(0) = 0`` and
    ``H_q(1) = log_q(q-1)``; maximized at ``x = 1 - 1/q`` with value 1.
    """
    q = check_alphabet(q)
    x = float(x)
    if not -_DOMAIN_TOL <= x <= 1.0 + _DOMAIN_TOL:
        raise DomainError(f"entropy argument must be in [0, 1], got {x}")
    x = min(max(x, 0.0), 1.0)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return _logq(q - 1, q)
    return x * _logq(q - 1, q) - x * _logq(x, q) - (1.0 - x) * _logq(1.0 - x, q)


def spoke_term(q: int, q_reduced: int, gp: float) -> float:
    """Per-segment bracket ``(1+g) log_q(q_r/(1+g)) - g log_q((q_r-1)/g)``.

    ``q_reduced`` is the surviving sub-alphabet size of the segment and
    ``gp`` the insertion rate rescaled to the segment length.  The limit
    at ``gp = 0`` is ``log_q(q_reduced)``.  A unary segment carries no
    rate: the term is 0 with no insertions and undefined otherwise.
    """
    if q_reduced <= 1:
        if gp > 0.0:
            raise DegenerateSpokeError(
                f"insertions routed onto a segment with alphabet size {q_reduced}"
            )
        return 0.0
    if gp == 0.0:
        return _logq(q_reduced, q)
    return (1.0 + gp) * _logq(q_reduced / (1.0 + gp), q) - gp * _logq(
        (q_reduced - 1) / gp, q
    )


def insertion_only_bound(q: int, gamma: float) -> BoundValue:
    """Best known rate upper bound against a pure-insertion adversary.

    ``raw = 1 - log_q(gamma+1) - gamma*(log_q((gamma+1)/gamma) - log_q(q/(q-1)))``
    for ``gamma`` in ``[0, q-1]``, with value 1 at ``gamma = 0`` and an
    exact zero at ``gamma = q - 1``.
    """
    q = check_alphabet(q)
    gamma = float(gamma)
    if not -_DOMAIN_TOL <= gamma <= (q - 1) + _DOMAIN_TOL:
        raise DomainError(f"insertion rate must be in [0, {q - 1}], got {gamma}")
    gamma = min(max(gamma, 0.0), float(q - 1))
    if gamma == 0.0:
        raw = 1.0
    else:
        raw = (
            1.0
            - _logq(gamma + 1.0, q)
            - gamma * (_logq((gamma + 1.0) / gamma, q) - _logq(q / (q - 1.0), q))
        )
    return BoundValue.from_raw(raw, SRC_INSERTION_ONLY)


def _spoke_zero_insertion_value(q: int, d: int) -> float:
    # (1 - d/q) * log_q(q - d); shared so breakpoint values agree bit-for-bit.
    return (1.0 - d / q) * _logq(q - d, q)


def deletion_only_piecewise_bound(q: int, delta: float) -> BoundValue:
    """Piecewise-linear rate upper bound against a pure-deletion adversary.

    At the breakpoints ``delta = d/q`` the alphabet-reduction strategy
    collapses any codeword onto ``(q-d)^(n(1-delta))`` strings, giving
    ``(1-delta) log_q(q-d)``.  Between breakpoints the bound is the linear
    time-share of the neighbouring breakpoint values, and the rate is 0
    for every ``delta >= 1 - 1/q``.
    """
    q = check_alphabet(q)
    delta = float(delta)
    if not -_DOMAIN_TOL <= delta <= 1.0 + _DOMAIN_TOL:
        raise DomainError(f"deletion rate must be in [0, 1], got {delta}")
    delta = min(max(delta, 0.0), 1.0)
    d, frac = snap_floor(delta * q)
    if d > q - 1 or (d == q - 1 and frac > 0.0):
        return BoundValue.from_raw(-math.inf, SRC_DELETION_ONLY)
    if frac == 0.0:
        return BoundValue.from_raw(_spoke_zero_insertion_value(q, d), SRC_DELETION_ONLY)
    alpha = 1.0 - frac
    # Weights-first association mirrors the two-segment interpolation at
    # gamma = 0, so the two cuts agree bit for bit.
    raw = (alpha * (1.0 - d / q)) * _logq(q - d, q)
    if d + 1 <= q - 1:
        raw += ((1.0 - alpha) * (1.0 - (d + 1) / q)) * _logq(q - d - 1, q)
    return BoundValue.from_raw(raw, SRC_DELETION_ONLY)


def spoke_bound(q: int, d: int, gamma_prime: float) -> BoundValue:
    """Rate upper bound at deletion rate exactly ``d/q`` (one "spoke").

    ``gamma_prime = gamma / (1 - d/q)`` is the insertion rate rescaled to
    the reduced block length.  With reduced alphabet ``q - d >= 2``:

    ``raw = (1-d/q) * [(1+g') log_q((q-d)/(1+g')) - g' log_q((q-d-1)/g')]``

    The bracket decreases to an exact zero at ``g' = q - d - 1``, which is
    the resilience-polygon vertex on this spoke; beyond it the point lies
    outside the resilience region, so the rate is 0 and infeasible (the
    re-increasing bracket value would be a strictly weaker bound there).
    A fully reduced spoke (``q - d = 1``) is rate 0: feasible only with
    no insertions at all.
    """
    q = check_alphabet(q)
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise DomainError(f"deletion numerator d must be an integer, got {d!r}")
    if not 0 <= d <= q - 1:
        raise DomainError(f"d must be in [0, {q - 1}], got {d}")
    gp = float(gamma_prime)
    if gp < -_DOMAIN_TOL:
        raise DomainError(f"rescaled insertion rate must be >= 0, got {gp}")
    gp = max(gp, 0.0)
    if q - d == 1:
        raw = 0.0 if gp == 0.0 else -math.inf
        return BoundValue.from_raw(raw, SRC_SPOKE)
    if gp > (q - d - 1) + _DOMAIN_TOL:
        return BoundValue.from_raw(-math.inf, SRC_SPOKE)
    raw = (1.0 - d / q) * spoke_term(q, q - d, gp)
    return BoundValue.from_raw(raw, SRC_SPOKE)


def surface_gamma_max(q: int, delta: float) -> float:
    """Upper edge ``(1-delta)(q - q*delta - 1)`` of the spoke-surface domain."""
    return (1.0 - delta) * (q - q * delta - 1.0)


def spoke_surface_value(q: int, gamma: float, delta: float) -> float:
    """The convex bivariate extension of the spoke bound to continuous delta.

    With ``g' = gamma/(1-delta)``:

    ``f = (1-delta) * [(1+g') log_q(q(1-delta)/(1+g')) - g' log_q((q(1-delta)-1)/g')]``

    restricted to the domain ``0 <= delta <= 1 - 1/q`` and
    ``0 <= gamma <= (1-delta)(q - q*delta - 1)``, on which it decreases
    strictly in ``gamma`` from ``(1-delta) log_q(q(1-delta))`` down to an
    exact zero at the upper edge.
    """
    q = check_alphabet(q)
    gamma, delta = float(gamma), float(delta)
    if not -_DOMAIN_TOL <= delta <= (1.0 - 1.0 / q) + _DOMAIN_TOL:
        raise DomainError(f"delta must be in [0, 1 - 1/q], got {delta}")
    delta = min(max(delta, 0.0), 1.0 - 1.0 / q)
    gmax = max(surface_gamma_max(q, delta), 0.0)
    if not -_DOMAIN_TOL <= gamma <= gmax + _DOMAIN_TOL:
        raise DomainError(
            f"gamma must be in [0, (1-delta)(q - q*delta - 1)] = [0, {gmax}], got {gamma}"
        )
    gamma = min(max(gamma, 0.0), gmax)
    one_minus = 1.0 - delta
    reduced = q * one_minus
    if reduced <= 1.0:
        return 0.0
    if gamma == 0.0:
        return one_minus * _logq(reduced, q)
    gp = gamma / one_minus
    return one_minus * (
        (1.0 + gp) * _logq(reduced / (1.0 + gp), q)
        - gp * _logq((reduced - 1.0) / gp, q)
    )


def spoke_surface_hessian(q: int, gamma: float, delta: float) -> np.ndarray:
    """Closed-form Hessian of :func:`spoke_surface_value` on the strict interior.

    Returns the symmetric 2x2 matrix of second partials with respect to
    ``(gamma, delta)``.  All three positive-semidefiniteness certificates
    (trace, determinant, discriminant nonnegative) hold on the interior,
    which is what makes convex interpolation between spokes sound.
    """
    q = check_alphabet(q)
    gamma, delta = float(gamma), float(delta)
    if not 0.0 <= delta < 1.0 - 1.0 / q:
        raise DomainError(f"delta must be in [0, 1 - 1/q), got {delta}")
    gmax = surface_gamma_max(q, delta)
    if not 0.0 < gamma < gmax:
        raise DomainError(
            f"gamma must be strictly inside (0, {gmax}) at delta={delta}, got {gamma}"
        )
    od = 1.0 - delta
    lnq = math.log(q)
    qd1 = q - q * delta - 1.0
    h11 = od / (gamma * (od + gamma) * lnq)
    h12 = (gamma + od * od * q) / (od * (od + gamma) * qd1 * lnq)
    h22_num = od**3 * q * q * (od + 2.0 * gamma) + (2.0 * od * q - 1.0) * (
        gamma * gamma - gamma * od - od * od
    )
    h22 = h22_num / (od * od * (od + gamma) * qd1 * qd1 * lnq)
    return np.array([[h11, h12], [h12, h22]], dtype=float)


def inner_bound(q: int, gamma: float, delta: float) -> BoundValue:
    """Achievable rate of random codes under ``gamma`` insertions, ``delta`` deletions.

    ``raw = 1 - (1-delta+gamma) H_q(gamma/(1-delta+gamma)) - H_q(delta)
    + gamma log_q(q-1)``, the exponent left over after a union bound over
    received words weighted by insertion-deletion ball volumes.
    """
    q = check_alphabet(q)
    gamma, delta = float(gamma), float(delta)
    if not -_DOMAIN_TOL <= delta <= (1.0 - 1.0 / q) + _DOMAIN_TOL:
        raise DomainError(f"delta must be in [0, 1 - 1/q], got {delta}")
    if not -_DOMAIN_TOL <= gamma <= (q - 1) + _DOMAIN_TOL:
        raise DomainError(f"gamma must be in [0, {q - 1}], got {gamma}")
    delta = min(max(delta, 0.0), 1.0 - 1.0 / q)
    gamma = min(max(gamma, 0.0), float(q - 1))
    if gamma == 0.0 and delta == 0.0:
        return BoundValue.from_raw(1.0, SRC_INNER)
    stretched = 1.0 - delta + gamma
    raw = (
        1.0
        - stretched * q_ary_entropy(gamma / stretched, q)
        - q_ary_entropy(delta, q)
        + gamma * _logq(q - 1, q)
    )
    return BoundValue.from_raw(raw, SRC_INNER)
