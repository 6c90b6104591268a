"""Fast self-check suites behind the ``verify`` CLI subcommand.

Each check is a trimmed-down version of an invariant from the test
suite, sized to run in a few seconds total.  A check returns an error
string on failure and ``None`` on success.
"""

from __future__ import annotations

import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import bounds, geometry, optimizer, oracles, surface


def _check_entropy() -> str | None:
    for q in (2, 3, 5, 8):
        peak = bounds.q_ary_entropy(1.0 - 1.0 / q, q)
        if abs(peak - 1.0) > 1e-12:
            return f"H_{q} peak is {peak}, expected 1"
        values = [bounds.q_ary_entropy(i / 200, q) for i in range(201)]
        if max(values) > 1.0 + 1e-12:
            return f"H_{q} exceeds 1 on the grid"
        for a, b, c in zip(values, values[1:], values[2:]):
            if a - 2 * b + c > 1e-12:
                return f"H_{q} is not concave on the grid"
    return None


def _check_insertion_matches_surface() -> str | None:
    for q in (2, 4, 7):
        for i in range(201):
            g = i / 200 * (q - 1)
            a = bounds.insertion_only_bound(q, g).raw
            b = bounds.spoke_surface_value(q, g, 0.0)
            if abs(a - b) > 1e-12:
                return f"insertion-only and surface disagree at q={q}, gamma={g}: {a} vs {b}"
    return None


def _check_spoke_matches_surface() -> str | None:
    for q in (3, 5, 8):
        for d in range(q - 1):
            for j in range(51):
                gp = j / 50 * (q - d - 1)
                a = bounds.spoke_bound(q, d, gp).raw
                b = bounds.spoke_surface_value(q, gp * (1 - d / q), d / q)
                if abs(a - b) > 1e-12:
                    return f"spoke and surface disagree at q={q}, d={d}, g'={gp}"
    return None


def _check_breakpoints_exact() -> str | None:
    for q in range(2, 17):
        for d in range(q):
            a = bounds.spoke_bound(q, d, 0.0).rate
            b = bounds.deletion_only_piecewise_bound(q, d / q).rate
            if a != b:
                return f"breakpoint mismatch at q={q}, d={d}: {a} vs {b}"
    return None


def _check_hessian() -> str | None:
    h = 1e-5
    for q in (2, 5, 8):
        for i in range(1, 12):
            delta = i / 12 * (1 - 1 / q) * 0.95
            gmax = bounds.surface_gamma_max(q, delta)
            for j in range(1, 12):
                gamma = j / 12 * gmax * 0.95
                mat = bounds.spoke_surface_hessian(q, gamma, delta)
                if mat[0, 1] != mat[1, 0]:
                    return "hessian asymmetry"
                tr = mat[0, 0] + mat[1, 1]
                det = mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]
                disc = tr * tr - 4 * det
                if tr < -1e-9 or det < -1e-9 or disc < -1e-9:
                    return f"PSD certificate failed at q={q}, ({gamma}, {delta})"
                fd = (
                    bounds.spoke_surface_value(q, gamma + h, delta)
                    - 2 * bounds.spoke_surface_value(q, gamma, delta)
                    + bounds.spoke_surface_value(q, gamma - h, delta)
                ) / (h * h)
                if abs(fd - mat[0, 0]) > 1e-4 * max(1.0, abs(mat[0, 0])):
                    return f"d2/dgamma2 mismatch at q={q}, ({gamma}, {delta})"
    return None


def _check_inner_below_outer() -> str | None:
    for q in (2, 5, 8):
        for i in range(40):
            for j in range(40):
                g = i / 39 * (q - 1)
                d = j / 39 * (1 - 1 / q)
                inner = bounds.inner_bound(q, g, d).rate
                outer = optimizer.interpolated_outer_bound(q, g, d).rate
                if inner > outer + 1e-9:
                    return f"inner exceeds outer at q={q}, ({g}, {d}): {inner} > {outer}"
    return None


def _check_polygon() -> str | None:
    for q in range(2, 17):
        poly = geometry.build_polygon(q)
        if len(poly.vertices) != q + 1:
            return f"polygon for q={q} has {len(poly.vertices)} vertices"
        chain = poly.chain()
        for (x1, y1), (x2, y2), (x3, y3) in zip(chain, chain[1:], chain[2:]):
            cross = (x2 - x1) * (y3 - y2) - (y2 - y1) * (x3 - x2)
            if cross >= 0:
                return f"chain turn at q={q} is not consistently concave"
        result = poly.scaling_alpha((0.3 * (q - 1), 0.2 * (1 - 1 / q)))
        doubled = poly.scaling_alpha((0.6 * (q - 1), 0.4 * (1 - 1 / q)))
        if abs(result.alpha - 2 * doubled.alpha) > 1e-9 * result.alpha:
            return f"ray invariance failed for q={q}"
    return None


def _check_zero_level_set() -> str | None:
    for q in (2, 5, 8):
        poly = geometry.build_polygon(q)
        for (g1, d1), (g2, d2) in poly.chain_segments():
            for k in range(21):
                t = Fraction(k, 20)
                g = float(g1 + t * (g2 - g1))
                d = float(d1 + t * (d2 - d1))
                rate = optimizer.interpolated_outer_bound(q, g, d).rate
                if rate > 1e-6:
                    return f"bound positive on the chain at q={q}, ({g}, {d}): {rate}"
                inside = optimizer.interpolated_outer_bound(q, 0.99 * g, 0.99 * d)
                if not inside.rate > 0:
                    return f"bound vanishes inside the polygon at q={q}, ({g}, {d})"
    return None


def _check_optimizer_minimality() -> str | None:
    cases = [(5, 0.5, 0.3), (4, 0.9, 0.18), (7, 1.4, 0.4), (8, 0.05, 0.55)]
    for q, gamma, delta in cases:
        split = optimizer.optimal_gamma0(q, gamma, delta)
        setup = optimizer.interpolation_setup(q, delta)
        hi = gamma / setup.n0_weight
        for k in range(101):
            probe = k / 100 * hi
            value = optimizer.interpolated_bound_at_split(q, gamma, delta, probe)
            if value < split.objective - 1e-9:
                return f"split at {probe} beats the optimum at q={q}, ({gamma}, {delta})"
    return None


def _check_seam_continuity() -> str | None:
    h = 1e-7
    for q in (3, 5, 8):
        for d in range(1, q - 1):
            delta = d / q
            gmax = bounds.surface_gamma_max(q, delta)
            for frac in (0.0, 0.4):
                g = frac * gmax
                lo = optimizer.interpolated_outer_bound(q, g, delta - h).rate
                hi_ = optimizer.interpolated_outer_bound(q, g, delta + h).rate
                if abs(lo - hi_) > 1e-6:
                    return f"seam jump {abs(lo - hi_)} at q={q}, d={d}, gamma={g}"
    return None


def _check_levenshtein_counts() -> str | None:
    for q in (2, 3):
        for n in range(0, 4):
            for t in range(0, 3):
                expected = oracles.supersequence_count_exact_length(n, t, q)
                for symbols in oracles.iter_words(q, [n]):
                    ball = oracles.enumerate_ball(
                        oracles.BallSpec(
                            center=oracles.Word(symbols, q),
                            insertions=t,
                            deletions=0,
                            length_mode=oracles.EXACT_FINAL_LENGTH,
                        )
                    )
                    if len(ball) != expected:
                        return f"count mismatch at q={q}, n={n}, t={t}, center={symbols}"
    return None


def _check_containment() -> str | None:
    for q in (2, 3):
        for k in range(0, 4):
            for symbols in oracles.iter_words(q, [k]):
                y = oracles.Word(symbols, q)
                for m in range(k, k + 4):
                    oracles.containment_probability(y, m)  # raises on disagreement
    return None


def _check_ball_vs_reachable() -> str | None:
    center = oracles.Word.parse("0102", 3)
    ball = oracles.enumerate_ball(
        oracles.BallSpec(center=center, insertions=1, deletions=1)
    )
    for w in ball:
        if not oracles.reachable(center, w, 1, 1):
            return f"ball word {w.text()} not reachable"
    for symbols in oracles.iter_words(3, [3, 4, 5]):
        w = oracles.Word(symbols, 3)
        if (w in ball) != oracles.reachable(center, w, 1, 1):
            return f"ball/reachable disagree on {w.text()}"
    return None


def _check_csv_roundtrip() -> str | None:
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "grid.csv"
        grid = surface.emit_surface(3, "combined-outer", 8, "csv", path)
        loaded = surface.load_surface_csv(path, 3)
        if surface.surface_to_csv(loaded) != path.read_text():
            return "CSV round trip is not idempotent"
        if loaded.rates().shape != grid.rates().shape:
            return "CSV round trip changed the grid shape"
    return None


CHECKS: tuple[tuple[str, Callable[[], str | None]], ...] = (
    ("entropy-max-and-concavity", _check_entropy),
    ("insertion-only-matches-surface", _check_insertion_matches_surface),
    ("spoke-matches-surface", _check_spoke_matches_surface),
    ("deletion-breakpoints-exact", _check_breakpoints_exact),
    ("hessian-psd-and-finite-difference", _check_hessian),
    ("inner-below-outer", _check_inner_below_outer),
    ("polygon-concavity-and-ray-invariance", _check_polygon),
    ("outer-zero-set-on-chain", _check_zero_level_set),
    ("optimizer-minimality", _check_optimizer_minimality),
    ("seam-continuity", _check_seam_continuity),
    ("levenshtein-counts-exhaustive", _check_levenshtein_counts),
    ("containment-dual-oracle", _check_containment),
    ("ball-matches-reachable", _check_ball_vs_reachable),
    ("csv-round-trip", _check_csv_roundtrip),
)


def run_all(verbose: bool = True) -> int:
    """Run every check; print one line per check; return the failure count."""
    failures = 0
    for name, check in CHECKS:
        try:
            error = check()
        except Exception as exc:  # a crashed check is a failed check
            error = f"{type(exc).__name__}: {exc}"
        if error is None:
            if verbose:
                print(f"PASS {name}")
        else:
            failures += 1
            if verbose:
                print(f"FAIL {name}: {error}")
    return failures
