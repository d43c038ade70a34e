"""Cross-module consistency suites.

Every check here ties two independent computational routes to the same
quantity and reports the residual. The quick suite is a smoke screen
that runs in seconds; the full suite adds the expensive anchors
(integer tables, flat-space zeta values, extrapolation of exact fits)
and is the thing to run before trusting a new environment.

Checks draw their sample points from a seeded generator, so a repeated
run with the same seed reproduces every residual bit for bit.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .genera import a_hat_function, j_function, partial_euler_product
from .lie import CartanElement, RootSystem, Weight, build_root_system, weyl_character
from .modular import modular_data
from .orbits import (
    dh_weyl_sum,
    kirillov_check,
    orbit_from_highest_weight,
    quantum_character_point,
    su2_orbit_quadrature,
    wilson_weight,
)
from .quasipoly import pairing_report
from .seifert import SeifertSpec, seifert_partition
from .verlinde import VerlindeRequest, verlinde_dimension, verlinde_sum
from .ym2 import YM2Request, verlinde_ym2_crosscheck, ym2_epsilon_profile, ym2_partition

QUICK_TIME_BUDGET = 30.0
FULL_TIME_BUDGET = 600.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    threshold: float
    detail: str
    elapsed: float  # excluded from serialised reports, wall time is not reproducible


@dataclass(frozen=True)
class SuiteReport:
    mode: str
    seed: int
    checks: tuple[CheckResult, ...]
    passed: bool
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "mode": self.mode,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed,
                 "residual": c.residual if math.isfinite(c.residual) else None,
                 "threshold": c.threshold if math.isfinite(c.threshold) else None,
                 "detail": c.detail}
                for c in self.checks
            ],
        }


def _small_point(rs: RootSystem, rng, scale: float = 0.4) -> CartanElement:
    coords = scale * (0.25 + rng.random(rs.rank))
    return CartanElement(tuple(complex(c) for c in coords))


def _check_sinh_sin_link(rng):
    worst = 0.0
    for series, rank in (("A", 1), ("A", 2), ("A", 3)):
        rs = build_root_system(series, rank)
        for g in (0, 2, 3):
            x = _small_point(rs, rng)
            rotated = CartanElement(tuple(1j * c for c in x.coords))
            lhs = a_hat_function(rs, x, g)
            rhs = j_function(rs, rotated) ** (1 - g)
            worst = max(worst, abs(lhs - rhs))
    return worst, "multiplicative genus at ix against squared sinc genus"


def _check_euler_product(rng):
    rs = build_root_system("A", 2)
    x = _small_point(rs, rng)
    exact = j_function(rs, x)
    coarse = abs(partial_euler_product(rs, x, 500) - exact)
    fine = abs(partial_euler_product(rs, x, 4000) - exact)
    if fine * 4 > coarse:
        return math.inf, "truncated product is not converging at rate 1/N"
    return fine, "truncated infinite product vs closed product at N=4000"


def _check_kirillov(rng):
    worst = 0.0
    cases = [("A", 1, (2,)), ("A", 1, (5,)), ("A", 2, (1, 2)), ("A", 2, (3, 1))]
    for series, rank, coords in cases:
        rs = build_root_system(series, rank)
        x = _small_point(rs, rng, scale=0.6)
        worst = max(worst, kirillov_check(rs, Weight(coords), x))
    return worst, "character times half-density vs orbit transform"


def _check_su2_quadrature(rng):
    worst = 0.0
    for j_label in (0.5, 1.0, 1.5, 3.0):
        t = 0.3 + 0.5 * rng.random()
        rs = build_root_system("A", 1)
        orbit = orbit_from_highest_weight(rs, Weight((int(round(2 * j_label)),)))
        closed = dh_weyl_sum(orbit, CartanElement((complex(t),)))
        quad = su2_orbit_quadrature(j_label, t)
        worst = max(worst, abs(closed - quad))
    return worst, "alternating Weyl sum vs Gauss-Legendre sphere integral"


def _check_modular_certificates(rng):
    worst = 0.0
    residual_keys = ("unitarity", "symmetry", "row0_imag",
                     "conjugation_permutation", "st_cubed")
    for series, rank, level in (("A", 1, 3), ("A", 2, 2)):
        md = modular_data(build_root_system(series, rank), level)
        worst = max(worst, max(md.certificate[k] for k in residual_keys))
        if md.certificate["row0_min"] <= 0 or not md.certificate["involution"]:
            return math.inf, "vacuum row or conjugation square failed"
    return worst, "unitarity, conjugation and (ST)^3 = S^2 residuals"


def _check_degree_zero_reduction(rng):
    worst = 0.0
    for series, rank, level, genus in (("A", 1, 4, 2), ("A", 2, 3, 1)):
        rs = build_root_system(series, rank)
        z = seifert_partition(SeifertSpec(rs=rs, level=level, genus=genus, degree=0))
        v = verlinde_sum(VerlindeRequest(rs=rs, level=level, genus=genus))
        worst = max(worst, abs(z.value - v))
    return worst, "degree-zero fibration sum against fusion dimension"


def _check_sphere_anchor(rng):
    worst = 0.0
    for level in (1, 2, 3):
        rs = build_root_system("A", 1)
        md = modular_data(rs, level)
        z = seifert_partition(
            SeifertSpec(rs=rs, level=level, genus=0, degree=1), modular=md)
        worst = max(worst, abs(z.modulus - float(np.abs(md.s[0, 0]))))
    return worst, "degree-one sphere bundle modulus against S[0,0]"


def _check_orientation_conjugation(rng):
    rs = build_root_system("A", 1)
    worst = 0.0
    for degree in (1, 2, 5):
        zp = seifert_partition(SeifertSpec(rs=rs, level=3, genus=1, degree=degree))
        zm = seifert_partition(SeifertSpec(rs=rs, level=3, genus=1, degree=-degree))
        worst = max(worst, abs(zp.value - zm.value.conjugate()))
    return worst, "degree reversal conjugates the bare sum"


def _check_verlinde_integer_table(rng):
    rs = build_root_system("A", 2)
    frozen = {1: 9, 2: 45, 3: 166, 4: 504}
    worst = 0
    for level, expected in frozen.items():
        got = verlinde_dimension(VerlindeRequest(rs=rs, level=level, genus=2))
        worst = max(worst, abs(got - expected))
    return float(worst), "rank-2 genus-2 dimensions against frozen integers"


def _check_flat_zeta_anchors(rng):
    rs = build_root_system("A", 1)
    anchors = {2: math.pi ** 2 / 6, 3: math.pi ** 4 / 90, 4: math.pi ** 6 / 945}
    worst = 0.0
    for genus, target in anchors.items():
        res = ym2_partition(YM2Request(rs=rs, genus=genus, epsilon=0.0))
        worst = max(worst, abs(res.value - target))
    return worst, "flat-coupling heat kernel sums against even zeta values"


def _check_quasipolynomial_extrapolation(rng):
    rs = build_root_system("A", 1)
    rep = pairing_report(rs, genus=2, k_min=1, k_max=12, max_period=3, horizon=5)
    if not rep.degree_matches:
        return math.inf, "fitted degree %d, moduli dimension %d" % (
            rep.degree, rep.expected_degree)
    return float(max(abs(e) for e in rep.prediction_errors)), \
        "exact window fit predicts five unseen levels"


def _check_verlinde_gluing(rng):
    rs = build_root_system("A", 2)
    level = 2
    md = modular_data(rs, level)
    total = verlinde_dimension(VerlindeRequest(rs=rs, level=level, genus=2))
    glued = 0
    for i, lam in enumerate(md.weights):
        left = verlinde_dimension(
            VerlindeRequest(rs=rs, level=level, genus=1, labels=(lam,)))
        lam_bar = md.weights[md.conjugation[i]]
        right = verlinde_dimension(
            VerlindeRequest(rs=rs, level=level, genus=1, labels=(lam_bar,)))
        glued += left * right
    return float(abs(total - glued)), "factorisation over a separating curve"


def _check_epsilon_profile(rng):
    rs = build_root_system("A", 1)
    prof = ym2_epsilon_profile(rs, genus=2, epsilons=(0.0, 0.125, 0.25, 0.5, 1.0))
    return abs(prof.rows[1][1] - prof.flat_value), \
        "deviation from the flat limit shrinks with the coupling"


def _check_wilson_character_point(rng):
    rs = build_root_system("A", 2)
    level = 2
    md = modular_data(rs, level)
    worst = 0.0
    for label in (Weight((1, 0)), Weight((1, 1)), Weight((0, 2))):
        for mu in (Weight((0, 0)), Weight((2, 0)), Weight((1, 1))):
            ratio = wilson_weight(rs, label, mu, level, modular=md)
            x = quantum_character_point(rs, mu, level)
            chi = weyl_character(rs, label, x)
            worst = max(worst, abs(ratio - chi))
    return worst, "matrix-element ratio against character at the shifted point"


def _check_verlinde_ym2_trend(rng):
    rs = build_root_system("A", 1)
    rep = verlinde_ym2_crosscheck(rs, genus=2, levels=(20, 40, 80, 160, 320))
    if not rep.converged:
        return math.inf, "scaled sequence gaps grew from %g to %g" % (
            rep.first_gap, rep.last_gap)
    return rep.last_gap, "scaled dimension growth approaches the flat sum"


_QUICK = (
    ("sinh-sin-link", _check_sinh_sin_link, 1e-10),
    ("euler-product-limit", _check_euler_product, 1e-2),
    ("kirillov-product-vs-sum", _check_kirillov, 1e-8),
    ("su2-orbit-quadrature", _check_su2_quadrature, 1e-10),
    ("modular-certificates", _check_modular_certificates, 1e-9),
    ("degree-zero-reduction", _check_degree_zero_reduction, 1e-9),
    ("sphere-anchor", _check_sphere_anchor, 1e-9),
    ("orientation-conjugation", _check_orientation_conjugation, 1e-9),
)

_FULL_EXTRA = (
    ("verlinde-integer-table", _check_verlinde_integer_table, 0.0),
    ("flat-zeta-anchors", _check_flat_zeta_anchors, 1e-9),
    ("quasipolynomial-extrapolation", _check_quasipolynomial_extrapolation, 0.0),
    ("verlinde-gluing", _check_verlinde_gluing, 0.0),
    ("epsilon-profile-monotone", _check_epsilon_profile, math.inf),
    ("wilson-character-point", _check_wilson_character_point, 1e-8),
    ("verlinde-ym2-trend", _check_verlinde_ym2_trend, 1e-2),
)


def run_crosschecks(mode: str = "quick", seed: int = 0) -> SuiteReport:
    """Run the named suite; mode is "quick" or "full"."""
    from .errors import PreconditionError

    if mode not in ("quick", "full"):
        raise PreconditionError("mode must be quick or full, got %r" % (mode,))
    rng = np.random.default_rng(seed)
    plan = _QUICK + (_FULL_EXTRA if mode == "full" else ())
    results = []
    suite_start = time.perf_counter()
    for name, fn, threshold in plan:
        start = time.perf_counter()
        try:
            residual, detail = fn(rng)
            passed = residual <= threshold
        except Exception as exc:
            residual = math.inf
            detail = "%s: %s" % (type(exc).__name__, exc)
            passed = False
        results.append(CheckResult(name=name, passed=passed, residual=residual,
                                   threshold=threshold, detail=detail,
                                   elapsed=time.perf_counter() - start))
    return SuiteReport(mode=mode, seed=seed, checks=tuple(results),
                       passed=all(c.passed for c in results),
                       elapsed=time.perf_counter() - suite_start)
