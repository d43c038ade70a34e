"""Exact quasi-polynomial structure of fusion dimension tables.

A quasi-polynomial of period T is a family of T polynomials, one per
residue class of the argument mod T. Fitting is exact: coefficients are
rational, interpolation goes through Newton divided differences over
Fraction arithmetic, and a candidate (T, class polynomials) is accepted
only when every supplied sample is reproduced exactly. The smallest
period that works wins.

The leading coefficient of the fitted polynomial is the quantity of
interest: for a genus g table without punctures it carries the volume
of the underlying moduli space, and the degree equals its complex
dimension, (g-1) dim(g) for g >= 2 and the rank for g = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, QuasiPolynomialFitError
from .exactlinalg import eval_poly, newton_interpolate
from .lie import RootSystem, Weight
from .verlinde import VerlindeRequest, verlinde_dimension

DEFAULT_MAX_PERIOD = 4


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    coeffs: tuple[tuple[Fraction, ...], ...]  # ascending, one tuple per residue

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise PreconditionError("need one coefficient tuple per residue class")

    @property
    def degree(self) -> int:
        best = 0
        for cls in self.coeffs:
            nonzero = [i for i, c in enumerate(cls) if c != 0]
            if nonzero:
                best = max(best, nonzero[-1])
        return best

    def leading_by_class(self) -> tuple[Fraction, ...]:
        d = self.degree
        return tuple(cls[d] if d < len(cls) else Fraction(0) for cls in self.coeffs)

    def evaluate(self, k: int) -> Fraction:
        cls = self.coeffs[k % self.period]
        return eval_poly(cls, Fraction(k))


def _trim(coeffs):
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def fit_quasi_polynomial(points, degree_bound: int,
                         max_period: int = DEFAULT_MAX_PERIOD) -> QuasiPolynomial:
    """Minimal-period exact fit of integer-argument samples.

    points: iterable of (k, value) with distinct positive integer k and
    rational value. A candidate period is tried only when each of its
    residue classes holds degree_bound + 1 interpolation nodes and at
    least one sample overall is left to cross-validate the fit; a
    candidate that merely interpolates would accept arbitrary data.
    Raises QuasiPolynomialFitError when no feasible period up to
    max_period reproduces all samples; best_residual then reports how
    close the best candidate came.
    """
    pts = sorted((int(k), Fraction(v)) for k, v in points)
    if degree_bound < 0 or max_period < 1:
        raise PreconditionError("degree_bound must be >= 0 and max_period >= 1")
    if any(k < 1 for k, _ in pts):
        raise PreconditionError("sample arguments must be positive")
    if len(set(k for k, _ in pts)) != len(pts):
        raise PreconditionError("duplicate sample arguments")
    if len(pts) < degree_bound + 1:
        raise PreconditionError(
            "need at least %d samples for degree %d, got %d"
            % (degree_bound + 1, degree_bound, len(pts)))

    best_residual = None
    evaluated_any = False
    for period in range(1, max_period + 1):
        classes = [[] for _ in range(period)]
        for k, v in pts:
            classes[k % period].append((k, v))
        if any(len(cls) < degree_bound + 1 for cls in classes):
            continue
        if len(pts) < period * (degree_bound + 1) + 1:
            continue
        evaluated_any = True
        fitted = []
        worst = Fraction(0)
        ok = True
        for cls in classes:
            nodes = cls[:degree_bound + 1]
            coeffs = newton_interpolate(nodes)
            for k, v in cls[degree_bound + 1:]:
                err = abs(eval_poly(coeffs, Fraction(k)) - v)
                if err != 0:
                    ok = False
                    worst = max(worst, err)
            fitted.append(_trim(coeffs))
        if ok:
            return QuasiPolynomial(period=period, coeffs=tuple(fitted))
        res = float(worst)
        if best_residual is None or res < best_residual:
            best_residual = res
    if not evaluated_any:
        raise PreconditionError(
            "no candidate period leaves a cross-validation sample; "
            "supply more than %d samples" % (degree_bound + 1))
    raise QuasiPolynomialFitError(
        "no quasi-polynomial of degree <= %d and period <= %d matches the samples"
        % (degree_bound, max_period), best_residual=best_residual)


@dataclass(frozen=True)
class PairingReport:
    genus: int
    labels: tuple[tuple[int, ...], ...]
    levels: tuple[int, ...]
    values: tuple[int, ...]
    qp: QuasiPolynomial
    degree: int
    expected_degree: int | None
    degree_matches: bool | None
    leading_by_class: tuple[Fraction, ...]
    predictions: tuple[tuple[int, int], ...]
    prediction_errors: tuple[int, ...]


def pairing_report(rs: RootSystem, genus: int, k_min: int, k_max: int,
                   labels=(), degree_bound: int | None = None,
                   max_period: int = DEFAULT_MAX_PERIOD, horizon: int = 5,
                   check_predictions: bool = True) -> PairingReport:
    """Fit a level window of fusion dimensions and extrapolate past it.

    The window [k_min, k_max] is fitted exactly; the next `horizon`
    levels are predicted from the fit and, when check_predictions is
    set, re-derived independently so the report carries the actual
    prediction errors (all zero for a sound fit).
    """
    if genus < 1:
        raise PreconditionError("genus must be >= 1")
    if k_min < 1 or k_max < k_min:
        raise PreconditionError("need 1 <= k_min <= k_max")
    labels = tuple(tuple(int(c) for c in lab) for lab in labels)
    label_weights = tuple(Weight(lab) for lab in labels)
    if degree_bound is None:
        base = rs.rank if genus == 1 else (genus - 1) * rs.dimension
        degree_bound = base + len(labels) * rs.num_positive_roots
    levels = tuple(range(k_min, k_max + 1))
    usable = [k for k in levels
              if all(rs.level_of(lab) <= k for lab in label_weights)]
    if len(usable) != len(levels):
        raise PreconditionError(
            "labels must be integrable at every level of the window")
    values = tuple(verlinde_dimension(
        VerlindeRequest(rs=rs, level=k, genus=genus, labels=label_weights))
        for k in levels)
    qp = fit_quasi_polynomial(zip(levels, values), degree_bound=degree_bound,
                              max_period=max_period)
    expected = None
    matches = None
    if not labels:
        expected = rs.rank if genus == 1 else (genus - 1) * rs.dimension
        matches = qp.degree == expected
    preds = []
    errors = []
    for k in range(k_max + 1, k_max + 1 + horizon):
        pred = qp.evaluate(k)
        if pred.denominator != 1:
            raise QuasiPolynomialFitError(
                "prediction at level %d is not integral: %s" % (k, pred))
        preds.append((k, int(pred)))
        if check_predictions:
            direct = verlinde_dimension(
                VerlindeRequest(rs=rs, level=k, genus=genus,
                                labels=label_weights))
            errors.append(int(pred) - direct)
    return PairingReport(genus=genus, labels=labels, levels=levels,
                         values=values, qp=qp, degree=qp.degree,
                         expected_degree=expected, degree_matches=matches,
                         leading_by_class=qp.leading_by_class(),
                         predictions=tuple(preds),
                         prediction_errors=tuple(errors))
