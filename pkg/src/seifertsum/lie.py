"""Root systems, Weyl groups, and characters for the A series.

Conventions, fixed once for the whole package:

* The invariant form is normalised so long roots have squared length 2.
  For A_r every root is long, the Cartan matrix is the Gram matrix of the
  simple roots, and the fundamental-weight Gram matrix is its inverse.
* Weights are stored by their integer coordinates in the fundamental
  weight basis; roots by integer coordinates in the simple root basis.
* A Cartan point x is stored by coordinates in the simple coroot basis,
  so the pairing of a weight mu with x is the plain dot product of
  coordinate vectors and a root functional evaluates as
  alpha(x) = dot(fw_coords(alpha), coords(x)).
* Lattice pairings are exact fractions; only transcendental evaluation
  (characters, genus functions) uses floating point, binary64 first with
  an mpmath fallback near non-regular points.

Weyl characters are the alternating-sum ratio

    chi_Lambda(x) = sum_w eps(w) e^{<w(Lambda+rho), x>}
                  / sum_w eps(w) e^{<w rho, x>},

regularised near walls by evaluating at x + t*delta for a regular
direction delta, t in {1e-4, 5e-5, 2.5e-5}, and Richardson-extrapolating
the three values (done at 50-digit precision so the alternating sums do
not lose the limit to cancellation).
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

import mpmath as mp

from .errors import (
    PreconditionError,
    UnsupportedAlgebraError,
    WeylGroupTooLargeError,
)

DEFAULT_WEYL_BOUND = 3_628_800  # 10!

_RICHARDSON_STEPS = (1e-4, 5e-5, 2.5e-5)
_SINGULAR_THRESHOLD = 1e-6
_FALLBACK_DPS = 50


@dataclass(frozen=True)
class Weight:
    """Integer coordinates in the fundamental weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))


@dataclass(frozen=True)
class CartanElement:
    """Complex coordinates in the simple coroot basis."""

    coords: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(complex(c) for c in self.coords))


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element.

    weight_matrix acts on fundamental-weight coordinates, cartan_matrix is
    the contragredient action on coroot coordinates; both are integral and
    sign is the determinant.
    """

    weight_matrix: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    sign: int

    def apply_weight(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(row[j] * coords[j] for j in range(len(coords)))
                     for row in self.weight_matrix)

    def apply_cartan(self, coords: Sequence[complex]) -> tuple[complex, ...]:
        return tuple(sum(row[j] * coords[j] for j in range(len(coords)))
                     for row in self.cartan_matrix)


@dataclass(frozen=True)
class RootSystem:
    """Finite root system data for one simple series entry."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]       # simple root basis
    positive_roots_fw: tuple[tuple[int, ...], ...]    # fundamental weight basis
    gram_fw: tuple[tuple[Q, ...], ...]                # <omega_i, omega_j>
    rho: Weight
    highest_root_fw: tuple[int, ...]
    dual_coxeter: int
    centre_order: int

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank))
                     for i in range(self.rank))

    @property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        return tuple(Weight(tuple(int(i == j) for j in range(self.rank)))
                     for i in range(self.rank))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        """dim of the Lie algebra: 2 |Delta_+| + rank."""
        return 2 * self.num_positive_roots + self.rank

    def ip(self, a: Sequence[int], b: Sequence[int]) -> Q:
        """Invariant form on weight-lattice coordinates, exact."""
        total = Q(0)
        for i, ai in enumerate(a):
            if ai:
                row = self.gram_fw[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * row[j] * bj
        return total

    def ip_weights(self, a: Weight, b: Weight) -> Q:
        return self.ip(a.coords, b.coords)

    def pair(self, fw_coords: Sequence[int], x: CartanElement) -> complex:
        """<mu, x> for mu in fw coordinates, x in coroot coordinates."""
        return sum(m * xc for m, xc in zip(fw_coords, x.coords))

    def root_value(self, root_fw: Sequence[int], x: CartanElement) -> complex:
        return self.pair(root_fw, x)

    def level_of(self, weight: Weight) -> int:
        lev = self.ip(weight.coords, self.highest_root_fw)
        if lev.denominator != 1:
            raise PreconditionError("non-integral level for %r" % (weight,))
        return int(lev)

    def cartan_point(self, weight_like: Sequence, scale: complex = 1.0) -> CartanElement:
        """Cartan element representing scale * (weight_like) under the form.

        weight_like is given in fw coordinates; the returned coroot
        coordinates satisfy <mu, x> = scale * <mu, weight_like> for all mu.
        """
        coords = tuple(
            scale * complex(sum(self.gram_fw[i][j] * Q(weight_like[j])
                                for j in range(self.rank)))
            for i in range(self.rank))
        return CartanElement(coords)

    def weyl_group(self, max_order: int = DEFAULT_WEYL_BOUND) -> tuple[WeylElement, ...]:
        return _weyl_group_cached(self.series, self.rank, max_order)


@functools.lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system; only the A series is implemented.

    The B, C, and D series are deliberate extension points: everything
    downstream consumes only the fields stored on RootSystem, so adding a
    series means supplying its Cartan matrix, positive roots, highest
    root, dual Coxeter number, and centre order here.
    """
    series = str(series).strip().upper()
    if rank < 1:
        raise PreconditionError("rank must be >= 1")
    if series != "A":
        raise UnsupportedAlgebraError("unsupported algebra: %s%d" % (series, rank))

    r = rank
    cartan = tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0)
                         for j in range(r)) for i in range(r))
    # positive roots of A_r: alpha_i + ... + alpha_j for i <= j
    pos = tuple(tuple(1 if i <= t <= j else 0 for t in range(r))
                for i in range(r) for j in range(i, r))
    pos_fw = tuple(_root_to_fw(cartan, c) for c in pos)
    from .exactlinalg import rational_matrix_inverse

    gram = rational_matrix_inverse(cartan)
    theta = tuple(1 for _ in range(r))
    theta_fw = _root_to_fw(cartan, theta)
    return RootSystem(
        series=series,
        rank=r,
        cartan=cartan,
        positive_roots=pos,
        positive_roots_fw=pos_fw,
        gram_fw=gram,
        rho=Weight((1,) * r),
        highest_root_fw=theta_fw,
        dual_coxeter=r + 1,
        centre_order=r + 1,
    )


def _root_to_fw(cartan, root_coords) -> tuple[int, ...]:
    r = len(cartan)
    return tuple(sum(root_coords[i] * cartan[i][j] for i in range(r))
                 for j in range(r))


@functools.lru_cache(maxsize=None)
def _weyl_group_cached(series: str, rank: int, max_order: int) -> tuple[WeylElement, ...]:
    rs = build_root_system(series, rank)
    order = 1
    for i in range(2, rank + 2):
        order *= i
    if order > max_order:
        raise WeylGroupTooLargeError(
            "Weyl group order %d exceeds bound %d" % (order, max_order))

    r = rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    def reflection_weight(i):
        # s_i(mu)_j = mu_j - cartan[i][j] * mu_i
        return tuple(tuple((int(j == t) - (rs.cartan[i][j] if t == i else 0))
                           for t in range(r)) for j in range(r))

    gens = [reflection_weight(i) for i in range(r)]

    def matmul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(r))
                           for j in range(r)) for i in range(r))

    def transpose(a):
        return tuple(tuple(a[j][i] for j in range(r)) for i in range(r))

    seen = {ident: (transpose(ident), 1)}
    frontier = [ident]
    while frontier:
        next_frontier = []
        for w in frontier:
            wc, ws = seen[w]
            for g in gens:
                nw = matmul(g, w)
                if nw not in seen:
                    seen[nw] = (matmul(transpose(g), wc), -ws)
                    next_frontier.append(nw)
        frontier = next_frontier
    if len(seen) != order:
        raise RuntimeError("Weyl closure produced %d elements, expected %d"
                           % (len(seen), order))
    elements = [WeylElement(weight_matrix=w, cartan_matrix=c, sign=s)
                for w, (c, s) in seen.items()]
    # identity first, then a deterministic order
    elements.sort(key=lambda e: (e.weight_matrix != ident, e.weight_matrix))
    return tuple(elements)


def weyl_group(rs: RootSystem, max_order: int = DEFAULT_WEYL_BOUND) -> tuple[WeylElement, ...]:
    return rs.weyl_group(max_order)


def casimir(rs: RootSystem, weight: Weight) -> Q:
    """Quadratic Casimir <Lambda, Lambda + 2 rho>, exact rational."""
    if not weight.is_dominant:
        raise PreconditionError("casimir expects a dominant weight")
    shifted = tuple(c + 2 for c in weight.coords)
    return rs.ip(weight.coords, shifted)


def shifted_norm(rs: RootSystem, weight: Weight) -> Q:
    """<Lambda + rho, Lambda + rho>, exact rational."""
    lam = tuple(c + 1 for c in weight.coords)
    return rs.ip(lam, lam)


def weyl_dimension(rs: RootSystem, weight: Weight) -> int:
    """prod_{alpha>0} <Lambda+rho, alpha> / <rho, alpha>."""
    if not weight.is_dominant:
        raise PreconditionError("weyl_dimension expects a dominant weight")
    lam = tuple(c + 1 for c in weight.coords)
    num = Q(1)
    den = Q(1)
    for root_fw, root in zip(rs.positive_roots_fw, rs.positive_roots):
        # <mu, alpha> = dot(fw coords of mu, simple-root coords of alpha)
        # times nothing extra in the simply laced normalisation
        num *= sum(l * c for l, c in zip(lam, root))
        den *= sum(c for c in root)
    dim = num / den
    if dim.denominator != 1 or dim <= 0:
        raise RuntimeError("Weyl dimension came out non-integral: %s" % dim)
    return int(dim)


def _alternating_sum(rs: RootSystem, lam_fw: Sequence[int], x: CartanElement) -> complex:
    total = 0j
    for el in rs.weyl_group():
        wl = el.apply_weight(lam_fw)
        total += el.sign * cmath.exp(rs.pair(wl, x))
    return total


def weyl_denominator_product(rs: RootSystem, x: CartanElement) -> complex:
    """prod_{alpha>0} 2 sinh(alpha(x)/2), equal to the rho alternating sum."""
    prod = 1.0 + 0j
    for root_fw in rs.positive_roots_fw:
        prod *= 2 * cmath.sinh(rs.root_value(root_fw, x) / 2)
    return prod


def is_regular(rs: RootSystem, x: CartanElement,
               threshold: float = _SINGULAR_THRESHOLD) -> bool:
    """True when every sinh(alpha(x)/2) stays away from zero.

    This also excludes the affine walls alpha(x) in 2*pi*i*Z where the
    alternating-sum ratio degenerates even though the character is finite.
    """
    for root_fw in rs.positive_roots_fw:
        if abs(cmath.sinh(rs.root_value(root_fw, x) / 2)) < threshold:
            return False
    return True


def _mp_pair(fw_coords, x_coords):
    total = mp.mpc(0)
    for m, xc in zip(fw_coords, x_coords):
        if m:
            total += m * xc
    return total


def _character_mp(rs: RootSystem, lam_fw, x_coords) -> complex:
    num = mp.mpc(0)
    den = mp.mpc(0)
    rho = rs.rho.coords
    for el in rs.weyl_group():
        wl = el.apply_weight(lam_fw)
        wr = el.apply_weight(rho)
        num += el.sign * mp.exp(_mp_pair(wl, x_coords))
        den += el.sign * mp.exp(_mp_pair(wr, x_coords))
    return num / den


def _regular_direction(rs: RootSystem) -> tuple[complex, ...]:
    # the rho point: alpha(delta) = <alpha, rho> >= 1 for every positive root
    return rs.cartan_point(rs.rho.coords).coords


def richardson_limit(values: Sequence[complex]) -> complex:
    """Eliminate O(t) and O(t^2) from three evaluations at t, t/2, t/4."""
    f1, f2, f3 = values
    g1 = 2 * f2 - f1
    g2 = 2 * f3 - f2
    return (4 * g2 - g1) / 3


def _limit_eval(rs: RootSystem, x: CartanElement, eval_mp) -> complex:
    """Richardson limit of eval_mp(x + t*delta) along the rho direction."""
    delta = _regular_direction(rs)
    with mp.workdps(_FALLBACK_DPS):
        xs = [mp.mpc(c) for c in x.coords]
        vals = []
        for t in _RICHARDSON_STEPS:
            shifted = tuple(xc + t * dc for xc, dc in zip(xs, delta))
            vals.append(eval_mp(shifted))
        limit = richardson_limit(vals)
        return complex(limit)


def weyl_character(rs: RootSystem, weight: Weight, x: CartanElement) -> complex:
    """Character of the irrep with highest weight Lambda at the point x."""
    if not weight.is_dominant:
        raise PreconditionError("weyl_character expects a dominant weight")
    if len(x.coords) != rs.rank:
        raise PreconditionError("point dimension mismatch")
    if all(c == 0 for c in x.coords):
        return complex(weyl_dimension(rs, weight))
    lam = tuple(c + 1 for c in weight.coords)
    if is_regular(rs, x):
        num = _alternating_sum(rs, lam, x)
        den = _alternating_sum(rs, rs.rho.coords, x)
        return num / den
    return _limit_eval(rs, x, lambda xc: _character_mp(rs, lam, xc))
