"""Kac-Peterson modular data for affine A series at integer level.

The S matrix is assembled from the Weyl alternating sum

    S[L, M] = i^{|Delta_+|} (kappa^r det(Cartan))^(-1/2)
              sum_w eps(w) exp(-2 pi i <w(L+rho), M+rho> / kappa),

with kappa = k + dual Coxeter number. T is diagonal with entries
exp(2 pi i (<L, L+2 rho>/(2 kappa) - c/24)) in the canonical framing,
c = k dim(g)/kappa, and without the -c/24 shift in the bare framing.

Every constructed matrix is certified: S symmetric and unitary, S^2 a
permutation (charge conjugation) squaring to the identity, row zero real
positive, and (S T)^3 = S^2 for the canonical T. A certification failure
triggers one retry at higher working precision before raising.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction as Q

import mpmath as mp
import numpy as np

from .errors import BudgetExceededError, CertificationError, PreconditionError
from .exactlinalg import rational_determinant
from .lie import RootSystem, Weight, casimir

DEFAULT_TOL = 1e-9
DEFAULT_BUDGET = 50_000_000
RETRY_DPS = 34  # about 113-bit software floats


def integrable_weights(rs: RootSystem, level: int) -> tuple[Weight, ...]:
    """Dominant weights with <Lambda, theta> <= k, lexicographic order."""
    if level < 0:
        raise PreconditionError("level must be >= 0")
    out = []
    for coords in itertools.product(range(level + 1), repeat=rs.rank):
        w = Weight(coords)
        if rs.level_of(w) <= level:
            out.append(w)
    out.sort(key=lambda w: w.coords)
    return tuple(out)


def central_charge(rs: RootSystem, level: int) -> float:
    return level * rs.dimension / (level + rs.dual_coxeter)


@dataclass
class ModularData:
    """Immutable S/T package for one (algebra, level) pair.

    Arrays are set read-only after certification so instances can be
    shared freely across threads.
    """

    rs: RootSystem
    level: int
    weights: tuple[Weight, ...]
    s: np.ndarray
    t_canonical: np.ndarray
    t_bare: np.ndarray
    conjugation: tuple[int, ...]
    precision_bits: int
    certificate: dict = field(default_factory=dict)
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {w.coords: i for i, w in enumerate(self.weights)}
        for arr in (self.s, self.t_canonical, self.t_bare):
            arr.setflags(write=False)

    @property
    def kappa(self) -> int:
        return self.level + self.rs.dual_coxeter

    def index_of(self, weight: Weight) -> int:
        try:
            return self._index[weight.coords]
        except KeyError:
            raise PreconditionError(
                "weight %r is not integrable at level %d"
                % (weight.coords, self.level)) from None

    def t_diagonal(self, framing_convention: str = "canonical") -> np.ndarray:
        if framing_convention == "canonical":
            return self.t_canonical
        if framing_convention == "bare":
            return self.t_bare
        raise PreconditionError("unknown framing convention %r" % framing_convention)


def _assemble_binary64(rs, weights, kappa, norm):
    wg = rs.weyl_group()
    gram = np.array([[float(v) for v in row] for row in rs.gram_fw])
    lams = np.array([[c + 1 for c in w.coords] for w in weights], dtype=float)
    acc = np.zeros((len(weights), len(weights)), dtype=complex)
    for el in wg:
        mat = np.array(el.weight_matrix, dtype=float)
        moved = lams @ mat.T
        pair = moved @ gram @ lams.T
        acc += el.sign * np.exp(-2j * math.pi * pair / kappa)
    return norm * acc


def _assemble_mp(rs, weights, kappa, n_pos, det_cartan, dps):
    wg = rs.weyl_group()
    n = len(weights)
    lams = [tuple(c + 1 for c in w.coords) for w in weights]
    with mp.workdps(dps):
        norm = (mp.mpc(0, 1) ** n_pos) / mp.sqrt(mp.mpf(kappa) ** rs.rank * det_cartan)
        out = np.zeros((n, n), dtype=complex)
        two_pi_i = 2 * mp.pi * mp.mpc(0, 1)
        for i in range(n):
            for j in range(n):
                tot = mp.mpc(0)
                for el in wg:
                    wl = el.apply_weight(lams[i])
                    pair = rs.ip(wl, lams[j])
                    tot += el.sign * mp.exp(-two_pi_i * mp.mpf(pair.numerator)
                                            / (pair.denominator * kappa))
                out[i, j] = complex(norm * tot)
    return out


def _certify(s, t_canon, tol):
    n = s.shape[0]
    eye = np.eye(n)
    residuals = {}
    residuals["unitarity"] = float(np.abs(s @ s.conj().T - eye).max())
    residuals["symmetry"] = float(np.abs(s - s.T).max())
    residuals["row0_imag"] = float(np.abs(s[0].imag).max())
    residuals["row0_min"] = float(s[0].real.min())
    c = s @ s
    perm = [int(np.argmax(np.abs(c[i]))) for i in range(n)]
    pmat = np.zeros((n, n))
    for i, p in enumerate(perm):
        pmat[i, p] = 1.0
    residuals["conjugation_permutation"] = float(np.abs(c - pmat).max())
    involution = all(perm[perm[i]] == i for i in range(n))
    st = s * t_canon[None, :]
    residuals["st_cubed"] = float(np.abs(st @ st @ st - c).max())
    ok = (residuals["unitarity"] < tol and residuals["symmetry"] < tol
          and residuals["row0_imag"] < tol and residuals["row0_min"] > 0
          and residuals["conjugation_permutation"] < tol and involution
          and residuals["st_cubed"] < tol)
    residuals["involution"] = involution
    return ok, residuals, tuple(perm)


def s_matrix(rs: RootSystem, level: int, tol: float = DEFAULT_TOL,
             precision_bits: int = 53,
             budget: int = DEFAULT_BUDGET) -> ModularData:
    """Build and certify the modular data at the given level."""
    if level < 1:
        raise PreconditionError("level must be >= 1")
    weights = integrable_weights(rs, level)
    n = len(weights)
    wg = rs.weyl_group()
    cost = len(wg) * n * n
    if cost > budget:
        raise BudgetExceededError(
            "S matrix needs %d Weyl terms, budget is %d" % (cost, budget))

    kappa = level + rs.dual_coxeter
    n_pos = rs.num_positive_roots
    det_cartan = rational_determinant(rs.cartan)
    norm = (1j ** n_pos) / math.sqrt(float(kappa ** rs.rank * det_cartan))

    qs = [casimir(rs, w) for w in weights]
    t_bare = np.array([cmath.exp(1j * math.pi * float(q) / kappa) for q in qs])
    c_charge = central_charge(rs, level)
    t_canon = t_bare * cmath.exp(-2j * math.pi * c_charge / 24)

    attempts = ([(precision_bits, None)] if precision_bits <= 53
                else [(precision_bits, max(RETRY_DPS, precision_bits // 3))])
    if attempts[0][1] is None:
        attempts = [(53, None), (113, RETRY_DPS)]

    last_residuals = None
    for bits, dps in attempts:
        if dps is None:
            s = _assemble_binary64(rs, weights, kappa, norm)
        else:
            s = _assemble_mp(rs, weights, kappa, n_pos, int(det_cartan), dps)
        ok, residuals, perm = _certify(s, t_canon, tol)
        last_residuals = residuals
        if ok:
            return ModularData(rs=rs, level=level, weights=weights, s=s,
                               t_canonical=t_canon, t_bare=t_bare,
                               conjugation=perm, precision_bits=bits,
                               certificate=residuals)
    raise CertificationError(
        "modular certification failed after retry: %r" % (last_residuals,))


def t_matrix(rs: RootSystem, level: int,
             framing_convention: str = "canonical") -> np.ndarray:
    """Diagonal of T for the requested framing convention."""
    if level < 1:
        raise PreconditionError("level must be >= 1")
    if framing_convention not in ("canonical", "bare"):
        raise PreconditionError("unknown framing convention %r" % framing_convention)
    weights = integrable_weights(rs, level)
    kappa = level + rs.dual_coxeter
    diag = np.array([cmath.exp(1j * math.pi * float(casimir(rs, w)) / kappa)
                     for w in weights])
    if framing_convention == "canonical":
        diag = diag * cmath.exp(-2j * math.pi * central_charge(rs, level) / 24)
    return diag


_CACHE: dict = {}


def modular_data(rs: RootSystem, level: int, tol: float = DEFAULT_TOL) -> ModularData:
    """Shared certified instance per (series, rank, level)."""
    key = (rs.series, rs.rank, level)
    if key not in _CACHE:
        _CACHE[key] = s_matrix(rs, level, tol=tol)
    return _CACHE[key]
