"""Modular matrices: closed forms, certification, conjugation."""

import cmath
import math

import numpy as np
import pytest

from oracles import su2_s_closed
from seifertsum.errors import PreconditionError
from seifertsum.lie import Weight, build_root_system, casimir
from seifertsum.modular import (
    central_charge,
    integrable_weights,
    modular_data,
    s_matrix,
    t_matrix,
)


@pytest.mark.parametrize("level", [1, 2, 3, 4, 5, 6])
def test_rank1_sine_kernel_closed_form(level, a1):
    md = modular_data(a1, level)
    closed = su2_s_closed(level)
    err = max(abs(complex(md.s[i, j]) - closed[i][j])
              for i in range(level + 1) for j in range(level + 1))
    assert err < 1e-12


def test_integrable_weight_counts(a1, a2):
    assert len(integrable_weights(a1, 5)) == 6
    assert len(integrable_weights(a2, 3)) == 10
    for k in (1, 2, 4):
        assert len(integrable_weights(a2, k)) == (k + 1) * (k + 2) // 2


def test_integrable_weights_are_sorted_and_start_at_vacuum(a2):
    ws = integrable_weights(a2, 2)
    assert ws[0].coords == (0, 0)
    assert list(ws) == sorted(ws, key=lambda w: w.coords)


def test_central_charges(a1, a2):
    assert central_charge(a1, 1) == pytest.approx(1.0)
    assert central_charge(a2, 1) == pytest.approx(2.0)
    # k dim / (k + dual coxeter) in general
    assert central_charge(a2, 3) == pytest.approx(3 * 8 / 6)


@pytest.mark.parametrize("series,rank,level", [
    ("A", 1, 5), ("A", 1, 20), ("A", 2, 4), ("A", 2, 6), ("A", 3, 2),
])
def test_certification_residuals(series, rank, level):
    md = modular_data(build_root_system(series, rank), level)
    for key in ("unitarity", "symmetry", "row0_imag",
                "conjugation_permutation", "st_cubed"):
        assert md.certificate[key] < 1e-9
    assert md.certificate["row0_min"] > 0
    assert md.certificate["involution"]


def test_conjugation_flips_coordinates(a2):
    md = modular_data(a2, 3)
    for i, w in enumerate(md.weights):
        partner = md.weights[md.conjugation[i]]
        assert partner.coords == tuple(reversed(w.coords))


def test_bare_t_matches_casimir_phases(a1):
    level = 4
    md = modular_data(a1, level)
    kappa = level + 2
    for i, w in enumerate(md.weights):
        want = cmath.exp(1j * math.pi * float(casimir(a1, w)) / kappa)
        assert abs(complex(md.t_bare[i]) - want) < 1e-12
    # closed anchor: level 1, spin 1/2 entry is exp(i pi (3/2)/3) = i
    md1 = modular_data(a1, 1)
    assert complex(md1.t_bare[1]) == pytest.approx(1j)


def test_canonical_t_includes_central_charge_phase(a2):
    level = 2
    md = modular_data(a2, level)
    c = central_charge(a2, level)
    shift = cmath.exp(-2j * math.pi * c / 24)
    err = np.abs(md.t_canonical - md.t_bare * shift).max()
    assert err < 1e-12


def test_t_matrix_conventions(a1):
    bare = t_matrix(a1, 3, framing_convention="bare")
    canon = t_matrix(a1, 3, framing_convention="canonical")
    assert np.abs(np.abs(bare) - 1).max() < 1e-12
    assert np.abs(np.abs(canon) - 1).max() < 1e-12
    with pytest.raises(PreconditionError):
        t_matrix(a1, 3, framing_convention="fancy")


def test_vacuum_row_is_positive(a2):
    md = modular_data(a2, 4)
    assert md.s[0].real.min() > 0
    assert np.abs(md.s[0].imag).max() < 1e-12


def test_square_is_conjugation_permutation(a1):
    md = modular_data(a1, 6)
    n = len(md.weights)
    c = np.asarray(md.s) @ np.asarray(md.s)
    perm = np.zeros((n, n))
    for i, p in enumerate(md.conjugation):
        perm[i, p] = 1.0
    assert np.abs(c - perm).max() < 1e-9


def test_modular_data_is_cached(a1):
    assert modular_data(a1, 2) is modular_data(a1, 2)


def test_preconditions(a1):
    with pytest.raises(PreconditionError):
        s_matrix(a1, 0)
    md = modular_data(a1, 2)
    with pytest.raises(PreconditionError):
        md.index_of(Weight((9,)))


def test_matrices_are_read_only(a1):
    md = modular_data(a1, 2)
    with pytest.raises(ValueError):
        md.s[0, 0] = 0
