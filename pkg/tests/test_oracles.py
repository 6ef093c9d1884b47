"""Closed-form reference solutions."""

import math

import numpy as np
import pytest

from gravbell.oracles import (
    DephasingOracle,
    coherence_halflife,
    dephased_bell_state,
    gad_steady_state_single,
)
from gravbell.states import SIGMA_MINUS, SIGMA_PLUS, bell_state


def test_oracle_validation():
    DephasingOracle(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        DephasingOracle(-1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        DephasingOracle(1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        DephasingOracle(1.0, 1.0, 1.5)


def test_dephased_bell_state_at_zero_is_bell():
    oracle = DephasingOracle(1.0, 0.9, 0.7)
    np.testing.assert_array_equal(
        np.asarray(dephased_bell_state(oracle, 0.0)),
        np.asarray(bell_state()))


def test_dephased_bell_corner_formula():
    oracle = DephasingOracle(0.8, 0.9, 0.7)
    for t in (0.1, 1.0, 3.0):
        m = np.asarray(dephased_bell_state(oracle, t))
        expected = 0.5 * math.exp(-2.0 * 0.8 * (0.9 + 0.7) * t)
        assert m[0, 3] == pytest.approx(expected, rel=1e-14)
        assert m[3, 0] == pytest.approx(expected, rel=1e-14)
        assert m[0, 0] == 0.5 and m[3, 3] == 0.5


def test_dephased_bell_long_time_limit_and_validity():
    oracle = DephasingOracle(1.0, 1.0, 1.0)
    late = np.asarray(dephased_bell_state(oracle, 50.0))
    np.testing.assert_allclose(late, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)
    for t in np.linspace(0.0, 10.0, 25):
        dephased_bell_state(oracle, t)  # constructor enforces state invariants
    with pytest.raises(ValueError):
        oracle.coherence(-0.5)


def test_coherence_halflife():
    assert coherence_halflife(DephasingOracle(1.0, 1.0, 1.0)) == pytest.approx(
        math.log(2) / 4.0, rel=1e-12)
    base = coherence_halflife(DephasingOracle(1.0, 0.9, 0.7))
    doubled = coherence_halflife(DephasingOracle(2.0, 0.9, 0.7))
    assert doubled == pytest.approx(base / 2.0, rel=1e-12)
    # deeper potentials (smaller alpha + beta) slow the coordinate-time decay
    shallow = coherence_halflife(DephasingOracle(1.0, 1.0, 1.0))
    deep = coherence_halflife(DephasingOracle(1.0, 0.5, 0.4))
    assert deep > shallow
    with pytest.raises(ValueError):
        coherence_halflife(DephasingOracle(0.0, 1.0, 1.0))


def test_gad_steady_state_values():
    np.testing.assert_array_equal(gad_steady_state_single(0.0),
                                  np.diag([1.0, 0.0]).astype(complex))
    np.testing.assert_allclose(gad_steady_state_single(1.0),
                               np.diag([2 / 3, 1 / 3]), atol=1e-15)
    np.testing.assert_allclose(gad_steady_state_single(1e8),
                               np.diag([0.5, 0.5]), atol=1e-8)
    with pytest.raises(ValueError):
        gad_steady_state_single(-1.0)


@pytest.mark.parametrize("n_th", [0.0, 0.2, 1.0, 5.0])
def test_gad_steady_state_annihilated_by_single_qubit_generator(n_th):
    # single-qubit thermal generator built independently from the 2x2 operators
    gamma = 1.3
    rho = gad_steady_state_single(n_th)
    sm, sp = SIGMA_MINUS, SIGMA_PLUS
    num, hole = sp @ sm, sm @ sp

    def diss(l, ldag, ldl):
        return l @ rho @ ldag - 0.5 * (ldl @ rho + rho @ ldl)

    out = (gamma * (n_th + 1.0) * diss(sm, sp, num)
           + gamma * n_th * diss(sp, sm, hole))
    np.testing.assert_allclose(out, np.zeros((2, 2)), atol=1e-12)
