import itertools

import numpy as np
import pytest

from conftest import random_spinor
from lounesto.errors import SingularOperator
from lounesto.gamma import (GAMMA0123, GAMMA5, GAMMA_LOWER, GAMMA_UPPER, METRIC, AntilinearOperator, apply,
                            as_spinor, compose, from_realified, from_real, gamma_basis, invert, realified_det,
                            realify, sigma_dot, to_real)


def random_operator(rng):
    def m():
        return rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    return AntilinearOperator(m(), m())


def test_clifford_relations():
    for mu, nu in itertools.product(range(4), repeat=2):
        anti = GAMMA_UPPER[mu] @ GAMMA_UPPER[nu] + GAMMA_UPPER[nu] @ GAMMA_UPPER[mu]
        assert np.array_equal(anti, 2 * METRIC[mu, nu] * np.eye(4))


def test_lowered_gammas():
    for mu in range(4):
        assert np.array_equal(GAMMA_LOWER[mu], METRIC[mu, mu] * GAMMA_UPPER[mu])


def test_gamma5_is_chirality():
    assert np.allclose(GAMMA5, np.diag([1, 1, -1, -1]))
    assert np.allclose(GAMMA0123, 1j * GAMMA5)


def test_gamma_basis_returns_copies():
    basis = gamma_basis()
    basis.upper[0, 0, 0] = 99
    assert GAMMA_UPPER[0, 0, 0] == 0


def test_sigma_dot():
    assert np.allclose(sigma_dot([0, 0, 2]), np.diag([2, -2]))


def test_as_spinor_validates():
    with pytest.raises(ValueError):
        as_spinor([1, 2, 3])
    with pytest.raises(ValueError):
        as_spinor([1, 2, 3, np.nan])


def test_real_round_trip(rng):
    psi = random_spinor(rng)
    assert np.array_equal(from_real(to_real(psi)), psi)


def test_realify_matches_action(rng):
    op, psi = random_operator(rng), random_spinor(rng)
    assert np.allclose(realify(op) @ to_real(psi), to_real(apply(op, psi)))


def test_realify_round_trip(rng):
    op = random_operator(rng)
    back = from_realified(realify(op))
    assert np.allclose(back.A, op.A) and np.allclose(back.B, op.B)


def test_compose_matches_sequential_application(rng):
    m, n, psi = random_operator(rng), random_operator(rng), random_spinor(rng)
    assert np.allclose(compose(m, n)(psi), m(n(psi)))
    assert np.allclose(realify(m @ n), realify(m) @ realify(n))


def test_conjugation_is_involution(rng):
    k = AntilinearOperator.conjugation()
    psi = random_spinor(rng)
    assert np.allclose((k @ k)(psi), psi)
    assert not k.is_linear and AntilinearOperator.identity().is_linear


def test_invert(rng):
    op = random_operator(rng)
    inv = invert(op)
    psi = random_spinor(rng, 10)
    assert np.allclose(inv(op(psi)), psi, atol=1e-10)
    assert np.allclose(op.inverse()(op(psi)), psi, atol=1e-10)


def test_invert_singular():
    op = AntilinearOperator(np.eye(4), np.eye(4))  # psi + psi* kills imaginary parts
    assert realified_det(op) == 0.0
    with pytest.raises(SingularOperator):
        invert(op)


def test_apply_batches(rng):
    op, psis = random_operator(rng), random_spinor(rng, 7)
    out = apply(op, psis)
    assert all(np.allclose(out[k], apply(op, psis[k])) for k in range(7))
