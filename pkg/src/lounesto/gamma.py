"""Weyl-representation Dirac matrices and real-linear operators on C^4.

Spinors are plain complex arrays of shape (4,) (or (n, 4) for batches); the
first two components are the right-handed half, the last two the left-handed
half.
"""
from dataclasses import dataclass

import numpy as np

from .errors import SingularOperator

I2 = np.eye(2, dtype=complex)
O2 = np.zeros((2, 2), dtype=complex)
I4 = np.eye(4, dtype=complex)

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.array([SIGMA1, SIGMA2, SIGMA3])

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


GAMMA_UPPER = np.array([_block(O2, I2, I2, O2)] + [_block(O2, -s, s, O2) for s in PAULI])
GAMMA_LOWER = np.array([GAMMA_UPPER[0]] + [-g for g in GAMMA_UPPER[1:]])
GAMMA5 = 1j * GAMMA_UPPER[0] @ GAMMA_UPPER[1] @ GAMMA_UPPER[2] @ GAMMA_UPPER[3]
GAMMA0123 = GAMMA_LOWER[0] @ GAMMA_LOWER[1] @ GAMMA_LOWER[2] @ GAMMA_LOWER[3]


@dataclass(frozen=True)
class GammaBasis:
    upper: np.ndarray
    lower: np.ndarray
    gamma5: np.ndarray
    gamma0123: np.ndarray
    pauli: np.ndarray
    identity: np.ndarray


def gamma_basis():
    return GammaBasis(GAMMA_UPPER.copy(), GAMMA_LOWER.copy(), GAMMA5.copy(),
                      GAMMA0123.copy(), PAULI.copy(), I4.copy())


def sigma_dot(v):
    v = np.asarray(v, dtype=float)
    return np.einsum("i,ijk->jk", v, PAULI)


def as_spinor(psi):
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise ValueError(f"a spinor has 4 complex components, got shape {psi.shape}")
    if not np.all(np.isfinite(psi)):
        raise ValueError("spinor components must be finite")
    return psi


def right_half(psi):
    return np.asarray(psi)[..., :2]


def left_half(psi):
    return np.asarray(psi)[..., 2:]


def join_halves(right, left):
    return np.concatenate([np.asarray(right, dtype=complex), np.asarray(left, dtype=complex)], axis=-1)


def realify_linear(a):
    """8x8 real matrix of a complex-linear map on (Re, Im) stacked coordinates."""
    a = np.asarray(a)
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def to_real(psi):
    psi = np.asarray(psi)
    return np.concatenate([psi.real, psi.imag], axis=-1)


def from_real(x):
    x = np.asarray(x, dtype=float)
    n = x.shape[-1] // 2
    return x[..., :n] + 1j * x[..., n:]


@dataclass(frozen=True)
class AntilinearOperator:
    """Real-linear map psi -> A psi + B conj(psi) on C^4."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", np.array(self.A, dtype=complex).reshape(4, 4))
        object.__setattr__(self, "B", np.array(self.B, dtype=complex).reshape(4, 4))

    @classmethod
    def linear(cls, a):
        return cls(a, np.zeros((4, 4)))

    @classmethod
    def identity(cls):
        return cls(I4, np.zeros((4, 4)))

    @classmethod
    def conjugation(cls):
        return cls(np.zeros((4, 4)), I4)

    @property
    def is_linear(self):
        return not np.any(self.B)

    def __call__(self, psi):
        return apply(self, psi)

    def __matmul__(self, other):
        return compose(self, other)

    def realify(self):
        return realify(self)

    def inverse(self):
        return invert(self)


def apply(op, psi):
    psi = np.asarray(psi, dtype=complex)
    return psi @ op.A.T + psi.conj() @ op.B.T


def compose(m, n):
    """The operator psi -> m(n(psi))."""
    return AntilinearOperator(m.A @ n.A + m.B @ n.B.conj(), m.A @ n.B + m.B @ n.A.conj())


def realify(op):
    a, b = op.A, op.B
    return np.block([[a.real + b.real, -a.imag + b.imag],
                     [a.imag + b.imag, a.real - b.real]])


def from_realified(r):
    r = np.asarray(r, dtype=float)
    r11, r12, r21, r22 = r[:4, :4], r[:4, 4:], r[4:, :4], r[4:, 4:]
    a = 0.5 * ((r11 + r22) + 1j * (r21 - r12))
    b = 0.5 * ((r11 - r22) + 1j * (r21 + r12))
    return AntilinearOperator(a, b)


def realified_det(op):
    return float(np.linalg.det(realify(op)))


def invert(op, rel_tol=1e-12):
    r = realify(op)
    scale = float(np.max(np.abs(r)))
    det = float(np.linalg.det(r))
    if scale == 0.0 or abs(det) <= rel_tol * scale ** 8:
        raise SingularOperator(f"realified determinant {det:.3e} is zero at scale {scale:.3e}")
    return from_realified(np.linalg.inv(r))
