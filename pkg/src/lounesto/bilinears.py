"""Bilinear covariants of a 4-component spinor and the identities among them.

Components follow the lowered-index matrix elements

    sigma   = psi^+ g_0 psi
    omega   = -psi^+ g_0 g_0123 psi
    J_mu    = psi^+ g_0 g_mu psi
    K_mu    = psi^+ g_0 i g_0123 g_mu psi
    S_munu  = psi^+ g_0 i g_mu g_nu psi        (mu < nu)

with S stored in the order (01, 02, 03, 12, 13, 23).  As multivectors the
basis vectors e_mu stand for the lowered gammas, so J = J_mu g^mu carries the
raised components J^mu on e_mu, and the pseudoscalar is e0123 = g_0123.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import DivisionDegenerate, NonRealBilinear, NotFlagpole, NotWeyl
from .gamma import GAMMA0123, GAMMA_LOWER, METRIC
from .multivector import PSEUDOSCALAR, Multivector, metric_ext

BIVECTOR_PAIRS = tuple(combinations(range(4), 2))
_ETA = np.diag(METRIC)
_BIVECTOR_RAISE = np.array([_ETA[a] * _ETA[b] for a, b in BIVECTOR_PAIRS])

_G0 = GAMMA_LOWER[0]
BILINEAR_MATRICES = np.array(
    [_G0, -_G0 @ GAMMA0123]
    + [_G0 @ g for g in GAMMA_LOWER]
    + [_G0 @ (1j * GAMMA0123) @ g for g in GAMMA_LOWER]
    + [_G0 @ (1j * GAMMA_LOWER[a] @ GAMMA_LOWER[b]) for a, b in BIVECTOR_PAIRS]
)
N_COMPONENTS = len(BILINEAR_MATRICES)

REALNESS_TOL = 1e-12


@dataclass(frozen=True)
class BilinearSet:
    sigma: float
    omega: float
    J: np.ndarray
    K: np.ndarray
    S: np.ndarray

    @classmethod
    def from_row(cls, row):
        row = np.asarray(row, dtype=float)
        return cls(float(row[0]), float(row[1]), row[2:6].copy(), row[6:10].copy(), row[10:16].copy())

    @classmethod
    def zero(cls):
        return cls.from_row(np.zeros(N_COMPONENTS))

    def as_row(self):
        return np.concatenate([[self.sigma, self.omega], self.J, self.K, self.S])

    @property
    def scale(self):
        """psi^+ psi, which equals J_0 in the Weyl representation."""
        return float(self.J[0])

    @property
    def J_upper(self):
        return _ETA * self.J

    @property
    def K_upper(self):
        return _ETA * self.K

    @property
    def S_upper(self):
        return _BIVECTOR_RAISE * self.S

    def current(self):
        return Multivector.vector(self.J_upper)

    def axial(self):
        return Multivector.vector(self.K_upper)

    def spin(self):
        return Multivector.bivector(self.S_upper)

    def as_dict(self):
        return {"sigma": self.sigma, "omega": self.omega, "J": self.J.tolist(),
                "K": self.K.tolist(), "S": self.S.tolist()}


def bilinear_components(psis, mats=BILINEAR_MATRICES):
    """Raw bilinears for a batch of spinors.

    Returns the (n, 16) real parts and the per-spinor largest imaginary
    residue, both before any realness check.
    """
    psis = np.atleast_2d(np.asarray(psis, dtype=complex))
    raw = _kernels.sesquilinear(psis, mats)
    return raw.real, np.max(np.abs(raw.imag), axis=1)


def compute_bilinears(psi, tol=REALNESS_TOL):
    psi = np.asarray(psi, dtype=complex)
    real, imag = bilinear_components(psi[None, :])
    norm2 = float(np.vdot(psi, psi).real)
    if imag[0] > tol * norm2 + 1e-300:
        raise NonRealBilinear(f"imaginary residue {imag[0]:.3e} exceeds {tol:g} * {norm2:.3e}")
    return BilinearSet.from_row(real[0])


def minkowski_square(v):
    v = np.asarray(v, dtype=float)
    return float(v[0] ** 2 - v[1] ** 2 - v[2] ** 2 - v[3] ** 2)


def fierz_residuals(b):
    """Absolute residuals of the four Fierz identities.

    J^2 - omega^2 - sigma^2,  K^2 + J^2,  |J ⌞ K|,  |J ∧ K + (omega + sigma g_0123) S|
    """
    J, K, S = b.current(), b.axial(), b.spin()
    j2 = metric_ext(J, J)
    k2 = metric_ext(K, K)
    r1 = j2 - b.omega ** 2 - b.sigma ** 2
    r2 = k2 + j2
    r3 = J.rc(K).norm()
    r4 = ((J ^ K) + (b.omega + b.sigma * PSEUDOSCALAR) * S).norm()
    return np.array([abs(r1), abs(r2), r3, r4])


@dataclass(frozen=True)
class Aggregates:
    P: Multivector
    Q: Multivector
    Z_real: Multivector
    Z_imag: Multivector


def fierz_aggregate(b):
    """P = sigma + J + g_0123 omega, Q = S + K g_0123 and the complex aggregate
    Z = sigma + J + iS - i g_0123 K + g_0123 omega (split into real and imaginary parts)."""
    J, K, S = b.current(), b.axial(), b.spin()
    P = b.sigma + J + PSEUDOSCALAR * b.omega
    Q = S + K * PSEUDOSCALAR
    return Aggregates(P, Q, P, S - PSEUDOSCALAR * K)


def pq_residuals(b, lounesto_class, tol=1e-10):
    """Residual of the class-specific relation between P and Q.

    class 1: P = -(omega + sigma g_0123)^-1 K Q
    class 2: P = g_0123 K Q / sigma
    class 3: P = -K Q / omega and P^2 = 0

    The class-3 sign is the sigma -> 0 limit of the class-1 relation.
    Returns a dict with ``relation`` and, for class 3, ``P_squared``.
    """
    agg = fierz_aggregate(b)
    P, Q, K = agg.P, agg.Q, b.axial()
    scale = max(b.scale, 1e-300)
    if lounesto_class == 1:
        det = b.omega ** 2 + b.sigma ** 2
        if det <= (tol * scale) ** 2:
            raise DivisionDegenerate("omega + sigma*g_0123 is not invertible")
        inv = (b.omega - b.sigma * PSEUDOSCALAR) / det
        return {"relation": (P + inv * K * Q).norm()}
    if lounesto_class == 2:
        if abs(b.sigma) <= tol * scale:
            raise DivisionDegenerate("sigma vanishes")
        return {"relation": (P - PSEUDOSCALAR * K * Q / b.sigma).norm()}
    if lounesto_class == 3:
        if abs(b.omega) <= tol * scale:
            raise DivisionDegenerate("omega vanishes")
        return {"relation": (P + K * Q / b.omega).norm(), "P_squared": (P * P).norm()}
    raise ValueError(f"P/Q relations exist for classes 1-3, got {lounesto_class}")


def flagpole(lam, tol=None):
    """Pole J/2 and flag S/2 of a class-5 spinor."""
    from .classifier import LounestoClass, classify

    b = compute_bilinears(lam)
    if classify(b, tol) is not LounestoClass.FLAGPOLE:
        raise NotFlagpole("spinor is not of class 5")
    return b.current() / 2, b.spin() / 2


def majorana_from_weyl(xi, tol=None):
    """Split a Weyl spinor into the pair (xi + C xi)/2, (xi - C xi)/2."""
    from .classifier import LounestoClass, classify
    from .elko import charge_conjugate

    xi = np.asarray(xi, dtype=complex)
    if classify(compute_bilinears(xi), tol) is not LounestoClass.WEYL:
        raise NotWeyl("spinor is not of class 6")
    c = charge_conjugate(xi)
    return 0.5 * (xi + c), 0.5 * (xi - c)
