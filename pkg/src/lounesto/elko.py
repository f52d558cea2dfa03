"""ELKO spinors, charge conjugation and boosts in the Weyl representation."""
from dataclasses import dataclass

import numpy as np

from .errors import LabelMismatch, OffShell, ZeroDirection
from .gamma import GAMMA_UPPER, SIGMA2, AntilinearOperator, join_halves, left_half, right_half, sigma_dot

# Wigner time reversal for spin 1/2, fixed so that i*Theta = sigma_2
WIGNER_THETA = -1j * SIGMA2

CHARGE_CONJUGATION = AntilinearOperator(np.zeros((4, 4)), -GAMMA_UPPER[2])

Z_HAT = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class Momentum:
    mass: float
    p: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        p = tuple(float(x) for x in self.p)
        if len(p) != 3 or not all(np.isfinite(p)):
            raise ValueError("momentum needs 3 finite components")
        if not (np.isfinite(self.mass) and self.mass > 0):
            raise ValueError("mass must be positive")
        object.__setattr__(self, "mass", float(self.mass))
        object.__setattr__(self, "p", p)

    @property
    def vector(self):
        return np.array(self.p)

    @property
    def magnitude(self):
        return float(np.linalg.norm(self.p))

    @property
    def energy(self):
        return float(np.hypot(self.mass, self.magnitude))

    @property
    def direction(self):
        mag = self.magnitude
        return None if mag == 0.0 else self.vector / mag

    def as_dict(self):
        return {"mass": self.mass, "p": list(self.p)}


REST = Momentum(1.0)


@dataclass(frozen=True)
class ElkoLabel:
    """Conjugacy S|A and helicity pair: ``mp`` is {-,+}, ``pm`` is {+,-}.

    The second helicity sign belongs to the left-handed (lower) half.
    """

    conjugacy: str
    pair: str

    def __post_init__(self):
        if self.conjugacy not in ("S", "A"):
            raise LabelMismatch(f"conjugacy must be S or A, got {self.conjugacy!r}")
        if self.pair not in ("mp", "pm"):
            raise LabelMismatch(f"pair must be mp or pm, got {self.pair!r}")

    @property
    def conjugation_sign(self):
        return 1 if self.conjugacy == "S" else -1

    @property
    def lower_helicity(self):
        return 1 if self.pair == "mp" else -1

    @property
    def partner(self):
        return ElkoLabel(self.conjugacy, "pm" if self.pair == "mp" else "mp")

    def __str__(self):
        return f"{self.conjugacy}{{{'-,+' if self.pair == 'mp' else '+,-'}}}"


ALL_LABELS = tuple(ElkoLabel(c, p) for c in ("S", "A") for p in ("mp", "pm"))


def helicity_spinor(p_hat, sign):
    """Unit eigenvector of sigma.p_hat with eigenvalue ``sign``.

    Phases: phi+ = (cos(t/2), e^{i f} sin(t/2)), phi- = (-e^{-i f} sin(t/2), cos(t/2))
    in the polar/azimuthal angles (t, f) of p_hat.
    """
    v = np.asarray(p_hat, dtype=float)
    norm = np.linalg.norm(v)
    if not norm > 1e-15:
        raise ZeroDirection("direction vector vanishes")
    x, y, z = v / norm
    theta = np.arccos(np.clip(z, -1.0, 1.0))
    phi = np.arctan2(y, x)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    if sign > 0:
        return np.array([c, np.exp(1j * phi) * s])
    return np.array([-np.exp(-1j * phi) * s, c + 0j])


def charge_conjugate(psi):
    """C psi = -gamma^2 psi*."""
    psi = np.asarray(psi, dtype=complex)
    return -(psi.conj() @ GAMMA_UPPER[2].T)


def charge_conjugate_block(psi):
    """Same operator written blockwise: [[0, i Theta], [-i Theta, 0]] K."""
    psi = np.asarray(psi, dtype=complex)
    i_theta = 1j * WIGNER_THETA
    upper = left_half(psi).conj() @ i_theta.T
    lower = -(right_half(psi).conj() @ i_theta.T)
    return join_halves(upper, lower)


def elko_rest(label, p_hat=Z_HAT):
    phi = helicity_spinor(p_hat, label.lower_helicity)
    return join_halves(label.conjugation_sign * SIGMA2 @ phi.conj(), phi)


def boost_factor(label, mom):
    """sqrt((E+m)/2m) (1 -+ |p|/(E+m)), '-' for the {-,+} pair."""
    e, m, p = mom.energy, mom.mass, mom.magnitude
    return float(np.sqrt((e + m) / (2 * m)) * (1 - label.lower_helicity * p / (e + m)))


def elko_boost(lam0, mom, label):
    return boost_factor(label, mom) * np.asarray(lam0, dtype=complex)


def elko_spinor(label, mom=None, p_hat=None):
    """Rest spinor along p_hat (default: the momentum direction, else z), boosted to mom."""
    if p_hat is None:
        p_hat = Z_HAT if mom is None or mom.direction is None else mom.direction
    lam = elko_rest(label, p_hat)
    return lam if mom is None else elko_boost(lam, mom, label)


def elko_partner(lam, label, mom=None, tol=1e-12):
    """The opposite-helicity spinor of the same conjugacy, at the same momentum."""
    lam = np.asarray(lam, dtype=complex)
    s = label.conjugation_sign
    scale = float(np.vdot(lam, lam).real)
    if scale == 0.0 or np.max(np.abs(charge_conjugate(lam) - s * lam)) > tol * np.sqrt(scale):
        raise LabelMismatch(f"spinor is not a C-eigenspinor with eigenvalue {s:+d}")
    phi = left_half(lam)
    ratio = 1.0
    if mom is not None:
        ratio = boost_factor(label.partner, mom) / boost_factor(label, mom)
    # phi- = -i sigma2 phi+*,  phi+ = i sigma2 phi-*
    rot = -1j * SIGMA2 if label.pair == "mp" else 1j * SIGMA2
    phi_partner = ratio * (rot @ phi.conj())
    return join_halves(s * SIGMA2 @ phi_partner.conj(), phi_partner)


def elko_dual(lam, label, mom=None, tol=1e-12):
    """Row covector +-i [partner]^dagger gamma^0 (+ for {-,+}, - for {+,-})."""
    partner = elko_partner(lam, label, mom, tol)
    return label.lower_helicity * 1j * (partner.conj() @ GAMMA_UPPER[0])


def dual_pairing(label, mom=None, p_hat=None):
    lam = elko_spinor(label, mom, p_hat)
    return complex(elko_dual(lam, label, mom) @ lam)


def chi_operator(mom):
    """(E + sigma.p)/m, which maps phi_L(p) to phi_R(p) on shell."""
    return (mom.energy * np.eye(2) + sigma_dot(mom.vector)) / mom.mass


def boost_matrix(mom):
    """Spinor boost diag(B+, B-), B+- = (E + m +- sigma.p) / sqrt(2m(E+m))."""
    e, m = mom.energy, mom.mass
    sp = sigma_dot(mom.vector)
    norm = np.sqrt(2 * m * (e + m))
    b_plus = ((e + m) * np.eye(2) + sp) / norm
    b_minus = ((e + m) * np.eye(2) - sp) / norm
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = b_plus
    out[2:, 2:] = b_minus
    return out


def dirac_boost(psi0, mom, rel_tol=1e-10):
    psi0 = np.asarray(psi0, dtype=complex)
    gap = np.linalg.norm(right_half(psi0) - left_half(psi0))
    if gap > rel_tol * max(np.linalg.norm(psi0), 1e-300):
        raise OffShell("rest-frame spinor needs phi_R(0) = phi_L(0)")
    return boost_matrix(mom) @ psi0


def vector_boost(mom):
    """Contravariant Lorentz boost taking (m, 0) to (E, p)."""
    e, m, p = mom.energy, mom.mass, mom.vector
    lam = np.eye(4)
    lam[0, 0] = e / m
    lam[0, 1:] = p / m
    lam[1:, 0] = p / m
    lam[1:, 1:] += np.outer(p, p) / (m * (e + m))
    return lam
