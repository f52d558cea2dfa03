"""Operators M taking Dirac spinors to ELKO, and the conditions for M psi to be ELKO.

M acts blockwise on psi = (phi_R, phi_L) as

    [[M11, eps*sigma2*kappa - M11 chi], [M21, 1 - M21 chi]]

with kappa the complex conjugation, so that every on-shell spinor
(phi_R = chi phi_L) lands on (eps sigma2 phi_L*, phi_L).  The conjugation
entries are carried by the antilinear part of an :class:`AntilinearOperator`.

Two families of conditions are provided.  The closed forms (``paper`` mode)
are the component expressions for the ansatz at rest; the ``direct`` mode
evaluates the bilinears of M psi itself.  They do not agree in general;
:func:`compare_modes` reports both.
"""
from dataclasses import asdict, dataclass, field

import numpy as np

from .bilinears import BILINEAR_MATRICES, BilinearSet, compute_bilinears
from .classifier import LounestoClass, classify
from .elko import ElkoLabel, charge_conjugate, chi_operator, elko_dual
from .errors import LabelMismatch
from .gamma import GAMMA_UPPER, SIGMA2, AntilinearOperator, invert, realify, realify_linear, to_real

MODES = ("paper", "direct")
DIRAC_CLASSES = (1, 2, 3)
DEFAULT_TOL = 1e-10

_PARAM_NAMES = ("m11", "m12", "m21", "m22", "m31", "m32", "m41", "m42")


@dataclass(frozen=True)
class MappingParams:
    """Free entries of M plus the sign eps of the target (eps sigma2 phi_L*, phi_L)."""

    m11: complex = 0j
    m12: complex = 1 + 0j
    m21: complex = -1 + 0j
    m22: complex = 0j
    m31: complex = 1 + 0j
    m32: complex = 0j
    m41: complex = 0j
    m42: complex = 1 + 0j
    epsilon: int = 1
    antisymmetric: bool = True

    def __post_init__(self):
        for name in _PARAM_NAMES:
            value = complex(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.antisymmetric and self.m21 != -self.m12:
            raise ValueError("antisymmetric convention requires m21 = -m12")

    @classmethod
    def ansatz(cls, epsilon=1):
        return cls(epsilon=epsilon)

    @classmethod
    def random(cls, rng, epsilon=1, antisymmetric=True):
        z = rng.normal(size=8) + 1j * rng.normal(size=8)
        values = dict(zip(_PARAM_NAMES, z))
        if antisymmetric:
            values["m21"] = -values["m12"]
        return cls(**values, epsilon=epsilon, antisymmetric=antisymmetric)

    @property
    def M11(self):
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])

    @property
    def M21(self):
        return np.array([[self.m31, self.m32], [self.m41, self.m42]])

    def as_dict(self):
        d = {n: [getattr(self, n).real, getattr(self, n).imag] for n in _PARAM_NAMES}
        d["epsilon"] = self.epsilon
        d["antisymmetric"] = self.antisymmetric
        return d

    @classmethod
    def from_dict(cls, d):
        values = {n: complex(*d[n]) for n in _PARAM_NAMES if n in d}
        antisymmetric = d.get("antisymmetric", "m21" not in d)
        if antisymmetric and "m21" not in d and "m12" in values:
            values["m21"] = -values["m12"]
        return cls(**values, epsilon=int(d.get("epsilon", 1)), antisymmetric=antisymmetric)


def build_M(params, mom=None):
    chi = np.eye(2) if mom is None else chi_operator(mom)
    m11, m21 = params.M11, params.M21
    a = np.zeros((4, 4), dtype=complex)
    a[:2, :2] = m11
    a[:2, 2:] = -m11 @ chi
    a[2:, :2] = m21
    a[2:, 2:] = np.eye(2) - m21 @ chi
    b = np.zeros((4, 4), dtype=complex)
    b[:2, 2:] = params.epsilon * SIGMA2
    return AntilinearOperator(a, b)


def ansatz_M(epsilon=1, mom=None):
    return build_M(MappingParams.ansatz(epsilon), mom)


# -- bilinears of M psi as real quadratic forms in psi -----------------------

_REAL_FORMS = np.array([realify_linear(h) for h in BILINEAR_MATRICES])


def mapped_forms(M):
    """8x8 real matrices Q_k with bilinear_k(M psi) = x^T Q_k x, x = (Re psi, Im psi)."""
    r = realify(M)
    return np.einsum("ai,kab,bj->kij", r, _REAL_FORMS, r)


def mapped_bilinears(psi, M):
    x = to_real(np.asarray(psi, dtype=complex))
    return BilinearSet.from_row(np.einsum("i,kij,j->k", x, mapped_forms(M), x))


def mapped_bilinears_batch(psis, M):
    x = to_real(np.atleast_2d(np.asarray(psis, dtype=complex)))
    return np.einsum("ni,kij,nj->nk", x, mapped_forms(M), x)


# -- closed-form conditions ---------------------------------------------------

def _re(psi, i, j):
    return (psi[i].conjugate() * psi[j]).real


def _im(psi, i, j):
    return (psi[i].conjugate() * psi[j]).imag


def kring_closed_form(psi, epsilon=1):
    """The four component conditions that stand for K̊_mu = 0 (ansatz, rest frame).

    The expressions do not depend on epsilon; it is accepted for symmetry
    with the other mapping functions.
    """
    p = np.asarray(psi, dtype=complex)
    return np.array([
        _re(p, 0, 2) + _re(p, 1, 3),
        _re(p, 1, 2) + _re(p, 0, 3),
        _im(p, 0, 3) - _im(p, 1, 2) - 2 * _im(p, 2, 3) - 2 * _im(p, 0, 1),
        _re(p, 0, 2) - _re(p, 1, 3),
    ])


def sigma_ring_closed_form(psi):
    p = np.asarray(psi, dtype=complex)
    return _re(p, 0, 3) + _im(p, 1, 2)


def omega_ring_closed_form(psi):
    p = np.asarray(psi, dtype=complex)
    return _im(p, 0, 3) - _im(p, 1, 2) - 2 * _im(p, 0, 1)


def table1_conditions(psi):
    """Component conditions of the summary table, keyed by class."""
    p = np.asarray(psi, dtype=complex)
    (a1, a2, a3, a4), (b1, b2, b3, b4) = p.real, p.imag
    t_mixed = a2 * (a3 - b3) + b2 * (a3 + b3)
    t_34 = a3 * b4 - b3 * a4
    t_2314 = a2 * a3 + b2 * b3 + a1 * a4 + b1 * b4
    t_long = (a1 * b4 - b1 * a4) - (a2 * b3 - b2 * a3) - 2 * (a3 * b4 - b3 * a4) - 2 * (a1 * b2 - b1 * a2)
    return {1: np.array([t_mixed, t_34]), 2: np.array([t_34, t_2314]), 3: np.array([t_mixed, t_long])}


PAPER_SELECTION = {
    1: ("partes1", "partes2", "partes3", "partes4", "ad2", "ad3"),
    2: ("partes1", "partes2", "partes3", "partes4", "ad2"),
    3: ("partes1", "partes2", "partes3", "partes4", "ad3"),
}
DIRECT_SELECTION = {
    1: ("sigma_ring", "omega_ring", "K_ring0", "K_ring1", "K_ring2", "K_ring3"),
    2: ("sigma_ring", "omega_ring", "K_ring0", "K_ring1", "K_ring2", "K_ring3", "omega"),
    3: ("sigma_ring", "omega_ring", "K_ring0", "K_ring1", "K_ring2", "K_ring3", "sigma"),
}
# which direct quantity each closed form is meant to reproduce
PAPER_TO_DIRECT = {"partes1": "K_ring0", "partes2": "K_ring1", "partes3": "K_ring2",
                   "partes4": "K_ring3", "ad2": "sigma_ring", "ad3": "omega_ring"}


@dataclass
class ConstraintReport:
    mode: str
    lounesto_class: int
    residuals: dict
    selected: tuple
    scales: dict
    tolerance: float
    mappable: bool
    degenerate: bool
    extra: dict = field(default_factory=dict)

    def normalized(self, name):
        scale = self.scales[name]
        return abs(self.residuals[name]) / scale if scale > 0 else float("inf")

    def worst(self):
        return max((self.normalized(n) for n in self.selected), default=0.0)

    def as_dict(self):
        d = asdict(self)
        d["selected"] = list(self.selected)
        d["class"] = d.pop("lounesto_class")
        return d


def _check_class(lounesto_class):
    if lounesto_class not in DIRAC_CLASSES:
        raise ValueError(f"Dirac classes are 1, 2, 3; got {lounesto_class}")


def paper_conditions(psi, lounesto_class, tol=DEFAULT_TOL):
    _check_class(lounesto_class)
    psi = np.asarray(psi, dtype=complex)
    scale = float(np.vdot(psi, psi).real)
    k = kring_closed_form(psi)
    residuals = {f"partes{i + 1}": float(k[i]) for i in range(4)}
    residuals["ad2"] = float(sigma_ring_closed_form(psi))
    residuals["ad3"] = float(omega_ring_closed_form(psi))
    selected = PAPER_SELECTION[lounesto_class]
    degenerate = scale == 0.0
    ok = all(abs(residuals[n]) <= tol * scale for n in selected)

    c1, c2 = _re(psi, 0, 2), _re(psi, 1, 3)
    table = table1_conditions(psi)[lounesto_class]
    table_zero = bool(np.all(np.abs(table) <= tol * scale))
    extra = {
        "c1": float(c1),
        "c2": float(c2),
        "table1": table.tolist(),
        "consistency": {
            "c1_vs_partes": float(abs(c1 - 0.5 * (k[0] + k[3]))),
            "c2_vs_partes": float(abs(c2 - 0.5 * (k[0] - k[3]))),
            "table1_agrees": table_zero == ok,
        },
    }
    return ConstraintReport("paper", lounesto_class, residuals, selected,
                            {n: scale for n in residuals}, tol, ok and not degenerate, degenerate, extra)


def direct_conditions(psi, M=None, lounesto_class=1, tol=DEFAULT_TOL):
    _check_class(lounesto_class)
    if M is None:
        M = ansatz_M()
    psi = np.asarray(psi, dtype=complex)
    scale = float(np.vdot(psi, psi).real)
    b = compute_bilinears(psi) if scale > 0 else BilinearSet.zero()
    mb = mapped_bilinears(psi, M)
    mscale = mb.scale
    residuals = {"sigma_ring": mb.sigma, "omega_ring": mb.omega}
    residuals.update({f"K_ring{i}": float(mb.K[i]) for i in range(4)})
    residuals["sigma"] = b.sigma
    residuals["omega"] = b.omega
    scales = {n: mscale for n in residuals}
    scales["sigma"] = scales["omega"] = scale
    selected = DIRECT_SELECTION[lounesto_class]
    mapped_class = classify(mb, tol)
    s_norm = float(np.linalg.norm(mb.S))
    degenerate = scale == 0.0
    ok = (not degenerate and mscale > 0
          and all(abs(residuals[n]) <= tol * scales[n] for n in selected)
          and s_norm > tol * mscale
          and mapped_class is LounestoClass.FLAGPOLE)
    extra = {
        "K_ring_norm": float(np.linalg.norm(mb.K)),
        "S_ring_norm": s_norm,
        "mapped_class": int(mapped_class),
        "psi_class": int(classify(b, tol)),
    }
    return ConstraintReport("direct", lounesto_class, residuals, selected, scales, tol,
                            bool(ok), degenerate, extra)


def compare_modes(psi, lounesto_class, M=None, tol=DEFAULT_TOL):
    paper = paper_conditions(psi, lounesto_class, tol)
    direct = direct_conditions(psi, M, lounesto_class, tol)
    agreement = {}
    for name, target in PAPER_TO_DIRECT.items():
        paper_zero = paper.normalized(name) <= tol
        direct_zero = direct.normalized(target) <= tol
        agreement[name] = paper_zero == direct_zero
    agreement["mappable"] = paper.mappable == direct.mappable
    return {
        "paper": paper,
        "direct": direct,
        "agreement": agreement,
        "degenerate": paper.degenerate and direct.degenerate,
    }


# -- adjoint relation ----------------------------------------------------------

@dataclass(frozen=True)
class AdjointCheck:
    """Deviations of the Dirac adjoint computed through lambda = M psi.

    ``via_inverse`` recomputes (M^-1 lambda)^dagger gamma^0; ``via_dual`` goes
    through the ELKO dual, -+i dual gamma^0 (M^-1)^dagger gamma^0.
    """

    via_inverse: float
    via_dual: float
    scale: float
    label: ElkoLabel


def infer_label(lam, tol=1e-10):
    """Conjugacy from C lam = +-lam; the lower half is taken as the + helicity state."""
    lam = np.asarray(lam, dtype=complex)
    norm = np.linalg.norm(lam)
    c = charge_conjugate(lam)
    for conj, s in (("S", 1), ("A", -1)):
        if norm > 0 and np.max(np.abs(c - s * lam)) <= tol * norm:
            return ElkoLabel(conj, "mp")
    raise LabelMismatch("M psi is not an eigenspinor of charge conjugation")


def adjoint_relation(psi, M, label=None, mom=None):
    psi = np.asarray(psi, dtype=complex)
    m_inv = invert(M)
    lam = M(psi)
    if label is None:
        label = infer_label(lam)
    g0 = GAMMA_UPPER[0]
    direct = psi.conj() @ g0
    via_inverse = m_inv(lam).conj() @ g0
    row = -label.lower_helicity * 1j * (elko_dual(lam, label, mom, tol=1e-10) @ g0)
    # a row vector r times (M^-1)^dagger is (M^-1 r^dagger)^dagger
    via_dual = m_inv(row.conj()).conj() @ g0
    return AdjointCheck(float(np.max(np.abs(direct - via_inverse))),
                        float(np.max(np.abs(direct - via_dual))),
                        float(np.linalg.norm(psi)), label)
