"""Lounesto classification of spinors by their bilinear covariants."""
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .bilinears import compute_bilinears


class LounestoClass(IntEnum):
    DEGENERATE = 0
    DIRAC_1 = 1
    DIRAC_2 = 2
    DIRAC_3 = 3
    FLAG_DIPOLE = 4
    FLAGPOLE = 5
    WEYL = 6

    @property
    def is_regular(self):
        return 1 <= self.value <= 3


@dataclass(frozen=True)
class Tolerance:
    """Quantities are treated as zero when |x| <= rel_tol * psi^+ psi."""

    rel_tol: float = 1e-10

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")


DEFAULT_TOLERANCE = Tolerance()


def _as_tolerance(tol):
    if tol is None:
        return DEFAULT_TOLERANCE
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol))


def classify(b, tol=None):
    tol = _as_tolerance(tol)
    scale = b.scale
    if not np.isfinite(scale) or scale <= 0.0:
        return LounestoClass.DEGENERATE
    eps = tol.rel_tol * scale
    if np.linalg.norm(b.J) <= eps:
        return LounestoClass.DEGENERATE
    sigma = abs(b.sigma) > eps
    omega = abs(b.omega) > eps
    if sigma and omega:
        return LounestoClass.DIRAC_1
    if sigma:
        return LounestoClass.DIRAC_2
    if omega:
        return LounestoClass.DIRAC_3
    k = np.linalg.norm(b.K) > eps
    s = np.linalg.norm(b.S) > eps
    if k and s:
        return LounestoClass.FLAG_DIPOLE
    if s:
        return LounestoClass.FLAGPOLE
    if k:
        return LounestoClass.WEYL
    return LounestoClass.DEGENERATE


def classify_spinor(psi, tol=None):
    return classify(compute_bilinears(psi), tol)


def is_regular(b, tol=None):
    eps = _as_tolerance(tol).rel_tol * max(b.scale, 0.0)
    return abs(b.sigma) > eps or abs(b.omega) > eps


def is_singular(b, tol=None):
    return not is_regular(b, tol)
