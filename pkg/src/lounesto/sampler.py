"""Seeded random spinors of a prescribed Lounesto class."""
from dataclasses import dataclass

import numpy as np

from .classifier import classify_spinor
from .errors import ExhaustedRetries, NoConvergence
from .gamma import SIGMA2, join_halves, left_half, right_half
from .mapping import DIRAC_CLASSES, MODES
from .solver import solve_equivalence_class

MAX_ATTEMPTS = 1000
MAPPABLE_RETRIES = 5


@dataclass(frozen=True)
class SampleSpec:
    lounesto_class: int
    count: int
    seed: int = 0
    scale: float = 1.0

    def __post_init__(self):
        if self.lounesto_class not in range(1, 7):
            raise ValueError(f"class must be 1..6, got {self.lounesto_class}")
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _complex_normal(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def lambda_c(c, phi):
    """The singular family (c sigma_2 phi*, phi)."""
    phi = np.asarray(phi, dtype=complex)
    return join_halves(c * SIGMA2 @ phi.conj(), phi)


def _random_c(rng, lounesto_class):
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    if lounesto_class == 5:
        return phase
    # keep |c| a fixed distance from 1 so that K does not drown in round-off
    magnitude = np.exp(rng.choice([-1, 1]) * rng.uniform(0.2, 1.5))
    return magnitude * phase


def _draw(rng, lounesto_class):
    if lounesto_class in (1, 2, 3):
        psi = _complex_normal(rng, 4)
        if lounesto_class == 1:
            return psi
        z = np.vdot(right_half(psi), left_half(psi))
        # phi_R -> e^{i t} phi_R rotates z by e^{-i t}
        t = np.angle(z) if lounesto_class == 2 else np.angle(z) - np.pi / 2
        return join_halves(np.exp(1j * t) * right_half(psi), left_half(psi))
    phi = _complex_normal(rng, 2)
    if lounesto_class == 6:
        zero = np.zeros(2, dtype=complex)
        return join_halves(zero, phi) if rng.random() < 0.5 else join_halves(phi, zero)
    return lambda_c(_random_c(rng, lounesto_class), phi)


def sample_class(spec, tol=None):
    """``spec.count`` spinors, each verified by the classifier."""
    rng = np.random.default_rng(spec.seed)
    out = np.empty((spec.count, 4), dtype=complex)
    for i in range(spec.count):
        for _ in range(MAX_ATTEMPTS):
            psi = spec.scale * _draw(rng, spec.lounesto_class)
            if int(classify_spinor(psi, tol)) == spec.lounesto_class:
                out[i] = psi
                break
        else:
            raise ExhaustedRetries(f"no class-{spec.lounesto_class} spinor in {MAX_ATTEMPTS} draws")
    return out


def random_free(rng, lounesto_class):
    """Free parameters for the solver: psi_1 for class 1, (Re psi_1, Im psi_1, Re psi_2) otherwise."""
    if lounesto_class == 1:
        return complex(*rng.normal(size=2))
    return tuple(rng.normal(size=3))


def sample_mappable(lounesto_class, mode, count, seed=0, M=None, epsilon=1):
    """Spinors of a Dirac class that pass the mapping conditions of ``mode``.

    Item i uses its own stream seeded by (seed, i), so prefixes are stable.
    Class membership is enforced in direct mode only; paper-mode conditions
    force sigma = 0 and so never admit classes 1 and 2.
    """
    if lounesto_class not in DIRAC_CLASSES:
        raise ValueError(f"Dirac classes are 1, 2, 3; got {lounesto_class}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    out = np.empty((count, 4), dtype=complex)
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        for attempt in range(MAPPABLE_RETRIES):
            try:
                res = solve_equivalence_class(lounesto_class, mode, random_free(rng, lounesto_class),
                                              seed=int(rng.integers(2 ** 63)), M=M, epsilon=epsilon,
                                              verify_class=mode == "direct")
            except NoConvergence:
                if attempt == MAPPABLE_RETRIES - 1:
                    raise
                continue
            out[i] = res.psi
            break
    return out
