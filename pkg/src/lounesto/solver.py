"""Numerical parametrization of the Dirac spinors that M maps to ELKO.

For class 1 the anchor is psi_1 (complex) and the unknowns are psi_2..psi_4;
for classes 2 and 3 the anchor is (Re psi_1, Im psi_1, Re psi_2) and the
unknowns are Im psi_2, psi_3, psi_4.  The condition system is solved with a
damped Gauss-Newton iteration from seeded random starts.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .bilinears import BILINEAR_MATRICES
from .classifier import classify_spinor
from .errors import DegenerateFreeParameters, NoConvergence, WrongClass
from .elko import CHARGE_CONJUGATION
from .gamma import realify_linear
from .mapping import (DEFAULT_TOL, DIRAC_CLASSES, MODES, MappingParams, build_M, direct_conditions,
                      kring_closed_form, omega_ring_closed_form, paper_conditions,
                      sigma_ring_closed_form)

log = logging.getLogger(__name__)

_SIGMA_FORM = realify_linear(BILINEAR_MATRICES[0])
_OMEGA_FORM = realify_linear(BILINEAR_MATRICES[1])


@dataclass
class NewtonResult:
    x: np.ndarray
    residual: float
    iterations: int
    converged: bool


def numerical_jacobian(fun, x, step):
    n = len(x)
    cols = []
    for i in range(n):
        e = np.zeros(n)
        e[i] = step
        cols.append((fun(x + e) - fun(x - e)) / (2 * step))
    return np.column_stack(cols)


def damped_newton(fun, x0, scale_fn, tol=1e-13, max_iter=100, fd_step=1e-7, armijo=1e-4, min_step=1e-10):
    """Gauss-Newton with central-difference Jacobian and Armijo backtracking.

    Stops once |F(x)| <= tol * scale_fn(x).  Over- or under-determined
    systems take the minimum-norm least-squares step.
    """
    x = np.array(x0, dtype=float)
    f = fun(x)
    merit = 0.5 * f @ f
    it = 0
    for it in range(1, max_iter + 1):
        scale = scale_fn(x)
        if np.sqrt(2 * merit) <= tol * scale:
            return NewtonResult(x, float(np.sqrt(2 * merit)), it - 1, True)
        jac = numerical_jacobian(fun, x, fd_step * max(np.sqrt(scale), 1e-300))
        dx = np.linalg.lstsq(jac, -f, rcond=None)[0]
        slope = f @ (jac @ dx)
        if not slope < 0:
            break
        t = 1.0
        while t >= min_step:
            f_new = fun(x + t * dx)
            merit_new = 0.5 * f_new @ f_new
            if merit_new <= merit + armijo * t * slope:
                break
            t *= 0.5
        else:
            break
        x, f, merit = x + t * dx, f_new, merit_new
    res = float(np.sqrt(2 * merit))
    return NewtonResult(x, res, it, res <= tol * scale_fn(x))


@dataclass
class SolveResult:
    psi: np.ndarray
    residual: float
    scale: float
    iterations: int
    restart: int
    report: object


def _free_layout(lounesto_class, free):
    """Returns (fixed real coordinates, unknown real coordinate indices)."""
    fixed = np.zeros(8)  # (Re psi_1..4, Im psi_1..4)
    if lounesto_class == 1:
        z = complex(*free) if isinstance(free, (tuple, list)) else complex(free)
        if z == 0:
            raise DegenerateFreeParameters("psi_1 = 0 leaves the overall scale free")
        fixed[0], fixed[4] = z.real, z.imag
        unknown = [1, 5, 2, 6, 3, 7]
    else:
        a1, b1, a2 = (float(v) for v in free)
        if a1 == b1 == a2 == 0.0:
            raise DegenerateFreeParameters("free components all vanish")
        fixed[0], fixed[4], fixed[1] = a1, b1, a2
        unknown = [5, 2, 6, 3, 7]
    return fixed, np.array(unknown)


def _eigen_condition(M, phase):
    """Real 8x8 matrix of psi -> C M psi - e^{i phase} M psi."""
    m_real = M.realify()
    rot = realify_linear(np.exp(1j * phase) * np.eye(4))
    return (CHARGE_CONJUGATION.realify() - rot) @ m_real


def _phase_starts(M, fixed, unknown, count=72):
    """Phases ordered by how well the linear eigen-condition can be met,
    with the least-squares unknowns and the null space at each phase."""
    starts = []
    for phase in np.linspace(0, 2 * np.pi, count, endpoint=False):
        L = _eigen_condition(M, phase)
        a, b = L[:, unknown], L @ fixed
        y, *_ = np.linalg.lstsq(a, -b, rcond=None)
        _, sv, vt = np.linalg.svd(a)
        rank = int(np.sum(sv > 1e-10 * sv[0]))
        starts.append((float(np.linalg.norm(a @ y + b)), phase, y, vt[rank:]))
    starts.sort(key=lambda s: s[0])
    return starts


def _residual_function(lounesto_class, mode, M, anchor):
    """Residual map on the full real coordinates (plus a phase for 'direct').

    In direct mode the image M psi is required to be a charge-conjugation
    eigenspinor, C M psi = e^{i a} M psi, which is linear in psi for fixed a
    and avoids the degenerate Jacobian of the quadratic conditions
    sigma = omega = K = 0 at class-5 points.
    """
    membership = {1: [], 2: [_OMEGA_FORM], 3: [_SIGMA_FORM]}[lounesto_class]
    if mode == "direct":
        def residuals(x_full, phase):
            lin = anchor * (_eigen_condition(M, phase) @ x_full)
            return np.concatenate([lin, [x_full @ m @ x_full for m in membership]])
    else:
        extra = [f for f in (sigma_ring_closed_form if lounesto_class in (1, 2) else None,
                             omega_ring_closed_form if lounesto_class in (1, 3) else None) if f]

        def residuals(x_full, phase=None):
            psi = x_full[:4] + 1j * x_full[4:]
            out = list(kring_closed_form(psi)) + [f(psi) for f in extra]
            out += [x_full @ m @ x_full for m in membership]
            return np.array(out)
    return residuals


def solve_equivalence_class(lounesto_class, mode, free, seed=0, M=None, epsilon=1, tol=DEFAULT_TOL,
                            accept_tol=1e-9, max_iter=100, restarts=20, verify_class=True):
    """Find a spinor of the given Dirac class whose image under M satisfies the
    conditions of ``mode`` ('paper' closed forms or 'direct' bilinears of M psi).

    Raises NoConvergence when no restart converges, WrongClass when restarts
    converge but never onto the requested class (only with ``verify_class``).
    """
    if lounesto_class not in DIRAC_CLASSES:
        raise ValueError(f"Dirac classes are 1, 2, 3; got {lounesto_class}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if M is None:
        M = build_M(MappingParams.ansatz(epsilon))
    fixed, unknown = _free_layout(lounesto_class, free)
    anchor = np.linalg.norm(fixed)
    fun = _residual_function(lounesto_class, mode, M, anchor)
    n_phase = 1 if mode == "direct" else 0

    def embed(y):
        x = fixed.copy()
        x[unknown] = y[:len(unknown)]
        return x

    def full_fun(y):
        return fun(embed(y), y[-1] if n_phase else None)

    def scale_fn(y):
        x = embed(y)
        return float(x @ x)

    rng = np.random.default_rng(seed)
    starts = _phase_starts(M, fixed, unknown) if n_phase else None
    wrong_class = 0
    for restart in range(restarts):
        if n_phase:
            _, phase, y_lin, null = starts[restart % len(starts)]
            y0 = np.append(y_lin + anchor * rng.normal(size=len(null)) @ null, phase)
        else:
            # start radii spread over decades: some solutions sit far from the anchor
            y0 = anchor * 10 ** rng.uniform(-1, 3) * rng.normal(size=len(unknown))
            if restart % 2:
                # zeroing whole components reaches the coordinate sub-families of solutions
                y0 *= (rng.random(4) < 0.5)[unknown % 4]
        if restart % 4 == 3 and not n_phase:
            # scale-free residual: a different basin structure for the same roots
            res = damped_newton(lambda y: full_fun(y) / scale_fn(y), y0, lambda y: 1.0, max_iter=max_iter)
        else:
            res = damped_newton(full_fun, y0, scale_fn, max_iter=max_iter)
        psi = embed(res.x)
        psi = psi[:4] + 1j * psi[4:]
        check = (direct_conditions(psi, M, lounesto_class, tol) if mode == "direct"
                 else paper_conditions(psi, lounesto_class, tol))
        if check.worst() > accept_tol or not check.mappable:
            log.debug("restart %d: residual %.3e, not accepted", restart, res.residual)
            continue
        if verify_class and int(classify_spinor(psi, tol)) != lounesto_class:
            wrong_class += 1
            log.debug("restart %d: converged outside class %d", restart, lounesto_class)
            continue
        return SolveResult(psi, check.worst(), scale_fn(res.x), res.iterations, restart, check)
    if wrong_class:
        raise WrongClass(f"{wrong_class} of {restarts} restarts converged, none inside class {lounesto_class}")
    raise NoConvergence(f"no convergence after {restarts} restarts of {max_iter} iterations")
