import numpy as np
import pytest

from lounesto.classifier import classify_spinor
from lounesto.errors import DegenerateFreeParameters, NoConvergence, WrongClass
from lounesto.mapping import MappingParams, build_M, direct_conditions, paper_conditions
from lounesto.solver import damped_newton, numerical_jacobian, solve_equivalence_class


def test_jacobian_of_quadratic():
    a = np.array([[2.0, 1.0], [0.0, 3.0]])
    jac = numerical_jacobian(lambda x: np.array([x @ a @ x, x[0]]), np.array([1.0, -2.0]), 1e-6)
    assert np.allclose(jac, [(a + a.T) @ [1, -2], [1, 0]], atol=1e-8)


def test_damped_newton_solves_circle_line():
    fun = lambda x: np.array([x[0] ** 2 + x[1] ** 2 - 4, x[0] - x[1]])  # noqa: E731
    res = damped_newton(fun, np.array([3.0, 0.5]), lambda x: 1.0)
    assert res.converged and np.allclose(np.abs(res.x), np.sqrt(2))


def test_damped_newton_reports_failure():
    res = damped_newton(lambda x: np.array([x[0] ** 2 + 1]), np.array([0.5]), lambda x: 1.0, max_iter=20)
    assert not res.converged


@pytest.mark.parametrize("cls,free", [(1, 0.7 - 0.2j), (2, (0.3, 1.0, -0.5)), (3, (1.0, 0.2, 0.4))])
def test_direct_mode(cls, free):
    res = solve_equivalence_class(cls, "direct", free, seed=3)
    assert int(classify_spinor(res.psi)) == cls
    assert res.report.mappable and res.report.extra["mapped_class"] == 5
    assert res.residual <= 1e-9
    assert res.psi[0] == (free if cls == 1 else complex(free[0], free[1]))


def test_paper_mode_class_3_near_golden():
    res = solve_equivalence_class(3, "paper", (1.0, 0.05, 0.0), seed=0)
    assert int(classify_spinor(res.psi)) == 3
    assert paper_conditions(res.psi, 3).mappable


@pytest.mark.parametrize("cls", [1, 2])
def test_paper_mode_classes_1_2_unreachable(cls):
    free = 0.4 + 0.9j if cls == 1 else (0.4, 0.9, -0.3)
    with pytest.raises(WrongClass):
        solve_equivalence_class(cls, "paper", free, seed=1)
    res = solve_equivalence_class(cls, "paper", free, seed=1, verify_class=False)
    assert res.report.mappable and int(classify_spinor(res.psi)) not in (1, 2)


def test_deterministic():
    a = solve_equivalence_class(2, "direct", (0.1, 0.2, 0.3), seed=9)
    b = solve_equivalence_class(2, "direct", (0.1, 0.2, 0.3), seed=9)
    assert np.array_equal(a.psi, b.psi)


def test_degenerate_free_parameters():
    with pytest.raises(DegenerateFreeParameters):
        solve_equivalence_class(1, "direct", 0j)
    with pytest.raises(DegenerateFreeParameters):
        solve_equivalence_class(3, "paper", (0, 0, 0))


def test_bad_arguments():
    with pytest.raises(ValueError):
        solve_equivalence_class(4, "direct", 1j)
    with pytest.raises(ValueError):
        solve_equivalence_class(1, "sideways", 1j)


def test_no_convergence_when_starved():
    with pytest.raises(NoConvergence):
        solve_equivalence_class(1, "paper", 0.5 + 0.5j, max_iter=1, restarts=1)


@pytest.mark.parametrize("eps", [1, -1])
def test_custom_operator(eps, rng):
    M = build_M(MappingParams.random(rng, epsilon=eps))
    res = solve_equivalence_class(1, "direct", 1.0 + 0.5j, seed=0, M=M)
    assert direct_conditions(res.psi, M, 1).mappable


@pytest.mark.parametrize("cls", [1, 2])
def test_table_rows_vanish_on_paper_solutions(cls):
    free = 0.8 - 0.4j if cls == 1 else (0.8, -0.4, 0.3)
    res = solve_equivalence_class(cls, "paper", free, seed=2, verify_class=False)
    assert res.report.extra["consistency"]["table1_agrees"]
