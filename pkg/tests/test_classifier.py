import numpy as np
import pytest

from conftest import random_spinor
from lounesto.bilinears import BilinearSet, compute_bilinears
from lounesto.classifier import LounestoClass, Tolerance, classify, classify_spinor, is_regular, is_singular
from lounesto.elko import ALL_LABELS, elko_spinor
from lounesto.sampler import lambda_c


@pytest.mark.parametrize("psi,expected", [
    ([1, 0, 1, 0], LounestoClass.DIRAC_2),
    ([1, 0, 1j, 0], LounestoClass.DIRAC_3),
    ([0, 1j, 1, 0], LounestoClass.FLAGPOLE),
    ([1, 0, 0, 0], LounestoClass.WEYL),
    ([0, 0, 0.3, 2j], LounestoClass.WEYL),
    ([0, 0, 0, 0], LounestoClass.DEGENERATE),
])
def test_known_spinors(psi, expected):
    assert classify_spinor(psi) is expected


def test_generic_spinor_is_class_1(rng):
    assert all(classify_spinor(p) is LounestoClass.DIRAC_1 for p in random_spinor(rng, 50))


def test_elko_is_flagpole():
    assert all(classify_spinor(elko_spinor(label)) is LounestoClass.FLAGPOLE for label in ALL_LABELS)


def test_flag_dipole():
    assert classify_spinor(lambda_c(2.0, [1, 0.5j])) is LounestoClass.FLAG_DIPOLE


def test_regularity():
    b = compute_bilinears([1, 0, 1j, 0])
    assert is_regular(b) and not is_singular(b)
    assert LounestoClass.DIRAC_3.is_regular and not LounestoClass.WEYL.is_regular
    assert is_singular(compute_bilinears([0, 1j, 1, 0]))


def test_tolerance_is_relative():
    psi = np.array([1, 0, 1, 1e-6])
    assert classify_spinor(1e8 * psi) is classify_spinor(psi)
    loose = Tolerance(1e-3)
    assert classify(compute_bilinears([1, 0, 1j + 1e-5, 0]), loose) is LounestoClass.DIRAC_3
    assert classify_spinor([1, 0, 1j + 1e-5, 0]) is LounestoClass.DIRAC_1


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(0.0)


def test_non_physical_bilinears_are_degenerate():
    assert classify(BilinearSet.zero()) is LounestoClass.DEGENERATE
    row = np.zeros(16)
    row[2] = np.nan
    assert classify(BilinearSet.from_row(row)) is LounestoClass.DEGENERATE
