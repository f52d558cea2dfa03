"""Clifford algebra Cl(1,3), spinor bilinears, Lounesto classes and maps from Dirac spinors to ELKO."""
__version__ = "0.1.0"

from .bilinears import BilinearSet, compute_bilinears, fierz_residuals, flagpole, majorana_from_weyl, pq_residuals
from .classifier import LounestoClass, Tolerance, classify, classify_spinor, is_regular, is_singular
from .elko import ALL_LABELS, ElkoLabel, Momentum, charge_conjugate, dual_pairing, elko_dual, elko_spinor
from .errors import *  # noqa: F401,F403
from .gamma import AntilinearOperator, apply, compose, gamma_basis, invert, realified_det
from .mapping import (MappingParams, adjoint_relation, ansatz_M, build_M, compare_modes, direct_conditions,
                      kring_closed_form, mapped_bilinears, paper_conditions)
from .multivector import Multivector, clifford_product, left_contract, right_contract, wedge
from .sampler import SampleSpec, sample_class, sample_mappable
from .solver import solve_equivalence_class
