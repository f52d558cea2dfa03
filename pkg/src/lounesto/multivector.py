"""Real Clifford algebra Cl(1,3) with metric diag(+1, -1, -1, -1).

Multivectors carry 16 real coefficients over the basis blades in shortlex
order::

    1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23,
    e012, e013, e023, e123, e0123

where ``e01 := e0 e1`` (index-ascending products).  Every product sign is
derived at import time by sorting basis vectors and contracting repeated
ones with the metric; nothing is hand-tabulated.
"""
from itertools import combinations

import numpy as np

from . import _kernels

METRIC = (1, -1, -1, -1)
DIM = 4

BLADES = tuple(c for k in range(DIM + 1) for c in combinations(range(DIM), k))
BLADE_NAMES = tuple("1" if not b else "e" + "".join(map(str, b)) for b in BLADES)
N_BLADES = len(BLADES)
GRADES = np.array([len(b) for b in BLADES])
_INDEX = {b: i for i, b in enumerate(BLADES)}


def _reorder(left, right):
    """Sign and surviving index tuple of the basis product e_left e_right."""
    seq = list(left) + list(right)
    sign = 1
    # bubble sort, counting transpositions
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    out = []
    for v in seq:
        if out and out[-1] == v:
            out.pop()
            sign *= METRIC[v]
        else:
            out.append(v)
    return sign, tuple(out)


def _build_tables():
    sign = np.zeros((N_BLADES, N_BLADES), dtype=np.int64)
    index = np.zeros((N_BLADES, N_BLADES), dtype=np.int64)
    for i, a in enumerate(BLADES):
        for j, b in enumerate(BLADES):
            s, c = _reorder(a, b)
            sign[i, j] = s
            index[i, j] = _INDEX[c]
    ga, gb = np.meshgrid(GRADES, GRADES, indexing="ij")
    gc = GRADES[index]
    wedge = np.where(gc == ga + gb, sign, 0)
    left = np.where((ga <= gb) & (gc == gb - ga), sign, 0)
    right = np.where((ga >= gb) & (gc == ga - gb), sign, 0)
    return sign, index, wedge, left, right


GP_SIGN, GP_INDEX, WEDGE_SIGN, LEFT_SIGN, RIGHT_SIGN = _build_tables()

# g(e_A, e_A) for each basis blade: determinant of a diagonal Gram matrix
BLADE_METRIC = np.array([np.prod([METRIC[v] for v in b]) if b else 1 for b in BLADES])
REVERSION_SIGN = np.array([(-1) ** (k // 2) for k in GRADES], dtype=float)
INVOLUTION_SIGN = np.array([(-1) ** k for k in GRADES], dtype=float)


class Multivector:
    """An element of Cl(1,3) with value semantics.

    ``*`` is the Clifford product, ``^`` the exterior product, ``~`` the
    reversion; contractions are the methods :meth:`lc` and :meth:`rc`.
    """

    __slots__ = ("coefficients",)
    __array_priority__ = 1000

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = np.zeros(N_BLADES)
        c = np.array(coefficients, dtype=float).reshape(N_BLADES)
        if not np.all(np.isfinite(c)):
            raise ValueError("multivector coefficients must be finite")
        self.coefficients = c

    @classmethod
    def scalar(cls, value):
        c = np.zeros(N_BLADES)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, name, value=1.0):
        c = np.zeros(N_BLADES)
        c[BLADE_NAMES.index(name)] = value
        return cls(c)

    @classmethod
    def vector(cls, components):
        c = np.zeros(N_BLADES)
        c[1:5] = components
        return cls(c)

    @classmethod
    def bivector(cls, components):
        """Coefficients ordered (e01, e02, e03, e12, e13, e23)."""
        c = np.zeros(N_BLADES)
        c[5:11] = components
        return cls(c)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector(self.coefficients + other.coefficients)
        return self + Multivector.scalar(other)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(-self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return clifford_product(self, other)
        return Multivector(self.coefficients * other)

    def __rmul__(self, other):
        return Multivector(other * self.coefficients)

    def __truediv__(self, other):
        return Multivector(self.coefficients / other)

    def __xor__(self, other):
        return wedge(self, other)

    def __invert__(self):
        return reversion(self)

    def lc(self, other):
        return left_contract(self, other)

    def rc(self, other):
        return right_contract(self, other)

    def grade(self, k):
        return grade(self, k)

    def norm(self):
        """Euclidean norm of the coefficient vector (not a metric norm)."""
        return float(np.linalg.norm(self.coefficients))

    def allclose(self, other, atol=1e-12):
        other = other if isinstance(other, Multivector) else Multivector.scalar(other)
        return bool(np.allclose(self.coefficients, other.coefficients, rtol=0.0, atol=atol))

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return bool(np.array_equal(self.coefficients, other.coefficients))

    __hash__ = None

    def __repr__(self):
        terms = [f"{c:+.6g}*{n}" for c, n in zip(self.coefficients, BLADE_NAMES) if c != 0]
        return "Multivector(" + (" ".join(terms) if terms else "0") + ")"


def _coeffs(x):
    return x.coefficients if isinstance(x, Multivector) else Multivector.scalar(x).coefficients


def _product(a, b, sign):
    out = _kernels.blade_product(_coeffs(a)[None, :], _coeffs(b)[None, :], sign, GP_INDEX)
    return Multivector(out[0])


def clifford_product(a, b):
    return _product(a, b, GP_SIGN)


def wedge(a, b):
    return _product(a, b, WEDGE_SIGN)


def left_contract(a, b):
    """Left contraction a ⌟ b: for blades, the grade |b|-|a| part of ab (zero if |a| > |b|)."""
    return _product(a, b, LEFT_SIGN)


def right_contract(a, b):
    """Right contraction a ⌞ b: for blades, the grade |a|-|b| part of ab (zero if |b| > |a|)."""
    return _product(a, b, RIGHT_SIGN)


def clifford_product_batch(a, b):
    """Clifford product of stacked coefficient arrays of shape (n, 16)."""
    return _kernels.blade_product(np.atleast_2d(a), np.atleast_2d(b), GP_SIGN, GP_INDEX)


def reversion(a):
    return Multivector(_coeffs(a) * REVERSION_SIGN)


def grade_involution(a):
    return Multivector(_coeffs(a) * INVOLUTION_SIGN)


def grade(a, k):
    if not 0 <= k <= DIM:
        raise ValueError(f"grade must be in 0..{DIM}, got {k}")
    return Multivector(np.where(GRADES == k, _coeffs(a), 0.0))


def metric_ext(a, b):
    """Extension of the metric to multivectors.

    Distinct basis blades are orthogonal and blades of different grade pair
    to zero, so this is a weighted dot product of coefficients.
    """
    return float(np.sum(_coeffs(a) * _coeffs(b) * BLADE_METRIC))


PSEUDOSCALAR = Multivector.blade("e0123")
