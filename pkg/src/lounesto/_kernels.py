"""Hot inner loops, compiled with numba when available.

Set ``LOUNESTO_DISABLE_NUMBA=1`` to force the pure-numpy path (useful for
debugging and for environments without numba).  Both paths are always
importable as ``*_numba`` / ``*_numpy`` so they can be cross-checked.
"""
import os

import numpy as np

_DISABLED = os.environ.get("LOUNESTO_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError("numba disabled by LOUNESTO_DISABLE_NUMBA")
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def _njit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


# --- blade products -------------------------------------------------------

_CAYLEY_CACHE = {}


def _cayley(sign, index):
    key = (sign.tobytes(), index.tobytes())
    cayley = _CAYLEY_CACHE.get(key)
    if cayley is None:
        n_blades = sign.shape[0]
        cayley = np.zeros((n_blades, n_blades, n_blades))
        rows, cols = np.nonzero(sign)
        cayley[rows, cols, index[rows, cols]] = sign[rows, cols]
        _CAYLEY_CACHE[key] = cayley
    return cayley


def blade_product_numpy(a, b, sign, index):
    """Batched bilinear product of (n, 16) coefficient arrays through a sign/index table."""
    cayley = _cayley(sign, index)
    n_blades = cayley.shape[0]
    outer = (a[:, :, None] * b[:, None, :]).reshape(len(a), n_blades * n_blades)
    return outer @ cayley.reshape(n_blades * n_blades, n_blades)


def _blade_product_loop(a, b, sign, index):
    n, n_blades = a.shape
    out = np.zeros((n, n_blades))
    for m in range(n):
        for i in range(n_blades):
            ai = a[m, i]
            if ai == 0.0:
                continue
            for j in range(n_blades):
                s = sign[i, j]
                if s != 0:
                    out[m, index[i, j]] += s * ai * b[m, j]
    return out


blade_product_numba = _njit(_blade_product_loop)


# --- sesquilinear forms psi^dagger G_k psi ---------------------------------

def sesquilinear_numpy(psi, mats):
    """Return psi_n^dagger @ mats[k] @ psi_n for every n, k as an (n, k) complex array."""
    return np.einsum("na,kab,nb->nk", psi.conj(), mats, psi, optimize=True)


def _sesquilinear_sparse_loop(psi, ks, rows, cols, vals, n_mats):
    n = psi.shape[0]
    out = np.zeros((n, n_mats), dtype=np.complex128)
    for m in range(n):
        for t in range(ks.shape[0]):
            out[m, ks[t]] += vals[t] * psi[m, rows[t]].conjugate() * psi[m, cols[t]]
    return out


_sesquilinear_sparse = _njit(_sesquilinear_sparse_loop)
_SPARSE_CACHE = {}


def _sparse(mats):
    key = mats.tobytes()
    entry = _SPARSE_CACHE.get(key)
    if entry is None:
        ks, rows, cols = np.nonzero(mats)
        entry = (ks, rows, cols, np.ascontiguousarray(mats[ks, rows, cols]), mats.shape[0])
        _SPARSE_CACHE[key] = entry
    return entry


def sesquilinear_numba(psi, mats):
    """Loop over the nonzero matrix entries only; the Dirac forms are 4-sparse."""
    return _sesquilinear_sparse(psi, *_sparse(mats))


def blade_product(a, b, sign, index):
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    if USE_NUMBA:
        return blade_product_numba(a, b, sign, index)
    return blade_product_numpy(a, b, sign, index)


def sesquilinear(psi, mats):
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    mats = np.ascontiguousarray(mats, dtype=np.complex128)
    if USE_NUMBA:
        return sesquilinear_numba(psi, mats)
    return sesquilinear_numpy(psi, mats)
