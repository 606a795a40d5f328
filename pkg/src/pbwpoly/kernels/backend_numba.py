"""JIT-compiled depth-first enumeration kernels.

The systems have only non-negative coefficients, so any partial assignment
that satisfies every row extends by zeros to a full point; the walk therefore
never enters a dead branch.  Points come out in ascending lexicographic order.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def count_lattice(colp, crow, cval, rhs):  # pragma: no cover - exercised via dispatcher
    d = colp.shape[0] - 1
    slack = rhs.copy()
    s = np.zeros(d, dtype=np.int64)
    total = 0
    k = 0
    descending = True
    while True:
        if descending:
            if k == d - 1:
                # innermost coordinate in closed form
                ub = slack[crow[colp[k]]] // cval[colp[k]]
                for t in range(colp[k] + 1, colp[k + 1]):
                    q = slack[crow[t]] // cval[t]
                    if q < ub:
                        ub = q
                total += ub + 1
                descending = False
                k -= 1
            else:
                s[k] = 0
                k += 1
        else:
            if k < 0:
                break
            ok = True
            for t in range(colp[k], colp[k + 1]):
                if slack[crow[t]] < cval[t]:
                    ok = False
                    break
            if ok:
                for t in range(colp[k], colp[k + 1]):
                    slack[crow[t]] -= cval[t]
                s[k] += 1
                descending = True
                k += 1
            else:
                if s[k] > 0:
                    for t in range(colp[k], colp[k + 1]):
                        slack[crow[t]] += s[k] * cval[t]
                    s[k] = 0
                k -= 1
    return total


@njit(cache=True, nogil=True)
def _fill_lattice(colp, crow, cval, rhs, out):  # pragma: no cover
    d = colp.shape[0] - 1
    slack = rhs.copy()
    s = np.zeros(d, dtype=np.int64)
    row = 0
    k = 0
    descending = True
    while True:
        if descending:
            if k == d - 1:
                ub = slack[crow[colp[k]]] // cval[colp[k]]
                for t in range(colp[k] + 1, colp[k + 1]):
                    q = slack[crow[t]] // cval[t]
                    if q < ub:
                        ub = q
                for v in range(ub + 1):
                    for j in range(d - 1):
                        out[row, j] = s[j]
                    out[row, d - 1] = v
                    row += 1
                descending = False
                k -= 1
            else:
                s[k] = 0
                k += 1
        else:
            if k < 0:
                break
            ok = True
            for t in range(colp[k], colp[k + 1]):
                if slack[crow[t]] < cval[t]:
                    ok = False
                    break
            if ok:
                for t in range(colp[k], colp[k + 1]):
                    slack[crow[t]] -= cval[t]
                s[k] += 1
                descending = True
                k += 1
            else:
                if s[k] > 0:
                    for t in range(colp[k], colp[k + 1]):
                        slack[crow[t]] += s[k] * cval[t]
                    s[k] = 0
                k -= 1
    return row


def enumerate_lattice(colp, crow, cval, rhs):
    n = count_lattice(colp, crow, cval, rhs)
    d = colp.shape[0] - 1
    out = np.empty((n, d), dtype=np.int64)
    written = _fill_lattice(colp, crow, cval, rhs, out)
    assert written == n
    return out
