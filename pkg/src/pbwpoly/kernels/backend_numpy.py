"""Pure-NumPy enumeration kernels (layered frontier expansion).

Same contract and output order as the JIT backend: the frontier of valid
prefixes is grown one coordinate at a time, so no invalid prefix is ever
materialized, and children are emitted with ascending coordinate values.
"""
from __future__ import annotations

import numpy as np


def _column_bound(slack: np.ndarray, colp, crow, cval, k: int) -> np.ndarray:
    """Per-prefix upper bound for coordinate k: min over its rows of slack // coeff."""
    t0, t1 = colp[k], colp[k + 1]
    ub = slack[:, crow[t0]] // cval[t0]
    for t in range(t0 + 1, t1):
        np.minimum(ub, slack[:, crow[t]] // cval[t], out=ub)
    return ub


def _expand(reps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Repeat indices and produce the 0..reps[i]-1 child values, in order."""
    idx = np.repeat(np.arange(reps.shape[0], dtype=np.int64), reps)
    offsets = np.zeros(reps.shape[0], dtype=np.int64)
    np.cumsum(reps[:-1], out=offsets[1:])
    vals = np.arange(idx.shape[0], dtype=np.int64) - offsets[idx]
    return idx, vals


def count_lattice(colp, crow, cval, rhs) -> int:
    d = colp.shape[0] - 1
    slack = rhs[None, :].astype(np.int64).copy()
    for k in range(d - 1):
        reps = _column_bound(slack, colp, crow, cval, k) + 1
        idx, vals = _expand(reps)
        slack = slack[idx]
        for t in range(colp[k], colp[k + 1]):
            slack[:, crow[t]] -= vals * cval[t]
    ub = _column_bound(slack, colp, crow, cval, d - 1)
    return int((ub + 1).sum())


def enumerate_lattice(colp, crow, cval, rhs) -> np.ndarray:
    d = colp.shape[0] - 1
    slack = rhs[None, :].astype(np.int64).copy()
    pts = np.zeros((1, 0), dtype=np.int64)
    for k in range(d):
        reps = _column_bound(slack, colp, crow, cval, k) + 1
        idx, vals = _expand(reps)
        pts = np.concatenate([pts[idx], vals[:, None]], axis=1)
        if k < d - 1:
            slack = slack[idx]
            for t in range(colp[k], colp[k + 1]):
                slack[:, crow[t]] -= vals * cval[t]
    return pts
