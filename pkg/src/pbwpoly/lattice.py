"""Exact lattice-point enumeration of instantiated systems, and the weight /
character data read off the resulting point sets."""
from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from . import kernels
from .roots import Root, RootSystem, Weight
from .systems import Instance


class BudgetExceeded(RuntimeError):
    pass


def coordinate_bounds(instance: Instance) -> np.ndarray:
    """Sound per-coordinate upper bounds: min over covering rows of floor(rhs/coeff)."""
    d = instance.dim
    colp, crow, cval = instance.colp, instance.crow, instance.cval
    out = np.empty(d, dtype=np.int64)
    for k in range(d):
        t0, t1 = colp[k], colp[k + 1]
        if t0 == t1:
            raise ValueError(f"coordinate {instance.ambient[k].name} is unconstrained")
        out[k] = min(instance.rhs[crow[t]] // cval[t] for t in range(t0, t1))
    return out


@dataclass(frozen=True, eq=False)
class LatticeSet:
    """A sorted, duplicate-free set of non-negative integer points.

    ``points`` is an (N, d) int64 array in ascending lexicographic order,
    aligned with ``ambient``.  ``provenance`` records which system and weight
    produced it.
    """

    ambient: tuple[Root, ...]
    points: np.ndarray
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points.setflags(write=False)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return len(self.ambient)

    def same_set(self, other: "LatticeSet") -> bool:
        if [r.name for r in self.ambient] != [r.name for r in other.ambient]:
            raise ValueError("ambient mismatch")
        return self.points.shape == other.points.shape and bool(
            np.array_equal(self.points, other.points))

    def as_tuple_set(self) -> set[tuple[int, ...]]:
        return set(map(tuple, self.points.tolist()))

    def contains(self, point) -> bool:
        vec = np.asarray(point, dtype=np.int64)
        if vec.shape != (self.dim,):
            raise ValueError("point dimension mismatch")
        lo = np.searchsorted(self._keys(), _encode_rows(vec[None, :], self._strides())[0])
        return bool(lo < len(self) and np.array_equal(self.points[lo], vec))

    def _strides(self) -> np.ndarray:
        hi = self.points.max(axis=0, initial=0).astype(object) + 1
        strides = np.ones(self.dim, dtype=object)
        for k in range(self.dim - 2, -1, -1):
            strides[k] = strides[k + 1] * hi[k + 1]
        return strides

    def _keys(self) -> np.ndarray:
        return _encode_rows(self.points, self._strides())

    def embed(self, ambient: tuple[Root, ...]) -> "LatticeSet":
        """Zero-extend onto a larger ambient root list (order-preserving)."""
        names = [r.name for r in ambient]
        pos = []
        for r in self.ambient:
            try:
                pos.append(names.index(r.name))
            except ValueError:
                raise ValueError(f"target ambient is missing {r.name}") from None
        out = np.zeros((len(self), len(ambient)), dtype=np.int64)
        out[:, pos] = self.points
        order = np.lexsort(out.T[::-1])
        return LatticeSet(tuple(ambient), out[order], dict(self.provenance))

    def to_json(self, include_points: bool = True) -> dict:
        obj = {
            "system": self.provenance.get("system", ""),
            "lambda": list(self.provenance.get("lambda", ())),
            "ambient": [r.name for r in self.ambient],
            "count": len(self),
        }
        if include_points:
            obj["points"] = self.points.tolist()
        return obj


def _encode_rows(pts: np.ndarray, strides: np.ndarray) -> np.ndarray:
    # object dtype keeps this exact even when products overflow int64
    return (pts.astype(object) * strides[None, :]).sum(axis=1)


def _split_first_column(instance: Instance):
    """Sub-system over coordinates 1..d-1 plus per-value slack vectors."""
    colp, crow, cval = instance.colp, instance.crow, instance.cval
    t0, t1 = colp[0], colp[1]
    ub0 = min(instance.rhs[crow[t]] // cval[t] for t in range(t0, t1))
    sub_colp = (colp[1:] - colp[1]).copy()
    sub_crow = crow[colp[1]:].copy()
    sub_cval = cval[colp[1]:].copy()
    col0 = np.zeros_like(instance.rhs)
    for t in range(t0, t1):
        col0[crow[t]] = cval[t]
    return ub0, sub_colp, sub_crow, sub_cval, col0


def count_points(instance: Instance, workers: int = 1, backend: Optional[str] = None) -> int:
    """|{s >= 0 integral : A s <= rhs}| without materializing the points."""
    mod = kernels.get_backend(backend)
    if workers <= 1 or instance.dim == 1:
        return int(mod.count_lattice(instance.colp, instance.crow, instance.cval, instance.rhs))
    ub0, colp, crow, cval, col0 = _split_first_column(instance)
    slacks = [instance.rhs - v * col0 for v in range(ub0 + 1)]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda sl: mod.count_lattice(colp, crow, cval, sl), slacks))
    return int(sum(parts))


def enumerate_points(instance: Instance, workers: int = 1, backend: Optional[str] = None,
                     budget_points: Optional[int] = None) -> LatticeSet:
    """All integer solutions, in ascending lexicographic order.

    With ``workers > 1`` the outermost coordinate range is partitioned across
    a thread pool; the slab results are concatenated in order, so the output
    is identical to a single-threaded run.
    """
    mod = kernels.get_backend(backend)
    if budget_points is not None:
        n = count_points(instance, workers=workers, backend=backend)
        if n > budget_points:
            raise BudgetExceeded(f"{n} lattice points exceed the budget of {budget_points}")
    if workers <= 1 or instance.dim == 1:
        pts = mod.enumerate_lattice(instance.colp, instance.crow, instance.cval, instance.rhs)
    else:
        ub0, colp, crow, cval, col0 = _split_first_column(instance)
        slacks = [instance.rhs - v * col0 for v in range(ub0 + 1)]
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            slabs = list(pool.map(lambda sl: mod.enumerate_lattice(colp, crow, cval, sl), slacks))
        parts = []
        for v, slab in enumerate(slabs):
            block = np.empty((slab.shape[0], instance.dim), dtype=np.int64)
            block[:, 0] = v
            block[:, 1:] = slab
            parts.append(block)
        pts = np.concatenate(parts, axis=0) if parts else np.zeros((0, instance.dim), np.int64)
    return LatticeSet(
        instance.ambient, pts,
        {"system": instance.system.name, "lambda": instance.weight.fund},
    )


# -- weights and characters ---------------------------------------------------


def ambient_fund_matrix(rs: RootSystem, ambient: tuple[Root, ...]) -> np.ndarray:
    """Row k = fundamental coordinates of ambient root k (an integer matrix)."""
    return np.array([rs.root_weight(r).fund for r in ambient], dtype=np.int64)


def weight_of(rs: RootSystem, ambient: tuple[Root, ...], point) -> Weight:
    """wt(s) = sum_beta s_beta * beta, as a Weight; linear in s."""
    vec = np.asarray(point, dtype=np.int64)
    fund = vec @ ambient_fund_matrix(rs, ambient)
    return Weight(tuple(int(x) for x in fund))


def character(rs: RootSystem, lattice_set: LatticeSet, lam: Weight) -> dict[tuple[int, ...], int]:
    """mu |-> |{s : lam - wt(s) = mu}| over the point set."""
    mat = ambient_fund_matrix(rs, lattice_set.ambient)
    mus = np.asarray(lam.fund, dtype=np.int64)[None, :] - lattice_set.points @ mat
    out: dict[tuple[int, ...], int] = {}
    for row in mus.tolist():
        key = tuple(row)
        out[key] = out.get(key, 0) + 1
    return out


@dataclass(frozen=True)
class QCharacter:
    """Graded character data: weight -> (total degree -> multiplicity)."""

    entries: Mapping[tuple[int, ...], Mapping[int, int]]

    def total_mass(self) -> int:
        return sum(m for degs in self.entries.values() for m in degs.values())

    def specialize(self) -> dict[tuple[int, ...], int]:
        """Sum out the degree grading (the q -> 1 specialization)."""
        return {mu: sum(degs.values()) for mu, degs in self.entries.items()}

    def degree_stratum(self, degree: int) -> dict[tuple[int, ...], int]:
        return {mu: degs[degree] for mu, degs in self.entries.items() if degree in degs}

    def max_degree(self) -> int:
        return max(d for degs in self.entries.values() for d in degs)

    def to_json(self) -> dict:
        return {",".join(map(str, mu)): {str(d): m for d, m in sorted(degs.items())}
                for mu, degs in sorted(self.entries.items())}


def graded_q_character(rs: RootSystem, lattice_set: LatticeSet, lam: Weight) -> QCharacter:
    """Refine the character by total degree sum(s)."""
    mat = ambient_fund_matrix(rs, lattice_set.ambient)
    mus = np.asarray(lam.fund, dtype=np.int64)[None, :] - lattice_set.points @ mat
    degrees = lattice_set.points.sum(axis=1)
    entries: dict[tuple[int, ...], dict[int, int]] = {}
    for row, deg in zip(mus.tolist(), degrees.tolist()):
        slot = entries.setdefault(tuple(row), {})
        slot[deg] = slot.get(deg, 0) + 1
    return QCharacter(entries)
