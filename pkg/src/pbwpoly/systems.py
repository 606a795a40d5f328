"""Inequality systems over indexed positive roots.

A system is a set of rows  sum_beta c_beta * s_beta <= rhs(lambda)  where the
right-hand side is a linear form in the fundamental coefficients of a
dominant weight lambda.  Builders cover the Dyck-path systems for B_n columns,
the 19-row general-weight B_3 system, its two-row omega_1 variants, and the
7-row G2 system.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import dyck
from .roots import Root, RootSystem, Weight, build_root_system, radical_roots, theta_pairing

# Partial sums stay below the instantiated right-hand sides, so this bound
# keeps every int64 add in the kernels far from overflow.
MAX_RHS = 1 << 60


@dataclass(frozen=True)
class RhsForm:
    """A linear form  lambda = (m_1..m_n)  |->  sum a_k m_k  with a_k >= 0."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.coeffs):
            raise ValueError("right-hand side forms must have non-negative coefficients")

    def __call__(self, w: Weight) -> int:
        return sum(a * m for a, m in zip(self.coeffs, w.fund, strict=True))

    def __add__(self, other: "RhsForm") -> "RhsForm":
        return RhsForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))


@dataclass(frozen=True)
class Row:
    """One inequality: sparse coefficients over the ambient index, rhs form, origin tag."""

    coeffs: tuple[tuple[int, int], ...]  # (ambient index, coefficient), index-sorted
    rhs: RhsForm
    tag: str

    def coeff_map(self) -> dict[int, int]:
        return dict(self.coeffs)


class InequalitySystem:
    """An immutable system of rows over an ordered ambient root list."""

    def __init__(self, name: str, rank: int, ambient: Sequence[Root], rows: Iterable[Row]):
        self.name = name
        self.rank = rank
        self.ambient = tuple(ambient)
        self.rows = tuple(rows)
        if not self.rows:
            raise ValueError("a system needs at least one row")
        covered = set()
        for row in self.rows:
            for idx, c in row.coeffs:
                if not 0 <= idx < len(self.ambient):
                    raise ValueError(f"row {row.tag!r} indexes outside the ambient list")
                if c <= 0:
                    raise ValueError(f"row {row.tag!r} has a non-positive coefficient")
                covered.add(idx)
        missing = [self.ambient[k].name for k in range(len(self.ambient)) if k not in covered]
        if missing:
            raise ValueError(f"unbounded coordinates (no row constrains): {missing}")

    @property
    def dim(self) -> int:
        return len(self.ambient)

    def at(self, w: Weight) -> "Instance":
        return instantiate(self, w)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ambient": [r.name for r in self.ambient],
            "rows": [
                {
                    "coeffs": {self.ambient[k].name: c for k, c in row.coeffs},
                    "rhs_form": list(row.rhs.coeffs),
                    "tag": row.tag,
                }
                for row in self.rows
            ],
        }


class Instance:
    """A system with the right-hand sides evaluated at a concrete weight.

    Carries dense and column-compressed integer matrices ready for the
    enumeration kernels.
    """

    def __init__(self, system: InequalitySystem, w: Weight):
        self.system = system
        self.weight = w
        d, r = system.dim, len(system.rows)
        matrix = np.zeros((r, d), dtype=np.int64)
        rhs = np.zeros(r, dtype=np.int64)
        for t, row in enumerate(system.rows):
            for k, c in row.coeffs:
                matrix[t, k] = c
            val = row.rhs(w)
            if val >= MAX_RHS:
                raise OverflowError(f"right-hand side {val} exceeds the checked integer range")
            rhs[t] = val
        self.matrix = matrix
        self.rhs = rhs
        cols = [[] for _ in range(d)]
        for t, row in enumerate(system.rows):
            for k, c in row.coeffs:
                cols[k].append((t, c))
        colp = np.zeros(d + 1, dtype=np.int64)
        crow = np.zeros(matrix.astype(bool).sum(), dtype=np.int64)
        cval = np.zeros_like(crow)
        pos = 0
        for k in range(d):
            colp[k] = pos
            for t, c in cols[k]:
                crow[pos] = t
                cval[pos] = c
                pos += 1
        colp[d] = pos
        self.colp, self.crow, self.cval = colp, crow, cval
        for arr in (self.matrix, self.rhs, colp, crow, cval):
            arr.setflags(write=False)

    @property
    def ambient(self) -> tuple[Root, ...]:
        return self.system.ambient

    @property
    def dim(self) -> int:
        return self.system.dim

    def descriptor(self) -> str:
        return f"{self.system.name}@{','.join(str(m) for m in self.weight.fund)}"

    def satisfies(self, point: np.ndarray) -> bool:
        return bool(np.all(self.matrix @ np.asarray(point, dtype=np.int64) <= self.rhs))


def instantiate(system: InequalitySystem, w: Weight) -> Instance:
    """Evaluate all right-hand sides at a dominant weight of matching rank."""
    if len(w.fund) != system.rank:
        raise ValueError(f"weight rank {len(w.fund)} != system rank {system.rank}")
    if not w.is_dominant:
        raise ValueError(f"negative fundamental coefficients in {w.fund}")
    return Instance(system, w)


# -- Dyck-path systems for rectangular weights m*omega_i --------------------


def rectangular_system(rs: RootSystem, i: int) -> InequalitySystem:
    """One row per Dyck path of column i, over the radical root set.

    Single walks bound the sum by m, double walks by m * omega_i(theta^vee);
    the pairing is computed, not hardcoded.
    """
    if rs.kind != "B":
        raise ValueError("Dyck-path systems are built over the B systems")
    ambient = radical_roots(rs, i)
    index = {r.name: k for k, r in enumerate(ambient)}
    single = RhsForm(tuple(1 if k == i - 1 else 0 for k in range(rs.rank)))
    double = RhsForm(tuple(theta_pairing(rs, i) if k == i - 1 else 0 for k in range(rs.rank)))
    rows = []
    for path in dyck.all_paths(rs, i):
        idxs = tuple(sorted(index[r.name] for r in path.roots))
        form = single if path.kind != dyck.TYPE2 else double
        tag = f"{path.kind}:{'+'.join(r.name for r in path.roots)}"
        rows.append(Row(tuple((k, 1) for k in idxs), form, tag))
    return InequalitySystem(f"rect[B{rs.rank},i={i}]", rs.rank, ambient, rows)


# -- general-weight B_3 system ----------------------------------------------

# Coordinate names s1..s9 over the nine positive roots of B_3:
B3_BETA_LABELS = {
    1: (1, 5), 2: (1, 4), 3: (2, 4), 4: (1, 3), 5: (2, 3),
    6: (1, 2), 7: (2, 2), 8: (3, 3), 9: (1, 1),
}

# Rows (1)-(19): {s_i: coefficient} and the rhs form (a, b, c) = a*m1+b*m2+c*m3.
_B3_ROWS: list[tuple[dict[int, int], tuple[int, int, int]]] = [
    ({2: 1, 3: 1, 4: 1, 8: 1, 9: 1}, (1, 1, 1)),                      # (1)
    ({3: 1, 4: 1, 5: 1, 8: 1, 9: 1}, (1, 1, 1)),                      # (2)
    ({4: 1, 5: 1, 6: 1, 8: 1, 9: 1}, (1, 1, 1)),                      # (3)
    ({5: 1, 6: 1, 7: 1, 8: 1, 9: 1}, (1, 1, 1)),                      # (4)
    ({3: 1, 5: 1, 8: 1}, (0, 1, 1)),                                  # (5)
    ({5: 1, 7: 1, 8: 1}, (0, 1, 1)),                                  # (6)
    ({6: 1, 7: 1, 9: 1}, (1, 1, 0)),                                  # (7)
    ({7: 1}, (0, 1, 0)),                                              # (8)
    ({8: 1}, (0, 0, 1)),                                              # (9)
    ({9: 1}, (1, 0, 0)),                                              # (10)
    ({3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1}, (1, 2, 1)),          # (11)
    ({1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 7: 1, 9: 1}, (1, 2, 1)),          # (12)
    ({1: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 9: 1}, (1, 2, 1)),          # (13)
    ({2: 1, 3: 1, 4: 1, 5: 1, 7: 1, 8: 1, 9: 1}, (1, 2, 1)),          # (14)
    ({1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 9: 2}, (2, 2, 1)),    # (15)
    ({2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1, 9: 2}, (2, 2, 1)),    # (16)
    ({1: 1, 2: 1, 3: 2, 4: 2, 5: 2, 6: 1, 7: 1, 8: 1, 9: 2}, (2, 3, 2)),  # (17)
    ({2: 1, 3: 2, 4: 2, 5: 2, 6: 1, 7: 1, 8: 2, 9: 2}, (2, 3, 2)),    # (18)
    ({3: 1, 4: 1, 5: 2, 6: 1, 7: 1, 8: 2, 9: 1}, (1, 2, 2)),          # (19)
]


def _b3_ambient() -> tuple[RootSystem, list[Root], dict[int, int]]:
    rs = build_root_system("B", 3)
    ambient = list(rs.positive_roots)
    index = {r.name: k for k, r in enumerate(ambient)}
    beta_to_idx = {b: index[f"a[{p},{q}]"] for b, (p, q) in B3_BETA_LABELS.items()}
    return rs, ambient, beta_to_idx


def b3_system() -> InequalitySystem:
    """The 19-row system over all nine positive roots of B_3."""
    _, ambient, beta_to_idx = _b3_ambient()
    rows = []
    for num, (coeffs, form) in enumerate(_B3_ROWS, start=1):
        pairs = tuple(sorted((beta_to_idx[b], c) for b, c in coeffs.items()))
        rows.append(Row(pairs, RhsForm(form), f"({num})"))
    return InequalitySystem("b3", 3, ambient, rows)


B3_OMEGA1_VARIANTS = {
    # the two-row simplification of the 19-row system at lambda = m*omega_1
    "simplified": (( (1, 4, 6, 9), (1, 2, 4, 9) )),
    # the two rows coming from the column-1 Dyck paths
    "dyck": (( (1, 2, 4, 6), (2, 4, 6, 9) )),
}


def b3_omega1_system(variant: str) -> InequalitySystem:
    """One of the two 2-row systems for B_3 weights m*omega_1, over the column-1 radical."""
    if variant not in B3_OMEGA1_VARIANTS:
        raise ValueError(f"variant must be one of {sorted(B3_OMEGA1_VARIANTS)}")
    rs, _, beta_to_idx = _b3_ambient()
    ambient = radical_roots(rs, 1)
    index = {r.name: k for k, r in enumerate(ambient)}
    full_ambient = list(rs.positive_roots)
    rows = []
    for betas in B3_OMEGA1_VARIANTS[variant]:
        idxs = tuple(sorted(index[full_ambient[beta_to_idx[b]].name] for b in betas))
        tag = "s" + "+s".join(str(b) for b in betas)
        rows.append(Row(tuple((k, 1) for k in idxs), RhsForm((1, 0, 0)), tag))
    return InequalitySystem(f"b3-omega1[{variant}]", 3, ambient, rows)


# -- G2 system ---------------------------------------------------------------

# Rows (1)-(7) over s1..s6; rhs form (a, b) = a*m1 + b*m2.
_G2_ROWS: list[tuple[dict[int, int], tuple[int, int]]] = [
    ({6: 1}, (1, 0)),                          # (1)
    ({5: 1}, (0, 1)),                          # (2)
    ({2: 1, 3: 1, 6: 1}, (1, 1)),              # (3)
    ({3: 1, 4: 1, 6: 1}, (1, 1)),              # (4)
    ({4: 1, 5: 1, 6: 1}, (1, 1)),              # (5)
    ({1: 1, 2: 1, 3: 1, 4: 1, 5: 1}, (1, 2)),  # (6)
    ({2: 1, 3: 1, 4: 1, 5: 1, 6: 1}, (1, 2)),  # (7)
]


def g2_system() -> InequalitySystem:
    """The 7-row system over the six positive roots b1..b6 of G2."""
    rs = build_root_system("G2", 2)
    ambient = list(rs.positive_roots)  # b1..b6 in order
    rows = []
    for num, (coeffs, form) in enumerate(_G2_ROWS, start=1):
        pairs = tuple(sorted((b - 1, c) for b, c in coeffs.items()))
        rows.append(Row(pairs, RhsForm(form), f"({num})"))
    return InequalitySystem("g2", 2, ambient, rows)
