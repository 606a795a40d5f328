"""Independent representation-theoretic ground truth.

Dimensions come from the Weyl product formula and weight multiplicities from
the Freudenthal recursion, both over exact rationals.  These never touch the
lattice enumeration code, so they can serve as oracles for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .roots import RootSystem, Weight


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """dim V(lam) = prod_{a > 0} (lam + rho, a) / (rho, a), exact."""
    if not lam.is_dominant:
        raise ValueError(f"weight {lam.fund} is not dominant")
    shifted = lam + rs.rho
    num = Fraction(1)
    den = Fraction(1)
    for root in rs.positive_roots:
        num *= rs.weight_root_form(shifted, root)
        den *= rs.weight_root_form(rs.rho, root)
    val = num / den
    assert val.denominator == 1
    return int(val)


def b3_weyl_polynomial(m1: int, m2: int, m3: int, misprint: bool = False) -> int:
    """The factored degree-9 dimension polynomial for B_3 weights.

    With ``misprint=True`` the (m3 + 1) factor is replaced by a second copy
    of (m2 + 1); that variant does not reproduce dimensions (it drops to 4
    instead of 8 at (0, 0, 1)) and is kept only as a regression pin.
    """
    third = (m2 + 1) if misprint else (m3 + 1)
    prod = (
        (m1 + 1) * (m2 + 1) * third
        * (m1 + 2 * m2 + m3 + 4)
        * (2 * m1 + 2 * m2 + m3 + 5)
        * (m1 + m2 + m3 + 3)
        * (m1 + m2 + 2)
        * (m2 + m3 + 2)
        * (2 * m2 + m3 + 3)
    )
    if prod % 720 != 0:
        raise ArithmeticError(f"product {prod} not divisible by 720")
    return prod // 720


# -- Freudenthal multiplicities ------------------------------------------------


def _dominant_chamber(rs: RootSystem, fund: tuple[int, ...]) -> tuple[int, ...]:
    """Reflect a weight into the dominant chamber by simple reflections."""
    v = list(fund)
    n = rs.rank
    while True:
        for i in range(n):
            if v[i] < 0:
                c = v[i]
                for j in range(n):
                    v[j] -= c * rs.cartan_fund[j][i]
                break
        else:
            return tuple(v)


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All dominant mu with lam - mu a non-negative root combination.

    Returns (mu fundamental coords, lam - mu simple coords) pairs sorted by
    ascending height of lam - mu.
    """
    n = rs.rank
    simple = rs.weight_in_simple(lam)
    box = [int(x) for x in simple]  # floor; c_i <= coordinate of lam over alpha_i
    found = []

    def rec(i: int, acc: list[int]):
        if i == n:
            fund = tuple(lam.fund[j] - sum(rs.cartan_fund[j][k] * acc[k] for k in range(n))
                         for j in range(n))
            if all(x >= 0 for x in fund):
                found.append((fund, tuple(acc)))
            return
        for c in range(box[i] + 1):
            acc.append(c)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    found.sort(key=lambda pair: (sum(pair[1]), pair[1]))
    return found


def _weyl_orbit(rs: RootSystem, fund: tuple[int, ...]) -> set[tuple[int, ...]]:
    n = rs.rank
    orbit = {fund}
    frontier = [fund]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                if w[i] == 0:
                    continue
                img = tuple(w[j] - w[i] * rs.cartan_fund[j][i] for j in range(n))
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    return orbit


def freudenthal_multiplicities(rs: RootSystem, lam: Weight,
                               budget: int = 200_000) -> dict[tuple[int, ...], int]:
    """The full weight-multiplicity map of V(lam) by the Freudenthal recursion.

    Multiplicities are computed on the dominant chamber only and fanned out
    over Weyl orbits.  Exactness is asserted: every division in the recursion
    must come out integral.
    """
    if not lam.is_dominant:
        raise ValueError(f"weight {lam.fund} is not dominant")
    dim = weyl_dimension(rs, lam)
    if dim > budget:
        raise ValueError(f"dim V{lam.fund} = {dim} exceeds the budget {budget}")

    dominants = _dominant_weights_below(rs, lam)
    gap_simple = {fund: simple for fund, simple in dominants}
    mult: dict[tuple[int, ...], int] = {}
    roots = [(rs.root_weight(r), r.simple) for r in rs.positive_roots]
    lam_rho = lam + rs.rho
    lam_rho_norm = rs.weight_form(lam_rho, lam_rho)

    def lookup(fund: tuple[int, ...]) -> int:
        return mult.get(_dominant_chamber(rs, fund), 0)

    for fund, simple in dominants:
        if sum(simple) == 0:
            mult[fund] = 1
            continue
        acc = Fraction(0)
        for root_w, root_simple in roots:
            # k bounded by lam - (mu + k a) staying a non-negative combination
            kmax = min(simple[j] // root_simple[j]
                       for j in range(rs.rank) if root_simple[j] > 0)
            for k in range(1, kmax + 1):
                shifted = Weight(tuple(fund[j] + k * root_w.fund[j] for j in range(rs.rank)))
                m = lookup(shifted.fund)
                if m:
                    acc += m * rs.weight_form(shifted, Weight(root_w.fund))
        mu_rho = Weight(fund) + rs.rho
        denom = lam_rho_norm - rs.weight_form(mu_rho, mu_rho)
        assert denom > 0
        val = 2 * acc / denom
        assert val.denominator == 1, "Freudenthal recursion left a non-integer residue"
        mult[fund] = int(val)

    full: dict[tuple[int, ...], int] = {}
    for fund, m in mult.items():
        if m == 0:
            continue
        for w in _weyl_orbit(rs, fund):
            full[w] = m
    assert sum(full.values()) == dim, "total multiplicity must equal the Weyl dimension"
    return full


# -- polynomial identity on a degree simplex -----------------------------------


@dataclass(frozen=True)
class DimensionPolynomialCheck:
    degree_bound: int
    var_count: int
    grid_size: int
    first_mismatch: Optional[tuple[tuple[int, ...], int, int]]  # (point, lhs, rhs)
    verdict: bool

    def to_json(self) -> dict:
        obj = {"degree_bound": self.degree_bound, "var_count": self.var_count,
               "grid_size": self.grid_size, "verdict": self.verdict}
        if self.first_mismatch is not None:
            point, lhs, rhs = self.first_mismatch
            obj["first_mismatch"] = {"point": list(point), "lhs": lhs, "rhs": rhs}
        return obj


def simplex_grid(d: int, v: int) -> list[tuple[int, ...]]:
    """All points of Z_+^v with coordinate sum <= d."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == v - 1:
            for val in range(left + 1):
                out.append(tuple(acc + [val]))
            return
        for val in range(left + 1):
            acc.append(val)
            rec(i + 1, left - val, acc)
            acc.pop()

    if v == 0:
        return [()]
    rec(0, d, [])
    return out


def simplex_identity_check(e_func: Callable[..., int], w_func: Callable[..., int],
                           d: int, v: int) -> DimensionPolynomialCheck:
    """Compare two integer-valued functions on the full simplex grid.

    For polynomials of total degree <= d in v variables, agreement on this
    grid certifies equality as polynomials (the evaluation matrix on the
    simplex grid is invertible).
    """
    grid = simplex_grid(d, v)
    assert len(grid) == comb(d + v, v)
    first = None
    for point in grid:
        lhs = e_func(*point)
        rhs = w_func(*point)
        if lhs != rhs:
            first = (point, lhs, rhs)
            break
    return DimensionPolynomialCheck(d, v, len(grid), first, first is None)
