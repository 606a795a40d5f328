"""Exact models of the root systems B_n (n >= 2) and G2.

Everything is integer or rational arithmetic: roots are stored by their
coefficients over the simple roots, weights by their coefficients over the
fundamental weights, and all bilinear forms go through an exact Gram matrix
of the simple roots.  No floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class Root:
    """A positive root.

    ``name`` is the text form used in all output: ``a[p,q]`` for B_n and
    ``b1`` .. ``b6`` for G2.  ``pq`` carries the (p, q) label for B_n roots
    and is ``None`` for G2.  ``simple`` holds the coefficients over the
    simple root basis; ``eps_x2`` the coordinates in the orthogonal
    epsilon basis scaled by 2 (kept integral so spin weights stay exact;
    ``None`` for G2, where all geometry goes through the Gram matrix).
    """

    name: str
    pq: Optional[tuple[int, int]]
    simple: tuple[int, ...]
    eps_x2: Optional[tuple[int, ...]]

    def __repr__(self) -> str:
        return f"Root({self.name})"


@dataclass(frozen=True)
class Weight:
    """An integral weight, stored by its fundamental-weight coefficients."""

    fund: tuple[int, ...]

    @property
    def is_dominant(self) -> bool:
        return all(m >= 0 for m in self.fund)

    @property
    def is_zero(self) -> bool:
        return all(m == 0 for m in self.fund)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fund, other.fund, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fund, other.fund, strict=True)))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.fund))

    def __repr__(self) -> str:
        return f"Weight{self.fund}"


def _solve_fraction(matrix: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve matrix @ X = rhs exactly by Gaussian elimination (small systems)."""
    n = len(matrix)
    aug = [row[:] + r[:] for row, r in zip(matrix, rhs)]
    width = len(aug[0])
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:width] for row in aug]


class RootSystem:
    """A materialized root system with its positive roots in canonical order.

    Canonical storage order is ascending lexicographic on the (p, q) labels
    for B_n, and the fixed b1..b6 order for G2.  The highest root is found
    as the unique maximal element of the root poset, not hardcoded.
    """

    def __init__(self, kind: str, rank: int, simple_gram: tuple[tuple[Fraction, ...], ...],
                 positive_roots: tuple[Root, ...]):
        self.kind = kind
        self.rank = rank
        self.simple_gram = simple_gram
        self.positive_roots = positive_roots
        self._by_name = {r.name: r for r in positive_roots}
        self._by_pq = {r.pq: r for r in positive_roots if r.pq is not None}
        self._index = {r.name: k for k, r in enumerate(positive_roots)}

        # alpha_j expressed in fundamental coordinates: column j of the
        # matrix with entries alpha_j(alpha_i^vee) = 2(a_i, a_j)/(a_i, a_i).
        n = rank
        cf = [[Fraction(2) * simple_gram[i][j] / simple_gram[i][i] for j in range(n)]
              for i in range(n)]
        assert all(x.denominator == 1 for row in cf for x in row)
        self.cartan_fund = tuple(tuple(int(x) for x in row) for row in cf)

        # omega_i in simple-root coordinates: solve C x = e_i.
        frac_c = [[Fraction(x) for x in row] for row in self.cartan_fund]
        eye = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        self.fund_in_simple = tuple(tuple(col) for col in
                                    zip(*_solve_fraction(frac_c, eye)))
        # columns: fund_in_simple[i] = omega_i over the simple roots

        self.highest_root = self._find_highest_root()
        self.rho = Weight((1,) * rank)

    # -- lookups ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.positive_roots)

    def root_index(self, root: Root) -> int:
        return self._index[root.name]

    def root_named(self, name: str) -> Root:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"no positive root named {name!r}") from None

    def weight(self, *fund: int) -> Weight:
        if len(fund) != self.rank:
            raise ValueError(f"expected {self.rank} fundamental coefficients, got {len(fund)}")
        return Weight(tuple(int(m) for m in fund))

    def fundamental_weight(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental weight index {i} out of range")
        return Weight(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank)

    # -- geometry --------------------------------------------------------

    def simple_norm2(self, i: int) -> Fraction:
        """(alpha_i, alpha_i) for the 0-based simple root index i."""
        return self.simple_gram[i][i]

    def weight_root_form(self, w: Weight, root: Root) -> Fraction:
        """(w, root) via (omega_i, beta) = b_i (alpha_i, alpha_i)/2."""
        return sum((Fraction(m) * root.simple[i] * self.simple_gram[i][i] / 2
                    for i, m in enumerate(w.fund)), Fraction(0))

    def root_norm2(self, root: Root) -> Fraction:
        b = root.simple
        g = self.simple_gram
        n = self.rank
        return sum((Fraction(b[i]) * b[j] * g[i][j] for i in range(n) for j in range(n)),
                   Fraction(0))

    def pairing(self, w: Weight, root: Root) -> Fraction:
        """w(root^vee) = 2 (w, root) / (root, root); an integer for integral w."""
        return Fraction(2) * self.weight_root_form(w, root) / self.root_norm2(root)

    def weight_form(self, v: Weight, w: Weight) -> Fraction:
        """(v, w) via the fundamental-weight Gram data."""
        total = Fraction(0)
        for j, mj in enumerate(w.fund):
            if mj == 0:
                continue
            # (omega_j, v) = c_j(v) * (alpha_j, alpha_j)/2 with c(v) = v in simple coords
            cj = sum(Fraction(v.fund[i]) * self.fund_in_simple[i][j] for i in range(self.rank))
            total += mj * cj * self.simple_gram[j][j] / 2
        return total

    def weight_in_simple(self, w: Weight) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum((Fraction(w.fund[i]) * self.fund_in_simple[i][j] for i in range(n)),
                         Fraction(0)) for j in range(n))

    def weight_eps_x2(self, w: Weight) -> tuple[int, ...]:
        """Doubled epsilon coordinates of a weight (B kind only)."""
        if self.kind != "B":
            raise ValueError("epsilon coordinates are only defined for the B systems")
        n = self.rank
        out = []
        for j in range(n):
            # omega_i = e_1 + ... + e_i for i < n, omega_n = (e_1+...+e_n)/2
            val = 2 * sum(w.fund[i] for i in range(j, n - 1)) + w.fund[n - 1]
            out.append(val)
        return tuple(out)

    def root_weight(self, root: Root) -> Weight:
        """The root as an integral weight (fundamental coordinates)."""
        fund = tuple(sum(self.cartan_fund[i][j] * root.simple[j] for j in range(self.rank))
                     for i in range(self.rank))
        return Weight(fund)

    def _find_highest_root(self) -> Root:
        maxima = [r for r in self.positive_roots
                  if not any(dominance_less(r, s) for s in self.positive_roots)]
        assert len(maxima) == 1, "root poset must have a unique maximal element"
        return maxima[0]


# -- construction ----------------------------------------------------------


def _b_label_valid(n: int, p: int, q: int) -> bool:
    return 1 <= p <= q <= n or (q > n and 1 <= p <= 2 * n - q < n)


def _b_root(n: int, p: int, q: int) -> Root:
    simple = [0] * n
    if q <= n:
        for k in range(p, q + 1):
            simple[k - 1] = 1
        eps = [0] * n
        eps[p - 1] += 2
        if q < n:
            eps[q] -= 2
    else:
        for k in range(p, 2 * n - q + 1):
            simple[k - 1] = 1
        for k in range(2 * n - q + 1, n + 1):
            simple[k - 1] = 2
        eps = [0] * n
        eps[p - 1] += 2
        eps[2 * n - q] += 2
    return Root(f"a[{p},{q}]", (p, q), tuple(simple), tuple(eps))


_G2_SIMPLE_COEFFS = {
    "b1": (3, 2),
    "b2": (3, 1),
    "b3": (2, 1),
    "b4": (1, 1),
    "b5": (0, 1),
    "b6": (1, 0),
}


def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct B_n (rank n >= 2) or G2 with all positive roots materialized."""
    if kind == "B":
        if rank < 2:
            raise ValueError("B systems need rank >= 2")
        n = rank
        roots = tuple(_b_root(n, p, q)
                      for p in range(1, n + 1) for q in range(p, 2 * n - p + 1))
        # Gram of the simple roots from their doubled epsilon coordinates
        # (orthonormal epsilon basis; long roots have squared length 2).
        simples = [_b_root(n, i, i) for i in range(1, n + 1)]
        gram = tuple(tuple(Fraction(sum(x * y for x, y in zip(simples[i].eps_x2, simples[j].eps_x2)), 4)
                           for j in range(n)) for i in range(n))
        return RootSystem("B", n, gram, roots)
    if kind == "G2":
        if rank != 2:
            raise ValueError("G2 has rank 2")
        third = Fraction(2, 3)
        gram = ((third, Fraction(-1)), (Fraction(-1), Fraction(2)))
        roots = tuple(Root(name, None, coeffs, None)
                      for name, coeffs in _G2_SIMPLE_COEFFS.items())
        return RootSystem("G2", 2, gram, roots)
    raise ValueError(f"unknown root system kind {kind!r}")


def root_from_label(rs: RootSystem, p: int, q: int) -> Root:
    """The B_n root a[p,q]; rejects labels outside 1<=p<=q<=n or 1<=p<=2n-q<n."""
    if rs.kind != "B":
        raise ValueError("(p, q) labels only apply to B systems")
    if not _b_label_valid(rs.rank, p, q):
        raise ValueError(f"invalid root label ({p},{q}) for B_{rs.rank}")
    return rs._by_pq[(p, q)]


def radical_roots(rs: RootSystem, i: int) -> list[Root]:
    """The roots a[p,q] with p <= i <= q (support containing alpha_i), in canonical order."""
    if rs.kind != "B":
        raise ValueError("radical subsets are only used for the B systems")
    if not 1 <= i <= rs.rank:
        raise ValueError(f"column index {i} out of range for B_{rs.rank}")
    return [r for r in rs.positive_roots if r.pq[0] <= i <= r.pq[1]]


def truncated_radical(rs: RootSystem, i: int, ell: int) -> list[Root]:
    """The radical subset with all columns q > ell removed.

    The full radical set has columns up to q = 2n-1, so ell ranges over
    i <= ell <= 2n-1 (ell = 2n-1 truncates nothing).
    """
    if not i <= ell <= 2 * rs.rank - 1:
        raise ValueError(f"truncation column {ell} out of range [{i}, {2 * rs.rank - 1}]")
    return [r for r in radical_roots(rs, i) if r.pq[1] <= ell]


# -- orders ----------------------------------------------------------------


def dominance_leq(a: Root, b: Root) -> bool:
    """a <= b in the root poset: b - a is a non-negative combination of simple roots."""
    return all(x <= y for x, y in zip(a.simple, b.simple))


def dominance_less(a: Root, b: Root) -> bool:
    return a.simple != b.simple and dominance_leq(a, b)


def hasse_covers(roots: Sequence[Root]) -> list[tuple[Root, Root]]:
    """Cover relations of the poset induced on ``roots``.

    Returns (lower, upper) pairs: upper covers lower, i.e. lower < upper with
    no intermediate element among ``roots``.  Deleting vertices and re-running
    yields the covers of the restricted poset.
    """
    rl = list(roots)
    covers = []
    for a in rl:
        for b in rl:
            if not dominance_less(a, b):
                continue
            if any(dominance_less(a, c) and dominance_less(c, b) for c in rl):
                continue
            covers.append((a, b))
    covers.sort(key=lambda e: (e[0].name, e[1].name))
    return covers


def total_order_compare(a: Root, b: Root) -> int:
    """The strict total order on B_n roots: a[p,q] before a[s,t] iff q < t, or q = t and p > s.

    Returns -1, 0 or +1.  In the Hasse grid this reads bottom-to-top within a
    column, columns left to right.
    """
    if a.pq is None or b.pq is None:
        raise ValueError("the total order is defined on labeled B roots")
    (p, q), (s, t) = a.pq, b.pq
    if q != t:
        return -1 if q < t else 1
    if p != s:
        return -1 if p > s else 1
    return 0


def total_order_key(root: Root) -> tuple[int, int]:
    """Sort key realizing ``total_order_compare``."""
    if root.pq is None:
        raise ValueError("the total order is defined on labeled B roots")
    p, q = root.pq
    return (q, -p)


def pairing(rs: RootSystem, w: Weight, root: Root) -> Fraction:
    """w(root^vee) = 2 (w, root)/(root, root), exact."""
    return rs.pairing(w, root)


def theta_pairing(rs: RootSystem, i: int) -> int:
    """omega_i(theta^vee) for the highest root theta; governs the double-path bounds."""
    val = rs.pairing(rs.fundamental_weight(i), rs.highest_root)
    assert val.denominator == 1
    return int(val)
