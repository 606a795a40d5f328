"""Named verification checks.

Each check reproduces one of the headline combinatorial claims: counts
against Weyl dimensions, Minkowski-sum identities and their documented
failures, normality, and character identities against the Freudenthal
oracle.  The CLI and the acceptance test suite both run these.
"""
from __future__ import annotations

import functools
import inspect
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .lattice import character, count_points, enumerate_points, graded_q_character
from .minkowski import (
    check_b3_minkowski,
    check_rectangular_decomposition,
    is_subset,
    minkowski_gap_witnesses,
    minkowski_step,
    minkowski_sum,
    normality_check,
)
from .roots import RootSystem, Weight, build_root_system
from .systems import InequalitySystem, b3_system, g2_system, rectangular_system
from .weyl import b3_weyl_polynomial, freudenthal_multiplicities, simplex_grid, weyl_dimension


@dataclass
class CheckResult:
    name: str
    passed: bool
    summary: str
    details: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "summary": self.summary,
                "details": self.details, "data": self.data, "seconds": round(self.seconds, 3)}


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    return wrapper


# default parameter grids -----------------------------------------------------

RECT_GRID = tuple(
    [(n, i, m) for n in (3, 4, 5) for i in (1, 2, 3) for m in (1, 2, 3)]
    + [(4, 4, m) for m in (1, 2, 3, 4)]
)

B3_CHARACTER_WEIGHTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1))
G2_CHARACTER_WEIGHTS = ((1, 0), (0, 1), (1, 1))


def _b3_count(rs: RootSystem, system: InequalitySystem, lam: Weight, workers: int = 1) -> int:
    return count_points(system.at(lam), workers=workers)


@_timed
def check_b3_dimension_sweep(max_sum: int = 6, workers: int = 1) -> CheckResult:
    """Counts of the 19-row system equal Weyl dimensions on the simplex m1+m2+m3 <= max_sum."""
    rs = build_root_system("B", 3)
    system = b3_system()
    bad = []
    total = 0
    for point in simplex_grid(max_sum, 3):
        lam = rs.weight(*point)
        got = _b3_count(rs, system, lam, workers=workers)
        want = weyl_dimension(rs, lam)
        total += 1
        if got != want:
            bad.append(f"lambda={point}: count {got} != dim {want}")
    return CheckResult(
        "b3-dimension-sweep", not bad,
        f"{total} weights with sum <= {max_sum}: {total - len(bad)} match",
        bad, {"max_sum": max_sum, "weights": total, "mismatches": len(bad)})


@_timed
def check_rectangular_dimensions(grid: Iterable[tuple[int, int, int]] = RECT_GRID) -> CheckResult:
    """|S(m*w_i)| = dim V(m*w_i) on the proven (n, i, m) grid."""
    bad = []
    rows = 0
    systems: dict[tuple[int, int], tuple[RootSystem, InequalitySystem]] = {}
    for n, i, m in grid:
        if (n, i) not in systems:
            rs = build_root_system("B", n)
            systems[(n, i)] = (rs, rectangular_system(rs, i))
        rs, system = systems[(n, i)]
        lam = m * rs.fundamental_weight(i)
        got = count_points(system.at(lam))
        want = weyl_dimension(rs, lam)
        rows += 1
        if got != want:
            bad.append(f"n={n} i={i} m={m}: count {got} != dim {want}")
    return CheckResult(
        "rectangular-dimensions", not bad,
        f"{rows} (n,i,m) cells: {rows - len(bad)} match", bad,
        {"cells": rows, "mismatches": len(bad)})


@_timed
def check_spin_deficit() -> CheckResult:
    """For B_4 column 3: |S(w_3)+S(w_3)| = dim V(2 w_3) - 1 and |S(2 w_3)| = dim V(2 w_3)."""
    rs = build_root_system("B", 4)
    system = rectangular_system(rs, 3)
    omega = rs.fundamental_weight(3)
    single = enumerate_points(system.at(omega))
    doubled = enumerate_points(system.at(2 * omega))
    summed = minkowski_sum(single, single)
    want = weyl_dimension(rs, 2 * omega)
    ok = len(summed) == want - 1 and len(doubled) == want
    return CheckResult(
        "spin-deficit", ok,
        f"|S+S| = {len(summed)}, |S(2w3)| = {len(doubled)}, dim = {want} (deficit {want - len(summed)})",
        [], {"sum": len(summed), "doubled": len(doubled), "dim": want})


@_timed
def check_gap_witnesses() -> CheckResult:
    """The two documented points sit in the doubled sets but not in the sums."""
    reports = minkowski_gap_witnesses()
    details = [f"column {r.column}, support {r.support}: in_doubled={r.in_doubled}, in_sum={r.in_sum}"
               for r in reports]
    ok = all(r.confirmed for r in reports)
    return CheckResult("minkowski-gap-witnesses", ok,
                       f"{sum(r.confirmed for r in reports)}/{len(reports)} witnesses confirmed",
                       details, {"witnesses": [r.to_json() for r in reports]})


@_timed
def check_b3_minkowski_pairs(max_total: int = 4) -> CheckResult:
    """S(lam)+S(mu) = S(lam+mu) for all dominant pairs with |lam|+|mu| <= max_total."""
    rs = build_root_system("B", 3)
    cache: dict = {}
    bad = []
    pairs = 0
    weights = [w for s in range(max_total + 1) for w in simplex_grid(s, 3) if sum(w) == s]
    seen = set()
    for lam in weights:
        for mu in weights:
            if sum(lam) + sum(mu) > max_total:
                continue
            key = tuple(sorted((lam, mu)))
            if key in seen:
                continue
            seen.add(key)
            pairs += 1
            rep = check_b3_minkowski(rs.weight(*lam), rs.weight(*mu), cache=cache)
            if not rep.equal:
                bad.append(f"lam={lam} mu={mu}: |sum|={rep.card_sum} |target|={rep.card_target}")
    return CheckResult("b3-minkowski", not bad,
                       f"{pairs} unordered pairs with |lam|+|mu| <= {max_total}: {pairs - len(bad)} equal",
                       bad, {"pairs": pairs, "mismatches": len(bad)})


@_timed
def check_rectangular_minkowski(grid: Iterable[tuple[int, int, int]] = RECT_GRID) -> CheckResult:
    """S(m*w_i) = S((m-e)*w_i)+S(e*w_i) on the proven grid (cells with m >= e)."""
    bad = []
    cells = 0
    cache: dict = {}
    for n, i, m in grid:
        if m < minkowski_step(i):
            continue
        cells += 1
        rep = check_rectangular_decomposition(n, i, m, cache=cache)
        if not rep.equal:
            bad.append(f"n={n} i={i} m={m}: |sum|={rep.card_sum} |target|={rep.card_target}")
    return CheckResult("rectangular-minkowski", not bad,
                       f"{cells} decompositions: {cells - len(bad)} equal", bad,
                       {"cells": cells, "mismatches": len(bad)})


def _random_dominant(rng: random.Random, rank: int, max_sum: int) -> tuple[int, ...]:
    while True:
        w = tuple(rng.randint(0, max_sum) for _ in range(rank))
        if sum(w) <= max_sum:
            return w


@_timed
def check_containment_random(pairs_per_family: int = 200, seed: int = 987_654_321) -> CheckResult:
    """S(lam)+S(mu) is contained in S(lam+mu) on random small pairs, per family."""
    rng = random.Random(seed)
    bad = []
    total = 0

    def run_family(name: str, make: Callable[[], tuple]):
        nonlocal total
        cache: dict = {}
        sums: dict = {}
        for _ in range(pairs_per_family):
            system, rs, lam, mu = make()
            total += 1
            key_l, key_m, key_t = (system.name, lam.fund), (system.name, mu.fund), (system.name, (lam + mu).fund)
            for key, w in ((key_l, lam), (key_m, mu), (key_t, lam + mu)):
                if key not in cache:
                    cache[key] = enumerate_points(system.at(w))
            sum_key = (key_l, key_m) if key_l <= key_m else (key_m, key_l)
            if sum_key not in sums:
                sums[sum_key] = minkowski_sum(cache[key_l], cache[key_m])
            if not is_subset(sums[sum_key], cache[key_t]):
                bad.append(f"{name}: lam={lam.fund} mu={mu.fund} violates containment")

    b3rs = build_root_system("B", 3)
    b3sys = b3_system()
    run_family("b3", lambda: (b3sys, b3rs,
                              b3rs.weight(*_random_dominant(rng, 3, 3)),
                              b3rs.weight(*_random_dominant(rng, 3, 3))))

    rect_cache: dict[tuple[int, int], tuple] = {}

    def make_rect():
        n = rng.randint(2, 4)
        i = rng.randint(1, n)
        if (n, i) not in rect_cache:
            rs = build_root_system("B", n)
            rect_cache[(n, i)] = (rs, rectangular_system(rs, i))
        rs, system = rect_cache[(n, i)]
        m1 = rng.randint(1, 3)
        m2 = rng.randint(1, 4 - m1)
        return (system, rs, m1 * rs.fundamental_weight(i), m2 * rs.fundamental_weight(i))

    run_family("rect", make_rect)

    g2rs = build_root_system("G2", 2)
    g2sys = g2_system()
    run_family("g2", lambda: (g2sys, g2rs,
                              g2rs.weight(*_random_dominant(rng, 2, 3)),
                              g2rs.weight(*_random_dominant(rng, 2, 3))))

    return CheckResult("containment-random", not bad,
                       f"{total} random pairs across 3 families: {total - len(bad)} contained",
                       bad, {"pairs": total, "violations": len(bad), "seed": seed})


NORMALITY_CASES = (
    ("b3", 3, None, (1, 0, 0)),
    ("b3", 3, None, (0, 1, 0)),
    ("b3", 3, None, (0, 0, 1)),
    ("rect", 4, 3, (0, 0, 2, 0)),
    ("rect", 4, 4, (0, 0, 0, 2)),
)


@_timed
def check_normality(k_max: int = 3) -> CheckResult:
    """k-fold sums match S(k*lam) for the listed polytopes, k = 2..k_max."""
    details = []
    ok = True
    for family, n, i, lam in NORMALITY_CASES:
        if family == "b3":
            rs = build_root_system("B", 3)
            system = b3_system()
        else:
            rs = build_root_system("B", n)
            system = rectangular_system(rs, i)
        rep = normality_check(system, rs, rs.weight(*lam), k_max)
        details.append(f"{system.name} lambda={lam}: " +
                       ", ".join(f"k={k}:{'ok' if good else 'FAIL'}" for k, good in rep.per_k))
        ok = ok and rep.normal
    return CheckResult("normality", ok,
                       f"{len(NORMALITY_CASES)} polytopes, k up to {k_max}", details,
                       {"cases": len(NORMALITY_CASES), "k_max": k_max})


@_timed
def check_g2_dimensions(max_sum: int = 5) -> CheckResult:
    """|S(lam)| = dim V(lam) for all G2 weights with m1+m2 <= max_sum."""
    rs = build_root_system("G2", 2)
    system = g2_system()
    bad = []
    total = 0
    for point in simplex_grid(max_sum, 2):
        lam = rs.weight(*point)
        got = count_points(system.at(lam))
        want = weyl_dimension(rs, lam)
        total += 1
        if got != want:
            bad.append(f"lambda={point}: count {got} != dim {want}")
    return CheckResult("g2-dimensions", not bad,
                       f"{total} weights with sum <= {max_sum}: {total - len(bad)} match",
                       bad, {"weights": total, "mismatches": len(bad)})


def _character_matches(rs: RootSystem, system: InequalitySystem, lam: Weight) -> tuple[bool, str]:
    points = enumerate_points(system.at(lam))
    got = character(rs, points, lam)
    want = freudenthal_multiplicities(rs, lam)
    if got != want:
        return False, f"lambda={lam.fund}: weight map differs from the Freudenthal oracle"
    qchar = graded_q_character(rs, points, lam)
    if qchar.specialize() != got:
        return False, f"lambda={lam.fund}: q->1 specialization differs from the character"
    if qchar.degree_stratum(0) != {lam.fund: 1}:
        return False, f"lambda={lam.fund}: degree-0 stratum is not the highest weight"
    return True, f"lambda={lam.fund}: {len(points)} points, {len(got)} weights"


@_timed
def check_b3_characters(weights: Iterable[tuple[int, int, int]] = B3_CHARACTER_WEIGHTS) -> CheckResult:
    """B_3 weight multiplicities from the point sets equal the Freudenthal maps."""
    rs = build_root_system("B", 3)
    system = b3_system()
    details = []
    ok = True
    for lam in weights:
        good, msg = _character_matches(rs, system, rs.weight(*lam))
        details.append(msg)
        ok = ok and good
    return CheckResult("b3-characters", ok, f"{len(details)} weights checked", details, {})


@_timed
def check_g2_characters(weights: Iterable[tuple[int, int]] = G2_CHARACTER_WEIGHTS) -> CheckResult:
    """G2 weight multiplicities from the point sets equal the Freudenthal maps."""
    rs = build_root_system("G2", 2)
    system = g2_system()
    details = []
    ok = True
    for lam in weights:
        good, msg = _character_matches(rs, system, rs.weight(*lam))
        details.append(msg)
        ok = ok and good
    return CheckResult("g2-characters", ok, f"{len(details)} weights checked", details, {})


@_timed
def check_b3_simplex(degree: int = 9, workers: int = 1) -> CheckResult:
    """Counting function vs the factored dimension polynomial on the full simplex grid."""
    rs = build_root_system("B", 3)
    system = b3_system()
    grid = simplex_grid(degree, 3)
    first = None
    for point in grid:
        lhs = _b3_count(rs, system, rs.weight(*point), workers=workers)
        rhs = b3_weyl_polynomial(*point)
        if lhs != rhs:
            first = f"lambda={point}: count {lhs} != polynomial {rhs}"
            break
    return CheckResult("b3-simplex", first is None,
                       f"{len(grid)} grid points at degree bound {degree}" +
                       ("" if first is None else f"; first mismatch {first}"),
                       [first] if first else [],
                       {"grid": len(grid), "degree": degree})


@_timed
def check_weyl_polynomial() -> CheckResult:
    """The factored polynomial equals the Weyl product on the degree-9 simplex,
    and the misprinted factor variant disagrees at (0, 0, 1) with 4 vs 8."""
    rs = build_root_system("B", 3)
    bad = []
    for point in simplex_grid(9, 3):
        if b3_weyl_polynomial(*point) != weyl_dimension(rs, rs.weight(*point)):
            bad.append(f"corrected factor differs at {point}")
            break
    mis = b3_weyl_polynomial(0, 0, 1, misprint=True)
    good = b3_weyl_polynomial(0, 0, 1)
    if not (mis == 4 and good == 8):
        bad.append(f"misprint pin: expected 4 vs 8, got {mis} vs {good}")
    return CheckResult("weyl-polynomial", not bad,
                       "220 grid points match; misprinted variant pinned at (0,0,1): 4 vs 8",
                       bad, {"misprint_value": mis, "corrected_value": good})


# registry ---------------------------------------------------------------------

CHECKS: dict[str, Callable[..., CheckResult]] = {
    "b3-dimension-sweep": check_b3_dimension_sweep,
    "rectangular-dimensions": check_rectangular_dimensions,
    "spin-deficit": check_spin_deficit,
    "minkowski-gap-witnesses": check_gap_witnesses,
    "b3-minkowski": check_b3_minkowski_pairs,
    "rectangular-minkowski": check_rectangular_minkowski,
    "containment-random": check_containment_random,
    "normality": check_normality,
    "g2-dimensions": check_g2_dimensions,
    "b3-characters": check_b3_characters,
    "g2-characters": check_g2_characters,
    "b3-simplex": check_b3_simplex,
    "weyl-polynomial": check_weyl_polynomial,
}

# aggregate names accepted by the CLI verify command
VERIFY_ALIASES: dict[str, tuple[str, ...]] = {
    "dimension-sweep": ("b3-dimension-sweep", "rectangular-dimensions"),
    "minkowski": ("b3-minkowski", "rectangular-minkowski", "containment-random"),
    "normality": ("normality",),
    "remark-4-6": ("minkowski-gap-witnesses",),
    "spin-deficit": ("spin-deficit",),
    "b3-simplex": ("b3-simplex", "weyl-polynomial"),
    "g2-dimensions": ("g2-dimensions", "g2-characters"),
}


def run_checks(names: Iterable[str], **kwargs) -> list[CheckResult]:
    """Run checks by name, passing through only the options each one accepts."""
    out = []
    for name in names:
        fn = CHECKS[name]
        params = inspect.signature(fn).parameters
        accepted = {k: v for k, v in kwargs.items() if k in params and v is not None}
        out.append(fn(**accepted))
    return out
