"""Property tests for the algebraic invariants that hold on all inputs."""
import numpy as np
from hypothesis import given, settings, strategies as st

from pbwpoly.lattice import enumerate_points, weight_of
from pbwpoly.minkowski import is_subset, minkowski_sum
from pbwpoly.roots import Weight, build_root_system, root_from_label, total_order_compare
from pbwpoly.systems import b3_system, g2_system

B3 = build_root_system("B", 3)
B3_SYSTEM = b3_system()
G2 = build_root_system("G2", 2)
G2_SYSTEM = g2_system()


def labels(n):
    return [(p, q) for p in range(1, n + 1) for q in range(p, 2 * n - p + 1)]


@given(st.integers(2, 6), st.data())
def test_label_roundtrip(n, data):
    rs = build_root_system("B", n)
    p, q = data.draw(st.sampled_from(labels(n)))
    root = root_from_label(rs, p, q)
    assert root.pq == (p, q)
    assert rs.root_named(root.name) is root


@given(st.integers(2, 5), st.data())
def test_total_order_trichotomy_and_transitivity(n, data):
    rs = build_root_system("B", n)
    pick = st.sampled_from(rs.positive_roots)
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    cmp_ab = total_order_compare(a, b)
    assert cmp_ab == -total_order_compare(b, a)
    assert (cmp_ab == 0) == (a.pq == b.pq)
    if cmp_ab <= 0 and total_order_compare(b, c) <= 0:
        assert total_order_compare(a, c) <= 0


small_b3_weight = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
small_g2_weight = st.tuples(st.integers(0, 2), st.integers(0, 2))


@given(small_b3_weight, small_b3_weight)
def test_rhs_forms_are_additive(lam, mu):
    wl, wm = Weight(lam), Weight(mu)
    for row in B3_SYSTEM.rows:
        assert row.rhs(wl + wm) == row.rhs(wl) + row.rhs(wm)


@given(st.lists(st.integers(0, 4), min_size=9, max_size=9),
       st.lists(st.integers(0, 4), min_size=9, max_size=9))
def test_weight_map_is_linear(s, t):
    ambient = B3.positive_roots
    both = weight_of(B3, ambient, np.array(s) + np.array(t))
    assert both == weight_of(B3, ambient, s) + weight_of(B3, ambient, t)


@settings(max_examples=25, deadline=None)
@given(small_b3_weight, small_b3_weight)
def test_b3_sum_contained_in_target(lam, mu):
    a = enumerate_points(B3_SYSTEM.at(Weight(lam)))
    b = enumerate_points(B3_SYSTEM.at(Weight(mu)))
    target = enumerate_points(B3_SYSTEM.at(Weight(lam) + Weight(mu)))
    assert is_subset(minkowski_sum(a, b), target)


@settings(max_examples=25, deadline=None)
@given(small_g2_weight, small_g2_weight)
def test_g2_sum_contained_in_target(lam, mu):
    a = enumerate_points(G2_SYSTEM.at(Weight(lam)))
    b = enumerate_points(G2_SYSTEM.at(Weight(mu)))
    target = enumerate_points(G2_SYSTEM.at(Weight(lam) + Weight(mu)))
    assert is_subset(minkowski_sum(a, b), target)
