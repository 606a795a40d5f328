import random

import numpy as np
import pytest

from conftest import box_points
from pbwpoly import kernels
from pbwpoly.lattice import BudgetExceeded, coordinate_bounds, count_points, enumerate_points
from pbwpoly.roots import build_root_system
from pbwpoly.systems import b3_omega1_system, b3_system, g2_system, rectangular_system


def small_instances():
    b3 = build_root_system("B", 3)
    g2 = build_root_system("G2", 2)
    b4 = build_root_system("B", 4)
    sys_b3, sys_g2 = b3_system(), g2_system()
    out = []
    for lam in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (2, 0, 1), (1, 1, 1)]:
        out.append(sys_b3.at(b3.weight(*lam)))
    for lam in [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2)]:
        out.append(sys_g2.at(g2.weight(*lam)))
    for n, rs, ms in ((3, b3, (1, 2)), (4, b4, (1,))):
        for i in range(1, n + 1):
            system = rectangular_system(rs, i)
            for m in ms:
                out.append(system.at(m * rs.fundamental_weight(i)))
    for variant in ("simplified", "dyck"):
        out.append(b3_omega1_system(variant).at(b3.weight(2, 0, 0)))
    return out


@pytest.mark.parametrize("idx", range(len(small_instances())))
def test_enumeration_matches_box_oracle(idx, backend):
    inst = small_instances()[idx]
    expect = box_points(inst)
    got = enumerate_points(inst, backend=backend)
    assert np.array_equal(got.points, expect)
    assert count_points(inst, backend=backend) == expect.shape[0]


def test_backend_parity_on_larger_instances():
    if len(kernels.available_backends()) < 2:
        pytest.skip("only one backend available")
    b3 = build_root_system("B", 3)
    b5 = build_root_system("B", 5)
    cases = [
        b3_system().at(b3.weight(2, 2, 2)),
        rectangular_system(b5, 3).at(2 * b5.fundamental_weight(3)),
    ]
    for inst in cases:
        pts = {}
        for backend in kernels.available_backends():
            pts[backend] = enumerate_points(inst, backend=backend).points
            assert count_points(inst, backend=backend) == pts[backend].shape[0]
        a, b = pts.values()
        assert np.array_equal(a, b)


def test_points_sorted_and_unique(backend):
    b3 = build_root_system("B", 3)
    ls = enumerate_points(b3_system().at(b3.weight(1, 1, 1)), backend=backend)
    pts = ls.points
    assert np.array_equal(pts, np.unique(pts, axis=0))  # unique(axis=0) sorts lexicographically


def test_worker_partition_is_deterministic(backend):
    b3 = build_root_system("B", 3)
    inst = b3_system().at(b3.weight(2, 1, 2))
    base = enumerate_points(inst, workers=1, backend=backend)
    for workers in (2, 3, 7):
        again = enumerate_points(inst, workers=workers, backend=backend)
        assert np.array_equal(base.points, again.points)
        assert count_points(inst, workers=workers, backend=backend) == len(base)


def test_zero_weight_gives_origin(backend):
    g2 = build_root_system("G2", 2)
    ls = enumerate_points(g2_system().at(g2.weight(0, 0)), backend=backend)
    assert ls.points.tolist() == [[0, 0, 0, 0, 0, 0]]


def test_coordinate_bounds_examples():
    b3 = build_root_system("B", 3)
    inst = b3_system().at(b3.weight(3, 1, 2))
    bounds = coordinate_bounds(inst)
    names = [r.name for r in inst.ambient]
    # s7 = a[2,2] is pinned by its singleton row to m2
    assert bounds[names.index("a[2,2]")] == 1
    assert bounds[names.index("a[3,3]")] == 2
    assert bounds[names.index("a[1,1]")] == 3
    g2 = build_root_system("G2", 2)
    ginst = g2_system().at(g2.weight(1, 0))
    gb = coordinate_bounds(ginst)
    assert gb[5] == 1  # b6
    zero = coordinate_bounds(g2_system().at(g2.weight(0, 0)))
    assert zero.tolist() == [0] * 6


def test_budget_points_enforced():
    b3 = build_root_system("B", 3)
    inst = b3_system().at(b3.weight(1, 0, 0))
    with pytest.raises(BudgetExceeded):
        enumerate_points(inst, budget_points=3)
    assert len(enumerate_points(inst, budget_points=7)) == 7


def test_rhs_overflow_rejected():
    b3 = build_root_system("B", 3)
    with pytest.raises(OverflowError):
        b3_system().at(b3.weight(1 << 61, 0, 0))


def test_random_small_instances_against_oracle(backend):
    rng = random.Random(20260810)
    b3 = build_root_system("B", 3)
    system = b3_system()
    g2 = build_root_system("G2", 2)
    gsystem = g2_system()
    for _ in range(20):
        lam = tuple(rng.randint(0, 2) for _ in range(3))
        inst = system.at(b3.weight(*lam))
        assert np.array_equal(enumerate_points(inst, backend=backend).points, box_points(inst))
    for _ in range(10):
        lam = tuple(rng.randint(0, 3) for _ in range(2))
        inst = gsystem.at(g2.weight(*lam))
        assert np.array_equal(enumerate_points(inst, backend=backend).points, box_points(inst))


def test_backend_selection_env(monkeypatch):
    monkeypatch.setenv(kernels.ENV_VAR, "numpy")
    assert kernels.active_backend_name() == "numpy"
    monkeypatch.setenv(kernels.ENV_VAR, "bogus")
    with pytest.raises(ValueError, match="unknown kernel backend"):
        kernels.get_backend()
    monkeypatch.delenv(kernels.ENV_VAR)
    assert kernels.active_backend_name() in kernels.available_backends()
