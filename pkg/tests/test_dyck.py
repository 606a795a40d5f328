import pytest

from conftest import monotone_walks_oracle
from pbwpoly.dyck import TYPE1_HIGH, TYPE1_LOW, TYPE2, DyckPath, type1_paths, type2_paths, validate_path
from pbwpoly.roots import build_root_system, radical_roots, root_from_label

# The full list of column-3 paths for B_4, as (p, q) support sets.
B4_I3_TYPE1 = [
    {(1, 3), (2, 3), (3, 3), (3, 4)},
    {(1, 3), (2, 3), (2, 4), (3, 4)},
    {(1, 3), (1, 4), (2, 4), (3, 4)},
    {(1, 4), (2, 4), (3, 4), (3, 5)},
    {(1, 4), (2, 4), (2, 5), (3, 5)},
    {(1, 4), (1, 5), (2, 5), (3, 5)},
]
B4_I3_TYPE2 = [
    {(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5), (1, 6), (2, 6), (1, 7)},
    {(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5), (1, 6), (2, 6), (3, 5)},
    {(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (3, 4), (1, 6), (2, 6), (3, 5)},
    {(1, 3), (2, 3), (1, 4), (3, 3), (1, 5), (3, 4), (1, 6), (2, 6), (3, 5)},
    {(1, 3), (2, 3), (1, 4), (3, 3), (1, 5), (3, 4), (2, 5), (2, 6), (3, 5)},
    {(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (3, 4), (2, 5), (2, 6), (3, 5)},
    {(1, 3), (2, 3), (1, 4), (2, 4), (3, 3), (3, 4), (2, 5), (2, 6), (3, 5)},
]


def support(path):
    return {r.pq for r in path.roots}


def test_b4_column3_matches_the_worked_lists():
    b4 = build_root_system("B", 4)
    t1 = type1_paths(b4, 3)
    t2 = type2_paths(b4, 3)
    assert len(t1) == 6 and len(t2) == 7
    assert {frozenset(support(p)) for p in t1} == {frozenset(s) for s in B4_I3_TYPE1}
    assert {frozenset(support(p)) for p in t2} == {frozenset(s) for s in B4_I3_TYPE2}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_degenerate_columns(n):
    rs = build_root_system("B", n)
    assert type1_paths(rs, n) == []
    assert type2_paths(rs, 1) == []
    if n >= 2:
        t2 = type2_paths(rs, 2)
        assert len(t2) == 1
        assert set(t2[0].roots) == set(radical_roots(rs, 2))


def test_b3_column1_single_rows():
    b3 = build_root_system("B", 3)
    paths = type1_paths(b3, 1)
    assert [[r.name for r in p.roots] for p in paths] == [
        ["a[1,1]", "a[1,2]", "a[1,3]", "a[1,4]"],
        ["a[1,2]", "a[1,3]", "a[1,4]", "a[1,5]"],
    ]
    assert [p.kind for p in paths] == [TYPE1_LOW, TYPE1_HIGH]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_completeness_against_walk_oracle(n):
    rs = build_root_system("B", n)
    for i in range(1, n + 1):
        got1 = {frozenset(support(p)) for p in type1_paths(rs, i)}
        want1 = set()
        for start, end in (((1, i), (i, 2 * n - i - 1)), ((1, i + 1), (i, 2 * n - i))):
            for walk in monotone_walks_oracle(n, start, end):
                want1.add(frozenset(walk))
        assert got1 == want1

        got2 = {(frozenset(s1_pq(p)), frozenset(s2_pq(p))) for p in type2_paths(rs, i)}
        want2 = set()
        for j in range(1, i):
            for w1 in monotone_walks_oracle(n, (1, i), (j, 2 * n - j)):
                for w2 in monotone_walks_oracle(n, (2, i), (j + 1, 2 * n - j - 1)):
                    if set(w1).isdisjoint(w2):
                        want2.add((frozenset(w1), frozenset(w2)))
        assert got2 == want2


def s1_pq(path):
    return [r.pq for r in path.strands[0]]


def s2_pq(path):
    return [r.pq for r in path.strands[1]]


def test_no_duplicates_and_junction_condition():
    for n in (3, 4, 5):
        rs = build_root_system("B", n)
        for i in range(1, n + 1):
            paths = type1_paths(rs, i) + type2_paths(rs, i)
            keys = [frozenset(r.name for r in p.roots) | {p.kind} for p in paths]
            as_set = set(map(frozenset, ((k, p.kind) for k, p in zip(keys, paths))))
            assert len({(frozenset(support(p)), p.kind, getattr(p, "junction", None)) for p in paths}) == len(paths)
            for p in type2_paths(rs, i):
                j = p.junction
                # second strand ends one row below and one column left of the first
                assert p.strands[0][-1].pq == (j, 2 * n - j)
                assert p.strands[1][-1].pq == (j + 1, 2 * n - j - 1)


def test_generated_paths_validate():
    for n in (2, 3, 4):
        rs = build_root_system("B", n)
        for i in range(1, n + 1):
            for p in type1_paths(rs, i) + type2_paths(rs, i):
                ok, why = validate_path(rs, i, p)
                assert ok, why


def test_path_json_shape():
    b4 = build_root_system("B", 4)
    single = type1_paths(b4, 3)[0].to_json()
    assert set(single) == {"kind", "roots"}
    assert single["roots"][0].startswith("a[")
    double = type2_paths(b4, 3)[0].to_json()
    assert set(double) == {"kind", "roots", "strands", "junction"}
    assert len(double["strands"]) == 2


def test_validate_rejects_bad_paths():
    b4 = build_root_system("B", 4)
    r = lambda p, q: root_from_label(b4, p, q)
    # a diagonal jump a[1,3] -> a[2,4] is not a step
    bad = DyckPath(TYPE1_LOW, (r(1, 3), r(2, 4), r(3, 4)))
    ok, why = validate_path(b4, 3, bad)
    assert not ok and "step" in why
    # wrong endpoint
    bad = DyckPath(TYPE1_LOW, (r(1, 3), r(2, 3), r(2, 4)))
    ok, why = validate_path(b4, 3, bad)
    assert not ok and "end" in why
    # the first listed worked example validates
    good = DyckPath(TYPE1_LOW, (r(1, 3), r(2, 3), r(3, 3), r(3, 4)))
    assert validate_path(b4, 3, good) == (True, "")
    # type-2 strands that share a root are rejected
    s1 = tuple(r(1, q) for q in (3, 4, 5, 6, 7))
    s2 = (r(2, 3), r(2, 4), r(2, 5), r(2, 6))
    crossing = DyckPath(TYPE2, s1 + s2 + (r(1, 3),), strands=(s1, s2 + (r(1, 3),)), junction=1)
    ok, why = validate_path(b4, 3, crossing)
    assert not ok
    # a root outside the column radical is rejected
    outside = DyckPath(TYPE1_LOW, (r(4, 4),))
    ok, why = validate_path(b4, 3, outside)
    assert not ok and "radical" in why
