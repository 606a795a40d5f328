"""Dyck paths on the (p, q) grid of a B_n radical root subset.

A type-1 path is a single monotone walk (each step raises p or q by one)
between prescribed endpoints; a type-2 path is a disjoint pair of such walks
with coupled endpoints, one pair per junction row j < i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .roots import Root, RootSystem, radical_roots, root_from_label, _b_label_valid

TYPE1_LOW = "type1_i"    # walk from a[1,i] to a[i,2n-i-1]
TYPE1_HIGH = "type1_i1"  # walk from a[1,i+1] to a[i,2n-i]
TYPE2 = "type2"          # double walk, junction row j

PATH_KINDS = (TYPE1_LOW, TYPE1_HIGH, TYPE2)


@dataclass(frozen=True)
class DyckPath:
    kind: str
    roots: tuple[Root, ...]
    strands: Optional[tuple[tuple[Root, ...], tuple[Root, ...]]] = None
    junction: Optional[int] = None

    def root_names(self) -> list[str]:
        return [r.name for r in self.roots]

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind, "roots": self.root_names()}
        if self.strands is not None:
            obj["strands"] = [[r.name for r in s] for s in self.strands]
            obj["junction"] = self.junction
        return obj


def _monotone_walks(n: int, start: tuple[int, int], end: tuple[int, int]) -> list[list[tuple[int, int]]]:
    """All walks start -> end stepping (p,q)->(p,q+1) or (p+1,q) through valid labels."""
    if not (_b_label_valid(n, *start) and _b_label_valid(n, *end)):
        return []
    if start[0] > end[0] or start[1] > end[1]:
        return []
    out: list[list[tuple[int, int]]] = []

    def walk(p: int, q: int, acc: list[tuple[int, int]]) -> None:
        if (p, q) == end:
            out.append(acc[:])
            return
        if q + 1 <= end[1] and _b_label_valid(n, p, q + 1):
            acc.append((p, q + 1))
            walk(p, q + 1, acc)
            acc.pop()
        if p + 1 <= end[0] and _b_label_valid(n, p + 1, q):
            acc.append((p + 1, q))
            walk(p + 1, q, acc)
            acc.pop()

    walk(start[0], start[1], [(start[0], start[1])])
    return out


def _path_sort_key(rs: RootSystem, path: DyckPath) -> tuple:
    return (PATH_KINDS.index(path.kind),
            tuple(sorted(rs.root_index(r) for r in path.roots)))


def type1_paths(rs: RootSystem, i: int) -> list[DyckPath]:
    """All single walks for column i; empty when i = n (no valid endpoints)."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"column index {i} out of range")
    n = rs.rank
    paths = []
    endpoints = [
        (TYPE1_LOW, (1, i), (i, 2 * n - i - 1)),
        (TYPE1_HIGH, (1, i + 1), (i, 2 * n - i)),
    ]
    for kind, start, end in endpoints:
        for walk in _monotone_walks(n, start, end):
            roots = tuple(root_from_label(rs, p, q) for p, q in walk)
            paths.append(DyckPath(kind, roots))
    paths.sort(key=lambda p: _path_sort_key(rs, p))
    return paths


def type2_paths(rs: RootSystem, i: int) -> list[DyckPath]:
    """All disjoint double walks for column i; empty when i = 1."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"column index {i} out of range")
    n = rs.rank
    paths = []
    for j in range(1, i):
        firsts = _monotone_walks(n, (1, i), (j, 2 * n - j))
        seconds = _monotone_walks(n, (2, i), (j + 1, 2 * n - j - 1))
        for w1 in firsts:
            cells1 = set(w1)
            for w2 in seconds:
                if cells1.isdisjoint(w2):
                    s1 = tuple(root_from_label(rs, p, q) for p, q in w1)
                    s2 = tuple(root_from_label(rs, p, q) for p, q in w2)
                    paths.append(DyckPath(TYPE2, s1 + s2, strands=(s1, s2), junction=j))
    paths.sort(key=lambda p: _path_sort_key(rs, p))
    return paths


def all_paths(rs: RootSystem, i: int) -> list[DyckPath]:
    return type1_paths(rs, i) + type2_paths(rs, i)


def validate_path(rs: RootSystem, i: int, path: DyckPath) -> tuple[bool, str]:
    """Check every clause of the path definition; returns (ok, first violation)."""
    n = rs.rank
    radical = set(radical_roots(rs, i))
    if any(r not in radical for r in path.roots):
        return False, "root outside the column-i radical set"
    if len(set(path.roots)) != len(path.roots):
        return False, "repeated root"

    def check_walk(seq: tuple[Root, ...], start: tuple[int, int], end: tuple[int, int]) -> Optional[str]:
        if not seq:
            return "empty walk"
        if seq[0].pq != start:
            return f"walk must start at a[{start[0]},{start[1]}]"
        if seq[-1].pq != end:
            return f"walk must end at a[{end[0]},{end[1]}]"
        for a, b in zip(seq, seq[1:]):
            (p, q), (s, t) = a.pq, b.pq
            if not ((s, t) == (p, q + 1) or (s, t) == (p + 1, q)):
                return f"step rule violated at {a.name} -> {b.name}"
        return None

    if path.kind == TYPE1_LOW or path.kind == TYPE1_HIGH:
        if path.kind == TYPE1_LOW:
            start, end = (1, i), (i, 2 * n - i - 1)
        else:
            start, end = (1, i + 1), (i, 2 * n - i)
        if not (_b_label_valid(n, *start) and _b_label_valid(n, *end)):
            return False, "endpoints do not exist for this column"
        err = check_walk(path.roots, start, end)
        return (False, err) if err else (True, "")

    if path.kind == TYPE2:
        if path.strands is None or path.junction is None:
            return False, "double path needs two strands and a junction row"
        j = path.junction
        if not 1 <= j < i:
            return False, "junction row out of range"
        s1, s2 = path.strands
        if set(s1) | set(s2) != set(path.roots):
            return False, "strands do not partition the root set"
        if not set(s1).isdisjoint(s2):
            return False, "strands intersect"
        err = check_walk(s1, (1, i), (j, 2 * n - j))
        if err:
            return False, f"first strand: {err}"
        err = check_walk(s2, (2, i), (j + 1, 2 * n - j - 1))
        if err:
            return False, f"second strand: {err}"
        return True, ""

    return False, f"unknown path kind {path.kind!r}"
