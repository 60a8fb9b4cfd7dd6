"""Shared fixtures and naive reference computations.

The oracles here deliberately take different routes than the package code:
closure by repeated full products, cyclicity by single-generator scan,
components by union-find, diameters by Floyd-Warshall, nilpotency by the
upper central series.
"""

from __future__ import annotations

import pytest

from autocyc import catalog


@pytest.fixture(scope="session")
def entry():
    def get(key: str):
        return catalog.get_entry(key)

    return get


# -- independent oracles -----------------------------------------------------


def naive_mulclose(perms):
    """Set closure by repeated pairwise composition (not Cayley BFS)."""

    def comp(p, q):
        return tuple(q[v] for v in p)

    current = set(perms)
    n = len(next(iter(current)))
    current.add(tuple(range(n)))
    while True:
        new = {comp(a, b) for a in current for b in current}
        if new <= current:
            return current
        current |= new


def naive_subgroup_closure(group, seeds):
    """Element-index closure by full pairwise products."""
    current = set(seeds) | {0}
    while True:
        new = {group.mul(a, b) for a in current for b in current}
        if new <= current:
            return frozenset(current)
        current |= new


def naive_is_cyclic_subset(group, subset):
    """A subset subgroup is cyclic iff one element's powers fill it."""
    target = set(subset)
    for s in subset:
        powers = {0}
        cur = s
        while cur != 0:
            powers.add(cur)
            cur = group.mul(cur, s)
        if powers == target:
            return True
    return False


def naive_conjugacy_classes(group):
    left = set(range(group.order))
    classes = []
    while left:
        i = min(left)
        cls = frozenset(
            group.mul(group.mul(group.inv(g), i), g) for g in range(group.order)
        )
        classes.append(cls)
        left -= cls
    return classes


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def naive_components(n, edges):
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    comps = {}
    for v in range(n):
        comps.setdefault(uf.find(v), set()).add(v)
    return sorted((sorted(c) for c in comps.values()), key=lambda c: c[0])


def naive_diameter(n, edges):
    """Floyd-Warshall; returns per-component max finite distance."""
    INF = float("inf")
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    comps = naive_components(n, edges)
    return [
        max(int(dist[u][v]) for u in comp for v in comp)
        for comp in comps
    ]


def naive_upper_central_nilpotent(group):
    """Nilpotency via the ascending central series."""
    n = group.order
    z = {0}
    while True:
        nxt = {
            x
            for x in range(n)
            if all(
                group.mul(group.mul(group.mul(group.inv(x), group.inv(g)), x), g) in z
                for g in range(n)
            )
        }
        if nxt == z:
            return len(z) == n
        z = nxt
        if len(z) == n:
            return True
