"""Exact clique and coloring search on bitmask adjacency rows.

These routines know nothing about ideals; they are the brute-force side
used to cross-check the label-family formulas.
"""

from __future__ import annotations

from typing import Sequence

from idealgraph.graph import iter_bits


def is_clique(adj: Sequence[int], verts: Sequence[int]) -> bool:
    for a, u in enumerate(verts):
        for v in verts[a + 1:]:
            if not adj[u] >> v & 1:
                return False
    return len(set(verts)) == len(verts)


def is_proper_coloring(adj: Sequence[int], colors: Sequence[int]) -> bool:
    if len(colors) != len(adj):
        return False
    for u, row in enumerate(adj):
        for v in iter_bits(row):
            if colors[u] == colors[v]:
                return False
    return True


def _color_classes(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns vertices and their color numbers."""
    order: list[int] = []
    bounds: list[int] = []
    left = cand
    k = 0
    while left:
        k += 1
        q = left
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            left &= ~(1 << v)
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(adj: Sequence[int], cand: int | None = None) -> list[int]:
    """Maximum clique restricted to the vertex mask ``cand`` (branch and bound).

    Pruning uses the greedy coloring bound: a set covered by k color classes
    holds no clique larger than k.
    """
    if cand is None:
        cand = (1 << len(adj)) - 1
    best: list[int] = []

    def expand(chosen: list[int], pool: int) -> None:
        nonlocal best
        order, bounds = _color_classes(adj, pool)
        for idx in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[idx] <= len(best):
                return
            v = order[idx]
            chosen.append(v)
            sub = pool & adj[v]
            if sub:
                expand(chosen, sub)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            pool &= ~(1 << v)

    if cand:
        expand([], cand)
    return sorted(best)


def greedy_coloring(adj: Sequence[int], order: Sequence[int] | None = None) -> list[int]:
    """DSATUR greedy; vertices outside ``order`` (if given) keep color -1."""
    verts = list(range(len(adj))) if order is None else list(order)
    colors = [-1] * len(adj)
    sat: dict[int, set[int]] = {v: set() for v in verts}
    left = set(verts)
    deg = {v: adj[v].bit_count() for v in verts}
    while left:
        v = max(left, key=lambda u: (len(sat[u]), deg[u], -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        left.discard(v)
        for w in iter_bits(adj[v]):
            if w in left:
                sat[w].add(c)
    return colors


def exact_coloring(adj: Sequence[int], verts: Sequence[int] | None = None) -> list[int]:
    """Minimum proper coloring of the subgraph on ``verts`` (DSATUR branch and bound).

    The search seeds a maximum clique with colors 0..w-1 and then tries to
    beat the greedy upper bound. Vertices outside ``verts`` get color -1.
    """
    verts = list(range(len(adj))) if verts is None else list(verts)
    if not verts:
        return [-1] * len(adj)
    vmask = 0
    for v in verts:
        vmask |= 1 << v
    best = greedy_coloring(adj, verts)
    best_k = max(best[v] for v in verts) + 1
    clique = max_clique(adj, vmask)
    lower = max(len(clique), 1)
    if best_k == lower:
        return best

    colors = [-1] * len(adj)
    # used[v] is a bitmask of colors present among v's colored neighbors
    used = [0] * len(adj)
    for c, v in enumerate(clique):
        colors[v] = c
        for w in iter_bits(adj[v] & vmask):
            used[w] |= 1 << c
    uncolored = vmask
    for v in clique:
        uncolored &= ~(1 << v)
    local_deg = {v: (adj[v] & vmask).bit_count() for v in verts}

    def pick(pool: int) -> int:
        top = -1
        key = (-1, -1)
        for v in iter_bits(pool):
            k = (used[v].bit_count(), local_deg[v])
            if k > key:
                key = k
                top = v
        return top

    def solve(pool: int, k: int) -> bool:
        nonlocal best, best_k
        if not pool:
            best = list(colors)
            best_k = k
            return best_k == lower
        v = pick(pool)
        limit = min(k + 1, best_k - 1)
        for c in range(limit):
            if c + 1 >= best_k:
                break
            if used[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for w in iter_bits(adj[v] & pool):
                if not used[w] >> c & 1:
                    used[w] |= 1 << c
                    touched.append(w)
            done = solve(pool & ~(1 << v), max(k, c + 1))
            for w in touched:
                used[w] &= ~(1 << c)
            colors[v] = -1
            if done:
                return True
        return False

    solve(uncolored, len(clique))
    return best
