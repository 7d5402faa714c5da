"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the code under test beyond plain data types.
"""

from __future__ import annotations

from itertools import combinations, product
from math import lcm


def divisors_by_scan(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def nontrivial_divisors(m: int) -> list[int]:
    return [d for d in divisors_by_scan(m) if d not in (1, m)]


def lcm_edges(m: int, n: int) -> set[frozenset[int]]:
    """Edge set of G_n(Z_m) as pairs of divisor values, straight from n not dividing lcm."""
    ds = nontrivial_divisors(m)
    return {frozenset((a, b)) for a, b in combinations(ds, 2) if lcm(a, b) % n}


def prime_powers_of(n: int) -> dict[int, int]:
    """{p: p^beta} for the primes dividing n, by naive scanning."""
    out = {}
    k = n
    p = 2
    while k > 1:
        if k % p == 0:
            q = 1
            while k % p == 0:
                k //= p
                q *= p
            out[p] = q
        p += 1
    return out


def label_primes(d: int, n: int) -> frozenset[int]:
    """Primes p of n with p^beta not dividing d."""
    return frozenset(p for p, q in prime_powers_of(n).items() if d % q)


def brute_clique_number(adj: list[int]) -> int:
    size = len(adj)
    for k in range(size, 0, -1):
        for combo in combinations(range(size), k):
            if all(adj[u] >> v & 1 for u, v in combinations(combo, 2)):
                return k
    return 0


def brute_chromatic_number(adj: list[int]) -> int:
    size = len(adj)
    if size == 0:
        return 0
    edges = [(u, v) for u in range(size) for v in range(u + 1, size) if adj[u] >> v & 1]
    for k in range(1, size + 1):
        for colors in product(range(k), repeat=size):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return size


def brute_force_hole(adj: list[int], length: int) -> list[int] | None:
    """Some vertex set inducing a cycle on ``length`` vertices, by subset enumeration."""
    for combo in combinations(range(len(adj)), length):
        degs = [sum(adj[u] >> v & 1 for v in combo) for u in combo]
        if any(d != 2 for d in degs):
            continue
        # 2-regular: connected iff a walk from combo[0] visits every vertex
        seen = {combo[0]}
        frontier = [combo[0]]
        while frontier:
            u = frontier.pop()
            for v in combo:
                if adj[u] >> v & 1 and v not in seen:
                    seen.add(v)
                    frontier.append(v)
        if len(seen) == length:
            return list(combo)
    return None


def brute_family_max(weights: dict[frozenset, int], ground: frozenset) -> int:
    """Max total weight over all intersecting families of nonempty subsets of ``ground``."""
    sets = [frozenset(c) for k in range(1, len(ground) + 1) for c in combinations(sorted(ground), k)]
    best = 0
    for r in range(len(sets) + 1):
        for fam in combinations(sets, r):
            if all(a & b for a, b in combinations(fam, 2)):
                best = max(best, sum(weights.get(s, 0) for s in fam))
    return best


def complement_adj(adj: list[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    return [(~row & full) & ~(1 << i) for i, row in enumerate(adj)]
