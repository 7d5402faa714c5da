"""Construction of G_n(Z_m) and its metric invariants.

Vertices are the nontrivial ideals dZ_m (d | m, d not in {1, m}), kept in
lexicographic order of their exponent vectors. Each vertex carries the
label D_d = {i : r_i < beta_i} as a bitmask over the primes of m; two
distinct vertices are adjacent exactly when their labels meet, which is the
same as n not dividing lcm(d1, d2).

Adjacency is a tuple of Python ints, one row bitmask per vertex.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from idealgraph.arith import ExponentVector, Factorization, divisors, factorize
from idealgraph.errors import NotAModuleError

INF = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ModulePair:
    """A ring Z_m together with the module Z_n (n | m).

    ``beta`` is indexed by the primes of m; entries are 0 where the prime
    does not divide n.
    """

    m: int
    n: int
    m_fact: Factorization
    beta: ExponentVector

    @classmethod
    def of(cls, m: int, n: int) -> ModulePair:
        if m < 2 or n < 2:
            raise ValueError(f"need m, n >= 2 (got m={m}, n={n})")
        if m % n:
            raise NotAModuleError(f"n must divide m: Z_{n} is not a Z_{m}-module")
        fact = factorize(m)
        return cls(m, n, fact, fact.align(n))

    @property
    def primes(self) -> tuple[int, ...]:
        return self.m_fact.primes

    @property
    def alpha(self) -> ExponentVector:
        return self.m_fact.exponents

    @property
    def s(self) -> int:
        return len(self.alpha)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices i with beta_i != 0 (the set S')."""
        return tuple(i for i, b in enumerate(self.beta) if b)

    @property
    def support_mask(self) -> int:
        mask = 0
        for i in self.support:
            mask |= 1 << i
        return mask

    @property
    def s_prime(self) -> int:
        return len(self.support)

    @property
    def is_faithful(self) -> bool:
        return self.n == self.m

    def label(self, r: ExponentVector) -> int:
        mask = 0
        for i, (ri, bi) in enumerate(zip(r, self.beta)):
            if ri < bi:
                mask |= 1 << i
        return mask

    def mask_to_primes(self, mask: int) -> list[int]:
        return [self.primes[i] for i in iter_bits(mask)]

    def mask_to_indices(self, mask: int) -> list[int]:
        """1-based prime indices, matching the usual S = {1, ..., s} numbering."""
        return [i + 1 for i in iter_bits(mask)]


@dataclass(frozen=True)
class DivisorVertex:
    r: ExponentVector
    value: int
    label: int

    def name(self, m: int) -> str:
        return f"{self.value}Z_{m}"


def nontrivial_vertices(pair: ModulePair) -> list[DivisorVertex]:
    full = pair.alpha
    out = []
    for r in divisors(pair.m_fact):
        if not any(r) or r == full:
            continue
        out.append(DivisorVertex(r, pair.m_fact.value_of(r), pair.label(r)))
    return out


@dataclass(frozen=True, eq=False)
class BitGraph:
    """Simple undirected graph on vertices 0..N-1 with bitmask rows."""

    adj: tuple[int, ...]
    names: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def neighbors(self, i: int) -> list[int]:
        return list(iter_bits(self.adj[i]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, row in enumerate(self.adj):
            for j in iter_bits(row >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def complement(self) -> BitGraph:
        full = self.all_mask
        adj = tuple((~row & full) & ~(1 << i) for i, row in enumerate(self.adj))
        return BitGraph(adj, self.names)

    def induced(self, keep: Sequence[int]) -> BitGraph:
        """Induced subgraph on ``keep``, renumbered in the given order."""
        pos = {v: k for k, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        names = tuple(self.name_of(v) for v in keep) if self.names else ()
        return BitGraph(tuple(adj), names)

    @cached_property
    def stats(self) -> GraphStats:
        return graph_stats(self)


@dataclass(frozen=True, eq=False)
class IdealGraph(BitGraph):
    pair: ModulePair | None = None
    vertices: tuple[DivisorVertex, ...] = ()

    @property
    def m(self) -> int:
        return self.pair.m

    @property
    def n(self) -> int:
        return self.pair.n

    def index_of(self, d: int) -> int:
        for k, v in enumerate(self.vertices):
            if v.value == d:
                return k
        raise KeyError(f"{d} is not a nontrivial divisor of {self.m}")

    def values(self, indices: Iterable[int]) -> list[int]:
        return [self.vertices[i].value for i in indices]


@dataclass(frozen=True, eq=False)
class ZWindowGraph(BitGraph):
    """Finite window {kZ : 2 <= k <= bound} of the infinite graph G_{Z_n}(Z)."""

    n: int = 0
    bound: int = 0

    @property
    def values(self) -> range:
        return range(2, self.bound + 1)


def adjacency_from_labels(labels: Sequence[int]) -> tuple[int, ...]:
    classes: dict[int, int] = {}
    for k, lab in enumerate(labels):
        classes[lab] = classes.get(lab, 0) | (1 << k)
    row_for: dict[int, int] = {}
    for lab in classes:
        row = 0
        if lab:
            for other, members in classes.items():
                if lab & other:
                    row |= members
        row_for[lab] = row
    return tuple(row_for[lab] & ~(1 << k) for k, lab in enumerate(labels))


def graph_from_pair(pair: ModulePair) -> IdealGraph:
    verts = tuple(nontrivial_vertices(pair))
    adj = adjacency_from_labels([v.label for v in verts])
    names = tuple(v.name(pair.m) for v in verts)
    return IdealGraph(adj, names, pair, verts)


def build_graph(m: int, n: int) -> IdealGraph:
    """G_n(Z_m); raises NotAModuleError unless n divides m."""
    return graph_from_pair(ModulePair.of(m, n))


def build_truncated_z_graph(n: int, bound: int) -> ZWindowGraph:
    if n < 2 or bound < 2:
        raise ValueError("need n >= 2 and bound >= 2")
    ks = list(range(2, bound + 1))
    adj = []
    for a in ks:
        row = 0
        for j, b in enumerate(ks):
            if a != b and math.lcm(a, b) % n:
                row |= 1 << j
        adj.append(row)
    names = tuple(f"{k}Z" for k in ks)
    return ZWindowGraph(tuple(adj), names, n, bound)


# -- metric invariants ---------------------------------------------------


def isolated_indices(g: BitGraph) -> list[int]:
    return [i for i, row in enumerate(g.adj) if not row]


def isolated_vertices(g: IdealGraph) -> list[DivisorVertex]:
    return [g.vertices[i] for i in isolated_indices(g)]


def _bfs_layers(g: BitGraph, src: int) -> tuple[int, int]:
    """Return (eccentricity within the component, reached mask)."""
    seen = 1 << src
    frontier = seen
    depth = 0
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return depth, seen
        seen |= nxt
        frontier = nxt
        depth += 1


def components(g: BitGraph) -> list[list[int]]:
    left = g.all_mask
    out = []
    while left:
        src = (left & -left).bit_length() - 1
        _, reached = _bfs_layers(g, src)
        out.append(list(iter_bits(reached)))
        left &= ~reached
    return out


def diameter(g: BitGraph) -> int | float | None:
    """Supremum of distances; ``INF`` if disconnected, ``None`` for the empty graph."""
    if len(g) == 0:
        return None
    full = g.all_mask
    best = 0
    for v in range(len(g)):
        ecc, reached = _bfs_layers(g, v)
        if reached != full:
            return INF
        best = max(best, ecc)
    return best


def girth(g: BitGraph) -> int | float:
    """Length of a shortest cycle, or ``INF`` for a forest."""
    nbrs = [g.neighbors(v) for v in range(len(g))]
    best = INF
    for root in range(len(g)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    degrees: tuple[int, ...]
    is_regular: bool
    is_complete: bool
    is_connected: bool
    component_count: int
    diameter: int | float | None
    girth: int | float
    isolated_count: int

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degrees": list(self.degrees),
            "is_regular": self.is_regular,
            "is_complete": self.is_complete,
            "is_connected": self.is_connected,
            "component_count": self.component_count,
            "diameter": encode_extended(self.diameter),
            "girth": encode_extended(self.girth),
            "isolated_count": self.isolated_count,
        }


def encode_extended(x):
    """JSON form of an extended natural: ints stay, infinity -> "inf", empty -> None."""
    if x is None:
        return None
    if x == INF:
        return "inf"
    return int(x)


def graph_stats(g: BitGraph) -> GraphStats:
    size = len(g)
    degrees = tuple(g.degree(v) for v in range(size))
    edge_count = sum(degrees) // 2
    comps = components(g)
    return GraphStats(
        vertex_count=size,
        edge_count=edge_count,
        degrees=degrees,
        is_regular=len(set(degrees)) <= 1,
        is_complete=edge_count == size * (size - 1) // 2,
        is_connected=len(comps) <= 1,
        component_count=len(comps),
        diameter=diameter(g),
        girth=girth(g),
        isolated_count=degrees.count(0),
    )


# -- serialization -------------------------------------------------------


def graph_to_dict(g: BitGraph, extra: dict | None = None) -> dict:
    if isinstance(g, IdealGraph):
        doc = {
            "m": g.m,
            "n": g.n,
            "vertices": [
                {"d": v.value, "exps": list(v.r), "label_bits": v.label} for v in g.vertices
            ],
        }
    elif isinstance(g, ZWindowGraph):
        doc = {
            "n": g.n,
            "bound": g.bound,
            "truncated_window": True,
            "vertices": [{"k": k} for k in g.values],
        }
    else:
        doc = {"vertices": [{"name": g.name_of(i)} for i in range(len(g))]}
    doc["edges"] = [list(e) for e in g.edges()]
    doc["stats"] = g.stats.to_json()
    if extra:
        doc.update(extra)
    return doc


def to_json(g: BitGraph, extra: dict | None = None) -> str:
    return json.dumps(graph_to_dict(g, extra), sort_keys=False)


def to_dot(g: BitGraph, highlight: Sequence[int] | None = None) -> str:
    """DOT text; ``highlight`` is a vertex cycle whose edges are drawn in red."""
    if isinstance(g, IdealGraph):
        title = f"G_{g.n}(Z_{g.m})"
    elif isinstance(g, ZWindowGraph):
        title = f"G_Z{g.n}(Z) window 2..{g.bound}"
    else:
        title = "G"
    cyc = set()
    if highlight:
        k = len(highlight)
        for a in range(k):
            u, v = highlight[a], highlight[(a + 1) % k]
            cyc.add((min(u, v), max(u, v)))
    lines = [f'graph "{title}" {{']
    for i in range(len(g)):
        attr = ' [color="red"]' if highlight and i in highlight else ""
        lines.append(f'  "{g.name_of(i)}"{attr};')
    for u, v in g.edges():
        attr = ' [color="red", penwidth=2]' if (u, v) in cyc else ""
        lines.append(f'  "{g.name_of(u)}" -- "{g.name_of(v)}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
