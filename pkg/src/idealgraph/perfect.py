"""Perfectness: the s' <= 4 criterion and a bounded odd hole/antihole search.

The search certifies only "no induced odd cycle of length 5..max_len"; the
full perfectness claim for longer cycles rests on the closed form, and the
two are reported side by side rather than merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from idealgraph.graph import BitGraph, IdealGraph, ModulePair, iter_bits

DEFAULT_HOLE_LIMIT = 9


def is_perfect_closed_form(pair: ModulePair) -> bool:
    return pair.s_prime <= 4


def is_induced_cycle(adj: Sequence[int], cycle: Sequence[int]) -> bool:
    """Consecutive vertices adjacent, all other pairs non-adjacent."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if bool(adj[cycle[a]] >> cycle[b] & 1) != consecutive:
                return False
    return True


def _hole_of_length(adj: Sequence[int], active: int, length: int) -> list[int] | None:
    """First induced cycle of exactly ``length`` vertices, smallest vertex first.

    Paths grow from their smallest vertex p0; every new vertex must avoid the
    closed neighborhoods of all path vertices but the current end. The cycle
    closes through a common neighbor of the end and p0, and p1 < last keeps
    each cycle from being found in both directions.
    """
    path: list[int] = []

    def grow(blocked: int, end_nb: int) -> list[int] | None:
        # blocked: closed neighborhoods of path[0..-2]; end_nb: neighbors of path[-1]
        k = len(path)
        p0 = path[0]
        above = active & ~((2 << p0) - 1)
        if k == length - 1:
            # interior vertices must not see the closing vertex
            inner = 0
            for v in path[1:-1]:
                inner |= adj[v] | (1 << v)
            close = end_nb & adj[p0] & above & ~inner
            close &= ~((2 << path[1]) - 1)
            for x in iter_bits(close):
                return path + [x]
            return None
        for x in iter_bits(end_nb & above & ~blocked):
            path.append(x)
            found = grow(blocked | adj[path[-2]] | (1 << path[-2]), adj[x])
            path.pop()
            if found:
                return found
        return None

    for v in iter_bits(active):
        path.append(v)
        found = grow(0, adj[v])
        path.pop()
        if found:
            return found
    return None


def find_hole(g: BitGraph, max_len: int = DEFAULT_HOLE_LIMIT, min_len: int = 5) -> list[int] | None:
    """Shortest induced odd cycle with length in [min_len, max_len], if any."""
    active = 0
    for i, row in enumerate(g.adj):
        if row.bit_count() >= 2:
            active |= 1 << i
    for length in range(min_len | 1, max_len + 1, 2):
        if active.bit_count() < length:
            break
        cyc = _hole_of_length(g.adj, active, length)
        if cyc is not None:
            if not is_induced_cycle(g.adj, cyc):
                raise RuntimeError(f"hole search returned a non-induced cycle {cyc}")
            return cyc
    return None


def find_odd_hole(g: BitGraph, max_len: int = DEFAULT_HOLE_LIMIT) -> list[int] | None:
    return find_hole(g, max_len)


def find_odd_antihole(g: BitGraph, max_len: int = DEFAULT_HOLE_LIMIT) -> list[int] | None:
    """Odd hole of the complement, as vertex indices of ``g``.

    The complement is restricted to vertices that are not universal in g.
    A 5-antihole is also a 5-hole of g, since C5 is self-complementary.
    """
    full = g.all_mask
    keep = [i for i, row in enumerate(g.adj) if row | (1 << i) != full]
    comp = g.complement().induced(keep)
    cyc = find_hole(comp, max_len)
    if cyc is None:
        return None
    out = [keep[i] for i in cyc]
    comp_adj = g.complement().adj
    if not is_induced_cycle(comp_adj, out):
        raise RuntimeError(f"antihole search returned a non-induced cycle {out}")
    return out


def c5_from_label_pattern(g: IdealGraph) -> list[int] | None:
    """Induced 5-cycle built from labels {1,5},{1,2},{2,3},{3,4},{4,5} of S'.

    Uses the first five primes of S' and the first vertex of each class.
    Returns None when s' < 5.
    """
    sup = g.pair.support
    if len(sup) < 5:
        return None
    i = sup[:5]
    pattern = [(i[0], i[4]), (i[0], i[1]), (i[1], i[2]), (i[2], i[3]), (i[3], i[4])]
    cycle = []
    for a, b in pattern:
        want = (1 << a) | (1 << b)
        hit = next((k for k, v in enumerate(g.vertices) if v.label == want), None)
        if hit is None:
            return None
        cycle.append(hit)
    return cycle if is_induced_cycle(g.adj, cycle) else None


@dataclass(frozen=True)
class PerfectnessReport:
    closed_form: bool
    hole: list[int] | None
    antihole: list[int] | None
    max_len: int

    @property
    def hole_found(self) -> bool:
        return self.hole is not None or (self.antihole is not None and len(self.antihole) == 5)

    @property
    def antihole_found(self) -> bool:
        return self.antihole is not None

    @property
    def has_c5(self) -> bool:
        return any(c is not None and len(c) == 5 for c in (self.hole, self.antihole))

    @property
    def consistent(self) -> bool:
        """No hole/antihole when perfect by s', and an induced C5 when not."""
        if self.closed_form:
            return not (self.hole_found or self.antihole_found)
        return self.has_c5


def perfectness_report(g: IdealGraph, max_len: int = DEFAULT_HOLE_LIMIT) -> PerfectnessReport:
    if max_len < 5 or max_len % 2 == 0:
        raise ValueError("max_len must be an odd integer >= 5")
    closed = is_perfect_closed_form(g.pair)
    hole = find_odd_hole(g, max_len)
    anti = find_odd_antihole(g, max_len)
    return PerfectnessReport(closed, hole, anti, max_len)

