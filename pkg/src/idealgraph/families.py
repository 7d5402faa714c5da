"""Label-class combinatorics for G_n(Z_m).

Vertices with the same label D form a class W_D; each nonempty-label class
is a clique of true twins, and a set of vertices is a clique exactly when
its labels form an intersecting family of subsets of S'. That turns the
clique number into a weighted search over intersecting families, which is
small because every maximal family picks exactly one set from each
complementary pair {D, S' \\ D}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from idealgraph.errors import OracleLimitError
from idealgraph.graph import BitGraph, IdealGraph, ModulePair, graph_from_pair, iter_bits, nontrivial_vertices
from idealgraph.search import exact_coloring, is_clique, is_proper_coloring, max_clique

FAMILY_LIMIT = 6
OMEGA_ORACLE_LIMIT = 512
CHI_ORACLE_LIMIT = 64


@dataclass(frozen=True)
class FamilyWeightTable:
    pair: ModulePair
    weights: dict[int, int]

    def __getitem__(self, mask: int) -> int:
        return self.weights.get(mask, 0)

    def total(self) -> int:
        return sum(self.weights.values())

    def family_weight(self, family) -> int:
        return sum(self[d] for d in family)


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ColoringCertificate:
    colors: tuple[int, ...]
    pairing_complete: bool = True

    @property
    def count(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class FamilyOmega:
    value: int
    family: tuple[int, ...]
    clique: CliqueCertificate


def submasks(mask: int):
    """All submasks of ``mask`` in increasing numeric order."""
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return subs[::-1]


def class_size_table(pair: ModulePair) -> FamilyWeightTable:
    """|W_D| for every D subset of S' by the product formula.

    A divisor lands in W_D when r_i < beta_i exactly on D, giving beta_i
    choices inside D and alpha_i - beta_i + 1 outside. The divisors 1 and m
    have labels S' and the empty set and are removed.
    """
    sp = pair.support_mask
    weights = {}
    for d in submasks(sp):
        size = prod(
            b if d >> i & 1 else a - b + 1
            for i, (a, b) in enumerate(zip(pair.alpha, pair.beta))
        )
        if d == sp:
            size -= 1
        if d == 0:
            size -= 1
        weights[d] = size
    return FamilyWeightTable(pair, weights)


def class_size_by_count(pair: ModulePair) -> FamilyWeightTable:
    """|W_D| by tallying the label of every nontrivial divisor."""
    weights = {d: 0 for d in submasks(pair.support_mask)}
    for v in nontrivial_vertices(pair):
        weights[v.label] += 1
    return FamilyWeightTable(pair, weights)


@lru_cache(maxsize=None)
def maximal_families(support_mask: int) -> tuple[tuple[int, ...], ...]:
    """Every maximal intersecting family of nonempty subsets of ``support_mask``.

    Each family is returned as a sorted tuple of bitmasks. Any pairwise
    intersecting partial choice extends, so the backtracking never dead-ends.
    """
    pairs = [d for d in submasks(support_mask) if 0 < d < (support_mask ^ d)]
    out = []
    chosen = [support_mask]

    def meets_all(d: int) -> bool:
        return all(d & c for c in chosen)

    def walk(k: int) -> None:
        if k == len(pairs):
            out.append(tuple(sorted(chosen)))
            return
        d = pairs[k]
        for pick in (d, support_mask ^ d):
            if meets_all(pick):
                chosen.append(pick)
                walk(k + 1)
                chosen.pop()

    walk(0)
    return tuple(out)


def omega_via_families(pair: ModulePair, limit: int = FAMILY_LIMIT) -> FamilyOmega:
    """Exact clique number as the heaviest intersecting family of labels."""
    if pair.s_prime > limit:
        raise OracleLimitError(
            "family search", pair.s_prime, limit, "use the oracle method for larger s'"
        )
    table = class_size_table(pair)
    best_w = -1
    best_fam: tuple[int, ...] = ()
    for fam in maximal_families(pair.support_mask):
        w = table.family_weight(fam)
        if w > best_w or (w == best_w and fam < best_fam):
            best_w, best_fam = w, fam
    verts = nontrivial_vertices(pair)
    members = set(best_fam)
    clique = tuple(k for k, v in enumerate(verts) if v.label in members)
    if not clique and verts:
        # edgeless graph: one vertex is still a clique
        return FamilyOmega(1, best_fam, CliqueCertificate((0,)))
    return FamilyOmega(len(clique), best_fam, CliqueCertificate(clique))


def omega_oracle(g: BitGraph, limit: int = OMEGA_ORACLE_LIMIT) -> tuple[int, CliqueCertificate]:
    """Clique number by branch and bound on the adjacency rows."""
    active = 0
    for i, row in enumerate(g.adj):
        if row:
            active |= 1 << i
    size = active.bit_count()
    if size > limit:
        raise OracleLimitError("clique oracle", size, limit)
    clique = max_clique(g.adj, active)
    if not clique and len(g):
        clique = [0]
    assert is_clique(g.adj, clique)
    return len(clique), CliqueCertificate(tuple(clique))


def omega_lower_bound(pair: ModulePair) -> int:
    """max over j in S' of beta_j * prod_{i != j} (alpha_i + 1) - 1."""
    best = None
    for j in pair.support:
        val = pair.beta[j] * prod(a + 1 for i, a in enumerate(pair.alpha) if i != j) - 1
        best = val if best is None else max(best, val)
    return best


def weakly_perfect_condition(pair: ModulePair) -> bool:
    """alpha_i <= 2 beta_i - 1 for every i in S'."""
    return all(pair.alpha[i] <= 2 * pair.beta[i] - 1 for i in pair.support)


def balanced_condition(pair: ModulePair) -> bool:
    """alpha_i == 2 beta_i - 1 for every i in S'."""
    return all(pair.alpha[i] == 2 * pair.beta[i] - 1 for i in pair.support)


def closed_form_odd_exponents(pair: ModulePair) -> int | None:
    """Common value of omega and chi when alpha_i = 2 beta_i - 1 on S', else None."""
    if not balanced_condition(pair):
        return None
    outside = prod(a + 1 for i, a in enumerate(pair.alpha) if not pair.beta[i])
    return 2 ** (pair.s_prime - 1) * prod(pair.beta[i] for i in pair.support) * outside - 1


def chi_via_pairing(
    pair: ModulePair,
    graph: IdealGraph | None = None,
    limit: int = FAMILY_LIMIT,
) -> ColoringCertificate:
    """Color with |W_Gamma| colors by pairing each class with its complement.

    Classes in the heaviest family Gamma get distinct colors. A class W_D
    outside Gamma borrows, in vertex order, the colors of W_{S' minus D},
    which sits in Gamma and is never adjacent to W_D. Isolated vertices take
    color 0. Vertices left over when a class is larger than its complement
    are colored greedily and the certificate is marked incomplete.
    """
    g = graph if graph is not None else graph_from_pair(pair)
    sp = pair.support_mask
    fam = set(omega_via_families(pair, limit).family)
    labels = [v.label for v in g.vertices]
    colors = [-1] * len(labels)
    class_colors: dict[int, list[int]] = {}
    nxt = 0
    for k, lab in enumerate(labels):
        if lab and lab in fam:
            colors[k] = nxt
            class_colors.setdefault(lab, []).append(nxt)
            nxt += 1
    taken: dict[int, int] = {}
    leftover = []
    for k, lab in enumerate(labels):
        if not lab or lab in fam:
            continue
        pool = class_colors.get(sp ^ lab, [])
        pos = taken.get(lab, 0)
        if pos < len(pool):
            colors[k] = pool[pos]
            taken[lab] = pos + 1
        else:
            leftover.append(k)
    for k, lab in enumerate(labels):
        if not lab:
            colors[k] = 0
    for k in leftover:
        busy = {colors[w] for w in iter_bits(g.adj[k]) if colors[w] >= 0}
        c = 0
        while c in busy:
            c += 1
        colors[k] = c
    if not is_proper_coloring(g.adj, colors):
        raise RuntimeError(f"pairing produced an improper coloring for {pair}")
    return ColoringCertificate(tuple(colors), pairing_complete=not leftover)


def chi_oracle(g: BitGraph, limit: int = CHI_ORACLE_LIMIT) -> tuple[int, ColoringCertificate]:
    """Chromatic number by exact backtracking on the non-isolated vertices."""
    active = [i for i, row in enumerate(g.adj) if row]
    if len(active) > limit:
        raise OracleLimitError("coloring oracle", len(active), limit)
    colors = exact_coloring(g.adj, active)
    colors = [0 if c < 0 else c for c in colors]
    if not is_proper_coloring(g.adj, colors):
        raise RuntimeError("oracle produced an improper coloring")
    cert = ColoringCertificate(tuple(colors))
    return cert.count if len(g) else 0, cert


def family_to_json(pair: ModulePair, family) -> list[list[int]]:
    return [pair.mask_to_indices(d) for d in family]
