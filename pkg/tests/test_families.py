from itertools import combinations

import pytest
from hypothesis import given, settings

from idealgraph.errors import OracleLimitError
from idealgraph.families import (
    chi_oracle,
    chi_via_pairing,
    class_size_by_count,
    class_size_table,
    closed_form_odd_exponents,
    maximal_families,
    omega_lower_bound,
    omega_oracle,
    omega_via_families,
    submasks,
    weakly_perfect_condition,
)
from idealgraph.graph import ModulePair, graph_from_pair
from idealgraph.search import is_clique, is_proper_coloring
from oracles import brute_chromatic_number, brute_clique_number, brute_family_max, label_primes, nontrivial_divisors
from test_graph import module_pairs_strategy


def bits(pair, *indices):
    """Bitmask from 1-based prime indices."""
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def test_class_sizes_900():
    t = class_size_table(ModulePair.of(900, 900))
    p = t.pair
    for i in (1, 2, 3):
        assert t[bits(p, i)] == 2
    for i, j in combinations((1, 2, 3), 2):
        assert t[bits(p, i, j)] == 4
    assert t[bits(p, 1, 2, 3)] == 7
    for j in (1, 2, 3):
        star = [d for d in submasks(p.support_mask) if d >> (j - 1) & 1]
        assert t.family_weight(star) == 17


def brute_label_table(m, n):
    pair = ModulePair.of(m, n)
    counts = {}
    for d in nontrivial_divisors(m):
        key = frozenset(label_primes(d, n))
        counts[key] = counts.get(key, 0) + 1
    table = class_size_table(pair)
    formula = {frozenset(pair.mask_to_primes(k)): v for k, v in table.weights.items() if v}
    return counts, formula


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (12, 2, {frozenset({2}): 1, frozenset(): 3}),
        (216, 36, {frozenset({2}): 4, frozenset({3}): 4, frozenset({2, 3}): 3, frozenset(): 3}),
    ],
)
def test_class_sizes_small(m, n, expected):
    counts, formula = brute_label_table(m, n)
    assert counts == expected
    assert formula == expected


@settings(max_examples=300, deadline=None)
@given(module_pairs_strategy(5000))
def test_class_size_formula_matches_counting(mn):
    counts, formula = brute_label_table(*mn)
    assert counts == formula
    pair = ModulePair.of(*mn)
    t = class_size_table(pair)
    assert t.weights == class_size_by_count(pair).weights
    assert t.total() == len(nontrivial_divisors(mn[0]))


def test_empty_class_holds_multiples_of_n():
    for m, n in [(12, 4), (36, 6), (900, 30), (216, 36)]:
        t = class_size_table(ModulePair.of(m, n))
        assert t[0] == sum(1 for d in nontrivial_divisors(m) if d % n == 0)


@settings(max_examples=200, deadline=None)
@given(module_pairs_strategy(5000))
def test_monotone_under_weak_perfect_condition(mn):
    pair = ModulePair.of(*mn)
    if not weakly_perfect_condition(pair):
        return
    t = class_size_table(pair)
    sp = pair.support_mask
    subs = [d for d in submasks(sp) if d]
    for a in subs:
        for b in subs:
            if a & ~b == 0:
                # the full-support class drops m itself, so it may fall one short
                assert t[a] <= t[b] + (b == sp and a != sp)


def test_full_support_class_can_be_smaller():
    t = class_size_table(ModulePair.of(6, 6))
    assert (t[0b01], t[0b11]) == (1, 0)


@pytest.mark.parametrize("mask, count", [(0b1, 1), (0b11, 2), (0b111, 4), (0b1111, 12), (0b11111, 81)])
def test_maximal_family_counts(mask, count):
    # known counts of maximal intersecting families on 1..5 points
    fams = maximal_families(mask)
    assert len(fams) == count
    for fam in fams:
        assert len(fam) == 2 ** (mask.bit_count() - 1)
        assert all(a & b for a, b in combinations(fam, 2))


def test_maximal_families_six_points():
    assert len(maximal_families(0b111111)) == 2646


def test_omega_900_family_witness():
    pair = ModulePair.of(900, 900)
    res = omega_via_families(pair)
    assert res.value == 19
    assert [pair.mask_to_indices(d) for d in res.family] == [[1, 2], [1, 3], [2, 3], [1, 2, 3]]
    g = graph_from_pair(pair)
    assert is_clique(g.adj, res.clique.vertices) and res.clique.size == 19


@pytest.mark.parametrize("m, n, omega", [(30, 30, 3), (12, 2, 1), (12, 4, 3), (12, 3, 2), (36, 6, 2), (7, 7, 0)])
def test_omega_examples(m, n, omega):
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    assert omega_via_families(pair).value == omega
    assert omega_oracle(g)[0] == omega


def test_omega_family_limit():
    pair = ModulePair.of(2 * 3 * 5 * 7 * 11 * 13 * 17, 2 * 3 * 5 * 7 * 11 * 13 * 17)
    with pytest.raises(OracleLimitError, match="oracle"):
        omega_via_families(pair)


def test_omega_oracle_limit():
    g = graph_from_pair(ModulePair.of(900, 900))
    with pytest.raises(OracleLimitError):
        omega_oracle(g, limit=10)


def ground_weights(pair):
    t = class_size_table(pair)
    ground = frozenset(pair.support)
    weights = {frozenset(i for i in pair.support if d >> i & 1): w for d, w in t.weights.items() if d}
    return weights, ground


@settings(max_examples=60, deadline=None)
@given(module_pairs_strategy(1000))
def test_family_omega_equals_subset_enumeration(mn):
    pair = ModulePair.of(*mn)
    weights, ground = ground_weights(pair)
    best = brute_family_max(weights, ground)
    g = graph_from_pair(pair)
    expected = best if best else min(1, len(g))
    assert omega_via_families(pair).value == expected


@settings(max_examples=80, deadline=None)
@given(module_pairs_strategy(400))
def test_omega_methods_agree_with_brute_force(mn):
    pair = ModulePair.of(*mn)
    g = graph_from_pair(pair)
    if len(g) > 16:
        return
    want = brute_clique_number(list(g.adj))
    assert omega_via_families(pair).value == want
    assert omega_oracle(g)[0] == want


@settings(max_examples=200, deadline=None)
@given(module_pairs_strategy(3000))
def test_witness_family_complement_pairs(mn):
    pair = ModulePair.of(*mn)
    res = omega_via_families(pair)
    sp = pair.support_mask
    fam = set(res.family)
    assert sp in fam
    for d in submasks(sp):
        if 0 < d < sp:
            assert (d in fam) != ((sp ^ d) in fam)
    g = graph_from_pair(pair)
    assert is_clique(g.adj, res.clique.vertices)
    assert res.clique.size == res.value


@pytest.mark.parametrize(
    "m, n, lb",
    [(900, 900, 17), (30, 30, 3), (8, 8, 2), (81, 81, 3), (6, 2, 1)],
)
def test_lower_bound_examples(m, n, lb):
    assert omega_lower_bound(ModulePair.of(m, n)) == lb


@pytest.mark.parametrize("p, k", [(2, 2), (2, 5), (3, 4), (7, 3)])
def test_lower_bound_sharp_for_prime_powers(p, k):
    pair = ModulePair.of(p**k, p**k)
    assert omega_lower_bound(pair) == k - 1 == omega_via_families(pair).value


@settings(max_examples=300, deadline=None)
@given(module_pairs_strategy(5000))
def test_lower_bound_below_omega(mn):
    pair = ModulePair.of(*mn)
    omega = omega_via_families(pair).value
    lb = omega_lower_bound(pair)
    assert lb <= omega
    if pair.s_prime == 2 or (pair.s_prime == 1 and pair.beta[pair.support[0]] > 1):
        assert lb == omega


@pytest.mark.parametrize("m, n, want", [(216, 36, 7), (30, 30, 3), (900, 900, None), (2, 2, 0), (8 * 27, 4 * 9, 7)])
def test_closed_form(m, n, want):
    assert closed_form_odd_exponents(ModulePair.of(m, n)) == want


@pytest.mark.parametrize("m, n, colors", [(900, 900, 19), (216, 36, 7), (30, 30, 3), (12, 2, 1), (6, 6, 1)])
def test_pairing_coloring_examples(m, n, colors):
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    cert = chi_via_pairing(pair, g)
    assert is_proper_coloring(g.adj, cert.colors)
    assert cert.count == colors
    assert cert.pairing_complete


@settings(max_examples=300, deadline=None)
@given(module_pairs_strategy(5000))
def test_pairing_is_proper_and_tight_under_condition(mn):
    pair = ModulePair.of(*mn)
    g = graph_from_pair(pair)
    cert = chi_via_pairing(pair, g)
    assert is_proper_coloring(g.adj, cert.colors)
    omega = omega_via_families(pair).value
    assert cert.count >= omega
    if weakly_perfect_condition(pair):
        assert cert.pairing_complete
        assert cert.count == omega
    cf = closed_form_odd_exponents(pair)
    if cf is not None:
        assert cf == omega == cert.count


def test_pairing_fallback_flagged():
    # alpha = 2 >= 2 beta = 2 on every prime: outside the sufficient condition
    cert = chi_via_pairing(ModulePair.of(900, 30))
    assert not cert.pairing_complete


@pytest.mark.parametrize("m, n, chi", [(12, 4, 3), (12, 2, 1), (36, 6, 2), (12, 12, 3), (7, 7, 0)])
def test_chi_oracle_examples(m, n, chi):
    g = graph_from_pair(ModulePair.of(m, n))
    value, cert = chi_oracle(g)
    assert value == chi
    assert is_proper_coloring(g.adj, cert.colors)


@settings(max_examples=60, deadline=None)
@given(module_pairs_strategy(200))
def test_chi_oracle_matches_brute_force(mn):
    g = graph_from_pair(ModulePair.of(*mn))
    if len(g) > 8:
        return
    assert chi_oracle(g)[0] == brute_chromatic_number(list(g.adj))


def test_chi_oracle_limit():
    g = graph_from_pair(ModulePair.of(900, 900))
    with pytest.raises(OracleLimitError):
        chi_oracle(g, limit=8)


@settings(max_examples=150, deadline=None)
@given(module_pairs_strategy(1000))
def test_sandwich(mn):
    pair = ModulePair.of(*mn)
    g = graph_from_pair(pair)
    omega = omega_oracle(g)[0]
    chi, cert = chi_oracle(g)
    assert omega <= chi <= chi_via_pairing(pair, g).count
    assert is_proper_coloring(g.adj, cert.colors)
