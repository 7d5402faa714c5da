"""Exhaustive sweeps that check the structural theorems on every G_n(Z_m).

Each suite walks all pairs (m, n) with 2 <= m <= max_m and n | m, n >= 2,
runs a per-instance check, and collects violations. Statements that assume
a faithful module are only swept at n = m, the one case where
ann(Z_n) = nZ_m vanishes.

Per-instance checks are module-level functions so they can be shipped to a
process pool; results are merged in (m, n) order, so reports do not depend
on the job count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import gcd, lcm, prod
from typing import Callable, Iterable

from idealgraph.arith import coprime_splittings, is_prime
from idealgraph.errors import OracleLimitError
from idealgraph.families import (
    CHI_ORACLE_LIMIT,
    FAMILY_LIMIT,
    OMEGA_ORACLE_LIMIT,
    chi_oracle,
    chi_via_pairing,
    class_size_table,
    closed_form_odd_exponents,
    omega_lower_bound,
    omega_oracle,
    omega_via_families,
    weakly_perfect_condition,
)
from idealgraph.graph import INF, ModulePair, graph_from_pair, isolated_indices
from idealgraph.perfect import (
    DEFAULT_HOLE_LIMIT,
    c5_from_label_pattern,
    find_hole,
    find_odd_antihole,
    find_odd_hole,
    is_perfect_closed_form,
)

WEAK_PERFECT_NOTE = (
    "property-based evidence only: a finite search cannot settle whether every "
    "G_n(Z_m) is weakly perfect"
)


@dataclass
class SweepReport:
    suite: str
    range_desc: str
    checked: int = 0
    violations: list[tuple[int, int, str]] = field(default_factory=list)
    wall_time: float = 0.0
    records: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "summary": True,
            "range": self.range_desc,
            "checked": self.checked,
            "passed": self.passed,
            "violations": [list(v) for v in self.violations],
            "wall_time": round(self.wall_time, 3),
            **self.notes,
        }

    def to_jsonl(self) -> str:
        lines = [json.dumps({"suite": self.suite, **r}) for r in self.records]
        lines.append(json.dumps(self.summary()))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"[{status}] {self.suite}: {self.checked} instances, {self.range_desc}, "
            f"{self.wall_time:.2f}s"
        ]
        for m, n, detail in self.violations[:50]:
            out.append(f"    violation at (m={m}, n={n}): {detail}")
        if len(self.violations) > 50:
            out.append(f"    ... {len(self.violations) - 50} more")
        for key, val in self.notes.items():
            if isinstance(val, list):
                out.append(f"    {key}: {len(val)}" + (f" {val[:20]}" if val else ""))
            else:
                out.append(f"    {key}: {val}")
        return "\n".join(out)


def module_pairs(max_m: int, min_m: int = 2) -> list[tuple[int, int]]:
    """All (m, n) with min_m <= m <= max_m, n | m and n >= 2, sorted."""
    out = []
    for m in range(max(min_m, 2), max_m + 1):
        for n in range(2, m + 1):
            if m % n == 0:
                out.append((m, n))
    return out


def _ext(x):
    if x is None:
        return None
    return "inf" if x == INF else x


def _run(
    suite: str,
    check: Callable[..., dict | None],
    pairs: Iterable[tuple[int, int]],
    range_desc: str,
    jobs: int = 1,
) -> SweepReport:
    start = time.perf_counter()
    pairs = list(pairs)
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(pairs) // (jobs * 8))
            results = list(pool.map(check, [m for m, _ in pairs], [n for _, n in pairs], chunksize=chunk))
    else:
        results = [check(m, n) for m, n in pairs]
    rep = SweepReport(suite, range_desc)
    for (m, n), rec in sorted(zip(pairs, results)):
        if rec is None:
            continue
        rec = {"m": m, "n": n, **rec}
        rep.records.append(rec)
        rep.checked += 1
        if not rec["ok"]:
            rep.violations.append((m, n, rec.get("detail", "")))
    rep.wall_time = time.perf_counter() - start
    return rep


def _range(max_m: int, faithful: bool = False) -> str:
    tail = ", n = m" if faithful else ", all n | m"
    return f"2 <= m <= {max_m}{tail}"


# -- per-instance checks ---------------------------------------------------


def check_diameter(m: int, n: int) -> dict | None:
    g = graph_from_pair(ModulePair.of(m, n))
    if not len(g):
        return None
    d = g.stats.diameter
    return {"ok": d in (0, 1, 2, INF), "diameter": _ext(d), "detail": f"diameter {d}"}


def check_girth(m: int, n: int) -> dict | None:
    g = graph_from_pair(ModulePair.of(m, n))
    gr = g.stats.girth
    return {"ok": gr in (3, INF), "girth": _ext(gr), "detail": f"girth {gr}"}


def check_regular(m: int, n: int) -> dict | None:
    g = graph_from_pair(ModulePair.of(m, n))
    if not len(g):
        return None
    st = g.stats
    ok = not (st.is_connected and st.is_regular) or st.is_complete
    return {
        "ok": ok,
        "regular": st.is_regular,
        "connected": st.is_connected,
        "complete": st.is_complete,
        "detail": "connected regular graph is not complete",
    }


def check_isolated(m: int, n: int) -> dict | None:
    g = graph_from_pair(ModulePair.of(m, n))
    if not len(g):
        return None
    bad = []
    iso = isolated_indices(g)
    for i in iso:
        d = g.vertices[i].value
        if not (is_prime(d) or d % n == 0):
            bad.append(d)
    # empty label should single out exactly the multiples of n
    mislabeled = [v.value for v in g.vertices if (v.label == 0) != (v.value % n == 0)]
    ok = not bad and not mislabeled
    detail = f"isolated and neither prime nor multiple of n: {bad}; label mismatch: {mislabeled}"
    return {"ok": ok, "isolated": g.values(iso), "detail": detail}


def check_disconnected(m: int, n: int) -> dict | None:
    if n != m:
        return None
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    if len(g) < 2:
        return None
    connected = g.stats.is_connected
    splits = coprime_splittings(pair.m_fact)
    ok = connected or bool(splits)
    return {
        "ok": ok,
        "connected": connected,
        "splitting": list(splits[0]) if splits and not connected else None,
        "detail": "disconnected but m has no coprime splitting",
    }


def check_null(m: int, n: int) -> dict | None:
    if n != m:
        return None
    g = graph_from_pair(ModulePair.of(m, n))
    null = g.stats.edge_count == 0
    return {"ok": not null or len(g) <= 2, "null": null, "vertices": len(g),
            "detail": f"null graph on {len(g)} vertices"}


def _nil_generator(m: int) -> int:
    """Smallest positive nilpotent of Z_m (the generator of Nil), by direct powering."""
    k = m.bit_length()
    for x in range(1, m + 1):
        if pow(x, k, m) == 0:
            return x
    return m


def _jacobson_generator(pair: ModulePair) -> int:
    """Generator of the intersection of the maximal ideals pZ_m."""
    return lcm(*pair.primes) % pair.m or pair.m


def check_semilocal(m: int, n: int, family_limit: int = FAMILY_LIMIT,
                    omega_limit: int = OMEGA_ORACLE_LIMIT) -> dict | None:
    if n != m:
        return None
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    if not len(g):
        return None
    if pair.s_prime <= family_limit:
        omega = omega_via_families(pair, family_limit).value
    else:
        omega = omega_oracle(g, omega_limit)[0]
    jac = _jacobson_generator(pair)
    nil = _nil_generator(m)
    ok = pair.s <= omega + 1 and jac == nil
    return {
        "ok": ok,
        "max_ideals": pair.s,
        "omega": omega,
        "jacobson": jac,
        "nilradical": nil,
        "detail": f"|Max|={pair.s}, omega={omega}, J={jac}Z_m, Nil={nil}Z_m",
    }


def check_subgraph(m: int, n: int) -> dict | None:
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    full = graph_from_pair(ModulePair.of(m, m))
    spanning = all((row & ~big) == 0 for row, big in zip(g.adj, full.adj))
    # G(Z_n) sits inside G_n(Z_m) on the ideals eZ_m with e a nontrivial divisor of n
    small = graph_from_pair(ModulePair.of(n, n))
    keep = [g.index_of(v.value) for v in small.vertices]
    sub = g.induced(keep)
    induced = sub.adj == small.adj
    # dZ_m acts on Z_n as gcd(d, n)Z_n; two images meet nontrivially iff n does not divide their lcm
    images = [gcd(v.value, n) for v in g.vertices]
    quotient = all(
        bool(g.adj[i] >> j & 1) == (i != j and lcm(a, b) % n != 0)
        for i, a in enumerate(images) for j, b in enumerate(images)
    )
    by_image: dict[int, set[int]] = {}
    for e, v in zip(images, g.vertices):
        by_image.setdefault(e, set()).add(v.label)
    quotient = quotient and all(len(labels) == 1 for labels in by_image.values())
    ok = spanning and induced and quotient
    return {"ok": ok, "spanning": spanning, "induced": induced, "quotient": quotient,
            "detail": f"spanning={spanning} induced={induced} quotient={quotient}"}


def _label_counts_direct(m: int, n: int, primes: tuple[int, ...]) -> dict[int, int]:
    """Tally labels by testing p^beta | d on the integers d | m themselves."""
    powers = []
    for i, p in enumerate(primes):
        q = 1
        while n % (q * p) == 0:
            q *= p
        if q > 1:
            powers.append((i, q))
    counts: dict[int, int] = {}
    d = 1
    while d * d <= m:
        if m % d == 0:
            for e in {d, m // d}:
                if e in (1, m):
                    continue
                lab = 0
                for i, q in powers:
                    if e % q:
                        lab |= 1 << i
                counts[lab] = counts.get(lab, 0) + 1
        d += 1
    return counts


def check_class_sizes(m: int, n: int) -> dict | None:
    pair = ModulePair.of(m, n)
    table = class_size_table(pair)
    direct = _label_counts_direct(m, n, pair.primes)
    formula = {k: v for k, v in table.weights.items() if v}
    expected_total = prod(a + 1 for a in pair.alpha) - 2
    ok = formula == direct and table.total() == expected_total
    return {"ok": ok, "total": table.total(),
            "detail": f"formula {formula} vs direct {direct}, total {table.total()} vs {expected_total}"}


def check_perfectness(m: int, n: int, hole_limit: int = DEFAULT_HOLE_LIMIT) -> dict | None:
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    closed = is_perfect_closed_form(pair)
    hole = find_odd_hole(g, hole_limit)
    anti = find_odd_antihole(g, hole_limit)
    problems = []
    if closed and (hole or anti):
        problems.append("closed form says perfect but an odd hole/antihole exists")
    if not closed:
        c5 = find_hole(g, 5)
        built = c5_from_label_pattern(g)
        if c5 is None:
            problems.append("s' >= 5 but no induced C5 found")
        if built is None:
            problems.append("label-pattern C5 is not an induced cycle")
    return {
        "ok": not problems,
        "s_prime": pair.s_prime,
        "closed_form": closed,
        "hole": g.values(hole) if hole else None,
        "antihole": g.values(anti) if anti else None,
        "detail": "; ".join(problems),
    }


def check_bounds(m: int, n: int, family_limit: int = FAMILY_LIMIT,
                 omega_limit: int = OMEGA_ORACLE_LIMIT,
                 chi_limit: int = CHI_ORACLE_LIMIT) -> dict | None:
    pair = ModulePair.of(m, n)
    g = graph_from_pair(pair)
    problems = []
    lb = omega_lower_bound(pair)
    fam = omega_via_families(pair, family_limit) if pair.s_prime <= family_limit else None
    active = sum(1 for row in g.adj if row)
    oracle = omega_oracle(g, omega_limit)[0] if active <= omega_limit else None
    if fam is None and oracle is None:
        return {"ok": True, "skipped": True, "active": active, "detail": "beyond both clique limits"}
    omega = fam.value if fam is not None else oracle
    if fam is not None and oracle is not None and fam.value != oracle:
        problems.append(f"family omega {fam.value} != oracle omega {oracle}")
    if lb > omega:
        problems.append(f"lower bound {lb} exceeds omega {omega}")
    sharp = (pair.s_prime == 1 and pair.beta[pair.support[0]] > 1) or pair.s_prime == 2
    if sharp and lb != omega:
        problems.append(f"bound {lb} not attained (omega {omega}) for s'={pair.s_prime}")
    pairing = None
    if fam is not None and weakly_perfect_condition(pair):
        cert = chi_via_pairing(pair, g, family_limit)
        pairing = cert.count if len(g) else 0
        if not cert.pairing_complete or pairing != omega:
            problems.append(f"pairing coloring used {pairing} colors, omega {omega}")
    cf = closed_form_odd_exponents(pair)
    chi = None
    if cf is not None:
        if omega != cf or (oracle is not None and oracle != cf) or pairing != cf:
            problems.append(f"closed form {cf}: omega {omega}, oracle {oracle}, pairing {pairing}")
        if active <= chi_limit:
            chi = chi_oracle(g, chi_limit)[0]
            if chi != cf:
                problems.append(f"closed form {cf} but chromatic number {chi}")
    if pair.is_faithful and pair.m_fact.is_squarefree():
        want = 2 ** (pair.s - 1) - 1
        if omega != want or pairing != want:
            problems.append(f"squarefree m: expected {want}, omega {omega}, pairing {pairing}")
    return {
        "ok": not problems,
        "omega": omega,
        "lower_bound": lb,
        "active": active,
        "oracle_checked": oracle is not None,
        "closed_form": cf,
        "pairing_colors": pairing,
        "chi_oracle": chi,
        "detail": "; ".join(problems),
    }


def check_weak_perfect(m: int, n: int, omega_limit: int = OMEGA_ORACLE_LIMIT,
                       chi_limit: int = CHI_ORACLE_LIMIT) -> dict:
    pair = ModulePair.of(m, n)
    if weakly_perfect_condition(pair):
        return {"ok": True, "covered": True, "detail": ""}
    g = graph_from_pair(pair)
    try:
        omega = omega_oracle(g, omega_limit)[0]
        chi = chi_oracle(g, chi_limit)[0]
    except OracleLimitError as exc:
        return {"ok": True, "skipped": True, "detail": str(exc)}
    return {"ok": omega == chi, "omega": omega, "chi": chi,
            "detail": f"omega {omega} != chi {chi}"}


# -- suites ----------------------------------------------------------------


def sweep_diameter(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("diameter", check_diameter, module_pairs(max_m), _range(max_m), jobs)


def sweep_girth(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("girth", check_girth, module_pairs(max_m), _range(max_m), jobs)


def sweep_regular_complete(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("regular", check_regular, module_pairs(max_m), _range(max_m), jobs)


def sweep_isolated_lemma(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("isolated", check_isolated, module_pairs(max_m), _range(max_m), jobs)


def _faithful_pairs(max_m: int) -> list[tuple[int, int]]:
    return [(m, m) for m in range(2, max_m + 1)]


def sweep_disconnected_decomposition(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("disconnected", check_disconnected, _faithful_pairs(max_m), _range(max_m, True), jobs)


def sweep_null_graph(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("null", check_null, _faithful_pairs(max_m), _range(max_m, True), jobs)


def sweep_semilocal(max_m: int, jobs: int = 1, family_limit: int = FAMILY_LIMIT,
                    omega_limit: int = OMEGA_ORACLE_LIMIT) -> SweepReport:
    check = partial(check_semilocal, family_limit=family_limit, omega_limit=omega_limit)
    return _run("semilocal", check, _faithful_pairs(max_m), _range(max_m, True), jobs)


def sweep_subgraph_relations(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("subgraph", check_subgraph, module_pairs(max_m), _range(max_m), jobs)


def sweep_class_sizes(max_m: int, jobs: int = 1) -> SweepReport:
    return _run("classes", check_class_sizes, module_pairs(max_m), _range(max_m), jobs)


def sweep_perfectness(max_m: int, hole_limit: int = DEFAULT_HOLE_LIMIT, jobs: int = 1,
                      extra: Iterable[tuple[int, int]] = ()) -> SweepReport:
    pairs = sorted(set(module_pairs(max_m)) | set(extra))
    check = partial(check_perfectness, hole_limit=hole_limit)
    desc = _range(max_m) + f", holes up to length {hole_limit}"
    if extra:
        desc += f", plus {sorted(set(extra))}"
    return _run("perfect", check, pairs, desc, jobs)


def sweep_bounds_and_closed_forms(max_m: int, jobs: int = 1, family_limit: int = FAMILY_LIMIT,
                                  omega_limit: int = OMEGA_ORACLE_LIMIT,
                                  chi_limit: int = CHI_ORACLE_LIMIT) -> SweepReport:
    check = partial(check_bounds, family_limit=family_limit, omega_limit=omega_limit,
                    chi_limit=chi_limit)
    rep = _run("bounds", check, module_pairs(max_m), _range(max_m), jobs)
    rep.notes["oracle_agreements"] = sum(1 for r in rep.records if r.get("oracle_checked"))
    rep.notes["skipped"] = [[r["m"], r["n"]] for r in rep.records if r.get("skipped")]
    return rep


def search_weak_perfect_counterexample(max_m: int, jobs: int = 1,
                                       omega_limit: int = OMEGA_ORACLE_LIMIT,
                                       chi_limit: int = CHI_ORACLE_LIMIT) -> SweepReport:
    """Compare exact omega and chi wherever the sufficient condition fails.

    Pairs meeting alpha_i <= 2 beta_i - 1 on S' are weakly perfect by the
    pairing coloring and are counted as covered, not searched.
    """
    # instances outside the theorem's reach go first
    pairs = sorted(module_pairs(max_m),
                   key=lambda p: (weakly_perfect_condition(ModulePair.of(*p)), p))
    check = partial(check_weak_perfect, omega_limit=omega_limit, chi_limit=chi_limit)
    rep = _run("weakperfect", check, pairs, _range(max_m), jobs)
    searched = [r for r in rep.records if not r.get("covered") and not r.get("skipped")]
    rep.notes["covered_by_theorem"] = sum(1 for r in rep.records if r.get("covered"))
    rep.notes["searched"] = len(searched)
    rep.notes["skipped"] = [[r["m"], r["n"]] for r in rep.records if r.get("skipped")]
    rep.notes["counterexamples"] = [[r["m"], r["n"], r["omega"], r["chi"]]
                                    for r in searched if not r["ok"]]
    found = rep.notes["counterexamples"]
    rep.notes["result"] = (
        f"counterexample found: {found[0]}" if found
        else f"no counterexample found; {len(rep.notes['skipped'])} skipped"
    )
    rep.notes["evidence"] = WEAK_PERFECT_NOTE
    return rep


SUITES = {
    "diameter": sweep_diameter,
    "girth": sweep_girth,
    "regular": sweep_regular_complete,
    "isolated": sweep_isolated_lemma,
    "disconnected": sweep_disconnected_decomposition,
    "null": sweep_null_graph,
    "semilocal": sweep_semilocal,
    "subgraph": sweep_subgraph_relations,
    "classes": sweep_class_sizes,
    "perfect": sweep_perfectness,
    "bounds": sweep_bounds_and_closed_forms,
    "weakperfect": search_weak_perfect_counterexample,
}


def run_suite(name: str, max_m: int, jobs: int = 1, hole_limit: int = DEFAULT_HOLE_LIMIT,
              family_limit: int = FAMILY_LIMIT, omega_limit: int = OMEGA_ORACLE_LIMIT,
              chi_limit: int = CHI_ORACLE_LIMIT) -> list[SweepReport]:
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    out = []
    for s in names:
        if s == "perfect":
            out.append(sweep_perfectness(max_m, hole_limit, jobs))
        elif s in ("semilocal",):
            out.append(sweep_semilocal(max_m, jobs, family_limit, omega_limit))
        elif s == "bounds":
            out.append(sweep_bounds_and_closed_forms(max_m, jobs, family_limit, omega_limit, chi_limit))
        elif s == "weakperfect":
            out.append(search_weak_perfect_counterexample(max_m, jobs, omega_limit, chi_limit))
        else:
            out.append(SUITES[s](max_m, jobs))
    return out
