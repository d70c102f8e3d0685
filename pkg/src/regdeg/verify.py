"""Named verification suites, one per result checked by the command line.

Each suite returns a :class:`CheckReport`; a suite passes only when every
case it ran agreed with the stated identity or inequality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .atlas import (
    RdCensus,
    asymptotics_probe,
    check_cw_witnesses,
    count_cw,
    enumerate_connected,
    lattice_CW,
    run_census,
    verify_cw_characterization,
    verify_sandwich,
)
from .cameron_walker import (
    cw_formula_invariants,
    decompose_cw,
    is_cameron_walker,
    pendant_triangle_check,
)
from .constructions import CwSpec, build_cw
from .graph import (
    Graph,
    canonical_form,
    disjoint_union,
    independence_number,
    independent_sets,
    induced_matching_number,
    is_connected,
    mask_to_set,
    matching_number,
    s_suspension,
)
from .invariants import (
    hilbert_data,
    one_minus_t_pow,
    poly_add,
    poly_mul,
    regularity,
)


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, "details": self.details}


# --------------------------------------------------------------------------
# random inputs
# --------------------------------------------------------------------------

def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Connected G(n, p) sample with p drawn uniformly; n >= 2 means no isolated vertices."""
    p = rng.uniform(0.15, 0.9)
    while True:
        adj = [0] * n
        for v in range(n):
            for u in range(v):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if is_connected(g):
            return g


def random_independent_set(rng: random.Random, g: Graph) -> int:
    """Random independent set; a third of the time of size exactly dim - 1."""
    sets = independent_sets(g)
    if rng.random() < 1 / 3:
        dim = max(s.bit_count() for s in sets)
        sets = [s for s in sets if s.bit_count() == dim - 1]
    return rng.choice(sets)


def random_cw_spec(rng: random.Random, n_max: int) -> CwSpec:
    """Random spec with at most ``n_max`` vertices whose graph is Cameron-Walker."""
    while True:
        m = rng.randint(1, max(1, (n_max - 1) // 2))
        p = rng.randint(1, max(1, n_max - 2 * m))
        if 2 * m + p > n_max:
            continue
        # random spanning tree of the bipartite core, then extra edges
        edges = {(0, 0)}
        order = [("v", i) for i in range(1, m)] + [("w", j) for j in range(1, p)]
        rng.shuffle(order)
        vs, ws = [0], [0]
        for kind, i in order:
            if kind == "v":
                edges.add((i, rng.choice(ws)))
                vs.append(i)
            else:
                edges.add((rng.choice(vs), i))
                ws.append(i)
        for i in range(m):
            for j in range(p):
                if rng.random() < 0.3:
                    edges.add((i, j))
        s, t = [1] * m, [0] * p
        budget = n_max - 2 * m - p
        while budget > 0 and rng.random() < 0.7:
            if budget >= 2 and rng.random() < 0.5:
                t[rng.randrange(p)] += 1
                budget -= 2
            else:
                s[rng.randrange(m)] += 1
                budget -= 1
        if m == 1 and not any(t):
            continue  # a star
        return CwSpec(m, p, tuple(sorted(edges)), tuple(s), tuple(t))


def _hilbert_identity_holds(g: Graph, gs: Graph, s_size: int) -> bool:
    """H_{G^S} = H_G + t/(1-t)^{|S|+1}, cleared to a common denominator."""
    h, hs = hilbert_data(g), hilbert_data(gs)
    top = max(h.dim, hs.dim, s_size + 1)
    lhs = poly_mul(list(hs.h), one_minus_t_pow(top - hs.dim))
    rhs = poly_add(poly_mul(list(h.h), one_minus_t_pow(top - h.dim)),
                   poly_mul([0, 1], one_minus_t_pow(top - s_size - 1)))
    return lhs == rhs


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

def check_census_bounds(censuses: dict[int, RdCensus]) -> CheckReport:
    rep = CheckReport("lemma2.1")
    for n, c in sorted(censuses.items()):
        rep.cases += c.total_graphs
        rep.failures += c.violations
    return rep


def check_suspension_laws(samples: int = 200, n_max: int = 9, seed: int = 0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("lemma2.2")
    for _ in range(samples):
        n = rng.randint(2, n_max)
        g = random_connected_graph(rng, n)
        s = random_independent_set(rng, g)
        gs = s_suspension(g, s)
        k = s.bit_count()
        dim = independence_number(g)
        label = f"{g.to_graph6()} S={sorted(mask_to_set(s))}"
        rep.cases += 1
        if regularity(gs) != regularity(g):
            rep.failures.append(f"{label}: reg changed under suspension")
        if not _hilbert_identity_holds(g, gs, k):
            rep.failures.append(f"{label}: Hilbert series identity fails")
        if k <= dim - 1 and independence_number(gs) != dim:
            rep.failures.append(f"{label}: dim changed with |S| <= dim - 1")
        if k == dim - 1 and hilbert_data(gs).deg_h != hilbert_data(g).deg_h:
            rep.failures.append(f"{label}: deg h changed with |S| = dim - 1")
    return rep


def check_union_laws(samples: int = 200, n_max: int = 10, seed: int = 0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("lemma2.3")
    for _ in range(samples):
        n1 = rng.randint(2, n_max - 2)
        n2 = rng.randint(2, n_max - n1)
        g1, g2 = random_connected_graph(rng, n1), random_connected_graph(rng, n2)
        h = disjoint_union(g1, g2)
        rep.cases += 1
        label = f"{g1.to_graph6()} + {g2.to_graph6()}"
        if regularity(h) != regularity(g1) + regularity(g2):
            rep.failures.append(f"{label}: reg is not additive")
        if hilbert_data(h).deg_h != hilbert_data(g1).deg_h + hilbert_data(g2).deg_h:
            rep.failures.append(f"{label}: deg h is not additive")
        if matching_number(h) != matching_number(g1) + matching_number(g2):
            rep.failures.append(f"{label}: matching number is not additive")
        if induced_matching_number(h) != induced_matching_number(g1) + induced_matching_number(g2):
            rep.failures.append(f"{label}: induced matching number is not additive")
    return rep


def check_sandwich(censuses: dict[int, RdCensus]) -> CheckReport:
    rep = CheckReport("thm3.6")
    for n, c in sorted(censuses.items()):
        if n < 3:
            continue
        r = verify_sandwich(c)
        rep.cases += 1
        rep.details[str(n)] = {"band": r.band}
        if r.missing_from_rd:
            rep.failures.append(f"n={n}: A(n) points not realised: {r.missing_from_rd}")
        if r.outside_b:
            rep.failures.append(f"n={n}: realised points outside B(n): {r.outside_b}")
    return rep


def check_cw_closed_forms(samples: int = 500, n_max: int = 10, seed: int = 0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("thm4.3")
    for _ in range(samples):
        spec = random_cw_spec(rng, n_max)
        g = build_cw(spec)
        rep.cases += 1
        label = f"{spec}"
        if not is_cameron_walker(g):
            rep.failures.append(f"{label}: built graph is not Cameron-Walker")
            continue
        want = cw_formula_invariants(spec)
        hd = hilbert_data(g)
        got = (g.n, hd.dim, hd.deg_h, regularity(g, "hochster"))
        if tuple(want) != got:
            rep.failures.append(f"{label}: formula {tuple(want)} != computed {got}")
        dec = decompose_cw(g)
        if cw_formula_invariants(dec) != want:
            rep.failures.append(f"{label}: decomposition changes the closed forms")
        if canonical_form(build_cw(dec.to_spec())) != canonical_form(g):
            rep.failures.append(f"{label}: decomposition does not round-trip")
    return rep


def check_cw_region(censuses: dict[int, RdCensus], witness_n_max: int = 12) -> CheckReport:
    rep = CheckReport("thm5.1")
    for n, c in sorted(censuses.items()):
        if n < 5:
            continue
        r = verify_cw_characterization(c)
        rep.cases += 1
        if r.missing or r.extra:
            rep.failures.append(f"n={n}: census {r.census_points} != region {r.lattice_points}")
        rep.failures += r.witness_failures
    for n in range(5, witness_n_max + 1):
        if n in censuses:
            continue
        rep.cases += len(lattice_CW(n))
        rep.failures += check_cw_witnesses(n)
    return rep


def check_pendant_triangles(n_values: list[int], samples: int = 200, n_max: int = 10,
                seed: int = 0) -> CheckReport:
    rep = CheckReport("thm5.2")
    graphs: list[Graph] = []
    for n in n_values:
        graphs += [g for g in enumerate_connected(n) if g.num_edges and is_cameron_walker(g)]
    rng = random.Random(seed)
    graphs += [build_cw(random_cw_spec(rng, n_max)) for _ in range(samples)]
    for g in graphs:
        rep.cases += 1
        try:
            pendant_triangle_check(g)
        except Exception as exc:  # noqa: BLE001 - every failure is a report line
            rep.failures.append(f"{g.to_graph6()}: {exc}")
    return rep


def check_cw_count(n_lo: int = 5, n_hi: int = 500) -> CheckReport:
    rep = CheckReport("thm5.4")
    for n in range(n_lo, n_hi + 1):
        rep.cases += 1
        c, lat = count_cw(n), len(lattice_CW(n))
        if c != lat:
            rep.failures.append(f"n={n}: closed form {c} != lattice count {lat}")
        if n >= 20 and abs(c / n ** 2 - 1 / 12) > 3 / n:
            rep.failures.append(f"n={n}: |count/n^2 - 1/12| > 3/n")
    if n_hi >= 10:
        rows = asymptotics_probe(n_hi, max(n_lo, 5))
        rep.details["ratio_at_n_max"] = rows[-1]["ratio_n2"]
    return rep


# ids accepted by ``regdeg verify``
SUITES = ("lemma2.1", "lemma2.2", "lemma2.3", "thm3.6", "thm4.3",
          "thm5.1", "thm5.2", "thm5.4")


def run_check(suite: str, n_lo: int, n_hi: int, samples: int | None = None,
              n_max: int | None = None, seed: int = 0, threads: int = 1,
              allow_large: bool = False, directory: Path | None = None,
              progress: Callable[[str], None] | None = None) -> CheckReport:
    """Dispatch a named suite; censuses come from the cache when present."""
    if suite not in SUITES:
        raise KeyError(suite)

    def censuses(lo: int) -> dict[int, RdCensus]:
        out = {}
        for n in range(max(lo, n_lo), n_hi + 1):
            if progress:
                progress(f"census n={n}")
            out[n] = run_census(n, threads=threads, allow_large=allow_large,
                                directory=directory)
        return out

    if suite == "lemma2.1":
        return check_census_bounds(censuses(1))
    if suite == "lemma2.2":
        return check_suspension_laws(samples or 200, n_max or 9, seed)
    if suite == "lemma2.3":
        return check_union_laws(samples or 200, n_max or 10, seed)
    if suite == "thm3.6":
        return check_sandwich(censuses(3))
    if suite == "thm4.3":
        return check_cw_closed_forms(samples or 500, n_max or 10, seed)
    if suite == "thm5.1":
        return check_cw_region(censuses(5), max(12, n_hi))
    if suite == "thm5.2":
        return check_pendant_triangles(list(range(max(5, n_lo), min(n_hi, 8) + 1)),
                           samples or 200, n_max or 10, seed)
    return check_cw_count(max(5, n_lo), n_hi)


def half_regularity_hits(censuses: dict[int, RdCensus]) -> list[str]:
    """Even n = 2r: points of a census with reg = r (expected: none)."""
    bad = []
    for n, c in censuses.items():
        if n % 2 == 0 and n >= 4:
            hits = [pt for pt in c.rd_set() if pt[0] == n // 2]
            if hits:
                bad.append(f"n={n}: reg = n/2 attained at {sorted(hits)}")
    return bad

