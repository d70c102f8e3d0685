"""Acceptance criteria, one test per criterion (n = 9 parts are separate).

The n = 9 census takes tens of minutes on one core.  Those tests read
``census_9.json`` from the cache directory (REGDEG_CACHE_DIR) and are
skipped when it is absent, unless REGDEG_ACCEPT_N9=1 asks for the run.
"""

import os
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES
from regdeg.atlas import (
    check_cw_witnesses,
    compute_census,
    connected_graph6,
    lattice_B,
    lattice_CW,
    load_census,
    run_census,
    verify_cw_characterization,
    verify_sandwich,
)
from regdeg.constructions import build_Dr, build_G_abc, build_ribbon
from regdeg.graph import Graph, cycle_graph, induced_matching_number
from regdeg.homology import CHECK_PRIME
from regdeg.invariants import (
    betti_table,
    hilbert_data,
    one_minus_t_pow,
    poly_mul,
    rd_pair,
    regularity,
)
from regdeg.verify import check_suspension_laws, check_cw_closed_forms, check_cw_count, half_regularity_hits

from test_invariants import monomial_count

EXPECTED_RD_8 = {(1, d) for d in range(1, 8)} | {(2, d) for d in range(1, 7)} | {(3, d) for d in range(2, 6)}
EXPECTED_RD_9 = ({(1, d) for d in range(1, 9)} | {(2, d) for d in range(1, 8)}
         | {(3, d) for d in range(2, 7)} | {(4, d) for d in range(3, 6)})

_censuses: dict = {}


def census(n, cid=None):
    if n not in _censuses:
        cached = load_census(n)
        if cached is not None:
            _censuses[n] = cached
        elif n <= 8:
            _censuses[n] = compute_census(n, connected_graph6(n))
        elif os.environ.get("REGDEG_ACCEPT_N9") == "1":
            _censuses[n] = run_census(n, threads=os.cpu_count() or 1, allow_large=True)
        else:
            ACCEPTANCE_LINES.append(f"SKIP  {cid}: no cached census for n={n} "
                                    f"(set REGDEG_ACCEPT_N9=1 to compute)")
            pytest.skip(f"census for n={n} not cached")
    return _censuses[n]


def record(cid, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {cid}: {detail}")
    assert ok, detail


def test_c01_census_point_sets_n8():
    got = census(8).rd_set()
    record("1 (n=8)", got == EXPECTED_RD_8, f"{len(got)} points, expected 17")


def test_c01_census_point_sets_n9():
    got = census(9, "1 (n=9)").rd_set()
    record("1 (n=9)", got == EXPECTED_RD_9, f"{len(got)} points, expected 23")


def test_c02_sandwich():
    bad = {n: verify_sandwich(census(n)) for n in range(3, 9)}
    bad = {n: r for n, r in bad.items() if not r.ok}
    record("2 (n=3..8)", not bad, f"failures at n={sorted(bad)}" if bad else "A(n) <= RD(n) <= B(n)")


def test_c02_sandwich_n9():
    rep = verify_sandwich(census(9, "2 (n=9)"))
    record("2 (n=9)", rep.ok, f"missing={rep.missing_from_rd} outside={rep.outside_b}")


def test_c03_cw_region():
    mism = {n: verify_cw_characterization(census(n), check_witnesses=False)
            for n in range(5, 9)}
    mism = {n: (r.missing, r.extra) for n, r in mism.items() if not r.ok}
    failures = [f for n in range(5, 13) for f in check_cw_witnesses(n, "hochster")]
    witnesses = sum(len(lattice_CW(n)) for n in range(5, 13))
    record("3 (n=5..8, witnesses n<=12)", not mism and not failures,
           f"region mismatches {mism}, {len(failures)}/{witnesses} witness failures")


def test_c03_cw_region_n9():
    rep = verify_cw_characterization(census(9, "3 (n=9)"), check_witnesses=False)
    record("3 (n=9)", rep.ok, f"census {rep.census_points} vs region {rep.lattice_points}")


def test_c04_cw_closed_forms():
    rep = check_cw_closed_forms(samples=500, n_max=10, seed=0)
    record("4", rep.passed and rep.cases >= 500, f"{rep.cases} specs, {len(rep.failures)} failures")


def test_c05_g_abc():
    bad, cases = [], 0
    for a in range(1, 6):
        for b in range(1, 11):
            for c in range(0, b + 1):
                if 2 * a + b + 2 * c > 12:
                    continue
                cases += 1
                got = rd_pair(build_G_abc(a, b, c), "hochster")
                if got != (a + c, a + b):
                    bad.append(((a, b, c), got))
    record("5", not bad, f"{cases} triples, failures {bad}")


def test_c06_count_formula():
    rep = check_cw_count(5, 500)
    record("6", rep.passed, f"{rep.cases} values of n, {len(rep.failures)} failures")


def test_c07_suspension_laws():
    rep = check_suspension_laws(samples=200, n_max=9, seed=0)
    record("7", rep.passed and rep.cases == 200, f"{rep.cases} samples, {len(rep.failures)} failures")


def test_c08_census_bounds():
    bad = [v for n in range(3, 9) for v in census(n).violations]
    total = sum(census(n).total_graphs for n in range(3, 9))
    record("8 (n=3..8)", not bad, f"{total} graphs, {len(bad)} violations")


def test_c08_census_bounds_n9():
    c = census(9, "8 (n=9)")
    record("8 (n=9)", not c.violations, f"{c.total_graphs} graphs, {len(c.violations)} violations")


def test_c09_no_half_regularity():
    bad = half_regularity_hits({n: census(n) for n in (4, 6, 8)})
    record("9", not bad, "; ".join(bad) or "reg = n/2 absent for n = 4, 6, 8")


def test_c10_spot_values():
    checks = [rd_pair(build_ribbon()) == (2, 1),
              induced_matching_number(cycle_graph(5)) == 1]
    for r in range(1, 7):
        g = build_Dr(r)
        checks.append(regularity(g) == r)
        checks.append(hilbert_data(g).h == tuple(comb(r, i) for i in range(r + 1)))
    record("10", all(checks), f"{sum(checks)}/{len(checks)} values")


def test_c11_internal_consistency():
    graphs = [g for n in range(1, 7) for g in map(Graph.from_graph6, connected_graph6(n))]
    graphs += [build_ribbon(), build_Dr(3), cycle_graph(7)]
    bad = []
    for g in graphs:
        hd = hilbert_data(g)
        table = betti_table(g)
        if table.k_polynomial() != poly_mul(list(hd.h), one_minus_t_pow(g.n - hd.dim)):
            bad.append(f"{g.to_graph6()}: K-polynomial")
        if any(hd.hilbert_function(i) != monomial_count(g, i) for i in range(g.n + 4)):
            bad.append(f"{g.to_graph6()}: Hilbert function")
        if betti_table(g, CHECK_PRIME).entries != table.entries:
            bad.append(f"{g.to_graph6()}: Q vs GF(p)")
    record("11", not bad, f"{len(graphs)} graphs, failures {bad[:5]}")


def test_b_region_sanity():
    # not a criterion: guards the expected sets above against typos
    assert EXPECTED_RD_8 <= lattice_B(8) and EXPECTED_RD_9 <= lattice_B(9)
    assert len(EXPECTED_RD_8) == 17 and len(EXPECTED_RD_9) == 23
