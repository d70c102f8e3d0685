import random

import pytest

from regdeg.atlas import RdCensus, small_census
from regdeg.cameron_walker import is_cameron_walker
from regdeg.constructions import build_cw
from regdeg.graph import is_connected
from regdeg.verify import (
    SUITES,
    check_census_bounds,
    check_suspension_laws,
    check_union_laws,
    check_sandwich,
    check_cw_region,
    random_connected_graph,
    random_cw_spec,
    run_check,
)


def test_random_generators():
    rng = random.Random(0)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(2, 9))
        assert is_connected(g) and all(g.adj)
        spec = random_cw_spec(rng, 10)
        assert spec.n <= 10 and is_cameron_walker(build_cw(spec))


def test_suites_pass_small():
    cs = {n: small_census(n) for n in (3, 4, 5)}
    for rep in (check_census_bounds(cs), check_sandwich(cs), check_cw_region(cs, 7),
                check_suspension_laws(30, 7), check_union_laws(30, 8)):
        assert rep.passed, rep.failures
        assert rep.cases > 0


def test_suite_reports_failures():
    bad = RdCensus(5)
    bad.points[(1, 1)] = None  # only the keys matter to the sandwich check
    rep = check_sandwich({5: bad})
    assert not rep.passed
    assert rep.to_dict()["passed"] is False


def test_run_check_dispatch(tmp_path):
    assert run_check("thm5.4", 5, 40).passed
    assert run_check("lemma2.1", 3, 5, directory=tmp_path).passed
    with pytest.raises(KeyError):
        run_check("thm9.9", 5, 8)
    assert len(SUITES) == 8
