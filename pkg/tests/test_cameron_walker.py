import random

import pytest

from regdeg.cameron_walker import (
    CwInvariants,
    cw_formula_invariants,
    decompose_cw,
    is_cameron_walker,
    pendant_triangle_check,
)
from regdeg.constructions import (
    CwSpec,
    build_cw,
    build_Dr,
    build_G_abc,
    build_ribbon,
    build_star,
    build_star_triangle,
)
from regdeg.graph import GraphError, canonical_form, cycle_graph, relabel
from regdeg.invariants import hilbert_data, regularity
from regdeg.verify import random_cw_spec


def test_recognition_examples():
    assert not is_cameron_walker(build_star(4))
    assert not is_cameron_walker(cycle_graph(5))
    assert not is_cameron_walker(build_star_triangle(3))
    assert is_cameron_walker(build_G_abc(2, 3, 2))
    assert not is_cameron_walker(build_G_abc(1, 1, 0))  # the 3-vertex path is a star
    with pytest.raises(GraphError):
        is_cameron_walker(build_Dr(2))


def test_ribbon_is_excluded_as_star_triangle():
    # im = m = 2, but the ribbon is two triangles sharing a vertex
    assert not is_cameron_walker(build_ribbon())


def test_decompose_g232():
    dec = decompose_cw(build_G_abc(2, 3, 2))
    assert (dec.m, dec.p, dec.s) == (2, 3, (1, 1))
    assert sorted(dec.t) == [0, 1, 1]
    assert cw_formula_invariants(dec) == CwInvariants(11, 5, 5, 4)


@pytest.mark.parametrize("spec, expected", [
    (CwSpec(1, 1, ((0, 0),), (2,), (1,)), (6, 3, 3, 2)),
    (CwSpec(1, 1, ((0, 0),), (1,), (1,)), (5, 2, 2, 2)),
])
def test_formula_examples(spec, expected):
    g = build_cw(spec)
    assert cw_formula_invariants(spec) == expected
    hd = hilbert_data(g)
    assert (g.n, hd.dim, hd.deg_h, regularity(g, "hochster")) == expected


def test_round_trip_random_specs():
    rng = random.Random(4)
    for _ in range(120):
        spec = random_cw_spec(rng, 10)
        g = build_cw(spec)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert is_cameron_walker(h)
        dec = decompose_cw(h)
        assert canonical_form(build_cw(dec.to_spec())) == canonical_form(g)
        assert cw_formula_invariants(dec) == cw_formula_invariants(spec)


def test_pendant_triangles():
    assert tuple(pendant_triangle_check(build_G_abc(2, 4, 0))) == (0, 0, 0)
    assert tuple(pendant_triangle_check(build_G_abc(1, 4, 1))) == (1, 1, 1)
    rep = pendant_triangle_check(build_G_abc(1, 1, 1))
    assert rep.e == 1 and build_G_abc(1, 1, 1).n == 5


def test_decomposition_record():
    rec = decompose_cw(build_G_abc(1, 2, 1)).to_record()
    assert set(rec) == {"m", "p", "s", "t", "core_edges"}
