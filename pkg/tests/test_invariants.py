import itertools
import random
from math import comb

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from regdeg.constructions import build_Dr, build_G_abc, build_ribbon
from regdeg.graph import (
    cycle_graph,
    disjoint_union,
    edgeless,
    from_edge_list,
    induced_matching_number,
    is_independent,
    matching_number,
    path_graph,
    s_suspension,
)
from regdeg.homology import CHECK_PRIME, reduced_homology_dims
from regdeg.invariants import (
    SizeError,
    betti_table,
    hilbert_data,
    independence_f_vector,
    one_minus_t_pow,
    poly_mul,
    rd_pair,
    regularity,
)

from test_graph import graphs


def random_graph(rng, n, p=None):
    h = nx.gnp_random_graph(n, rng.random() if p is None else p, seed=rng.randrange(10**6))
    return from_edge_list(n, h.edges())


# -- f, h and the Hilbert function -----------------------------------------

def test_f_vector_examples():
    assert independence_f_vector(build_Dr(1)) == (1, 2)
    assert independence_f_vector(build_Dr(2)) == (1, 4, 4)
    assert independence_f_vector(build_ribbon()) == (1, 5, 4)


def test_h_examples():
    for r in range(1, 7):
        hd = hilbert_data(build_Dr(r))
        assert hd.h == tuple(comb(r, i) for i in range(r + 1))
        assert hd.deg_h == r and hd.dim == r
    b1 = s_suspension(build_Dr(2), {0, 2})
    assert hilbert_data(b1).h == (1, 2, -1, -1)
    assert hilbert_data(build_ribbon()).deg_h == 1
    assert hilbert_data(edgeless(4)).h == (1,)


def monomial_count(g, degree):
    """Standard monomials of R/I(G): monomials whose support is independent."""
    return sum(1 for combo in itertools.combinations_with_replacement(range(g.n), degree)
               if is_independent(g, set(combo)))


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_hilbert_function_counts_monomials(g):
    hd = hilbert_data(g)
    for i in range(g.n + 4):
        assert hd.hilbert_function(i) == monomial_count(g, i)


# -- homology ----------------------------------------------------------------

def test_homology_examples():
    g = from_edge_list(2, [(0, 1)])
    assert reduced_homology_dims(g, 0b11) == [0, 1]
    c5 = cycle_graph(5)
    assert reduced_homology_dims(c5)[2] == 1 and sum(reduced_homology_dims(c5)) == 1
    assert not any(reduced_homology_dims(edgeless(3)))
    assert reduced_homology_dims(edgeless(3), 0) == [1]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_homology_euler_characteristic(g):
    dims = reduced_homology_dims(g)
    f = independence_f_vector(g)
    # f[i] counts faces of dimension i - 1; dims[k + 1] is H~_k
    chi = sum((-1) ** (i + 1) * fi for i, fi in enumerate(f))
    assert sum((-1) ** (k + 1) * d for k, d in enumerate(dims)) == chi


def test_rational_and_modular_homology_agree():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8))
        for w in range(1 << g.n):
            assert reduced_homology_dims(g, w) == reduced_homology_dims(g, w, CHECK_PRIME)


# -- Betti table and regularity ----------------------------------------------

def test_betti_examples():
    assert betti_table(build_Dr(1)).entries == {(1, 2): 1}
    for r in range(1, 5):
        t = betti_table(build_Dr(r))
        assert t.entries == {(i, 2 * i): comb(r, i) for i in range(1, r + 1)}
        assert t.reg == r
    assert betti_table(build_ribbon()).reg == 2
    assert betti_table(edgeless(3)).reg == 0


def test_regularity_examples():
    assert regularity(cycle_graph(5)) == 2
    assert regularity(build_G_abc(2, 3, 2)) == 4
    assert regularity(build_Dr(3)) == 3
    assert rd_pair(build_ribbon()) == (2, 1)
    assert rd_pair(build_Dr(1)) == (1, 1)
    assert rd_pair(build_G_abc(2, 3, 2)) == (4, 5)


def test_size_limit():
    with pytest.raises(SizeError):
        regularity(edgeless(13))
    with pytest.raises(SizeError):
        betti_table(edgeless(13))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_regularity_methods_agree(g):
    table = betti_table(g)
    assert regularity(g, "auto") == regularity(g, "hochster") == regularity(g, "betti") == table.reg
    assert induced_matching_number(g) <= table.reg <= matching_number(g)


def test_rational_and_modular_betti_agree():
    rng = random.Random(8)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 8))
        assert betti_table(g).entries == betti_table(g, CHECK_PRIME).entries


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_k_polynomial_identity(g):
    # K(t) = h(t) (1 - t)^(n - dim)
    hd = hilbert_data(g)
    expected = poly_mul(list(hd.h), one_minus_t_pow(g.n - hd.dim))
    assert betti_table(g).k_polynomial() == expected


def test_paths_and_cycles_closed_forms():
    # reg(P_n) = floor((n + 1) / 3); reg(C_n) = floor(n/3) + [n = 2 mod 3]
    for n in range(2, 12):
        assert regularity(path_graph(n)) == (n + 1) // 3
    for n in range(3, 12):
        assert regularity(cycle_graph(n)) == n // 3 + (n % 3 == 2)


def test_forests_have_regularity_im():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(2, 11)
        t = nx.random_labeled_tree(n, seed=rng.randrange(10**6)) if hasattr(nx, "random_labeled_tree") \
            else nx.random_tree(n, seed=rng.randrange(10**6))
        g = from_edge_list(n, t.edges())
        assert regularity(g) == induced_matching_number(g)


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_union_laws(g1, g2):
    u = disjoint_union(g1, g2)
    assert regularity(u) == regularity(g1) + regularity(g2)
    assert hilbert_data(u).deg_h == hilbert_data(g1).deg_h + hilbert_data(g2).deg_h


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=7), st.randoms(use_true_random=False))
def test_suspension_keeps_regularity(g, rnd):
    assume(all(g.adj))  # no isolated vertices
    sets = [s for s in range(1 << g.n) if is_independent(g, s)]
    assert regularity(s_suspension(g, rnd.choice(sets))) == regularity(g)
