import json

import networkx as nx
import pytest

from regdeg import atlas
from regdeg.atlas import (
    CensusError,
    RdCensus,
    asymptotics_probe,
    compute_census,
    connected_graph6,
    convexity_probe,
    count_cw,
    enumerate_connected,
    lattice_A,
    lattice_B,
    lattice_CW,
    load_census,
    profile,
    run_census,
    small_census,
    verify_cw_characterization,
    verify_sandwich,
)
from regdeg.constructions import build_ribbon
from regdeg.graph import Graph, canonical_form, from_edge_list


@pytest.fixture(scope="module")
def census5():
    return small_census(5)


# -- enumeration -------------------------------------------------------------

def test_connected_counts():
    assert [len(connected_graph6(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_enumeration_matches_networkx_atlas():
    # graph_atlas_g lists every graph on up to 7 vertices
    for n in range(1, 8):
        expected = {canonical_form(from_edge_list(n, h.edges()))
                    for h in nx.graph_atlas_g()
                    if h.number_of_nodes() == n and nx.is_connected(h)}
        got = {canonical_form(g) for g in enumerate_connected(n)}
        assert got == expected


def test_enumeration_is_sorted_and_canonical():
    out = connected_graph6(6)
    assert out == sorted(out)
    assert all(canonical_form(Graph.from_graph6(s)) == s for s in out)


def test_enumeration_limits():
    with pytest.raises(CensusError):
        connected_graph6(9)
    with pytest.raises(CensusError):
        connected_graph6(10, allow_large=True)


def test_enumeration_checkpoint_resume(tmp_path, monkeypatch):
    parents = [Graph.from_graph6(s).adj for s in connected_graph6(5)]
    ckpt = tmp_path / "ext.ckpt.json"
    monkeypatch.setattr(atlas, "ENUM_CHUNK", 5)
    calls = {"n": 0}
    real_write = atlas._atomic_write

    def flaky_write(path, text):
        real_write(path, text)
        calls["n"] += 1
        if calls["n"] == 2:
            raise KeyboardInterrupt

    monkeypatch.setattr(atlas, "_atomic_write", flaky_write)
    with pytest.raises(KeyboardInterrupt):
        atlas._extend(parents, 5, ckpt)
    assert json.loads(ckpt.read_text())["done"] == 10
    monkeypatch.setattr(atlas, "_atomic_write", real_write)
    resumed = atlas._extend(parents, 5, ckpt)
    assert resumed == atlas._extend(parents, 5)
    assert len(resumed) == 112


# -- census ------------------------------------------------------------------

def test_census_small_values(census5):
    assert small_census(3).rd_set() == {(1, 1), (1, 2)}
    assert (2, 1) in census5.rd_set()
    assert census5.total_graphs == 21
    assert census5.cw_set() == {(2, 2), (2, 3)}
    assert not census5.violations


def test_ribbon_profile():
    prof = profile(build_ribbon().to_graph6())
    assert (prof.r, prof.d, prof.im, prof.m, prof.cw) == (2, 1, 2, 2, False)


def test_census_deterministic_and_parallel():
    graphs = connected_graph6(6)
    serial = compute_census(6, graphs)
    parallel = compute_census(6, graphs, threads=2)
    assert serial.to_json() == parallel.to_json()
    assert serial.to_json() == compute_census(6, graphs).to_json()


def test_census_rejects_wrong_n():
    with pytest.raises(CensusError):
        compute_census(5, connected_graph6(4))


def test_census_round_trip_and_csv(census5):
    again = RdCensus.from_dict(json.loads(census5.to_json()))
    assert again.to_json() == census5.to_json()
    rows = census5.to_csv().splitlines()
    assert rows[0] == "n,r,d,multiplicity,witness_graph6"
    assert len(rows) == 1 + len(census5.points)
    assert sum(int(r.split(",")[3]) for r in rows[1:]) == 21
    plot = census5.plot_csv().splitlines()
    assert plot[0] == "r,d,cw" and "2,2,1" in plot and "2,1,0" in plot


def test_census_checkpoint_resume(tmp_path, monkeypatch):
    graphs = connected_graph6(6)
    ckpt = tmp_path / "c.ckpt.json"
    monkeypatch.setattr(atlas, "CHUNK", 30)

    def stop(done):
        if done == 60:
            raise KeyboardInterrupt

    with pytest.raises(KeyboardInterrupt):
        compute_census(6, graphs, checkpoint=ckpt, progress=stop)
    assert json.loads(ckpt.read_text())["done"] == 60
    resumed = compute_census(6, graphs, checkpoint=ckpt)
    assert resumed.to_json() == compute_census(6, graphs).to_json()


def test_run_census_caches(tmp_path):
    c = run_census(5, directory=tmp_path)
    assert (tmp_path / "census_5.json").exists()
    assert (tmp_path / "census_5_cw.csv").exists()
    assert not (tmp_path / "census_5.ckpt.json").exists()
    assert load_census(5, tmp_path).to_json() == c.to_json()
    assert load_census(6, tmp_path) is None


def test_run_census_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("REGDEG_CACHE_DIR", str(tmp_path))
    run_census(4)
    assert (tmp_path / "census_4.json").exists()


# -- lattices and counting ---------------------------------------------------

def test_lattice_examples():
    assert lattice_CW(8) == {(2, 5), (2, 6), (3, 3), (3, 4), (3, 5)}
    assert len(lattice_CW(9)) == 7
    assert lattice_B(8) == {(r, d) for r in range(1, 4) for d in range(1, 9 - r)}
    assert len(lattice_B(8)) == 18
    assert lattice_A(8) <= lattice_B(8)


def test_count_cw_examples():
    assert count_cw(11) == 11
    assert count_cw(8) == 5
    assert count_cw(9) == 7
    with pytest.raises(ValueError):
        count_cw(4)


def test_count_cw_matches_lattice():
    for n in range(5, 501):
        assert count_cw(n) == len(lattice_CW(n))


def test_reports(census5):
    assert verify_sandwich(census5).ok
    rep = verify_cw_characterization(census5)
    assert rep.ok and rep.lattice_points == [(2, 2), (2, 3)]
    assert convexity_probe(census5).convex


def test_asymptotics_probe():
    rows = asymptotics_probe(60)
    assert rows[0]["n"] == 5 and rows[-1]["n"] == 60
    assert all(r["within_3_over_n"] for r in rows if r["n"] >= 20)
    assert all(r["within_3_over_n"] is None for r in rows if r["n"] < 20)
    with pytest.raises(ValueError):
        asymptotics_probe(9)
