"""Explicit graph families and witnesses for prescribed (reg, deg h) pairs.

Vertex orderings are fixed so graph6 output is stable:

* ``build_Dr(r)``: edges {2k, 2k+1}.
* ``build_ribbon()``: outer vertices 0..3 with edges 01, 23; hub 4.
* ``build_cw(spec)``: core v's, then core w's, then the leaves of v_1, v_2,
  ..., then the pendant-triangle pairs of w_1, w_2, ...
* suspensions append the new vertex at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    component_masks,
    disjoint_union,
    from_edge_list,
    independence_number,
    max_independent_set_below,
    s_suspension,
)


class ConstructionError(ValueError):
    """Parameters outside the range a construction supports."""


def build_Dr(r: int) -> Graph:
    """r disjoint edges."""
    if r < 1:
        raise ConstructionError("D_r needs r >= 1")
    return from_edge_list(2 * r, [(2 * k, 2 * k + 1) for k in range(r)])


def build_ribbon() -> Graph:
    return from_edge_list(5, [(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (2, 3)])


def build_star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise ConstructionError("a star needs k >= 1 leaves")
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def build_star_triangle(k: int) -> Graph:
    """k triangles sharing the centre 0; triangle i uses 2i+1, 2i+2."""
    if k < 1:
        raise ConstructionError("a star triangle needs k >= 1 triangles")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return from_edge_list(2 * k + 1, edges)


def build_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ConstructionError("K_{a,b} needs a, b >= 1")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# --------------------------------------------------------------------------
# Cameron-Walker graphs
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CwSpec:
    """Bipartite core on v_0..v_{m-1} | w_0..w_{p-1} with s_i leaves at v_i and
    t_j pendant triangles at w_j.  ``core_edges`` holds (i, j) index pairs."""

    m: int
    p: int
    core_edges: tuple[tuple[int, int], ...]
    s: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.m + self.p + sum(self.s) + 2 * sum(self.t)

    def validate(self) -> None:
        if self.m < 1 or self.p < 1:
            raise ConstructionError("core parts must be non-empty")
        if len(self.s) != self.m or len(self.t) != self.p:
            raise ConstructionError("need one s_i per v and one t_j per w")
        if any(x < 1 for x in self.s):
            raise ConstructionError("every v_i needs at least one leaf (s_i >= 1)")
        if any(x < 0 for x in self.t):
            raise ConstructionError("t_j must be non-negative")
        for i, j in self.core_edges:
            if not (0 <= i < self.m and 0 <= j < self.p):
                raise ConstructionError(f"core edge {(i, j)} out of range")
        core = from_edge_list(self.m + self.p,
                              [(i, self.m + j) for i, j in self.core_edges])
        if len(component_masks(core)) != 1:
            raise ConstructionError("bipartite core must be connected")


@dataclass(frozen=True)
class CwParams:
    """Parameters of G_{a,b,c}: K_{a,b} core, one leaf per v, c triangles."""

    a: int
    b: int
    c: int

    def validate(self) -> None:
        if self.a < 1 or self.b < 1 or not 0 <= self.c <= self.b:
            raise ConstructionError(
                f"G_{{a,b,c}} needs a, b >= 1 and 0 <= c <= b, got {self}")

    @property
    def n(self) -> int:
        return 2 * self.a + self.b + 2 * self.c

    def to_spec(self) -> CwSpec:
        return CwSpec(
            m=self.a, p=self.b,
            core_edges=tuple((i, j) for i in range(self.a) for j in range(self.b)),
            s=(1,) * self.a,
            t=(1,) * self.c + (0,) * (self.b - self.c),
        )


def build_cw(spec: CwSpec) -> Graph:
    spec.validate()
    m, p = spec.m, spec.p
    edges = [(i, m + j) for i, j in spec.core_edges]
    nxt = m + p
    for i, si in enumerate(spec.s):
        for _ in range(si):
            edges.append((i, nxt))
            nxt += 1
    for j, tj in enumerate(spec.t):
        for _ in range(tj):
            edges += [(m + j, nxt), (m + j, nxt + 1), (nxt, nxt + 1)]
            nxt += 2
    return from_edge_list(nxt, edges)


def build_G_abc(a: int, b: int, c: int) -> Graph:
    params = CwParams(a, b, c)
    params.validate()
    return build_cw(params.to_spec())


# --------------------------------------------------------------------------
# witnesses for (r, d)
# --------------------------------------------------------------------------

def _suspend_below_dim(g: Graph) -> Graph:
    s = max_independent_set_below(g, independence_number(g) - 1)
    return s_suspension(g, s)


def iterated_suspensions(r: int, i: int) -> Graph:
    """B_i: D_r suspended i times, each time over S_1 plus all earlier apexes."""
    g = build_Dr(r)
    s = {2 * k for k in range(r)}
    for _ in range(i):
        apex = g.n
        g = s_suspension(g, s)
        s.add(apex)
    return g


def realize_rd(r: int, d: int) -> Graph:
    """A connected graph with reg = r and deg h = d.

    Supported: d > r on r + d vertices; d = r >= 2 on 2r + 1; d = r - 1 >= 1
    on 2r + 1 (r even) or 2r + 2 (r odd); plus D_1 for (1, 1).  Pairs with
    d <= r - 2 need a building block this package does not construct.
    """
    if r < 1 or d < 0:
        raise ConstructionError("need r >= 1 and d >= 0")
    if d <= r - 2:
        raise ConstructionError(
            f"(r, d) = ({r}, {d}) with d <= r - 2 is not supported")
    if (r, d) == (1, 0):
        raise ConstructionError("(1, 0) is not realised by any graph")
    if r < d:
        return iterated_suspensions(r, d - r)
    if r == d:
        if r == 1:
            return build_Dr(1)
        dr = build_Dr(r)
        return s_suspension(dr, {2 * k for k in range(r - 1)})
    # d == r - 1, r >= 2
    if r % 2 == 0:
        return s_suspension(build_Dr(r), set())
    base = disjoint_union(s_suspension(build_Dr(r - 1), set()), build_Dr(1))
    return s_suspension(base, max_independent_set_below(base, r - 1))


def pad_to_n(g: Graph, n_target: int) -> Graph:
    """Suspend over (dim - 1)-sets until ``n_target`` vertices; keeps (r, d)."""
    if n_target < g.n:
        raise ConstructionError("cannot pad to fewer vertices")
    if any(row == 0 for row in g.adj):
        raise ConstructionError("padding requires a graph without isolated vertices")
    if len(component_masks(g)) != 1:
        raise ConstructionError("padding requires a connected graph")
    while g.n < n_target:
        g = _suspend_below_dim(g)
    return g


def cw_region_violations(r: int, d: int, n: int) -> list[str]:
    """Which of the Cameron-Walker region inequalities (r, d, n) breaks."""
    out = []
    if not 2 <= r <= (n - 1) // 2:
        out.append(f"2 <= r <= floor((n-1)/2) fails: r={r}, bound={(n - 1) // 2}")
    if not r <= d <= n - r:
        out.append(f"r <= d <= n-r fails: r={r}, d={d}, n-r={n - r}")
    if not d >= n - 2 * r + 1:
        out.append(f"d >= -2r+n+1 fails: {d} < {n - 2 * r + 1}")
    return out


def cw_abc_for(r: int, d: int, n: int) -> CwParams:
    bad = cw_region_violations(r, d, n)
    if bad:
        raise ConstructionError("; ".join(bad))
    return CwParams(d + 2 * r - n, n - 2 * r, n - r - d)


def realize_cw(r: int, d: int, n: int) -> Graph:
    """G_{d+2r-n, n-2r, n-r-d}: a Cameron-Walker graph on n vertices with (r, d)."""
    p = cw_abc_for(r, d, n)
    return build_G_abc(p.a, p.b, p.c)


def suspension_of_union(graphs: list[Graph]) -> Graph:
    """Disjoint union suspended over a (dim - 1)-set; realises summed pairs."""
    if not graphs:
        raise ConstructionError("need at least one graph")
    g = graphs[0]
    for h in graphs[1:]:
        g = disjoint_union(g, h)
    if g.n == 0:
        raise GraphError("empty union")
    return _suspend_below_dim(g)


# keep the builder names the CLI exposes in one place
FAMILIES = ("dr", "ribbon", "star", "startriangle", "kab", "cw", "gabc",
            "realize", "realize-cw", "pad")

