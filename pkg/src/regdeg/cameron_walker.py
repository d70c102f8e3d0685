"""Recognition and structural decomposition of Cameron-Walker graphs.

Recognition is definitional: connected, im(G) = m(G), and neither a star nor
a star triangle.  Decomposition strips pendant triangles and leaves and reads
the bipartite core off what remains.

A core vertex w_j with no triangles and a single core neighbour has degree 1
and is indistinguishable from a leaf of that neighbour; such vertices are
reported as leaves, which leaves every closed-form invariant unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .constructions import CwSpec
from .graph import (
    Graph,
    GraphError,
    bits,
    component_masks,
    induced_matching_number,
    is_connected,
    is_star,
    is_star_triangle,
    matching_number,
)
from .invariants import rd_pair


class DecompositionError(RuntimeError):
    """A graph recognised as Cameron-Walker did not decompose cleanly."""


@dataclass(frozen=True)
class CwDecomposition:
    m: int
    p: int
    s: tuple[int, ...]
    t: tuple[int, ...]
    core_edges: tuple[tuple[int, int], ...]
    v_vertices: tuple[int, ...]
    w_vertices: tuple[int, ...]
    roles: dict[int, str]

    @property
    def n(self) -> int:
        return self.m + self.p + sum(self.s) + 2 * sum(self.t)

    def to_spec(self) -> CwSpec:
        return CwSpec(self.m, self.p, self.core_edges, self.s, self.t)

    def to_record(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "s": list(self.s),
            "t": list(self.t),
            "core_edges": [list(e) for e in self.core_edges],
        }


class CwInvariants(NamedTuple):
    n: int
    dim: int
    deg_h: int
    reg: int


class PendantTriangleReport(NamedTuple):
    e: int
    attached: int
    total: int


def is_cameron_walker(g: Graph) -> bool:
    if not is_connected(g):
        raise GraphError("Cameron-Walker recognition needs a connected graph")
    if g.num_edges == 0:
        return False
    if is_star(g) or is_star_triangle(g):
        return False
    return induced_matching_number(g) == matching_number(g)


def decompose_cw(g: Graph) -> CwDecomposition:
    """Split a Cameron-Walker graph into core, leaves and pendant triangles."""
    adj = g.adj
    deg = g.degrees()
    roles: dict[int, str] = {}
    triangles_at: dict[int, int] = {}
    for y in range(g.n):
        if deg[y] != 2 or y in roles:
            continue
        a, b = bits(adj[y])
        for z, x in ((a, b), (b, a)):
            if deg[z] == 2 and adj[z] == (1 << y) | (1 << x) and deg[x] > 2:
                roles[y] = roles[z] = "triangle"
                triangles_at[x] = triangles_at.get(x, 0) + 1
                break
    leaves_at: dict[int, int] = {}
    for v in range(g.n):
        if deg[v] == 1:
            roles[v] = "leaf"
            (u,) = bits(adj[v])
            leaves_at[u] = leaves_at.get(u, 0) + 1
    core = [v for v in range(g.n) if v not in roles]
    v_side = sorted(leaves_at)
    w_side = [v for v in core if v not in leaves_at]
    if any(v in roles for v in v_side):
        raise DecompositionError("a leaf is attached to a non-core vertex")
    if any(x not in w_side for x in triangles_at):
        raise DecompositionError("pendant triangle attached outside the w-side")
    if not v_side or not w_side:
        raise DecompositionError("core has an empty side")
    core_mask = sum(1 << v for v in core)
    v_mask = sum(1 << v for v in v_side)
    w_mask = core_mask & ~v_mask
    for v in v_side:
        if adj[v] & v_mask:
            raise DecompositionError("core is not bipartite on (leaf carriers, rest)")
    for w in w_side:
        if adj[w] & w_mask:
            raise DecompositionError("core is not bipartite on (leaf carriers, rest)")
    if len(component_masks(g, core_mask)) != 1:
        raise DecompositionError("core is disconnected")
    vi = {v: i for i, v in enumerate(v_side)}
    wi = {w: j for j, w in enumerate(w_side)}
    core_edges = tuple(sorted((vi[v], wi[w]) for v in v_side for w in bits(adj[v] & w_mask)))
    for v in v_side:
        roles[v] = "core-v"
    for w in w_side:
        roles[w] = "core-w"
    return CwDecomposition(
        m=len(v_side),
        p=len(w_side),
        s=tuple(leaves_at[v] for v in v_side),
        t=tuple(triangles_at.get(w, 0) for w in w_side),
        core_edges=core_edges,
        v_vertices=tuple(v_side),
        w_vertices=tuple(w_side),
        roles=dict(sorted(roles.items())),
    )


def cw_formula_invariants(dec: CwDecomposition | CwSpec) -> CwInvariants:
    """(n, dim, deg h, reg) from the closed forms in s_i, t_j, m, p."""
    dim = sum(dec.s) + sum(max(tj, 1) for tj in dec.t)
    reg = dec.m + sum(dec.t)
    n = dec.m + dec.p + sum(dec.s) + 2 * sum(dec.t)
    return CwInvariants(n, dim, dim, reg)


def pendant_triangle_check(g: Graph) -> PendantTriangleReport:
    """e = n - r - d against the w-vertices that carry triangles.

    Raises :class:`DecompositionError` when e differs from the number of
    triangle-carrying w's, or when e = 0 but triangles exist.
    """
    r, d = rd_pair(g)
    e = g.n - r - d
    dec = decompose_cw(g)
    attached = sum(1 for tj in dec.t if tj >= 1)
    total = sum(dec.t)
    if e != attached or attached > total or (e == 0 and total):
        raise DecompositionError(
            f"pendant triangle count mismatch: e={e}, attached={attached}, total={total}")
    return PendantTriangleReport(e, attached, total)
