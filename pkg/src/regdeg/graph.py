"""Finite simple graphs stored as per-vertex adjacency bitmasks.

Vertices are the integers ``0..n-1``; a vertex set is an ``int`` whose bit
``v`` is set when ``v`` belongs to the set.  Public helpers also accept any
iterable of vertices wherever a vertex set is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import graph6

CANONICAL_MAX_N = 10


class GraphError(ValueError):
    """Invalid graph data or a violated precondition on a graph."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbourhood bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency list length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def to_graph6(self) -> str:
        return graph6.encode(self.n, self.adj).decode("ascii")

    @classmethod
    def from_graph6(cls, data: bytes | str) -> "Graph":
        n, adj = graph6.decode(data)
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated edges are collapsed."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e!r} has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


# --------------------------------------------------------------------------
# matchings
# --------------------------------------------------------------------------

def _matching(adj: tuple[int, ...], avail: int, memo: dict[int, int]) -> int:
    if avail in memo:
        return memo[avail]
    v = -1
    for u in bits(avail):
        if adj[u] & avail:
            v = u
            break
    if v < 0:
        memo[avail] = 0
        return 0
    rest = avail & ~(1 << v)
    best = _matching(adj, rest, memo)
    cap = rest.bit_count() // 2 + 1
    if best < cap:
        for u in bits(adj[v] & rest):
            cand = 1 + _matching(adj, rest & ~(1 << u), memo)
            if cand > best:
                best = cand
                if best == cap:
                    break
    memo[avail] = best
    return best


def _induced_matching(adj: tuple[int, ...], avail: int, memo: dict[int, int]) -> int:
    if avail in memo:
        return memo[avail]
    v = -1
    for u in bits(avail):
        if adj[u] & avail:
            v = u
            break
    if v < 0:
        memo[avail] = 0
        return 0
    best = _induced_matching(adj, avail & ~(1 << v), memo)
    closed_v = adj[v] | (1 << v)
    for u in bits(adj[v] & avail):
        cand = 1 + _induced_matching(adj, avail & ~(closed_v | adj[u]), memo)
        if cand > best:
            best = cand
    memo[avail] = best
    return best


def matching_number(g: Graph) -> int:
    """Size of a maximum matching."""
    return _matching(g.adj, g.vertex_mask, {})


def induced_matching_number(g: Graph) -> int:
    """Size of a maximum induced matching."""
    return _induced_matching(g.adj, g.vertex_mask, {})


# --------------------------------------------------------------------------
# independent sets
# --------------------------------------------------------------------------

def independent_sets(g: Graph, within: int | None = None) -> list[int]:
    """All independent sets (as bitmasks) of ``g`` inside ``within``.

    The empty set is always first.
    """
    sets = [0]
    adj = g.adj
    for v in bits(g.vertex_mask if within is None else within):
        nv = adj[v]
        sets.extend([s | (1 << v) for s in sets if not s & nv])
    return sets


def is_independent(g: Graph, vertices: int | Iterable[int]) -> bool:
    mask = as_mask(vertices)
    return all(not (g.adj[v] & mask) for v in bits(mask))


def independence_number(g: Graph) -> int:
    return max(s.bit_count() for s in independent_sets(g))


def max_independent_set_below(g: Graph, k: int) -> frozenset[int]:
    """The lexicographically first independent set with exactly ``k`` vertices.

    Search is include-first over vertices in increasing order, so the result
    is the smallest such set when compared as sorted vertex tuples.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    adj = g.adj
    n = g.n

    def search(v: int, chosen: int, blocked: int, need: int) -> int | None:
        if need == 0:
            return chosen
        for u in range(v, n):
            if (blocked >> u) & 1:
                continue
            free_after = n - u - (blocked >> u).bit_count()
            if free_after < need:
                return None
            found = search(u + 1, chosen | (1 << u), blocked | adj[u], need - 1)
            if found is not None:
                return found
        return None

    found = search(0, 0, 0, k)
    if found is None:
        raise GraphError(f"no independent set of size {k}")
    return mask_to_set(found)


# --------------------------------------------------------------------------
# structure
# --------------------------------------------------------------------------

def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Vertex masks of the connected components of the induced subgraph."""
    todo = g.vertex_mask if within is None else within
    adj = g.adj
    comps = []
    while todo:
        frontier = todo & -todo
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & todo & ~comp
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    """True for a single component; the one-vertex graph counts, n = 0 does not."""
    return g.n > 0 and len(component_masks(g)) == 1


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Induced subgraph, relabelled to 0..k-1 preserving vertex order."""
    keep = list(bits(as_mask(vertices)))
    pos = {v: i for i, v in enumerate(keep)}
    mask = as_mask(vertices)
    return Graph(len(keep), tuple(
        sum(1 << pos[u] for u in bits(g.adj[v] & mask)) for v in keep))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


def s_suspension(g: Graph, s: int | Iterable[int]) -> Graph:
    """Add vertex ``n`` joined to every vertex outside the independent set ``s``."""
    smask = as_mask(s)
    if smask & ~g.vertex_mask:
        raise GraphError("suspension set is not a subset of the vertices")
    if not is_independent(g, smask):
        raise GraphError("suspension set must be independent")
    apex = g.n
    joined = g.vertex_mask & ~smask
    adj = [row | ((1 << apex) if (joined >> v) & 1 else 0) for v, row in enumerate(g.adj)]
    adj.append(joined)
    return Graph(g.n + 1, tuple(adj))


def _center_candidates(g: Graph) -> list[int]:
    full = g.vertex_mask
    return [v for v in range(g.n) if g.adj[v] == full & ~(1 << v)]


def is_star(g: Graph) -> bool:
    """K_{1,k} with k >= 1 (a single edge counts)."""
    if g.n < 2 or g.num_edges != g.n - 1:
        return False
    return bool(_center_candidates(g))


def is_star_triangle(g: Graph) -> bool:
    """k >= 1 triangles glued at one common vertex."""
    if g.n < 3 or g.n % 2 == 0 or g.num_edges != 3 * (g.n - 1) // 2:
        return False
    for c in _center_candidates(g):
        if all(g.degree(v) == 2 for v in range(g.n) if v != c):
            return True
    return False


# --------------------------------------------------------------------------
# canonical labelling
# --------------------------------------------------------------------------

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (list of cell masks)."""
    while True:
        new: list[int] = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                new.append(cell)
            else:
                changed = True
                new.extend(groups[sig] for sig in sorted(groups))
        cells = new
        if not changed:
            return cells


def _twin_classes(n: int, adj: tuple[int, ...]) -> list[int]:
    rep = list(range(n))
    for v in range(n):
        for u in range(v):
            if rep[u] == u and adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                rep[v] = u
                break
    return rep


def canonical_order(n: int, adj: tuple[int, ...]) -> list[int]:
    """Vertices listed in a canonical order (position i = new label i).

    Individualisation-refinement with branching restricted to one vertex per
    twin class inside the target cell; twins are swapped by an automorphism
    that fixes everything individualised so far, so the skipped subtrees
    produce the same certificates.
    """
    if n == 0:
        return []
    degree_groups: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        degree_groups[d] = degree_groups.get(d, 0) | (1 << v)
    cells = _refine(adj, [degree_groups[d] for d in sorted(degree_groups)])
    twin = _twin_classes(n, adj)
    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []

    def leaf(cells: list[int]) -> None:
        nonlocal best_cert, best_order
        order = [c.bit_length() - 1 for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            row = 0
            for u in bits(adj[v]):
                row |= 1 << pos[u]
            cert.append(row)
        cert_t = tuple(cert)
        if best_cert is None or cert_t < best_cert:
            best_cert = cert_t
            best_order = order

    def search(cells: list[int]) -> None:
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                target = i
                break
        if target < 0:
            leaf(cells)
            return
        cell = cells[target]
        seen_twins = set()
        for v in bits(cell):
            t = twin[v]
            if t in seen_twins:
                continue
            seen_twins.add(t)
            single = 1 << v
            child = cells[:target] + [single, cell & ~single] + cells[target + 1:]
            search(_refine(adj, child))

    search(cells)
    return best_order


def canonical_adj(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    order = canonical_order(n, adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        out[pos[v]] = row
    return tuple(out)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 of the canonically relabelled graph."""
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form supports n <= {CANONICAL_MAX_N}")
    return graph6.encode(g.n, canonical_adj(g.n, g.adj))


def canonical_graph(g: Graph) -> Graph:
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_graph supports n <= {CANONICAL_MAX_N}")
    return Graph(g.n, canonical_adj(g.n, g.adj))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.num_edges == g2.num_edges and \
        canonical_form(g1) == canonical_form(g2)
