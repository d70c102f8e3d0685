"""Hilbert series, Betti numbers and regularity of edge ideals.

Everything is read off the independence complex Ind(G), whose Stanley-Reisner
ideal is the edge ideal I(G).  Betti numbers come from Hochster's formula

    beta_{i,j}(R/I(G)) = sum_{|W| = j} dim H~_{j-i-1}(Ind(G[W]); K),

with K = Q unless a prime modulus is requested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Literal

from .graph import (
    Graph,
    _induced_matching,
    _matching,
    bits,
    component_masks,
    independent_sets,
)
from .homology import RATIONAL, reduced_homology_of_faces

MAX_N = 12

Method = Literal["auto", "hochster", "betti"]


class SizeError(ValueError):
    """Input graph is larger than the exhaustive algorithms allow."""


def _check_size(g: Graph) -> None:
    if g.n > MAX_N:
        raise SizeError(f"n={g.n} exceeds the limit of {MAX_N} vertices")


# --------------------------------------------------------------------------
# integer polynomials as coefficient lists (index = degree)
# --------------------------------------------------------------------------

def poly_trim(p: list[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def one_minus_t_pow(k: int) -> list[int]:
    """Coefficients of (1 - t)^k."""
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


# --------------------------------------------------------------------------
# Hilbert series
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    """H_{R/I}(t) = h(t) / (1 - t)^dim with h(1) != 0.

    ``f[i]`` counts independent sets of size i (so ``f[0] = 1`` is the empty
    face); ``h`` holds h_0..h_s with h_s != 0.
    """

    dim: int
    f: tuple[int, ...]
    h: tuple[int, ...]

    @property
    def deg_h(self) -> int:
        return len(self.h) - 1

    def hilbert_function(self, i: int) -> int:
        """dim_K [R/I]_i, from the series expansion of h(t) / (1-t)^dim."""
        if i < 0:
            return 0
        if self.dim == 0:
            return self.h[i] if i < len(self.h) else 0
        return sum(hk * comb(i - k + self.dim - 1, self.dim - 1)
                   for k, hk in enumerate(self.h) if k <= i)


def independence_f_vector(g: Graph) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{dim-1}) of Ind(G)."""
    counts: dict[int, int] = {}
    for s in independent_sets(g):
        k = s.bit_count()
        counts[k] = counts.get(k, 0) + 1
    return tuple(counts[k] for k in range(max(counts) + 1))


def h_from_f(f: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    dim = len(f) - 1
    h = [sum((-1) ** (k - i) * comb(dim - i, k - i) * f[i] for i in range(k + 1))
         for k in range(dim + 1)]
    return tuple(poly_trim(h))


def hilbert_data(g: Graph) -> HilbertData:
    f = independence_f_vector(g)
    return HilbertData(dim=len(f) - 1, f=f, h=h_from_f(f))


# --------------------------------------------------------------------------
# Betti numbers and regularity
# --------------------------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j}(R/I), without the beta_{0,0} = 1 unit."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def reg(self) -> int:
        return max((j - i for (i, j) in self.entries), default=0)

    def as_list(self) -> list[list[int]]:
        return [[i, j, b] for (i, j), b in sorted(self.entries.items())]

    def k_polynomial(self) -> list[int]:
        """sum (-1)^i beta_{i,j} t^j, including the (0,0) unit."""
        top = max((j for (_, j) in self.entries), default=0)
        out = [0] * (top + 1)
        out[0] = 1
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        return poly_trim(out)


def _is_cone(adj: tuple[int, ...], w: int) -> bool:
    return any(not adj[v] & w for v in bits(w))


def betti_table(g: Graph, modulus: int | None = RATIONAL) -> BettiTable:
    """Full Betti table by Hochster's formula over every vertex subset."""
    _check_size(g)
    adj = g.adj
    table = BettiTable()
    for w in range(1, 1 << g.n):
        if _is_cone(adj, w):
            continue
        size = w.bit_count()
        hom = reduced_homology_of_faces(independent_sets(g, w), modulus)
        for idx, b in enumerate(hom):
            if b:
                i = size - idx
                table.entries[(i, size)] = table.entries.get((i, size), 0) + b
    return table


def _fold_free(adj: tuple[int, ...], w: int) -> bool:
    # N(u) <= N(v) inside G[W] lets v be deleted without changing the
    # homotopy type of Ind(G[W])
    nbhds = [adj[v] & w for v in bits(w)]
    for i, a in enumerate(nbhds):
        for j, b in enumerate(nbhds):
            if i != j and not a & ~b:
                return False
    return True


class _TopDegree:
    """Memoised top homology degree (+1) of Ind(G[W]) for fold-free W."""

    def __init__(self, g: Graph, modulus: int | None):
        self.g = g
        self.modulus = modulus
        self.memo: dict[int, int | None] = {}

    def __call__(self, w: int) -> int | None:
        if w in self.memo:
            return self.memo[w]
        comps = component_masks(self.g, w)
        if len(comps) == 1:
            hom = reduced_homology_of_faces(independent_sets(self.g, w), self.modulus)
            val = max((k for k, b in enumerate(hom) if b), default=None)
        else:
            # Ind of a disjoint union is a join; top degrees add (Kunneth)
            val = 0
            for c in comps:
                part = self(c)
                if part is None:
                    val = None
                    break
                val += part
        self.memo[w] = val
        return val


def regularity(g: Graph, method: Method = "auto", modulus: int | None = RATIONAL) -> int:
    """reg(R/I(G)) = max{k + 1 : H~_k(Ind(G[W])) != 0 for some W}.

    ``"hochster"`` sweeps every fold-free vertex subset; ``"auto"`` first
    brackets the answer between the induced matching number and the matching
    number and only searches above the lower bracket; ``"betti"`` builds the
    complete Betti table.
    """
    _check_size(g)
    if method == "betti":
        return betti_table(g, modulus).reg
    if method == "hochster":
        return _search_regularity(g, 0, None, modulus)
    if method == "auto":
        mmemo: dict[int, int] = {}
        lo = _induced_matching(g.adj, g.vertex_mask, {})
        hi = _matching(g.adj, g.vertex_mask, mmemo)
        return _search_regularity(g, lo, hi, modulus, mmemo)
    raise ValueError(f"unknown regularity method {method!r}")


def _search_regularity(g: Graph, lo: int, hi: int | None, modulus: int | None,
                       mmemo: dict[int, int] | None = None) -> int:
    """Largest top degree over fold-free W, given reg >= lo (and reg <= hi)."""
    if lo == hi:
        return lo
    adj = g.adj
    top = _TopDegree(g, modulus)
    best = lo
    if mmemo is None:
        mmemo = {}
    for w in range((1 << g.n) - 1, 0, -1):
        if hi is not None and (w.bit_count() < 2 * (best + 1)
                               or _matching(adj, w, mmemo) <= best):
            continue
        if not _fold_free(adj, w):
            continue
        val = top(w)
        if val is not None and val > best:
            best = val
            if best == hi:
                break
    return best


def rd_pair(g: Graph, method: Method = "auto") -> tuple[int, int]:
    """(reg(R/I(G)), deg h_{R/I(G)}(t))."""
    return regularity(g, method), hilbert_data(g).deg_h


def invariant_record(g: Graph) -> dict:
    """JSON-ready record of every invariant, keys in a fixed order."""
    _check_size(g)
    hd = hilbert_data(g)
    table = betti_table(g)
    return {
        "graph6": g.to_graph6(),
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "dim": hd.dim,
        "f_vector": list(hd.f),
        "h_coeffs": list(hd.h),
        "deg_h": hd.deg_h,
        "reg": table.reg,
        "im": _induced_matching(g.adj, g.vertex_mask, {}),
        "m": _matching(g.adj, g.vertex_mask, {}),
        "betti": table.as_list(),
    }
