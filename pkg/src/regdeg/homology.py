"""Reduced simplicial homology of independence complexes.

Ranks are exact: over the rationals by integer elimination that pivots on
unit entries whenever it can (boundary matrices are mostly +-1), falling back
to fraction-free row operations otherwise; over GF(p) by ordinary modular
elimination.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .graph import Graph, as_mask, bits, independent_sets

RATIONAL = None
CHECK_PRIME = 32749


def _rank_mod(rows: list[dict[int, int]], p: int) -> int:
    rows = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        rows.sort(key=len)
        piv_row = rows.pop(0)
        col, val = next(iter(piv_row.items()))
        inv = pow(val, -1, p)
        rank += 1
        new_rows = []
        for r in rows:
            a = r.get(col)
            if a:
                f = a * inv % p
                for c, v in piv_row.items():
                    x = (r.get(c, 0) - f * v) % p
                    if x:
                        r[c] = x
                    else:
                        r.pop(c, None)
            if r:
                new_rows.append(r)
        rows = new_rows
    return rank


def _rank_rational(rows: list[dict[int, int]]) -> int:
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        # prefer a +-1 pivot in the sparsest row; elimination then stays integral
        rows.sort(key=len)
        pick = None
        for i, r in enumerate(rows):
            for c, v in r.items():
                if v == 1 or v == -1:
                    pick = (i, c)
                    break
            if pick:
                break
        if pick is None:
            pick = (0, min(rows[0], key=lambda c: abs(rows[0][c])))
        i, col = pick
        piv_row = rows.pop(i)
        pv = piv_row[col]
        rank += 1
        new_rows = []
        for r in rows:
            a = r.get(col)
            if a:
                if pv in (1, -1):
                    f = a * pv
                    for c, v in piv_row.items():
                        x = r.get(c, 0) - f * v
                        if x:
                            r[c] = x
                        else:
                            r.pop(c, None)
                else:
                    # r <- pv*r - a*piv_row, then strip the content
                    scaled = {c: pv * v for c, v in r.items()}
                    for c, v in piv_row.items():
                        x = scaled.get(c, 0) - a * v
                        if x:
                            scaled[c] = x
                        else:
                            scaled.pop(c, None)
                    g = 0
                    for v in scaled.values():
                        g = gcd(g, v)
                    r = {c: v // g for c, v in scaled.items()} if g > 1 else scaled
            if r:
                new_rows.append(r)
        rows = new_rows
    return rank


def matrix_rank(rows: Sequence[dict[int, int]], modulus: int | None = RATIONAL) -> int:
    """Rank of a sparse integer matrix given as ``{column: value}`` rows.

    ``modulus=None`` computes the rank over Q; a prime computes it over GF(p).
    """
    if modulus is None:
        return _rank_rational(list(rows))
    return _rank_mod(list(rows), modulus)


def reduced_homology_of_faces(faces: Sequence[int], modulus: int | None = RATIONAL) -> list[int]:
    """Reduced Betti numbers of the complex whose faces are ``faces`` (bitmasks).

    ``faces`` must be closed under taking subsets and contain the empty face.
    Entry ``k + 1`` of the result is dim H~_k, for k = -1 .. top dimension.
    """
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    index = [{f: i for i, f in enumerate(sorted(by_size.get(s, [])))} for s in range(top + 1)]
    # ranks[s] = rank of the boundary map from faces of size s to size s-1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        lower = index[s - 1]
        rows = []
        for f in index[s]:
            row = {}
            sign = 1
            for v in bits(f):
                row[lower[f ^ (1 << v)]] = sign
                sign = -sign
            rows.append(row)
        ranks[s] = matrix_rank(rows, modulus)
    return [len(index[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)]


def reduced_homology_dims(g: Graph, w: int | Sequence[int] | None = None,
                          modulus: int | None = RATIONAL) -> list[int]:
    """dim H~_k(Ind(G[W])) for k = -1, 0, 1, ...; entry ``k + 1`` holds degree k.

    ``W`` defaults to all vertices.  W = {} gives [1] (the complex {{}});
    a full simplex gives all zeros.
    """
    mask = g.vertex_mask if w is None else as_mask(w)
    if mask & ~g.vertex_mask:
        raise ValueError("W is not a subset of the vertex set")
    return reduced_homology_of_faces(independent_sets(g, mask), modulus)
