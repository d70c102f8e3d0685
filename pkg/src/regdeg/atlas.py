"""Exhaustive (reg, deg h) censuses over connected graphs and the lattice
regions they are compared against.

Pipeline: ``enumerate_connected`` produces one canonical graph6 string per
isomorphism class; ``compute_census`` maps a per-graph profile over them
(optionally in a process pool) and folds the results in enumeration order,
so the outcome never depends on worker scheduling.  Long runs checkpoint
their progress and resume from the last completed chunk.
"""

from __future__ import annotations

import json
import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import graph6
from .constructions import realize_cw
from .graph import (
    Graph,
    _induced_matching,
    _matching,
    canonical_adj,
    is_star,
    is_star_triangle,
)
from .invariants import _search_regularity, hilbert_data, rd_pair
from .cameron_walker import is_cameron_walker

log = logging.getLogger(__name__)

INTERNAL_MAX_N = 8
LARGE_MAX_N = 9
CHUNK = 2000
ENUM_CHUNK = 500


class CensusError(RuntimeError):
    pass


def cache_dir() -> Path:
    """Checkpoint / census directory: $REGDEG_CACHE_DIR or ~/.cache/regdeg."""
    env = os.environ.get("REGDEG_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "regdeg"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def _extend(parents: Sequence[tuple[int, ...]], k: int,
            checkpoint: Path | None = None) -> list[tuple[int, ...]]:
    """Connected graphs on k+1 vertices from connected graphs on k vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    adding one vertex with a non-empty neighbourhood to each parent reaches
    every class.
    """
    seen: set[tuple[int, ...]] = set()
    start = 0
    if checkpoint is not None and checkpoint.exists():
        state = json.loads(checkpoint.read_text())
        if state.get("k") == k and state.get("parents") == len(parents):
            start = state["done"]
            seen = {graph6.decode(s)[1] for s in state["found"]}
            log.info("resuming enumeration of n=%d at parent %d", k + 1, start)
    bit = 1 << k
    for lo in range(start, len(parents), ENUM_CHUNK):
        for adj in parents[lo:lo + ENUM_CHUNK]:
            for nb in range(1, bit):
                child = tuple(row | bit if (nb >> v) & 1 else row
                              for v, row in enumerate(adj)) + (nb,)
                seen.add(canonical_adj(k + 1, child))
        if checkpoint is not None:
            done = min(lo + ENUM_CHUNK, len(parents))
            _atomic_write(checkpoint, json.dumps({
                "k": k, "parents": len(parents), "done": done,
                "found": sorted(graph6.encode(k + 1, a).decode() for a in seen),
            }))
    return sorted(seen, key=lambda a: graph6.encode(k + 1, a))


def connected_graph6(n: int, allow_large: bool = False,
                     cache: Path | None = None) -> list[bytes]:
    """Canonical graph6 strings of all connected graphs on n vertices, sorted."""
    if n < 1:
        raise CensusError("n must be at least 1")
    limit = LARGE_MAX_N if allow_large else INTERNAL_MAX_N
    if n > limit:
        raise CensusError(
            f"internal generator is limited to n <= {limit}"
            + ("" if allow_large else " (pass allow_large for n = 9)")
            + "; feed larger n as a graph6 stream")
    level_path = cache / f"connected_{n}.g6" if cache is not None else None
    if level_path is not None and level_path.exists():
        return [line for line in level_path.read_bytes().split(b"\n") if line]
    if n == 1:
        out = [(0,)]
    else:
        parents = [graph6.decode(s)[1] for s in connected_graph6(n - 1, allow_large, cache)]
        ckpt = cache / f"connected_{n}.ckpt.json" if cache is not None and n >= 9 else None
        out = _extend(parents, n - 1, ckpt)
        if ckpt is not None and ckpt.exists():
            ckpt.unlink()
    result = [graph6.encode(n, adj) for adj in out]
    if level_path is not None:
        _atomic_write(level_path, "".join(s.decode() + "\n" for s in result))
    return result


def enumerate_connected(n: int, allow_large: bool = False,
                        cache: Path | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    for s in connected_graph6(n, allow_large, cache):
        yield Graph.from_graph6(s)


# --------------------------------------------------------------------------
# census
# --------------------------------------------------------------------------

@dataclass
class RdPoint:
    r: int
    d: int
    witness: str
    multiplicity: int = 1


@dataclass
class GraphProfile:
    graph6: str
    n: int
    r: int
    d: int
    im: int
    m: int
    cw: bool

    def violations(self) -> list[str]:
        out = []
        if not self.im <= self.r <= self.m <= self.n // 2:
            out.append(f"{self.graph6}: im <= reg <= m <= n/2 fails "
                       f"(im={self.im}, reg={self.r}, m={self.m}, n={self.n})")
        if self.r + self.d > self.n:
            out.append(f"{self.graph6}: r + d = {self.r + self.d} > n = {self.n}")
        return out


def profile(g6: bytes | str) -> GraphProfile:
    """All census quantities of one graph."""
    g = Graph.from_graph6(g6)
    adj, full = g.adj, g.vertex_mask
    mmemo: dict[int, int] = {}
    im = _induced_matching(adj, full, {})
    m = _matching(adj, full, mmemo)
    r = _search_regularity(g, im, m, None, mmemo)
    d = hilbert_data(g).deg_h
    cw = (im == m and g.num_edges > 0 and not is_star(g) and not is_star_triangle(g))
    text = g6.decode() if isinstance(g6, bytes) else g6.strip()
    return GraphProfile(text, g.n, r, d, im, m, cw)


@dataclass
class RdCensus:
    n: int
    points: dict[tuple[int, int], RdPoint] = field(default_factory=dict)
    cw_points: dict[tuple[int, int], RdPoint] = field(default_factory=dict)
    total_graphs: int = 0
    violations: list[str] = field(default_factory=list)

    def add(self, prof: GraphProfile) -> None:
        if prof.n != self.n:
            raise CensusError(f"{prof.graph6}: has {prof.n} vertices, census is for n={self.n}")
        self.total_graphs += 1
        key = (prof.r, prof.d)
        for table, include in ((self.points, True), (self.cw_points, prof.cw)):
            if not include:
                continue
            if key in table:
                table[key].multiplicity += 1
            else:
                table[key] = RdPoint(prof.r, prof.d, prof.graph6)
        self.violations.extend(prof.violations())

    def rd_set(self) -> set[tuple[int, int]]:
        return set(self.points)

    def cw_set(self) -> set[tuple[int, int]]:
        return set(self.cw_points)

    def to_dict(self) -> dict:
        def rows(table):
            return [[p.r, p.d, p.multiplicity, p.witness]
                    for _, p in sorted(table.items())]
        return {
            "n": self.n,
            "total_graphs": self.total_graphs,
            "points": rows(self.points),
            "cw_points": rows(self.cw_points),
            "violations": list(self.violations),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RdCensus":
        c = cls(n=data["n"], total_graphs=data["total_graphs"],
                violations=list(data.get("violations", [])))
        for r, d, mult, wit in data["points"]:
            c.points[(r, d)] = RdPoint(r, d, wit, mult)
        for r, d, mult, wit in data["cw_points"]:
            c.cw_points[(r, d)] = RdPoint(r, d, wit, mult)
        return c

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    def to_csv(self, cw: bool = False) -> str:
        table = self.cw_points if cw else self.points
        lines = ["n,r,d,multiplicity,witness_graph6"]
        lines += [f"{self.n},{p.r},{p.d},{p.multiplicity},{p.witness}"
                  for _, p in sorted(table.items())]
        return "\n".join(lines) + "\n"

    def plot_csv(self) -> str:
        """Scatter data: realised (r, d) with a Cameron-Walker flag."""
        lines = ["r,d,cw"]
        lines += [f"{r},{d},{int((r, d) in self.cw_points)}" for r, d in sorted(self.points)]
        return "\n".join(lines) + "\n"


def compute_census(n: int, graphs: Iterable[bytes | str], threads: int = 1,
                   checkpoint: Path | None = None,
                   progress: Callable[[int], None] | None = None) -> RdCensus:
    """Fold :func:`profile` over ``graphs`` (graph6 strings) in order.

    With ``checkpoint`` set, partial state is saved after every chunk and an
    existing checkpoint for the same n is resumed.
    """
    items = [g if isinstance(g, bytes) else g.encode() for g in graphs]
    census = RdCensus(n)
    start = 0
    if checkpoint is not None and checkpoint.exists():
        state = json.loads(checkpoint.read_text())
        if state.get("n") == n and state.get("total") == len(items):
            census = RdCensus.from_dict(state["census"])
            start = state["done"]
            log.info("resuming census n=%d at graph %d/%d", n, start, len(items))
    pool = Pool(threads) if threads > 1 else None
    try:
        for lo in range(start, len(items), CHUNK):
            chunk = items[lo:lo + CHUNK]
            if pool is None:
                results: Iterable[GraphProfile] = map(profile, chunk)
            else:
                results = pool.imap(profile, chunk, chunksize=64)
            for prof in results:
                census.add(prof)
            done = lo + len(chunk)
            if checkpoint is not None:
                _atomic_write(checkpoint, json.dumps(
                    {"n": n, "total": len(items), "done": done,
                     "census": census.to_dict()}))
            if progress is not None:
                progress(done)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return census


def census_paths(n: int, directory: Path | None = None) -> dict[str, Path]:
    base = directory if directory is not None else cache_dir()
    return {
        "json": base / f"census_{n}.json",
        "csv": base / f"census_{n}.csv",
        "cw_csv": base / f"census_{n}_cw.csv",
        "checkpoint": base / f"census_{n}.ckpt.json",
    }


def save_census(census: RdCensus, directory: Path | None = None) -> dict[str, Path]:
    paths = census_paths(census.n, directory)
    _atomic_write(paths["json"], census.to_json())
    _atomic_write(paths["csv"], census.to_csv())
    _atomic_write(paths["cw_csv"], census.to_csv(cw=True))
    return paths


def load_census(n: int, directory: Path | None = None) -> RdCensus | None:
    path = census_paths(n, directory)["json"]
    if not path.exists():
        return None
    return RdCensus.from_dict(json.loads(path.read_text()))


def run_census(n: int, threads: int = 1, allow_large: bool = False,
               directory: Path | None = None, use_cache: bool = True,
               graphs: Iterable[bytes | str] | None = None) -> RdCensus:
    """Enumerate (or ingest), compute, checkpoint and save the census for n."""
    base = directory if directory is not None else cache_dir()
    if use_cache and graphs is None:
        cached = load_census(n, base)
        if cached is not None:
            return cached
    paths = census_paths(n, base)
    if graphs is None:
        graphs = connected_graph6(n, allow_large, base if n >= INTERNAL_MAX_N else None)
    census = compute_census(n, graphs, threads, checkpoint=paths["checkpoint"])
    save_census(census, base)
    if paths["checkpoint"].exists():
        paths["checkpoint"].unlink()
    return census


def small_census(n: int) -> RdCensus:
    """In-memory census without any file I/O (for n <= 7)."""
    return compute_census(n, connected_graph6(n))


# --------------------------------------------------------------------------
# lattice regions
# --------------------------------------------------------------------------

def lattice_A(n: int) -> frozenset[tuple[int, int]]:
    """1 <= r < floor((n-1)/2), 1 <= d <= n - r, r - d <= 1."""
    top = (n - 1) // 2
    return frozenset((r, d) for r in range(1, top) for d in range(1, n - r + 1)
                     if r - d <= 1)


def lattice_B(n: int) -> frozenset[tuple[int, int]]:
    """1 <= r <= floor((n-1)/2), 1 <= d <= n - r."""
    top = (n - 1) // 2
    return frozenset((r, d) for r in range(1, top + 1) for d in range(1, n - r + 1))


def lattice_CW(n: int) -> frozenset[tuple[int, int]]:
    """2 <= r <= floor((n-1)/2), r <= d <= n - r, d >= n - 2r + 1."""
    top = (n - 1) // 2
    return frozenset((r, d) for r in range(2, top + 1) for d in range(r, n - r + 1)
                     if d >= n - 2 * r + 1)


def count_cw(n: int) -> int:
    """Closed-form number of lattice points in the Cameron-Walker region."""
    if n < 5:
        raise ValueError("count_cw needs n >= 5")
    g, f = divmod(n + 1, 3)
    even = g % 2 == 0
    if f == 0:
        val = Fraction(3 * g * g, 4) - 1 if even else Fraction(3 * (g * g - 1), 4) - 1
    elif f == 1:
        val = Fraction(g * (3 * g + 2), 4) - 2 if even else Fraction((3 * g - 1) * (g + 1), 4) - 1
    else:
        val = Fraction(g * (3 * g + 4), 4) - 1 if even else Fraction(3 * g * g + 4 * g - 3, 4) - 1
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral count {val} for n={n}")
    return int(val)


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

@dataclass
class SandwichReport:
    n: int
    missing_from_rd: list[tuple[int, int]]
    outside_b: list[tuple[int, int]]
    band: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.missing_from_rd and not self.outside_b


def verify_sandwich(census: RdCensus) -> SandwichReport:
    rd = census.rd_set()
    a, b = lattice_A(census.n), lattice_B(census.n)
    return SandwichReport(census.n, sorted(a - rd), sorted(rd - b), sorted(rd - a))


@dataclass
class CwCharacterizationReport:
    n: int
    census_points: list[tuple[int, int]]
    lattice_points: list[tuple[int, int]]
    witness_failures: list[str]

    @property
    def missing(self) -> list[tuple[int, int]]:
        return sorted(set(self.lattice_points) - set(self.census_points))

    @property
    def extra(self) -> list[tuple[int, int]]:
        return sorted(set(self.census_points) - set(self.lattice_points))

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra and not self.witness_failures


def check_cw_witnesses(n: int, method: str = "hochster") -> list[str]:
    """Build G_{a,b,c} for each region point and confirm (r, d) and CW-ness."""
    failures = []
    for r, d in sorted(lattice_CW(n)):
        g = realize_cw(r, d, n)
        got = rd_pair(g, method)
        if g.n != n or got != (r, d):
            failures.append(f"realize_cw({r},{d},{n}) gave n={g.n}, (r,d)={got}")
        elif not is_cameron_walker(g):
            failures.append(f"realize_cw({r},{d},{n}) is not Cameron-Walker")
    return failures


def verify_cw_characterization(census: RdCensus, check_witnesses: bool = True) -> CwCharacterizationReport:
    n = census.n
    failures = check_cw_witnesses(n) if check_witnesses else []
    return CwCharacterizationReport(n, sorted(census.cw_set()), sorted(lattice_CW(n)), failures)


@dataclass
class ConvexityReport:
    n: int
    row_gaps: list[tuple[int, int]]
    column_gaps: list[tuple[int, int]]

    @property
    def convex(self) -> bool:
        return not self.row_gaps and not self.column_gaps


def convexity_probe(census: RdCensus) -> ConvexityReport:
    """Missing interior points along rows (fixed r) and columns (fixed d)."""
    pts = census.rd_set()
    row_gaps, col_gaps = [], []
    for r in sorted({r for r, _ in pts}):
        ds = [d for rr, d in pts if rr == r]
        row_gaps += [(r, d) for d in range(min(ds), max(ds) + 1) if (r, d) not in pts]
    for d in sorted({d for _, d in pts}):
        rs = [r for r, dd in pts if dd == d]
        col_gaps += [(r, d) for r in range(min(rs), max(rs) + 1) if (r, d) not in pts]
    return ConvexityReport(census.n, row_gaps, sorted(col_gaps))


def rd_upper_count(n: int) -> int:
    """C(n,2) - C(ceil((n+1)/2), 2), the bound used for |RD(n)| from above."""
    return math.comb(n, 2) - math.comb(-(-(n + 1) // 2), 2)


def asymptotics_probe(n_max: int, n_min: int = 5) -> list[dict]:
    """count_cw(n)/n^2 against 1/12 and the ratio bounds against |RD(n)|.

    ``within_3_over_n`` is recorded for n >= 20 (None below).
    """
    if n_max < 10:
        raise ValueError("asymptotics_probe needs n_max >= 10")
    rows = []
    prev = None
    for n in range(n_min, n_max + 1):
        c = count_cw(n)
        ratio = c / n ** 2
        lower = (Fraction((n - 4) ** 2, 12) - Fraction(7, 4)) / rd_upper_count(n)
        upper = Fraction((n + 6) ** 2, 12) / (n // 2) ** 2
        dev = abs(ratio - 1 / 12)
        rows.append({
            "n": n,
            "count_cw": c,
            "ratio_n2": ratio,
            "deviation": dev,
            "within_3_over_n": (dev <= 3 / n) if n >= 20 else None,
            "cw_over_B": c / len(lattice_B(n)),
            "cw_over_A": c / len(lattice_A(n)) if lattice_A(n) else None,
            "ratio_lower_bound": float(lower),
            "ratio_upper_bound": float(upper),
            "deviation_shrinks": None if prev is None else dev <= prev,
        })
        prev = dev
    return rows
