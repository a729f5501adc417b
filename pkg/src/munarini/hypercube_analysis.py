"""Hypercube embeddings of string graphs and brute-force cube enumeration.

Labels are stored as Python ints holding ``m`` bits; coordinate ``c``
(0-based, left to right in the printed string) is the bit ``1 << (m-1-c)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import ConsistencyError, InputError
from .graphs import LabeledGraph, bfs_distances, is_bipartite
from .polynomials import BiPoly, IntPoly
from .strings import BinaryLabel, encode_psi_tuple

MEDIAN_EXHAUSTIVE_LIMIT = 400
MEDIAN_SAMPLES = 100_000


def _to_int(bits: Iterable[int]) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass
class EmbeddedGraph:
    """A graph together with an injective labeling into B^m in which edges have Hamming distance 1."""

    graph: LabeledGraph
    labels: list[int]
    m: int
    _lookup: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.order():
            raise InputError("one label per vertex is required")
        if any(not 0 <= x < (1 << self.m) for x in self.labels):
            raise InputError(f"labels must have uniform length {self.m}")
        self._lookup = {x: i for i, x in enumerate(self.labels)}
        if len(self._lookup) != len(self.labels):
            raise InputError("labeling is not injective")
        for i, j in self.graph.edges:
            if _popcount(self.labels[i] ^ self.labels[j]) != 1:
                raise InputError(
                    f"edge {self.graph.text(i)}-{self.graph.text(j)} is not a hypercube edge")

    def bit(self, coord: int) -> int:
        return 1 << (self.m - 1 - coord)

    def coords(self, mask: int) -> tuple[int, ...]:
        return tuple(c for c in range(self.m) if mask & self.bit(c))

    def vertex_of(self, label: int) -> int | None:
        return self._lookup.get(label)

    def label_of(self, v: int) -> BinaryLabel:
        return BinaryLabel.from_int(self.labels[v], self.m)

    def label_text(self, v: int) -> str:
        return str(self.label_of(v)) if self.m else ""

    def __contains__(self, label: int) -> bool:
        return label in self._lookup


def embedded_from_strings(labels: Sequence[str], edges: Iterable[tuple[int, int]],
                          family: str = "custom") -> EmbeddedGraph:
    """Binary-labeled graph from bit-string labels and index edges (identity embedding)."""
    m = len(labels[0]) if labels else 0
    if any(len(s) != m for s in labels):
        raise InputError("labels have non-uniform lengths")
    keys = [tuple(BinaryLabel.from_str(s)) for s in labels]
    G = LabeledGraph(family, m, 1, keys, edges)
    return EmbeddedGraph(G, [_to_int(key) for key in keys], m)


def embed_munarini(G: LabeledGraph) -> EmbeddedGraph:
    """Label each vertex of M_{n,k} by its Munarini string (length k*n)."""
    if G.family not in ("munarini", "star"):
        raise InputError("embed_munarini expects a Munarini graph")
    n = 1 if G.family == "star" else G.n
    labels = [_to_int(encode_psi_tuple(key, G.k)) for key in G.keys]
    return EmbeddedGraph(G, labels, G.k * n)


def embed_identity(G: LabeledGraph) -> EmbeddedGraph:
    """Binary-string graphs are already labeled by their vertices."""
    if not G.binary:
        raise InputError(f"{G.family} vertices are not binary strings")
    return EmbeddedGraph(G, [_to_int(key) for key in G.keys], len(G.keys[0]) if G.keys else 0)


def embed_partial_cube(G: LabeledGraph, root: int = 0) -> EmbeddedGraph:
    """Compute a hypercube labeling of a partial cube with ``root`` labeled 0^m.

    Edges are grouped into classes: the class of edge ab is the cut between the
    vertices closer to a and those closer to b.  Each class is one coordinate,
    set on the side away from the root.  Raises ConsistencyError if the cuts do
    not partition the edge set or the labeling is not isometric.
    """
    if G.order() == 0:
        raise InputError("empty graph")
    if not is_bipartite(G):
        raise ConsistencyError(f"{G!r} is not bipartite, hence not a partial cube")
    d_root = bfs_distances(G, root)
    if min(d_root) < 0:
        raise InputError("graph is not connected")
    edge_class = {}
    sides: list[list[bool]] = []
    for a, b in G.edges:
        if (a, b) in edge_class:
            continue
        if d_root[a] > d_root[b]:
            a, b = b, a
        da, db = bfs_distances(G, a), bfs_distances(G, b)
        far = [db[v] < da[v] for v in range(G.order())]
        c = len(sides)
        sides.append(far)
        for x, y in G.edges:
            if far[x] != far[y]:
                if (x, y) in edge_class:
                    raise ConsistencyError(f"edge {G.text(x)}-{G.text(y)} lies in two cuts")
                edge_class[(x, y)] = c
    m = len(sides)
    labels = [0] * G.order()
    for c, far in enumerate(sides):
        bit = 1 << (m - 1 - c)
        for v in range(G.order()):
            if far[v]:
                labels[v] |= bit
    try:
        E = EmbeddedGraph(G, labels, m)
    except InputError as exc:
        raise ConsistencyError(f"computed labeling is not a hypercube embedding: {exc}") from exc
    report = check_isometric(E)
    if not report:
        raise ConsistencyError(f"computed labeling of {G!r} is not isometric: {report.witness}")
    return E


def embed(G: LabeledGraph) -> EmbeddedGraph:
    """Default embedding per family; the all-zero / first vertex is labeled 0^m."""
    if G.family in ("munarini", "star"):
        return embed_munarini(G)
    if G.binary:
        return embed_identity(G)
    return embed_partial_cube(G, 0)


# ---------------------------------------------------------------------------
# structural checks

@dataclass
class CheckResult:
    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _adjacency(G: LabeledGraph) -> csr_matrix:
    n = G.order()
    if not G.edges:
        return csr_matrix((n, n), dtype=np.int8)
    e = np.asarray(G.edges, dtype=np.int64)
    return csr_matrix((np.ones(len(e), dtype=np.int8), (e[:, 0], e[:, 1])), shape=(n, n))


def all_pairs_distances(G: LabeledGraph, rows: Sequence[int] | None = None) -> np.ndarray:
    """Unweighted shortest-path lengths; ``inf`` for unreachable pairs."""
    idx = np.arange(G.order()) if rows is None else np.asarray(rows)
    return shortest_path(_adjacency(G), directed=False, unweighted=True, indices=idx)


def _label_array(E: EmbeddedGraph) -> np.ndarray:
    if E.m > 63:
        raise InputError(f"labels of width {E.m} exceed the 63-bit vectorized checks")
    return np.asarray(E.labels, dtype=np.uint64)


def check_isometric(E: EmbeddedGraph, chunk: int = 512) -> CheckResult:
    """Graph distance equals Hamming distance of labels, for every vertex pair."""
    G = E.graph
    n = G.order()
    labels = _label_array(E)
    A = _adjacency(G)
    for start in range(0, n, chunk):
        rows = np.arange(start, min(start + chunk, n))
        dist = shortest_path(A, directed=False, unweighted=True, indices=rows)
        ham = np.bitwise_count(labels[rows][:, None] ^ labels[None, :]).astype(np.float64)
        bad = np.argwhere(dist != ham)
        if len(bad):
            r, c = bad[0]
            u, v = int(rows[r]), int(c)
            d = dist[r, c]
            return CheckResult(False, (G.text(u), G.text(v)),
                               f"graph distance {d:g} but Hamming distance {int(ham[r, c])}")
    return CheckResult(True)


@dataclass
class DaisyReport:
    is_daisy: bool
    maximal_vertices: set[int]
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.is_daisy


def maximal_labels(E: EmbeddedGraph) -> set[int]:
    """Labels with no label strictly above them (one-bit test suffices for isometric labelings)."""
    out = set()
    for x in E.labels:
        if not any(not x & (1 << b) and (x | (1 << b)) in E for b in range(E.m)):
            out.add(x)
    return out


def _downward_witness(labels: Iterable[int], present, m: int) -> tuple[int, int] | None:
    for x in labels:
        y = x
        while y:
            low = y & -y
            if x ^ low not in present:
                return x, x ^ low
            y ^= low
    return None


def check_daisy(E: EmbeddedGraph, assume_isometric: bool = False) -> DaisyReport:
    """Is the label set closed under clearing any 1-bit (so it is generated by its maxima)?"""
    if not assume_isometric:
        iso = check_isometric(E)
        if not iso:
            raise InputError(f"embedding is not isometric: {iso.detail}")
    w = _downward_witness(E.labels, E, E.m)
    witness = None
    if w is not None:
        x, y = w
        witness = (BinaryLabel.from_int(x, E.m), BinaryLabel.from_int(y, E.m))
    return DaisyReport(w is None, maximal_labels(E), witness)


def rerooted(E: EmbeddedGraph, root: int) -> EmbeddedGraph:
    """Same embedding with every label XOR-ed so that ``root`` becomes 0^m."""
    r = E.labels[root]
    return EmbeddedGraph(E.graph, [x ^ r for x in E.labels], E.m)


def find_daisy_root(E: EmbeddedGraph) -> CheckResult:
    """Search for a vertex whose re-rooted labeling is downward closed.

    Partial cube labelings are unique up to re-rooting and coordinate
    permutation, so the graph is a daisy cube iff some root works.  On failure
    the witness lists, per root, a label whose lowered neighbor is missing.
    """
    failures = []
    for root in range(E.graph.order()):
        r = E.labels[root]
        shifted = {x ^ r for x in E.labels}
        w = _downward_witness(shifted, shifted, E.m)
        if w is None:
            return CheckResult(True, (E.graph.text(root),), f"root {E.graph.text(root)}")
        failures.append((E.graph.text(root), E.graph.text(E.vertex_of(w[0] ^ r))))
    return CheckResult(False, tuple(failures), "no vertex can serve as 0^m")


def _majority(a, b, c):
    return (a & b) | (a & c) | (b & c)


def median_label(a: int, b: int, c: int) -> int:
    """Coordinatewise majority of three labels."""
    return _majority(a, b, c)


def median(E: EmbeddedGraph, u, v, w) -> int:
    """Vertex index of the median of three vertices (indices or label forms)."""
    G = E.graph
    iu, iv, iw = (x if isinstance(x, int) else G.index_of(x) for x in (u, v, w))
    m = _majority(E.labels[iu], E.labels[iv], E.labels[iw])
    idx = E.vertex_of(m)
    if idx is None:
        raise ConsistencyError(
            f"majority of {G.text(iu)}, {G.text(iv)}, {G.text(iw)} is not a vertex")
    return idx


def check_median_closed(E: EmbeddedGraph, exhaustive_limit: int = MEDIAN_EXHAUSTIVE_LIMIT,
                        samples: int = MEDIAN_SAMPLES, seed: int = 0) -> CheckResult:
    """Majority of every triple is a vertex (all triples up to ``exhaustive_limit`` vertices,
    else ``samples`` seeded random triples)."""
    labels = _label_array(E)
    n = len(labels)
    order = np.sort(labels)

    def missing(maj: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(order, maj).clip(max=n - 1)
        return order[pos] != maj

    G = E.graph
    if n <= exhaustive_limit:
        for i in range(n):
            b = labels[i + 1:]
            if len(b) < 2:
                continue
            maj = _majority(labels[i], b[:, None], b[None, :])
            bad = np.argwhere(np.triu(missing(maj), 1))
            if len(bad):
                j, k = bad[0] + i + 1
                return CheckResult(False, (G.text(i), G.text(int(j)), G.text(int(k))),
                                   "majority label is not a vertex")
        return CheckResult(True, detail=f"exhaustive over {n} vertices")
    rng = np.random.default_rng(seed)
    t = rng.integers(0, n, size=(samples, 3))
    maj = _majority(labels[t[:, 0]], labels[t[:, 1]], labels[t[:, 2]])
    bad = np.flatnonzero(missing(maj))
    if len(bad):
        i, j, k = (int(x) for x in t[bad[0]])
        return CheckResult(False, (G.text(i), G.text(j), G.text(k)), "majority label is not a vertex")
    return CheckResult(True, detail=f"{samples} random triples")


# ---------------------------------------------------------------------------
# cube enumeration

@dataclass(frozen=True, order=True)
class InducedCube:
    """Induced Q_p given by its bottom vertex and the coordinates it spans."""

    dimension: int
    bottom: int
    support: tuple[int, ...]
    top: int

    def vertices(self, E: EmbeddedGraph) -> list[int]:
        base = E.labels[self.bottom]
        out = []
        for r in range(self.dimension + 1):
            for sub in combinations(self.support, r):
                mask = base
                for c in sub:
                    mask |= E.bit(c)
                out.append(E.vertex_of(mask))
        return out

    def to_record(self, E: EmbeddedGraph) -> dict:
        G = E.graph
        return {"bottom": G.text(self.bottom), "top": G.text(self.top), "support": list(self.support)}


def enumerate_cubes(E: EmbeddedGraph, safeguard: bool = True) -> list[InducedCube]:
    """Every induced hypercube (including single vertices), sorted by (dimension, bottom, support).

    From each bottom label, supports grow one upward direction at a time and a
    direction is kept only if every current cube vertex has its neighbor in that
    direction.
    """
    G = E.graph
    labels = E.labels
    present = E._lookup
    out: list[InducedCube] = []
    for b, base in enumerate(labels):
        ups = [c for c in range(E.m) if not base & E.bit(c) and (base | E.bit(c)) in present]

        def grow(support: tuple[int, ...], members: list[int], start: int) -> None:
            top_label = members[-1]
            out.append(InducedCube(len(support), b, support, present[top_label]))
            for pos in range(start, len(ups)):
                bit = E.bit(ups[pos])
                if all((x | bit) in present for x in members):
                    grow(support + (ups[pos],), members + [x | bit for x in members], pos + 1)

        grow((), [base], 0)
    if safeguard:
        for cube in out:
            vs = cube.vertices(E)
            vset = set(vs)
            edges = sum(1 for v in vs for w in G.adj[v] if w in vset) // 2
            p = cube.dimension
            if edges != (p * 2 ** (p - 1) if p else 0):
                raise ConsistencyError(f"cube {cube} induces {edges} edges")
    out.sort()
    return out


def _cube_key(E: EmbeddedGraph, bottom_label: int, support: Iterable[int]) -> tuple[int, int]:
    mask = 0
    for c in support:
        mask |= E.bit(c)
    return bottom_label, mask


def enumerate_maximal_cubes(E: EmbeddedGraph, cubes: list[InducedCube] | None = None) -> list[InducedCube]:
    """Cubes whose vertex set is not strictly inside another cube's.

    A cube inside a larger one is inside a cube one dimension higher, obtained
    by adding a single coordinate j; its bottom keeps or clears bit j.  The
    (bottom label, support) pair identifies a cube's vertex set.
    """
    if cubes is None:
        cubes = enumerate_cubes(E)
    keys = {_cube_key(E, E.labels[c.bottom], c.support) for c in cubes}
    out = []
    for c in cubes:
        base = E.labels[c.bottom]
        _, smask = _cube_key(E, base, c.support)
        contained = False
        for j in range(E.m):
            bit = E.bit(j)
            if smask & bit:
                continue
            if (base & ~bit, smask | bit) in keys:
                contained = True
                break
        if not contained:
            out.append(c)
    return out


def cube_census(cubes: Iterable[InducedCube]) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in cubes:
        out[c.dimension] = out.get(c.dimension, 0) + 1
    return dict(sorted(out.items()))


def census_poly(census: dict[int, int]) -> IntPoly:
    deg = max(census, default=-1)
    return IntPoly(census.get(p, 0) for p in range(deg + 1))


def distance_cube_census(E: EmbeddedGraph, origin=None,
                         cubes: list[InducedCube] | None = None) -> dict[tuple[int, int], int]:
    """Cube counts keyed by (dimension, BFS distance from bottom vertex to ``origin``).

    ``origin`` defaults to the vertex labeled 0^m.
    """
    G = E.graph
    if origin is None:
        o = E.vertex_of(0)
        if o is None:
            raise InputError("no vertex is labeled 0^m")
    elif isinstance(origin, int):
        o = origin
        if not 0 <= o < G.order():
            raise InputError(f"origin {origin} is not a vertex")
    else:
        o = G.index_of(origin)
    dist = bfs_distances(G, o)
    if cubes is None:
        cubes = enumerate_cubes(E)
    out: dict[tuple[int, int], int] = {}
    for c in cubes:
        key = (c.dimension, dist[c.bottom])
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


def distance_census_poly(census: dict[tuple[int, int], int]) -> BiPoly:
    return BiPoly(census)


def weight_histogram(G: LabeledGraph, origin=0) -> IntPoly:
    """Vertices counted by BFS distance from ``origin``, as a polynomial."""
    dist = bfs_distances(G, origin)
    counts: dict[int, int] = {}
    for d in dist:
        counts[d] = counts.get(d, 0) + 1
    return census_poly(counts)


@dataclass
class CubeProfile:
    """Everything the polynomial identities are checked against, for one embedded graph."""

    cubes: list[InducedCube]
    maximal: list[InducedCube]
    cube_poly: IntPoly
    maximal_poly: IntPoly
    distance: dict[tuple[int, int], int]


def cube_profile(E: EmbeddedGraph, origin=None, safeguard: bool = True) -> CubeProfile:
    cubes = enumerate_cubes(E, safeguard=safeguard)
    maximal = enumerate_maximal_cubes(E, cubes)
    return CubeProfile(
        cubes,
        maximal,
        census_poly(cube_census(cubes)),
        census_poly(cube_census(maximal)),
        distance_cube_census(E, origin, cubes),
    )


def census_csv(rows: dict) -> str:
    """CSV text for a census: ``p,count`` or ``p,d,count`` rows, sorted."""
    lines = []
    for key, count in sorted(rows.items()):
        fields = list(key) if isinstance(key, tuple) else [key]
        lines.append(",".join(str(x) for x in fields + [count]))
    return "\n".join(lines) + "\n"
