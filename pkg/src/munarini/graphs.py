"""Graph families on strings: Munarini graphs M_{n,k}, generalized Pell graphs
Pi_{n,k}, Fibonacci cubes, Pell graphs, hypercubes and stars.

Every family is built the same way: enumerate the vertex strings in
lexicographic order, then for each vertex apply each rewrite rule at each
position and keep the result if it is again a vertex.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import ConsistencyError, InputError, UnsupportedParameterError
from .polynomials import fib_k
from .strings import BinaryLabel, PellString, format_symbols, iter_pell_tuples, parse_pell

FAMILIES = ("munarini", "genpell", "fibonacci", "pell", "hypercube", "star")

# families whose vertices are (k+1)-ary Pell strings; the rest are binary
_PELL_FAMILIES = {"munarini", "genpell", "pell", "star"}

Key = tuple[int, ...]
Rule = tuple[Key, Key]


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int = 0
    k: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 0:
            raise InputError(f"n must be >= 0, got {self.n}")
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")
        if self.family == "genpell" and self.k < 2:
            raise UnsupportedParameterError("generalized Pell graphs need k >= 2")


class LabeledGraph:
    """Simple undirected graph whose vertices are strings.

    ``keys[i]`` is the raw symbol tuple of vertex ``i``; ``edges`` are sorted
    index pairs ``(i, j)`` with ``i < j``, listed in sorted order.
    """

    def __init__(self, family: str, n: int, k: int, keys: Sequence[Key],
                 edges: Iterable[tuple[int, int]]):
        self.family = family
        self.n = n
        self.k = k
        self.keys: tuple[Key, ...] = tuple(tuple(key) for key in keys)
        self.index: dict[Key, int] = {key: i for i, key in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise InputError("vertex labels are not unique")
        es = set()
        for i, j in edges:
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            es.add((min(i, j), max(i, j)))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(es))
        adj: list[list[int]] = [[] for _ in self.keys]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    # -- basic queries -----------------------------------------------------

    @property
    def binary(self) -> bool:
        return self.family not in _PELL_FAMILIES

    def order(self) -> int:
        return len(self.keys)

    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.keys)

    def __repr__(self) -> str:
        return (f"LabeledGraph(family={self.family!r}, n={self.n}, k={self.k}, "
                f"|V|={self.order()}, |E|={self.size()})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (self.family, self.n, self.k, self.keys, self.edges) == (
            other.family, other.n, other.k, other.keys, other.edges)

    def label(self, i: int) -> PellString | BinaryLabel:
        if self.binary:
            return BinaryLabel(self.keys[i])
        return PellString(self.keys[i], self.k)

    def labels(self) -> list[PellString | BinaryLabel]:
        return [self.label(i) for i in range(len(self.keys))]

    def text(self, i: int) -> str:
        key = self.keys[i]
        return "".join(map(str, key)) if self.binary else format_symbols(key, self.k)

    def index_of(self, v) -> int:
        """Vertex index from a label object, raw tuple, or its text form."""
        if isinstance(v, (PellString, BinaryLabel)):
            key = tuple(v)
        elif isinstance(v, str):
            key = tuple(BinaryLabel.from_str(v)) if self.binary else parse_pell(v, self.k).symbols
        else:
            key = tuple(v)
        try:
            return self.index[key]
        except KeyError:
            raise InputError(f"{v!r} is not a vertex of {self!r}") from None

    def degree(self, v) -> int:
        i = v if isinstance(v, int) else self.index_of(v)
        return len(self.adj[i])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def induced(self, indices: Sequence[int], relabel: Callable[[Key], Key] | None = None,
                family: str | None = None, n: int | None = None) -> LabeledGraph:
        """Induced subgraph; vertex order follows ``indices``."""
        pos = {v: p for p, v in enumerate(indices)}
        keys = [relabel(self.keys[v]) if relabel else self.keys[v] for v in indices]
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        return LabeledGraph(family or self.family, self.n if n is None else n, self.k, keys, edges)


# ---------------------------------------------------------------------------
# construction

def rewrite_graph(family: str, n: int, k: int, keys: Iterable[Key],
                  rules: Sequence[Rule]) -> LabeledGraph:
    """Vertices ``keys``; u ~ v when v is u with one rule (either direction) applied once."""
    keys = list(keys)
    index = {key: i for i, key in enumerate(keys)}
    both = list(rules) + [(b, a) for a, b in rules]
    edges = []
    for i, key in enumerate(keys):
        for a, b in both:
            w = len(a)
            for pos in range(len(key) - w + 1):
                if key[pos:pos + w] == a:
                    j = index.get(key[:pos] + b + key[pos + w:])
                    if j is not None and i < j:
                        edges.append((i, j))
    return LabeledGraph(family, n, k, keys, edges)


def munarini_rules(k: int) -> list[Rule]:
    return [((0,), (i,)) for i in range(1, k)] + [((0, 0), (k, k))]


def genpell_rules(k: int) -> list[Rule]:
    return [((i,), (i + 1,)) for i in range(k - 1)] + [((k - 1, k - 1), (k, k))]


def build_munarini(n: int, k: int) -> LabeledGraph:
    """M_{n,k}: rewrites 0 <-> i (1 <= i <= k-1) and 00 <-> kk."""
    FamilyParams("munarini", n, k)
    return rewrite_graph("munarini", n, k, iter_pell_tuples(n, k), munarini_rules(k))


def build_generalized_pell(n: int, k: int) -> LabeledGraph:
    """Pi_{n,k}: rewrites i <-> i+1 (i <= k-2) and (k-1)(k-1) <-> kk; needs k >= 2."""
    FamilyParams("genpell", n, k)
    return rewrite_graph("genpell", n, k, iter_pell_tuples(n, k), genpell_rules(k))


def build_pell(n: int) -> LabeledGraph:
    """Pell graph Pi_n on ternary Pell strings: 0 <-> 1 and 11 <-> 22."""
    FamilyParams("pell", n, 2)
    return rewrite_graph("pell", n, 2, iter_pell_tuples(n, 2), [((0,), (1,)), ((1, 1), (2, 2))])


def fibonacci_strings(n: int) -> list[Key]:
    return [t for t in product((0, 1), repeat=n)
            if not any(a and b for a, b in zip(t, t[1:]))]


def build_fibonacci_cube(n: int) -> LabeledGraph:
    """Fibonacci cube Gamma_n, induced by binary strings without 11 in Q_n."""
    FamilyParams("fibonacci", n, 1)
    return rewrite_graph("fibonacci", n, 1, fibonacci_strings(n), [((0,), (1,))])


def build_hypercube(m: int) -> LabeledGraph:
    FamilyParams("hypercube", m, 1)
    return rewrite_graph("hypercube", m, 1, product((0, 1), repeat=m), [((0,), (1,))])


def build_star(k: int) -> LabeledGraph:
    """Star S_{k-1} on k vertices: center 0, leaves 1..k-1 (equal to M_{1,k})."""
    FamilyParams("star", 1, k)
    return rewrite_graph("star", 1, k, [(i,) for i in range(k)], [((0,), (i,)) for i in range(1, k)])


def build(family: str, n: int = 0, k: int = 1) -> LabeledGraph:
    """Dispatch on family name."""
    FamilyParams(family, n, k)
    if family == "munarini":
        return build_munarini(n, k)
    if family == "genpell":
        return build_generalized_pell(n, k)
    if family == "pell":
        return build_pell(n)
    if family == "fibonacci":
        return build_fibonacci_cube(n)
    if family == "hypercube":
        return build_hypercube(n)
    return build_star(k)


def expected_order(family: str, n: int = 0, k: int = 1) -> int:
    """Vertex count of ``build(family, n, k)`` without building it."""
    if family in ("munarini", "genpell"):
        return fib_k(n + 1, k)
    if family == "pell":
        return fib_k(n + 1, 2)
    if family == "fibonacci":
        return fib_k(n + 2, 1)
    if family == "hypercube":
        return 2 ** n
    if family == "star":
        return k
    raise InputError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# sizes

def count_edges_recurrence(n: int, k: int) -> int:
    """|E(M_n)| = k |E(M_{n-1})| + |E(M_{n-2})| + F_{n+1,k} - F_{n,k}, |E(M_0)| = 0, |E(M_1)| = k-1."""
    if n < 0 or k < 1:
        raise InputError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    prev, cur = 0, k - 1
    if n == 0:
        return 0
    for m in range(2, n + 1):
        prev, cur = cur, k * cur + prev + fib_k(m + 1, k) - fib_k(m, k)
    return cur


def count_edges_closed_form(n: int, k: int) -> int:
    """((k^2-k+2) n F_{n+1,k} + (k-2)(n+1) F_{n,k}) / (k^2+4)."""
    if n < 1 or k < 1:
        raise InputError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    num = (k * k - k + 2) * n * fib_k(n + 1, k) + (k - 2) * (n + 1) * fib_k(n, k)
    q, r = divmod(num, k * k + 4)
    if r:
        raise ConsistencyError(f"edge closed form not integral at n={n}, k={k}")
    return q


# ---------------------------------------------------------------------------
# traversal

def bfs_distances(G: LabeledGraph, source) -> list[int]:
    """Shortest-path distance from ``source`` to each vertex index (-1 if unreachable)."""
    s = source if isinstance(source, int) else G.index_of(source)
    if not 0 <= s < G.order():
        raise InputError(f"unknown source vertex {source!r}")
    dist = [-1] * G.order()
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in G.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def degree(G: LabeledGraph, v) -> int:
    return G.degree(v)


def is_connected(G: LabeledGraph) -> bool:
    return G.order() == 0 or min(bfs_distances(G, 0)) >= 0


def is_bipartite(G: LabeledGraph) -> bool:
    if G.order() == 0:
        return True
    dist = bfs_distances(G, 0)
    return all(dist[i] % 2 != dist[j] % 2 for i, j in G.edges)


# ---------------------------------------------------------------------------
# recursive decomposition

@dataclass
class Decomposition:
    """Partition of M_{n,k} by leading letter: i.F_{n-1,k} (0 <= i < k) and kk.F_{n-2,k}."""

    graph: LabeledGraph
    parts: dict[Key, list[int]]
    cross_edges: dict[tuple[Key, Key], int] = field(default_factory=dict)
    matching: list[tuple[int, int]] = field(default_factory=list)

    def part_graph(self, prefix: Key) -> LabeledGraph:
        """Induced graph on a part with the prefix stripped from every label."""
        w = len(prefix)
        n = self.graph.n - w
        return self.graph.induced(self.parts[prefix], relabel=lambda key: key[w:], n=n)

    def layer_graph(self) -> LabeledGraph:
        """Induced graph on the union of the k single-letter parts."""
        k = self.graph.k
        idx = [v for i in range(k) for v in self.parts[(i,)]]
        return self.graph.induced(idx)


def decompose_munarini(G: LabeledGraph) -> Decomposition:
    if G.family != "munarini":
        raise InputError("decompose_munarini expects a Munarini graph")
    n, k = G.n, G.k
    if n < 2:
        raise InputError(f"decomposition needs n >= 2, got n={n}")
    prefixes: list[Key] = [(i,) for i in range(k)] + [(k, k)]
    parts: dict[Key, list[int]] = {p: [] for p in prefixes}
    owner = []
    for v, key in enumerate(G.keys):
        p = (k, k) if key[0] == k else (key[0],)
        parts[p].append(v)
        owner.append(p)
    cross: dict[tuple[Key, Key], int] = {}
    matching = []
    kk = (k, k)
    for i, j in G.edges:
        a, b = owner[i], owner[j]
        if a == b:
            continue
        pair = (a, b) if prefixes.index(a) < prefixes.index(b) else (b, a)
        cross[pair] = cross.get(pair, 0) + 1
        if kk in (a, b):
            top, other = (i, j) if a == kk else (j, i)
            matching.append((top, other))
    return Decomposition(G, parts, cross, sorted(matching))


# ---------------------------------------------------------------------------
# explicit isomorphisms

def theta(u: Sequence[int]) -> Key:
    """M_{n,1} -> Gamma_{n-1}: keep 0s, rewrite each 11 as 10, drop the final 0."""
    out: list[int] = []
    i = 0
    while i < len(u):
        if u[i] == 0:
            out.append(0)
            i += 1
        elif i + 1 < len(u) and u[i] == u[i + 1] == 1:
            out += [1, 0]
            i += 2
        else:
            raise InputError(f"{tuple(u)!r} is not in F_(n,1)")
    if not out:
        raise InputError("theta is defined for n >= 1")
    return tuple(out[:-1])


def theta_inverse(f: Sequence[int]) -> Key:
    """Gamma_{n-1} -> M_{n,1}: append 0, then rewrite each 10 as 11."""
    s = list(f) + [0]
    out: list[int] = []
    i = 0
    while i < len(s):
        if s[i] == 0:
            out.append(0)
            i += 1
        elif i + 1 < len(s) and s[i + 1] == 0:
            out += [1, 1]
            i += 2
        else:
            raise InputError(f"{tuple(f)!r} is not a Fibonacci string")
    return tuple(out)


def swap01(u: Sequence[int]) -> Key:
    """Exchange the symbols 0 and 1; an involution on Pell strings."""
    return tuple(1 - s if s in (0, 1) else s for s in u)


def is_isomorphism(G: LabeledGraph, H: LabeledGraph, mapping: dict[Key, Key]) -> bool:
    """True iff ``mapping`` is a bijection V(G) -> V(H) preserving adjacency both ways."""
    if len(mapping) != G.order() or G.order() != H.order():
        return False
    if set(mapping) != set(G.keys) or set(mapping.values()) != set(H.keys):
        return False
    image = {(min(a, b), max(a, b)) for a, b in (
        (H.index[mapping[G.keys[i]]], H.index[mapping[G.keys[j]]]) for i, j in G.edges)}
    return image == H.edge_set()


def iso_to_fibonacci(n: int, verify: bool = True) -> dict[Key, Key]:
    """Vertex bijection M_{n,1} -> Gamma_{n-1} via :func:`theta`."""
    if n < 1:
        raise InputError("iso_to_fibonacci needs n >= 1")
    mapping = {u: theta(u) for u in iter_pell_tuples(n, 1)}
    if verify and not is_isomorphism(build_munarini(n, 1), build_fibonacci_cube(n - 1), mapping):
        raise ConsistencyError(f"theta is not an isomorphism at n={n}")
    return mapping


def iso_to_pell(n: int, verify: bool = True) -> dict[Key, Key]:
    """Vertex bijection M_{n,2} -> Pi_n via :func:`swap01`."""
    if n < 1:
        raise InputError("iso_to_pell needs n >= 1")
    mapping = {u: swap01(u) for u in iter_pell_tuples(n, 2)}
    if verify and not is_isomorphism(build_munarini(n, 2), build_pell(n), mapping):
        raise ConsistencyError(f"0/1 swap is not an isomorphism at n={n}")
    return mapping


# ---------------------------------------------------------------------------
# export / import

def to_edgelist(G: LabeledGraph) -> str:
    return "".join(f"{G.text(i)} {G.text(j)}\n" for i, j in G.edges)


def to_dot(G: LabeledGraph) -> str:
    name = f"{G.family}_{G.n}_{G.k}"
    lines = [f"graph {name} {{"]
    lines += [f'  "{G.text(i)}";' for i in range(G.order())]
    lines += [f'  "{G.text(i)}" -- "{G.text(j)}";' for i, j in G.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(G: LabeledGraph) -> dict:
    return {
        "family": G.family,
        "n": G.n,
        "k": G.k,
        "vertices": [G.text(i) for i in range(G.order())],
        "edges": [[i, j] for i, j in G.edges],
    }


def to_json(G: LabeledGraph) -> str:
    return json.dumps(to_dict(G), separators=(",", ":")) + "\n"


def from_dict(data: dict) -> LabeledGraph:
    try:
        family, n, k = data["family"], int(data["n"]), int(data["k"])
        texts, edges = data["vertices"], data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph record: {exc}") from exc
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    if family in _PELL_FAMILIES:
        keys = [parse_pell(t, k).symbols for t in texts]
    else:
        keys = [tuple(BinaryLabel.from_str(t)) for t in texts]
    for e in edges:
        if len(e) != 2 or not all(0 <= x < len(keys) for x in e):
            raise InputError(f"edge {e!r} references a missing vertex")
    return LabeledGraph(family, n, k, keys, [tuple(e) for e in edges])


def from_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return from_dict(data)
