"""Property suites run by ``munarini verify``.

Each suite walks a parameter box and yields one :class:`Check` per assertion.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import graphs as gr
from . import hypercube_analysis as ha
from . import polynomials as pl
from . import strings as st

SUITES = ("structure", "isometry", "daisy", "median", "identities", "oracle")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  [{self.detail}]" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}{tail}"


def _box(n_max: int, k_max: int, n_min: int = 0, k_min: int = 1) -> Iterator[tuple[int, int]]:
    for k in range(k_min, k_max + 1):
        for n in range(n_min, n_max + 1):
            yield n, k


def _check(name: str, fn: Callable[[], object]) -> Check:
    try:
        result = fn()
    except Exception as exc:  # report, do not abort the suite
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(result, tuple):
        ok, detail = result
        return Check(name, bool(ok), str(detail))
    if isinstance(result, ha.CheckResult):
        return Check(name, result.ok, result.detail if result.ok else f"{result.detail} {result.witness}")
    return Check(name, bool(result))


# ---------------------------------------------------------------------------

def structure_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for n, k in _box(n_max, k_max):
        G = gr.build_munarini(n, k)
        tag = f"M({n},{k})"
        strings = st.enumerate_pell_strings(n, k)
        yield _check(f"{tag} order = F(n+1,k)",
                     lambda: (G.order() == len(strings) == pl.fib_k(n + 1, k), G.order()))
        yield _check(f"{tag} strings valid", lambda: all(st.is_pell_string(s.symbols, k) for s in strings))
        yield _check(f"{tag} size recurrence",
                     lambda: (G.size() == gr.count_edges_recurrence(n, k), G.size()))
        if n >= 1:
            yield _check(f"{tag} size closed form",
                         lambda: G.size() == gr.count_edges_closed_form(n, k))
            zero = (0,) * n
            yield _check(f"{tag} deg(0^n) = kn-1",
                         lambda: gr.degree(G, zero) == k * n - 1)
            yield _check(f"{tag} weight = distance to 0^n", lambda: (
                lambda dist: all(st.weight(s) == dist[G.index_of(s)] for s in strings)
            )(gr.bfs_distances(G, zero)))
        yield _check(f"{tag} codec round trip", lambda: all(
            st.decode_psi(st.encode_psi(s), k) == s for s in strings))
        yield _check(f"{tag} connected and bipartite",
                     lambda: gr.is_connected(G) and gr.is_bipartite(G))
        yield _check(f"{tag} JSON round trip", lambda: gr.from_json(gr.to_json(G)) == G)
        if k >= 2:
            P = gr.build_generalized_pell(n, k)
            yield _check(f"Pi({n},{k}) size = |E(M)|", lambda: P.size() == G.size())
        if n >= 2:
            def decomposition_ok():
                d = gr.decompose_munarini(G)
                for i in range(k):
                    if d.part_graph((i,)).edges != gr.build_munarini(n - 1, k).edges:
                        return False, f"part {i}"
                if d.part_graph((k, k)).edges != gr.build_munarini(n - 2, k).edges:
                    return False, "kk part"
                ok = len(d.matching) == len(d.parts[(k, k)]) and all(
                    G.keys[b][:2] == (0, 0) for _, b in d.matching)
                return ok, f"matching {len(d.matching)}"
            yield _check(f"{tag} decomposition", decomposition_ok)
        if n >= 1 and k == 1:
            yield _check(f"M({n},1) ~ Gamma({n - 1})", lambda: bool(gr.iso_to_fibonacci(n)))
        if n >= 1 and k == 2:
            yield _check(f"M({n},2) ~ Pi({n})", lambda: bool(gr.iso_to_pell(n)))
    yield _check(f"star S({k_max - 1}) = M(1,{k_max})",
                 lambda: gr.build_star(k_max).edges == gr.build_munarini(1, k_max).edges)
    yield _check(f"Q({n_max}) size", lambda: gr.build_hypercube(n_max).size() == n_max * 2 ** max(n_max - 1, 0))


def isometry_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for n, k in _box(n_max, k_max):
        E = ha.embed_munarini(gr.build_munarini(n, k))
        yield _check(f"M({n},{k}) Psi labeling isometric", lambda: ha.check_isometric(E))
        if k >= 2:
            yield _check(f"Pi({n},{k}) computed labeling isometric",
                         lambda: ha.check_isometric(ha.embed_partial_cube(gr.build_generalized_pell(n, k))))


def daisy_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for n, k in _box(n_max, k_max):
        E = ha.embed_munarini(gr.build_munarini(n, k))
        rep = ha.check_daisy(E)
        yield Check(f"M({n},{k}) daisy", rep.is_daisy, "" if rep.is_daisy else str(rep.witness))
        if k >= 2:
            expected = {st.encode_psi(u).to_int() for u in st.enumerate_maximal_strings(n, k)}
            yield Check(f"M({n},{k}) maximal vertices = Psi(no-zero strings)",
                        rep.maximal_vertices == expected, f"{len(expected)} maximal")


def median_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for n, k in _box(n_max, k_max):
        E = ha.embed_munarini(gr.build_munarini(n, k))
        yield _check(f"M({n},{k}) median closed", lambda: ha.check_median_closed(E))
        if E.graph.order() >= 3:
            yield _check(f"M({n},{k}) median(u,u,v) = u", lambda: ha.median(E, 0, 0, E.graph.order() - 1) == 0)


def identities_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for k in range(1, k_max + 1):
        yield _check(f"k={k} order series", lambda: pl.series_coefficients(pl.order_gf(k), n_max)
                     == [pl.fib_k(n + 1, k) for n in range(n_max + 1)])
        yield _check(f"k={k} size series", lambda: pl.series_coefficients(pl.size_gf(k), n_max)
                     == [gr.count_edges_recurrence(n, k) for n in range(n_max + 1)])
        yield _check(f"k={k} size decomposition", lambda: pl.size_identity_residual(k).is_zero())
        yield _check(f"k={k} cube numbers", lambda: pl.cube_number_series(k, n_max)
                     == [st.count_ank_words(n, k) for n in range(n_max + 1)])
    for n, k in _box(n_max, k_max):
        tag = f"({n},{k})"
        W, C = pl.weight_poly(n, k), pl.cube_poly(n, k)
        yield _check(f"W{tag} three ways", lambda: W == pl.weight_poly_series(n, k) == pl.weight_poly_formula(n, k))
        yield _check(f"C{tag} three ways", lambda: C == pl.cube_poly_series(n, k)
                     == pl.cube_poly_formula(n, k) == pl.cube_poly_recurrence(n, k))
        yield _check(f"C{tag} = W(x+1)", lambda: C == W.shift(1))
        yield _check(f"D{tag} = C(x+q-1)", lambda: pl.distance_cube_poly(n, k)
                     == W(ha.BiPoly.x() + ha.BiPoly.q()))
        yield _check(f"C{tag}(-1) = 1", lambda: C(-1) == 1)
        yield _check(f"C{tag}(0) = F(n+1,k)", lambda: C(0) == pl.fib_k(n + 1, k))
        yield _check(f"C{tag}(1) = |A(n,k)|", lambda: pl.cube_number(n, k) == st.count_ank_words(n, k))
        edges = gr.count_edges_recurrence(n, k)
        yield _check(f"W'{tag}(1) = |E|", lambda: W.derivative()(1) == edges
                     and (n == 0 or pl.total_weight(n, k) == gr.count_edges_closed_form(n, k) == C[1]))
        if k >= 2:
            H = pl.maximal_cube_poly(n, k)
            yield _check(f"H{tag} three ways", lambda: H == pl.maximal_cube_poly_series(n, k)
                         == pl.maximal_cube_poly_formula(n, k))
            yield _check(f"H{tag} vanishes below n/2", lambda: all(H[p] == 0 for p in range(n + 1) if 2 * p < n))
        if n >= 1 and k >= 2:
            def witness():
                rep = pl.max_degree_witness(n, k)
                ok = rep["weight_linear_coeff"] == rep["zero_vertex_degree"] == k * n - 1
                if k >= 3 and n >= 2:
                    ok = ok and rep["genpell_max_degree"] == 2 * n and rep["contradiction"]
                return ok, f"kn-1={k * n - 1}, Delta(Pi)={rep['genpell_max_degree']}"
            yield _check(f"max degree witness {tag}", witness)


def oracle_suite(n_max: int, k_max: int) -> Iterator[Check]:
    for n, k in _box(n_max, k_max):
        tag = f"({n},{k})"
        G = gr.build_munarini(n, k)
        E = ha.embed_munarini(G)
        prof = ha.cube_profile(E)
        yield _check(f"W{tag} = weight histogram", lambda: ha.weight_histogram(G, 0) == pl.weight_poly(n, k))
        yield _check(f"C{tag} = cube census", lambda: prof.cube_poly == pl.cube_poly(n, k))
        yield _check(f"D{tag} = distance census", lambda: ha.distance_census_poly(prof.distance)
                     == pl.distance_cube_poly(n, k))
        if k >= 2:
            yield _check(f"H{tag} = maximal cube census", lambda: prof.maximal_poly == pl.maximal_cube_poly(n, k))
            P = ha.embed_partial_cube(gr.build_generalized_pell(n, k))
            pprof = ha.cube_profile(P, origin=0, safeguard=False)
            yield _check(f"Pi{tag} cube census = C", lambda: pprof.cube_poly == pl.cube_poly(n, k))
            yield _check(f"Pi{tag} maximal census = H", lambda: pprof.maximal_poly == pl.maximal_cube_poly(n, k))


_RUNNERS = {
    "structure": structure_suite,
    "isometry": isometry_suite,
    "daisy": daisy_suite,
    "median": median_suite,
    "identities": identities_suite,
    "oracle": oracle_suite,
}


def run(suite: str, n_max: int, k_max: int) -> Iterator[Check]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from _RUNNERS[name](n_max, k_max)


def instance_checks(suite: str, family: str, n: int, k: int) -> Iterator[Check]:
    """Checks for one built graph, using its default embedding."""
    G = gr.build(family, n, k)
    tag = f"{family}({n},{k})"
    try:
        E = ha.embed(G)
    except Exception as exc:
        yield Check(f"{tag} embedding", False, f"{type(exc).__name__}: {exc}")
        return
    names = ("isometry", "daisy", "median") if suite == "all" else (suite,)
    for name in names:
        if name == "isometry":
            yield _check(f"{tag} isometric", lambda: ha.check_isometric(E))
        elif name == "daisy":
            yield _check(f"{tag} is a daisy cube", lambda: ha.find_daisy_root(E))
        elif name == "median":
            yield _check(f"{tag} median closed", lambda: ha.check_median_closed(E))
        else:
            yield Check(f"{tag} {name}", False, "suite not available for a single instance")
