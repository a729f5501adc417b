"""Brute-force reference computations, written against the definitions only."""
from itertools import combinations, groupby, product


def pell_strings_brute(n, k):
    out = []
    for word in product(range(k + 1), repeat=n):
        if all(len(list(g)) % 2 == 0 for s, g in groupby(word) if s == k):
            out.append(word)
    return out


def munarini_adjacent(u, v, k):
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diff) == 1:
        i = diff[0]
        return {u[i], v[i]} in [{0, j} for j in range(1, k)]
    if len(diff) == 2 and diff[1] == diff[0] + 1:
        i = diff[0]
        return {u[i:i + 2], v[i:i + 2]} == {(0, 0), (k, k)}
    return False


def genpell_adjacent(u, v, k):
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diff) == 1:
        i = diff[0]
        return abs(u[i] - v[i]) == 1 and max(u[i], v[i]) <= k - 1
    if len(diff) == 2 and diff[1] == diff[0] + 1:
        i = diff[0]
        return {u[i:i + 2], v[i:i + 2]} == {(k - 1, k - 1), (k, k)}
    return False


def brute_edges(vertices, adjacent):
    return {(i, j) for i, j in combinations(range(len(vertices)), 2)
            if adjacent(vertices[i], vertices[j])}


def ank_words_brute(n, k):
    count = 0
    for word in product(range(2 * k + 1), repeat=n):
        if all(len(list(g)) % 2 == 0 for s, g in groupby(word) if s in (0, 1)):
            count += 1
    return count


def jacobsthal(n):
    return (2 ** n - (-1) ** n) // 3


def four_cycles(G):
    """Number of 4-cycles; in a bipartite graph each one is an induced Q_2."""
    total = 0
    for u, v in combinations(range(G.order()), 2):
        c = len(set(G.adj[u]) & set(G.adj[v]))
        total += c * (c - 1) // 2
    return total // 2


def interval_cubes(E):
    """(bottom, top) label pairs, bottom <= top, whose whole interval is present."""
    labels = set(E.labels)
    out = []
    for b in E.labels:
        for t in E.labels:
            if b & ~t:
                continue
            free = [1 << i for i in range(E.m) if (t ^ b) >> i & 1]
            if all(b | sum(s) in labels for r in range(len(free) + 1) for s in combinations(free, r)):
                out.append((b, t, len(free)))
    return out


def bfs_all(G):
    from collections import deque
    out = []
    for s in range(G.order()):
        d = [-1] * G.order()
        d[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in G.adj[v]:
                if d[w] < 0:
                    d[w] = d[v] + 1
                    q.append(w)
        out.append(d)
    return out


def local_edge_count(vertices, adjacent, k):
    """Edges found by perturbing one symbol or two adjacent symbols of each vertex.

    Any rewrite edge changes at most two consecutive positions, so this
    finds every edge without the quadratic pair scan.
    """
    present = set(vertices)
    alphabet = range(k + 1)
    found = set()
    for u in vertices:
        n = len(u)
        for i in range(n):
            for a in alphabet:
                v = u[:i] + (a,) + u[i + 1:]
                if v != u and v in present and adjacent(u, v, k):
                    found.add(frozenset((u, v)))
            for a, b in product(alphabet, repeat=2):
                if i + 1 < n:
                    v = u[:i] + (a, b) + u[i + 2:]
                    if v != u and v in present and adjacent(u, v, k):
                        found.add(frozenset((u, v)))
    return len(found)


def pell_numbers(count):
    p = [0, 1]
    while len(p) < count:
        p.append(2 * p[-1] + p[-2])
    return p
