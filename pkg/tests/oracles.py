"""Independent brute-force oracles used to freeze expected values in the tests.

Nothing here calls into the package search code beyond the ``Graph`` container.
"""

from __future__ import annotations

from itertools import combinations, permutations


def edges_of(g):
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1]


def cliques_of(g, min_size=2):
    out = []
    for k in range(min_size, g.n + 1):
        for s in combinations(range(g.n), k):
            if all(g.adj[a] >> b & 1 for a, b in combinations(s, 2)):
                out.append(frozenset(s))
    return out


def has_cover_bruteforce(g, r):
    """Include/exclude recursion over the clique list with per-vertex load pruning."""
    cl = cliques_of(g)
    edges = edges_of(g)
    last = {}
    for i, c in enumerate(cl):
        for e in combinations(sorted(c), 2):
            last[e] = i
    load = [0] * g.n
    covered = {e: 0 for e in edges}

    def rec(i):
        if all(covered.values()):
            return True
        if i == len(cl):
            return False
        for e, c in covered.items():
            if not c and last[e] < i:
                return False
        c = cl[i]
        if all(load[v] < r for v in c):
            for v in c:
                load[v] += 1
            pairs = list(combinations(sorted(c), 2))
            for e in pairs:
                covered[e] += 1
            ok = rec(i + 1)
            for e in pairs:
                covered[e] -= 1
            for v in c:
                load[v] -= 1
            if ok:
                return True
        return rec(i + 1)

    return rec(0)


def count_ab_paths(g, a, b):
    """Plain recursive count of (a,b)-paths."""

    def rec(v, seen):
        if v == b:
            return 1
        total = 0
        for w in range(g.n):
            if g.adj[v] >> w & 1 and w not in seen:
                total += rec(w, seen | {w})
        return total

    return rec(a, {a})


def ab_path_vertex_sets(g, a, b):
    sets = set()

    def rec(v, seen):
        if v == b:
            sets.add(frozenset(seen))
            return
        for w in range(g.n):
            if g.adj[v] >> w & 1 and w not in seen:
                rec(w, seen | {w})

    rec(a, {a})
    return sets


def components_avoiding(g, removed):
    rest = [v for v in range(g.n) if v not in removed]
    seen, comps = set(), []
    for s in rest:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for w in rest:
                if w not in comp and g.adj[v] >> w & 1:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def tutte_set(g, vs):
    limit = min(3, len(vs) - 1)
    for comp in components_avoiding(g, vs):
        attach = {p for p in vs for c in comp if g.adj[p] >> c & 1}
        if len(attach) > limit:
            return False
    return True


def tutte_connected_bruteforce(g):
    for a, b in combinations(range(g.n), 2):
        sets = ab_path_vertex_sets(g, a, b)
        maximal = [s for s in sets if not any(s < t for t in sets)]
        if not any(tutte_set(g, s) for s in maximal):
            return False
    return True


def isomorphic_bruteforce(g, h):
    if g.n != h.n:
        return False
    eg = set(edges_of(g))
    for p in permutations(range(h.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in eg for u, v in edges_of(h)) and len(eg) == len(edges_of(h)):
            return True
    return False


def connectivity_bruteforce(g):
    n = g.n
    if n <= 1:
        return 0
    if len(edges_of(g)) == n * (n - 1) // 2:
        return n - 1
    for k in range(0, n - 1):
        for cut in combinations(range(n), k):
            if len(components_avoiding(g, set(cut))) > 1:
                return k
    return n - 1
