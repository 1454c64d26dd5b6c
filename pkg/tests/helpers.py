"""Independent brute-force oracles used only by the test suite.

These deliberately avoid the library's algorithms: connectivity is checked
by removing vertex subsets, even cycles by a from-scratch DFS over paths,
C4s by explicit 4-tuple search, so library results are checked against a
second route everywhere it matters.
"""

from __future__ import annotations

from itertools import combinations

from degpow.graphs import Graph, new_graph


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield new_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def is_connected_after_removal(g: Graph, removed: set[int]) -> bool:
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        u = stack.pop()
        for v in keep:
            if v not in seen and g.has_edge(u, v):
                seen.add(v)
                stack.append(v)
    return len(seen) == len(keep)


def oracle_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects; n-1 for complete graphs."""
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return g.n - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            if not is_connected_after_removal(g, set(cut)):
                return size
    raise AssertionError("non-complete graph must have a cut")


def oracle_has_c4(g: Graph) -> bool:
    """Explicit 4-cycle subgraph search over vertex 4-tuples."""
    for a, b, c, d in combinations(range(g.n), 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, w):
                return True
    return False


def oracle_has_even_cycle(g: Graph) -> bool:
    """DFS over simple paths; reports a cycle of even length."""

    def extend(start: int, path: list[int], visited: set[int]) -> bool:
        u = path[-1]
        for v in range(g.n):
            if not g.has_edge(u, v):
                continue
            if v == start and len(path) >= 3 and len(path) % 2 == 0:
                return True
            if v > start and v not in visited:
                visited.add(v)
                path.append(v)
                if extend(start, path, visited):
                    return True
                path.pop()
                visited.remove(v)
        return False

    return any(extend(s, [s], {s}) for s in range(g.n))


def oracle_edge_connectivity(g: Graph) -> int:
    """Smallest edge subset whose removal disconnects the graph."""
    edges = list(g.edges())
    for size in range(len(edges) + 1):
        for cut in combinations(range(len(edges)), size):
            keep = [e for i, e in enumerate(edges) if i not in cut]
            h = new_graph(g.n, keep)
            if not is_connected_after_removal(h, set()):
                return size
    raise AssertionError("removing all edges of an n>=2 graph disconnects it")


def oracle_degeneracy(g: Graph) -> int:
    """Max over induced subgraphs of their minimum degree (the definition)."""
    best = 0
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub = set(subset)
            mindeg = min(
                sum(1 for w in sub if w != v and g.has_edge(v, w)) for v in sub
            )
            best = max(best, mindeg)
    return best


def oracle_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All cycles as vertex tuples, for count cross-checks."""
    found = []

    def extend(start: int, path: list[int], visited: set[int]) -> None:
        u = path[-1]
        for v in range(g.n):
            if not g.has_edge(u, v):
                continue
            if v == start and len(path) >= 3 and path[1] < path[-1]:
                found.append(tuple(path))
            elif v > start and v not in visited:
                visited.add(v)
                path.append(v)
                extend(start, path, visited)
                path.pop()
                visited.remove(v)

    for s in range(g.n):
        extend(s, [s], {s})
    return found
