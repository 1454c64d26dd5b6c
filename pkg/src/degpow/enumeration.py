"""Isomorph-free exhaustive generation of small graphs and extremal search.

Canonical form: the lexicographically minimal upper-triangle adjacency bit
string (graph6 column order) over all vertex relabelings, found by
backtracking.  At each position only vertices attaining the minimal next
column can start an optimal completion, which prunes the search to those
ties; ties that are swappable by a transposition automorphism collapse to
one branch, so highly symmetric graphs stay cheap.

Generation walks edge counts level by level from the empty graph: every
class at level m+1 has a parent at level m under any hereditary filter, so
expanding each canonical representative by one edge (modulo detected
transposition automorphisms) and deduplicating children by canonical form
visits exactly one representative per class, in a deterministic
(edge count, canonical form) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import structure
from .graphs import Graph, add_edge, ep, new_graph, permute, to_graph6

ENUM_HARD_CAP = 10
ENUM_FAST_CAP = 8  # beyond this an explicit opt-in is required


def _canon_search(n: int, adj: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Minimal column sequence and the permutation (position -> vertex)."""
    if n == 1:
        return [0], [0]
    tau = _transposition_automorphisms(n, adj)
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    gen = 0
    cols: list[int] = []
    perm: list[int] = []

    def dfs(depth: int, state: int, colvals: list[int], unassigned: int) -> None:
        nonlocal best_cols, best_perm, gen
        if depth == n:
            if state or best_cols is None:
                best_cols = cols.copy()
                best_perm = perm.copy()
                gen += 1
            return
        # one pass: minimal column value and its tau-deduplicated attainers
        m = 1 << 60
        kept: list[int] = []
        keptmask = 0
        mask = unassigned
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            cv = colvals[v]
            if cv < m:
                m = cv
                kept = [v]
                keptmask = low
            elif cv == m and not (tau[v] & keptmask):
                kept.append(v)
                keptmask |= low
        if best_cols is not None and state == 0:
            b = best_cols[depth]
            if m > b:
                return
            child_state = 1 if m < b else 0
        else:
            child_state = state
        cols.append(m)
        entry_gen = gen
        for v in kept:
            if gen != entry_gen:
                # a descendant replaced the incumbent; its prefix equals ours
                child_state = 0
                entry_gen = gen
            rest = unassigned & ~(1 << v)
            cv2 = colvals.copy()
            av = adj[v]
            mask = rest
            while mask:
                low = mask & -mask
                w = low.bit_length() - 1
                cv2[w] = (cv2[w] << 1) | ((av >> w) & 1)
                mask ^= low
            perm.append(v)
            dfs(depth + 1, child_state, cv2, rest)
            perm.pop()
        cols.pop()

    dfs(0, 0, [0] * n, (1 << n) - 1)
    assert best_cols is not None and best_perm is not None
    return best_cols, best_perm


def _transposition_automorphisms(n: int, adj: tuple[int, ...]) -> list[int]:
    """tau[u] = bitset of v such that swapping u and v preserves adjacency."""
    tau = [0] * n
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            mask = ~((1 << u) | (1 << v))
            if au & mask == adj[v] & mask:
                tau[u] |= 1 << v
                tau[v] |= 1 << u
    return tau


def canonical_form(g: Graph, limit: int = ENUM_HARD_CAP) -> bytes:
    """Canonical byte string: order byte, then the minimal packed triangle.

    Two graphs have equal canonical form iff they are isomorphic.
    """
    if g.n > limit:
        raise ValueError(f"canonical form limited to n <= {limit}, got n={g.n}")
    cols, _ = _canon_search(g.n, g.adj)
    return bytes([g.n]) + _pack_cols(g.n, cols)


def _pack_cols(n: int, cols: list[int]) -> bytes:
    big = 0
    for d in range(1, n):
        big = (big << d) | cols[d]
    nbits = n * (n - 1) // 2
    return big.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph, limit: int = ENUM_HARD_CAP) -> Graph:
    """The canonically relabeled copy of g."""
    if g.n > limit:
        raise ValueError(f"canonical form limited to n <= {limit}, got n={g.n}")
    return _canon_pair(g)[1]


def _canon_pair(g: Graph) -> tuple[bytes, Graph]:
    # canonical form and relabeled graph from a single search
    cols, perm = _canon_search(g.n, g.adj)
    sigma = [0] * g.n
    for pos, v in enumerate(perm):
        sigma[v] = pos
    return bytes([g.n]) + _pack_cols(g.n, cols), permute(g, sigma)


@dataclass(frozen=True)
class SearchPredicate:
    """Conjunction of hereditary prune filters and leaf filters.

    c4_free, even_cycle_free and max_edges are monotone under edge addition
    and prune generation subtrees; the rest apply to finished graphs only.
    """

    c4_free: bool = False
    even_cycle_free: bool = False
    max_edges: int | None = None
    min_degree: int | None = None
    minimally_connected: int | None = None
    minimally_edge_connected: int | None = None
    degenerate: int | None = None

    def hereditary_key(self, n: int) -> tuple[bool, bool, int]:
        cap = n * (n - 1) // 2
        if self.max_edges is not None:
            cap = min(cap, self.max_edges)
        return (self.c4_free, self.even_cycle_free, cap)

    def leaf_ok(self, g: Graph) -> bool:
        if self.min_degree is not None:
            if min(a.bit_count() for a in g.adj) < self.min_degree:
                return False
        if self.minimally_connected is not None:
            if not structure.is_minimally_t_connected(g, self.minimally_connected):
                return False
        if self.minimally_edge_connected is not None:
            if not structure.is_minimally_t_edge_connected(g, self.minimally_edge_connected):
                return False
        if self.degenerate is not None:
            if not structure.is_k_degenerate(g, self.degenerate):
                return False
        return True

    def describe(self) -> str:
        parts = []
        if self.c4_free:
            parts.append("c4_free")
        if self.even_cycle_free:
            parts.append("even_cycle_free")
        if self.max_edges is not None:
            parts.append(f"max_edges={self.max_edges}")
        if self.min_degree is not None:
            parts.append(f"min_degree={self.min_degree}")
        if self.minimally_connected is not None:
            parts.append(f"minimally_{self.minimally_connected}_connected")
        if self.minimally_edge_connected is not None:
            parts.append(f"minimally_{self.minimally_edge_connected}_edge_connected")
        if self.degenerate is not None:
            parts.append(f"{self.degenerate}_degenerate")
        return ",".join(parts) if parts else "all"


_CLASS_CACHE: dict[tuple[int, bool, bool, int], tuple[Graph, ...]] = {}


def _creates_c4(adj: tuple[int, ...], u: int, v: int) -> bool:
    # parent is C4-free and uv is a non-edge; any new C4 runs through uv
    au = adj[u]
    mask = adj[v]
    while mask:
        low = mask & -mask
        if adj[low.bit_length() - 1] & au:
            return True
        mask ^= low
    return False


def _pair_equiv(tau: list[int], a: int, b: int, u: int, v: int) -> bool:
    # is some product of detected transpositions mapping {a,b} to {u,v}?
    if a == u:
        return b == v or bool((tau[b] >> v) & 1)
    if b == v:
        return bool((tau[a] >> u) & 1)
    if a in (b, v) or u in (b, v):
        return False
    return bool((tau[a] >> u) & 1) and bool((tau[b] >> v) & 1)


def _candidate_edges(g: Graph) -> list[tuple[int, int]]:
    """Non-edges, one per orbit of the detected transposition automorphisms."""
    tau = _transposition_automorphisms(g.n, g.adj)
    non_edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not (g.adj[u] >> v) & 1
    ]
    if not any(tau):
        return non_edges
    kept: list[tuple[int, int]] = []
    for u, v in non_edges:
        if not any(
            _pair_equiv(tau, a, b, u, v) or _pair_equiv(tau, a, b, v, u)
            for a, b in kept
        ):
            kept.append((u, v))
    return kept


def _classes(n: int, hkey: tuple[bool, bool, int]) -> tuple[Graph, ...]:
    """All isomorphism classes passing the hereditary filters, in
    (edge count, canonical form) order, as canonical representatives."""
    cached = _CLASS_CACHE.get((n, *hkey))
    if cached is not None:
        return cached
    c4f, ecf, cap = hkey
    accepted: list[Graph] = []
    level: dict[bytes, Graph] = {canonical_form(new_graph(n, [])): new_graph(n, [])}
    m = 0
    while level:
        reps = [level[key] for key in sorted(level)]
        accepted.extend(reps)
        if m == cap:
            break
        nxt: dict[bytes, Graph] = {}
        for g in reps:
            for u, v in _candidate_edges(g):
                if c4f and _creates_c4(g.adj, u, v):
                    continue
                child = add_edge(g, u, v)
                if ecf and structure.has_even_cycle(child):
                    continue
                key, rep = _canon_pair(child)
                if key not in nxt:
                    nxt[key] = rep
        level = nxt
        m += 1
    assert len({canonical_form(g) for g in accepted}) == len(accepted)
    result = tuple(accepted)
    _CLASS_CACHE[(n, *hkey)] = result
    return result


def enumerate_graphs(
    n: int,
    pred: SearchPredicate = SearchPredicate(),
    visit: Callable[[Graph], None] | None = None,
    *,
    large: bool = False,
) -> int:
    """Visit one canonical representative per isomorphism class passing pred.

    Returns the number visited.  Visit order is deterministic: increasing
    edge count, then canonical form.  n=9,10 must be opted into via large.
    """
    if not 1 <= n <= ENUM_HARD_CAP:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUM_HARD_CAP}")
    if n > ENUM_FAST_CAP and not large:
        raise ValueError(
            f"n={n} enumeration is slow; pass large=True (CLI: set DEGPOW_MAX_N)"
        )
    count = 0
    for g in _classes(n, pred.hereditary_key(n)):
        if pred.leaf_ok(g):
            count += 1
            if visit is not None:
                visit(g)
    return count


@dataclass(frozen=True)
class ExtremalReport:
    """Result of an extremal degree-power search over a predicate class.

    witnesses holds every extremal graph up to isomorphism as graph6 of the
    canonical representative, sorted by canonical form; graphs_examined is
    the number of classes that satisfied the predicate.  max_value is None
    iff the class is empty.
    """

    n: int
    p: int
    predicate: str
    max_value: int | None
    witnesses: tuple[str, ...]
    graphs_examined: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "predicate": self.predicate,
            "max_value": self.max_value,
            "witnesses": list(self.witnesses),
            "graphs_examined": self.graphs_examined,
        }


def extremal_ep(
    n: int, p: int, pred: SearchPredicate = SearchPredicate(), *, large: bool = False
) -> ExtremalReport:
    """Maximize the degree power over the predicate class, keeping all ties."""
    if p < 1:
        raise ValueError("p must be >= 1")
    best: int | None = None
    wits: list[Graph] = []

    def visit(g: Graph) -> None:
        nonlocal best
        value = ep(g, p)
        if best is None or value > best:
            best = value
            wits.clear()
            wits.append(g)
        elif value == best:
            wits.append(g)

    examined = enumerate_graphs(n, pred, visit, large=large)
    ordered = sorted(wits, key=canonical_form)
    return ExtremalReport(
        n=n,
        p=p,
        predicate=pred.describe(),
        max_value=best,
        witnesses=tuple(to_graph6(w).decode("ascii") for w in ordered),
        graphs_examined=examined,
    )
