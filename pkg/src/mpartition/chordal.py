"""Chordality with certificates, random generation, and exhaustive
enumeration of small connected chordal graphs up to isomorphism.

Recognition runs lexicographic BFS and checks the reversed visit order as a
perfect elimination ordering.  A failed check always yields a chordless
cycle of length at least four, so callers get a verifiable answer either
way.  Enumeration grows graphs one simplicial vertex at a time: removing a
simplicial vertex from a connected graph keeps it connected, so every
connected chordal graph on k+1 vertices arises from one on k vertices by
attaching a new vertex to a non-empty clique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, bits, component_masks, to_graph6


@dataclass(frozen=True)
class ChordalityCertificate:
    """A perfect elimination ordering, or a hole (chordless cycle >= 4)."""

    peo: tuple[int, ...] | None
    hole: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.peo is not None


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order; ties broken toward the lowest vertex id."""
    n = g.n
    label: list[list[int]] = [[] for _ in range(n)]
    order: list[int] = []
    unvisited = set(range(n))
    for step in range(n):
        v = max(unvisited, key=lambda u: (label[u], -u))
        unvisited.discard(v)
        order.append(v)
        for w in bits(g.adj[v]):
            if w in unvisited:
                label[w].append(n - step)
    return order


def verify_peo(g: Graph, order: list[int] | tuple[int, ...]) -> bool:
    """Definition-level check: later neighbours of each vertex are a clique."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in range(g.n):
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if not g.has_edge(a, b):
                    return False
    return True


def verify_hole(g: Graph, hole: tuple[int, ...]) -> bool:
    """Consecutive vertices adjacent, all other pairs non-adjacent, len >= 4."""
    k = len(hole)
    if k < 4 or len(set(hole)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(hole[i], hole[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def is_chordal(g: Graph) -> ChordalityCertificate:
    """Perfect elimination ordering if chordal, otherwise a hole."""
    order = lex_bfs(g)
    peo = order[::-1]
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        for w in later:
            if w != parent and not g.has_edge(parent, w):
                hole = _find_hole(g, hint=(v, parent, w))
                return ChordalityCertificate(None, hole)
    return ChordalityCertificate(tuple(peo), None)


def _hole_through(g: Graph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    # Shortest u-w path avoiding every neighbour of v except u, w closes a
    # chordless cycle with v (path chords are ruled out by minimality).
    banned = (g.adj[v] | 1 << v) & ~(1 << u) & ~(1 << w)
    parent = {u: -1}
    queue = [u]
    while queue:
        nxt = []
        for x in queue:
            for y in bits(g.adj[x] & ~banned):
                if y in parent:
                    continue
                parent[y] = x
                if y == w:
                    path = [w]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    return (v, *path[::-1])
                nxt.append(y)
        queue = nxt
    return None


def _find_hole(
    g: Graph, hint: tuple[int, int, int] | None = None
) -> tuple[int, ...]:
    """Locate a chordless cycle of length >= 4 in a non-chordal graph."""
    if hint is not None:
        hole = _hole_through(g, *hint)
        if hole is not None and verify_hole(g, hole):
            return hole
    # Some mid-path triple of any hole always succeeds, so scan them all.
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if g.has_edge(u, w):
                    continue
                hole = _hole_through(g, v, u, w)
                if hole is not None and verify_hole(g, hole):
                    return hole
    raise ValueError("graph is chordal: no hole exists")


# ---------------------------------------------------------------------------
# random chordal graphs
# ---------------------------------------------------------------------------


def random_chordal(n: int, attach_bias: float = 0.5, seed: int = 0) -> Graph:
    """Random connected chordal graph built by simplicial attachment.

    Each new vertex picks a uniformly random existing vertex, grows a random
    maximal clique around it, and attaches to a non-empty random subset of
    that clique whose size is geometric with parameter ``attach_bias``
    (smaller bias, larger subsets).  The neighbourhood of every added vertex
    is a clique, so the result is chordal, and non-emptiness keeps it
    connected.  Deterministic for fixed ``(n, attach_bias, seed)``.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= attach_bias <= 1.0:
        raise ValueError("attach_bias must lie in [0, 1]")
    rng = random.Random(seed)
    adj = [0] * n
    for v in range(1, n):
        anchor = rng.randrange(v)
        clique = [anchor]
        clique_mask = 1 << anchor
        cand = adj[anchor] & ((1 << v) - 1)
        while cand:
            w = rng.choice(list(bits(cand)))
            clique.append(w)
            clique_mask |= 1 << w
            cand &= adj[w]
        size = 1
        while size < len(clique) and (attach_bias <= 0.0 or rng.random() > attach_bias):
            size += 1
        for w in rng.sample(sorted(clique), size):
            adj[v] |= 1 << w
            adj[w] |= 1 << v
    edges = [(u, v) for u in range(n) for v in bits(adj[u]) if u < v]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# canonical forms (permutation search with refinement pruning, n <= 9)
# ---------------------------------------------------------------------------

MAX_ENUMERATION_N = 9


def _refinement_classes(g: Graph) -> list[list[int]]:
    """Partition vertices by iterated neighbour-colour refinement.

    Class order and membership depend only on the isomorphism type, so a
    canonical relabelling may be searched within colour-respecting
    permutations only.
    """
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[sig[v]] for v in range(g.n)]
        if new == colour:
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_labelling(g: Graph) -> list[int]:
    """Vertex order whose adjacency bitstring is lexicographically minimal
    among all colour-respecting orders.  Isomorphic graphs map to the same
    relabelled graph."""
    n = g.n
    if n == 0:
        return []
    classes = _refinement_classes(g)
    slot_class = [ci for ci, cls in enumerate(classes) for _ in cls]
    available = [list(cls) for cls in classes]
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    cols: list[int] = []
    perm: list[int] = []

    def search(i: int, equal: bool) -> None:
        nonlocal best_cols, best_perm
        if i == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_perm = perm.copy()
            return
        cls = slot_class[i]
        for v in list(available[cls]):
            col = 0
            for j, u in enumerate(perm):
                col |= (g.adj[u] >> v & 1) << j
            if equal and best_cols is not None and col > best_cols[i]:
                continue
            nxt_equal = equal and (best_cols is None or col == best_cols[i])
            available[cls].remove(v)
            perm.append(v)
            cols.append(col)
            search(i + 1, nxt_equal)
            cols.pop()
            perm.pop()
            available[cls].append(v)

    search(0, True)
    assert best_perm is not None
    return best_perm


def canonical_form(g: Graph) -> Graph:
    """Canonically relabelled copy of g."""
    perm = canonical_labelling(g)
    pos = {v: i for i, v in enumerate(perm)}
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def canonical_key(g: Graph) -> str:
    """Canonical graph6 string: equal iff the graphs are isomorphic."""
    return to_graph6(canonical_form(g))


# ---------------------------------------------------------------------------
# enumeration of connected chordal graphs
# ---------------------------------------------------------------------------


def _nonempty_cliques(g: Graph) -> Iterator[int]:
    """All non-empty cliques of g as bitsets (ascending-id extension)."""
    stack = [(1 << v, g.adj[v] & ~((1 << (v + 1)) - 1)) for v in range(g.n)]
    while stack:
        clique, ext = stack.pop()
        yield clique
        for v in bits(ext):
            stack.append((clique | 1 << v, ext & g.adj[v] & ~((1 << (v + 1)) - 1)))


def enumerate_connected_chordal(max_n: int) -> Iterator[Graph]:
    """All connected chordal graphs with up to ``max_n`` vertices, one
    canonical representative per isomorphism class, in increasing order of
    vertex count (canonical-key order within each count)."""
    if not 1 <= max_n <= MAX_ENUMERATION_N:
        raise ValueError(f"max_n must lie in 1..{MAX_ENUMERATION_N}")
    level = {canonical_key(Graph(1)): Graph(1)}
    for key in sorted(level):
        yield level[key]
    for n in range(2, max_n + 1):
        grown: dict[str, Graph] = {}
        for parent in level.values():
            for clique in _nonempty_cliques(parent):
                child = Graph(
                    n, parent.edges() + [(u, n - 1) for u in bits(clique)]
                )
                canon = canonical_form(child)
                grown.setdefault(to_graph6(canon), canon)
        for key in sorted(grown):
            yield grown[key]
        level = grown


def enumeration_counts(max_n: int) -> dict[int, int]:
    """Graphs per vertex count, as emitted by the enumerator."""
    counts: dict[int, int] = {}
    for g in enumerate_connected_chordal(max_n):
        counts[g.n] = counts.get(g.n, 0) + 1
    return counts


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(component_masks(g)) == 1


__all__ = [
    "ChordalityCertificate",
    "MAX_ENUMERATION_N",
    "canonical_form",
    "canonical_key",
    "canonical_labelling",
    "enumerate_connected_chordal",
    "enumeration_counts",
    "is_chordal",
    "is_connected",
    "lex_bfs",
    "random_chordal",
    "verify_hole",
    "verify_peo",
]
