"""Exhaustive small-graph corpora, one representative per isomorphism class.

Graphs on n vertices are generated by extending every (n-1)-vertex
representative with a new vertex attached to each possible neighborhood,
then deduplicating with an invariant bucket plus exact isomorphism tests.
Expected class counts (1, 2, 4, 11, 34, 156, 1044 for n = 1..7) are frozen
into the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .coloring import chromatic_number, is_critical
from .graphs import Graph, build_graph, is_connected, is_isomorphic

__all__ = [
    "all_graphs",
    "connected_graphs",
    "graphs_with_min_degree",
    "critical_graphs",
]


def _invariant(G: Graph):
    """Cheap isomorphism-invariant bucket key."""
    degrees = tuple(len(G.adj[v]) for v in range(G.n))
    neighbor_degrees = tuple(
        sorted(tuple(sorted(degrees[u] for u in G.adj[v])) for v in range(G.n))
    )
    triangles = sum(len(G.adj[u] & G.adj[v]) for u, v in G.edges()) // 3
    return (G.n, G.m, tuple(sorted(degrees)), neighbor_degrees, triangles)


def _dedupe(candidates) -> list[Graph]:
    """Keep the first representative of each isomorphism class, in order."""
    buckets: dict[object, list[Graph]] = {}
    reps: list[Graph] = []
    for G in candidates:
        key = _invariant(G)
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(G, H) for H in bucket):
            bucket.append(G)
            reps.append(G)
    return reps


def _extensions(parent: Graph, neighborhoods) -> list[Graph]:
    """Attach one new vertex to the parent for each allowed neighborhood."""
    n = parent.n + 1
    base_edges = parent.edges()
    out = []
    for S in neighborhoods:
        out.append(build_graph(n, base_edges + [(u, n - 1) for u in S]))
    return out


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("vertex count must be >= 1")
    if n == 1:
        return (build_graph(1, []),)
    parents = all_graphs(n - 1)
    neighborhoods = [
        S for size in range(n) for S in combinations(range(n - 1), size)
    ]
    candidates = (
        H for parent in parents for H in _extensions(parent, neighborhoods)
    )
    return tuple(_dedupe(candidates))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Connected representatives among all_graphs(n)."""
    return tuple(G for G in all_graphs(n) if is_connected(G))


@lru_cache(maxsize=None)
def graphs_with_min_degree(n: int, dmin: int) -> tuple[Graph, ...]:
    """All graphs on n vertices with minimum degree >= dmin, up to isomorphism.

    Deleting a vertex lowers each remaining degree by at most one, so every
    such graph extends an (n-1)-vertex graph of minimum degree >= dmin - 1,
    with the new neighborhood covering every parent vertex of degree
    dmin - 1 and having size >= dmin.
    """
    if n < 1:
        raise ValueError("vertex count must be >= 1")
    if dmin <= 0:
        return all_graphs(n)
    if n == 1:
        return ()
    if dmin > n - 1:
        return ()
    parents = graphs_with_min_degree(n - 1, dmin - 1)
    candidates = []
    for parent in parents:
        deficient = frozenset(
            v for v in range(parent.n) if len(parent.adj[v]) < dmin
        )
        optional = [v for v in range(parent.n) if v not in deficient]
        need = max(dmin - len(deficient), 0)
        neighborhoods = [
            tuple(sorted(deficient | set(extra)))
            for size in range(need, len(optional) + 1)
            for extra in combinations(optional, size)
        ]
        candidates.extend(_extensions(parent, neighborhoods))
    return tuple(_dedupe(candidates))


@lru_cache(maxsize=None)
def critical_graphs(n: int) -> tuple[tuple[Graph, int], ...]:
    """All vertex-critical graphs on exactly n vertices, with chromatic number.

    For n <= 7 this filters the connected representatives directly.  For
    n == 8 the candidate pool shrinks first: a critical graph with
    chromatic number k has minimum degree >= k - 1 (otherwise a proper
    (k-1)-coloring of G - v would extend across a low-degree v), the only
    2-critical graph is a single edge, and every 3-critical graph is an odd
    cycle -- so on 8 vertices only k >= 4 survives, forcing degree >= 3.
    """
    if not 1 <= n <= 8:
        raise ValueError("supported vertex counts are 1..8")
    if n <= 7:
        pool = connected_graphs(n)
    else:
        pool = tuple(
            G for G in graphs_with_min_degree(8, 3) if is_connected(G)
        )
    out = []
    for G in pool:
        critical, chi, _ = is_critical(G)
        if critical:
            out.append((G, chi))
    return tuple(out)
