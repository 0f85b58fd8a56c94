"""Isomorphism-free generation of free trees and small connected graphs.

Free trees are generated directly in centroid-rooted canonical form. A tree
with a single centroid is a root whose branches all have fewer than n/2
vertices; a bicentroidal tree is an unordered pair of rooted halves with
exactly n/2 vertices each. Rooted branches are built from a memoised,
totally ordered catalogue of canonical rooted trees, and a free tree is
emitted as a non-increasing multiset of catalogue entries, so every
isomorphism class appears once. The degree bound is applied while the
catalogue and the multisets are built.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .graph import (
    SimpleGraph,
    degree_vector,
    graph_canonical_code,
    is_connected,
    is_tree,
)

# A rooted tree is the sorted tuple of its child subtrees.
Rooted = Tuple["Rooted", ...]

MAX_CONNECTED_ORDER = 7


class EnumerationError(ValueError):
    pass


def _multisets(
    catalogue: Sequence[Tuple[Rooted, int]], total: int, max_parts: int, start: int = 0
) -> Iterator[List[int]]:
    """Non-decreasing index lists into ``catalogue`` whose sizes sum to ``total``."""
    if total == 0:
        yield []
        return
    if max_parts == 0:
        return
    for i in range(start, len(catalogue)):
        size = catalogue[i][1]
        if size > total:
            continue
        for rest in _multisets(catalogue, total - size, max_parts - 1, i):
            yield [i] + rest


@lru_cache(maxsize=None)
def _catalogue(max_size: int, child_cap: int) -> Tuple[Tuple[Rooted, int], ...]:
    """All rooted trees of at most ``max_size`` vertices in a fixed order.

    Every vertex has at most ``child_cap`` children (``-1`` = unbounded).
    Larger trees come first; within a size the order is generation order.
    """
    out: List[Tuple[Rooted, int]] = []
    for size in range(max_size, 0, -1):
        out.extend((t, size) for t in _rooted_of_size(size, child_cap))
    return tuple(out)


@lru_cache(maxsize=None)
def _rooted_of_size(size: int, child_cap: int) -> Tuple[Rooted, ...]:
    if size == 1:
        return ((),)
    cat = _catalogue(size - 1, child_cap)
    cap = size - 1 if child_cap < 0 else child_cap
    return tuple(tuple(cat[i][0] for i in idx) for idx in _multisets(cat, size - 1, cap))


def _child_cap(max_degree: Optional[int]) -> int:
    return -1 if max_degree is None else max_degree - 1


def _graph_from_roots(roots: Sequence[Rooted], n: int, link_roots: bool) -> SimpleGraph:
    """Build a graph from one rooted tree, or two rooted halves joined at their roots."""
    edges = []
    next_id = 0
    root_ids = []
    for root in roots:
        root_id = next_id
        root_ids.append(root_id)
        next_id += 1
        stack = [(root, root_id)]
        while stack:
            node, vid = stack.pop()
            for child in node:
                cid = next_id
                next_id += 1
                edges.append((vid, cid))
                stack.append((child, cid))
    if link_roots:
        edges.append((root_ids[0], root_ids[1]))
    assert next_id == n
    return SimpleGraph.from_edges(n, edges)


def _check_tree_params(n: int, max_degree: Optional[int]) -> None:
    if n < 1:
        raise EnumerationError("order must be >= 1")
    if max_degree is not None and (max_degree < 1 or (max_degree < 2 and n >= 3)):
        raise EnumerationError(f"no tree of order {n} has maximum degree <= {max_degree}")


def enumerate_free_trees(
    n: int,
    max_degree: Optional[int] = None,
    partition: Tuple[int, int] = (0, 1),
) -> Iterator[SimpleGraph]:
    """Yield one tree per isomorphism class of order ``n``.

    ``max_degree`` bounds every vertex degree (4 gives molecular trees).
    ``partition=(k, K)`` restricts output to the k-th of K disjoint slices,
    split on the largest branch at the centroid; the union over k is the
    full, duplicate-free stream. Order is deterministic.
    """
    _check_tree_params(n, max_degree)
    k, parts = partition
    if not 0 <= k < parts:
        raise EnumerationError("partition index out of range")
    if n == 1:
        if k == 0:
            yield SimpleGraph(1, ((),))
        return
    child_cap = _child_cap(max_degree)
    root_cap = n - 1 if max_degree is None else max_degree

    # Single centroid: branches of size < n/2.
    cat = _catalogue((n - 1) // 2, child_cap)
    for idx in _multisets(cat, n - 1, root_cap):
        if idx[0] % parts != k:
            continue
        root = tuple(cat[i][0] for i in idx)
        yield _graph_from_roots([root], n, link_roots=False)

    # Two centroids: halves of exactly n/2 vertices.
    if n % 2 == 0:
        halves = _rooted_of_size(n // 2, child_cap)
        for i, a in enumerate(halves):
            if i % parts != k:
                continue
            for b in halves[i:]:
                yield _graph_from_roots([a, b], n, link_roots=True)


def count_free_trees(n: int, max_degree: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_free_trees(n, max_degree))


def enumerate_connected_graphs(n: int) -> List[SimpleGraph]:
    """One representative per isomorphism class of connected graphs of order ``n``.

    Grows graphs edge by edge from the empty graph, deduplicating every
    level by :func:`graph_canonical_code`. Only supports ``n <= 7``.
    """
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise EnumerationError(f"connected-graph enumeration supports 1 <= n <= {MAX_CONNECTED_ORDER}")
    if n == 1:
        return [SimpleGraph(1, ((),))]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    level = {graph_canonical_code(SimpleGraph(n, ((),) * n)): frozenset()}
    found = {}
    for _ in range(len(pairs)):
        nxt = {}
        for edges in level.values():
            for p in pairs:
                if p in edges:
                    continue
                new = edges | {p}
                g = SimpleGraph.from_edges(n, new)
                code = graph_canonical_code(g)
                if code not in nxt:
                    nxt[code] = new
        for code, edges in nxt.items():
            g = SimpleGraph.from_edges(n, sorted(edges))
            if is_connected(g):
                found[code] = g
        level = nxt
    return [found[c] for c in sorted(found)]


# -- extremal families -----------------------------------------------------


def make_star(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleGraph.from_edges(n, ((0, v) for v in range(1, n)))


def make_path(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SimpleGraph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def is_min_family(t: SimpleGraph, n: int) -> bool:
    """Whether ``t`` has the structure of the HA minimisers for order ``n``.

    n = 0 (mod 3): no degree-3 vertex, exactly one degree-2 vertex, whose
    two neighbours both have degree 4. n = 1 (mod 3): the same with two
    degree-2 vertices. n = 2 (mod 3): no vertex of degree 2 or 3.
    """
    if t.n != n or n < 6 or n in (6, 7, 10):
        raise ValueError(f"is_min_family needs order n >= 6 outside {{6, 7, 10}}, got n={n}")
    if not is_tree(t) or t.max_degree() > 4:
        raise ValueError("expected a molecular tree")
    dv = degree_vector(t)
    if dv[3] != 0:
        return False
    want_twos = {0: 1, 1: 2, 2: 0}[n % 3]
    if dv[2] != want_twos:
        return False
    degs = t.degrees
    return all(
        all(degs[u] == 4 for u in t.adjacency[v]) for v in range(n) if degs[v] == 2
    )


def _fig1c() -> SimpleGraph:
    # degree-3 vertex 0 with one pendant (1) and two degree-4 neighbours (2, 3),
    # each of which carries three pendants
    edges = [(0, 1), (0, 2), (0, 3)]
    nxt = 4
    for hub in (2, 3):
        for _ in range(3):
            edges.append((hub, nxt))
            nxt += 1
    return SimpleGraph.from_edges(10, edges)


def fig1_tree(n: int) -> SimpleGraph:
    """The unique HA-minimising molecular tree for the exceptional orders 6, 7, 10.

    Orders 6 and 7 are found by exhaustive minimisation; order 10 is built
    explicitly (one degree-3 vertex with a pendant and two degree-4
    neighbours, each carrying three pendants).
    """
    from .indices import ha_index

    if n == 10:
        return _fig1c()
    if n not in (6, 7):
        raise ValueError("fig1_tree is defined only for n in {6, 7, 10}")
    trees = list(enumerate_free_trees(n, 4))
    values = [ha_index(t) for t in trees]
    best = min(values)
    winners = [t for t, v in zip(trees, values) if v == best]
    if len(winners) != 1:
        raise RuntimeError(f"minimiser of order {n} is not unique")
    return winners[0]
