"""Deliberately naive reference implementations used only by the tests.

Nothing here imports the enumeration or canonical-form code under test.
"""

from __future__ import annotations

import heapq
from itertools import permutations
from typing import Iterator, List, Sequence, Tuple

Edge = Tuple[int, int]


def prufer_decode(seq: Sequence[int], n: int) -> List[Edge]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _count_vectors(total: int, slots: int, cap: int) -> Iterator[List[int]]:
    """Non-increasing vectors of length ``slots`` summing to ``total``, entries <= cap."""
    if slots == 0:
        if total == 0:
            yield []
        return
    for c in range(min(total, cap), -1, -1):
        if c * slots < total:
            break
        for rest in _count_vectors(total - c, slots - 1, c):
            yield [c] + rest


def _multiset_permutations(items: List[int]) -> Iterator[Tuple[int, ...]]:
    # permutations() repeats equal items; dedup via a set keeps this naive.
    yield from set(permutations(items))


def prufer_sequences_sorted_degrees(n: int, max_degree: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Prüfer sequences whose vertex degrees are non-increasing in the label.

    Every unlabelled tree has such a labelling (sort vertices by degree), so
    decoding these covers every isomorphism class at a fraction of n^(n-2).
    """
    if n <= 2:
        yield ()
        return
    cap = n - 2 if max_degree is None else max_degree - 1
    for counts in _count_vectors(n - 2, n, cap):
        items = [v for v, c in enumerate(counts) for _ in range(c)]
        yield from _multiset_permutations(items)


def _ahu(adj: List[List[int]], root: int) -> str:
    def rec(v: int, parent: int) -> str:
        return "(" + "".join(sorted(rec(u, v) for u in adj[v] if u != parent)) + ")"

    return rec(root, -1)


def naive_tree_code(n: int, edges: Sequence[Edge]) -> str:
    """Minimum AHU string over every choice of root."""
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(_ahu(adj, r) for r in range(n))


def prufer_dedup_codes(n: int, max_degree: int | None = None) -> set:
    return {
        naive_tree_code(n, prufer_decode(seq, n))
        for seq in prufer_sequences_sorted_degrees(n, max_degree)
    }


def random_tree_edges(n: int, rng) -> List[Edge]:
    seq = [rng.randrange(n) for _ in range(max(0, n - 2))]
    return prufer_decode(seq, n)
