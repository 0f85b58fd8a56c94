"""Simple undirected graphs, degree statistics and tree canonical forms."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Edge = Tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input or invalid graph structure."""


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError("graph must have at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphFormatError("adjacency length does not match order")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphFormatError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphFormatError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise GraphFormatError(f"neighbours of {v} not strictly increasing")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise GraphFormatError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "SimpleGraph":
        nbrs: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max(self.degrees)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def to_edge_string(self) -> str:
        return ";".join(f"{u}-{v}" for u, v in self.edges())


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse whitespace-separated ``u v`` lines into a graph.

    Blank lines and lines starting with ``#`` are ignored. Vertex ids must be
    exactly ``0..n-1``.
    """
    edges: List[Edge] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if not edges:
        raise GraphFormatError("no edges found")
    ids = {x for e in edges for x in e}
    n = max(ids) + 1
    if len(ids) != n:
        missing = sorted(set(range(n)) - ids)
        raise GraphFormatError(f"vertex ids not contiguous, missing {missing[:5]}")
    return SimpleGraph.from_edges(n, edges)


@dataclass(frozen=True)
class DegreeVector:
    """Counts ``n_t`` of vertices of each positive degree ``t``."""

    counts: Dict[int, int]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.counts))

    def __getitem__(self, t: int) -> int:
        return self.counts.get(t, 0)


def degree_vector(g: SimpleGraph) -> DegreeVector:
    degs = g.degrees
    if g.n >= 2 and 0 in degs:
        raise GraphFormatError("isolated vertex in a graph of order >= 2")
    return DegreeVector(dict(sorted(Counter(d for d in degs if d > 0).items())))


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts ``m_{s,t}`` keyed by the degree pair ``(s, t)`` with ``s <= t``."""

    counts: Dict[Tuple[int, int], int]

    def __getitem__(self, key: Tuple[int, int]) -> int:
        s, t = key
        return self.counts.get((min(s, t), max(s, t)), 0)

    def total(self) -> int:
        return sum(self.counts.values())


def edge_partition(g: SimpleGraph) -> EdgePartition:
    degs = g.degrees
    c: Counter = Counter()
    for u, v in g.edges():
        a, b = degs[u], degs[v]
        c[(a, b) if a <= b else (b, a)] += 1
    return EdgePartition(dict(sorted(c.items())))


def is_connected(g: SimpleGraph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(u)
    return count == g.n


def is_tree(g: SimpleGraph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


# -- canonical forms -------------------------------------------------------


def tree_centroids(g: SimpleGraph) -> List[int]:
    """Return the one or two centroid vertices of a tree."""
    n = g.n
    order, parent = _bfs_order(g, 0)
    size = [1] * n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
    best = n
    cents: List[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for u in g.adjacency[v]:
            if u != parent[v]:
                heaviest = max(heaviest, size[u])
        if heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _bfs_order(g: SimpleGraph, root: int, blocked: int = -1) -> Tuple[List[int], List[int]]:
    parent = [-1] * g.n
    order = [root]
    parent[root] = root
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in g.adjacency[v]:
            if parent[u] == -1 and u != blocked:
                parent[u] = v
                order.append(u)
    parent[root] = -1
    return order, parent


def _rooted_code(g: SimpleGraph, root: int, blocked: int = -1) -> str:
    order, parent = _bfs_order(g, root, blocked)
    codes: Dict[int, List[str]] = {v: [] for v in order}
    out = ""
    for v in reversed(order):
        out = "(" + "".join(sorted(codes[v])) + ")"
        p = parent[v]
        if p >= 0:
            codes[p].append(out)
    return out


def canonical_code(t: SimpleGraph) -> str:
    """Isomorphism-invariant string key for a tree.

    Unicentroidal trees are encoded as ``U`` plus the AHU code rooted at the
    centroid. Bicentroidal trees are split at the central edge and encoded as
    ``B`` plus the two half codes in sorted order.
    """
    if not is_tree(t):
        raise GraphFormatError("canonical_code requires a tree")
    cents = tree_centroids(t)
    if len(cents) == 1:
        return "U" + _rooted_code(t, cents[0])
    a, b = cents
    ca, cb = _rooted_code(t, a, blocked=b), _rooted_code(t, b, blocked=a)
    return "B" + min(ca, cb) + max(ca, cb)


def _refined_colors(g: SimpleGraph) -> List[int]:
    colors = list(g.degrees)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adjacency[v]))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def graph_canonical_code(g: SimpleGraph) -> str:
    """Canonical adjacency string for a small general graph.

    Vertices are first split into colour classes by degree refinement; the
    code is the lexicographically smallest upper-triangle adjacency string
    over all orderings that respect the class order. Exponential in the
    class sizes, meant for n <= 7 or so.
    """
    colors = _refined_colors(g)
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    adj = [set(a) for a in g.adjacency]
    best = None
    for choice in product(*(permutations(grp) for grp in groups)):
        order = [v for part in choice for v in part]
        bits = "".join(
            "1" if order[j] in adj[order[i]] else "0"
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        if best is None or bits < best:
            best = bits
    sig = ".".join(str(len(grp)) + ":" + str(c) for c, grp in zip(sorted(classes), groups))
    return f"{g.n}|{sig}|{best}"
