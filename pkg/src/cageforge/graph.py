"""Undirected simple graphs with exact girth and a brute-force cycle oracle."""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

ACYCLIC = "acyclic"


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :func:`build_graph` rather than the constructor.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _csr: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"

    @cached_property
    def size(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(indptr, indices)`` arrays, built once and cached."""
        if not self._csr:
            deg = np.fromiter((len(a) for a in self.adj), dtype=np.int64, count=self.n)
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(deg, out=indptr[1:])
            indices = np.fromiter(
                (v for a in self.adj for v in a), dtype=np.int64, count=int(indptr[-1])
            )
            self._csr["indptr"] = indptr
            self._csr["indices"] = indices
        return self._csr["indptr"], self._csr["indices"]

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely in increasing id order.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        keep = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [
            (new_id[u], new_id[v])
            for u in keep
            for v in self.adj[u]
            if v > u and v in new_id
        ]
        return build_graph(len(keep), edges), keep

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate and reversed pairs collapse to one edge."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree_profile(g: Graph) -> dict[int, int]:
    """Map each occurring degree to the number of vertices having it."""
    return dict(sorted(Counter(len(a) for a in g.adj).items()))


def is_regular(g: Graph, k: int) -> bool:
    return all(len(a) == k for a in g.adj)


def is_biregular(g: Graph, k1: int, k2: int) -> bool:
    return set(degree_profile(g)) <= {k1, k2}


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """2-colour ``g`` by BFS, or return ``None`` if it has an odd cycle.

    The lowest id of every component lands on the first side.
    """
    colour = [-1] * g.n
    sides: tuple[list[int], list[int]] = ([], [])
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    for v in range(g.n):
        sides[colour[v]].append(v)
    return sides


def girth(g: Graph) -> int | str:
    """Length of a shortest cycle of ``g``, or :data:`ACYCLIC` for a forest.

    Runs a breadth-first search from every vertex.  A search stops as soon
    as it closes a cycle or reaches a depth where no cycle shorter than the
    best one found so far can appear.
    """
    if g.n == 0 or g.size == 0:
        return ACYCLIC
    indptr, indices = g.csr()
    deg = np.diff(indptr)
    best = _NONE = np.iinfo(np.int64).max
    dist = np.full(g.n, -1, dtype=np.int64)
    parent = np.full(g.n, -1, dtype=np.int64)
    seen = np.empty(g.n, dtype=np.int64)

    for s in range(g.n):
        if deg[s] < 2:
            continue
        touched = [np.array([s])]
        dist[s] = 0
        parent[s] = -1
        frontier = np.array([s], dtype=np.int64)
        d = 0
        while frontier.size and 2 * d + 1 < best:
            counts = deg[frontier]
            total = int(counts.sum())
            if total == 0:
                break
            xs = np.repeat(frontier, counts)
            offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            ys = indices[np.repeat(indptr[frontier], counts) + offsets]
            keep = ys != parent[xs]
            xs, ys = xs[keep], ys[keep]
            dy = dist[ys]
            if np.any(dy == d):
                best = min(best, 2 * d + 1)
                break
            fresh = dy == -1
            new, xnew = ys[fresh], xs[fresh]
            if new.size == 0:
                break
            # two frontier vertices reaching the same new vertex close an even cycle
            stamp = np.arange(new.size)
            seen[new] = stamp
            if np.any(seen[new] != stamp):
                best = min(best, 2 * d + 2)
                break
            dist[new] = d + 1
            parent[new] = xnew
            touched.append(new)
            frontier = new
            d += 1
        for t in touched:
            dist[t] = -1
            parent[t] = -1
        if best == 3:
            break

    return ACYCLIC if best == _NONE else int(best)


def enumerate_short_cycles(g: Graph, max_len: int) -> dict[int, int]:
    """Count cycles of each length ``3..max_len`` by exhaustive search.

    Every cycle is counted once: it is rooted at its smallest vertex and
    traversed in the direction whose second vertex is smaller than its last.
    Cost grows quickly with ``max_len``; meant as an oracle on small graphs.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    counts: Counter[int] = Counter()
    adj = g.adj
    for start in range(g.n):
        path = [start]
        on_path = {start}

        def extend(v: int) -> None:
            for w in adj[v]:
                if w < start:
                    continue
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        counts[len(path)] += 1
                    continue
                if w in on_path or len(path) == max_len:
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.discard(w)

        extend(start)
    return dict(sorted(counts.items()))


def shortest_cycle_oracle(g: Graph, max_len: int) -> int | None:
    """Smallest cycle length up to ``max_len`` found by enumeration."""
    for length in range(3, max_len + 1):
        if length in enumerate_short_cycles(g, length):
            return length
    return None
