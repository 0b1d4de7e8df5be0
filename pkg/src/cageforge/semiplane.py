"""Levi graph of the elliptic semiplane C_q over Z_q, q prime."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph, build_graph, girth

POINT = "P"
LINE = "L"

DEFAULT_MAX_Q = 256
MAX_Q_ENV = "CAGEFORGE_MAX_Q"


class SemiplaneError(ValueError):
    pass


class VertexTag(NamedTuple):
    """A point ``(first, second) = (x, y)`` or a line ``[first, second] = [m, b]``."""

    kind: str
    first: int
    second: int

    def __str__(self) -> str:
        if self.kind == POINT:
            return f"({self.first},{self.second})"
        return f"[{self.first},{self.second}]"


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def max_q() -> int:
    """Exclusive upper bound on q; ``CAGEFORGE_MAX_Q`` overrides the default."""
    raw = os.environ.get(MAX_Q_ENV)
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        return int(raw)
    except ValueError:
        raise SemiplaneError(f"{MAX_Q_ENV} must be an integer, got {raw!r}") from None


def incident(point: tuple[int, int], line: tuple[int, int], q: int) -> bool:
    """True iff point (x, y) lies on line [m, b], i.e. y = m*x + b in Z_q."""
    x, y = point
    m, b = line
    for c in (x, y, m, b):
        if not 0 <= c < q:
            raise SemiplaneError(f"coordinate {c} outside Z_{q}")
    return (m * x + b - y) % q == 0


def vertex_id(tag: VertexTag, q: int) -> int:
    offset = 0 if tag.kind == POINT else q * q
    return offset + tag.first * q + tag.second


def tag_of(v: int, q: int) -> VertexTag:
    kind = POINT if v < q * q else LINE
    first, second = divmod(v % (q * q), q)
    return VertexTag(kind, first, second)


@dataclass(frozen=True)
class LeviGraph:
    """B_q with its point/line tags.

    Points come first: ``(i, y)`` has id ``i*q + y`` and ``[m, b]`` has id
    ``q*q + m*q + b``.
    """

    q: int
    graph: Graph

    @property
    def tags(self) -> list[VertexTag]:
        return [tag_of(v, self.q) for v in range(self.graph.n)]

    def block(self, kind: str, first: int) -> list[int]:
        """Ids of block P_first (kind POINT) or L_first (kind LINE)."""
        start = vertex_id(VertexTag(kind, first, 0), self.q)
        return list(range(start, start + self.q))

    def id(self, kind: str, first: int, second: int) -> int:
        return vertex_id(VertexTag(kind, first, second), self.q)


def _validate_q(q: int) -> None:
    if not is_prime(q):
        raise SemiplaneError(f"q={q} is not prime; only prime q are supported")
    if q == 2:
        raise SemiplaneError("q=2 is rejected: B_2 is an 8-cycle, not of girth 6")
    cap = max_q()
    if q >= cap:
        raise SemiplaneError(f"q={q} exceeds the cap q < {cap} (set {MAX_Q_ENV} to raise it)")


def build_levi(q: int, check: bool = True) -> LeviGraph:
    """Build B_q: point (x, y) joined to line [m, b] whenever y = m*x + b."""
    _validate_q(q)
    qq = q * q
    edges = [
        (x * q + (m * x + b) % q, qq + m * q + b)
        for x in range(q)
        for m in range(q)
        for b in range(q)
    ]
    levi = LeviGraph(q, build_graph(2 * qq, edges))
    if check:
        self_check(levi)
    return levi


def translation_check(levi: LeviGraph) -> bool:
    """True iff (x,y)|[m,b] implies (x,y+a)|[m,b+a] for every edge and every a."""
    q, g = levi.q, levi.graph
    qq = q * q
    for u, v in g.edges():
        p, l = (u, v) if u < qq else (v, u)
        if p >= qq or l < qq:
            return False
        x, y = divmod(p, q)
        m, b = divmod(l - qq, q)
        for a in range(1, q):
            if not g.has_edge(x * q + (y + a) % q, qq + m * q + (b + a) % q):
                return False
    return True


def self_check(levi: LeviGraph, check_girth: bool | None = None) -> None:
    """Assert the structural properties of B_q, raising SemiplaneError on failure.

    Checks order, size, q-regularity, the point/line bipartition, the perfect
    matching between every P_i and L_j, straightness of P_0 and L_0, and
    translation invariance.  Girth 6 is checked when ``check_girth`` is true;
    by default only for q <= 31, where the search is cheap.
    """
    q, g = levi.q, levi.graph
    qq = q * q

    def fail(msg: str) -> None:
        raise SemiplaneError(f"B_{q}: {msg}")

    if g.n != 2 * qq:
        fail(f"order {g.n} != {2 * qq}")
    if g.size != q**3:
        fail(f"size {g.size} != {q**3}")
    if any(len(a) != q for a in g.adj):
        fail("not q-regular")
    for u, v in g.edges():
        if (u < qq) == (v < qq):
            fail(f"edge {tag_of(u, q)}-{tag_of(v, q)} inside one side")

    for i in range(q):
        # partner[j] collects the L_j neighbours of the points of P_i
        partner: list[set[int]] = [set() for _ in range(q)]
        for y in range(q):
            slopes = [(w - qq) // q for w in g.adj[i * q + y]]
            if len(set(slopes)) != q:
                fail(f"({i},{y}) does not meet every line block exactly once")
            for j, w in zip(slopes, g.adj[i * q + y]):
                partner[j].add(w)
        for j, hit in enumerate(partner):
            if len(hit) != q:
                fail(f"P_{i} to L_{j} is not a perfect matching")

    for y in range(q):
        if set(g.adj[y]) != {qq + i * q + y for i in range(q)}:
            fail(f"(0,{y}) is not joined straight")
        if set(g.adj[qq + y]) != {j * q + y for j in range(q)}:
            fail(f"[0,{y}] is not joined straight")

    if not translation_check(levi):
        fail("not invariant under (x,y),[m,b] -> (x,y+a),[m,b+a]")

    if check_girth is None:
        check_girth = q <= 31
    if check_girth:
        found = girth(g)
        if found != 6:
            fail(f"girth {found} != 6")

