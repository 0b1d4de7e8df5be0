"""Vertex deletions turning B_q into B_q(S, T, u)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph
from .semiplane import LINE, POINT, LeviGraph, VertexTag, tag_of


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionSpec:
    """Delete (0, s) for s in S, [0, t] for t in T and the last u block pairs."""

    S: frozenset[int] = frozenset()
    T: frozenset[int] = frozenset()
    u: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        object.__setattr__(self, "u", int(self.u))

    def validate(self, q: int) -> None:
        bad = sorted(x for x in self.S | self.T if not 0 <= x < q)
        if bad:
            raise ReductionError(f"S/T values {bad} outside Z_{q}")
        if not self.T <= self.S:
            raise ReductionError(f"T is not a subset of S (extra: {sorted(self.T - self.S)})")
        if not 0 <= self.u <= q - 1:
            raise ReductionError(f"u={self.u} outside 0..{q - 1}")

    def expected_order(self, q: int) -> int:
        return 2 * (q * q - q * self.u) - len(self.S) - len(self.T)


@dataclass(frozen=True)
class ReducedGraph:
    q: int
    spec: ReductionSpec
    graph: Graph
    tags: tuple[VertexTag, ...]
    index: dict[VertexTag, int]

    def surviving_blocks(self) -> range:
        """Block indices still present: 0..q-u-1."""
        return range(self.q - self.spec.u)


def deleted_tags(q: int, spec: ReductionSpec) -> set[VertexTag]:
    gone = {VertexTag(POINT, 0, s) for s in spec.S}
    gone |= {VertexTag(LINE, 0, t) for t in spec.T}
    for i in range(q - spec.u, q):
        for y in range(q):
            gone.add(VertexTag(POINT, i, y))
            gone.add(VertexTag(LINE, i, y))
    return gone


def deficient_tags(q: int, spec: ReductionSpec) -> set[VertexTag]:
    """Survivors expected to have degree q-u-1; all others keep q-u.

    Every survivor loses exactly one neighbour per deleted block, so the
    block deletions are uniform.  Deleting (0, s) costs each [j, s] one
    neighbour and deleting [0, t] costs each (i, t) one.
    """
    alive = range(q - spec.u)
    out = {VertexTag(POINT, i, t) for i in alive if i != 0 for t in spec.T}
    out |= {VertexTag(LINE, j, s) for j in alive if j != 0 for s in spec.S}
    out |= {VertexTag(LINE, 0, s) for s in spec.S - spec.T}
    return out


def reduce(levi: LeviGraph, spec: ReductionSpec) -> ReducedGraph:
    """Delete the vertices named by ``spec`` and compact ids in base order."""
    q = levi.q
    spec.validate(q)
    gone = deleted_tags(q, spec)
    keep = [v for v in range(levi.graph.n) if tag_of(v, q) not in gone]
    sub, _ = levi.graph.subgraph(keep)
    tags = tuple(tag_of(v, q) for v in keep)
    reduced = ReducedGraph(q, spec, sub, tags, {t: i for i, t in enumerate(tags)})
    _check_degrees(reduced)
    return reduced


def _check_degrees(r: ReducedGraph) -> None:
    q, spec, g = r.q, r.spec, r.graph
    if g.n != spec.expected_order(q):
        raise ReductionError(f"order {g.n} != {spec.expected_order(q)}")
    low = deficient_tags(q, spec)
    full = q - spec.u
    for v, tag in enumerate(r.tags):
        want = full - 1 if tag in low else full
        if g.degree(v) != want:
            raise ReductionError(f"{tag} has degree {g.degree(v)}, expected {want}")
