"""Piece graphs, Cayley-colour weights, vertex splitting and the amalgam B*_q(S,T,u)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .graph import ACYCLIC, Graph, build_graph, enumerate_short_cycles, girth
from .reductions import ReducedGraph, ReductionSpec
from .semiplane import LINE, POINT

H1, H2, G1, G2 = "H1", "H2", "G1", "G2"
ROLES = (H1, H2, G1, G2)


class AmalgamError(ValueError):
    pass


class SplitError(AmalgamError):
    pass


class PlanError(AmalgamError):
    def __init__(self, report: "PlanReport"):
        super().__init__("amalgam plan failed:\n" + report.format_failures())
        self.report = report


def edge_weight(a: int, b: int, q: int) -> int:
    """Canonical weight min(b-a, a-b) mod q of the edge ab."""
    if a % q == b % q:
        raise AmalgamError(f"edge ({a}, {b}) has weight 0 mod {q}")
    d = (b - a) % q
    return min(d, q - d)


@dataclass(frozen=True)
class Piece:
    """A graph on labels in Z_q, to be laid into one block of the reduced graph."""

    role: str
    q: int
    labels: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(
        cls, role: str, q: int, edges: Iterable[tuple[int, int]], labels: Iterable[int] | None = None
    ) -> "Piece":
        es = frozenset((min(a, b), max(a, b)) for a, b in edges)
        labs = frozenset(labels) if labels is not None else frozenset(x for e in es for x in e)
        stray = {x for e in es for x in e} - labs
        if stray:
            raise AmalgamError(f"{role}: edge endpoints {sorted(stray)} are not labels")
        if any(a == b for a, b in es):
            raise AmalgamError(f"{role}: self-loop")
        if any(not 0 <= x < q for x in labs):
            raise AmalgamError(f"{role}: labels must lie in Z_{q}")
        return cls(role, q, labs, es)

    def graph(self) -> tuple[Graph, list[int]]:
        """The piece as a :class:`Graph` plus the sorted label list (id -> label)."""
        order = sorted(self.labels)
        pos = {x: i for i, x in enumerate(order)}
        return build_graph(len(order), [(pos[a], pos[b]) for a, b in self.edges]), order

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.labels, 0)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbours(self, x: int) -> set[int]:
        return {b if a == x else a for a, b in self.edges if x in (a, b)}

    def girth(self) -> int | str:
        return girth(self.graph()[0])

    def has_five_cycle(self) -> bool:
        return 5 in enumerate_short_cycles(self.graph()[0], 5)


def weight_set(piece: Piece) -> frozenset[int]:
    return frozenset(edge_weight(a, b, piece.q) for a, b in piece.edges)


def vertex_split(
    piece: Piece, e1: tuple[int, int], e2: tuple[int, int], new_label: int, role: str | None = None
) -> Piece:
    """Replace two independent edges by a new vertex joined to their four ends.

    Requires the four end vertices to have pairwise disjoint neighbourhoods
    and the piece to have girth at least 5; the result then has girth at
    least 5 as well, which is re-checked.
    """
    es = {(min(e), max(e)) for e in (e1, e2)}
    for e in es:
        if e not in piece.edges:
            raise SplitError(f"{e} is not an edge of {piece.role}")
    ends = [*e1, *e2]
    if len(es) < 2 or len(set(ends)) < 4:
        raise SplitError(f"edges {e1} and {e2} are not independent")
    if new_label in piece.labels:
        raise SplitError(f"label {new_label} already used")
    g0 = piece.girth()
    if g0 != ACYCLIC and g0 < 5:
        raise SplitError(f"{piece.role} has girth {g0} < 5")
    nbrs = {x: piece.neighbours(x) for x in ends}
    for i, x in enumerate(ends):
        for y in ends[i + 1 :]:
            common = nbrs[x] & nbrs[y]
            if common:
                raise SplitError(
                    f"N({x}) and N({y}) share {sorted(common)}; edges {e1}, {e2} cannot be split"
                )
    out = Piece.from_edges(
        role or piece.role,
        piece.q,
        (piece.edges - es) | {(new_label, x) for x in ends},
        piece.labels | {new_label},
    )
    g1 = out.girth()
    if g1 != ACYCLIC and g1 < 5:
        raise SplitError(f"split produced girth {g1}")
    return out


@dataclass(frozen=True)
class AmalgamPlan:
    q: int
    spec: ReductionSpec
    pieces: dict[str, Piece]
    k: int
    family: str = "custom"

    def point_weights(self) -> frozenset[int]:
        return weight_set(self.pieces[H1]) | weight_set(self.pieces[G1])

    def line_weights(self) -> frozenset[int]:
        return weight_set(self.pieces[H2]) | weight_set(self.pieces[G2])

    @property
    def degree(self) -> int:
        return self.q + self.k - self.spec.u

    @property
    def order(self) -> int:
        q, s = self.q, self.spec
        return 2 * q * (q - s.u) - len(s.S) - len(s.T)

    def with_u(self, u: int) -> "AmalgamPlan":
        return replace(self, spec=ReductionSpec(self.spec.S, self.spec.T, u))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PlanReport:
    checks: list[Check] = field(default_factory=list)
    point_weights: frozenset[int] = frozenset()
    line_weights: frozenset[int] = frozenset()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def format_failures(self) -> str:
        return "\n".join(f"  {c.name}: {c.detail}" for c in self.failures())


def _expected_big(role: str, spec: ReductionSpec) -> frozenset[int]:
    # labels that must carry degree k+1
    return {
        H1: frozenset(),
        H2: spec.S - spec.T,
        G1: spec.T,
        G2: spec.S,
    }[role]


def check_plan(plan: AmalgamPlan) -> PlanReport:
    """Check every hypothesis of the amalgam construction; never raises."""
    q, spec, k = plan.q, plan.spec, plan.k
    rep = PlanReport()
    zq = frozenset(range(q))

    bad = sorted(x for x in spec.S | spec.T if not 0 <= x < q)
    rep.add("S,T within Z_q", not bad, f"out of range: {bad}" if bad else "")
    rep.add("T subset of S", spec.T <= spec.S, f"T-S = {sorted(spec.T - spec.S)}")
    rep.add("u range", 0 <= spec.u <= q - 1, f"u={spec.u}")
    missing = [r for r in ROLES if r not in plan.pieces]
    rep.add("all pieces present", not missing, f"missing {missing}")
    if missing:
        return rep

    want_labels = {H1: zq - spec.S, H2: zq - spec.T, G1: zq, G2: zq}
    for role in ROLES:
        p = plan.pieces[role]
        diff = sorted(p.labels ^ want_labels[role])
        rep.add(f"{role} labels", not diff and p.q == q, f"symmetric difference {diff}")

        g = p.girth()
        rep.add(f"{role} girth >= 5", g == ACYCLIC or g >= 5, f"girth {g}")

        big = _expected_big(role, spec)
        deg = p.degrees()
        wrong = sorted(x for x, d in deg.items() if d != (k + 1 if x in big else k))
        rep.add(
            f"{role} degrees",
            not wrong,
            f"labels with wrong degree (want k+1 exactly on {sorted(big)}): "
            + ", ".join(f"{x}:{deg[x]}" for x in wrong),
        )

    rep.point_weights = plan.point_weights()
    rep.line_weights = plan.line_weights()
    clash = sorted(rep.point_weights & rep.line_weights)
    rep.add("weights disjoint", not clash, f"shared weights {clash}")
    return rep


def sharp_five_applies(plan: AmalgamPlan) -> bool:
    """True when a 5-circuit of the amalgam is guaranteed by a known pattern.

    Either a piece that is actually laid into the graph has a 5-circuit, or
    the smallest H1 weight t still has its t-th block pair (u < q - t): an
    H1 edge (j, j+t) then closes ((0,j+t), (0,j), [1,j], (t,j+t), [0,j+t]).
    """
    q, u = plan.q, plan.spec.u
    laid = [H1, H2] + ([G1, G2] if u <= q - 2 else [])
    if any(plan.pieces[r].has_five_cycle() for r in laid):
        return True
    h1_weights = weight_set(plan.pieces[H1])
    return bool(h1_weights) and u < q - min(h1_weights)


def amalgam_edges(reduced: ReducedGraph, plan: AmalgamPlan) -> list[tuple[int, int]]:
    """Edges added inside the blocks of the reduced graph, as vertex-id pairs."""
    q, u = plan.q, plan.spec.u
    idx = reduced.index
    out = []

    def lay(piece: Piece, kind: str, block: int) -> None:
        for a, b in sorted(piece.edges):
            try:
                out.append((idx[(kind, block, a)], idx[(kind, block, b)]))
            except KeyError as exc:
                raise AmalgamError(
                    f"{piece.role} edge ({a},{b}) has no vertex in block {kind}_{block}"
                ) from exc

    lay(plan.pieces[H1], POINT, 0)
    lay(plan.pieces[H2], LINE, 0)
    if u <= q - 2:
        for i in range(1, q - u):
            lay(plan.pieces[G1], POINT, i)
            lay(plan.pieces[G2], LINE, i)
    return out


def amalgamate(reduced: ReducedGraph, plan: AmalgamPlan, check_girth: bool = True) -> Graph:
    """Lay the four pieces into the blocks of B_q(S,T,u), giving B*_q(S,T,u).

    The plan is checked first and a failing plan raises :class:`PlanError`.
    The result is verified to be (q+k-u)-regular of order 2q(q-u)-|S|-|T|;
    with ``check_girth`` its girth is also computed and must be at least 5,
    and exactly 5 whenever :func:`sharp_five_applies`.
    """
    report = check_plan(plan)
    if not report.ok:
        raise PlanError(report)
    if reduced.q != plan.q or reduced.spec != plan.spec:
        raise AmalgamError("reduced graph was built for a different (q, S, T, u)")

    base = reduced.graph
    g = build_graph(base.n, [*base.edges(), *amalgam_edges(reduced, plan)])

    if g.n != plan.order:
        raise AmalgamError(f"order {g.n} != {plan.order}")
    off = [v for v in range(g.n) if g.degree(v) != plan.degree]
    if off:
        v = off[0]
        raise AmalgamError(
            f"{len(off)} vertices not of degree {plan.degree}, e.g. {reduced.tags[v]} has {g.degree(v)}"
        )
    if check_girth:
        found = girth(g)
        if found == ACYCLIC or found < 5:
            raise AmalgamError(f"amalgam has girth {found} < 5")
        if found != 5 and sharp_five_applies(plan):
            raise AmalgamError(f"amalgam has girth {found}, expected exactly 5")
    return g
