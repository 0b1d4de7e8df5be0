"""Concrete piece families and the dispatch from q to an amalgam plan.

Primes q = 6n+1 (n >= 5) and q = 6n+5 (n >= 3) use generated pieces on
labels 1..q-1 split into two halves W1, W2.  q = 11, 13, 17, 19 use fixed
edge lists.
"""

from __future__ import annotations

import hashlib
from enum import Enum

from .amalgam import G1, G2, H1, H2, AmalgamPlan, Piece, PlanError, check_plan, vertex_split
from .reductions import ReductionSpec
from .semiplane import is_prime


class UnsupportedPrimeError(ValueError):
    pass


class Family(str, Enum):
    GENERAL_6N1 = "GENERAL_6N1"
    GENERAL_6N5 = "GENERAL_6N5"
    SMALL_11 = "SMALL_11"
    SMALL_13 = "SMALL_13"
    SMALL_17 = "SMALL_17"
    SMALL_19 = "SMALL_19"


SUPPORTED_MESSAGE = (
    "supported q: 11, 13, 17, 19, and every prime q >= 23 "
    "(q = 6n+1 with n >= 5 or q = 6n+5 with n >= 3)"
)


def family_of(q: int) -> tuple[Family, int | None]:
    """Return the family covering ``q`` and its n, or raise UnsupportedPrimeError."""
    small = {11: Family.SMALL_11, 13: Family.SMALL_13, 17: Family.SMALL_17, 19: Family.SMALL_19}
    if q in small:
        return small[q], None
    if is_prime(q) and q >= 23:
        if q % 6 == 1:
            return Family.GENERAL_6N1, (q - 1) // 6
        if q % 6 == 5:
            return Family.GENERAL_6N5, (q - 5) // 6
    raise UnsupportedPrimeError(f"q={q} is not covered by any construction; {SUPPORTED_MESSAGE}")


def _cycle(labels) -> list[tuple[int, int]]:
    labels = list(labels)
    return [(labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels))]


# ---------------------------------------------------------------- q = 6n+1


def h_pieces_6n1(n: int) -> tuple[Piece, Piece]:
    q = 6 * n + 1
    m = 3 * n
    a1 = [(i, i + 1) for i in range(1, m)] + [(m, 1)]
    b1 = [(i, i + 2) for i in range(m + 1, 2 * m - 1)] + [(2 * m - 1, m + 1), (2 * m, m + 2)]
    c1 = [(i, m + i) for i in range(1, m + 1)]
    a2 = [(i, i + 3) for i in range(1, m - 2)] + [(m - 2, 1), (m - 1, 2), (m, 3)]
    b2 = [(i, i + 4) for i in range(m + 1, 2 * m - 3)] + [
        (2 * m - 3, m + 1),
        (2 * m - 2, m + 2),
        (2 * m - 1, m + 3),
        (2 * m, m + 4),
    ]
    c2 = [(i, m + 4 + i) for i in range(1, m - 3)] + [
        (m - 3, m + 1),
        (m - 2, m + 2),
        (m - 1, m + 3),
        (m, m + 4),
    ]
    labels = range(1, q)
    return (
        Piece.from_edges(H1, q, a1 + b1 + c1, labels),
        Piece.from_edges(H2, q, a2 + b2 + c2, labels),
    )


def split_edges_6n1(n: int) -> dict[str, tuple[tuple[int, int], tuple[int, int]]]:
    m = 3 * n
    f = (m + 1) // 2
    g2 = ((3, 22), (5, 24)) if n == 5 else ((3, m + 7), (4, m + 8))
    return {G1: ((1, m), (f, m + f)), G2: g2}


def pieces_6n1(n: int) -> dict[str, Piece]:
    """H1, H2, G1, G2 for q = 6n+1, S = T = {0}."""
    q = 6 * n + 1
    if n < 5:
        raise UnsupportedPrimeError(f"the 6n+1 family needs n >= 5, got n={n}")
    if not is_prime(q):
        raise UnsupportedPrimeError(f"q=6n+1={q} is not prime")
    h1, h2 = h_pieces_6n1(n)
    splits = split_edges_6n1(n)
    return {
        H1: h1,
        H2: h2,
        G1: vertex_split(h1, *splits[G1], 0, role=G1),
        G2: vertex_split(h2, *splits[G2], 0, role=G2),
    }


# ---------------------------------------------------------------- q = 6n+5


def h_pieces_6n5(n: int) -> tuple[Piece, Piece]:
    q = 6 * n + 5
    m = 3 * n
    a1 = [(i, i + 1) for i in range(1, m + 2)] + [(m + 2, 1)]
    b1 = [(i, i + 2) for i in range(m + 3, 2 * m + 3)] + [(2 * m + 3, m + 3), (2 * m + 4, m + 4)]
    c1 = [(i, m + i + 2) for i in range(1, m + 3)]
    a2 = [(i, i + 3) for i in range(1, m)] + [(m, 1), (m + 1, 2), (m + 2, 3)]
    b2 = [(i, i + 4) for i in range(m + 3, 2 * m + 1)] + [
        (2 * m + 1, m + 3),
        (2 * m + 2, m + 4),
        (2 * m + 3, m + 5),
        (2 * m + 4, m + 6),
    ]
    c2 = [(i, m + i + 6) for i in range(1, m - 1)] + [
        (m - 1, m + 3),
        (m, m + 4),
        (m + 1, m + 5),
        (m + 2, m + 6),
    ]
    labels = range(1, q)
    return (
        Piece.from_edges(H1, q, a1 + b1 + c1, labels),
        Piece.from_edges(H2, q, a2 + b2 + c2, labels),
    )


def split_edges_6n5(n: int) -> dict[str, tuple[tuple[int, int], tuple[int, int]]]:
    m = 3 * n
    f = (m + 1) // 2
    g1 = ((1, 12), (6, 17)) if n == 3 else ((1, m + 3), (f, m + 2 + f))
    return {G1: g1, G2: ((3, m + 9), (4, m + 10))}


def pieces_6n5(n: int) -> dict[str, Piece]:
    """H1, H2, G1, G2 for q = 6n+5, S = T = {0}."""
    q = 6 * n + 5
    if n < 3:
        raise UnsupportedPrimeError(f"the 6n+5 family needs n >= 3, got n={n}")
    if not is_prime(q):
        raise UnsupportedPrimeError(f"q=6n+5={q} is not prime")
    h1, h2 = h_pieces_6n5(n)
    splits = split_edges_6n5(n)
    return {
        H1: h1,
        H2: h2,
        G1: vertex_split(h1, *splits[G1], 0, role=G1),
        G2: vertex_split(h2, *splits[G2], 0, role=G2),
    }


# ---------------------------------------------------------------- small q

SMALL_EDGES: dict[int, dict[str, list[tuple[int, int]]]] = {
    13: {
        H1: [(1, 4), (4, 8), (8, 12), (12, 3), (3, 7), (7, 11), (11, 2), (2, 5), (5, 6),
             (6, 9), (9, 10), (10, 1), (1, 5), (2, 12), (3, 6), (4, 7), (8, 9), (10, 11)],
        H2: [(1, 8), (8, 2), (2, 9), (9, 3), (3, 10), (10, 12), (12, 4), (4, 6), (6, 11),
             (11, 5), (5, 7), (7, 1), (1, 6), (2, 4), (3, 11), (5, 12), (7, 9), (8, 10)],
    },
    19: {
        H1: _cycle((1, 2, 3, 12, 14, 16, 9, 7, 8, 18, 11, 13, 4, 5, 6, 15, 17, 10))
        + [(1, 8), (2, 11), (3, 4), (5, 14), (6, 9), (7, 17), (10, 12), (13, 15), (16, 18)],
        H2: _cycle((1, 5, 10, 4, 17, 13, 8, 12, 16, 11, 15, 9, 14, 18, 3, 7, 2, 6))
        + [(1, 15), (2, 13), (3, 17), (4, 9), (5, 16), (6, 12), (7, 11), (8, 14), (10, 18)],
    },
    11: {
        H1: _cycle((3, 5, 10, 7, 9)),
        H2: _cycle(range(11)) + [(0, 4), (2, 6), (1, 8)],
        G1: _cycle((0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9)),
        G2: _cycle(range(11)) + [(0, 4), (2, 6), (1, 8)],
    },
    17: {
        H1: _cycle((0, 16, 15, 2, 1, 13, 14, 11, 8, 5, 4, 9, 6, 3))
        + [(0, 13), (15, 11), (1, 5), (14, 9), (8, 3), (4, 16), (6, 2)],
        H2: _cycle((0, 2, 4, 14, 3, 9, 16, 6, 13, 5, 11, 1, 8, 15))
        + [(0, 9), (4, 6), (3, 5), (16, 1), (13, 15), (11, 2), (8, 14)],
        G1: _cycle((0, 1, 15, 16, 13, 12, 11, 10, 9, 4, 3, 8, 5, 6, 7, 2, 14))
        + [(0, 12), (1, 6), (2, 16), (3, 15), (4, 7), (5, 10), (7, 11), (8, 12), (9, 13), (10, 14)],
        G2: [(0, 2), (1, 12), (2, 12), (12, 5), (5, 3), (3, 14), (14, 4), (4, 6), (6, 8),
             (8, 10), (10, 1), (1, 7), (7, 16), (16, 9), (9, 11), (11, 13), (13, 15), (15, 0),
             (0, 10), (2, 9), (3, 10), (4, 11), (5, 13), (6, 12), (7, 14), (7, 15), (8, 16)],
    },
}

SMALL_SPLITS = {
    13: {G1: ((1, 10), (3, 12)), G2: ((2, 8), (5, 11))},
    19: {G1: ((1, 10), (9, 16)), G2: ((8, 13), (11, 15))},
}

SMALL_SPECS = {
    11: ({0, 1, 2, 4, 6, 8}, set(), 2),
    13: ({0}, {0}, 3),
    17: ({7, 10, 12}, {7, 10, 12}, 3),
    19: ({0}, {0}, 3),
}


def small_data_digest() -> str:
    """SHA-256 over the embedded small-case edge lists, to pin the transcription."""
    h = hashlib.sha256()
    for q in sorted(SMALL_EDGES):
        for role in sorted(SMALL_EDGES[q]):
            es = sorted((min(e), max(e)) for e in SMALL_EDGES[q][role])
            h.update(f"{q}:{role}:{es}\n".encode())
    return h.hexdigest()


def pieces_small(q: int) -> tuple[ReductionSpec, dict[str, Piece], int]:
    """Return (S, T spec with u=0, the four pieces, k) for q in 11, 13, 17, 19."""
    if q not in SMALL_SPECS:
        raise UnsupportedPrimeError(f"no small-case data for q={q}")
    S, T, k = SMALL_SPECS[q]
    zq = set(range(q))
    data = SMALL_EDGES[q]
    h1 = Piece.from_edges(H1, q, data[H1], zq - S)
    h2 = Piece.from_edges(H2, q, data[H2], zq - T)
    if q in SMALL_SPLITS:
        g1 = vertex_split(h1, *SMALL_SPLITS[q][G1], 0, role=G1)
        g2 = vertex_split(h2, *SMALL_SPLITS[q][G2], 0, role=G2)
    else:
        g1 = Piece.from_edges(G1, q, data[G1], zq)
        g2 = Piece.from_edges(G2, q, data[G2], zq)
    return ReductionSpec(S, T, 0), {H1: h1, H2: h2, G1: g1, G2: g2}, k


# ---------------------------------------------------------------- dispatch


def plan_for(q: int, u: int = 0) -> AmalgamPlan:
    """Build and check the amalgam plan for prime q and u block-pair deletions."""
    family, n = family_of(q)
    if not 0 <= u <= q - 1:
        raise ValueError(f"u={u} outside 0..{q - 1}")
    if family is Family.GENERAL_6N1:
        spec, pieces, k = ReductionSpec({0}, {0}, u), pieces_6n1(n), 3
    elif family is Family.GENERAL_6N5:
        spec, pieces, k = ReductionSpec({0}, {0}, u), pieces_6n5(n), 3
    else:
        spec, pieces, k = pieces_small(q)
        spec = ReductionSpec(spec.S, spec.T, u)
    plan = AmalgamPlan(q, spec, pieces, k, family.value)
    report = check_plan(plan)
    if not report.ok:
        raise PlanError(report)
    return plan


def supported_primes(qmax: int) -> list[int]:
    out = []
    for q in range(2, qmax + 1):
        try:
            family_of(q)
        except UnsupportedPrimeError:
            continue
        out.append(q)
    return out
