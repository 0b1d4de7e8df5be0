"""Regular graphs of girth 5 from reductions and amalgams of elliptic semiplane Levi graphs."""

from .amalgam import (
    AmalgamPlan,
    Piece,
    PlanReport,
    amalgamate,
    check_plan,
    edge_weight,
    vertex_split,
    weight_set,
)
from .certify import Certificate, Claim, certify, moore_bound
from .families import Family, family_of, pieces_6n1, pieces_6n5, pieces_small, plan_for
from .formats import from_graph6, read_edge_list, to_graph6, write_edge_list
from .graph import (
    ACYCLIC,
    Graph,
    bipartition,
    build_graph,
    degree_profile,
    enumerate_short_cycles,
    girth,
)
from .reductions import ReducedGraph, ReductionSpec, reduce
from .semiplane import LeviGraph, build_levi, incident, is_prime, translation_check

__version__ = "0.1.0"


def construct(q: int, u: int = 0, check_girth: bool = True) -> Graph:
    """Build B*_q(S,T,u) for a supported prime q with the built-in pieces."""
    plan = plan_for(q, u)
    return amalgamate(reduce(build_levi(q), plan.spec), plan, check_girth=check_girth)
