"""Moore bound, excess, and certificates recomputed from a graph alone."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import ACYCLIC, Graph, bipartition, degree_profile, girth


def moore_bound(k: int, g: int) -> int:
    """Lower bound on the order of a k-regular graph of girth g."""
    if k < 2:
        raise ValueError(f"degree must be >= 2, got {k}")
    if g < 3:
        raise ValueError(f"girth must be >= 3, got {g}")
    if g % 2:
        return 1 + k * sum((k - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((k - 1) ** i for i in range(g // 2))


@dataclass(frozen=True)
class Claim:
    """Expected properties; any field may be left out."""

    degree: int | None = None
    girth: int | None = None
    order: int | None = None


@dataclass
class CheckResult:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class Certificate:
    order: int
    size: int
    degrees: dict[int, int]
    girth: int | str
    bipartite: bool
    moore_bound: int | None = None
    excess: int | None = None
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        # key order is part of the output format
        return {
            "order": self.order,
            "size": self.size,
            "degrees": {str(d): c for d, c in self.degrees.items()},
            "girth": self.girth,
            "bipartite": self.bipartite,
            "moore_bound": self.moore_bound,
            "excess": self.excess,
            "checks": [c.as_dict() for c in self.checks],
        }

    def summary(self) -> str:
        degs = sorted(self.degrees)
        if len(degs) == 1:
            reg = f"{degs[0]}-regular"
        else:
            reg = "degrees " + ",".join(map(str, degs))
        parts = [reg, f"girth {self.girth}", f"n={self.order}"]
        if self.excess is not None:
            parts.append(f"excess {self.excess}")
        return ", ".join(parts)


def certify(g: Graph, claim: Claim | None = None) -> Certificate:
    """Measure ``g`` and compare it with ``claim``.

    The Moore bound is filled in whenever the claim names a degree and a
    girth.  Excess is only reported when the measured girth equals the
    claimed one: a girth-6 graph has no meaningful (k,5) excess.
    """
    profile = degree_profile(g)
    gi = girth(g)
    cert = Certificate(
        order=g.n,
        size=g.size,
        degrees=profile,
        girth=gi,
        bipartite=bipartition(g) is not None,
    )
    if claim is None:
        return cert

    if claim.degree is not None:
        actual = next(iter(profile)) if len(profile) == 1 else sorted(profile)
        cert.checks.append(CheckResult("regular", claim.degree, actual, actual == claim.degree))
    if claim.girth is not None:
        cert.checks.append(CheckResult("girth", claim.girth, gi, gi == claim.girth))
    if claim.order is not None:
        cert.checks.append(CheckResult("order", claim.order, g.n, g.n == claim.order))

    if claim.degree is not None and claim.girth is not None and claim.degree >= 2 and claim.girth >= 3:
        cert.moore_bound = moore_bound(claim.degree, claim.girth)
        if gi != ACYCLIC and gi == claim.girth:
            cert.excess = g.n - cert.moore_bound
    return cert
