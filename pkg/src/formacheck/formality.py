"""Decision layer: the two formality conditions, the degree-set arithmetic,
and the final verdict.

The conditions are sufficient only; when both fail the verdict is
INCONCLUSIVE, never "not formal".  A theorem-level verdict whose capped
quasi-isomorphism check fails is surfaced as a discrepancy, not reconciled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .algebra import GeneratorSet, GradedAlgebra
from .cohomology import QuasiIsoReport
from .linalg import MatQ, rref
from .model import EFamily, GoodObject

FORMAL_BY_THEOREM = "FORMAL_BY_THEOREM"
INCONCLUSIVE = "INCONCLUSIVE"
HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"


@dataclass(frozen=True)
class DegreeSet:
    """Strictly increasing positive degrees carrying nonzero cohomology."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(n <= 0 for n in self.degrees):
            raise ValueError("degrees must be positive")
        if list(self.degrees) != sorted(set(self.degrees)):
            raise ValueError("degrees must be strictly increasing")

    @classmethod
    def from_algebra(cls, h: GradedAlgebra) -> "DegreeSet":
        return cls(tuple(sorted({d for d in h.degrees if d > 0})))


def check_condition_i(e: EFamily) -> bool:
    """Trivial cup product: the family of nonzero products is empty."""
    return e.is_empty()


def check_condition_ii(e: EFamily) -> bool:
    """Linear independence of the family indexed by distinct monomials.

    Two monomials mapping to dependent classes (in particular to the same
    class) make the indexed family dependent, so the check stacks one row
    per entry rather than deduplicating values.  Vacuously true when empty.
    """
    if e.is_empty():
        return True
    matrix = MatQ.from_rows([entry.class_vector for entry in e.entries])
    return rref(matrix).rank == len(e.entries)


def corollary_integer_check(f: DegreeSet) -> tuple[bool, ...]:
    """flag_k: n_k is not an integer combination of n_1..n_(k-1).

    With unrestricted integer coefficients the combinations of the prefix
    are exactly the multiples of its gcd, so the test is gcd divisibility;
    the first flag is vacuously true (the empty sum is 0 < n_1).
    """
    flags = []
    for k, n in enumerate(f.degrees):
        if k == 0:
            flags.append(True)
        else:
            g = math.gcd(*f.degrees[:k])
            flags.append(n % g != 0)
    return tuple(flags)


def corollary_nonnegative_check(f: DegreeSet) -> tuple[bool, ...]:
    """Informational variant: representability with nonnegative coefficients
    and at least two summands counted with multiplicity, via a DP table."""
    flags = []
    for k, n in enumerate(f.degrees):
        if k == 0:
            flags.append(True)
            continue
        gens = f.degrees[:k]
        reach = [False] * (n + 1)
        reach[0] = True
        for s in range(1, n + 1):
            reach[s] = any(reach[s - g] for g in gens if g <= s)
        representable = any(g < n and reach[n - g] for g in gens)
        flags.append(not representable)
    return tuple(flags)


@dataclass(frozen=True)
class Verdict:
    hypothesis_ok: bool
    odd_degrees_vanish: bool
    finite_dimensional: bool
    condition_i: Optional[bool]
    condition_ii: Optional[bool]
    corollary_integer: tuple[bool, ...]
    corollary_nonnegative: tuple[bool, ...]
    quasi_iso: Optional[QuasiIsoReport]
    classification: str
    discrepancy: bool


def render_verdict(h: GradedAlgebra, gens: GeneratorSet,
                   e: Optional[EFamily], goods: Optional[list[GoodObject]],
                   quasi_report: Optional[QuasiIsoReport]) -> Verdict:
    """Assemble the final classification from the pieces of one pipeline run.

    When the odd-degree hypothesis fails, the condition checks are not
    meaningful and stay None.  A FORMAL_BY_THEOREM verdict whose capped
    quasi-isomorphism check failed is flagged as a discrepancy and surfaced,
    never silently reconciled.
    """
    odd_vanish = all(d % 2 == 0 for d in h.degrees)
    hypothesis_ok = odd_vanish  # finite dimension holds for any table input
    degree_set = DegreeSet.from_algebra(h)

    cond_i = check_condition_i(e) if e is not None else None
    cond_ii = check_condition_ii(e) if e is not None else None
    if cond_i and goods is not None:
        # empty E forces every good object to have exactly two factors
        assert all(g.monomial.length == 2 for g in goods)

    if not hypothesis_ok:
        classification = HYPOTHESIS_VIOLATED
    elif (cond_i or cond_ii):
        classification = FORMAL_BY_THEOREM
    else:
        classification = INCONCLUSIVE

    discrepancy = (classification == FORMAL_BY_THEOREM
                   and quasi_report is not None and not quasi_report.overall)

    return Verdict(
        hypothesis_ok=hypothesis_ok,
        odd_degrees_vanish=odd_vanish,
        finite_dimensional=True,
        condition_i=cond_i,
        condition_ii=cond_ii,
        corollary_integer=corollary_integer_check(degree_set),
        corollary_nonnegative=corollary_nonnegative_check(degree_set),
        quasi_iso=quasi_report,
        classification=classification,
        discrepancy=discrepancy,
    )
