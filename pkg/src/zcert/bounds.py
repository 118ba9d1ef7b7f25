"""The five degree-index bound formulas, equality detection, and the
sufficient-condition evaluators for Hamiltonicity and traceability.

One evaluator computes all five bounds from (n, e, delta, Delta, b); the
certification paths differ only in the independence surrogate b: the exact
independence number for the bound theorem, k+1 for the Hamiltonian
conditions, k+2 for the traceable conditions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph
from .invariants import (
    IsolatedVertexError,
    first_zagreb,
    forgotten_index,
    inverse_degree,
    min_max_degree,
)
from . import structure


class Verdict(enum.Enum):
    STRICTLY_SATISFIED = "strict"
    EQUALITY = "equality"
    VIOLATED = "violated"


@dataclass(frozen=True)
class BoundInputs:
    n: int
    e: int
    delta: int
    Delta: int
    b: int  # independence surrogate

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise IsolatedVertexError("bounds require minimum degree >= 1")
        if self.delta > self.Delta:
            raise ValueError("delta > Delta")
        if self.b < 1:
            raise ValueError("independence surrogate must be >= 1")
        if self.b >= self.n:
            raise ValueError(
                f"surrogate b={self.b} must be < n={self.n}; "
                "the formulas lose meaning at b >= n")


def eval_bounds(inp: BoundInputs) -> tuple[Fraction, ...]:
    """All five bound values: (B1 upper on Z1, B2/B3 lower on F,
    B4/B5 lower on Inv)."""
    n, e, delta, Delta, b = inp.n, inp.e, inp.delta, inp.Delta, inp.b
    e2 = e * e
    d3 = Delta ** 3
    b1 = (n - b) * Delta * Delta + Fraction(e2, 2 * b) + Fraction(b * d3, 2 * delta)
    b2 = (n - b) * delta ** 3 + Fraction(delta * (2 * b * b * delta * delta - e2), b)
    # shared inner expression of the third and fifth bounds
    inner = (2 * b * (b * delta * delta + Fraction(e2, n - b))
             - e2 - 2 * b * (n - b) * Delta * Delta)
    b3 = (n - b) * delta ** 3 + Fraction(delta, b) * inner
    b4 = Fraction(n - b, Delta) + Fraction(2 * b * b * delta * delta - e2, b * d3)
    b5 = Fraction(n - b, Delta) + inner / (b * d3)
    return (b1, b2, b3, b4, b5)


@dataclass(frozen=True)
class BoundReport:
    inputs: BoundInputs
    bounds: tuple[Fraction, ...]
    actual_z1: int
    actual_f: int
    actual_inv: Fraction
    verdicts: tuple[Verdict, ...]

    @property
    def all_equality(self) -> bool:
        return all(v is Verdict.EQUALITY for v in self.verdicts)

    @property
    def any_violated(self) -> bool:
        return any(v is Verdict.VIOLATED for v in self.verdicts)


def _verdict_upper(actual, bound: Fraction) -> Verdict:
    if actual == bound:
        return Verdict.EQUALITY
    return Verdict.STRICTLY_SATISFIED if actual < bound else Verdict.VIOLATED


def _verdict_lower(actual, bound: Fraction) -> Verdict:
    if actual == bound:
        return Verdict.EQUALITY
    return Verdict.STRICTLY_SATISFIED if actual > bound else Verdict.VIOLATED


def report_for_inputs(inp: BoundInputs, z1: int, f: int, inv: Fraction) -> BoundReport:
    b1, b2, b3, b4, b5 = eval_bounds(inp)
    verdicts = (
        _verdict_upper(z1, b1),
        _verdict_lower(f, b2),
        _verdict_lower(f, b3),
        _verdict_lower(inv, b4),
        _verdict_lower(inv, b5),
    )
    return BoundReport(inp, (b1, b2, b3, b4, b5), z1, f, inv, verdicts)


def theorem1_report(g: Graph, beta: Optional[int] = None) -> BoundReport:
    """Evaluate the five bounds at b = independence number and compare
    exactly against the actual index values."""
    delta, Delta = min_max_degree(g)
    if delta < 1:
        raise IsolatedVertexError("bound certification requires min degree >= 1")
    if beta is None:
        beta = structure.independence_number(g).beta
    inp = BoundInputs(n=g.n, e=g.edge_count, delta=delta, Delta=Delta, b=beta)
    return report_for_inputs(inp, first_zagreb(g), forgotten_index(g), inverse_degree(g))


def equality_classifier(g: Graph) -> bool:
    """Predicted all-equality flag: regular balanced bipartite."""
    delta, _ = min_max_degree(g)
    if delta < 1:
        raise IsolatedVertexError("classifier requires min degree >= 1")
    return structure.is_regular_balanced_bipartite(g)


@dataclass(frozen=True)
class ConditionVerdict:
    theorem: int  # 2 = Hamiltonian conditions, 3 = traceable conditions
    part: int
    k: int
    holds: bool
    bound: Fraction
    actual: Fraction
    oracle_hamiltonian: Optional[bool] = None
    oracle_traceable: Optional[bool] = None


def _condition_holds(g: Graph, b: int, part: int) -> tuple[bool, Fraction, Fraction]:
    delta, Delta = min_max_degree(g)
    inp = BoundInputs(n=g.n, e=g.edge_count, delta=delta, Delta=Delta, b=b)
    bound = eval_bounds(inp)[part - 1]
    if part == 1:
        actual = Fraction(first_zagreb(g))
        return actual >= bound, bound, actual
    if part in (2, 3):
        actual = Fraction(forgotten_index(g))
    else:
        actual = inverse_degree(g)
    return actual <= bound, bound, actual


def theorem2_condition(
    g: Graph, k: int, part: int, kappa: Optional[int] = None
) -> ConditionVerdict:
    """Hamiltonicity sufficient condition for a k-connected graph (k >= 2),
    evaluated with surrogate b = k + 1. Weak inequality, exactly as stated."""
    if part not in (1, 2, 3, 4, 5):
        raise ValueError(f"part must be 1..5, got {part}")
    if k < 2:
        raise ValueError("Hamiltonian conditions require k >= 2")
    if g.n < 3:
        raise ValueError("Hamiltonian conditions require n >= 3")
    if kappa is None:
        kappa = structure.vertex_connectivity(g)
    if kappa < k:
        raise ValueError(f"graph is not {k}-connected (kappa={kappa})")
    holds, bound, actual = _condition_holds(g, k + 1, part)
    return ConditionVerdict(theorem=2, part=part, k=k, holds=holds,
                            bound=bound, actual=actual)


def theorem3_condition(
    g: Graph, k: int, part: int, kappa: Optional[int] = None
) -> ConditionVerdict:
    """Traceability sufficient condition for a k-connected graph (k >= 1)
    with n >= 9, evaluated with surrogate b = k + 2."""
    if part not in (1, 2, 3, 4, 5):
        raise ValueError(f"part must be 1..5, got {part}")
    if k < 1:
        raise ValueError("traceable conditions require k >= 1")
    if g.n < 9:
        raise ValueError("traceable conditions require n >= 9")
    if kappa is None:
        kappa = structure.vertex_connectivity(g)
    if kappa < k:
        raise ValueError(f"graph is not {k}-connected (kappa={kappa})")
    holds, bound, actual = _condition_holds(g, k + 2, part)
    return ConditionVerdict(theorem=3, part=part, k=k, holds=holds,
                            bound=bound, actual=actual)
