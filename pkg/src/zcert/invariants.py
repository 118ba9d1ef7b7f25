"""Exact degree-based indices and the Radon-type inequality chain.

All fractional quantities are ``fractions.Fraction`` values: comparisons and
equality detection downstream are exact, never tolerance-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graphs import Graph


class IsolatedVertexError(ValueError):
    """Inverse degree requested for a graph with minimum degree 0."""


def first_zagreb(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in g.degrees())


def forgotten_index(g: Graph) -> int:
    """Sum of cubed vertex degrees."""
    return sum(d * d * d for d in g.degrees())


def inverse_degree(g: Graph) -> Fraction:
    """Sum of reciprocal vertex degrees; requires minimum degree >= 1."""
    total = Fraction(0)
    for d in g.degrees():
        if d == 0:
            raise IsolatedVertexError("inverse degree undefined with an isolated vertex")
        total += Fraction(1, d)
    return total


def min_max_degree(g: Graph) -> tuple[int, int]:
    if g.n == 0:
        raise ValueError("degree extrema undefined for the empty graph")
    degs = g.degrees()
    return min(degs), max(degs)


def radon_chain(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[Fraction, Fraction, Fraction]:
    """Evaluate both sides of the Radon-type inequality chain.

    Returns (lhs, mid, rhs) where
      lhs = (sum a_i^3/b_i * sum b_i^3/a_i - (sum a_i b_i)^2) / 2
      mid = sum a_i^2 * sum b_i^2 - (sum a_i b_i)^2
      rhs = 0
    and lhs >= mid >= rhs holds for positive entries (the caller asserts it).
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise ValueError("empty sequences")
    a = [Fraction(x) for x in a]  # int entries would fall into float division
    b = [Fraction(y) for y in b]
    if any(x <= 0 for x in a) or any(y <= 0 for y in b):
        raise ValueError("entries must be positive")
    cross = sum(x * y for x, y in zip(a, b))
    lhs = Fraction(1, 2) * (
        sum(x ** 3 / y for x, y in zip(a, b)) * sum(y ** 3 / x for x, y in zip(a, b))
        - cross * cross
    )
    mid = sum(x * x for x in a) * sum(y * y for y in b) - cross * cross
    return lhs, mid, Fraction(0)


@dataclass(frozen=True)
class InvariantProfile:
    """Bundle of the basic counts and index values of one graph.

    ``inv`` is None when the graph has an isolated vertex. ``beta`` and
    ``kappa`` are filled on demand (structure module); None until computed.
    """

    n: int
    e: int
    delta: int
    Delta: int
    z1: int
    f: int
    inv: Optional[Fraction]
    beta: Optional[int] = None
    kappa: Optional[int] = None


def profile(g: Graph, with_structure: bool = False) -> InvariantProfile:
    """Compute the index profile; optionally also beta and kappa."""
    delta, Delta = min_max_degree(g)
    inv = None if delta == 0 else inverse_degree(g)
    beta = kappa = None
    if with_structure:
        from . import structure

        beta = structure.independence_number(g).beta
        kappa = structure.vertex_connectivity(g)
    return InvariantProfile(
        n=g.n,
        e=g.edge_count,
        delta=delta,
        Delta=Delta,
        z1=first_zagreb(g),
        f=forgotten_index(g),
        inv=inv,
        beta=beta,
        kappa=kappa,
    )
