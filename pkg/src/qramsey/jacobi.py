"""Jacobi-identity hypergraph over a set of observables."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .catalog import Catalog, resolve_all
from .weyl import ONE, OperatorPoly, commutator, linear_combine

HOLDS, FAILS, UNVERIFIABLE = "holds", "fails", "unverifiable"


def jacobi_residual(a: OperatorPoly, b: OperatorPoly, c: OperatorPoly) -> OperatorPoly:
    """``[a,[b,c]] + [b,[c,a]] + [c,[a,b]]``, computed exactly."""
    return linear_combine([
        (ONE, commutator(a, commutator(b, c))),
        (ONE, commutator(b, commutator(c, a))),
        (ONE, commutator(c, commutator(a, b))),
    ])


@dataclass
class JacobiHypergraph:
    vertices: tuple
    hyperedges: list  # (triple, status)

    def counts(self) -> dict:
        out = {HOLDS: 0, FAILS: 0, UNVERIFIABLE: 0}
        for _, status in self.hyperedges:
            out[status] += 1
        return out


def build_jacobi_hypergraph(names, catalog: Catalog | None = None) -> JacobiHypergraph:
    """One hyperedge per unordered triple.

    Triples with a declared (non-polynomial) member are ``unverifiable``.
    """
    specs = resolve_all(names, catalog)
    if len(specs) < 3:
        raise ValueError("the Jacobi hypergraph needs at least three observables")
    edges = []
    for sa, sb, sc in combinations(specs, 3):
        if not (sa.is_symbolic and sb.is_symbolic and sc.is_symbolic):
            status = UNVERIFIABLE
        elif jacobi_residual(sa.poly, sb.poly, sc.poly).is_zero():
            status = HOLDS
        else:
            status = FAILS
        edges.append(((sa.name, sb.name, sc.name), status))
    return JacobiHypergraph(tuple(s.name for s in specs), edges)
