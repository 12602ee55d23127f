"""Exact commutator engine and Ramsey-graph analysis of quantum observables."""

from .audit import audit, parse_claims
from .catalog import BUILTIN_RULES, Catalog, EdgeColor, ObservableSpec, RuleTable, classify, resolve
from .graph import (
    build_graph,
    clique_report,
    export_dot,
    max_monochromatic_cliques,
    monochromatic_triangles,
    verify_r33,
)
from .jacobi import build_jacobi_hypergraph, jacobi_residual
from .oplang import parse_operator
from .weyl import (
    HBAR,
    I,
    OperatorPoly,
    Scalar,
    adjoint,
    builtin,
    commutator,
    is_hermitian,
    is_zero,
    linear_combine,
    mul,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_RULES", "Catalog", "EdgeColor", "HBAR", "I", "ObservableSpec", "OperatorPoly",
    "RuleTable", "Scalar", "adjoint", "audit", "build_graph", "build_jacobi_hypergraph",
    "builtin", "classify", "clique_report", "commutator", "export_dot", "is_hermitian",
    "is_zero", "jacobi_residual", "linear_combine", "max_monochromatic_cliques",
    "monochromatic_triangles", "mul", "parse_claims", "parse_operator", "resolve", "verify_r33",
]
