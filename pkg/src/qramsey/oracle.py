"""Finite-matrix cross-check of symbolic commutation verdicts.

Each axis is truncated to ``N`` harmonic-oscillator levels with hbar = 1,
``x = (a^+ + a)/sqrt(2)`` and ``p = i (a^+ - a)/sqrt(2)``; the three axes are
combined as ``x (x) y (x) z``. Truncated ladder operators break the
commutation relation near the cutoff, so comparisons are restricted to the
interior levels ``0 .. N - D - 2`` on every axis, where ``D`` is the combined
polynomial degree. Those matrix elements never touch the cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .catalog import Catalog, EdgeColor, classify, resolve_all
from .weyl import OperatorPoly, commutator


@dataclass(frozen=True)
class MatrixRep:
    dim_per_axis: int
    matrix: np.ndarray
    degree: int


@lru_cache(maxsize=None)
def ladder(n: int) -> np.ndarray:
    """Annihilation operator on ``n`` levels."""
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1).astype(complex)


@lru_cache(maxsize=None)
def position_matrix(n: int) -> np.ndarray:
    a = ladder(n)
    return (a.conj().T + a) / np.sqrt(2)


@lru_cache(maxsize=None)
def momentum_matrix(n: int) -> np.ndarray:
    a = ladder(n)
    return 1j * (a.conj().T - a) / np.sqrt(2)


@lru_cache(maxsize=None)
def _axis_word(n: int, xp: int, pp: int) -> np.ndarray:
    # x^xp p^pp on one axis, in that order
    out = np.linalg.matrix_power(position_matrix(n), xp) @ np.linalg.matrix_power(momentum_matrix(n), pp)
    out.setflags(write=False)
    return out


def matrix_rep(a: OperatorPoly, n: int) -> MatrixRep:
    """Dense ``n^3 x n^3`` matrix of ``a`` with hbar = 1."""
    if n < a.degree + 2:
        raise ValueError(f"N={n} too small for degree {a.degree}; need N >= {a.degree + 2}")
    out = np.zeros((n ** 3, n ** 3), dtype=complex)
    for mono, coeff in a.terms.items():
        block = np.kron(
            np.kron(_axis_word(n, mono.x, mono.px), _axis_word(n, mono.y, mono.py)),
            _axis_word(n, mono.z, mono.pz),
        )
        out += coeff.to_complex(1.0) * block
    return MatrixRep(n, out, a.degree)


def interior_indices(n: int, degree: int) -> np.ndarray:
    top = n - degree - 2
    if top < 0:
        raise ValueError(f"N={n} too small for combined degree {degree}; need N >= {degree + 2}")
    levels = range(top + 1)
    return np.array([i * n * n + j * n + k for i, j, k in product(levels, levels, levels)])


def numeric_commutator_defect(a: OperatorPoly, b: OperatorPoly, n: int, tol: float = 1e-9):
    """Return ``(defect, color)``.

    ``defect`` is the largest entry of ``P([M_a, M_b] - M_[a,b])P``; the color
    is Red when the projected numeric commutator ``P[M_a, M_b]P`` vanishes
    within ``tol``.

    A Red verdict only means the commutator vanishes on the interior block.
    When that block is narrow (one or two levels per axis) a nonzero
    commutator can look Red; ``[x p_z, z p_x]`` at N=7 is an example. Green
    verdicts are always genuine.
    """
    degree = a.degree + b.degree
    if n < degree + 2:
        raise ValueError(f"N={n} too small for combined degree {degree}; need N >= {degree + 2}")
    idx = interior_indices(n, degree)
    ma = matrix_rep(a, n).matrix
    mb = matrix_rep(b, n).matrix
    numeric = ma[idx, :] @ mb[:, idx] - mb[idx, :] @ ma[:, idx]
    symbolic = matrix_rep(commutator(a, b), n).matrix[np.ix_(idx, idx)]
    defect = float(np.max(np.abs(numeric - symbolic))) if idx.size else 0.0
    color = EdgeColor.RED if np.max(np.abs(numeric)) <= tol else EdgeColor.GREEN
    return defect, color


def ccr_defect(n: int) -> float:
    """``max |P([x, p] - i)P|`` on one axis."""
    x, p = position_matrix(n), momentum_matrix(n)
    c = x @ p - p @ x - 1j * np.eye(n)
    k = n - 3  # interior levels 0..N-4 for combined degree 2
    return float(np.max(np.abs(c[:k, :k])))


@dataclass(frozen=True)
class PairAgreement:
    a: str
    b: str
    symbolic: EdgeColor
    numeric: EdgeColor
    defect: float

    @property
    def agrees(self) -> bool:
        return self.symbolic is self.numeric


@dataclass
class AgreementReport:
    pairs: list

    @property
    def mismatches(self) -> int:
        return sum(not p.agrees for p in self.pairs)


def agreement_check(names, n: int = 8, tol: float = 1e-9, catalog: Catalog | None = None) -> AgreementReport:
    """Compare symbolic and numeric colors for every pair of symbolic observables."""
    specs = resolve_all(names, catalog)
    declared = [s.name for s in specs if not s.is_symbolic]
    if declared:
        raise ValueError(f"the matrix oracle needs symbolic observables; declared: {', '.join(declared)}")
    pairs = []
    for sa, sb in combinations(specs, 2):
        symbolic = classify(sa, sb).color
        defect, numeric = numeric_commutator_defect(sa.poly, sb.poly, n, tol)
        pairs.append(PairAgreement(sa.name, sb.name, symbolic, numeric, defect))
    return AgreementReport(pairs)
