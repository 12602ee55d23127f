from itertools import permutations
from math import comb

from hypothesis import given, settings

from conftest import polys
from qramsey.fixtures import SYMBOLIC_BASIS
from qramsey.jacobi import FAILS, HOLDS, UNVERIFIABLE, build_jacobi_hypergraph, jacobi_residual
from qramsey.weyl import builtin


def test_residual_examples():
    x, px = builtin("x"), builtin("p_x")
    assert jacobi_residual(x, px, px * px).is_zero()
    assert jacobi_residual(builtin("l_x"), builtin("l_y"), builtin("l_z")).is_zero()
    assert jacobi_residual(x, builtin("y"), builtin("z")).is_zero()


def test_symbolic_basis_all_hold():
    h = build_jacobi_hypergraph(SYMBOLIC_BASIS)
    assert len(h.hyperedges) == comb(10, 3) == 120
    assert h.counts() == {HOLDS: 120, FAILS: 0, UNVERIFIABLE: 0}


def test_declared_member_is_unverifiable():
    h = build_jacobi_hypergraph(["r", "p_x", "x"])
    assert h.hyperedges == [(("r", "p_x", "x"), UNVERIFIABLE)]


def test_mixed_set():
    h = build_jacobi_hypergraph(["x", "p_x", "l_z"])
    assert h.hyperedges == [(("x", "p_x", "l_z"), HOLDS)]
    h = build_jacobi_hypergraph(["x", "p_x", "l_z", "H_central", "r"])
    assert len(h.hyperedges) == comb(5, 3)
    assert h.counts()[HOLDS] == 1 and h.counts()[UNVERIFIABLE] == 9


@settings(max_examples=100, deadline=None)
@given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3))
def test_residual_vanishes_and_is_permutation_invariant(a, b, c):
    for p, q, r in permutations((a, b, c)):
        assert jacobi_residual(p, q, r).is_zero()
