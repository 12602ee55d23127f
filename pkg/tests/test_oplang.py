from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import polys
from qramsey.errors import OperatorSyntaxError
from qramsey.oplang import format_operator, parse_operator
from qramsey.weyl import HBAR, I, OperatorPoly, Scalar, builtin, commutator


def test_ccr_expression():
    assert parse_operator("px*x - x*px") == OperatorPoly.constant(-I * HBAR)


def test_angular_momentum_expression():
    assert parse_operator("(y*pz - z*py)/hbar") == builtin("l_x")


def test_identity_forced_by_ccr():
    assert parse_operator("x*px - px*x - i*hbar").is_zero()


def test_order_sensitivity():
    a, b = parse_operator("px*x"), parse_operator("x*px")
    assert a != b
    assert a - b == OperatorPoly.constant(-I * HBAR)
    assert commutator(builtin("p_x"), builtin("x")) == a - b


def test_generators_and_builtins():
    assert parse_operator("L2") == builtin("L2")
    assert parse_operator("lx*ly - ly*lx") == I * builtin("l_z")
    assert parse_operator("p_x") == parse_operator("px")


def test_whitespace_insensitive():
    assert parse_operator("  ( y * pz-z*py ) / hbar ") == builtin("l_x")


def test_rationals_and_powers():
    three_halves = Scalar({0: (Fraction(3, 2), 0)})
    assert parse_operator("3/2*x^2") == three_halves * builtin("x") ** 2
    assert parse_operator("x^0") == OperatorPoly.constant(1)
    assert parse_operator("-x + x") == OperatorPoly()


def test_division_binds_before_power():
    assert parse_operator("x/hbar^2") == parse_operator("x*x/hbar/hbar")


@pytest.mark.parametrize("src, column", [
    ("x/y", 3),
    ("x/(x+1)", 3),
    ("x^-1", 3),
    ("x^y", 3),
    ("x +", 4),
    ("2x", 2),
    ("1.5", 2),
    ("(x", 3),
    ("X", 1),
    ("x $ y", 3),
    ("x/0", 3),
    ("3*x^2/2", 6),
])
def test_errors_carry_column(src, column):
    with pytest.raises(OperatorSyntaxError) as info:
        parse_operator(src)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_error_messages_name_the_problem():
    with pytest.raises(OperatorSyntaxError, match="non-scalar"):
        parse_operator("x/y")
    with pytest.raises(OperatorSyntaxError, match="natural"):
        parse_operator("x^-1")
    with pytest.raises(OperatorSyntaxError):
        parse_operator("")


@pytest.mark.parametrize("name", ["x", "p_z", "l_x", "l_y", "L2"])
def test_round_trip_builtins(name):
    poly = builtin(name)
    assert parse_operator(format_operator(poly)) == poly


@settings(max_examples=300, deadline=None)
@given(polys())
def test_round_trip(poly):
    assert parse_operator(format_operator(poly)) == poly
