from fractions import Fraction

from hypothesis import strategies as st

from qramsey.weyl import Monomial, OperatorPoly, Scalar

SMALL = st.integers(min_value=-3, max_value=3)


@st.composite
def scalars(draw, nonzero=False):
    re = Fraction(draw(SMALL), draw(st.integers(1, 3)))
    im = Fraction(draw(SMALL), draw(st.integers(1, 3)))
    if nonzero and not re and not im:
        re = Fraction(1)
    return Scalar({draw(st.integers(-1, 1)): (re, im)})


@st.composite
def monomials(draw, max_degree=3):
    exps = [0] * 6
    for _ in range(draw(st.integers(0, max_degree))):
        exps[draw(st.integers(0, 5))] += 1
    return Monomial(*exps)


@st.composite
def polys(draw, max_terms=4, max_degree=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(monomials(max_degree))] = draw(scalars(nonzero=True))
    return OperatorPoly(terms)


# One line per acceptance criterion, printed after the test summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
