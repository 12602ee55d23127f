"""Acceptance gate: eight end-to-end criteria with tolerances and time limits.

Each criterion prints one PASS/FAIL line. Under pytest the lines are collected
and shown in an "acceptance criteria" section after the summary; running this
file directly prints them as it goes.
"""

import json
import math
import random
import sys
import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE_LINES, polys
from qramsey import reports
from qramsey.audit import CONFIRMED, REFUTED, audit
from qramsey.catalog import EdgeColor
from qramsey.fixtures import FIG3B_GENERIC, FIGURES_BY_KEY, SYMBOLIC_BASIS
from qramsey.graph import build_graph, clique_report, export_dot, verify_r33
from qramsey.interference import (
    InterferenceConfig,
    decohered_pattern,
    fringe_visibility,
    incoherent_pattern,
    normalized,
    pattern,
)
from qramsey.jacobi import HOLDS, build_jacobi_hypergraph, jacobi_residual
from qramsey.oplang import format_operator, parse_operator
from qramsey.oracle import agreement_check, ccr_defect
from qramsey.weyl import (
    BUILTIN_NAMES,
    I,
    Monomial,
    OperatorPoly,
    Scalar,
    adjoint,
    builtin,
    commutator,
    is_hermitian,
)

GREEN = EdgeColor.GREEN
AXES = ("x", "y", "z")


def fig_audit(key_or_fixture):
    fig = FIGURES_BY_KEY[key_or_fixture] if isinstance(key_or_fixture, str) else key_or_fixture
    g = build_graph(fig.vertices)
    return g, {d.claimed: d for d in audit(g, fig.claims).claims}


# 1. angular-momentum rules derived from the CCR alone

def levi_civita(i, j, k):
    return (i - j) * (j - k) * (k - i) // 2


def criterion_1():
    r = [builtin(a) for a in AXES]
    p = [builtin("p_" + a) for a in AXES]
    l = [builtin("l_" + a) for a in AXES]
    checked = 0
    for i in range(3):
        for j in range(3):
            # [l_i, x_j] = i eps_ijk x_k, [l_i, p_j] = i eps_ijk p_k, [l_i, l_j] = i eps_ijk l_k
            for family in (r, p, l):
                expected = OperatorPoly({})
                for k in range(3):
                    if levi_civita(i, j, k):
                        expected = expected + I * Scalar.of(levi_civita(i, j, k)) * family[k]
                assert commutator(l[i], family[j]) == expected, (i, j)
                checked += 1
    assert checked == 27
    return "27/27 identities derived exactly"


# 2. figure golden tests

def criterion_2():
    g, d = fig_audit("fig1a")
    colors = sorted(e.color.value for e in g.edges.values())
    assert colors == ["green", "red", "red"]
    assert all(v.verdict == CONFIRMED for v in d.values())

    g, d = fig_audit("fig1b")
    assert all(e.color is GREEN for e in g.edges.values())
    assert all(v.verdict == CONFIRMED for v in d.values())

    g, d = fig_audit("fig1c")
    rep = clique_report(g)
    assert rep.red_triangles == [] and rep.green_triangles == []
    assert all(v.verdict == CONFIRMED for v in d.values())

    g, d = fig_audit("fig4")
    rep = clique_report(g)
    assert rep.green_triangles == []
    for tri in [("p_x", "p_y", "p_z"), ("p_y", "p_z", "x"), ("p_z", "x", "y"), ("x", "y", "z")]:
        assert tri in rep.red_triangles, tri
    assert all(v.verdict == CONFIRMED for v in d.values())
    return "figs 1a, 1b, 1c, 4 match"


# 3. discrepancy audit

def assert_refuted_with_colors(entry):
    assert entry.verdict == REFUTED, entry
    assert "=green" in entry.derived or "=red" in entry.derived, entry.derived


def criterion_3():
    _, d = fig_audit("fig2a")
    assert_refuted_with_colors(d["triangle (p_y, z, y) is monochromatic red"])
    _, d = fig_audit("fig2b")
    assert_refuted_with_colors(d["triangle (p_x, p_y, l_y) is monochromatic red"])
    _, d = fig_audit("fig3a")
    assert_refuted_with_colors(d["triangle (p_x, l_x, x) is monochromatic green"])
    _, d = fig_audit("fig3c")
    assert_refuted_with_colors(d["triangle (r, p_r, L2) is monochromatic red"])

    _, d = fig_audit("fig3b")
    assert d["no monochromatic triangle"].verdict == CONFIRMED
    _, d = fig_audit(FIG3B_GENERIC)
    assert_refuted_with_colors(d["no monochromatic triangle"])
    return "4 caption claims refuted with edge colors; fig 3b confirmed under H_central, refuted under H_generic"


# 4. Ramsey certificate

def criterion_4():
    cert = verify_r33()
    assert cert.k6_colorings_checked == 2 ** 15 == 32768
    assert cert.k6_all_contain_mono_triangle
    assert cert.k5_witness_mono_triangles == 0
    assert cert.valid
    return "32768/32768 K6 colorings have a mono triangle; K5 pentagon has none"


# 5. Jacobi identity

def random_poly(rng, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * 6
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(6)] += 1
        coeff = Scalar({rng.randint(-1, 1): (Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                             Fraction(rng.randint(-4, 4), rng.randint(1, 3)))})
        terms[Monomial(*exps)] = coeff
    return OperatorPoly(terms)


def criterion_5():
    h = build_jacobi_hypergraph(SYMBOLIC_BASIS)
    assert len(h.hyperedges) == math.comb(10, 3) == 120
    assert all(status == HOLDS for _, status in h.hyperedges)
    rng = random.Random(20240613)
    for _ in range(200):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert max(a.degree, b.degree, c.degree) <= 3
        assert jacobi_residual(a, b, c).is_zero()
    return "120/120 catalog triples and 200/200 random triples have zero residual"


# 6. matrix oracle agreement

def criterion_6():
    r = agreement_check(SYMBOLIC_BASIS, 8, 1e-9)
    assert len(r.pairs) == 45
    assert r.mismatches == 0
    defect = ccr_defect(8)
    assert defect < 1e-12
    return f"45/45 pairs agree at N=8; interior CCR defect {defect:.1e}"


# 7. interference

CENTRAL = (-10.0, 10.0)
GAMMAS = (0.0, math.log(2), 2.0)
GRID = (0.0, 0.5, 1.0, 2.0, 4.0)


def criterion_7():
    cfg = InterferenceConfig.uniform(2)
    coherent = pattern(cfg)
    s = coherent.positions
    assert len(s) == 1201
    k, w, d, big_l = cfg.wavenumber, cfg.slit_width, 5.0, cfg.screen_distance
    closed = 4 * np.sinc(k * w * s / (2 * big_l) / np.pi) ** 2 * np.cos(k * d * s / (2 * big_l)) ** 2
    err = float(np.max(np.abs(coherent.intensities - closed)))
    assert err < 1e-12, err

    # fringe visibility relative to the single-slit envelope
    env = incoherent_pattern(cfg)
    v0 = fringe_visibility(normalized(coherent, env), CENTRAL)
    worst = 0.0
    for gamma in GAMMAS:
        vg = fringe_visibility(normalized(decohered_pattern(cfg, gamma), env), CENTRAL)
        worst = max(worst, abs(vg - math.exp(-gamma) * v0))
    assert worst < 1e-6, worst

    assert np.array_equal(decohered_pattern(cfg, 0.0).intensities, coherent.intensities)

    vis = [fringe_visibility(decohered_pattern(cfg, g), CENTRAL) for g in GRID]
    assert all(a > b for a, b in zip(vis, vis[1:])), vis
    return f"closed-form error {err:.1e}; visibility error {worst:.1e}; gamma=0 identical; monotone"


# 8. property suites, 1000 cases each

PROPERTY = settings(max_examples=1000, derandomize=True, deadline=None,
                    suppress_health_check=list(HealthCheck))
SMALL_POLYS = polys(max_terms=3, max_degree=2)


@PROPERTY
@given(SMALL_POLYS, SMALL_POLYS, SMALL_POLYS)
def prop_ring_axioms(a, b, c):
    zero, one = OperatorPoly({}), OperatorPoly.constant(1)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert a + zero == a and a * one == a == one * a
    assert (a - a).is_zero()


@PROPERTY
@given(polys(), polys())
def prop_antisymmetry(a, b):
    assert commutator(a, b) == -commutator(b, a)
    assert commutator(a, a).is_zero()


@PROPERTY
@given(st.lists(st.tuples(st.sampled_from(BUILTIN_NAMES), st.integers(-5, 5)), min_size=1, max_size=4),
       st.sampled_from(BUILTIN_NAMES), st.sampled_from(BUILTIN_NAMES))
def prop_builtins_hermitian(combo, u, v):
    total = OperatorPoly({})
    for name, c in combo:
        total = total + Scalar.of(c) * builtin(name)
    assert is_hermitian(total)
    a, b = builtin(u), builtin(v)
    assert is_hermitian(a * b + b * a)
    assert adjoint(a * b) == b * a
    assert is_hermitian(I * commutator(a, b))


@PROPERTY
@given(polys())
def prop_parser_round_trip(a):
    text = format_operator(a)
    assert parse_operator(text) == a
    assert format_operator(parse_operator(text)) == text


CATALOG_NAMES = list(SYMBOLIC_BASIS) + ["r", "p_r", "H_central", "H_generic"]


@PROPERTY
@given(st.lists(st.sampled_from(CATALOG_NAMES), min_size=2, max_size=8, unique=True))
def prop_deterministic_exports(names):
    outputs = []
    for _ in range(2):
        g = build_graph(names)
        rep = clique_report(g)
        outputs.append((export_dot(g, rep), reports.dumps(reports.graph_payload(g, rep))))
    assert outputs[0] == outputs[1]
    json.loads(outputs[0][1])


def criterion_8():
    for prop in (prop_ring_axioms, prop_antisymmetry, prop_builtins_hermitian,
                 prop_parser_round_trip, prop_deterministic_exports):
        prop()
    return "5 property suites x 1000 cases"


CRITERIA = [
    (1, "commutation-rule derivation", criterion_1, 1.0),
    (2, "figure golden tests", criterion_2, 1.0),
    (3, "discrepancy audit", criterion_3, 1.0),
    (4, "Ramsey certificate", criterion_4, 1.0),
    (5, "Jacobi identity", criterion_5, 10.0),
    (6, "matrix oracle agreement", criterion_6, 30.0),
    (7, "interference", criterion_7, 5.0),
    (8, "property suites", criterion_8, 30.0),
]


def evaluate(number, title, fn, limit):
    """Run one criterion; return (passed, line)."""
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except Exception as exc:
        detail, ok = f"{type(exc).__name__}: {exc}", False
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok, detail = False, f"{detail}; too slow"
    verdict = "PASS" if ok else "FAIL"
    return ok, f"[{verdict}] criterion {number} ({title}): {detail} [{elapsed:.2f}s < {limit:g}s]"


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, line = evaluate(number, title, fn, limit)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
