from itertools import combinations

import pytest

from qramsey.catalog import (
    BUILTIN_RULES,
    DECLARED_SYMBOLS,
    Catalog,
    EdgeColor,
    ObservableSpec,
    Rule,
    classify,
    parse_rule_overlay,
    resolve,
)
from qramsey.errors import CatalogError, ConfigError, UnclassifiablePairError
from qramsey.weyl import BUILTIN_NAMES, I, builtin

RED, GREEN = EdgeColor.RED, EdgeColor.GREEN
TABLE_NAMES = ("r", "p_r", "l_x", "l_y", "l_z", "L2", "H_central", "H_generic",
               "x", "y", "z", "p_x", "p_y", "p_z")


def color(a, b, rules=BUILTIN_RULES):
    return classify(resolve(a), resolve(b), rules).color


def test_resolve_examples():
    px = resolve("p_x")
    assert px.kind == "symbolic" and px.poly == builtin("p_x")
    assert resolve("r").kind == "declared" and resolve("r").symbol == "r"
    assert resolve("H_central").kind == "declared"
    assert resolve("px").name == "p_x"
    with pytest.raises(CatalogError):
        resolve("q")


@pytest.mark.parametrize("a, b, expected", [
    ("p_x", "p_y", RED),
    ("p_x", "x", GREEN),
    ("r", "l_z", RED),
    ("r", "p_r", GREEN),
    ("H_central", "l_z", RED),
])
def test_classify_examples(a, b, expected):
    assert color(a, b) is expected


def test_provenance():
    computed = classify(resolve("p_x"), resolve("x"))
    assert computed.basis == "computed" and "hbar" in computed.citation
    declared = classify(resolve("r"), resolve("l_z"))
    assert declared.basis == "declared" and "Landau" in declared.citation


def test_table_is_total_over_declared_pairs():
    for a, b in combinations(TABLE_NAMES, 2):
        if a in DECLARED_SYMBOLS or b in DECLARED_SYMBOLS:
            assert BUILTIN_RULES.lookup(a, b) is not None, (a, b)
        color(a, b)  # never raises


@pytest.mark.parametrize("a, b", list(combinations(TABLE_NAMES, 2)))
def test_classify_symmetric(a, b):
    assert color(a, b) is color(b, a)


def test_hamiltonian_rules():
    for other in ("l_x", "l_y", "l_z", "L2"):
        assert color("H_central", other) is RED
    for other in ("x", "y", "z", "p_x", "p_y", "p_z", "r", "p_r"):
        assert color("H_central", other) is GREEN
    for other in ("x", "y", "z", "p_x", "p_y", "p_z", "l_x", "l_y", "l_z", "r", "p_r", "H_central"):
        assert color("H_generic", other) is GREEN
    assert color("H_generic", "H_generic") is RED


def test_unclassifiable_pair_names_both():
    foo = ObservableSpec("foo", symbol="foo")
    with pytest.raises(UnclassifiablePairError, match=r"\(foo, r\)"):
        classify(foo, resolve("r"))


def test_cross_particle_pairs_commute():
    xb = ObservableSpec("x_B", poly=builtin("x"), particle="B")
    c = classify(resolve("p_x"), xb)
    assert c.color is RED and c.basis == "cross-particle"


def test_non_hermitian_symbolic_rejected():
    with pytest.raises(ValueError, match="Hermitian"):
        ObservableSpec("ix", poly=I * builtin("x"))


def test_overlay_parsing_and_lookup():
    text = '# comment\npair foo r red "# assumed radial symmetry"\npair foo px green "# depends on x"\n'
    entries = parse_rule_overlay(text)
    assert entries[0] == ("foo", "r", Rule(RED, "assumed radial symmetry"))
    assert entries[1][:2] == ("foo", "p_x")
    rules = BUILTIN_RULES.with_overlay(entries)
    foo = ObservableSpec("foo", symbol="foo")
    assert classify(foo, resolve("r"), rules).color is RED
    assert classify(resolve("p_x"), foo, rules).color is GREEN


def test_overlay_cannot_override_builtins_without_flag():
    with pytest.raises(ConfigError, match="allow-override"):
        BUILTIN_RULES.with_overlay(parse_rule_overlay('pair r l_z green "# no"'))
    with pytest.raises(ConfigError):
        BUILTIN_RULES.with_overlay(parse_rule_overlay('pair x px red "# no"'))
    rules = BUILTIN_RULES.with_overlay(parse_rule_overlay('pair x px red "# forced"'), allow_override=True)
    assert color("x", "p_x", rules) is RED


@pytest.mark.parametrize("line", ["pair a b blue \"# c\"", "pair a red", "rule a b red \"# c\""])
def test_overlay_malformed(line):
    with pytest.raises(ConfigError):
        parse_rule_overlay(line)


def test_registered_observables_resolve():
    cat = Catalog()
    cat.register(ObservableSpec("sym_xp", poly=builtin("x") * builtin("p_x") + builtin("p_x") * builtin("x")))
    assert cat.resolve("sym_xp").is_symbolic
    with pytest.raises(ConfigError):
        cat.register(ObservableSpec("sym_xp", symbol="s"))


def test_builtin_names_all_symbolic():
    assert all(resolve(n).is_symbolic for n in BUILTIN_NAMES)
