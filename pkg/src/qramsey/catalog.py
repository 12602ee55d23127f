"""Observable registry and the pairwise commutation classifier.

Polynomial observables are classified by computing their commutator
exactly. Non-polynomial ones (``r``, ``p_r``, Hamiltonians with a potential)
are *declared*: their verdicts come from a rule table in which every entry
carries a citation.
"""

from __future__ import annotations

import enum
import shlex
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .errors import CatalogError, ConfigError, UnclassifiablePairError
from .weyl import BUILTIN_ALIASES, BUILTIN_NAMES, OperatorPoly, builtin, commutator, is_hermitian

DEFAULT_PARTICLE = "A"


class EdgeColor(str, enum.Enum):
    RED = "red"      # commuting pair
    GREEN = "green"  # non-commuting pair

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ObservableSpec:
    """A graph vertex: either a symbolic polynomial or a declared symbol."""

    name: str
    poly: OperatorPoly | None = None
    symbol: str | None = None
    particle: str = DEFAULT_PARTICLE

    def __post_init__(self):
        if (self.poly is None) == (self.symbol is None):
            raise ValueError("exactly one of poly or symbol must be given")
        if self.poly is not None and not is_hermitian(self.poly):
            raise ValueError(f"observable {self.name!r} is not Hermitian: {self.poly}")

    @property
    def kind(self) -> str:
        return "symbolic" if self.poly is not None else "declared"

    @property
    def is_symbolic(self) -> bool:
        return self.poly is not None

    @property
    def key(self) -> str:
        """Identifier used for rule lookups."""
        return self.symbol if self.symbol is not None else self.name


@dataclass(frozen=True)
class Rule:
    color: EdgeColor
    citation: str


@dataclass(frozen=True)
class Classification:
    color: EdgeColor
    basis: str  # "computed", "declared" or "cross-particle"
    citation: str


def _pair(a: str, b: str) -> frozenset:
    return frozenset((a, b))


class RuleTable(Mapping):
    """Symmetric map from unordered name pairs to :class:`Rule`."""

    def __init__(self, rules: Mapping | None = None):
        self._rules = {}
        for key, rule in (rules or {}).items():
            self._rules[frozenset(key)] = rule

    def __getitem__(self, key):
        return self._rules[frozenset(key)]

    def __iter__(self):
        return iter(self._rules)

    def __len__(self):
        return len(self._rules)

    def lookup(self, a: str, b: str) -> Rule | None:
        return self._rules.get(_pair(a, b))

    def with_overlay(self, entries: Iterable[tuple], allow_override: bool = False) -> "RuleTable":
        """New table with ``(a, b, Rule)`` entries added.

        Entries touching a built-in verdict (a table entry, or a pair of
        built-in polynomial observables) are rejected unless
        ``allow_override`` is set.
        """
        merged = dict(self._rules)
        for a, b, rule in entries:
            key = _pair(a, b)
            builtin_pair = key in self._rules or (
                _canonical(a) in BUILTIN_NAMES and _canonical(b) in BUILTIN_NAMES
            )
            if builtin_pair and not allow_override:
                raise ConfigError(
                    f"rule for ({a}, {b}) overrides a built-in verdict; pass --allow-override"
                )
            merged[key] = rule
        return RuleTable(merged)


def parse_rule_overlay(text: str) -> list[tuple]:
    """Parse ``pair <a> <b> red|green "# citation"`` lines."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            fields = shlex.split(stripped)
        except ValueError as exc:
            raise ConfigError(f"rules line {lineno}: {exc}") from None
        if len(fields) != 5 or fields[0] != "pair" or fields[3] not in ("red", "green"):
            raise ConfigError(
                f'rules line {lineno}: expected `pair <a> <b> red|green "# citation"`, got {stripped!r}'
            )
        citation = fields[4].lstrip("#").strip()
        entries.append((_canonical(fields[1]), _canonical(fields[2]), Rule(EdgeColor(fields[3]), citation)))
    return entries


def load_rule_overlay(path, base: "RuleTable | None" = None, allow_override: bool = False) -> RuleTable:
    base = BUILTIN_RULES if base is None else base
    return base.with_overlay(parse_rule_overlay(Path(path).read_text()), allow_override)


DECLARED_SYMBOLS = ("r", "p_r", "H_central", "H_generic")
NAME_ALIASES = dict(BUILTIN_ALIASES, pr="p_r", H="H_central")

_TEXTBOOKS = "Messiah, Quantum Mechanics; Landau & Lifshitz, Quantum Mechanics"


def _canonical(name: str) -> str:
    return NAME_ALIASES.get(name, name)


def _build_central_field_rules() -> RuleTable:
    red, green = EdgeColor.RED, EdgeColor.GREEN
    coords = ("x", "y", "z")
    momenta = ("p_x", "p_y", "p_z")
    angular = ("l_x", "l_y", "l_z", "L2")
    rules: dict = {}

    def put(a, b, color, why):
        rules[_pair(a, b)] = Rule(color, f"{why} ({_TEXTBOOKS})")

    for q in coords:
        put("r", q, red, f"r is a function of the coordinates only, so [r, {q}] = 0")
        put("p_r", q, green, f"[{q}, p_r] = i hbar {q}/r")
        put("H_central", q, green, f"H contains p^2/2m, so [H, {q}] = -i hbar p_{q}/m")
    for p in momenta:
        put("r", p, green, f"[{p}, r] = -i hbar {p[-1]}/r")
        put("p_r", p, green, f"p_r = (x.p/r - i hbar/r) does not commute with {p}")
        put("H_central", p, green, f"[{p}, U(r)] = -i hbar dU/d{p[-1]} for non-constant U")
    for l in angular:
        put("r", l, red, f"r is rotation invariant, so [{l}, r] = 0")
        put("p_r", l, red, f"p_r is rotation invariant, so [{l}, p_r] = 0")
        put("H_central", l, red, f"H of a central field is rotation invariant, so [H, {l}] = 0")
    put("r", "p_r", green, "[r, p_r] = i hbar")
    put("r", "H_central", green, "[H, r] = -i hbar p_r/m")
    put("p_r", "H_central", green, "[H, p_r] contains dU/dr and the centrifugal term")
    put("H_central", "H_generic", green, "distinct Hamiltonians with different potentials")
    for other in coords + momenta + angular + ("r", "p_r"):
        put("H_generic", other, green,
            f"a Hamiltonian with a coordinate-dependent, non-symmetric potential fails to commute with {other}")
    for sym in DECLARED_SYMBOLS:
        put(sym, sym, red, "every operator commutes with itself")
    return RuleTable(rules)


BUILTIN_RULES = _build_central_field_rules()


@dataclass
class Catalog:
    """Name registry; starts with the built-in observables."""

    extra: dict = field(default_factory=dict)

    def register(self, spec: ObservableSpec) -> None:
        if spec.name in self.extra:
            raise ConfigError(f"observable {spec.name!r} registered twice")
        self.extra[spec.name] = spec

    def resolve(self, name: str) -> ObservableSpec:
        if name in self.extra:
            return self.extra[name]
        canonical = _canonical(name)
        if canonical in self.extra:
            return self.extra[canonical]
        if canonical in BUILTIN_NAMES:
            return ObservableSpec(canonical, poly=builtin(canonical))
        if canonical in DECLARED_SYMBOLS:
            return ObservableSpec(canonical, symbol=canonical)
        raise CatalogError(f"unknown observable {name!r}")


DEFAULT_CATALOG = Catalog()


def resolve(name: str, catalog: Catalog | None = None) -> ObservableSpec:
    return (catalog or DEFAULT_CATALOG).resolve(name)


def resolve_all(items, catalog: Catalog | None = None) -> list[ObservableSpec]:
    """Resolve names; already-built specs pass through unchanged."""
    catalog = catalog or DEFAULT_CATALOG
    return [i if isinstance(i, ObservableSpec) else catalog.resolve(i) for i in items]


def classify(a: ObservableSpec, b: ObservableSpec, rules: RuleTable = BUILTIN_RULES) -> Classification:
    """Red if ``a`` and ``b`` commute, Green otherwise, with provenance.

    Observables of different particles always commute. A rule-table entry
    takes precedence; symbolic pairs without one are computed exactly.
    Declared pairs with no entry raise :class:`UnclassifiablePairError`.
    """
    if a.particle != b.particle:
        return Classification(
            EdgeColor.RED, "cross-particle",
            f"{a.name} and {b.name} act on different particles",
        )
    rule = rules.lookup(a.key, b.key)
    if rule is not None:
        return Classification(rule.color, "declared", rule.citation)
    if a.is_symbolic and b.is_symbolic:
        c = commutator(a.poly, b.poly)
        if c.is_zero():
            return Classification(EdgeColor.RED, "computed", f"[{a.name}, {b.name}] = 0")
        return Classification(EdgeColor.GREEN, "computed", f"[{a.name}, {b.name}] = {c}")
    raise UnclassifiablePairError(a.name, b.name)
