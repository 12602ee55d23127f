"""Check textual claims about a colored graph against its derived coloring.

Claims file lines (``#`` starts a comment)::

    claim <tag> mono <red|green|any> <v1> <v2> <v3>   triangle is monochromatic
    claim <tag> none [red|green]                      no monochromatic triangle
    claim <tag> all <red|green>                       every edge has this color
    claim <tag> bicolored                             both colors occur
    claim <tag> quad <red|green> <v1> <v2> <v3> <v4>  "monochromatic quadrangle"

A quadrangle claim is never confirmed or refuted: a cycle of commuting
pairs does not make the four observables jointly measurable, so the verdict
is ``unverifiable`` with the edge colors as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .catalog import EdgeColor
from .errors import ClaimSyntaxError
from .graph import ColoredGraph, monochromatic_triangles

CONFIRMED, REFUTED, UNVERIFIABLE = "confirmed", "refuted", "unverifiable"
_COLORS = ("red", "green")


@dataclass(frozen=True)
class Claim:
    tag: str
    kind: str
    color: str | None
    vertices: tuple

    def describe(self) -> str:
        if self.kind == "mono":
            color = "" if self.color == "any" else f" {self.color}"
            return f"triangle ({', '.join(self.vertices)}) is monochromatic{color}"
        if self.kind == "none":
            color = f" {self.color}" if self.color else ""
            return f"no monochromatic{color} triangle"
        if self.kind == "all":
            return f"all edges are {self.color}"
        if self.kind == "bicolored":
            return "graph is bi-colored"
        return f"quadrangle ({', '.join(self.vertices)}) is monochromatic {self.color}"


@dataclass(frozen=True)
class Discrepancy:
    tag: str
    claimed: str
    derived: str
    verdict: str


@dataclass
class DiscrepancyReport:
    claims: list

    def by_verdict(self, verdict: str) -> list:
        return [c for c in self.claims if c.verdict == verdict]

    @property
    def refuted(self) -> list:
        return self.by_verdict(REFUTED)


def parse_claims(text: str) -> list[Claim]:
    claims = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        f = line.split()
        if len(f) < 3 or f[0] != "claim":
            raise ClaimSyntaxError(f"claims line {lineno}: expected `claim <tag> <kind> ...`, got {line!r}")
        tag, kind, rest = f[1], f[2], f[3:]
        if kind == "mono" and len(rest) == 4 and rest[0] in _COLORS + ("any",):
            claims.append(Claim(tag, kind, rest[0], tuple(rest[1:])))
        elif kind == "none" and (not rest or (len(rest) == 1 and rest[0] in _COLORS)):
            claims.append(Claim(tag, kind, rest[0] if rest else None, ()))
        elif kind == "all" and len(rest) == 1 and rest[0] in _COLORS:
            claims.append(Claim(tag, kind, rest[0], ()))
        elif kind == "bicolored" and not rest:
            claims.append(Claim(tag, kind, None, ()))
        elif kind == "quad" and len(rest) == 5 and rest[0] in _COLORS:
            claims.append(Claim(tag, kind, rest[0], tuple(rest[1:])))
        else:
            raise ClaimSyntaxError(f"claims line {lineno}: malformed {kind!r} claim: {line!r}")
    return claims


def _edge_text(g: ColoredGraph, vertices) -> str:
    return ", ".join(f"({a},{b})={g.color(a, b).value}" for a, b in combinations(vertices, 2))


def _check(g: ColoredGraph, claim: Claim, tri) -> tuple[str, str]:
    missing = [v for v in claim.vertices if v not in g.vertices]
    if missing:
        return UNVERIFIABLE, f"not a vertex of the graph: {', '.join(missing)}"

    if claim.kind == "mono":
        colors = {g.color(a, b) for a, b in combinations(claim.vertices, 2)}
        evidence = _edge_text(g, claim.vertices)
        ok = len(colors) == 1 and (claim.color == "any" or colors == {EdgeColor(claim.color)})
        return (CONFIRMED if ok else REFUTED), evidence

    if claim.kind == "none":
        wanted = [EdgeColor(claim.color)] if claim.color else list(EdgeColor)
        found = [(c, t) for c in wanted for t in tri.triangles(c)]
        if not found:
            return CONFIRMED, "no such triangle among all C(n,3) triples"
        parts = [f"{c.value} ({', '.join(t)}): {_edge_text(g, t)}" for c, t in found]
        return REFUTED, "; ".join(parts)

    if claim.kind == "all":
        target = EdgeColor(claim.color)
        off = [(a, b) for (a, b), e in g.edges.items() if e.color is not target]
        if not off:
            return CONFIRMED, f"all {len(g.edges)} edges {target.value}"
        return REFUTED, ", ".join(f"({a},{b})={g.color(a, b).value}" for a, b in off)

    if claim.kind == "bicolored":
        counts = {c: sum(e.color is c for e in g.edges.values()) for c in EdgeColor}
        text = f"{counts[EdgeColor.RED]} red, {counts[EdgeColor.GREEN]} green edges"
        return (CONFIRMED if all(counts.values()) else REFUTED), text

    # quad
    target = EdgeColor(claim.color)
    v = claim.vertices
    cycles = [(v[0], b, c, d) for b, c, d in ((v[1], v[2], v[3]), (v[1], v[3], v[2]), (v[2], v[1], v[3]))]
    mono_cycles = [
        cyc for cyc in cycles
        if all(g.color(cyc[i], cyc[(i + 1) % 4]) is target for i in range(4))
    ]
    is_clique = all(g.color(a, b) is target for a, b in combinations(v, 2))
    cycle_text = (
        f"{target.value} 4-cycle {'-'.join(mono_cycles[0])}" if mono_cycles else f"no {target.value} 4-cycle"
    )
    clique_text = "is" if is_clique else "is not"
    return UNVERIFIABLE, (
        f"{cycle_text}; the set {clique_text} a {target.value} 4-clique; edges: {_edge_text(g, v)}"
    )


def audit(g: ColoredGraph, claims) -> DiscrepancyReport:
    """Mark each claim confirmed, refuted or unverifiable, with evidence."""
    if isinstance(claims, str):
        claims = parse_claims(claims)
    tri = monochromatic_triangles(g)
    entries = []
    for claim in claims:
        verdict, derived = _check(g, claim, tri)
        entries.append(Discrepancy(claim.tag, claim.describe(), derived, verdict))
    return DiscrepancyReport(entries)
