"""Bi-colored complete graphs over observables and their monochromatic cliques."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .catalog import (
    BUILTIN_RULES,
    Catalog,
    Classification,
    EdgeColor,
    RuleTable,
    classify,
    resolve_all,
)
from .errors import ConfigError


@dataclass(frozen=True)
class ColoredGraph:
    """Complete graph with every edge colored. Vertex order is the input order."""

    vertices: tuple
    edges: dict  # (a, b) with a before b in vertex order -> Classification

    def edge(self, a: str, b: str) -> Classification:
        if (a, b) in self.edges:
            return self.edges[(a, b)]
        return self.edges[(b, a)]

    def color(self, a: str, b: str) -> EdgeColor:
        return self.edge(a, b).color

    def neighbors(self, color: EdgeColor) -> dict:
        adj = {v: set() for v in self.vertices}
        for (a, b), cls in self.edges.items():
            if cls.color is color:
                adj[a].add(b)
                adj[b].add(a)
        return adj


@dataclass
class CliqueReport:
    red_triangles: list = field(default_factory=list)
    green_triangles: list = field(default_factory=list)
    max_red_cliques: list = field(default_factory=list)
    max_green_cliques: list = field(default_factory=list)

    def triangles(self, color: EdgeColor) -> list:
        return self.red_triangles if color is EdgeColor.RED else self.green_triangles


def build_graph(names, rules: RuleTable = BUILTIN_RULES, catalog: Catalog | None = None) -> ColoredGraph:
    """Color every pair of the given observables (names or specs)."""
    specs = resolve_all(names, catalog)
    vertices = tuple(s.name for s in specs)
    if len(set(vertices)) != len(vertices):
        dupes = sorted({v for v in vertices if vertices.count(v) > 1})
        raise ConfigError(f"duplicate observable names: {', '.join(dupes)}")
    if len(vertices) < 2:
        raise ConfigError("a graph needs at least two observables")
    edges = {}
    for sa, sb in combinations(specs, 2):
        edges[(sa.name, sb.name)] = classify(sa, sb, rules)
    return ColoredGraph(vertices, edges)


def monochromatic_triangles(g: ColoredGraph) -> CliqueReport:
    """All monochromatic triangles, in lexicographic vertex-index order."""
    report = CliqueReport()
    for a, b, c in combinations(g.vertices, 3):
        colors = {g.color(a, b), g.color(a, c), g.color(b, c)}
        if len(colors) == 1:
            report.triangles(colors.pop()).append((a, b, c))
    return report


def max_monochromatic_cliques(g: ColoredGraph, color: EdgeColor) -> list:
    """Maximal cliques of one color with at least two vertices.

    Bron-Kerbosch with pivoting; results are sorted by vertex index.
    """
    adj = g.neighbors(color)
    order = {v: i for i, v in enumerate(g.vertices)}
    found = []

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            if len(clique) >= 2:
                found.append(tuple(sorted(clique, key=order.__getitem__)))
            return
        pivot = max(candidates | excluded, key=lambda u: (len(adj[u] & candidates), -order[u]))
        for v in sorted(candidates - adj[pivot], key=order.__getitem__):
            expand(clique + [v], candidates & adj[v], excluded & adj[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand([], set(g.vertices), set())
    return sorted(found, key=lambda c: [order[v] for v in c])


def clique_report(g: ColoredGraph) -> CliqueReport:
    report = monochromatic_triangles(g)
    report.max_red_cliques = max_monochromatic_cliques(g, EdgeColor.RED)
    report.max_green_cliques = max_monochromatic_cliques(g, EdgeColor.GREEN)
    return report


@dataclass(frozen=True)
class RamseyCertificate:
    k6_colorings_checked: int
    k6_all_contain_mono_triangle: bool
    k5_witness: dict  # {"red": [...], "green": [...]} edges of the pentagon coloring
    k5_witness_mono_triangles: int

    @property
    def valid(self) -> bool:
        return (
            self.k6_colorings_checked == 2 ** 15
            and self.k6_all_contain_mono_triangle
            and self.k5_witness_mono_triangles == 0
        )


def _triangle_masks(n: int) -> np.ndarray:
    index = {e: i for i, e in enumerate(combinations(range(n), 2))}
    masks = []
    for a, b, c in combinations(range(n), 3):
        masks.append((1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)]))
    return np.array(masks, dtype=np.int64)


def count_mono_triangles(n: int, red_edges) -> int:
    """Monochromatic triangles of the K_n coloring whose red edges are given."""
    red = {frozenset(e) for e in red_edges}
    count = 0
    for tri in combinations(range(n), 3):
        reds = sum(frozenset(e) in red for e in combinations(tri, 2))
        count += reds in (0, 3)
    return count


def verify_r33() -> RamseyCertificate:
    """Check every 2-coloring of K6 and exhibit the triangle-free K5 coloring.

    Colorings are 15-bit masks (bit set = red edge); a triangle is
    monochromatic when its three edge bits are all set or all clear.
    """
    masks = _triangle_masks(6)
    colorings = np.arange(2 ** 15, dtype=np.int64)[:, None]
    hits = colorings & masks[None, :]
    mono = (hits == masks[None, :]) | (hits == 0)
    all_mono = bool(mono.any(axis=1).all())

    pentagon = [(i, (i + 1) % 5) for i in range(5)]
    red = sorted(tuple(sorted(e)) for e in pentagon)
    green = sorted(e for e in combinations(range(5), 2) if e not in red)
    witness_count = count_mono_triangles(5, red)
    return RamseyCertificate(
        k6_colorings_checked=int(colorings.shape[0]),
        k6_all_contain_mono_triangle=all_mono,
        k5_witness={"red": [list(e) for e in red], "green": [list(e) for e in green]},
        k5_witness_mono_triangles=witness_count,
    )


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: ColoredGraph, report: CliqueReport | None = None, name: str = "observables") -> str:
    """Graphviz text for ``g``; edges lying on a monochromatic triangle are drawn bold."""
    on_triangle = set()
    if report is not None:
        for tri in report.red_triangles + report.green_triangles:
            on_triangle.update(frozenset(e) for e in combinations(tri, 2))
    lines = [f"graph {_dot_id(name)} {{", "  layout=circo;", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)};")
    for (a, b), cls in g.edges.items():
        attrs = [f"color={cls.color.value}"]
        if frozenset((a, b)) in on_triangle:
            attrs.append("penwidth=3")
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
