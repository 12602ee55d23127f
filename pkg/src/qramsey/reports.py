"""JSON payloads with fixed key order, and the discrepancy summary table."""

from __future__ import annotations

import json

from .audit import DiscrepancyReport
from .graph import CliqueReport, ColoredGraph, RamseyCertificate
from .jacobi import JacobiHypergraph
from .oracle import AgreementReport


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def graph_payload(g: ColoredGraph, report: CliqueReport, discrepancies: DiscrepancyReport | None = None) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"a": a, "b": b, "color": e.color.value, "basis": e.basis, "citation": e.citation}
            for (a, b), e in g.edges.items()
        ],
        "red_triangles": [list(t) for t in report.red_triangles],
        "green_triangles": [list(t) for t in report.green_triangles],
        "max_red_cliques": [list(c) for c in report.max_red_cliques],
        "max_green_cliques": [list(c) for c in report.max_green_cliques],
        "discrepancies": [
            {"tag": d.tag, "claimed": d.claimed, "derived": d.derived, "verdict": d.verdict}
            for d in (discrepancies.claims if discrepancies else [])
        ],
    }


def jacobi_payload(h: JacobiHypergraph) -> dict:
    return {
        "vertices": list(h.vertices),
        "hyperedges": [{"triple": list(t), "status": s} for t, s in h.hyperedges],
        "counts": h.counts(),
    }


def agreement_payload(r: AgreementReport) -> dict:
    return {
        "pairs": [
            {"a": p.a, "b": p.b, "symbolic": p.symbolic.value, "numeric": p.numeric.value,
             "defect": p.defect}
            for p in r.pairs
        ],
        "mismatches": r.mismatches,
    }


def certificate_payload(c: RamseyCertificate) -> dict:
    return {
        "k6_colorings_checked": c.k6_colorings_checked,
        "k6_all_contain_mono_triangle": c.k6_all_contain_mono_triangle,
        "k5_witness": {
            "red_edges": c.k5_witness["red"],
            "green_edges": c.k5_witness["green"],
            "mono_triangles": c.k5_witness_mono_triangles,
        },
    }


def discrepancy_table(rows) -> str:
    """Tab-separated ``figure, tag, verdict, claimed, derived`` rows with a header."""
    lines = ["figure\ttag\tverdict\tclaimed\tderived"]
    for figure, d in rows:
        lines.append("\t".join((figure, d.tag, d.verdict, d.claimed, d.derived)))
    return "\n".join(lines) + "\n"
