"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 unclassifiable pair,
3 refuted claims present under ``--strict-claims``.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .audit import REFUTED, audit, parse_claims
from .catalog import BUILTIN_RULES, Catalog, DEFAULT_PARTICLE, ObservableSpec, load_rule_overlay, resolve_all
from .errors import (
    CatalogError,
    ClaimSyntaxError,
    ConfigError,
    OperatorSyntaxError,
    UnclassifiablePairError,
)
from .fixtures import FIG3B_GENERIC, FIGURES, SYMBOLIC_BASIS
from .graph import build_graph, clique_report, export_dot, verify_r33
from .interference import (
    CorrelationMatrix,
    InterferenceConfig,
    decohered_pattern,
    entangled_pattern,
    pattern,
    uniform_centers,
)
from .jacobi import build_jacobi_hypergraph
from .oplang import parse_operator
from .oracle import agreement_check
from . import reports

EXIT_OK, EXIT_USAGE, EXIT_UNCLASSIFIABLE, EXIT_REFUTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class ObservableEntry:
    name: str
    expression: str | None = None
    particle: str = DEFAULT_PARTICLE


@dataclass
class AnalysisConfig:
    observables: list = field(default_factory=list)
    rule_overlays: Path | None = None
    claims: Path | None = None


_OBSERVABLE_LINE = re.compile(
    r"^observable\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"(?:\s*=\s*(?P<expr>.*?))?"
    r"(?:\s+@particle\s+(?P<particle>\S+))?\s*$"
)


def parse_config(text: str, base_dir: Path = Path(".")) -> AnalysisConfig:
    cfg = AnalysisConfig()
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split()[0]
        if keyword == "observable":
            m = _OBSERVABLE_LINE.match(line)
            if not m:
                raise ConfigError(f"config line {lineno}: malformed observable line {line!r}")
            name = m["name"]
            if name in seen:
                raise ConfigError(f"config line {lineno}: duplicate observable {name!r}")
            seen.add(name)
            cfg.observables.append(ObservableEntry(name, m["expr"] or None, m["particle"] or DEFAULT_PARTICLE))
        elif keyword in ("rules", "claims"):
            parts = line.split(maxsplit=1)
            if len(parts) != 2:
                raise ConfigError(f"config line {lineno}: `{keyword}` needs a path")
            path = base_dir / parts[1]
            if keyword == "rules":
                cfg.rule_overlays = path
            else:
                cfg.claims = path
        else:
            raise ConfigError(f"config line {lineno}: unknown keyword {keyword!r}")
    return cfg


def load_config(path) -> AnalysisConfig:
    path = Path(path)
    return parse_config(path.read_text(), path.parent)


def build_specs(cfg: AnalysisConfig) -> list[ObservableSpec]:
    """Turn config entries into specs; unknown bare names become declared symbols."""
    catalog = Catalog()
    specs = []
    for entry in cfg.observables:
        if entry.expression is not None:
            try:
                poly = parse_operator(entry.expression)
            except OperatorSyntaxError as exc:
                raise ConfigError(f"observable {entry.name!r}: {exc}") from None
            try:
                spec = ObservableSpec(entry.name, poly=poly, particle=entry.particle)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        else:
            try:
                spec = dataclasses.replace(catalog.resolve(entry.name), particle=entry.particle)
            except CatalogError:
                spec = ObservableSpec(entry.name, symbol=entry.name, particle=entry.particle)
        specs.append(spec)
    return specs


def _observables(args) -> tuple[list, AnalysisConfig]:
    if args.config and args.set:
        raise UsageError("give either --set or --config, not both")
    if args.config:
        cfg = load_config(args.config)
        return build_specs(cfg), cfg
    if args.set:
        names = [n.strip() for n in args.set.split(",") if n.strip()]
        return resolve_all(names), AnalysisConfig()
    return None, AnalysisConfig()


def _rules(args, cfg: AnalysisConfig):
    path = getattr(args, "rules", None) or cfg.rule_overlays
    if path is None:
        return BUILTIN_RULES
    return load_rule_overlay(path, allow_override=args.allow_override)


def _emit(text: str, path) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    specs, cfg = _observables(args)
    if specs is None:
        raise UsageError("analyze needs --set or --config")
    g = build_graph(specs, _rules(args, cfg))
    report = clique_report(g)

    discrepancies = None
    claims_path = getattr(args, "claims", None) or cfg.claims
    if args.command == "audit":
        if claims_path is None:
            raise UsageError("audit needs --claims or a `claims` line in the config")
        discrepancies = audit(g, parse_claims(Path(claims_path).read_text()))

    _emit(reports.dumps(reports.graph_payload(g, report, discrepancies)), args.json)
    if args.dot:
        Path(args.dot).write_text(export_dot(g, report), encoding="utf-8")
    if args.png:
        from .plotting import plot_graph
        plot_graph(g, report, args.png)
    if discrepancies is not None:
        for d in discrepancies.refuted:
            print(f"refuted [{d.tag}] {d.claimed}: {d.derived}", file=sys.stderr)
        if args.strict_claims and discrepancies.refuted:
            return EXIT_REFUTED
    return EXIT_OK


def cmd_ramsey(args) -> int:
    cert = verify_r33()
    _emit(reports.dumps(reports.certificate_payload(cert)), args.json)
    return EXIT_OK if cert.valid else EXIT_USAGE


def cmd_jacobi(args) -> int:
    specs, _ = _observables(args)
    h = build_jacobi_hypergraph(specs if specs is not None else SYMBOLIC_BASIS)
    _emit(reports.dumps(reports.jacobi_payload(h)), args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    specs, _ = _observables(args)
    try:
        r = agreement_check(specs if specs is not None else SYMBOLIC_BASIS, args.N, args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(reports.dumps(reports.agreement_payload(r)), args.json)
    return EXIT_OK


def cmd_interfere(args) -> int:
    try:
        cfg = InterferenceConfig(
            n_slits=args.slits,
            slit_centers=uniform_centers(args.slits, args.spacing),
            slit_width=args.width,
            wavenumber=args.wavenumber,
            screen_distance=args.distance,
            screen_range=tuple(args.range),
            sample_count=args.samples,
        )
        if args.corr:
            corr = CorrelationMatrix.parse(Path(args.corr).read_text())
            result = entangled_pattern(cfg, corr)
            label = "correlated"
        else:
            result = decohered_pattern(cfg, args.gamma)
            label = f"gamma={args.gamma:g}"
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "pattern.csv").write_text(result.to_csv(), encoding="utf-8")
        from .plotting import plot_patterns
        curves = {"coherent": pattern(cfg)} if label != "gamma=0" else {}
        curves[label] = result
        plot_patterns(curves, out / "pattern.png", title=f"{cfg.n_slits} slit(s)")
    else:
        _emit(result.to_csv(), args.csv)
    return EXIT_OK


def cmd_figures(args) -> int:
    if not args.out:
        raise UsageError("figures needs --out")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for fig in FIGURES:
        g = build_graph(fig.vertices)
        report = clique_report(g)
        disc = audit(g, parse_claims(fig.claims))
        (out / f"{fig.key}.json").write_text(reports.dumps(reports.graph_payload(g, report, disc)), encoding="utf-8")
        (out / f"{fig.key}.dot").write_text(export_dot(g, report, name=fig.key), encoding="utf-8")
        if not args.no_png:
            from .plotting import plot_graph
            plot_graph(g, report, out / f"{fig.key}.png", title=fig.title)
        rows.extend((fig.key, d) for d in disc.claims)

    g = build_graph(FIG3B_GENERIC.vertices)
    rows.extend((FIG3B_GENERIC.key, d) for d in audit(g, parse_claims(FIG3B_GENERIC.claims)).claims)
    (out / "discrepancies.tsv").write_text(reports.discrepancy_table(rows), encoding="utf-8")

    refuted = sum(d.verdict == REFUTED for _, d in rows)
    print(f"{len(FIGURES)} figures written to {out}; {refuted} refuted claim(s)", file=sys.stderr)
    if args.strict_claims and refuted:
        return EXIT_REFUTED
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_observable_args(p, rules=True):
    p.add_argument("--set", help="comma-separated observable names, e.g. px,py,lx")
    p.add_argument("--config", help="analysis config file")
    if rules:
        p.add_argument("--rules", help="rule-table overlay file")
        p.add_argument("--allow-override", action="store_true",
                       help="let overlay rules replace built-in verdicts")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qramsey", description="Commutation graphs of quantum observables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("analyze", "audit"):
        p = sub.add_parser(name, help="build the colored graph and clique report"
                           if name == "analyze" else "check figure claims against the derived coloring")
        _add_observable_args(p)
        p.add_argument("--json", help="write the JSON report here instead of stdout")
        p.add_argument("--dot", help="write Graphviz text here")
        p.add_argument("--png", help="render the graph to this image file")
        p.add_argument("--claims", help="claims file")
        p.add_argument("--strict-claims", action="store_true", help="exit 3 if any claim is refuted")
        p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ramsey", help="certify R(3,3) = 6 by exhaustive search")
    p.add_argument("--json")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("jacobi", help="Jacobi-identity hypergraph")
    _add_observable_args(p, rules=False)
    p.add_argument("--json")
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("oracle", help="cross-check verdicts with truncated oscillator matrices")
    _add_observable_args(p, rules=False)
    p.add_argument("--N", type=int, default=8, help="levels per axis (default 8)")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("interfere", help="multi-slit intensity pattern as CSV")
    p.add_argument("--slits", type=int, default=2)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--corr", help="correlation matrix file (rows of complex literals)")
    p.add_argument("--spacing", type=float, default=5.0)
    p.add_argument("--width", type=float, default=1.0)
    p.add_argument("--wavenumber", type=float, default=2 * math.pi)
    p.add_argument("--distance", type=float, default=100.0)
    p.add_argument("--range", type=float, nargs=2, default=(-30.0, 30.0), metavar=("LO", "HI"))
    p.add_argument("--samples", type=int, default=1201)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.add_argument("--out", help="directory for pattern.csv and pattern.png")
    p.set_defaults(func=cmd_interfere)

    p = sub.add_parser("figures", help="reproduce every figure graph with its audit")
    p.add_argument("--out", required=True)
    p.add_argument("--no-png", action="store_true", help="skip image rendering")
    p.add_argument("--strict-claims", action="store_true")
    p.set_defaults(func=cmd_figures)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UnclassifiablePairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCLASSIFIABLE
    except (UsageError, ConfigError, CatalogError, ClaimSyntaxError, OperatorSyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
