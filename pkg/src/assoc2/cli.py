"""Command-line entry point.

Subcommands: ``cohomology``, ``classify``, ``deform``, ``verify-paper``,
``enumerate``.  Exit codes: 0 ok, 1 verification failure, 2 parse error,
3 not a codifferential, 4 non-associative table, 5 non-versal family.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .census import SUPPORTED_PRIMES, UnsupportedPrimeError, enumerate_finite_field
from .deformation import (
    BUILTIN_FAMILIES,
    DeformationFamily,
    InvalidDirectionError,
    default_grid,
    family_from_json,
    jump_census,
    obstruction,
)
from .hochschild import DEFAULT_MAX_DEGREE, NotACodifferentialError, check_codifferential, cohomology
from .moduli import (
    BASIS_NAMES,
    MultiplicationTable,
    NonAssociativeError,
    associativity_defect,
    classify,
    invariants,
    standard_codifferential,
)
from .syntax import ParseError, parse_coderivation, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_NOT_CODIFF, EXIT_NON_ASSOC, EXIT_NON_VERSAL = range(6)

SCHEMA_VERSION = 1


@dataclass
class ReportConfig:
    command: str
    fmt: str = "text"
    algebra: str | None = None
    codifferential: str | None = None
    max_degree: int = DEFAULT_MAX_DEGREE
    table: str | None = None
    builtin: str | None = None
    family_file: str | None = None
    p: int | None = None
    grid: list | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.fmt not in ("text", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.max_degree < 0:
            raise ValueError("--max-degree must be non-negative")


class CliError(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def _emit(cfg: ReportConfig, payload: dict, text: str, out) -> None:
    if cfg.fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": cfg.command, **payload}
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _resolve_codifferential(cfg: ReportConfig):
    try:
        if cfg.algebra:
            name = cfg.algebra.lower().lstrip("d")
            if not name.isdigit():
                raise ParseError(f"unknown algebra {cfg.algebra!r}; expected d1..d6")
            try:
                return standard_codifferential(int(name))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if cfg.codifferential:
            return parse_coderivation(cfg.codifferential)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"parse error: {exc}") from None
    raise CliError(EXIT_PARSE, "give --algebra d1..d6 or --d EXPR")


def cmd_cohomology(cfg: ReportConfig, out) -> int:
    d = _resolve_codifferential(cfg)
    try:
        check_codifferential(d)
    except NotACodifferentialError as exc:
        raise CliError(EXIT_NOT_CODIFF, f"not a codifferential: {exc}") from None
    report = cohomology(d, cfg.max_degree)
    lines = [f"d = {d}", "n  dim C^n  ker  im  H^n  representatives"]
    for deg in report.degrees:
        reps = ", ".join(str(r) for r in deg.representatives) or "-"
        lines.append(f"{deg.degree:<2} {deg.dim_cochains:<8} {deg.dim_kernel:<4} {deg.dim_image_from_below:<3} {deg.dim:<4} {reps}")
    lines.append("dims: " + ",".join(map(str, report.dims)))
    _emit(cfg, report.to_json(), "\n".join(lines), out)
    return EXIT_OK


def parse_table(text: str) -> MultiplicationTable:
    """8 rationals, as a JSON array or comma separated."""
    text = text.strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON table: {exc}") from None
        values = [str(v) for v in values]
    else:
        values = [v for v in text.replace(";", ",").split(",") if v.strip()]
    if len(values) != 8:
        raise ParseError(f"a table needs 8 structure constants, got {len(values)}")
    return MultiplicationTable(tuple(parse_rational(v) for v in values))


def cmd_classify(cfg: ReportConfig, out) -> int:
    try:
        m = parse_table(cfg.table or "")
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"parse error: {exc}") from None
    triple = associativity_defect(m)
    if triple is not None:
        names = tuple(BASIS_NAMES[i - 1] for i in triple)
        raise CliError(
            EXIT_NON_ASSOC,
            f"not associative: (ab)c != a(bc) at (a, b, c) = {names}",
            {"failing_triple": list(names)},
        )
    cls = classify(m)
    inv = invariants(m)
    payload = {"table": m.as_strings(), "class": cls.value, "class_over_closure": cls.over_closure().value, "invariants": inv.to_json()}
    text = [f"table: {m.describe()}", f"class: {cls.value}"]
    if cls.over_closure() != cls:
        text.append(f"over the algebraic closure: {cls.over_closure().value}")
    text += [f"{k}: {v}" for k, v in inv.to_json().items()]
    _emit(cfg, payload, "\n".join(text), out)
    return EXIT_OK


def _load_family(cfg: ReportConfig):
    if cfg.builtin:
        if cfg.builtin not in BUILTIN_FAMILIES:
            raise CliError(EXIT_PARSE, f"unknown builtin family {cfg.builtin!r}; choose from {sorted(BUILTIN_FAMILIES)}")
        return BUILTIN_FAMILIES[cfg.builtin](), None
    if cfg.family_file:
        try:
            with open(cfg.family_file) as fh:
                data = json.load(fh)
            return family_from_json(data)
        except (OSError, json.JSONDecodeError, ParseError, ValueError) as exc:
            if isinstance(exc, NotACodifferentialError):
                raise CliError(EXIT_NOT_CODIFF, f"not a codifferential: {exc}") from None
            if isinstance(exc, InvalidDirectionError):
                raise CliError(EXIT_PARSE, f"invalid family: {exc}") from None
            raise CliError(EXIT_PARSE, f"cannot read family: {exc}") from None
    raise CliError(EXIT_PARSE, "give --builtin NAME or --family FILE")


def cmd_deform(cfg: ReportConfig, out) -> int:
    fam, grid = _load_family(cfg)
    obs = obstruction(fam)
    payload: dict = {"family": fam.to_json(), "obstruction": obs.to_json()}
    text = [f"family {fam.name or '(file)'}: d_t = {fam.total()}", f"[d_t, d_t] = {obs.bracket_polynomial}"]
    notes = []
    if fam.name == "d6":
        printed = BUILTIN_FAMILIES["d6-printed"]()
        pobs = obstruction(printed)
        payload["printed_family"] = {"family": printed.to_json(), "obstruction": pobs.to_json()}
        notes.append(
            "the printed d6 family has [d_t, d_t] = "
            f"{pobs.bracket_polynomial}; this family uses the cohomologous direction psi[22->2] for t1"
        )
        notes.append(
            "the printed d6 jump loci are garbled (d2 is named twice); the strata listed here are observed, not copied"
        )
    if not obs.is_zero:
        payload["notes"] = notes
        _emit(cfg, payload, "\n".join(text + notes + ["family is not versal: [d_t, d_t] != 0"]), out)
        return EXIT_NON_VERSAL
    if cfg.grid:
        grid = default_grid(fam.parameters, cfg.grid)
    graph = jump_census(fam, grid)
    payload["graph"] = graph.to_json()
    payload["notes"] = notes
    text.append("obstruction: zero")
    text.append("edges: " + ", ".join(f"{a}->{b}" for a, b in sorted(graph.edge_set())) if graph.edges else "edges: none")
    for cls, pts in sorted(graph.strata().items()):
        shown = "; ".join(",".join(f"{k}={v}" for k, v in pt.items()) for pt in pts[:6])
        more = f" (+{len(pts) - 6} more)" if len(pts) > 6 else ""
        text.append(f"  {cls}: {shown}{more}")
    _emit(cfg, payload, "\n".join(text + notes), out)
    return EXIT_OK


def cmd_verify_paper(cfg: ReportConfig, out) -> int:
    from .verify import run_all

    results = run_all(cfg.max_degree)
    gating = [r for r in results if r.gating]
    ok = all(r.passed for r in gating)
    payload = {"all_passed": ok, "items": [r.to_json() for r in results]}
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        if not r.gating:
            tag = "INFO"
        lines.append(f"[{tag}] {r.name}")
        if not r.passed:
            lines.append("       " + json.dumps(r.detail, default=str)[:600])
    lines.append(f"{sum(r.passed for r in gating)}/{len(gating)} gating items passed")
    _emit(cfg, payload, "\n".join(lines), out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(cfg: ReportConfig, out) -> int:
    try:
        census = enumerate_finite_field(cfg.p)
    except UnsupportedPrimeError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    lines = [
        f"F_{census.p}: {census.total_tables} tables, {census.associative_count} associative, {census.orbit_count} orbits"
    ]
    for o in census.orbits:
        lines.append(f"  {o.algebra_class.value:<26} size {o.size:<4} rep {list(o.representative)}")
    _emit(cfg, census.to_json(), "\n".join(lines), out)
    return EXIT_OK


COMMANDS = {
    "cohomology": cmd_cohomology,
    "classify": cmd_classify,
    "deform": cmd_deform,
    "verify-paper": cmd_verify_paper,
    "enumerate": cmd_enumerate,
}


def _grid_values(text: str) -> list:
    try:
        return [parse_rational(v) for v in text.split(",") if v.strip()]
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="assoc2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    p = sub.add_parser("cohomology", help="cohomology dimensions and representatives")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra", help="one of d1..d6")
    g.add_argument("--d", dest="codifferential", help='codifferential, e.g. "psi[22->2]"')
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    fmt(p)

    p = sub.add_parser("classify", help="classify a 2-dimensional multiplication table")
    p.add_argument("table", help="8 rationals c11^1,c11^2,c12^1,c12^2,c21^1,c21^2,c22^1,c22^2 (index 1 = x, 2 = theta)")
    fmt(p)

    p = sub.add_parser("deform", help="obstruction and jump census of a deformation family")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin", help=f"one of {', '.join(sorted(BUILTIN_FAMILIES))}")
    g.add_argument("--family", dest="family_file", help="family definition JSON file")
    p.add_argument("--grid", type=_grid_values, help="comma-separated rationals sampled per parameter")
    fmt(p)

    p = sub.add_parser("verify-paper", help="run every reproduction check")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    fmt(p)

    p = sub.add_parser("enumerate", help="orbit census over a small prime field")
    p.add_argument("--p", type=int, required=True, help=f"prime in {SUPPORTED_PRIMES}")
    fmt(p)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    cfg = ReportConfig(
        command=args.command,
        fmt=args.fmt,
        algebra=getattr(args, "algebra", None),
        codifferential=getattr(args, "codifferential", None),
        max_degree=getattr(args, "max_degree", DEFAULT_MAX_DEGREE),
        table=getattr(args, "table", None),
        builtin=getattr(args, "builtin", None),
        family_file=getattr(args, "family_file", None),
        p=getattr(args, "p", None),
        grid=getattr(args, "grid", None),
    )
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg, out)
    except CliError as exc:
        if cfg.fmt == "json":
            _emit(cfg, {"error": str(exc), **exc.payload}, "", out)
        print(f"assoc2: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"assoc2: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
