"""Command-line driver: ``qspectra --report`` and ``qspectra --verify``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

from .config import FORMATS, PRESETS, Config, ConfigError, check_config, parse_config
from .spectra import ConstraintError, StratumReport, full_report
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG = 0, 1, 2


def report_dict(cfg: Config, reports: Sequence[StratumReport]) -> dict:
    return {
        "n": cfg.n,
        "relations": cfg.all_relations(),
        "strata": [r.to_dict() for r in reports],
    }


def render_json(cfg: Config, reports: Sequence[StratumReport]) -> str:
    return json.dumps(report_dict(cfg, reports), indent=2, ensure_ascii=False) + "\n"


def _braces(items) -> str:
    return "{" + ", ".join(map(str, items)) + "}"


def render_text(cfg: Config, reports: Sequence[StratumReport]) -> str:
    rels = cfg.all_relations()
    lines = [f"K_{cfg.n}, relations: {'; '.join(rels) if rels else 'none (generic parameters)'}"]
    lines.append(f"{len(reports)} admissible sets")
    for r in reports:
        lines.append("")
        lines.append(f"T = {_braces(r.T.labels()) if r.T.bits else 'empty set'}")
        lines.append(f"  N_T = {_braces(r.n_t)}")
        lines.append(f"  toral basis = {_braces(r.toral_basis.labels)}")
        if r.center.rank:
            words = ", ".join(w for w, _ in r.family.generators)
            lines.append(f"  center: Laurent in {r.center.rank} variable(s), generated by {words}")
        else:
            lines.append("  center: k")
        fam = r.family
        tail = f" for all nonzero {', '.join(fam.parameters)} in k" if fam.parameters else ""
        lines.append(f"  * {fam.ideal} is primitive{tail}")
    return "\n".join(lines) + "\n"


def run_report(cfg: Config) -> Tuple[int, str]:
    """Exit code and rendered report (or the constraint violations)."""
    try:
        reports = full_report(cfg.param_group())
    except ConstraintError as exc:
        return EXIT_CONFIG, "".join(f"constraint violation: {p}\n" for p in exc.problems)
    render = render_json if cfg.format == "json" else render_text
    return EXIT_OK, render(cfg, reports)


def run_verify(cfg: Config) -> Tuple[int, str]:
    params = cfg.param_group()
    problems = params.validate_constraints()
    if problems:
        return EXIT_CONFIG, "".join(f"constraint violation: {p}\n" for p in problems)
    names = list(SUITES) if "all" in cfg.verify else list(cfg.verify)
    try:
        results = run_suites(names, params, cfg.degree)
    except KeyError as exc:
        return EXIT_CONFIG, f"{exc.args[0]}\n"
    out: List[str] = []
    for res in results:
        out.append(res.summary())
        out.append(f"  {res.description}")
        out.extend(f"    {line}" for line in res.log)
    ok = all(r.ok for r in results)
    out.append("all suites passed" if ok else "some suites FAILED")
    return (EXIT_OK if ok else EXIT_VERIFY), "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qspectra",
        description="Strata, centers and primitive-ideal families of the algebras K_n.",
    )
    ap.add_argument("--config", metavar="PATH", help="key = value config file")
    ap.add_argument("--n", type=int, help="number of generator pairs")
    ap.add_argument("--preset", choices=PRESETS)
    ap.add_argument("--relation", action="append", default=[], metavar="STRING",
                    help="parameter relation such as 'g12 = 1' or 'order(q1*p2^-1) = 3' (repeatable)")
    ap.add_argument("--report", action="store_true", help="emit the per-stratum report (default)")
    ap.add_argument("--verify", metavar="SUITE[,SUITE...]",
                    help=f"run suites: {', '.join(SUITES)}, or all")
    ap.add_argument("--degree", type=int, help="degree bound for the tower suite (default 3)")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    return ap


def config_from_args(args: argparse.Namespace) -> Config:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    elif args.n is None:
        raise ConfigError("either --config or --n is required")
    else:
        cfg = Config(n=args.n)
    updates = {}
    if args.n is not None:
        updates["n"] = args.n
    if args.preset is not None:
        updates["preset"] = args.preset
    if args.relation:
        updates["relations"] = cfg.relations + tuple(args.relation)
    if args.format is not None:
        updates["format"] = args.format
    if args.out is not None:
        updates["out"] = args.out
    if args.verify is not None:
        updates["verify"] = tuple(s.strip() for s in args.verify.split(",") if s.strip())
    if args.degree is not None:
        updates["degree"] = args.degree
    return check_config(replace(cfg, **updates))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    code = EXIT_OK
    if cfg.verify:
        code, log = run_verify(cfg)
        (sys.stdout if code != EXIT_CONFIG else sys.stderr).write(log)
        if code == EXIT_CONFIG:
            return code
    if args.report or not cfg.verify:
        rcode, text = run_report(cfg)
        if rcode != EXIT_OK:
            sys.stderr.write(text)
            return rcode
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
