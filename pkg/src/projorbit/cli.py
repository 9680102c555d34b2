"""Command-line front end: ``projorbit {reduce,grading,catalog,verify,family}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import catalog
from .grading import GradingError, diagram_eigenspace_dims, diagram_top_level_check
from .reduction import FAMILIES, ReductionError, family_reduce, reduce, unique_closed_orbit
from .rootsystem import RootSystemError
from .satake import DecoratedSatakeDiagram, DiagramError, decorate, parse, render, serialize

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    diagram: Optional[str] = None
    path: Optional[str] = None
    form: Optional[str] = None
    w: Optional[str] = None
    crossed: Optional[str] = None
    structured: bool = False
    seed: int = 0
    allow_complex_type: bool = False
    case: Optional[str] = None
    family: Optional[str] = None
    range: Optional[str] = None


def _int_list(text: str, what: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("[]").split(",") if x]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise InputError(f"--range: expected a..b, got {text!r}") from None
    if lo > hi:
        raise InputError(f"--range: empty range {text!r}")
    return range(lo, hi + 1)


def load_diagram(cfg: RunConfig) -> DecoratedSatakeDiagram:
    given = [x is not None for x in (cfg.diagram, cfg.path, cfg.form)]
    if sum(given) != 1:
        raise InputError("give exactly one of: inline diagram text, --file PATH, --form NAME")
    if cfg.form is not None:
        if cfg.w is None:
            raise InputError("--form needs --w with the highest-weight coefficients")
        return decorate(catalog.real_form_diagram(cfg.form), _int_list(cfg.w, "--w"))
    if cfg.path is not None:
        try:
            with open(cfg.path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"--file: {exc}") from None
        if text.lstrip().startswith("{"):
            from .satake import from_json
            obj = from_json(text)
            if not isinstance(obj, DecoratedSatakeDiagram):
                raise InputError("--file: JSON diagram has no w field")
            return obj
        return parse(text)
    return parse(cfg.diagram)


def _emit(report: dict, text_lines: List[str], structured: bool) -> None:
    if structured:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _field_lines(d: dict, keys: Sequence[str]) -> List[str]:
    return [f"{k}: {json.dumps(d[k])}" for k in keys]


def cmd_reduce(cfg: RunConfig) -> int:
    dd = load_diagram(cfg)
    res = reduce(dd, cfg.allow_complex_type)
    verdict = unique_closed_orbit(res)
    report = {"input": serialize(dd), **res.as_dict(), "verdict": verdict.verdict, "reason": verdict.reason,
              "notice": res.notice}
    lines = [render(dd, res.crossed)]
    lines += _field_lines(report, ["input", "crossed", "kept", "discarded", "k_summary", "w_dim_complex", "w_dim_real",
                                   "verdict", "reason", "notice"])
    _emit(report, lines, cfg.structured)
    return EXIT_OK


def cmd_grading(cfg: RunConfig) -> int:
    dd = load_diagram(cfg)
    if cfg.crossed is None:
        crossed = sorted(reduce(dd, cfg.allow_complex_type).crossed)
    else:
        crossed = _int_list(cfg.crossed, "--crossed")
        bad = [i for i in crossed if not 1 <= i <= dd.diagram.n_nodes]
        if bad:
            raise InputError(f"--crossed: node(s) {bad} out of range 1..{dd.diagram.n_nodes}")
    if not crossed:
        raise InputError("grading: empty crossed set (compact input has no grading)")
    ed = diagram_eigenspace_dims(dd, crossed)
    tl = diagram_top_level_check(dd, crossed)
    report = {
        "input": serialize(dd),
        "crossed": crossed,
        "levels": [[t, n] for t, n in ed.report()],
        "theta_max": str(ed.theta_max),
        "top_dim": ed.top_dim,
        "levi_dim": tl.levi_dim,
        "top_level_check": tl.ok,
        "dim": ed.dim,
    }
    lines = [render(dd, crossed)]
    lines += _field_lines(report, ["input", "crossed", "theta_max", "top_dim", "levi_dim", "top_level_check", "dim"])
    lines += [f"  theta={t:>8}  dim={n}" for t, n in report["levels"]]
    _emit(report, lines, cfg.structured)
    return EXIT_OK


def cmd_catalog(cfg: RunConfig) -> int:
    from .oracle import SUPPORTED
    forms = {name: serialize(d) for name, d in catalog.sample_catalog().items()}
    report = {
        "family_syntax": catalog.FAMILY_SYNTAX,
        "exceptional": catalog.exceptional_names(),
        "forms": forms,
        "oracle_forms": SUPPORTED,
    }
    lines = ["family syntax: " + ", ".join(catalog.FAMILY_SYNTAX), "exceptional: " + ", ".join(report["exceptional"]),
             "oracle forms: " + ", ".join(SUPPORTED), ""]
    width = max(len(n) for n in forms)
    lines += [f"{n:<{width}}  {t}" for n, t in forms.items()]
    _emit(report, lines, cfg.structured)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    from .oracle import CASES, OracleError, verify_all
    if cfg.case is not None and cfg.case not in CASES:
        raise InputError(f"--case: unknown case {cfg.case!r}; known: {', '.join(CASES)}")
    try:
        reports = verify_all(cfg.seed, [cfg.case] if cfg.case else None)
    except OracleError as exc:
        raise InputError(str(exc)) from None
    ok = all(r["pass"] for r in reports)
    lines = []
    for r in reports:
        lines.append(f"[{'PASS' if r['pass'] else 'FAIL'}] {r['case']}: {r['description']}  (seed {r['seed']})")
        lines.append(f"    crossed={r['crossed']} K={r['k_summary']} w_dim_real={r['w_dim_real']} verdict={r['verdict']}")
        for c in r["checks"]:
            lines.append(f"    {'ok ' if c['pass'] else 'BAD'} {c['name']}: {json.dumps(c['value'], default=float)}")
    lines.append(f"{sum(r['pass'] for r in reports)}/{len(reports)} cases passed")
    report = {"cases": reports, "pass": ok, "seed": cfg.seed}
    if cfg.structured:
        print(json.dumps(report, indent=2, sort_keys=True, default=float))
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_family(cfg: RunConfig) -> int:
    if cfg.family not in FAMILIES:
        raise InputError(f"family: unknown family {cfg.family!r}; known: {', '.join(FAMILIES)}")
    params = _parse_range(cfg.range or "2..6")
    fr = family_reduce(cfg.family, params)
    rows = []
    for n, r in fr.results:
        rows.append({"n": n, "k_summary": [[t, list(w)] for t, w in r.k_summary], "w_dim_complex": r.w_dim_complex,
                     "w_dim_real": r.w_dim_real, "verdict": unique_closed_orbit(r).verdict})
    report = {"family": cfg.family, "description": FAMILIES[cfg.family][0], "rows": rows, "stable": fr.stable}
    lines = [f"{cfg.family}: {report['description']}"]
    lines += [f"  n={r['n']}: K={json.dumps(r['k_summary'])} w_dim_complex={r['w_dim_complex']} "
              f"w_dim_real={r['w_dim_real']} verdict={r['verdict']}" for r in rows]
    lines.append(f"stable: {json.dumps(fr.stable)}")
    _emit(report, lines, cfg.structured)
    return EXIT_OK


COMMANDS = {"reduce": cmd_reduce, "grading": cmd_grading, "catalog": cmd_catalog, "verify": cmd_verify,
            "family": cmd_family}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="structured", action="store_true", help="structured (JSON) output")
    common.add_argument("--seed", type=int, default=None, help="seed for oracle sampling")
    common.add_argument("--allow-complex-type", action="store_true", help="accept complex-type decorations")

    dia = argparse.ArgumentParser(add_help=False)
    dia.add_argument("diagram", nargs="?", help='inline diagram, e.g. "A2 black=[] arrows=[] w=[1,1]"')
    dia.add_argument("--file", dest="path", help="read the diagram (text or JSON) from a file")
    dia.add_argument("--form", help="named real form, e.g. 'sl(3,R)' or 'sp(1)+sl(3,H)'")
    dia.add_argument("--w", help="coefficients for --form, comma separated")

    p = argparse.ArgumentParser(prog="projorbit", description="Minimal projective orbits of real semisimple groups.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("reduce", parents=[common, dia], help="reduce a decorated Satake diagram to (K, W)")
    g = sub.add_parser("grading", parents=[common, dia], help="Z-grading eigenspace dimensions")
    g.add_argument("--crossed", help="1-based crossed nodes (default: the reduction crossing)")
    sub.add_parser("catalog", parents=[common], help="list supported real forms")
    v = sub.add_parser("verify", parents=[common], help="run the numerical oracle cases")
    v.add_argument("--case", help="run a single named case")
    f = sub.add_parser("family", parents=[common], help="reduce a parametrized family")
    f.add_argument("family", help="family name: " + ", ".join(FAMILIES))
    f.add_argument("--range", default="2..6", help="parameter range a..b (inclusive)")
    return p


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    from .oracle.cases import DEFAULT_SEED
    kw = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    if kw.get("seed") is None:
        kw["seed"] = DEFAULT_SEED
    return RunConfig(**kw)


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.command](cfg)
    except (InputError, DiagramError, ReductionError, GradingError, RootSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
