"""Command-line interface.

Exit codes: 0 success, 2 parse/spec/hypothesis error, 3 capacity limit or
timeout, 4 bound violation, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .bounds import THEOREMS
from .campaign import DEFAULT_THEOREMS, CampaignConfig, run_campaign
from .families import SamplingLimits, fig_example, fig_example3, tightness_search
from .graph import CapacityError, GraphError, emit_edge_list, parse_edge_list
from .instance import load_instance
from .solver import DEFAULT_TIMEOUT, gamma, gamma_oracle, gamma_st, gamma_st_oracle
from .verify import HypothesisError, verify_instance

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_VIOLATION, EXIT_IO = 0, 2, 3, 4, 5

FAMILIES = ("fig-example", "fig-example3")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | Path, text: str) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)


def _family(name: str, r: int):
    if name == "fig-example":
        return fig_example()
    if name == "fig-example3":
        return fig_example3(r)
    raise CliError(EXIT_USAGE, f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def cmd_solve(args, strong: bool) -> int:
    g = parse_edge_list(_read(args.file))
    if args.oracle:
        res = (gamma_st_oracle if strong else gamma_oracle)(g)
    else:
        res = (gamma_st if strong else gamma)(g, timeout=args.timeout)
    _emit(json.dumps(res.to_dict()) + "\n", args.out)
    if not res.optimal:
        print(f"timeout after {args.timeout}s; value is an upper bound", file=sys.stderr)
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_compose(args) -> int:
    inst = load_instance(args.spec)
    cg = inst.compose()
    text = emit_edge_list(cg.graph)
    if not args.out:
        sys.stdout.write(text)
        return EXIT_OK
    _write(args.out, text)
    sidecar = {
        "vertex_map": [{"component": c, "original": v, "composed": w}
                       for (c, v), w in sorted(cg.vertex_map.items())],
        "special": cg.special,
    }
    _write(str(args.out) + ".map.json", json.dumps(sidecar, indent=2) + "\n")
    return EXIT_OK


def _rows_csv(rows: list[dict], columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r.get(c) is None else r.get(c) for c in columns])
    return buf.getvalue()


VERIFY_COLUMNS = ("theorem", "lower_raw", "lower", "upper", "exact", "holds_lower", "holds_upper",
                  "tight_lower", "tight_upper", "violation", "flagged", "timed_out", "digest")


def cmd_verify(args) -> int:
    if args.family:
        inst = _family(args.family, args.r)
    elif args.spec:
        inst = load_instance(args.spec)
    else:
        raise CliError(EXIT_USAGE, "verify needs a spec file or --family")
    res = verify_instance(args.theorem, inst, timeout=args.timeout)
    d = res.to_dict()
    text = json.dumps(d, indent=2) + "\n" if args.format == "json" else _rows_csv([d], VERIFY_COLUMNS)
    _emit(text, args.out)
    if res.timed_out:
        return EXIT_CAPACITY
    return EXIT_VIOLATION if res.violation else EXIT_OK


def cmd_campaign(args) -> int:
    limits = SamplingLimits(args.min_order, args.max_order, args.min_count, args.max_count,
                            args.max_composed, tuple(args.r_values))
    cfg = CampaignConfig(tuple(args.theorems), args.samples, args.seed, args.timeout, limits,
                         args.cross_check, args.workers)
    report = run_campaign(cfg)
    if args.out:
        try:
            csv_path, json_path = report.write(args.out)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write report: {exc}") from None
        print(f"wrote {csv_path} and {json_path}", file=sys.stderr)
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    for t, s in report.summary().items():
        print(f"{t:>18}: {s['instances']} instances, {s['violations']} violations, "
              f"{s['flagged']} flagged, {s['timeouts']} timeouts, "
              f"tight lower/upper {s['tight_lower']}/{s['tight_upper']}", file=sys.stderr)
    if "2-gluing-lower-Kr" in cfg.theorems and not report.flagged:
        print("2-gluing-lower-Kr: no counterexample found", file=sys.stderr)
    if report.violations and not args.allow_violations:
        return EXIT_VIOLATION
    if report.timeouts and not args.allow_timeouts:
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_families(args) -> int:
    if args.name == "tightness":
        if not args.theorem:
            raise CliError(EXIT_USAGE, "families tightness needs --theorem")
        hits = tightness_search(args.theorem, args.budget, args.seed, args.side)
        if args.out:
            for i, inst in enumerate(hits):
                inst.write_bundle(Path(args.out) / f"{i:03d}")
            print(f"{len(hits)} tight instance(s) written to {args.out}", file=sys.stderr)
        else:
            sys.stdout.write(json.dumps([h.to_json() for h in hits], indent=2) + "\n")
        return EXIT_OK
    inst = _family(args.name, args.r)
    if args.out:
        path = inst.write_bundle(args.out)
        print(f"wrote {path}", file=sys.stderr)
    else:
        sys.stdout.write(json.dumps(inst.to_json(), indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, help_ in (("gamma-st", "strong domination number"), ("gamma", "domination number")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help="edge-list file")
        mode = s.add_mutually_exclusive_group()
        mode.add_argument("--oracle", action="store_true", help="plain subset enumeration")
        mode.add_argument("--bnb", action="store_true", help="branch and bound (default)")
        s.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
        s.add_argument("--out")
        s.set_defaults(func=lambda a, strong=(name == "gamma-st"): cmd_solve(a, strong))

    s = sub.add_parser("compose", help="build a composed graph from a JSON spec")
    s.add_argument("spec")
    s.add_argument("--out", help="edge-list output; a .map.json sidecar is written next to it")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("verify", help="check one instance against one theorem")
    s.add_argument("theorem", choices=THEOREMS)
    s.add_argument("spec", nargs="?")
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--r", type=int, default=3, help="clique size for fig-example3")
    s.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("campaign", help="seeded sweep over random instances")
    s.add_argument("--theorems", nargs="+", choices=THEOREMS, default=list(DEFAULT_THEOREMS))
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    s.add_argument("--min-order", type=int, default=2)
    s.add_argument("--max-order", type=int, default=7)
    s.add_argument("--min-count", type=int, default=2)
    s.add_argument("--max-count", type=int, default=4)
    s.add_argument("--max-composed", type=int, default=18)
    s.add_argument("--r-values", type=int, nargs="+", default=[2, 3])
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--cross-check", action="store_true", help="also run the oracle (n <= 20)")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", help="report prefix; writes <out>.csv and <out>.json")
    s.add_argument("--allow-violations", action="store_true")
    s.add_argument("--allow-timeouts", action="store_true")
    s.set_defaults(func=cmd_campaign)

    s = sub.add_parser("families", help="emit example instances or search for tight ones")
    s.add_argument("name", choices=FAMILIES + ("tightness",))
    s.add_argument("--r", type=int, default=3)
    s.add_argument("--theorem", choices=THEOREMS)
    s.add_argument("--side", choices=("lower", "upper"))
    s.add_argument("--budget", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_families)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (HypothesisError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
