"""Batch driver: run named verification suites, list them, export presentations.

Exit codes: 0 all-pass, 1 any fail, 2 configuration error, 3 undecided-only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .numgeom import GridConfig
from .suites import ConfigError, SuiteConfig, list_suites, run_suite


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcomod", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help="suite name (see list-suites) or 'all'")
    v.add_argument("--algebra", help="restrict an axiom suite to one builtin")
    v.add_argument("--covering", help="covering JSON file for the covering/transition suites")
    v.add_argument("--degree", type=int, default=4, help="symbolic degree bound")
    v.add_argument("--q", default="formal", help="'formal', 'cbrt1', or an integer")
    v.add_argument("--grid-circle", type=int, default=720)
    v.add_argument("--grid-interval", type=int, default=257)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--trunc", type=int, default=64)
    v.add_argument("--seed", type=int, default=20130915)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--samples", type=int, default=10_000, help="Monte-Carlo sample count")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "md"), default="json")
    v.add_argument("--out", help="write the report to this path (atomic)")

    ls = sub.add_parser("list-suites", help="print the suite catalog")
    ls.add_argument("--format", choices=("text", "json"), default="text")

    ex = sub.add_parser("export", help="export a builtin presentation as JSON")
    ex.add_argument("--algebra", required=True)
    ex.add_argument("--out", help="output path (stdout when omitted)")
    return p


def _parse_q(q: str):
    if q in ("formal", "cbrt1"):
        return q
    try:
        return int(q)
    except ValueError:
        raise ConfigError(f"--q must be 'formal', 'cbrt1' or an integer, got {q!r}")


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "list-suites":
            print(list_suites(machine=args.format == "json"))
            return 0
        if args.command == "export":
            from .builtin import export_presentation

            doc = export_presentation(args.algebra)
            text = json.dumps(doc, indent=2)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                print(text)
            return 0
        cfg = SuiteConfig(
            suite=args.suite,
            algebra=args.algebra,
            covering=args.covering,
            degree=args.degree,
            q=_parse_q(args.q),
            grid=GridConfig(
                n_circle=args.grid_circle,
                m_interval=args.grid_interval,
                tol=args.tol,
                trunc=args.trunc,
                seed=args.seed,
                trials=args.trials,
            ),
            trials=args.trials,
            mc_samples=args.samples,
            jobs=args.jobs,
            fmt=args.format,
            out=args.out,
        )
        report = run_suite(cfg)
        if args.format == "md":
            print(report.to_markdown())
        else:
            print(report.to_json())
        return report.exit_code
    except ConfigError as e:
        print(f"CONFIG_ERROR: {e}", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"CONFIG_ERROR: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
