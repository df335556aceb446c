"""Command line entry point: ``fastgb SYSTEM [options]``.

Exit codes: 0 success, 1 input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .errors import InvariantError, SignatureCollisionError
from .parsing import ParseError, parse_system
from .report import ALGORITHMS, emit_report, predict, run_many

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def bundled_systems():
    root = resources.files("fastgb") / "systems"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".sys"))


def load_system_text(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    if os.path.exists(name):
        with open(name) as fh:
            return fh.read()
    res = resources.files("fastgb") / "systems" / f"{name}.sys"
    if res.is_file():
        return res.read_text()
    raise FileNotFoundError(f"no such file or bundled system: {name!r} "
                            f"(bundled: {', '.join(bundled_systems())})")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fastgb",
        description="Gröbner bases by Buchberger, F5B, or F5B with the fast reducer choice.")
    p.add_argument("system", nargs="?", help="system file, bundled system name, or '-' for stdin")
    p.add_argument("--algorithm", default="f5b-fast", choices=ALGORITHMS + ("all",))
    p.add_argument("--order", choices=("lex", "grlex", "grevlex"), help="override the file's monomial order")
    p.add_argument("--field", help="override the file's field: 'q' or 'gf <p>'")
    p.add_argument("--reduction", default="safe", choices=("safe", "literal"),
                   help="signature handling of the fast reducer (f5b-fast only)")
    p.add_argument("--selection", default="degree", choices=("degree", "signature"),
                   help="critical pair selection for the F5B variants")
    p.add_argument("--report", default="text", choices=("text", "json"))
    p.add_argument("--predict", action="store_true", help="print predicted step counts without running")
    p.add_argument("--figures", metavar="DIR", help="also write a counter CSV and PNG figures into DIR")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for --algorithm all")
    p.add_argument("--list-systems", action="store_true", help="list bundled systems and exit")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_systems:
        print("\n".join(bundled_systems()))
        return EXIT_OK
    if not args.system:
        print("fastgb: a system is required (see --list-systems)", file=sys.stderr)
        return EXIT_INPUT
    try:
        text = load_system_text(args.system)
        ring, F = parse_system(text, order=args.order, field=args.field)
    except (OSError, ValueError) as e:
        print(f"fastgb: {e}", file=sys.stderr)
        return EXIT_INPUT

    if args.predict:
        cr = predict(ring, F)
        if args.report == "json":
            print(json.dumps(cr.as_dict(), indent=2))
        else:
            d = cr.as_dict()
            print(f"m={d['m']} n={d['n']} D={d['D']} N={d['N']}"
                  + ("" if d["in_domain"] else "  (outside model domain m < N)"))
            for k, v in d["predicted"].items():
                print(f"{k}: {v}   leading {d['leading_terms'][k]['formula']} = {d['leading_terms'][k]['value']}")
        return EXIT_OK

    algorithms = ALGORITHMS if args.algorithm == "all" else (args.algorithm,)
    try:
        reports = run_many(ring, F, algorithms, args.reduction, args.selection, jobs=args.jobs)
    except (InvariantError, SignatureCollisionError) as e:
        print(f"fastgb: internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    out = reports if args.algorithm == "all" else reports[0]
    sys.stdout.write(emit_report(out, args.report))
    if args.report == "json":
        sys.stdout.write("\n")
    if args.figures:
        from .plotting import render_figures

        stem = os.path.splitext(os.path.basename(args.system))[0] if args.system != "-" else "stdin"
        paths = render_figures(reports, args.figures, stem)
        print("wrote " + ", ".join(paths.values()), file=sys.stderr)
    if not all(r.conservation_ok for r in reports):
        print("fastgb: pair accounting does not balance", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
