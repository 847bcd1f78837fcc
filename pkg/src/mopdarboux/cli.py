"""Command line: list the catalog, verify entries or files, solve for D(W).

Exit status: 0 when every check passes, 1 when any check fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .darboux import default_cap, verify_strong
from .dwalgebra import solve_bounded_order
from .serialize import SchemaError, dumps, load_json, parse_operator, parse_weight
from .weights import WeightError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _params(pairs: list) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise ValueError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _emit(obj, out: str | None):
    text = dumps(obj)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_catalog(args) -> int:
    for e in catalog.catalog_list():
        params = ", ".join(e.parameters) or "-"
        tag = " (stub)" if e.stub else ""
        print(f"{e.id:26s} params: {params:10s} {e.description}{tag}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    entry = catalog.get_entry(args.example)
    cap = args.cap
    if args.all_samples:
        if args.param:
            raise ValueError("--all-samples and --param are exclusive")
        reports = catalog.run_samples(entry.id, cap, jobs=args.jobs)
    else:
        reports = [catalog.run_verification(entry.id, _params(args.param), cap)]
    status = catalog.FAIL if any(r.status == catalog.FAIL for r in reports) else catalog.PASS
    _emit({"entry": entry.id, "status": status,
           "samples": [r.to_json(timings=not args.no_timings) for r in reports]}, args.out)
    for r in reports:
        for c in r.checks:
            if c.status != catalog.PASS:
                print(f"{r.entry} {c.name}: {c.status}", file=sys.stderr)
    return EXIT_OK if status == catalog.PASS else EXIT_FAIL


def _cmd_verify_file(args) -> int:
    source = parse_weight(load_json(args.weight), "weight")
    target = parse_weight(load_json(args.target), "target")
    V = parse_operator(load_json(args.transformer), "transformer")
    if V.n != source.n:
        raise SchemaError("transformer.size", f"expected {source.n}")
    cert = verify_strong(V, source, target, args.cap)
    cert.source_ref, cert.target_ref = args.weight, args.target
    _emit(cert.to_json(), args.out)
    if args.plain:
        return EXIT_OK if cert.plain else EXIT_FAIL
    return EXIT_OK if cert.strong else EXIT_FAIL


def _cmd_solve(args) -> int:
    W = parse_weight(load_json(args.weight), "weight")
    if args.max_order < 0:
        raise ValueError("--max-order must be nonnegative")
    res = solve_bounded_order(W, args.max_order)
    out = res.to_json()
    out["weight"] = args.weight
    _emit(out, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mopdarboux", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("catalog", help="list the built-in examples").set_defaults(fn=_cmd_catalog)

    v = sub.add_parser("verify", help="run the checklist of a catalog entry")
    v.add_argument("--example", required=True)
    v.add_argument("--param", action="append", metavar="K=V", help="parameter value, e.g. a=1/3")
    v.add_argument("--all-samples", action="store_true", help="run every default parameter sample")
    v.add_argument("--cap", type=int, default=None, help=f"degree cap (default {default_cap()})")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for --all-samples")
    v.add_argument("--no-timings", action="store_true", help="omit timing fields from the report")
    v.add_argument("--out")
    v.set_defaults(fn=_cmd_verify)

    f = sub.add_parser("verify-file", help="certify a transformer between two weights given as JSON")
    f.add_argument("--weight", required=True, help="source weight")
    f.add_argument("--transformer", required=True)
    f.add_argument("--target", required=True)
    f.add_argument("--cap", type=int, default=None)
    f.add_argument("--plain", action="store_true", help="succeed on a plain certificate")
    f.add_argument("--out")
    f.set_defaults(fn=_cmd_verify_file)

    s = sub.add_parser("solve", help="basis of operators of bounded order in D(W)")
    s.add_argument("--weight", required=True)
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_solve)
    return p


def main(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except catalog.UnknownEntry as exc:
        print(f"unknown catalog entry {exc.args[0]!r}; see 'mopdarboux catalog'", file=sys.stderr)
    except (SchemaError, WeightError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
