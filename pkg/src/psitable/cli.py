"""Command-line front end for the integral catalog."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .catalog import (
    DEFAULT_ABS_FLOOR,
    DEFAULT_REL_TOL,
    DEFAULT_SEED,
    ConfigurationError,
    Report,
    UnknownEntryError,
    VerifyConfig,
    export_catalog,
    get_entry,
    list_entries,
    property_checks,
    sample_params,
    verify_all,
    verify_entry,
)
from .quadrature import QuadOptions

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_UNKNOWN_ID = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _assignment(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a number") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="psitable", description="Verify a catalog of digamma-valued integrals.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common_output(sp, formats=("text", "json", "csv")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    def common_verify(sp):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--samples", type=_positive_int, default=5)
        sp.add_argument("--rel-tol", type=_positive_float, default=DEFAULT_REL_TOL)
        sp.add_argument("--abs-floor", type=_positive_float, default=DEFAULT_ABS_FLOOR)
        common_output(sp)

    sp = sub.add_parser("list", help="list entry ids with their anchors")
    sp.add_argument("--filter", dest="entry_filter", help="glob on entry ids")

    sp = sub.add_parser("show", help="print the metadata of one entry")
    sp.add_argument("id")
    common_output(sp, ("text", "json"))

    sp = sub.add_parser("verify", help="verify one entry")
    sp.add_argument("id")
    sp.add_argument("--param", action="append", type=_assignment, default=[],
                    metavar="NAME=VALUE", help="verify at this sample instead of random ones")
    common_verify(sp)

    sp = sub.add_parser("verify-all", help="verify every (or every matching) entry")
    sp.add_argument("--filter", dest="entry_filter", help="glob on entry ids")
    sp.add_argument("--workers", type=_positive_int, default=1)
    common_verify(sp)

    sp = sub.add_parser("properties", help="run the structural property checks")
    common_output(sp)

    sp = sub.add_parser("export", help="write the catalog as JSON")
    sp.add_argument("--output", "-o")
    return p


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()


def _show_text(entry_id: str) -> str:
    e = get_entry(entry_id).to_dict()
    lines = [
        f"id:          {e['id']}",
        f"section:     {e['section']}",
        f"formula:     {e['formula']}",
        f"domain:      {e['domain']}",
        f"anchor:      {e['anchor']}",
    ]
    for p in e["params"]:
        rng = f"{{{', '.join(map(str, p['choices']))}}}" if "choices" in p else f"({p['lo']:g}, {p['hi']:g})"
        lines.append(f"param:       {p['name']} in {rng}")
    lines += [f"constraint:  {c}" for c in e["constraints"]]
    if e["flags"]:
        lines.append(f"flags:       {', '.join(e['flags'])}")
    if e["control"]:
        lines.append("control:     negative control, expected to fail")
    lines += [f"note:        {n}" for n in e["notes"]]
    return "\n".join(lines) + "\n"


def _run(args) -> int:
    if args.command == "list":
        ids = list_entries(args.entry_filter)
        width = max((len(i) for i in ids), default=0)
        _emit("".join(f"{i:<{width}}  {get_entry(i).anchor}\n" for i in ids), None)
        return EXIT_OK

    if args.command == "show":
        if args.format == "json":
            text = json.dumps(get_entry(args.id).to_dict(), indent=2) + "\n"
        else:
            text = _show_text(args.id)
        _emit(text, args.output)
        return EXIT_OK

    if args.command == "export":
        _emit(export_catalog("json"), args.output)
        return EXIT_OK

    if args.command == "properties":
        report = property_checks()
    elif args.command == "verify":
        entry = get_entry(args.id)
        config = VerifyConfig(seed=args.seed, samples_per_entry=args.samples,
                              rel_tol=args.rel_tol, abs_floor=args.abs_floor)
        samples = [dict(args.param)] if args.param else sample_params(entry.id, args.samples, args.seed)
        start = time.perf_counter()
        records = [verify_entry(entry.id, s, QuadOptions(), rel_tol=args.rel_tol,
                                abs_floor=args.abs_floor) for s in samples]
        report = Report(records, args.seed, config.tolerances(), time.perf_counter() - start)
    else:
        config = VerifyConfig(seed=args.seed, samples_per_entry=args.samples,
                              rel_tol=args.rel_tol, abs_floor=args.abs_floor,
                              entry_filter=args.entry_filter, workers=args.workers)
        if not list_entries(args.entry_filter):
            raise UnknownEntryError(f"no entry matches {args.entry_filter!r}")
        report = verify_all(config)

    _emit(_render(report, args.format), args.output)
    return EXIT_OK if report.ok else EXIT_FAILURES


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the exit code: 0 when nothing unexpected
    happened, 1 on unexpected verification results, 2 for an unknown entry
    id, 64 for a usage error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except UnknownEntryError as exc:
        print(f"psitable: unknown entry: {exc.args[0]}", file=sys.stderr)
        return EXIT_UNKNOWN_ID
    except ConfigurationError as exc:
        print(f"psitable: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
