"""The ``bock`` command line.

Subcommands: ``sigma`` (Bockstein basis of a group), ``dim`` (evaluate a
dimension profile on a group), ``validate-profile``, ``verify`` (run the
named verification suites) and ``catalog`` (list the built-in groups).

Exit codes: 0 for success (valid profile, passing suites), 1 for usage
and parse errors, 2 for semantic rejections (invalid profile, a table
that is not a group or not nilpotent, an unwitnessed tower, a failing
suite).  All output is line-oriented and, for a fixed seed, identical
between runs apart from the ``elapsed`` field.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import TEMPLATES, default_entries, resolve
from .dimension import dim_of_abelian, dim_at_most_one, validate_profile
from .errors import InvalidTableError, NotNilpotentError, UnwitnessedTowerError
from .nilpotent import AbelianDesc, GroupDesc, basis_of
from .serialize import basis_text, extnat_text, group_from_json, profile_from_json
from .suites import SUITE_ORDER, SuiteResult, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2

_PARSE_ERRORS = (OSError, ValueError, KeyError, TypeError)


class _Parser(argparse.ArgumentParser):
    """argparse with the documented exit code for usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _group_input(args) -> GroupDesc:
    """The group named by --catalog or described by the group file."""
    if args.catalog is not None:
        return resolve(args.catalog).desc
    if args.file is None:
        raise ValueError("expected a group file or --catalog NAME")
    return group_from_json(_load_json(args.file))


# ---------------------------------------------------------------------------
# Subcommands


def cmd_sigma(args) -> int:
    try:
        desc = _group_input(args)
    except InvalidTableError as e:
        return _fail(EXIT_REJECTED, f"rejected: {e}")
    except _PARSE_ERRORS as e:
        return _fail(EXIT_USAGE, f"cannot read group: {e}")
    try:
        basis = basis_of(desc)
    except (UnwitnessedTowerError, NotNilpotentError) as e:
        return _fail(EXIT_REJECTED, f"rejected: {e}")
    print(basis_text(basis))
    return EXIT_OK


def cmd_dim(args) -> int:
    try:
        profile = profile_from_json(_load_json(args.profile))
    except _PARSE_ERRORS as e:
        return _fail(EXIT_USAGE, f"cannot read profile: {e}")
    violations = validate_profile(profile)
    if violations:
        for v in violations:
            print(str(v), file=sys.stderr)
        return EXIT_REJECTED
    try:
        desc = _group_input(args)
    except InvalidTableError as e:
        return _fail(EXIT_REJECTED, f"rejected: {e}")
    except _PARSE_ERRORS as e:
        return _fail(EXIT_USAGE, f"cannot read group: {e}")
    if args.le1:
        try:
            verdict = dim_at_most_one(profile, desc)
        except (UnwitnessedTowerError, NotNilpotentError) as e:
            return _fail(EXIT_REJECTED, f"rejected: {e}")
        print("true" if verdict else "false")
        return EXIT_OK
    if not isinstance(desc, AbelianDesc):
        return _fail(EXIT_USAGE,
                     "dim needs an abelian group; pass --le1 for towers and tables")
    print(extnat_text(dim_of_abelian(profile, desc.group)))
    return EXIT_OK


def cmd_validate_profile(args) -> int:
    try:
        profile = profile_from_json(_load_json(args.file))
    except _PARSE_ERRORS as e:
        return _fail(EXIT_USAGE, f"cannot read profile: {e}")
    violations = validate_profile(profile)
    if not violations:
        print("valid")
        return EXIT_OK
    for v in violations:
        print(str(v))
    return EXIT_REJECTED


def _result_json(r: SuiteResult) -> dict:
    return {
        "suite": r.suite,
        "instances": r.instances,
        "failures": [{"instance": f.instance, "expected": f.expected,
                      "actual": f.actual} for f in r.failures],
        "seed": r.seed,
        "elapsed": round(r.elapsed, 6),
    }


def cmd_verify(args) -> int:
    if args.suite is not None and args.suite not in SUITE_ORDER:
        return _fail(EXIT_USAGE,
                     f"unknown suite: {args.suite}\n"
                     f"known suites: {', '.join(SUITE_ORDER)}")
    names = [args.suite] if args.suite is not None else list(SUITE_ORDER)
    results = [run_suite(name, args.trials, args.seed) for name in names]
    if args.json:
        print(json.dumps([_result_json(r) for r in results], indent=2))
    else:
        single = len(names) == 1
        for r in results:
            line = f"{'PASS' if r.ok else 'FAIL'} {r.passed}/{r.instances}"
            print(line if single else f"{r.suite}: {line}")
            for f in r.failures:
                print(f"  {f.instance}")
                print(f"    expected: {f.expected}")
                print(f"    actual:   {f.actual}")
        print(f"elapsed: {sum(r.elapsed for r in results):.3f}s")
    return EXIT_OK if all(r.ok for r in results) else EXIT_REJECTED


def cmd_catalog(args) -> int:
    for entry in default_entries():
        kind = "finite" if entry.is_finite else "tower"
        order = "infinite" if entry.order is None else str(entry.order)
        print(f"{entry.name}: {kind}, order {order}, class {entry.nilpotency_class}")
    print()
    print("templates:")
    for t in TEMPLATES:
        print(f"  {t}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bock",
        description="Bockstein bases and dimension profiles of nilpotent groups.")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    sp = sub.add_parser(
        "sigma", help="print the Bockstein basis of a group",
        description="Compute the Bockstein basis of a group file or catalog entry.")
    sp.add_argument("file", nargs="?", help="group file (JSON)")
    sp.add_argument("--catalog", metavar="NAME",
                    help="use a catalog entry instead of a file")
    sp.set_defaults(fn=cmd_sigma)

    sp = sub.add_parser(
        "dim", help="evaluate a dimension profile on a group",
        description="Print the dimension of a profile relative to an abelian "
                    "group, or with --le1 decide dim <= 1 for any nilpotent input.")
    sp.add_argument("profile", help="profile file (JSON)")
    sp.add_argument("file", nargs="?", help="group file (JSON)")
    sp.add_argument("--catalog", metavar="NAME",
                    help="use a catalog entry instead of a group file")
    sp.add_argument("--le1", action="store_true",
                    help="decide whether the dimension is at most one")
    sp.set_defaults(fn=cmd_dim)

    sp = sub.add_parser(
        "validate-profile", help="check a profile against the dimension rules",
        description="Print 'valid' or the list of rule violations (R0..R4).")
    sp.add_argument("file", help="profile file (JSON)")
    sp.set_defaults(fn=cmd_validate_profile)

    sp = sub.add_parser(
        "verify", help="run the named verification suites",
        description="Run one suite (or all of them) over the catalog plus "
                    "seeded random instances and report pass/fail counts.")
    sp.add_argument("--suite", metavar="NAME",
                    help=f"one of: {', '.join(SUITE_ORDER)} (default: all)")
    sp.add_argument("--trials", type=_nonnegative, default=None,
                    help="instances per suite (default: per-suite)")
    sp.add_argument("--seed", type=int, default=0, help="stream seed (default 0)")
    sp.add_argument("--json", action="store_true",
                    help="machine-readable report")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser(
        "catalog", help="list the built-in example groups",
        description="Print every default catalog entry and the name templates.")
    sp.set_defaults(fn=cmd_catalog)

    return parser


def console_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(console_main())
