"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
``RAMANUJAN58_PRECISION`` overrides the default working precision (30 digits)
of ``verify``, ``inspect``, ``lseries`` and ``lattice``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import exact_field, invariants, lattice, lseries, verification
from .numeric_kernel import DomainError, pi_digits, real
from .pi_engine import MAX_DIGITS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PRECISION_ENV = "RAMANUJAN58_PRECISION"
INSPECTABLE = ("g58", "k58", "x58", "alpha58", "pell29", "L-8", "L29")


class UsageError(Exception):
    pass


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 30
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if value < 15:
        raise UsageError(f"{PRECISION_ENV} must be at least 15")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if value < 15:
        raise argparse.ArgumentTypeError("precision must be at least 15 digits")
    return value


def _digits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must be in [1, {MAX_DIGITS}]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramanujan58", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("pi", help="print pi to a number of significant digits")
    pi.add_argument("--digits", type=_digits, default=1000)
    pi.add_argument("--method", choices=("ramanujan", "oracle"), default="ramanujan")

    ver = sub.add_parser("verify", help="run the equation-by-equation verification suite")
    ver.add_argument("--filter", default=None, help="only checks whose id starts with this prefix")
    ver.add_argument("--precision", type=_precision, default=None)
    ver.add_argument("--json", action="store_true", help="one JSON record per line")
    ver.add_argument("--list", action="store_true", help="list check ids and exit")

    ins = sub.add_parser("inspect", help="show an intermediate constant")
    ins.add_argument("object", choices=INSPECTABLE)
    ins.add_argument("--precision", type=_precision, default=None)
    ins.add_argument("--json", action="store_true")

    pell = sub.add_parser("pell", help="fundamental solution of x^2 - D y^2 = 1")
    pell.add_argument("D", type=int)
    pell.add_argument("--json", action="store_true")

    ls = sub.add_parser("lseries", help="L_d(1) by every applicable route")
    ls.add_argument("d", type=int)
    ls.add_argument("--precision", type=_precision, default=None)
    ls.add_argument("--class-number", type=int, default=1, help="h for the class number route (d > 0)")
    ls.add_argument("--json", action="store_true")

    lat = sub.add_parser("lattice", help="the alternating lattice sum S1(1, 0, r)")
    lat.add_argument("r", type=int)
    lat.add_argument("--precision", type=_precision, default=None)
    lat.add_argument("--radius", type=int, default=200, help="truncation radius of the direct sum")
    lat.add_argument("--json", action="store_true")
    return parser


def _emit(record: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
    else:
        width = max(len(k) for k in record)
        for k, v in record.items():
            out.write(f"{k:<{width}}  {v}\n")


def cmd_pi(args, out) -> int:
    out.write(pi_digits(args.digits, args.method) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.list:
        out.write("\n".join(verification.check_ids()) + "\n")
        return EXIT_OK
    p = args.precision or _default_precision()
    try:
        reports = verification.run(args.filter, p)
    except verification.UnknownCheck:
        raise UsageError(f"no check id starts with {args.filter!r}") from None
    for r in reports:
        out.write((r.to_json() if args.json else r.to_text()) + "\n")
    counts = verification.summary(reports)
    if not args.json:
        out.write(f"{counts['pass']} passed, {counts['fail']} failed, {counts['flagged']} flagged\n")
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def inspect_record(name: str, p: int) -> dict:
    ex = invariants.exact58()
    if name == "g58":
        return {"object": name, "exact": "sqrt((5 + sqrt(29))/2)", "decimal": invariants.g58_closed(p).to_str(p)}
    if name == "k58":
        return {"object": name, "exact": "(sqrt(2) - 1)^6 (13 sqrt(58) - 99)", "field_element": str(ex.k),
                "decimal": invariants.k58_closed(p).to_str(p)}
    if name == "x58":
        return {"object": name, "exact": str(ex.x.c0), "decimal": real(ex.x.c0, p).to_str(p)}
    if name == "alpha58":
        return {"object": name, "exact": str(ex.alpha), "decimal": invariants.alpha58_closed(p).to_str(p)}
    if name == "pell29":
        sol = exact_field.pell_fundamental(29)
        return {"object": name, "x": sol.x, "y": sol.y}
    if name == "L-8":
        v = lseries.l_negative(-8, p)
        return {"object": name, "exact": "pi/(4 sqrt(2))", "decimal": v.value.to_str(p), "route": v.detail,
                "dirichlet_series_value": lseries.l_negative(-8, p, "conductor").value.to_str(p)}
    if name == "L29":
        v = lseries.l_class_number(29, 1, p)
        return {"object": name, "exact": "log((27 + 5 sqrt(29))/2)/sqrt(29)", "decimal": v.value.to_str(p)}
    raise UsageError(f"unknown object {name!r}")


def cmd_inspect(args, out) -> int:
    record = inspect_record(args.object, args.precision or _default_precision())
    _emit(record, args.json, out)
    return EXIT_OK


def cmd_pell(args, out) -> int:
    sol = exact_field.pell_fundamental(args.D)
    neg = exact_field.pell_negative(args.D)
    record = {"D": args.D, "x": sol.x, "y": sol.y}
    if neg is not None:
        record["negative_x"], record["negative_y"] = neg.x, neg.y
    _emit(record, args.json, out)
    return EXIT_OK


def cmd_lseries(args, out) -> int:
    p = args.precision or _default_precision()
    d = args.d
    record = {"d": d, "modulus": lseries.character_modulus(d), "conductor": lseries.conductor(d)}
    if d < 0:
        record["negative_closed_tabulated"] = lseries.l_negative(d, p).value.to_str(p)
        record["negative_closed_conductor"] = lseries.l_negative(d, p, "conductor").value.to_str(p)
    else:
        record["trig_product"] = lseries.l_trig_product(d, p).value.to_str(p)
        if d % 4 == 1 and exact_field.is_squarefree(d):
            record["class_number"] = lseries.l_class_number(d, args.class_number, p).value.to_str(p)
    record["partial_sum_1e6"] = lseries.l_partial_sum(d).value.to_str(15)
    _emit(record, args.json, out)
    return EXIT_OK


def cmd_lattice(args, out) -> int:
    p = args.precision or _default_precision()
    spec = lattice.LatticeSumSpec(1, 0, args.r)
    t = lattice.s1_truncated(spec, args.radius)
    record = {
        "r": args.r,
        "csch_route": lattice.s1_csch(args.r, p).to_str(p),
        "rows_route": lattice.s1_rows_csch(args.r, p).to_str(p),
        f"truncated_R{args.radius}": repr(t.value),
        "parity_averaged": repr(lattice.s1_parity_average(spec, args.radius)),
    }
    _emit(record, args.json, out)
    return EXIT_OK


COMMANDS = {"pi": cmd_pi, "verify": cmd_verify, "inspect": cmd_inspect, "pell": cmd_pell,
            "lseries": cmd_lseries, "lattice": cmd_lattice}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
