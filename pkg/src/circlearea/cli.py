"""Command-line front end.

Every command writes exactly one table (CSV by default, aligned markdown with
``--format md``). Exit status: 0 success, 1 domain or validation error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from circlearea.area_pi import (
    DEFAULT_PI_WIDTH,
    PI_COLUMNS,
    annulus_area,
    circle_area,
    pi_enclosure,
    sector_area,
)
from circlearea.convergence import SCHEMES, TABLE_COLUMNS, sequence_table
from circlearea.errors import EnclosureError
from circlearea.interval import Interval, fmt
from circlearea.squeeze import SUMMARY_COLUMNS, sinc_squeeze_limit, verify_theorem1, verify_theorem2

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNVERIFIED = 2

COMMANDS = ("pi", "table", "verify", "sinc", "area", "annulus", "sector")
THEOREM_DOMAINS = {1: (1e-3, 1.5), 2: (1e-6, 1.5)}


@dataclass
class CommandConfig:
    command: str
    options: dict = field(default_factory=dict)
    format: str = "csv"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="circlearea", description="Certified enclosures for the area inside a circle.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("csv", "md"), default="csv")
        return p

    p = add("pi", "two-sided enclosure of pi from the polygon bracket")
    p.add_argument("--width", type=float, required=True)

    p = add("table", "approximation table for an area scheme")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--radius", type=float, default=1.0)

    p = add("verify", "grid verification of the squeeze chain (1) or sin < x < tan (2)")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--cells", type=int, required=True)
    p.add_argument("--max-depth", type=int, default=12)
    p.add_argument("--lo", type=float, default=None, help="domain lower end (default per theorem)")
    p.add_argument("--hi", type=float, default=None, help="domain upper end (default 1.5)")

    p = add("sinc", "certified epsilon-delta witness for sin(x)/x -> 1")
    p.add_argument("--epsilon", type=float, required=True)

    p = add("area", "certified area of a circle")
    p.add_argument("--radius", type=float, required=True)

    p = add("annulus", "annulus area, unrolled trapezoid vs pi (R^2 - r^2)")
    p.add_argument("--R", dest="R", type=float, required=True)
    p.add_argument("--r", dest="r", type=float, required=True)

    p = add("sector", "sector area downstream of the certified pi")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--radius", type=float, required=True)
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CommandConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    fmt_ = ns.pop("format")
    return CommandConfig(command, ns, fmt_)


def write_table(out: TextIO, columns: Sequence[str], rows: list[list[str]], format: str) -> None:
    if format == "csv":
        for row in [list(columns), *rows]:
            out.write(",".join(row) + "\n")
        return
    widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(columns)]

    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |\n"

    out.write(line(columns))
    out.write("|" + "|".join("-" * (w + 2) for w in widths) + "|\n")
    for row in rows:
        out.write(line(row))


def _pi():
    return pi_enclosure(DEFAULT_PI_WIDTH)


def _run_pi(o):
    p = pi_enclosure(o["width"])
    return PI_COLUMNS, [p.csv_row()], True


def _run_table(o):
    records = sequence_table(o["scheme"], o["kmax"], o["radius"])
    return TABLE_COLUMNS, [r.csv_row() for r in records], True


def _run_verify(o):
    theorem = o["theorem"]
    lo, hi = THEOREM_DOMAINS[theorem]
    lo = lo if o["lo"] is None else o["lo"]
    hi = hi if o["hi"] is None else o["hi"]
    if not lo < hi:
        raise EnclosureError(f"domain requires lo < hi, got [{lo!r}, {hi!r}]")
    domain = Interval(lo, hi)
    if theorem == 1:
        summary = verify_theorem1(domain, o["cells"])
    else:
        summary = verify_theorem2(domain, o["cells"], o["max_depth"])
    return SUMMARY_COLUMNS, [summary.csv_row()], summary.all_verified


def _run_sinc(o):
    delta, rep = sinc_squeeze_limit(o["epsilon"])
    row = [
        fmt(o["epsilon"]),
        fmt(delta),
        fmt(rep.ratio.lo),
        fmt(rep.ratio.hi),
        fmt(rep.upper.lo),
        fmt(rep.upper.hi),
        fmt(rep.upper_excess.hi),
        str(rep.verified).lower(),
    ]
    cols = ("epsilon", "delta", "ratio_lo", "ratio_hi", "upper_lo", "upper_hi", "upper_minus_one_hi", "verified")
    return cols, [row], rep.verified


def _run_area(o):
    p = _pi()
    a = circle_area(o["radius"], p)
    row = [fmt(o["radius"]), str(p.k_used), fmt(a.lo), fmt(a.hi), fmt(a.width)]
    return ("radius", "k_used", "lo", "hi", "width"), [row], True


def _run_annulus(o):
    unrolled, direct = annulus_area(o["R"], o["r"], _pi())
    ok = unrolled.overlaps(direct)
    row = [fmt(o["R"]), fmt(o["r"]), *unrolled.to_csv().split(","), *direct.to_csv().split(","), str(ok).lower()]
    cols = ("R", "r", "unrolled_lo", "unrolled_hi", "direct_lo", "direct_hi", "overlap")
    return cols, [row], ok


def _run_sector(o):
    a = sector_area(o["theta"], o["radius"], _pi())
    row = [fmt(o["theta"]), fmt(o["radius"]), fmt(a.lo), fmt(a.hi)]
    return ("theta", "radius", "lo", "hi"), [row], True


_HANDLERS = {
    "pi": _run_pi,
    "table": _run_table,
    "verify": _run_verify,
    "sinc": _run_sinc,
    "area": _run_area,
    "annulus": _run_annulus,
    "sector": _run_sector,
}


def run(config: CommandConfig, out: TextIO, err: TextIO | None = None) -> int:
    err = sys.stderr if err is None else err
    try:
        handler = _HANDLERS[config.command]
    except KeyError:
        err.write(f"circlearea: error: unknown command {config.command!r}\n")
        return EXIT_INVALID
    try:
        columns, rows, ok = handler(config.options)
    except EnclosureError as exc:
        err.write(f"circlearea {config.command}: error: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID
    write_table(out, columns, rows, config.format)
    return EXIT_OK if ok else EXIT_UNVERIFIED


def main(argv: Sequence[str] | None = None) -> int:
    config = parse_config(argv)
    return run(config, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
