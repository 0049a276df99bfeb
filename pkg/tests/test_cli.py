import csv
import io
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

import oracles
from circlearea.cli import CommandConfig, main, parse_config, run

GOLDEN = Path(__file__).parent / "golden"
PI = oracles.pi_fraction()


def cli(*args, pure=False):
    env = dict(os.environ)
    if pure:
        env["CIRCLEAREA_PURE_PYTHON"] = "1"
    return subprocess.run([sys.executable, "-m", "circlearea", *args], capture_output=True, env=env)


def run_args(*args):
    out, err = io.StringIO(), io.StringIO()
    status = run(parse_config(list(args)), out, err)
    return status, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_pi_row():
    status, out, _ = run_args("pi", "--width", "1e-10", "--format", "csv")
    (row,) = rows(out)
    assert status == 0
    assert Fraction(row["lo"]) < PI < Fraction(row["hi"])
    assert float(row["width"]) <= 1e-10 and int(row["n"]) == 3 * 2 ** int(row["k_used"])


def test_verify_theorem2():
    status, out, _ = run_args("verify", "--theorem", "2", "--cells", "10000", "--format", "csv")
    (row,) = rows(out)
    assert status == 0 and row["verified_cells"] == "10000" and float(row["worst_margin"]) > 0


def test_verify_theorem1():
    status, out, _ = run_args("verify", "--theorem", "1", "--cells", "500")
    (row,) = rows(out)
    assert status == 0 and row["verified_cells"] == "500"


def test_table_md():
    status, out, _ = run_args("table", "--scheme", "inscribed", "--kmax", "1", "--format", "md")
    lines = out.splitlines()
    assert status == 0 and len(lines) == 4
    assert lines[0].startswith("| k") and set(lines[1]) <= set("|-")
    lo, hi = (float(c) for c in lines[2].split("|")[3:5])
    assert lo <= 1.299038105676658 <= hi
    lo, hi = (float(c) for c in lines[3].split("|")[3:5])
    assert lo <= 2.598076211353316 <= hi


def test_sinc():
    status, out, _ = run_args("sinc", "--epsilon", "1e-4")
    (row,) = rows(out)
    assert status == 0 and row["verified"] == "true"
    assert float(row["upper_minus_one_hi"]) < 1e-4 and 5e-5 <= float(row["delta"]) <= 4e-4


def test_area_sector_annulus():
    _, out, _ = run_args("area", "--radius", "1")
    (row,) = rows(out)
    assert Fraction(row["lo"]) < PI < Fraction(row["hi"])
    _, out, _ = run_args("sector", "--theta", "2", "--radius", "1")
    (row,) = rows(out)
    assert float(row["lo"]) <= 1.0 <= float(row["hi"])
    status, out, _ = run_args("annulus", "--R", "2", "--r", "1")
    (row,) = rows(out)
    assert status == 0 and row["overlap"] == "true"
    assert Fraction(row["unrolled_lo"]) < 3 * PI < Fraction(row["unrolled_hi"])


@pytest.mark.parametrize(
    "args",
    [
        ("area", "--radius", "-1"),
        ("annulus", "--R", "1", "--r", "2"),
        ("sector", "--theta", "9", "--radius", "1"),
        ("sinc", "--epsilon", "0.5"),
        ("pi", "--width", "1e-16"),
        ("table", "--scheme", "inscribed", "--kmax", "99"),
        ("verify", "--theorem", "2", "--cells", "0"),
        ("area", "--radius", "nan"),
    ],
)
def test_exit_1_domain_errors(args):
    status, out, err = run_args(*args)
    assert status == 1 and out == ""
    assert len(err.strip().splitlines()) == 1 and "error" in err


def test_exit_1_bad_flags():
    p = cli("pi")
    assert p.returncode == 1 and b"--width" in p.stderr
    assert cli("nonsense").returncode == 1


def test_exit_2_unverified():
    status, out, _ = run_args("verify", "--theorem", "2", "--cells", "10", "--lo", "0")
    (row,) = rows(out)
    assert status == 2 and row["verified_cells"] == "9"


def test_unknown_command_in_config():
    err = io.StringIO()
    assert run(CommandConfig("bogus"), io.StringIO(), err) == 1


COMMANDS = [
    ("pi", "--width", "1e-10"),
    ("table", "--scheme", "trapezoid", "--kmax", "12", "--radius", "3"),
    ("verify", "--theorem", "2", "--cells", "200", "--max-depth", "4"),
    ("verify", "--theorem", "1", "--cells", "50", "--format", "md"),
    ("sinc", "--epsilon", "1e-6"),
    ("area", "--radius", "2.5"),
    ("annulus", "--R", "3", "--r", "0"),
    ("sector", "--theta", "1.25", "--radius", "2"),
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
def test_deterministic_bytes(args):
    a, b = cli(*args), cli(*args)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
    assert b"\r" not in a.stdout
    a.stdout.decode("utf-8")


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
def test_backends_byte_identical(args):
    assert cli(*args).stdout == cli(*args, pure=True).stdout


@pytest.mark.parametrize("args", [c for c in COMMANDS if "md" not in c], ids=lambda a: a[0])
def test_csv_round_trip(args):
    status, out, _ = run_args(*args)
    for row in rows(out):
        for value in row.values():
            if value in ("", "true", "false"):
                continue
            assert format(float(value), ".17g") == value or str(int(value)) == value


@pytest.mark.parametrize(
    "name,args",
    [
        ("pi_1e-10", "pi --width 1e-10"),
        ("table_inscribed_k3", "table --scheme inscribed --kmax 3"),
        ("verify2_100", "verify --theorem 2 --cells 100"),
        ("annulus_2_1", "annulus --R 2 --r 1"),
        ("table_trapezoid_k2_md", "table --scheme trapezoid --kmax 2 --format md"),
    ],
)
def test_golden(name, args, capsys):
    assert main(args.split()) == 0
    assert capsys.readouterr().out == (GOLDEN / f"{name}.txt").read_text()
