"""Command-line front end: kernel tables, decompositions, extensions, verify.

Commands
  kernel      evaluate one kernel at a list of para-vector points
  decompose   split a grid file into Hardy halves and propagate slices
  extend      evaluate the band-limited extension of a boundary grid file
  verify      run verification suites and emit JSON verdicts

Conventions shared by all commands: points are comma-separated para-vector
coordinates x0,x1,...,xm; CSV output starts with a versioned comment line
and fixed columns, floats formatted to 17 significant digits; JSON output
carries a versioned schema tag.  Identical configuration and input produce
byte-identical output.  Exit codes: 0 success, 1 verification or whole-table
failure, 2 usage, parse, or precondition errors.  The MONOKERNELS_TOL
environment variable overrides the default of every --tol option.
"""

import argparse
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass

import numpy as np

from .clifford import paravector
from .errors import DomainError, GridFormatError, StripViolationError
from .gridio import read_grid, write_grid
from .kernels import (
    METHOD_CLOSED,
    KernelEvalReport,
    StripGeometry,
    cauchy_kernel,
    bergman_kernel,
    pw_kernel,
    sinc_ball,
    sinc_cube,
    szego_kernel_closed,
    szego_kernel_integral,
)
from .spectral import dft, hardy_split, propagate_slice, pw_extend
from .verify import run_suite, suite_names

KERNEL_TABLE_SCHEMA = "monokernels-kernel-table"
EXTEND_TABLE_SCHEMA = "monokernels-extend-table"
DECOMPOSE_SCHEMA = "monokernels-decompose-report"
VERIFY_SCHEMA = "monokernels-verify-report"
SCHEMA_VERSION = 1
MAX_DIM = 4

STRIP_KINDS = ("S", "S-closed", "B", "pw")
KERNEL_KINDS = ("cauchy", "sinc-ball", "sinc-cube") + STRIP_KINDS

_RECOMBINATION_THRESHOLD = 1e-12


@dataclass(frozen=True)
class RunConfig:
    """Parsed arguments for one CLI invocation."""

    command: str
    m: int = 0
    a: float = 0.0
    kind: str = ""
    points: tuple = ()
    at: tuple = ()
    tol: float = 1e-10
    input_path: str = ""
    output_path: str = ""
    output_prefix: str = ""
    output_format: str = "csv"
    figures_dir: str = ""
    heights: tuple = ()
    radius: float = math.pi
    suite: str = "all"


def _fmt(x):
    return format(float(x), ".17g")


def _default_tol():
    raw = os.environ.get("MONOKERNELS_TOL")
    if raw is None:
        return 1e-10
    try:
        value = float(raw)
    except ValueError as err:
        raise UsageError(f"MONOKERNELS_TOL must be a float, got {raw!r}") from err
    if not value > 0.0:
        raise UsageError(f"MONOKERNELS_TOL must be positive, got {raw}")
    return value


class UsageError(Exception):
    """Raised for argument, input-format, and precondition failures (exit 2)."""


def _parse_point(text, m):
    parts = text.split(",")
    if len(parts) != m + 1:
        raise UsageError(
            f"point {text!r} must have {m + 1} comma-separated coordinates x0,...,x{m}"
        )
    try:
        coords = tuple(float(p) for p in parts)
    except ValueError as err:
        raise UsageError(f"point {text!r} has a non-numeric coordinate") from err
    return coords


def _multivector_payload(value, m):
    return {
        "scalar": [value.coeffs[0].real, value.coeffs[0].imag],
        "vector": [
            [value.coeffs[1 << j].real, value.coeffs[1 << j].imag] for j in range(m)
        ],
    }


def _write_text(path, text):
    if path:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_document(payload):
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


# --------------------------------------------------------------------------
# kernel command


def _kernel_evaluator(config):
    geometry = None
    if config.kind in STRIP_KINDS:
        geometry = StripGeometry(config.m, config.a)
    at = paravector(*config.at) if config.kind in STRIP_KINDS else None

    def evaluate(point):
        p = paravector(*point)
        if config.kind == "cauchy":
            return KernelEvalReport(cauchy_kernel(config.m, p), 0.0, METHOD_CLOSED)
        if config.kind == "sinc-ball":
            return sinc_ball(config.m, p, tol=config.tol)
        if config.kind == "sinc-cube":
            return sinc_cube(config.m, p, tol=config.tol)
        if config.kind == "S":
            return szego_kernel_integral(geometry, p, at, tol=config.tol)
        if config.kind == "S-closed":
            return KernelEvalReport(szego_kernel_closed(geometry, p, at), 0.0, METHOD_CLOSED)
        if config.kind == "B":
            return bergman_kernel(geometry, p, at, tol=config.tol)
        return pw_kernel(geometry, p, at, tol=config.tol)

    return evaluate


def _kernel_rows(config):
    evaluate = _kernel_evaluator(config)
    rows = []
    for index, point in enumerate(config.points):
        row = {
            "index": index,
            "kind": config.kind,
            "m": config.m,
            "a": config.a if config.kind in STRIP_KINDS else None,
            "point": list(point),
            "status": "ok",
            "message": "",
            "value": None,
            "abs_error": None,
            "method": "",
        }
        try:
            report = evaluate(point)
        except DomainError as err:
            row["status"] = "error"
            row["message"] = str(err)
        else:
            row["value"] = _multivector_payload(report.value, config.m)
            row["abs_error"] = report.abs_error_estimate
            row["method"] = report.method
        rows.append(row)
    return rows


_KERNEL_CSV_COLUMNS = (
    ["index", "kind", "m", "a"]
    + [f"x{j}" for j in range(MAX_DIM + 1)]
    + ["scalar_re", "scalar_im"]
    + [coord for j in range(1, MAX_DIM + 1) for coord in (f"e{j}_re", f"e{j}_im")]
    + ["abs_error", "method", "status", "message"]
)


def _point_cells(point):
    cells = [_fmt(c) for c in point]
    return cells + [""] * (MAX_DIM + 1 - len(cells))


def _value_cells(row):
    if row["value"] is None:
        return [""] * (2 + 2 * MAX_DIM)
    scalar = row["value"]["scalar"]
    cells = [_fmt(scalar[0]), _fmt(scalar[1])]
    for pair in row["value"]["vector"]:
        cells.extend([_fmt(pair[0]), _fmt(pair[1])])
    cells.extend([""] * (2 * (MAX_DIM - len(row["value"]["vector"]))))
    return cells


def _kernel_csv(rows):
    out = io.StringIO()
    out.write(f"# {KERNEL_TABLE_SCHEMA} v{SCHEMA_VERSION}\n")
    out.write(",".join(_KERNEL_CSV_COLUMNS) + "\n")
    for row in rows:
        cells = [str(row["index"]), row["kind"], str(row["m"])]
        cells.append("" if row["a"] is None else _fmt(row["a"]))
        cells.extend(_point_cells(row["point"]))
        cells.extend(_value_cells(row))
        cells.append("" if row["abs_error"] is None else _fmt(row["abs_error"]))
        cells.extend([row["method"], row["status"], row["message"].replace(",", ";")])
        out.write(",".join(cells) + "\n")
    return out.getvalue()


def cmd_kernel(config):
    rows = _kernel_rows(config)
    if config.output_format == "csv":
        text = _kernel_csv(rows)
    else:
        text = _json_document(
            {
                "schema": KERNEL_TABLE_SCHEMA,
                "version": SCHEMA_VERSION,
                "kind": config.kind,
                "m": config.m,
                "rows": rows,
            }
        )
    _write_text(config.output_path, text)
    if config.figures_dir and rows:
        from . import figures

        figures.save_kernel_figure(rows, config.figures_dir)
    if rows and all(row["status"] == "error" for row in rows):
        return 1
    return 0


# --------------------------------------------------------------------------
# decompose command


def cmd_decompose(config):
    grid = read_grid(config.input_path)
    geometry = StripGeometry(grid.m, config.a)
    for x0 in config.heights:
        if abs(x0) >= config.a:
            raise StripViolationError(
                f"slice height |x0| = {abs(x0):.12g} is not inside the strip "
                f"|x0| < a = {config.a:.12g}"
            )
    plus, minus = hardy_split(grid)
    prefix = config.output_prefix
    plus_path = f"{prefix}-plus.json"
    minus_path = f"{prefix}-minus.json"
    write_grid(plus_path, plus)
    write_grid(minus_path, minus)
    scale = max(float(np.max(np.abs(grid.values))), 1e-300)
    recombination = float(np.max(np.abs((plus + minus).values - grid.values))) / scale
    norm2 = grid.norm() ** 2
    pythagoras = abs(plus.norm() ** 2 + minus.norm() ** 2 - norm2) / max(norm2, 1e-300)
    slices = []
    for index, x0 in enumerate(config.heights):
        moved = propagate_slice(grid, x0, geometry)
        path = f"{prefix}-slice-{index}.json"
        write_grid(path, moved)
        slices.append({"index": index, "x0": x0, "path": path})
    passed = recombination <= _RECOMBINATION_THRESHOLD and pythagoras <= config.tol
    report = {
        "schema": DECOMPOSE_SCHEMA,
        "version": SCHEMA_VERSION,
        "input": config.input_path,
        "a": config.a,
        "outputs": {"plus": plus_path, "minus": minus_path},
        "slices": slices,
        "recombination_residual": recombination,
        "recombination_threshold": _RECOMBINATION_THRESHOLD,
        "pythagoras_residual": pythagoras,
        "pythagoras_threshold": config.tol,
        "passed": passed,
    }
    _write_text(config.output_path, _json_document(report))
    return 0 if passed else 1


# --------------------------------------------------------------------------
# extend command


_EXTEND_CSV_COLUMNS = (
    ["index", "m", "radius"]
    + [f"x{j}" for j in range(MAX_DIM + 1)]
    + ["scalar_re", "scalar_im"]
    + [coord for j in range(1, MAX_DIM + 1) for coord in (f"e{j}_re", f"e{j}_im")]
    + ["status", "message"]
)


def cmd_extend(config):
    grid = read_grid(config.input_path)
    spectrum = dft(grid)
    rows = []
    for index, point in enumerate(config.points):
        if len(point) != grid.m + 1:
            raise UsageError(
                f"point {point!r} must have {grid.m + 1} coordinates for this grid"
            )
        row = {
            "index": index,
            "m": grid.m,
            "radius": config.radius,
            "point": list(point),
            "status": "ok",
            "message": "",
            "value": None,
        }
        try:
            value = pw_extend(spectrum, paravector(*point), radius=config.radius)
        except DomainError as err:
            row["status"] = "error"
            row["message"] = str(err)
        else:
            row["value"] = _multivector_payload(value, grid.m)
        rows.append(row)
    if config.output_format == "csv":
        out = io.StringIO()
        out.write(f"# {EXTEND_TABLE_SCHEMA} v{SCHEMA_VERSION}\n")
        out.write(",".join(_EXTEND_CSV_COLUMNS) + "\n")
        for row in rows:
            cells = [str(row["index"]), str(row["m"]), _fmt(row["radius"])]
            cells.extend(_point_cells(row["point"]))
            cells.extend(_value_cells(row))
            cells.extend([row["status"], row["message"].replace(",", ";")])
            out.write(",".join(cells) + "\n")
        text = out.getvalue()
    else:
        text = _json_document(
            {
                "schema": EXTEND_TABLE_SCHEMA,
                "version": SCHEMA_VERSION,
                "radius": config.radius,
                "rows": rows,
            }
        )
    _write_text(config.output_path, text)
    if rows and all(row["status"] == "error" for row in rows):
        return 1
    return 0


# --------------------------------------------------------------------------
# verify command


def cmd_verify(config):
    names = suite_names() if config.suite == "all" else (config.suite,)
    results = [run_suite(name) for name in names]
    payload = {
        "schema": VERIFY_SCHEMA,
        "version": SCHEMA_VERSION,
        "suites": [
            {
                "suite": r.suite,
                "passed": r.passed,
                "checks": [
                    {
                        "name": c.name,
                        "passed": c.passed,
                        "value": c.value,
                        "bound": c.bound,
                    }
                    for c in r.checks
                ],
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _write_text(config.output_path, _json_document(payload))
    if config.figures_dir:
        from . import figures

        figures.save_suite_figures(results, config.figures_dir)
    return 0 if payload["passed"] else 1


# --------------------------------------------------------------------------
# argument parsing


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="monokernels",
        description="Monogenic reproducing-kernel evaluation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kernel = sub.add_parser("kernel", help="evaluate a kernel at points")
    kernel.add_argument("--type", required=True, choices=KERNEL_KINDS, dest="kind")
    kernel.add_argument("--m", type=int, required=True, choices=range(1, MAX_DIM + 1))
    kernel.add_argument("--a", type=float, default=1.0, help="strip half-width")
    kernel.add_argument(
        "--point",
        action="append",
        default=[],
        help="para-vector x0,x1,...,xm; repeatable",
    )
    kernel.add_argument(
        "--at",
        default=None,
        help="second kernel argument for two-point kernels (default: origin)",
    )
    kernel.add_argument("--tol", type=float, default=None)
    kernel.add_argument("--format", choices=("csv", "json"), default="csv")
    kernel.add_argument("--output", default="")
    kernel.add_argument("--figures", default="")

    decompose = sub.add_parser("decompose", help="Hardy-split a grid file")
    decompose.add_argument("--input", required=True)
    decompose.add_argument("--a", type=float, required=True)
    decompose.add_argument(
        "--x0", action="append", default=[], type=float, help="slice height; repeatable"
    )
    decompose.add_argument("--output-prefix", required=True)
    decompose.add_argument("--output", default="")
    decompose.add_argument("--tol", type=float, default=None)

    extend = sub.add_parser("extend", help="band-limited extension of a grid file")
    extend.add_argument("--input", required=True)
    extend.add_argument("--point", action="append", default=[])
    extend.add_argument("--radius", type=float, default=math.pi)
    extend.add_argument("--format", choices=("csv", "json"), default="csv")
    extend.add_argument("--output", default="")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument(
        "--suite", default="all", choices=("all",) + suite_names()
    )
    verify.add_argument("--output", default="")
    verify.add_argument("--figures", default="")
    return parser


def _config_from_args(args):
    tol = getattr(args, "tol", None)
    if tol is None:
        tol = _default_tol()
    elif not tol > 0.0:
        raise UsageError(f"--tol must be positive, got {tol}")
    if args.command == "kernel":
        if args.a <= 0.0 and args.kind in STRIP_KINDS:
            raise UsageError(f"--a must be positive for kind {args.kind}, got {args.a}")
        points = tuple(_parse_point(text, args.m) for text in args.point)
        at = _parse_point(args.at, args.m) if args.at else (0.0,) * (args.m + 1)
        return RunConfig(
            command="kernel",
            m=args.m,
            a=args.a,
            kind=args.kind,
            points=points,
            at=at,
            tol=tol,
            output_path=args.output,
            output_format=args.format,
            figures_dir=args.figures,
        )
    if args.command == "decompose":
        if args.a <= 0.0:
            raise UsageError(f"--a must be positive, got {args.a}")
        return RunConfig(
            command="decompose",
            a=args.a,
            heights=tuple(args.x0),
            tol=tol,
            input_path=args.input,
            output_prefix=args.output_prefix,
            output_path=args.output,
            output_format="json",
        )
    if args.command == "extend":
        if args.radius <= 0.0:
            raise UsageError(f"--radius must be positive, got {args.radius}")
        points = []
        for text in args.point:
            try:
                point = tuple(float(p) for p in text.split(","))
            except ValueError as err:
                raise UsageError(f"point {text!r} has a non-numeric coordinate") from err
            if not all(math.isfinite(c) for c in point):
                raise UsageError(f"point {text!r} has a non-finite coordinate")
            points.append(point)
        points = tuple(points)
        return RunConfig(
            command="extend",
            points=points,
            radius=args.radius,
            input_path=args.input,
            output_path=args.output,
            output_format=args.format,
        )
    return RunConfig(
        command="verify",
        suite=args.suite,
        output_path=args.output,
        figures_dir=args.figures,
        output_format="json",
    )


_COMMANDS = {
    "kernel": cmd_kernel,
    "decompose": cmd_decompose,
    "extend": cmd_extend,
    "verify": cmd_verify,
}

_VALUE_FLAGS = ("--point", "--at", "--x0")


def _merge_negative_values(argv):
    """Join "--point -0.3,..." into "--point=-0.3,..." so argparse accepts it."""
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _VALUE_FLAGS
            and i + 1 < len(argv)
            and re.match(r"^-[\d.]", argv[i + 1])
        ):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def main(argv=None):
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        config = _config_from_args(args)
        return _COMMANDS[config.command](config)
    except UsageError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except GridFormatError as err:
        location = "" if err.byte_offset is None else f" at byte {err.byte_offset}"
        sys.stderr.write(f"error: {err}{location}\n")
        return 2
    except DomainError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except FileNotFoundError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
