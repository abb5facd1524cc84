"""Command-line front end.

One subcommand per operation, plus ``trace`` for instrumented runs and
``selftest`` for the bundled example cases.  Vectors are given as comma
lists (``1,4,6``, brackets optional, empty string for the empty vector) or
as ``@file`` / ``@file:N`` to read line N (1-based, default 1) of a file
with one vector per non-blank line.

``--machine`` switches output to JSON lines, one record per line, each with
a ``kind`` field: ``result``, ``error``, ``case``, ``summary``, or a trace
event kind (``decompose``, ``visit``, ``stop``, ``access``, ``mutate``).

Exit codes: 0 success, 1 selftest case failures, 2 usage or input parse
errors, 3 domain errors (empty average, length mismatch, bad interval
bounds), 4 out-of-bounds access.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .algorithms import (
    avg_vector,
    dot_product,
    insertion_sort_buggy,
    insertion_sort_in_place,
    merge_sorted,
    sum_interval_lr,
    sum_interval_rl,
)
from .intervals import LEFT_TO_RIGHT, RIGHT_TO_LEFT
from .selftest import run_reference_cases
from .trace import trace_interval, traced_run
from .vectors import OutOfBoundsError, Vector

_DIRECTIONS = {"rl": RIGHT_TO_LEFT, "lr": LEFT_TO_RIGHT}


class VectorParseError(ValueError):
    """A vector argument could not be read."""


class UsageError(Exception):
    """A subcommand was invoked without the flags it needs."""


def parse_vector_literal(text: str) -> list[float]:
    """Parse ``1,4,6`` or ``[1,4,6]`` (or an empty string) into numbers."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if not body:
        return []
    values: list[float] = []
    for pos, token in enumerate(body.split(","), start=1):
        tok = token.strip()
        try:
            values.append(int(tok))
        except ValueError:
            try:
                values.append(float(tok))
            except ValueError:
                raise VectorParseError(f"bad number {tok!r} at token {pos}") from None
    return values


def load_vector_argument(arg: str) -> list[float]:
    """Resolve a vector argument: a literal, or ``@path``/``@path:N`` file reference."""
    if not arg.startswith("@"):
        return parse_vector_literal(arg)
    ref = arg[1:]
    path, _, line_part = ref.rpartition(":")
    if path and line_part.isdigit():
        lineno = int(line_part)
    else:
        path, lineno = ref, 1
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise VectorParseError(f"cannot read {path}: {exc}") from None
    lines = [line for line in raw.splitlines() if line.strip()]
    if not 1 <= lineno <= len(lines):
        raise VectorParseError(
            f"{path} has {len(lines)} vector line(s), requested line {lineno}"
        )
    return parse_vector_literal(lines[lineno - 1])


def format_number(value: float) -> str:
    """Shortest faithful rendering; floats with integral value print bare."""
    if isinstance(value, float):
        if math.isfinite(value) and value.is_integer():
            return str(int(value))
        return repr(value)
    return str(value)


def format_vector(values: list[float]) -> str:
    return "[" + ",".join(format_number(v) for v in values) + "]"


def _print_record(record: dict, stream=None) -> None:
    print(json.dumps(record), file=stream or sys.stdout)


def _emit_result(machine: bool, value) -> None:
    if machine:
        _print_record({"kind": "result", "value": value})
    elif isinstance(value, list):
        print(format_vector(value))
    else:
        print(format_number(value))


def _emit_events(machine: bool, events) -> None:
    for ev in events:
        if machine:
            _print_record({
                "kind": ev.kind,
                "step": ev.step,
                "direction": ev.direction,
                "low": ev.interval_before[0],
                "high": ev.interval_before[1],
                "index": ev.index,
                "detail": ev.detail,
            })
        else:
            print(f"{ev.step:4d}  {ev.kind:<9}  {ev.detail}")


def _report_error(machine: bool, error_kind: str, message: str, **extra) -> None:
    if machine:
        _print_record({"kind": "error", "error": error_kind, "message": message, **extra},
                      stream=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


def _vector_flag(p: argparse.ArgumentParser, name: str, required: bool = True) -> None:
    p.add_argument(name, required=required, metavar="VEC",
                   help="vector literal like 1,4,6 (or []), or @file[:line]")


def _machine_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--machine", action="store_true",
                   help="emit JSON lines instead of plain text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vecintervals",
        description="Bounds-safe vector operations driven by validated index intervals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum-interval", help="sum the integers in [low..high]")
    p.add_argument("--low", type=int, required=True)
    p.add_argument("--high", type=int, required=True)
    p.add_argument("--direction", choices=("rl", "lr"), default="rl",
                   help="fold direction: rl peels the high end first (default), lr the low end")
    _machine_flag(p)

    p = sub.add_parser("avg", help="average of a vector")
    _vector_flag(p, "--a")
    _machine_flag(p)

    p = sub.add_parser("dot", help="dot product of two vectors")
    _vector_flag(p, "--a")
    _vector_flag(p, "--b")
    _machine_flag(p)

    p = sub.add_parser("merge", help="merge two sorted vectors")
    _vector_flag(p, "--a")
    _vector_flag(p, "--b")
    _machine_flag(p)

    p = sub.add_parser("insort", help="insertion sort a vector")
    _vector_flag(p, "--a")
    _machine_flag(p)

    p = sub.add_parser("insort-buggy",
                       help="run the known-broken sort to show the out-of-bounds diagnostic")
    _vector_flag(p, "--a")
    _machine_flag(p)

    p = sub.add_parser("trace", help="run an operation with step tracing")
    p.add_argument("target",
                   choices=("interval", "sum", "avg", "dot", "merge", "insort", "insort-buggy"))
    _vector_flag(p, "--a", required=False)
    _vector_flag(p, "--b", required=False)
    p.add_argument("--low", type=int)
    p.add_argument("--high", type=int)
    p.add_argument("--direction", choices=("rl", "lr"), default="rl")
    _machine_flag(p)

    p = sub.add_parser("selftest", help="run the bundled example cases")
    _machine_flag(p)

    return parser


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)


def _load_vec(arg: str) -> Vector:
    return Vector(load_vector_argument(arg))


def _run_trace(args, machine: bool) -> int:
    direction = _DIRECTIONS[args.direction]
    if args.target == "interval":
        _require(args.low is not None and args.high is not None,
                 "trace interval requires --low and --high")
        _emit_events(machine, trace_interval(args.low, args.high, direction))
        return 0
    name = args.target.replace("-", "_")
    vectors: tuple[Vector, ...] = ()
    if name == "sum":
        _require(args.low is not None and args.high is not None,
                 "trace sum requires --low and --high")
    else:
        _require(args.a is not None, f"trace {args.target} requires --a")
        vecs = [_load_vec(args.a)]
        if name in ("dot", "merge"):
            _require(args.b is not None, f"trace {args.target} requires --b")
            vecs.append(_load_vec(args.b))
        vectors = tuple(vecs)
    outcome = traced_run(name, vectors, low=args.low, high=args.high, direction=direction)
    _emit_events(machine, outcome.events)
    if outcome.error is not None:
        raise outcome.error
    result = outcome.result
    if isinstance(result, Vector):
        result = result.to_list()
    _emit_result(machine, result)
    return 0


def _run_selftest(machine: bool) -> int:
    results = run_reference_cases()
    failed = sum(1 for r in results if not r.passed)
    if machine:
        for r in results:
            _print_record({"kind": "case", "name": r.name,
                           "passed": r.passed, "detail": r.detail})
        _print_record({"kind": "summary", "passed": len(results) - failed, "failed": failed})
    else:
        for r in results:
            print(f"{'ok  ' if r.passed else 'FAIL'} {r.name}"
                  + ("" if r.passed else f" ({r.detail})"))
        print(f"{len(results) - failed} passed, {failed} failed")
    return 0 if failed == 0 else 1


def _dispatch(args, machine: bool) -> int:
    cmd = args.command
    if cmd == "sum-interval":
        if args.direction == "rl":
            _emit_result(machine, sum_interval_rl(args.low, args.high))
        else:
            _emit_result(machine, sum_interval_lr(args.low, args.high))
        return 0
    if cmd == "avg":
        _emit_result(machine, avg_vector(_load_vec(args.a)))
        return 0
    if cmd == "dot":
        _emit_result(machine, dot_product(_load_vec(args.a), _load_vec(args.b)))
        return 0
    if cmd == "merge":
        _emit_result(machine, merge_sorted(_load_vec(args.a), _load_vec(args.b)).to_list())
        return 0
    if cmd == "insort":
        vec = _load_vec(args.a)
        insertion_sort_in_place(vec)
        _emit_result(machine, vec.to_list())
        return 0
    if cmd == "insort-buggy":
        vec = _load_vec(args.a)
        insertion_sort_buggy(vec)
        _emit_result(machine, vec.to_list())
        return 0
    if cmd == "trace":
        return _run_trace(args, machine)
    return _run_selftest(machine)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    machine = getattr(args, "machine", False)
    try:
        return _dispatch(args, machine)
    except VectorParseError as exc:
        _report_error(machine, "parse", str(exc))
        return 2
    except UsageError as exc:
        _report_error(machine, "usage", str(exc))
        return 2
    except OutOfBoundsError as exc:
        _report_error(machine, "out_of_bounds", str(exc),
                      attempted_index=exc.attempted_index,
                      vector_length=exc.vector_length,
                      operation_name=exc.operation_name)
        return 4
    except ValueError as exc:
        _report_error(machine, "domain", str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
