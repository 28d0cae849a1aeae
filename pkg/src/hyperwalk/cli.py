"""Command-line front end.

Exit codes: 0 success, 2 unparsable input, 3 a spec that violates a model
invariant, 4 an inapplicable transform, 5 a failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

import numpy as np

from .equivalence import check_instance, check_strong_instance
from .serialization import (
    SpecError,
    dumps,
    result_from_doc,
    result_to_doc,
    state_from_doc,
    walk_from_spec,
)
from .state import BasisMismatch, NormalizationError, UnitarityError, get_tolerance, random_state
from .structures import StructureError
from .transforms import TransformError, apply_chain, size_of, transform_chain_size
from .walks import WalkError, run

EXIT_OK, EXIT_PARSE, EXIT_SPEC, EXIT_TRANSFORM, EXIT_VERIFY = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_json(path_or_text: str):
    text = path_or_text
    if not path_or_text.lstrip().startswith(("{", "[")):
        try:
            text = Path(path_or_text).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {path_or_text}: {exc}", EXIT_PARSE) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {path_or_text}: {exc}", EXIT_PARSE) from None


def _load_walk(path: str):
    doc = _read_json(path)
    try:
        return walk_from_spec(doc)
    except SpecError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _parse_state(arg: str | None, w, seed: int):
    if arg is None:
        return random_state(w.basis, np.random.default_rng(seed))
    if os.path.exists(arg) or arg.lstrip().startswith(("{", "[")):
        doc = _read_json(arg)
    else:
        try:
            parts = [int(x) for x in arg.split(",")]
        except ValueError:
            raise CliError(f"cannot parse state label {arg!r}", EXIT_PARSE) from None
        doc = parts[0] if len(parts) == 1 else parts
    try:
        return state_from_doc(doc, w)
    except SpecError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _chain(arg: str | None) -> list[str]:
    if not arg:
        return []
    return [s.strip() for s in arg.split(",") if s.strip()]


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_simulate(args) -> int:
    w = _load_walk(args.spec)
    psi = _parse_state(args.state, w, args.seed)
    traj = run(w, psi, args.steps)
    total = all(m.is_total for m in w.measurements)
    buf = io.StringIO()
    buf.write(f"# model={w.model} measurement={'total' if total else 'partial'}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["step", "vertex", "probability"])
    for n, state in enumerate(traj.states):
        for v, p in enumerate(w.distribution(state, n)):
            writer.writerow([n, v, repr(float(p))])
    _write(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    w = _load_walk(args.spec)
    chain = _chain(args.transform)
    if not chain:
        raise CliError("--transform is required", EXIT_PARSE)
    results = apply_chain(w, chain)
    docs = []
    src = w
    for r in results:
        docs.append(result_to_doc(r, src))
        src = r.target
    _write(dumps(docs[0] if len(docs) == 1 else {"chain": docs}), args.out)
    return EXIT_OK


def cmd_chain_size(args) -> int:
    w = _load_walk(args.spec)
    sizes = transform_chain_size(w, _chain(args.transform))
    _write(dumps({"chain": _chain(args.transform), "sizes": [s.to_dict() for s in sizes]}), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _load_walk(args.spec)
    if args.result:
        try:
            result = result_from_doc(_read_json(args.result), w)
        except SpecError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
    else:
        chain = _chain(args.transform)
        if len(chain) != 1:
            raise CliError("verify needs exactly one --transform or a --result document", EXIT_PARSE)
        result = apply_chain(w, chain)[0]
    psi = _parse_state(args.state, w, args.seed)
    check = check_strong_instance if args.strong else check_instance
    try:
        report = check(w, psi, result, args.steps, args.tol)
    except TransformError:
        raise
    except (ValueError, KeyError) as exc:
        raise CliError(f"verification could not run: {exc}", EXIT_VERIFY) from None
    _write(dumps(report.to_dict()), args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_info(args) -> int:
    w = _load_walk(args.spec)
    doc = {
        "model": w.model,
        "sizes": size_of(w).to_dict(),
        "cycle_length": w.cycle_length,
        "measured_vertices": w.vertex_count,
        "unitarity_deviation": [st.operator.deviation for st in w.stages],
    }
    _write(dumps(doc), args.out)
    return EXIT_OK


def _tolerance(text: str) -> float:
    tol = float(text)
    if not tol > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


def _steps(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("steps must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperwalk", description="Discrete-time quantum walks on graphs and hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, steps=True, state=True):
        p.add_argument("--spec", required=True, help="walk spec JSON (path or inline)")
        if state:
            p.add_argument("--state", help="initial state: JSON path/inline, or a basis label like 0,1")
            p.add_argument("--seed", type=int, default=0, help="seed for the random initial state when --state is omitted")
        if steps:
            p.add_argument("--steps", type=_steps, default=10)
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("simulate", help="vertex distributions as CSV")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("transform", help="apply one transform or a comma-separated chain")
    common(p, steps=False, state=False)
    p.add_argument("--transform", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("chain-size", help="sizes along a transform chain without simulating")
    common(p, steps=False, state=False)
    p.add_argument("--transform", default="")
    p.set_defaults(func=cmd_chain_size)

    p = sub.add_parser("verify", help="check a transform against the source walk")
    common(p)
    p.add_argument("--transform")
    p.add_argument("--result", help="transform result document to check instead of --transform")
    p.add_argument("--tol", type=_tolerance, default=None)
    p.add_argument("--strong", action="store_true", help="require the strong (size and step preserving) relation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="sizes and unitarity of a walk spec")
    common(p, steps=False, state=False)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", None) is None and hasattr(args, "tol"):
        args.tol = get_tolerance()
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hyperwalk: {exc}", file=sys.stderr)
        return exc.code
    except TransformError as exc:
        print(f"hyperwalk: inapplicable transform: {exc}", file=sys.stderr)
        return EXIT_TRANSFORM
    except SpecError as exc:
        print(f"hyperwalk: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (StructureError, WalkError, UnitarityError, NormalizationError, BasisMismatch) as exc:
        print(f"hyperwalk: invalid walk: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
