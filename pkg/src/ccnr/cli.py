"""Batch command-line front end.

Subcommands::

    check     run the criteria report on a state file
    schmidt   print Schmidt data of a pure-state file
    oschmidt  print operator Schmidt data of a density-state file
    gen       write a family state (or a random one) to a state file
    sweep     tabulate a one-parameter family sweep to CSV

State files are JSON objects with explicit ``[re, im]`` pairs::

    {"kind": "density", "dims": [2, 2], "matrix": [[[re, im], ...], ...]}
    {"kind": "pure",    "dims": [2, 2], "matrix": [[re, im], ...]}

Exit codes: 0 computed (regardless of verdict), 2 input error,
3 state-invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .crossnorm import (
    gamma_bell_diagonal_closed,
    gamma_isotropic_closed,
    gamma_werner_closed,
)
from .criteria import full_report
from .realign import (
    operator_schmidt,
    tau_bell_diagonal_closed,
    tau_isotropic_closed,
    tau_qubit_family_closed,
    tau_qutrit_family_closed,
    tau_werner_closed,
)
from .states import (
    DensityOperator,
    InvariantViolation,
    PureState,
    bell_diagonal_state,
    isotropic_state,
    qubit_family,
    qutrit_family,
    random_density,
    schmidt_decompose,
    werner_state,
)

CSV_HEADER = "param,tau_numeric,tau_closed,gamma_closed,ppt_floor,reduction_floor,verdict"

SWEEP_FAMILIES = ("werner", "isotropic", "bell", "qubit", "qutrit")
GEN_FAMILIES = SWEEP_FAMILIES + ("random",)


def _fmt(x: float) -> str:
    """Locale-free decimal rendering with 12 significant digits."""
    return f"{float(x):.12g}"


def _parse_dims(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"dims must look like 'A,B', got {text!r}")
    dim_a, dim_b = (int(p) for p in parts)
    if dim_a < 1 or dim_b < 1:
        raise ValueError("dims must be positive")
    return dim_a, dim_b


def _parse_range(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must look like 'start:stop:step', got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("range step must be positive")
    if stop < start:
        raise ValueError("range stop must not precede start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _complex_pair(entry) -> complex:
    if not isinstance(entry, (list, tuple)) or len(entry) != 2:
        raise ValueError(f"complex entries must be [re, im] pairs, got {entry!r}")
    re, im = entry
    return complex(float(re), float(im))


def load_state_file(path, dims_override=None, *, tol_psd=1e-10, tol_herm=1e-10):
    """Parse a JSON state file into a (kind, state) pair.

    Malformed content raises ``ValueError``; a well-formed matrix that fails
    a state invariant raises :class:`InvariantViolation`.
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    kind = data.get("kind")
    if kind not in ("density", "pure"):
        raise ValueError(f"{path}: kind must be 'density' or 'pure', got {kind!r}")
    dims = dims_override
    if dims is None:
        raw_dims = data.get("dims")
        if not isinstance(raw_dims, (list, tuple)) or len(raw_dims) != 2:
            raise ValueError(f"{path}: dims must be a pair [d_a, d_b]")
        dims = (int(raw_dims[0]), int(raw_dims[1]))
    payload = data.get("matrix")
    if payload is None:
        raise ValueError(f"{path}: missing 'matrix'")
    if kind == "density":
        matrix = np.array(
            [[_complex_pair(entry) for entry in row] for row in payload], dtype=complex
        )
        return kind, DensityOperator(
            matrix, dims[0], dims[1], tol_psd=tol_psd, tol_herm=tol_herm
        )
    amps = np.array([_complex_pair(entry) for entry in payload], dtype=complex)
    return kind, PureState(amps, dims[0], dims[1])


def write_state_file(path, state) -> None:
    """Serialize a DensityOperator or PureState to a JSON state file."""
    if isinstance(state, DensityOperator):
        payload = {
            "kind": "density",
            "dims": [state.dim_a, state.dim_b],
            "matrix": [
                [[float(z.real), float(z.imag)] for z in row] for row in state.matrix
            ],
        }
    elif isinstance(state, PureState):
        payload = {
            "kind": "pure",
            "dims": [state.dim_a, state.dim_b],
            "matrix": [[float(z.real), float(z.imag)] for z in state.amplitudes],
        }
    else:
        raise ValueError(f"cannot serialize {type(state).__name__}")
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def _family_point(family: str, d: int | None, value):
    """Build (state, tau_closed, gamma_closed) for one family parameter."""
    if family == "werner":
        if d is None:
            raise ValueError("family 'werner' needs --d")
        return (
            werner_state(d, value),
            tau_werner_closed(d, value),
            gamma_werner_closed(d, value),
        )
    if family == "isotropic":
        if d is None:
            raise ValueError("family 'isotropic' needs --d")
        return (
            isotropic_state(d, value),
            tau_isotropic_closed(d, value),
            gamma_isotropic_closed(d, value),
        )
    if family == "bell":
        if np.ndim(value) == 0:
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"bell sweep weight must lie in [0, 1], got {value}")
            rest = (1.0 - value) / 3.0
            lam = (value, rest, rest, rest)
        else:
            lam = value
        return (
            bell_diagonal_state(lam),
            tau_bell_diagonal_closed(lam),
            gamma_bell_diagonal_closed(lam),
        )
    if family == "qubit":
        if d not in (None, 2):
            raise ValueError("family 'qubit' is fixed at local dimension 2")
        return qubit_family(value), tau_qubit_family_closed(value), None
    if family == "qutrit":
        if d not in (None, 3):
            raise ValueError("family 'qutrit' is fixed at local dimension 3")
        return qutrit_family(value), tau_qutrit_family_closed(value), None
    raise ValueError(f"unknown family {family!r}")


def cmd_check(args) -> int:
    kind, state = load_state_file(
        args.path, args.dims, tol_psd=args.tol_psd, tol_herm=args.tol_herm
    )
    rho = state.projector() if kind == "pure" else state
    report = full_report(rho)
    if args.json:
        print(json.dumps(report.as_dict()))
        return 0
    print(f"tau = {_fmt(report.tau)}")
    print(f"tau_violated = {str(report.tau_violated).lower()}")
    print(f"ppt_floor = {_fmt(report.ppt_floor)}")
    print(f"ppt_violated = {str(report.ppt_violated).lower()}")
    print(f"reduction_floor = {_fmt(report.reduction_floor)}")
    print(f"reduction_violated = {str(report.reduction_violated).lower()}")
    print(f"verdict = {report.verdict}")
    return 0


def cmd_schmidt(args) -> int:
    kind, state = load_state_file(args.path, args.dims)
    if kind != "pure":
        raise ValueError("schmidt needs a pure-state file")
    coefficients = schmidt_decompose(state).coefficients
    gamma = float(np.sum(np.sqrt(coefficients))) ** 2
    print("schmidt_coefficients = " + " ".join(_fmt(p) for p in coefficients))
    print(f"gamma = {_fmt(gamma)}")
    print(f"robustness = {_fmt(gamma - 1.0)}")
    return 0


def cmd_oschmidt(args) -> int:
    kind, state = load_state_file(
        args.path, args.dims, tol_psd=args.tol_psd, tol_herm=args.tol_herm
    )
    if kind != "density":
        raise ValueError("oschmidt needs a density-state file")
    decomposition = operator_schmidt(state)
    tau = float(np.sum(decomposition.coefficients))
    verdict = "violated" if tau > 1.0 + 1e-9 else "satisfied"
    print(
        "operator_schmidt_coefficients = "
        + " ".join(_fmt(c) for c in decomposition.coefficients)
    )
    print(f"tau = {_fmt(tau)}")
    print(f"tau_criterion = {verdict}")
    return 0


def cmd_gen(args) -> int:
    if args.out is None:
        raise ValueError("gen needs --out")
    if args.family == "random":
        if args.dims is None:
            raise ValueError("family 'random' needs --dims")
        dim_a, dim_b = args.dims
        state = random_density(dim_a, dim_b, rank=args.rank, seed=args.seed)
    else:
        if args.param is None:
            raise ValueError(f"family {args.family!r} needs --param")
        values = [float(p) for p in args.param.split(",")]
        if args.family == "bell":
            if len(values) != 4:
                raise ValueError("family 'bell' needs four comma-separated weights")
            state, _, _ = _family_point("bell", args.d, values)
        else:
            if len(values) != 1:
                raise ValueError(f"family {args.family!r} needs a single parameter")
            state, _, _ = _family_point(args.family, args.d, values[0])
    write_state_file(args.out, state)
    print(f"wrote {args.out}")
    return 0


def cmd_sweep(args) -> int:
    if args.out is None:
        raise ValueError("sweep needs --out")
    grid = _parse_range(args.range)
    lines = [CSV_HEADER]
    for value in grid:
        state, tau_closed, gamma = _family_point(args.family, args.d, value)
        report = full_report(state, gamma=gamma)
        lines.append(
            ",".join(
                [
                    _fmt(value),
                    _fmt(report.tau),
                    _fmt(tau_closed),
                    "" if gamma is None else _fmt(gamma.value),
                    _fmt(report.ppt_floor),
                    _fmt(report.reduction_floor),
                    report.verdict,
                ]
            )
        )
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccnr",
        description="Entanglement detection via the realignment criterion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tolerances(p):
        p.add_argument("--tol-psd", type=float, default=1e-10, dest="tol_psd",
                       help="positive-semidefiniteness tolerance (default 1e-10)")
        p.add_argument("--tol-herm", type=float, default=1e-10, dest="tol_herm",
                       help="hermiticity tolerance (default 1e-10)")

    check = sub.add_parser("check", help="criteria report for a state file")
    check.add_argument("path", help="JSON state file")
    check.add_argument("--dims", type=_parse_dims, default=None,
                       help="override the bipartition, e.g. 2,3")
    check.add_argument("--json", action="store_true", help="emit one JSON object")
    add_tolerances(check)
    check.set_defaults(func=cmd_check)

    schmidt = sub.add_parser("schmidt", help="Schmidt data of a pure-state file")
    schmidt.add_argument("path")
    schmidt.add_argument("--dims", type=_parse_dims, default=None)
    schmidt.set_defaults(func=cmd_schmidt)

    oschmidt = sub.add_parser("oschmidt", help="operator Schmidt data of a density file")
    oschmidt.add_argument("path")
    oschmidt.add_argument("--dims", type=_parse_dims, default=None)
    add_tolerances(oschmidt)
    oschmidt.set_defaults(func=cmd_oschmidt)

    gen = sub.add_parser("gen", help="write a family state to a file")
    gen.add_argument("family", choices=GEN_FAMILIES)
    gen.add_argument("--d", type=int, default=None, help="local dimension")
    gen.add_argument("--param", default=None,
                     help="family parameter; four comma-separated weights for bell")
    gen.add_argument("--dims", type=_parse_dims, default=None,
                     help="bipartition for family 'random'")
    gen.add_argument("--rank", type=int, default=None, help="rank for family 'random'")
    gen.add_argument("--seed", type=int, default=None, help="seed for family 'random'")
    gen.add_argument("--out", default=None, help="output state file")
    gen.set_defaults(func=cmd_gen)

    sweep = sub.add_parser("sweep", help="CSV sweep over a one-parameter family")
    sweep.add_argument("family", choices=SWEEP_FAMILIES)
    sweep.add_argument("--d", type=int, default=None, help="local dimension")
    sweep.add_argument("--range", required=True,
                       help="grid as start:stop:step (use --range=-1:1:0.05)")
    sweep.add_argument("--out", default=None, help="output CSV path")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
