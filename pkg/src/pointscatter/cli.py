"""Command-line front end.

Subcommands: transmission (probability sweeps in either framework),
converge (short-range model error against its zero-range target), compare
(Schrodinger vs Dirac transmission at matched kinetic energy), classify
(delta/epsilon/trig/hyperbolic tag of a barrier), propagate (one transfer
matrix as eight reals).  All tabular output is CSV with a mandatory header
row, comma separators, "\\n" line endings and 17-significant-digit values,
so emitted files parse back to the exact doubles that produced them.

Exit codes: 0 success, 2 invalid parameters, 3 domain singularity.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional

from . import analysis, dirac, schrodinger
from .connection import ConnectionParams
from .dirac import BarrierParams, DiracMedium
from .schrodinger import NonRelMedium, SingularRenormalization

__all__ = ["build_parser", "main"]

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_SINGULAR = 3

# Looser than the ConnectionParams invariant: flag values within 1e-9 of
# SL(2,R) are accepted and rescaled onto determinant 1.
_CLI_DET_TOL = 1e-9


class ParameterError(Exception):
    """Invalid command-line parameter combination (exit code 2)."""


def _fmt(value: float) -> str:
    # 17 significant digits round-trip any double exactly.
    return format(float(value), ".17g")


def _connection_from_args(args: argparse.Namespace) -> ConnectionParams:
    det = args.alpha * args.delta - args.beta * args.gamma
    if abs(det - 1.0) > _CLI_DET_TOL:
        raise ParameterError(
            f"alpha*delta - beta*gamma = {det:.17g}; must be 1 within {_CLI_DET_TOL}"
        )
    scale = math.sqrt(det)
    return ConnectionParams(
        args.alpha / scale,
        args.beta / scale,
        args.gamma / scale,
        args.delta / scale,
        args.theta,
    )


def _require(args: argparse.Namespace, names: tuple[str, ...], context: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"{', '.join(missing)} required {context}")


def _positive_mass(args: argparse.Namespace) -> float:
    if args.mass <= 0.0:
        raise ParameterError("--mass must be positive")
    return args.mass


def _sweep_values(args: argparse.Namespace) -> list[float]:
    if args.sweep_count < 2:
        raise ParameterError("--sweep-count must be at least 2")
    if args.spacing == "log":
        if args.sweep_start <= 0.0 or args.sweep_stop <= 0.0:
            raise ParameterError("log spacing requires positive endpoints")
        ratio = (args.sweep_stop / args.sweep_start) ** (1.0 / (args.sweep_count - 1))
        values = [args.sweep_start * ratio**i for i in range(args.sweep_count)]
    else:
        step = (args.sweep_stop - args.sweep_start) / (args.sweep_count - 1)
        values = [args.sweep_start + step * i for i in range(args.sweep_count)]
    # Endpoints are part of the contract; never leave them to rounding.
    values[0] = args.sweep_start
    values[-1] = args.sweep_stop
    return values


def cmd_transmission(args: argparse.Namespace) -> list[str]:
    mass = _positive_mass(args)
    p = _connection_from_args(args)
    lines = ["x,T2,R2"]
    for x in _sweep_values(args):
        if args.framework == "schrodinger":
            if x <= 0.0:
                raise ParameterError("wave-number sweep must stay positive")
            t2 = schrodinger.transmission(p, NonRelMedium(m=mass, k=x))
        else:
            if x <= mass:
                raise ParameterError("energy sweep must stay above the mass")
            t2 = dirac.transmission(p, x, mass)
        lines.append(f"{_fmt(x)},{_fmt(t2)},{_fmt(1.0 - t2)}")
    return lines


def cmd_converge(args: argparse.Namespace) -> list[str]:
    mass = _positive_mass(args)
    a_values = _sweep_values(args)
    if min(a_values) <= 0.0:
        raise ParameterError("spacing sweep must stay positive")
    if args.framework == "schrodinger":
        _require(args, ("alpha", "beta", "gamma", "delta", "k"), "for --framework schrodinger")
        if args.k <= 0.0:
            raise ParameterError("--k must be positive")
        p = _connection_from_args(args)
        if p.beta != 0.0 and abs(p.beta) < 1e-6:
            print(
                "warning: |beta| < 1e-6; renormalized strengths suffer "
                "cancellation at small spacing",
                file=sys.stderr,
            )
        rows = analysis.nonrel_convergence(p, mass, args.k, a_values)
    else:
        _require(args, ("s", "v", "energy"), "for --framework dirac")
        if args.energy <= mass:
            raise ParameterError("--energy must exceed --mass")
        barrier = BarrierParams(args.s, args.v, args.theta)
        rows = analysis.dirac_convergence(barrier, args.energy, mass, a_values)
    return ["a,err"] + [f"{_fmt(row.x)},{_fmt(row.value)}" for row in rows]


def cmd_compare(args: argparse.Namespace) -> list[str]:
    mass = _positive_mass(args)
    p = _connection_from_args(args)
    eps_values = _sweep_values(args)
    if min(eps_values) <= 0.0:
        raise ParameterError("kinetic-energy sweep must stay positive")
    rows = analysis.correspondence_table(p, mass, eps_values)
    lines = ["kinetic,T2_schrodinger,T2_dirac,diff"]
    for i in range(0, len(rows), 3):
        t_s, t_d, diff = rows[i], rows[i + 1], rows[i + 2]
        lines.append(f"{_fmt(t_s.x)},{_fmt(t_s.value)},{_fmt(t_d.value)},{_fmt(diff.value)}")
    return lines


def cmd_classify(args: argparse.Namespace) -> list[str]:
    try:
        tag = dirac.classify(BarrierParams(args.s, args.v, args.theta))
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    if tag.strength is None:
        return [tag.kind]
    return [f"{tag.kind} strength={_fmt(tag.strength)}"]


def cmd_propagate(args: argparse.Namespace) -> list[str]:
    mass = _positive_mass(args)
    if args.framework == "schrodinger":
        _require(args, ("k",), "for --framework schrodinger")
        if args.k <= 0.0:
            raise ParameterError("--k must be positive")
        matrix = schrodinger.propagator(args.x, NonRelMedium(m=mass, k=args.k, A=args.avec))
    else:
        _require(args, ("energy",), "for --framework dirac")
        if args.energy * args.energy <= mass * mass:
            raise ParameterError("|--energy| must exceed --mass")
        med = DiracMedium(m=mass, E=args.energy, S=args.scalar, V=args.vector, A=args.avec)
        matrix = dirac.propagator(args.x, med)
    cells = []
    for i in (0, 1):
        for j in (0, 1):
            cells.append(_fmt(matrix[i, j].real))
            cells.append(_fmt(matrix[i, j].imag))
    return ["re11,im11,re12,im12,re21,im21,re22,im22", ",".join(cells)]


def _add_connection_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    for name in ("alpha", "beta", "gamma", "delta"):
        parser.add_argument(
            f"--{name}", type=float, required=required, default=None,
            help=f"connection parameter {name}",
        )


def _add_sweep_flags(parser: argparse.ArgumentParser, what: str, spacing: str) -> None:
    parser.add_argument("--sweep-start", type=float, required=True, help=f"first {what}")
    parser.add_argument("--sweep-stop", type=float, required=True, help=f"last {what}")
    parser.add_argument(
        "--sweep-count", type=int, required=True, help="number of sweep points (>= 2)"
    )
    parser.add_argument(
        "--spacing", choices=("linear", "log"), default=spacing,
        help=f"sweep point spacing (default {spacing})",
    )


def _add_output_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output", default=None, help="write to this path instead of standard output"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointscatter",
        description="Transfer-matrix computations for 1D quantum point interactions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transmission", help="transmission/reflection probability sweep")
    _add_connection_flags(t, required=True)
    t.add_argument("--theta", type=float, default=0.0, help="connection phase (radians)")
    t.add_argument("--framework", choices=("schrodinger", "dirac"), required=True)
    t.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    _add_sweep_flags(t, "wave number (schrodinger) or energy (dirac)", "linear")
    _add_output_flag(t)
    t.set_defaults(func=cmd_transmission)

    c = sub.add_parser("converge", help="short-range model error vs its point limit")
    c.add_argument("--framework", choices=("schrodinger", "dirac"), required=True)
    _add_connection_flags(c, required=False)
    c.add_argument(
        "--theta", type=float, default=0.0,
        help="connection phase (schrodinger) or integrated spatial potential (dirac)",
    )
    c.add_argument("--s", type=float, default=None, help="integrated scalar strength (dirac)")
    c.add_argument("--v", type=float, default=None, help="integrated vector strength (dirac)")
    c.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    c.add_argument("--k", type=float, default=None, help="wave number (schrodinger)")
    c.add_argument("--energy", type=float, default=None, help="energy (dirac)")
    _add_sweep_flags(c, "half-spacing a", "log")
    _add_output_flag(c)
    c.set_defaults(func=cmd_converge)

    cp = sub.add_parser("compare", help="Schrodinger vs Dirac transmission vs kinetic energy")
    _add_connection_flags(cp, required=True)
    cp.add_argument("--theta", type=float, default=0.0, help="connection phase (radians)")
    cp.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    _add_sweep_flags(cp, "kinetic energy", "log")
    _add_output_flag(cp)
    cp.set_defaults(func=cmd_compare)

    cl = sub.add_parser("classify", help="name the point interaction of a Dirac barrier")
    cl.add_argument("--s", type=float, required=True, help="integrated scalar strength")
    cl.add_argument("--v", type=float, required=True, help="integrated vector strength")
    cl.add_argument(
        "--theta", type=float, default=0.0, help="integrated spatial vector potential"
    )
    _add_output_flag(cl)
    cl.set_defaults(func=cmd_classify)

    pr = sub.add_parser("propagate", help="dump one propagator matrix as 8 reals")
    pr.add_argument("--framework", choices=("schrodinger", "dirac"), required=True)
    pr.add_argument("--x", type=float, required=True, help="displacement")
    pr.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    pr.add_argument("--k", type=float, default=None, help="wave number (schrodinger)")
    pr.add_argument("--energy", type=float, default=None, help="energy (dirac)")
    pr.add_argument("--scalar", type=float, default=0.0, help="scalar potential S (dirac)")
    pr.add_argument("--vector", type=float, default=0.0, help="vector potential V (dirac)")
    pr.add_argument(
        "--avec", type=float, default=0.0, help="spatial vector potential A (both frameworks)"
    )
    _add_output_flag(pr)
    pr.set_defaults(func=cmd_propagate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except SingularRenormalization as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK
