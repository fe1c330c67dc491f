"""Command-line frontend: ``gray``, ``synth`` and ``verify``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

Angles file::

    m 2
    0.1
    0.2
    -0.3
    0.4

Circuit file (first gate line acts first)::

    NB 3
    ROTY 0.25 AT 2
    CNOT 1 -> 2
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from muxry import sim
from muxry.angle_transform import AngleVector, thetas_from_phis
from muxry.gray_seq import MAX_WIDTH, lazy_ordering
from muxry.synth import (
    Circuit,
    CNot,
    Gate,
    RotY,
    cancel_adjacent,
    emit_naive,
    emit_optimized,
    gate_counts,
)

SPOT_CHECK_STATES = 32
SPOT_CHECK_SEED = 0
CIRCUIT_HEADER = "# gates in application order: the first gate line acts first\n"


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _finite(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected a number, got {tok!r}") from None
    if not math.isfinite(x):
        raise FormatError(f"line {lineno}: angle must be finite, got {tok!r}")
    return x


def parse_angles(text: str) -> AngleVector:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty angles file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "m":
        raise FormatError(f"line {lineno}: expected 'm <integer>', got {head!r}")
    m = _int(parts[1], lineno)
    if not 0 <= m < sim.STATEVECTOR_MAX_NB:
        raise FormatError(f"line {lineno}: m must be in [0, {sim.STATEVECTOR_MAX_NB - 1}], got {m}")
    values = [_finite(line, n) for n, line in lines[1:]]
    if len(values) != 1 << m:
        raise FormatError(f"m={m} needs {1 << m} angles, found {len(values)}")
    return AngleVector.control(values)


def format_angles(phis: AngleVector) -> str:
    return f"m {phis.width}\n" + "".join(f"{v!r}\n" for v in map(float, phis.values))


def parse_circuit(text: str) -> Circuit:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty circuit file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "NB":
        raise FormatError(f"line {lineno}: expected 'NB <integer>', got {head!r}")
    nb = _int(parts[1], lineno)
    gates: list[Gate] = []
    for lineno, line in lines[1:]:
        tok = line.split()
        if len(tok) == 4 and tok[0] == "ROTY" and tok[2] == "AT":
            gates.append(RotY(_finite(tok[1], lineno), _int(tok[3], lineno)))
        elif len(tok) == 4 and tok[0] == "CNOT" and tok[2] == "->":
            c, t = _int(tok[1], lineno), _int(tok[3], lineno)
            if c == t:
                raise FormatError(f"line {lineno}: CNOT control equals target")
            gates.append(CNot(c, t))
        else:
            raise FormatError(f"line {lineno}: unrecognised gate {line!r}")
    try:
        return Circuit(nb, tuple(gates))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_circuit(circuit: Circuit) -> str:
    out = [CIRCUIT_HEADER, f"NB {circuit.nb}\n"]
    for g in circuit.gates:
        if isinstance(g, RotY):
            out.append(f"ROTY {float(g.angle)!r} AT {g.target}\n")
        else:
            out.append(f"CNOT {g.control} -> {g.target}\n")
    return "".join(out)


def synthesize(phis: AngleVector, order: str = "lazy", cancel: bool = True) -> Circuit:
    thetas = thetas_from_phis(phis)
    m = phis.width
    if order == "lazy":
        if cancel:
            return emit_optimized(thetas)
        codes = lazy_ordering(m).codes if m else (0,)
        return emit_naive(thetas, codes)
    if order == "natural":
        circuit = emit_naive(thetas, range(1 << m))
        return cancel_adjacent(circuit) if cancel else circuit
    raise ValueError(f"unknown order {order!r}")


def verify_circuit(phis: AngleVector, circuit: Circuit) -> float:
    """Largest entry deviation between the circuit and the target block rotation."""
    nb = circuit.nb
    if phis.width != nb - 1:
        raise FormatError(f"circuit has NB={nb} but angles have m={phis.width}")
    if nb <= sim.DENSE_MAX_NB:
        return sim.max_abs_diff(sim.circuit_matrix(circuit), sim.target_d_matrix(phis, nb))
    dim = 1 << nb
    rng = np.random.default_rng(SPOT_CHECK_SEED)
    xs = rng.choice(dim, size=min(SPOT_CHECK_STATES, dim), replace=False)
    states = np.zeros((dim, len(xs)), dtype=complex)
    states[xs, np.arange(len(xs))] = 1.0
    got = sim.apply_circuit(circuit, states)
    want = np.stack([sim.target_d_column(phis, nb, int(x)) for x in xs], axis=1)
    return sim.max_abs_diff(got, want)


def cmd_gray(args: argparse.Namespace) -> int:
    order = lazy_ordering(args.m)
    out = sys.stdout
    out.write(",".join(map(str, order.flips)) + "\n")
    for code in order.codes:
        out.write(f"{code}\n")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    phis = parse_angles(Path(args.angles).read_text(encoding="utf-8"))
    circuit = synthesize(phis, args.order, args.cancel)
    text = format_circuit(circuit)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    counts = gate_counts(circuit)
    print(f"rotations={counts.rotations} cnots={counts.cnots}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    phis = parse_angles(Path(args.angles).read_text(encoding="utf-8"))
    circuit = parse_circuit(Path(args.circuit).read_text(encoding="utf-8"))
    if circuit.nb > sim.STATEVECTOR_MAX_NB:
        raise FormatError(f"NB={circuit.nb} exceeds the simulation limit {sim.STATEVECTOR_MAX_NB}")
    d = verify_circuit(phis, circuit)
    print(f"max_abs_diff={d!r}")
    return 0 if d <= args.tol else 1


def _width(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= m <= MAX_WIDTH:
        raise argparse.ArgumentTypeError(f"m must be in [1, {MAX_WIDTH}]")
    return m


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="muxry", description="Lazy-ordered synthesis of multiplexed y-rotations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gray", help="print the flip sequence and lazy ordering of m-bit words")
    p.add_argument("-m", type=_width, required=True)
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("synth", help="synthesize a circuit from an angles file")
    p.add_argument("--angles", required=True)
    p.add_argument("--order", choices=("lazy", "natural"), default="lazy")
    p.add_argument("--cancel", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="check a circuit file against an angles file")
    p.add_argument("--angles", required=True)
    p.add_argument("--circuit", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"muxry {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
