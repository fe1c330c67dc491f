"""Gate-level emission of multiplexed y-rotations.

Circuits list gates in application order: ``gates[0]`` acts first on the
state, which makes it the rightmost factor when the circuit is written as an
operator product. The rotation target is always the top bit ``nb - 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from muxry.angle_transform import AngleVector, Basis
from muxry.gray_seq import BitWord, lazy_ordering


class UnsupportedShapeError(ValueError):
    """Raised when a circuit is not a single-target RotY/CNOT chain."""


@dataclass(frozen=True)
class RotY:
    """``exp(i * angle * sigma_y)`` on bit ``target``."""

    angle: float
    target: int

    def positions(self) -> tuple[int, ...]:
        return (self.target,)


@dataclass(frozen=True)
class CNot:
    control: int
    target: int

    def __post_init__(self) -> None:
        if self.control == self.target:
            raise ValueError(f"CNOT control and target coincide at bit {self.control}")

    def positions(self) -> tuple[int, ...]:
        return (self.control, self.target)


Gate = Union[RotY, CNot]


@dataclass(frozen=True)
class Circuit:
    nb: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.nb < 1:
            raise ValueError(f"circuit needs at least one bit, got nb={self.nb}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for p in g.positions():
                if not 0 <= p < self.nb:
                    raise ValueError(f"{g} touches bit {p} outside nb={self.nb}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if self.nb != other.nb:
            raise ValueError(f"cannot concatenate nb={self.nb} with nb={other.nb}")
        return Circuit(self.nb, self.gates + other.gates)


def _as_word(b: BitWord | int, width: int) -> BitWord:
    return b if isinstance(b, BitWord) else BitWord(b, width)


def emit_term(b: BitWord, theta: float, nb: int) -> Circuit:
    """``K_b R(theta) K_b`` where ``K_b`` is one CNOT per set bit of ``b`` onto the top bit."""
    if b.width != nb - 1:
        raise ValueError(f"word width {b.width} does not match nb - 1 = {nb - 1}")
    t = nb - 1
    controls = b.set_bits()
    gates: list[Gate] = [CNot(c, t) for c in controls]
    gates.append(RotY(float(theta), t))
    gates.extend(CNot(c, t) for c in reversed(controls))
    return Circuit(nb, tuple(gates))


def _check_subscript(thetas: AngleVector) -> None:
    if thetas.basis is not Basis.SUBSCRIPT:
        raise ValueError(f"expected subscript angles, got {thetas.basis.value}")


def emit_naive(thetas: AngleVector, order: Iterable[BitWord | int]) -> Circuit:
    """One conjugated rotation per word, in the given order, with no cancellation."""
    _check_subscript(thetas)
    m = thetas.width
    words = [_as_word(b, m) for b in order]
    if sorted(w.value for w in words) != list(range(1 << m)) or any(
        w.width != m for w in words
    ):
        raise ValueError(f"order is not a permutation of all {m}-bit words")
    nb = m + 1
    gates: list[Gate] = []
    for w in words:
        gates.extend(emit_term(w, thetas[w.value], nb).gates)
    return Circuit(nb, tuple(gates))


def emit_optimized(thetas: AngleVector) -> Circuit:
    """Lazy-ordered form: exactly one CNOT after each rotation, ``2**m`` of each."""
    _check_subscript(thetas)
    m = thetas.width
    if m == 0:
        return Circuit(1, (RotY(thetas[0], 0),))
    t = m
    order = lazy_ordering(m)
    codes = order.codes
    gates: list[Gate] = [RotY(thetas[codes[0].value], t)]
    for s, code in zip(order.flips, codes[1:]):
        gates.append(CNot(s, t))
        gates.append(RotY(thetas[code.value], t))
    (last,) = codes[-1].set_bits()
    gates.append(CNot(last, t))
    return Circuit(m + 1, tuple(gates))


def _single_target(circuit: Circuit) -> int | None:
    targets = {g.target for g in circuit.gates}
    if len(targets) > 1:
        raise UnsupportedShapeError(f"gates act on several targets {sorted(targets)}")
    return targets.pop() if targets else None


def cancel_adjacent(circuit: Circuit) -> Circuit:
    """Collapse every run of consecutive CNOTs to the controls occurring an odd number of times.

    CNOTs sharing a target commute and square to the identity, so each run is
    rewritten as its odd-multiplicity controls in ascending order. RotY gates
    are left in place.
    """
    _single_target(circuit)
    out: list[Gate] = []
    run: Counter[int] = Counter()
    target = None

    def flush() -> None:
        for c in sorted(run):
            if run[c] % 2:
                out.append(CNot(c, target))
        run.clear()

    for g in circuit.gates:
        if isinstance(g, CNot):
            target = g.target
            run[g.control] += 1
        else:
            flush()
            out.append(g)
    flush()
    return Circuit(circuit.nb, tuple(out))


@dataclass(frozen=True)
class GateCounts:
    rotations: int
    cnots: int


def gate_counts(circuit: Circuit | Sequence[Gate]) -> GateCounts:
    gates = circuit.gates if isinstance(circuit, Circuit) else circuit
    rot = sum(isinstance(g, RotY) for g in gates)
    return GateCounts(rotations=rot, cnots=len(gates) - rot)
