"""Parity (Walsh-Hadamard) transform between control-pattern and subscript angles.

A multiplexed rotation applies ``R(phi_c)`` to the target when the controls
read ``c``. Conjugating ``R(theta_b)`` by CNOTs from the set bits of ``b``
turns it into ``R((-1)**popcount(b & c) * theta_b)`` on block ``c``, so

    phi_c   = sum_b (-1)**popcount(b & c) * theta_b
    theta_b = 2**-m * sum_c (-1)**popcount(b & c) * phi_c
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


class Basis(enum.Enum):
    CONTROL = "control"
    SUBSCRIPT = "subscript"


@dataclass(frozen=True)
class AngleVector:
    """``2**width`` angles in radians; entry i belongs to the word with value i."""

    width: int
    basis: Basis
    values: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative width {self.width}")
        arr = np.array(self.values, dtype=float).reshape(-1)
        if arr.shape[0] != 1 << self.width:
            raise ValueError(
                f"expected {1 << self.width} angles for width {self.width}, got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("angles must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def control(cls, values) -> AngleVector:
        return cls(_width_of(values), Basis.CONTROL, values)

    @classmethod
    def subscript(cls, values) -> AngleVector:
        return cls(_width_of(values), Basis.SUBSCRIPT, values)

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AngleVector):
            return NotImplemented
        return (
            self.width == other.width
            and self.basis is other.basis
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]


def _width_of(values) -> int:
    n = len(values)
    if n < 1 or n & (n - 1):
        raise ValueError(f"angle count {n} is not a power of two")
    return n.bit_length() - 1


def walsh_hadamard(x: np.ndarray) -> np.ndarray:
    """Unnormalized fast transform, ``y_c = sum_b (-1)**popcount(b & c) x_b``."""
    y = np.array(x, dtype=float)
    n = y.shape[0]
    h = 1
    while h < n:
        y = y.reshape(-1, 2, h)
        a = y[:, 0, :].copy()
        y[:, 0, :] += y[:, 1, :]
        y[:, 1, :] = a - y[:, 1, :]
        y = y.reshape(n)
        h *= 2
    return y


def walsh_hadamard_direct(x: np.ndarray) -> np.ndarray:
    """O(4**m) reference for ``walsh_hadamard``; kept for testing."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    out = np.zeros(n)
    for c in range(n):
        total = 0.0
        for b in range(n):
            total += -x[b] if (b & c).bit_count() & 1 else x[b]
        out[c] = total
    return out


def _expect(v: AngleVector, basis: Basis) -> None:
    if not isinstance(v, AngleVector) or v.basis is not basis:
        got = getattr(v, "basis", type(v).__name__)
        raise ValueError(f"expected an AngleVector in {basis.value} basis, got {got}")


def thetas_from_phis(phis: AngleVector) -> AngleVector:
    _expect(phis, Basis.CONTROL)
    values = walsh_hadamard(phis.values) / len(phis)
    return AngleVector(phis.width, Basis.SUBSCRIPT, values)


def phis_from_thetas(thetas: AngleVector) -> AngleVector:
    _expect(thetas, Basis.SUBSCRIPT)
    return AngleVector(thetas.width, Basis.CONTROL, walsh_hadamard(thetas.values))
