"""Dense and state-vector simulation of RotY/CNOT circuits, used as the correctness oracle.

Basis state ``x`` has bit k equal to the k-th binary digit of x. Matrices are
stored complex even though every RotY/CNOT product is real, so that the
reality check in the tests is a real check.
"""

from __future__ import annotations

import numpy as np

from muxry.angle_transform import AngleVector, Basis
from muxry.synth import Circuit, CNot, Gate, RotY

DENSE_MAX_NB = 10
STATEVECTOR_MAX_NB = 24


class ResourceLimitError(ValueError):
    pass


def roty_block(theta: float, dtype=complex) -> np.ndarray:
    """``exp(i theta sigma_y) = [[cos, sin], [-sin, cos]]``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]], dtype=dtype)


def _check_positions(g: Gate, nb: int) -> None:
    for p in g.positions():
        if not 0 <= p < nb:
            raise ValueError(f"{g} touches bit {p} outside nb={nb}")


def _cnot_permutation(control: int, target: int, dim: int) -> np.ndarray:
    x = np.arange(dim)
    return np.where((x >> control) & 1, x ^ (1 << target), x)


def gate_matrix(g: Gate, nb: int) -> np.ndarray:
    _check_positions(g, nb)
    dim = 1 << nb
    if isinstance(g, RotY):
        # kron puts its first factor on the most significant bit
        return np.kron(
            np.kron(np.eye(1 << (nb - 1 - g.target)), roty_block(g.angle)),
            np.eye(1 << g.target),
        )
    u = np.zeros((dim, dim), dtype=complex)
    u[_cnot_permutation(g.control, g.target, dim), np.arange(dim)] = 1.0
    return u


def _apply_rows(u: np.ndarray, g: Gate, nb: int) -> np.ndarray:
    """Left-multiply ``u`` (dim x k) by the gate matrix without forming it."""
    dim = 1 << nb
    if isinstance(g, CNot):
        # (P u)[y] = u[P^-1 y], and the CNOT permutation is an involution
        return u[_cnot_permutation(g.control, g.target, dim)]
    # rows x and x + 2**t mix through the real 2x2 block; view complex as (re, im) pairs
    rows = u.view(float).reshape(dim // (2 << g.target), 2, -1)
    return (roty_block(g.angle, float) @ rows).reshape(dim, -1).view(complex)


def circuit_matrix(c: Circuit) -> np.ndarray:
    """Operator product of the gates, ``gates[0]`` rightmost."""
    if c.nb > DENSE_MAX_NB:
        raise ResourceLimitError(f"dense simulation limited to nb <= {DENSE_MAX_NB}, got {c.nb}")
    u = np.eye(1 << c.nb, dtype=complex)
    for g in c.gates:
        _check_positions(g, c.nb)
        u = _apply_rows(u, g, c.nb)
    return u


def _check_control_angles(phis: AngleVector, nb: int) -> None:
    if phis.basis is not Basis.CONTROL:
        raise ValueError(f"expected control angles, got {phis.basis.value}")
    if phis.width != nb - 1:
        raise ValueError(f"angle width {phis.width} does not match nb - 1 = {nb - 1}")


def target_d_matrix(phis: AngleVector, nb: int) -> np.ndarray:
    """Block rotation ``R(phi_c)`` on the top bit for each control word ``c``.

    Entry ``(tau' * 2**m + c', tau * 2**m + c)`` is ``R(phi_c)[tau', tau]`` when c' == c.
    """
    _check_control_angles(phis, nb)
    if nb > DENSE_MAX_NB:
        raise ResourceLimitError(f"dense simulation limited to nb <= {DENSE_MAX_NB}, got {nb}")
    half = 1 << (nb - 1)
    u = np.zeros((2 * half, 2 * half), dtype=complex)
    for c in range(half):
        r = roty_block(phis[c])
        for tp in range(2):
            for t in range(2):
                u[tp * half + c, t * half + c] = r[tp, t]
    return u


def target_d_column(phis: AngleVector, nb: int, x: int) -> np.ndarray:
    """Column ``x`` of ``target_d_matrix`` without building the matrix."""
    _check_control_angles(phis, nb)
    half = 1 << (nb - 1)
    tau, c = divmod(x, half)
    r = roty_block(phis[c])
    col = np.zeros(2 * half, dtype=complex)
    col[c] = r[0, tau]
    col[half + c] = r[1, tau]
    return col


def basis_state(nb: int, x: int) -> np.ndarray:
    v = np.zeros(1 << nb, dtype=complex)
    v[x] = 1.0
    return v


def apply_circuit(c: Circuit, v: np.ndarray) -> np.ndarray:
    """Run the circuit on a state vector with in-place stride sweeps.

    ``v`` may also be a ``(dim, k)`` array of k states, one per column.
    """
    if c.nb > STATEVECTOR_MAX_NB:
        raise ResourceLimitError(
            f"state-vector simulation limited to nb <= {STATEVECTOR_MAX_NB}, got {c.nb}"
        )
    dim = 1 << c.nb
    v = np.array(v, dtype=complex)
    if v.ndim not in (1, 2) or v.shape[0] != dim:
        raise ValueError(f"state has shape {v.shape}, circuit needs dimension {dim}")
    k = v.shape[1] if v.ndim == 2 else 1
    nb = c.nb
    bits = v.reshape((2,) * nb + (k,))  # axis nb-1-j holds bit j
    for g in c.gates:
        _check_positions(g, nb)
        if isinstance(g, RotY):
            # real block acting on (re, im) pairs of amplitudes (x, x + 2**t)
            pairs = v.view(float).reshape(-1, 2, (1 << g.target) * k * 2)
            pairs[...] = roty_block(g.angle, float) @ pairs
        else:
            idx0 = [slice(None)] * (nb + 1)
            idx0[nb - 1 - g.control] = 1
            idx1 = list(idx0)
            idx0[nb - 1 - g.target] = 0
            idx1[nb - 1 - g.target] = 1
            idx0, idx1 = tuple(idx0), tuple(idx1)
            tmp = bits[idx0].copy()
            bits[idx0] = bits[idx1]
            bits[idx1] = tmp
    return v


def _same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def commutator_norm(a: np.ndarray, b: np.ndarray) -> float:
    _same_shape(a, b)
    return float(np.max(np.abs(a @ b - b @ a)))


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    _same_shape(a, b)
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def unitarity_error(u: np.ndarray) -> float:
    return max_abs_diff(u @ u.conj().T, np.eye(u.shape[0]))
