"""The realignment map, operator Schmidt decomposition and closed-form values.

The realignment of a bipartite density matrix pairs the two A indices into
the row and the two B indices into the column:

    R[i * d_a + j, k * d_b + l] = rho[i * d_b + k, j * d_b + l]

so a product input ``X (x) Y`` realigns to the rank-one matrix
``vec(X) vec(Y)^T`` with trace norm ``||X||_2 ||Y||_2``.  The sum of the
singular values of ``R`` is the separability diagnostic ``tau``: it cannot
exceed 1 on separable states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import singular_values
from .states import DensityOperator, bell_spectrum

__all__ = [
    "RealignedMatrix",
    "OperatorSchmidt",
    "realign_matrix",
    "realign",
    "operator_schmidt",
    "ccnr_tau",
    "tau_werner_closed",
    "tau_isotropic_closed",
    "tau_bell_diagonal_closed",
    "tau_qubit_family_closed",
    "tau_qutrit_family_closed",
    "realign_trace",
]

_SV_FLOOR = 1e-12


@dataclass(frozen=True)
class RealignedMatrix:
    """Matrix of the realignment map, of shape ``(d_a^2, d_b^2)``."""

    dim_a: int
    dim_b: int
    matrix: np.ndarray


@dataclass(frozen=True)
class OperatorSchmidt:
    """Operator Schmidt decomposition ``rho = sum_i c_i E_i (x) F_i``.

    ``coefficients`` descend; ``left_ops[i]`` / ``right_ops[i]`` are
    orthonormal in the Hilbert-Schmidt inner product.  The coefficient sum
    equals the realignment trace norm ``tau``.
    """

    coefficients: np.ndarray
    left_ops: np.ndarray
    right_ops: np.ndarray


def realign_matrix(matrix, dim_a: int, dim_b: int) -> np.ndarray:
    """Realign a raw ``(d_a d_b) x (d_a d_b)`` matrix (no state validation).

    This is the diagnostic entry point: it accepts arbitrary square inputs of
    the right shape, e.g. rank-one operators ``|psi><omega|`` that are not
    states.
    """
    m = np.asarray(matrix, dtype=complex)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise ValueError(
            f"matrix shape {m.shape} does not match bipartition ({dim_a}, {dim_b})"
        )
    return (
        m.reshape(dim_a, dim_b, dim_a, dim_b)
        .transpose(0, 2, 1, 3)
        .reshape(dim_a * dim_a, dim_b * dim_b)
    )


def realign(rho: DensityOperator) -> RealignedMatrix:
    """Realignment of a validated density operator."""
    return RealignedMatrix(
        rho.dim_a, rho.dim_b, realign_matrix(rho.matrix, rho.dim_a, rho.dim_b)
    )


def operator_schmidt(rho: DensityOperator) -> OperatorSchmidt:
    """Operator Schmidt decomposition via the SVD of the realigned matrix."""
    u, s, vh = np.linalg.svd(
        realign_matrix(rho.matrix, rho.dim_a, rho.dim_b), full_matrices=False
    )
    keep = s > _SV_FLOOR
    # Left operators unvectorize the left singular vectors; the rows of vh
    # already carry the conjugation that makes rho = sum_i s_i E_i (x) F_i.
    left = u[:, keep].T.reshape(-1, rho.dim_a, rho.dim_a)
    right = vh[keep].reshape(-1, rho.dim_b, rho.dim_b)
    return OperatorSchmidt(coefficients=s[keep], left_ops=left, right_ops=right)


def ccnr_tau(rho: DensityOperator) -> float:
    """Realignment trace norm ``tau``; values above 1 certify entanglement."""
    return float(
        np.sum(singular_values(realign_matrix(rho.matrix, rho.dim_a, rho.dim_b)))
    )


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError("local dimension must be at least 2")


def tau_werner_closed(d: int, f: float) -> float:
    """Closed-form ``tau`` for the Werner state: ``2/d - f`` up to ``f = 1/d``, then ``f``."""
    _check_dim(d)
    if not -1.0 <= f <= 1.0:
        raise ValueError(f"flip expectation must lie in [-1, 1], got {f}")
    if f <= 1.0 / d:
        return 2.0 / d - f
    return float(f)


def tau_isotropic_closed(d: int, F: float) -> float:
    """Closed-form ``tau`` for the isotropic state: ``2/d - dF`` below ``F = 1/d^2``, then ``dF``."""
    _check_dim(d)
    if not 0.0 <= F <= 1.0:
        raise ValueError(f"fidelity must lie in [0, 1], got {F}")
    if F < 1.0 / (d * d):
        return 2.0 / d - d * F
    return d * F


def tau_bell_diagonal_closed(lam) -> float:
    """Closed-form ``tau`` for a Bell-diagonal state.

    Equals ``2 max(lam)`` whenever ``max(lam) >= 1/2``, so the criterion is
    exact on this family.
    """
    l0, l1, l2, l3 = bell_spectrum(lam)
    return 0.5 * (
        1.0
        + abs(l0 + l3 - l1 - l2)
        + abs(l1 - l2)
        + abs(l0 - l3)
        + abs(abs(l0 - l3) - abs(l1 - l2))
    )


def tau_qubit_family_closed(p: float) -> float:
    """Closed-form ``tau`` for the two-qubit mixture of ``|00>`` with a Bell state."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {p}")
    cross = 0.5 * p * math.sqrt(p * p + (1.0 - p) ** 2)
    base = 0.5 * p * p + 0.25 * (1.0 - p) ** 2
    return (
        1.0
        - p
        + math.sqrt(base + cross)
        + math.sqrt(max(base - cross, 0.0))
    )


def tau_qutrit_family_closed(alpha: float) -> float:
    """Closed-form ``tau`` for the two-qutrit family: ``19/21 + (2/21) sqrt(19 - 15a + 3a^2)``."""
    if not 2.0 <= alpha <= 5.0:
        raise ValueError(f"parameter must lie in [2, 5], got {alpha}")
    return 19.0 / 21.0 + (2.0 / 21.0) * math.sqrt(19.0 - 15.0 * alpha + 3.0 * alpha**2)


def realign_trace(rho: DensityOperator) -> complex:
    """Trace of the realigned matrix (square bipartitions only).

    Equals ``d`` times the maximally entangled fidelity of the state, hence
    ``dF`` for isotropic states and ``(f + 1)/(d + 1)`` for Werner states.
    """
    if rho.dim_a != rho.dim_b:
        raise ValueError("realigned matrix is square only for equal local dimensions")
    return complex(np.trace(realign_matrix(rho.matrix, rho.dim_a, rho.dim_b)))
