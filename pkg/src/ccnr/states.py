"""Bipartite state families, Schmidt machinery and analytic twirling.

Composite systems use the row-major index convention: the basis vector
``|a> (x) |b>`` of ``C^{d_a} (x) C^{d_b}`` sits at component ``a * d_b + b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "InvariantViolation",
    "DensityOperator",
    "PureState",
    "SchmidtForm",
    "bell_spectrum",
    "flip_operator",
    "fhat_operator",
    "max_entangled",
    "werner_state",
    "isotropic_state",
    "bell_basis",
    "bell_diagonal_state",
    "qubit_family",
    "qutrit_family",
    "pure_from_schmidt",
    "schmidt_decompose",
    "twirl_uu",
    "twirl_uubar",
    "partial_trace_a",
    "partial_trace_b",
    "random_pure",
    "random_density",
]

TRACE_TOL = 1e-10
PSD_TOL = 1e-10
HERM_TOL = 1e-10
NORM_TOL = 1e-12

# Singular values at or below this floor are treated as exact zeros when a
# decomposition is truncated.
_SV_FLOOR = 1e-12


class InvariantViolation(ValueError):
    """A state invariant failed beyond its tolerance."""

    def __init__(self, invariant: str, residual: float, message: str | None = None):
        self.invariant = invariant
        self.residual = float(residual)
        super().__init__(
            message
            or f"invariant '{invariant}' violated: residual {self.residual:.6e}"
        )


def _infer_dims(n: int, dim_a, dim_b) -> tuple[int, int]:
    if dim_a is None and dim_b is None:
        root = math.isqrt(n)
        if root * root != n:
            raise ValueError(
                f"cannot infer a bipartition of total dimension {n}; pass dim_a, dim_b"
            )
        return root, root
    if dim_a is None:
        dim_a = n // int(dim_b)
    if dim_b is None:
        dim_b = n // int(dim_a)
    dim_a, dim_b = int(dim_a), int(dim_b)
    if dim_a < 1 or dim_b < 1 or dim_a * dim_b != n:
        raise ValueError(f"dims ({dim_a}, {dim_b}) do not factor total dimension {n}")
    return dim_a, dim_b


class DensityOperator:
    """Density operator on ``C^{d_a} (x) C^{d_b}``.

    The matrix is required to be Hermitian, unit-trace and positive
    semidefinite, each within tolerance; accepted inputs are symmetrized and
    trace-renormalized, then frozen.
    """

    __slots__ = ("dim_a", "dim_b", "matrix")

    def __init__(
        self,
        matrix,
        dim_a: int | None = None,
        dim_b: int | None = None,
        *,
        tol_herm: float = HERM_TOL,
        tol_psd: float = PSD_TOL,
    ):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("density matrix entries must be finite")
        dim_a, dim_b = _infer_dims(m.shape[0], dim_a, dim_b)

        herm_residual = float(np.max(np.abs(m - m.conj().T)))
        if herm_residual > tol_herm * (1.0 + float(np.max(np.abs(m)))):
            raise InvariantViolation("hermiticity", herm_residual)
        m = (m + m.conj().T) / 2.0

        trace = float(np.real(np.trace(m)))
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvariantViolation("unit_trace", abs(trace - 1.0))
        m = m / trace

        min_eig = float(np.linalg.eigvalsh(m)[0])
        if min_eig < -tol_psd:
            raise InvariantViolation("positive_semidefinite", min_eig)

        m.setflags(write=False)
        object.__setattr__(self, "dim_a", dim_a)
        object.__setattr__(self, "dim_b", dim_b)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("DensityOperator is immutable")

    def __repr__(self):
        return f"DensityOperator(dim_a={self.dim_a}, dim_b={self.dim_b})"

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)


class PureState:
    """Unit vector on ``C^{d_a} (x) C^{d_b}`` (row-major composite index)."""

    __slots__ = ("dim_a", "dim_b", "amplitudes")

    def __init__(self, amplitudes, dim_a: int | None = None, dim_b: int | None = None):
        amps = np.asarray(amplitudes, dtype=complex).ravel()
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        dim_a, dim_b = _infer_dims(amps.size, dim_a, dim_b)
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise InvariantViolation("unit_norm", abs(norm - 1.0))
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, "dim_a", dim_a)
        object.__setattr__(self, "dim_b", dim_b)
        object.__setattr__(self, "amplitudes", amps)

    def __setattr__(self, name, value):
        raise AttributeError("PureState is immutable")

    def __repr__(self):
        return f"PureState(dim_a={self.dim_a}, dim_b={self.dim_b})"

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)

    def coefficient_matrix(self) -> np.ndarray:
        """The ``d_a x d_b`` matrix ``c`` with ``c[a, b] = <a (x) b|psi>``."""
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def projector(self) -> DensityOperator:
        """The rank-one density operator ``|psi><psi|``."""
        return DensityOperator(
            np.outer(self.amplitudes, self.amplitudes.conj()), self.dim_a, self.dim_b
        )


@dataclass(frozen=True)
class SchmidtForm:
    """Schmidt data of a bipartite vector.

    ``coefficients`` are the probabilities ``p_i`` in descending order; the
    columns of ``left_basis`` / ``right_basis`` are the matching orthonormal
    local vectors, so the source vector is ``sum_i sqrt(p_i) a_i (x) b_i``.
    """

    coefficients: np.ndarray
    left_basis: np.ndarray
    right_basis: np.ndarray


def bell_spectrum(lam) -> np.ndarray:
    """Validate a Bell-diagonal spectrum: four nonnegative weights summing to 1."""
    lam = np.asarray(lam, dtype=float).ravel()
    if lam.shape != (4,):
        raise ValueError(f"spectrum needs exactly four weights, got {lam.shape[0]}")
    if float(np.min(lam)) < -1e-12:
        raise ValueError(f"weights must be nonnegative, got min {np.min(lam)}")
    total = float(np.sum(lam))
    if abs(total - 1.0) > 1e-12:
        raise ValueError(f"weights must sum to 1, got {total}")
    return np.clip(lam, 0.0, None) / total


def flip_operator(d: int) -> np.ndarray:
    """Swap operator on ``C^d (x) C^d``: maps ``|i (x) j>`` to ``|j (x) i>``."""
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    f = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            f[i * d + j, j * d + i] = 1.0
    return f


def max_entangled(d: int) -> PureState:
    """Maximally entangled vector ``sum_i |i (x) i> / sqrt(d)``."""
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    amps = np.zeros(d * d, dtype=complex)
    amps[:: d + 1] = 1.0 / math.sqrt(d)
    return PureState(amps, d, d)


def fhat_operator(d: int) -> np.ndarray:
    """Rank-one operator ``sum_ij |i (x) i><j (x) j|`` (trace ``d``).

    Coincides with the partial transpose of the swap operator on one factor
    and with ``d`` times the maximally entangled projector.
    """
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    m = np.zeros((d * d, d * d), dtype=complex)
    diag = np.arange(d) * (d + 1)
    m[np.ix_(diag, diag)] = 1.0
    return m


def werner_state(d: int, f: float) -> DensityOperator:
    """Werner state with flip expectation ``f``.

    Built as ``((d - f) I + (d f - 1) F) / (d^3 - d)`` so that
    ``tr(rho F) = f`` for the swap operator ``F``.
    """
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    if not -1.0 <= f <= 1.0:
        raise ValueError(f"flip expectation must lie in [-1, 1], got {f}")
    m = ((d - f) * np.eye(d * d, dtype=complex) + (d * f - 1.0) * flip_operator(d)) / (
        d**3 - d
    )
    return DensityOperator(m, d, d)


def isotropic_state(d: int, F: float) -> DensityOperator:
    """Isotropic state with maximally entangled fidelity ``F``."""
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    if not 0.0 <= F <= 1.0:
        raise ValueError(f"fidelity must lie in [0, 1], got {F}")
    psi = max_entangled(d).amplitudes
    proj = np.outer(psi, psi.conj())
    m = (1.0 - F) / (d * d - 1.0) * (np.eye(d * d, dtype=complex) - proj) + F * proj
    return DensityOperator(m, d, d)


def bell_basis() -> tuple[PureState, PureState, PureState, PureState]:
    """The four Bell vectors of ``C^2 (x) C^2``.

    Phases: the two triplet vectors with a symmetric component pick up a
    factor ``i``; the singlet is real.
    """
    s = 1.0 / math.sqrt(2.0)
    vectors = (
        np.array([s, 0.0, 0.0, s], dtype=complex),
        np.array([0.0, 1j * s, 1j * s, 0.0], dtype=complex),
        np.array([0.0, -s, s, 0.0], dtype=complex),
        np.array([1j * s, 0.0, 0.0, -1j * s], dtype=complex),
    )
    return tuple(PureState(v, 2, 2) for v in vectors)


def bell_diagonal_state(lam) -> DensityOperator:
    """Two-qubit state diagonal in the Bell basis with weights ``lam``."""
    lam = bell_spectrum(lam)
    m = np.zeros((4, 4), dtype=complex)
    for weight, psi in zip(lam, bell_basis()):
        m += weight * np.outer(psi.amplitudes, psi.amplitudes.conj())
    return DensityOperator(m, 2, 2)


def qubit_family(p: float) -> DensityOperator:
    """Two-qubit mixture ``p |00><00| + (1 - p) |Phi><Phi|``.

    ``|Phi> = (|01> + |10>) / sqrt(2)``; entangled for every ``p < 1``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {p}")
    s = 1.0 / math.sqrt(2.0)
    e00 = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    phi = np.array([0.0, s, s, 0.0], dtype=complex)
    m = p * np.outer(e00, e00.conj()) + (1.0 - p) * np.outer(phi, phi.conj())
    return DensityOperator(m, 2, 2)


def qutrit_family(alpha: float) -> DensityOperator:
    """Two-qutrit family interpolating separable, bound and free entanglement.

    ``rho = (2/7) P+ + (alpha/7) sigma_plus + ((5 - alpha)/7) sigma_minus``
    with ``sigma_plus`` the uniform mixture of ``|01>, |12>, |20>`` and
    ``sigma_minus`` of ``|10>, |21>, |02>``; defined for ``2 <= alpha <= 5``.
    """
    if not 2.0 <= alpha <= 5.0:
        raise ValueError(f"parameter must lie in [2, 5], got {alpha}")
    psi = max_entangled(3).amplitudes
    proj = np.outer(psi, psi.conj())
    sigma_plus = np.zeros((9, 9), dtype=complex)
    sigma_minus = np.zeros((9, 9), dtype=complex)
    for a, b in ((0, 1), (1, 2), (2, 0)):
        sigma_plus[a * 3 + b, a * 3 + b] = 1.0 / 3.0
        sigma_minus[b * 3 + a, b * 3 + a] = 1.0 / 3.0
    m = (2.0 / 7.0) * proj + (alpha / 7.0) * sigma_plus + ((5.0 - alpha) / 7.0) * sigma_minus
    return DensityOperator(m, 3, 3)


def pure_from_schmidt(p, dim_a: int, dim_b: int) -> PureState:
    """Vector ``sum_i sqrt(p_i) |i (x) i>`` built on the canonical bases."""
    p = np.asarray(p, dtype=float).ravel()
    if p.size > min(dim_a, dim_b):
        raise ValueError(
            f"{p.size} coefficients do not fit local dimensions ({dim_a}, {dim_b})"
        )
    if float(np.min(p)) < 0.0:
        raise ValueError("coefficients must be nonnegative")
    if abs(float(np.sum(p)) - 1.0) > 1e-12:
        raise ValueError(f"coefficients must sum to 1, got {np.sum(p)}")
    amps = np.zeros(dim_a * dim_b, dtype=complex)
    for i, weight in enumerate(p):
        amps[i * dim_b + i] = math.sqrt(weight)
    return PureState(amps, dim_a, dim_b)


def schmidt_decompose(psi: PureState) -> SchmidtForm:
    """Schmidt decomposition via the SVD of the coefficient matrix."""
    u, s, vh = np.linalg.svd(psi.coefficient_matrix(), full_matrices=False)
    keep = s > _SV_FLOOR
    # Right vectors are the rows of vh: psi reconstructs as
    # sum_i s_i u_i (x) vh[i].
    return SchmidtForm(
        coefficients=s[keep] ** 2,
        left_basis=u[:, keep],
        right_basis=vh[keep].T,
    )


def _expectation(rho: DensityOperator, operator: np.ndarray) -> float:
    return float(np.real(np.einsum("ij,ji->", rho.matrix, operator)))


def _clip_to(value: float, lo: float, hi: float, guard: float = 1e-8) -> float:
    if value < lo - guard or value > hi + guard:
        raise ValueError(f"value {value} falls outside [{lo}, {hi}]")
    return min(max(value, lo), hi)


def twirl_uu(sigma: DensityOperator) -> DensityOperator:
    """Projection onto the Werner family (average over ``U (x) U`` rotations).

    Matches the flip expectation of the input, so the result is the Werner
    state with ``f = tr(sigma F)``.
    """
    if sigma.dim_a != sigma.dim_b:
        raise ValueError("twirl requires equal local dimensions")
    d = sigma.dim_a
    f = _clip_to(_expectation(sigma, flip_operator(d)), -1.0, 1.0)
    return werner_state(d, f)


def twirl_uubar(sigma: DensityOperator) -> DensityOperator:
    """Projection onto the isotropic family (average over ``U (x) conj(U)``)."""
    if sigma.dim_a != sigma.dim_b:
        raise ValueError("twirl requires equal local dimensions")
    d = sigma.dim_a
    fidelity = _clip_to(_expectation(sigma, fhat_operator(d)) / d, 0.0, 1.0)
    return isotropic_state(d, fidelity)


def partial_trace_a(rho: DensityOperator) -> np.ndarray:
    """Trace out the A factor, returning the ``d_b x d_b`` marginal."""
    four = rho.matrix.reshape(rho.dim_a, rho.dim_b, rho.dim_a, rho.dim_b)
    return np.trace(four, axis1=0, axis2=2)


def partial_trace_b(rho: DensityOperator) -> np.ndarray:
    """Trace out the B factor, returning the ``d_a x d_a`` marginal."""
    four = rho.matrix.reshape(rho.dim_a, rho.dim_b, rho.dim_a, rho.dim_b)
    return np.trace(four, axis1=1, axis2=3)


def random_pure(dim_a: int, dim_b: int, seed=None) -> PureState:
    """Haar-random pure state on ``C^{d_a} (x) C^{d_b}``."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(dim_a * dim_b) + 1j * rng.standard_normal(dim_a * dim_b)
    return PureState(z / np.linalg.norm(z), dim_a, dim_b)


def random_density(dim_a: int, dim_b: int, rank: int | None = None, seed=None) -> DensityOperator:
    """Random density operator of the given rank (full rank by default)."""
    n = dim_a * dim_b
    if rank is None:
        rank = n
    if not 1 <= rank <= n:
        raise ValueError(f"rank must lie in [1, {n}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    m = g @ g.conj().T
    return DensityOperator(m / np.real(np.trace(m)), dim_a, dim_b)
