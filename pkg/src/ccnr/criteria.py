"""Comparison separability criteria (PPT, reduction) and report assembly.

All three numeric criteria are necessary conditions: a violation certifies
entanglement, while satisfaction alone certifies nothing.  Separability is
only certified through a closed-form cross norm equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .crossnorm import GammaValue
from .linalg import kron
from .realign import ccnr_tau
from .states import DensityOperator, partial_trace_a, partial_trace_b

__all__ = [
    "VIOLATION_GUARD",
    "CriteriaReport",
    "partial_transpose_b",
    "ppt_min_eigenvalue",
    "reduction_min_eigenvalue",
    "full_report",
]

# Guard band applied symmetrically on both sides of every criterion
# threshold before a violation flag is raised.
VIOLATION_GUARD = 1e-9

_GAMMA_EQUALITY_TOL = 1e-12


@dataclass(frozen=True)
class CriteriaReport:
    """Aggregated per-state verdicts of the implemented criteria."""

    tau: float
    tau_violated: bool
    ppt_floor: float
    ppt_violated: bool
    reduction_floor: float
    reduction_violated: bool
    gamma_closed: float | None
    gamma_family: str | None
    verdict: str

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "tau_violated": self.tau_violated,
            "ppt_floor": self.ppt_floor,
            "ppt_violated": self.ppt_violated,
            "reduction_floor": self.reduction_floor,
            "reduction_violated": self.reduction_violated,
            "gamma_closed": self.gamma_closed,
            "gamma_family": self.gamma_family,
            "verdict": self.verdict,
        }


def partial_transpose_b(matrix, dim_a: int, dim_b: int) -> np.ndarray:
    """Transpose on the B factor: ``PT[(i,k),(j,l)] = M[(i,l),(j,k)]``."""
    m = np.asarray(matrix, dtype=complex)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise ValueError(
            f"matrix shape {m.shape} does not match bipartition ({dim_a}, {dim_b})"
        )
    return (
        m.reshape(dim_a, dim_b, dim_a, dim_b)
        .transpose(0, 3, 2, 1)
        .reshape(n, n)
    )


def ppt_min_eigenvalue(rho: DensityOperator) -> float:
    """Minimum eigenvalue of the partial transpose; negative means entangled."""
    pt = partial_transpose_b(rho.matrix, rho.dim_a, rho.dim_b)
    return float(np.linalg.eigvalsh(pt)[0])


def reduction_min_eigenvalue(rho: DensityOperator) -> float:
    """Minimum eigenvalue over both reduction operators.

    Tests ``rho_A (x) I - rho`` and ``I (x) rho_B - rho``; a negative value
    certifies entanglement (and distillability).
    """
    eye_a = np.eye(rho.dim_a, dtype=complex)
    eye_b = np.eye(rho.dim_b, dtype=complex)
    first = kron(partial_trace_b(rho), eye_b) - rho.matrix
    second = kron(eye_a, partial_trace_a(rho)) - rho.matrix
    return float(
        min(np.linalg.eigvalsh(first)[0], np.linalg.eigvalsh(second)[0])
    )


def full_report(rho: DensityOperator, gamma: GammaValue | None = None) -> CriteriaReport:
    """Evaluate every criterion and aggregate a verdict.

    ``gamma`` is an optional closed-form cross norm for states of a known
    family; when given, it can certify separability (value 1) or
    entanglement (value above 1).
    """
    tau = ccnr_tau(rho)
    ppt_floor = ppt_min_eigenvalue(rho)
    reduction_floor = reduction_min_eigenvalue(rho)

    tau_violated = tau > 1.0 + VIOLATION_GUARD
    ppt_violated = ppt_floor < -VIOLATION_GUARD
    reduction_violated = reduction_floor < -VIOLATION_GUARD
    gamma_entangled = gamma is not None and gamma.value > 1.0 + VIOLATION_GUARD

    if tau_violated or ppt_violated or reduction_violated or gamma_entangled:
        verdict = "entangled_certified"
    elif gamma is not None and abs(gamma.value - 1.0) <= _GAMMA_EQUALITY_TOL:
        verdict = "separable_certified"
    else:
        verdict = "undecided"

    return CriteriaReport(
        tau=tau,
        tau_violated=tau_violated,
        ppt_floor=ppt_floor,
        ppt_violated=ppt_violated,
        reduction_floor=reduction_floor,
        reduction_violated=reduction_violated,
        gamma_closed=None if gamma is None else gamma.value,
        gamma_family=None if gamma is None else gamma.family,
        verdict=verdict,
    )
