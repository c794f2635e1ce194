"""Closed-form greatest-cross-norm values and the robustness bound.

The greatest cross norm of a density operator equals 1 exactly on separable
states.  No general-purpose evaluator exists here: the norm is an infimum
over all finite tensor decompositions, and only symmetric families and
rank-one operators admit closed forms.  For arbitrary states the realignment
trace norm (:func:`ccnr.realign.ccnr_tau`) is a computable lower bound.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .states import PureState, bell_spectrum, schmidt_decompose

__all__ = [
    "GammaValue",
    "gamma_rank_one",
    "gamma_pure",
    "gamma_werner_closed",
    "gamma_isotropic_closed",
    "gamma_bell_diagonal_closed",
    "robustness_lower_bound",
    "robustness_pure_exact",
    "is_separable_closed",
]

SEPARABILITY_TOL = 1e-12


class GammaValue(NamedTuple):
    """Greatest-cross-norm value tagged with the closed form that produced it."""

    value: float
    family: str


def _sqrt_coefficient_sum(psi: PureState) -> float:
    return float(np.sum(np.sqrt(schmidt_decompose(psi).coefficients)))


def gamma_rank_one(psi: PureState, omega: PureState) -> float:
    """Greatest cross norm of ``|psi><omega|``.

    Equals ``(sum_i sqrt(p_i)) (sum_j sqrt(q_j))`` for the Schmidt
    coefficients ``p`` of ``psi`` and ``q`` of ``omega``.
    """
    if psi.dims != omega.dims:
        raise ValueError(f"state shapes differ: {psi.dims} vs {omega.dims}")
    return _sqrt_coefficient_sum(psi) * _sqrt_coefficient_sum(omega)


def gamma_pure(psi: PureState) -> GammaValue:
    """Greatest cross norm of a pure-state projector: ``(sum_i sqrt(p_i))^2``."""
    return GammaValue(_sqrt_coefficient_sum(psi) ** 2, "pure")


def gamma_werner_closed(d: int, f: float) -> GammaValue:
    """Werner-state cross norm: 1 on ``f >= 0``, else ``1 - f``."""
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    if not -1.0 <= f <= 1.0:
        raise ValueError(f"flip expectation must lie in [-1, 1], got {f}")
    value = 1.0 if f >= 0.0 else 1.0 - f
    return GammaValue(value, "werner")


def gamma_isotropic_closed(d: int, F: float) -> GammaValue:
    """Isotropic-state cross norm: 1 up to ``F = 1/d``, then ``dF``."""
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    if not 0.0 <= F <= 1.0:
        raise ValueError(f"fidelity must lie in [0, 1], got {F}")
    value = 1.0 if F <= 1.0 / d else d * F
    return GammaValue(value, "isotropic")


def gamma_bell_diagonal_closed(lam) -> GammaValue:
    """Bell-diagonal cross norm: ``2 max(lam)`` beyond the 1/2 threshold, else 1."""
    lam = bell_spectrum(lam)
    peak = float(np.max(lam))
    value = 2.0 * peak if peak > 0.5 else 1.0
    return GammaValue(value, "bell_diagonal")


def robustness_lower_bound(gamma: GammaValue) -> float:
    """Lower bound ``gamma - 1`` on the robustness of entanglement."""
    if gamma.value < 1.0 - SEPARABILITY_TOL:
        raise ValueError(f"cross norm of a state cannot fall below 1, got {gamma.value}")
    return gamma.value - 1.0


def robustness_pure_exact(psi: PureState) -> float:
    """Exact robustness of entanglement of a pure state: ``(sum_i sqrt(p_i))^2 - 1``."""
    return _sqrt_coefficient_sum(psi) ** 2 - 1.0


def is_separable_closed(gamma: GammaValue) -> bool:
    """Separability verdict from a closed-form cross norm (ties count as separable)."""
    return gamma.value <= 1.0 + SEPARABILITY_TOL
