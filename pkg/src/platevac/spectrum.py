"""Plate geometry, mode spectrum, and longitudinal mode profiles.

A massless scalar field lives between two infinite parallel plates a
distance L apart.  Dirichlet plates force the field to vanish on the
surfaces and select sine profiles; Neumann plates force the normal
derivative to vanish and select cosines.  Only the longitudinal factor
of each mode is materialized here: every expectation value downstream
reduces to longitudinal sums once the transverse integrals are done in
continued dimension, so a complex time/transverse-plane-wave layer
would go unused.

The sign convention that threads every downstream formula is owned by
:class:`BoundaryCondition.sign_upper`: +1 selects the upper sign of a
plus-minus pair (Dirichlet), -1 the lower sign (Neumann).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError

__all__ = ["BoundaryCondition", "PlateConfig", "ModeIndex", "k_n", "omega",
           "mode_profile", "orthonormality_check"]


class BoundaryCondition(Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"

    @property
    def sign_upper(self) -> int:
        """+1 for Dirichlet (upper sign), -1 for Neumann (lower sign)."""
        return 1 if self is BoundaryCondition.DIRICHLET else -1


@dataclass(frozen=True)
class PlateConfig:
    """Plate separation L (length units)."""

    L: float

    def __post_init__(self) -> None:
        if not self.L > 0.0:
            raise ValueError(f"plate separation must be positive, got {self.L}")


@dataclass(frozen=True)
class ModeIndex:
    """Longitudinal quantum number n >= 1 plus a transverse wavevector.

    The n = 0 Neumann mode is constant in space and contributes nothing,
    so n starts at 1 for both boundary conditions.
    """

    n: int
    k_T: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"mode number must be >= 1, got {self.n}")
        if len(self.k_T) != 2:
            raise ValueError("transverse wavevector needs exactly two components")


def k_n(config: PlateConfig, n: int) -> float:
    """Longitudinal wavenumber k_n = n pi / L."""
    if n < 1:
        raise ValueError(f"mode number must be >= 1, got {n}")
    return n * math.pi / config.L


def omega(config: PlateConfig, mode: ModeIndex) -> float:
    """Mode frequency (k_T^2 + k_n^2)^(1/2); strictly positive."""
    kx, ky = mode.k_T
    return math.sqrt(kx * kx + ky * ky + k_n(config, mode.n) ** 2)


def mode_profile(bc: BoundaryCondition, config: PlateConfig, n: int, z: float) -> float:
    """Longitudinal factor of the orthonormal mode: sqrt(2/L) sin or cos(k_n z)."""
    if not 0.0 <= z <= config.L:
        raise DomainError(f"z = {z} outside the slab [0, {config.L}]")
    arg = k_n(config, n) * z
    amp = math.sqrt(2.0 / config.L)
    if bc is BoundaryCondition.DIRICHLET:
        return amp * math.sin(arg)
    return amp * math.cos(arg)


def orthonormality_check(
    bc: BoundaryCondition,
    config: PlateConfig,
    n_max: int,
    quadrature_points: int = 2048,
) -> np.ndarray:
    """Gram matrix of the first n_max profiles by composite Simpson quadrature.

    The panel count is rounded up to a power of two; the integrands are
    trigonometric polynomials whose odd derivatives vanish at both
    endpoints, so the equal-spaced rule is exact up to round-off and the
    result is the identity matrix to better than 1e-10 for n_max <= 20
    with 2048 or more panels.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if quadrature_points < 64:
        raise ValueError("need at least 64 quadrature points")
    panels = 1 << (quadrature_points - 1).bit_length()
    z = np.linspace(0.0, config.L, panels + 1)
    h = config.L / panels

    weights = np.full(panels + 1, 2.0)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    weights *= h / 3.0

    ns = np.arange(1, n_max + 1)
    arg = np.outer(ns, z) * (math.pi / config.L)
    amp = math.sqrt(2.0 / config.L)
    profiles = amp * (np.sin(arg) if bc is BoundaryCondition.DIRICHLET else np.cos(arg))
    return (profiles * weights) @ profiles.T
