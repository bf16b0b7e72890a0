"""Local vacuum expectation values of field bilinears between the plates.

All quantities are closed forms in the dimensionless angle
theta = pi z / L and split into a position-independent piece

    A = pi^2 / (1440 L^4)

and a profile piece

    B = pi^2 / (96 L^4) f(theta),      f(theta) = 3/sin^4 - 2/sin^2,

with every boundary-condition dependence carried by the single sign
s = sign_upper (+1 Dirichlet, -1 Neumann).  The individual fluctuations
diverge on the plates; the surfaces are therefore excluded from the
domain rather than mapped to infinities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .regsum import f_theta
from .spectrum import BoundaryCondition, PlateConfig

__all__ = ["InteriorPoint", "ABPair", "FluctuationSet", "ab_values",
           "phi_squared", "phi_squared_single_plate", "expectation_set"]


@dataclass(frozen=True)
class InteriorPoint:
    """A point strictly between the plates; theta = pi z / L is authoritative.

    Both coordinates are stored so that emitted tables are
    self-describing, but every formula is a function of theta alone.
    """

    z: float
    theta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < math.pi:
            raise DomainError(
                f"interior points need 0 < theta < pi, got theta = {self.theta!r}"
            )

    @classmethod
    def from_z(cls, config: PlateConfig, z: float) -> "InteriorPoint":
        if not 0.0 < z < config.L:
            raise DomainError(f"z = {z} is not strictly inside (0, {config.L})")
        return cls(z=z, theta=math.pi * z / config.L)

    @classmethod
    def from_theta(cls, config: PlateConfig, theta: float) -> "InteriorPoint":
        return cls(z=theta * config.L / math.pi, theta=theta)


@dataclass(frozen=True)
class ABPair:
    """Position-independent part A and profile part B, both 1/length^4."""

    A: float
    B: float


@dataclass(frozen=True)
class FluctuationSet:
    """The quadratic expectation values at one interior point.

    ``phi2`` scales as 1/length^2, all other fields as 1/length^4.
    ``phi_d2z_phi`` equals -``dzphi2`` only after integrating over the
    whole gap; pointwise the two are independent fields and no relation
    between them is assumed anywhere.
    """

    phi2: float
    phidot2: float
    dzphi2: float
    gradTphi2: float
    dlambda_phi2: float
    phi_d2z_phi: float

    def contraction_residual(self) -> float:
        """|phidot2 - dzphi2 - gradTphi2 - dlambda_phi2|, zero up to round-off."""
        return abs(self.phidot2 - self.dzphi2 - self.gradTphi2 - self.dlambda_phi2)


def ab_values(config: PlateConfig, point: InteriorPoint) -> ABPair:
    """A = pi^2/(1440 L^4) and B = pi^2/(96 L^4) f(theta)."""
    scale = math.pi ** 2 / config.L ** 4
    return ABPair(A=scale / 1440.0, B=scale / 96.0 * f_theta(point.theta))


def phi_squared(bc: BoundaryCondition, config: PlateConfig, point: InteriorPoint) -> float:
    """Field fluctuation (1/(48 L^2)) (1 -+ 3/sin^2 theta) between the plates.

    Diverges toward -inf (Dirichlet) or +inf (Neumann) as the point
    approaches either plate.
    """
    s2 = math.sin(point.theta) ** 2
    return (1.0 - bc.sign_upper * 3.0 / s2) / (48.0 * config.L ** 2)


def phi_squared_single_plate(bc: BoundaryCondition, z: float) -> float:
    """Fluctuation outside a single plate, -+ 1/(16 pi^2 z^2)."""
    if not z > 0.0:
        raise DomainError(f"distance from the plate must be positive, got {z}")
    return -bc.sign_upper / (16.0 * math.pi ** 2 * z * z)


def expectation_set(
    bc: BoundaryCondition, config: PlateConfig, point: InteriorPoint
) -> FluctuationSet:
    """All quadratic expectation values at one point.

    With s = sign_upper and t = s B:

        <phidot^2>        = -(A - t)
        <(d_z phi)^2>     = -3 (A + t)
        <(grad_T phi)^2>  =  2 (A - t)
        <(d_lam phi)^2>   =  6 t
        <phi d_z^2 phi>   =  3 (A - t)

    which satisfies the Lorentzian contraction identity
    phidot2 - dzphi2 - gradTphi2 = dlambda_phi2 identically.
    """
    ab = ab_values(config, point)
    t = bc.sign_upper * ab.B
    return FluctuationSet(
        phi2=phi_squared(bc, config, point),
        phidot2=-(ab.A - t),
        dzphi2=-3.0 * (ab.A + t),
        gradTphi2=2.0 * (ab.A - t),
        dlambda_phi2=6.0 * t,
        phi_d2z_phi=3.0 * (ab.A - t),
    )
