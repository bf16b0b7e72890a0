"""Brute-force mode-sum oracle for the fluctuation profiles.

Independently of every closed form elsewhere in the package, the raw
mode sums are rebuilt here with an exponential frequency cutoff
e^(-eps omega) and the finite part is extracted from a schedule of
cutoffs.  The cutoff is applied to omega, not to n alone, so the
transverse momentum integral converges absolutely and reduces in closed
radial form (substituting omega d omega = k dk):

    phi2:    integral d^2k/(2pi)^2 e^(-eps omega)/omega
                 = (1/2pi) int_{k_n}^inf e^(-eps w) dw
                 = e^(-eps k_n) / (2 pi eps)

    phidot2: integral d^2k/(2pi)^2 omega e^(-eps omega)
                 = (1/2pi) int_{k_n}^inf w^2 e^(-eps w) dw
                 = e^(-eps k_n) (k_n^2/eps + 2 k_n/eps^2 + 2/eps^3) / (2 pi)

(the second is d^2/d eps^2 of the first's kernel).  Both radial forms
are unit-tested against adaptive quadrature of the original integrand.

Summing n <= n_max and expanding in small eps, the weight sums behave
like 1/(e^(a eps) - 1) and its derivatives (a = pi/L), so the divergent
bases are known analytically per observable:

    phi2:    eps^-2, eps^-1   (constant, then all integer powers)
    phidot2: eps^-4, eps^-3, eps^-2, eps^-1

The least-squares machinery shared with the cutoff oracle strips those
powers plus a low-degree polynomial tail; the constant is the finite
part and must land on the closed-form profile values.  phidot2 carries
a stronger eps^-4 divergence and correspondingly worse fit
conditioning, hence its looser documented tolerance (1e-3 relative
against 1e-4 for phi2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad

from .errors import QuadratureError, TruncationError
from .regsum import EpsilonSchedule, FinitePartResult, fit_finite_part
from .spectrum import BoundaryCondition

__all__ = ["Observable", "ModeSumSpec", "mode_sum_finite_part",
           "transverse_integral_unit_test", "default_schedule", "required_n_max"]

# Truncation target for the bare cutoff weight e^(-eps k_n) of the last
# retained mode at the smallest scheduled cutoff.  The weight bound must
# undercut round-off by a wide margin because the phidot2 summand grows
# like k_n^2/eps on top of the weight; 1e-32 leaves the truncated tail
# far below everything the finite-part fit can resolve.
_TRUNCATION_WEIGHT = 1e-32

_DIVERGENT_POWERS = {"phi2": 2, "phidot2": 4}


class Observable(Enum):
    PHI2 = "phi2"
    PHIDOT2 = "phidot2"


def default_schedule(observable: Observable, L: float = 1.0) -> EpsilonSchedule:
    """Cutoff schedules tuned per observable, scaled to the separation.

    The cutoff eps carries length units (it multiplies a frequency), so
    the schedule scales with L.  The oscillatory weight sums are
    analytic in a disk of radius 2 theta in pi eps / L around zero
    cutoff, so the largest scheduled value must stay well inside it for
    the working range theta >= 0.3, which caps the schedule at 0.02 L;
    and the basis needs a quartic (phi2) or quintic (phidot2) positive
    tail because those sums contribute every integer power of eps with
    pole-driven coefficient growth.  phidot2 additionally starts its
    schedule higher, its eps^-4 divergence being the fit's worst
    conditioning case.
    """
    if not L > 0.0:
        raise ValueError(f"plate separation must be positive, got {L}")
    if observable is Observable.PHI2:
        return EpsilonSchedule.log_spaced(1e-3 * L, 2e-2 * L, 12, fit_basis_degree=4)
    return EpsilonSchedule.log_spaced(2e-3 * L, 2e-2 * L, 16, fit_basis_degree=5)


def required_n_max(L: float, eps_min: float) -> int:
    """Smallest truncation satisfying e^(-eps_min n pi / L) < 1e-16."""
    return math.ceil(-math.log(_TRUNCATION_WEIGHT) * L / (eps_min * math.pi))


@dataclass(frozen=True)
class ModeSumSpec:
    """What to sum: geometry, point, observable, cutoff schedule, truncation.

    ``n_max`` and ``epsilon_schedule`` may be omitted; the truncation
    then satisfies the weight bound automatically and the schedule falls
    back to :func:`default_schedule` for the observable.
    """

    bc: BoundaryCondition
    L: float
    theta: float
    observable: Observable
    epsilon_schedule: EpsilonSchedule | None = None
    n_max: int | None = None

    def __post_init__(self) -> None:
        if not self.L > 0.0:
            raise ValueError(f"plate separation must be positive, got {self.L}")
        if not 0.0 < self.theta < math.pi:
            raise ValueError(f"theta must lie in (0, pi), got {self.theta}")
        if self.epsilon_schedule is None:
            object.__setattr__(
                self, "epsilon_schedule", default_schedule(self.observable, self.L)
            )
        if self.n_max is None:
            object.__setattr__(
                self, "n_max", required_n_max(self.L, min(self.epsilon_schedule.values))
            )

    def validate_truncation(self) -> None:
        needed = required_n_max(self.L, min(self.epsilon_schedule.values))
        if self.n_max < needed:
            raise TruncationError(
                f"n_max = {self.n_max} leaves weight above round-off at the "
                f"smallest cutoff; need at least {needed}"
            )


def _transverse_closed(observable: Observable, kn: np.ndarray, eps: float) -> np.ndarray:
    damp = np.exp(-eps * kn)
    if observable is Observable.PHI2:
        return damp / (2.0 * math.pi * eps)
    return damp * (kn**2 / eps + 2.0 * kn / eps**2 + 2.0 / eps**3) / (2.0 * math.pi)


def mode_sum_finite_part(spec: ModeSumSpec) -> FinitePartResult:
    """Finite part of the cutoff-regulated mode sum at one point.

    For each scheduled eps the transverse integrals are summed over
    n <= n_max with the boundary-condition weight (1 - s cos(2 n theta)),
    then the divergent powers are fitted away; the constant term
    reproduces the closed-form phi2 or phidot2 profile.

    The sums run in extended precision.  At the small end of the
    schedule they reach ~ eps^-4 while the finite part is O(1), so
    double-precision round-off on the summands would already be
    comparable to the quantity being extracted; x86 long double buys
    the three extra digits the fit needs.
    """
    spec.validate_truncation()
    s = spec.bc.sign_upper
    n = np.arange(1, spec.n_max + 1, dtype=np.longdouble)
    kn = n * (np.longdouble(math.pi) / np.longdouble(spec.L))
    weights = 1.0 - s * np.cos(np.longdouble(2.0 * spec.theta) * n)
    eps_values = spec.epsilon_schedule.values
    sums = tuple(
        np.sum(weights * _transverse_closed(spec.observable, kn, np.longdouble(eps)))
        / (2.0 * np.longdouble(spec.L))
        for eps in eps_values
    )
    return fit_finite_part(
        eps_values,
        sums,
        _DIVERGENT_POWERS[spec.observable.value],
        spec.epsilon_schedule.fit_basis_degree,
    )


def transverse_integral_unit_test(
    k_n: float, epsilon: float, observable: Observable, rtol: float = 1e-11
) -> tuple[float, float]:
    """(closed form, adaptive quadrature) of one transverse integral.

    Validates the oracle's own radial reductions; the two values must
    agree to better than 1e-9 relative for any positive k_n and eps.
    """
    if not k_n > 0.0:
        raise ValueError(f"k_n must be positive, got {k_n}")
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")

    closed = float(_transverse_closed(observable, np.array([k_n]), epsilon)[0])

    def integrand(k: float) -> float:
        w = math.hypot(k, k_n)
        damp = math.exp(-epsilon * w)
        radial = damp / w if observable is Observable.PHI2 else damp * w
        return k * radial / (2.0 * math.pi)

    value, abserr = quad(integrand, 0.0, math.inf, epsabs=0.0, epsrel=rtol, limit=200)
    if abserr > 1e-6 * abs(value):
        raise QuadratureError(
            f"transverse quadrature did not converge: {value} +- {abserr}"
        )
    return closed, value
