"""Regularized lattice sums and their independent numerical oracles.

The divergent sums sum_n n^k and sum_n n^k cos(2 n theta) over the
longitudinal mode number n are assigned finite values by analytic
continuation: the pure power sums through the Riemann zeta function at
negative integers, the oscillatory sums through the closed forms

    sum_n n   cos(2 n theta) = -1 / (4 sin^2 theta)
    sum_n n^3 cos(2 n theta) = (1/8) (3/sin^4 theta - 2/sin^2 theta)

Two independent numerical routes to the same finite parts are provided
for cross-validation:

* ``cutoff_sum_oracle`` evaluates S(eps) = sum_n n^k e^(-eps n) exactly
  (closed form through Eulerian polynomials), then strips the divergent
  powers eps^-(k+1) ... eps^-1 by a least-squares fit and returns the
  constant term.  The small-eps expansion of S has a single divergent
  power k!/eps^(k+1) followed by the constant zeta(-k), so the fitted
  intermediate coefficients are expected to come out near zero.

* ``abel_sum_oracle`` evaluates sum_n n^k r^n cos(2 n theta) in closed
  form below the circle of convergence and extrapolates r -> 1- by
  polynomial (Richardson) extrapolation in h = 1 - r.  The Abel limits
  of the oscillatory sums exist for theta away from 0 and pi and have
  expansions in integer powers of h, which is what makes polynomial
  extrapolation the right accelerator.

All closed-form evaluations are exact rational or elementary-function
expressions; only the oracles involve fits or extrapolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    DomainError,
    ExtrapolationDivergenceError,
    IllConditionedFitError,
)

__all__ = [
    "FinitePartResult",
    "EpsilonSchedule",
    "bernoulli",
    "zeta_neg_int",
    "f_theta",
    "trig_sum_n_cos",
    "trig_sum_n3_cos",
    "geometric_power_sum",
    "exp_cutoff_power_sum",
    "abel_sum_oracle",
    "cutoff_sum_oracle",
    "fit_finite_part",
    "extrapolate_to_zero",
    "DEFAULT_ABEL_RADII",
]


# ---------------------------------------------------------------------------
# Exact rational machinery
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n as an exact rational (convention B_1 = -1/2).

    Uses the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0, which
    is exact in rational arithmetic for any n.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


def zeta_neg_int(k: int) -> Fraction:
    """Riemann zeta at a non-positive integer argument, zeta(-k), exactly.

    zeta(-k) = (-1)^k B_{k+1} / (k+1).  With B_1 = -1/2 this yields
    zeta(0) = -1/2, zeta(-1) = -1/12, zeta(-3) = 1/120, and the trivial
    zeros zeta(-2m) = 0 through the vanishing odd Bernoulli numbers.
    """
    if k < 0:
        raise ValueError(f"zeta_neg_int expects k >= 0, got {k}")
    value = bernoulli(k + 1) / (k + 1)
    return -value if k % 2 else value


# ---------------------------------------------------------------------------
# Closed forms of the regularized oscillatory sums
# ---------------------------------------------------------------------------

def _check_theta(theta: float) -> float:
    if not 0.0 < theta < math.pi:
        raise DomainError(
            f"theta must lie strictly between 0 and pi, got {theta!r}; "
            "the sums diverge on the plate surfaces"
        )
    return theta


def f_theta(theta: float) -> float:
    """Profile function 3/sin^4(theta) - 2/sin^2(theta), minimum 1 at pi/2."""
    _check_theta(theta)
    s2 = math.sin(theta) ** 2
    return (3.0 / s2 - 2.0) / s2


def trig_sum_n_cos(theta: float) -> float:
    """Regularized value of sum_{n>=1} n cos(2 n theta) = -1/(4 sin^2 theta)."""
    _check_theta(theta)
    s = math.sin(theta)
    return -0.25 / (s * s)


def trig_sum_n3_cos(theta: float) -> float:
    """Regularized value of sum_{n>=1} n^3 cos(2 n theta) = f(theta)/8."""
    return 0.125 * f_theta(theta)


# ---------------------------------------------------------------------------
# Convergent power-geometric sums (shared by both oracles)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _eulerian_row(k: int) -> tuple[int, ...]:
    """Eulerian numbers A(k, m) for m = 0 .. k-1 (k >= 1)."""
    if k == 1:
        return (1,)
    prev = _eulerian_row(k - 1)
    row = []
    for m in range(k):
        left = (k - m) * prev[m - 1] if m >= 1 else 0
        right = (m + 1) * prev[m] if m < k - 1 else 0
        row.append(left + right)
    return tuple(row)


def geometric_power_sum(k: int, z: complex) -> complex:
    """sum_{n>=1} n^k z^n for |z| < 1, via the Eulerian closed form.

    For k >= 1 the sum equals z P_k(z) / (1-z)^(k+1) with P_k the
    Eulerian polynomial; for k = 0 it is the plain geometric series.
    """
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if abs(z) >= 1.0:
        raise DomainError(f"geometric_power_sum needs |z| < 1, got |z| = {abs(z)}")
    if k == 0:
        return z / (1.0 - z)
    poly = 0.0 + 0.0j if isinstance(z, complex) else 0.0
    for a in reversed(_eulerian_row(k)):
        poly = poly * z + a
    return z * poly / (1.0 - z) ** (k + 1)


def exp_cutoff_power_sum(k: int, eps: float) -> float:
    """sum_{n>=1} n^k e^(-eps n), exactly, for eps > 0.

    Same closed form as :func:`geometric_power_sum` at z = e^(-eps), but
    with 1 - z computed through expm1 so the result keeps full relative
    accuracy for small eps, where 1 - z underflows catastrophically if
    formed by direct subtraction.
    """
    if eps <= 0.0:
        raise DomainError(f"cutoff eps must be positive, got {eps}")
    z = math.exp(-eps)
    one_minus_z = -math.expm1(-eps)
    if k == 0:
        return z / one_minus_z
    poly = 0.0
    for a in reversed(_eulerian_row(k)):
        poly = poly * z + a
    return z * poly / one_minus_z ** (k + 1)


# ---------------------------------------------------------------------------
# Richardson / Neville extrapolation to h = 0
# ---------------------------------------------------------------------------

def extrapolate_to_zero(hs: list[float], ys: list[float]) -> tuple[float, list[float]]:
    """Neville polynomial extrapolation of (h_i, y_i) to h = 0.

    Nodes must be ordered with h decreasing.  Returns the highest-order
    extrapolant together with the diagonal of the tableau (the sequence
    of estimates of increasing order), which callers use to judge
    convergence.
    """
    if len(hs) != len(ys):
        raise ValueError("node and value lists must have equal length")
    n = len(hs)
    p = list(ys)
    diagonal = [p[0]]
    for m in range(1, n):
        for i in range(n - m):
            denom = hs[i + m] - hs[i]
            p[i] = (hs[i + m] * p[i] - hs[i] * p[i + 1]) / denom
        diagonal.append(p[0])
    return p[0], diagonal


DEFAULT_ABEL_RADII: tuple[float, ...] = tuple(1.0 - 0.5 ** j for j in range(3, 15))


def abel_sum_oracle(
    k: int,
    theta: float | None = None,
    radii: tuple[float, ...] | None = None,
    divergence_rtol: float = 1e-9,
) -> float:
    """Abel-summation oracle for sum_{n>=1} n^k r^n cos(2 n theta), r -> 1-.

    Parameters
    ----------
    k : int
        Power of n; one of 0, 1, 3 (the powers the closed forms cover).
    theta : float, optional
        Half the phase step of the cosine.  When omitted the cosine
        factor is dropped, i.e. the plain sum n^k r^n is extrapolated
        (which has no Abel limit for any k and reports divergence).
    radii : tuple of float, optional
        Strictly increasing radii below 1, at least four of them.
        Defaults to r = 1 - 2^-j, j = 3 .. 14, chosen because the Abel
        limits have expansions in integer powers of 1 - r and twelve
        halving steps push the extrapolation error below 1e-11 on the
        whole working range of theta.
    divergence_rtol : float
        Sensitivity of the divergence detector on the extrapolation
        diagonal; configuration rather than a hard-coded constant.

    Returns
    -------
    float
        The extrapolated r -> 1- limit.

    Raises
    ------
    ExtrapolationDivergenceError
        If successive extrapolants grow instead of settling, which is
        how a sum with no Abel limit (for example theta = 0 with k >= 1)
        manifests here.
    """
    if k not in (0, 1, 3):
        raise ValueError(f"supported powers are 0, 1 and 3, got {k}")
    if radii is None:
        radii = DEFAULT_ABEL_RADII
    radii = tuple(float(r) for r in radii)
    if len(radii) < 4:
        raise ValueError("need at least four radii for a stable extrapolation")
    if any(not 0.0 < r < 1.0 for r in radii):
        raise ValueError("all radii must lie strictly inside (0, 1)")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must increase strictly toward 1")

    hs = [1.0 - r for r in radii]  # decreasing toward 0
    if theta is None:
        ys = [float(geometric_power_sum(k, r).real) for r in radii]
    else:
        phase = complex(math.cos(2.0 * theta), math.sin(2.0 * theta))
        ys = [(geometric_power_sum(k, r * phase)).real for r in radii]

    value, diagonal = extrapolate_to_zero(hs, ys)

    deltas = [abs(b - a) for a, b in zip(diagonal, diagonal[1:])]
    scale = 1.0 + abs(diagonal[-1])
    if deltas and deltas[-1] > divergence_rtol * scale and deltas[-1] >= deltas[0]:
        raise ExtrapolationDivergenceError(
            f"extrapolants for k={k}, theta={theta!r} keep growing "
            f"(last step {deltas[-1]:.3e}); the sum has no Abel limit"
        )
    return value


# ---------------------------------------------------------------------------
# Finite-part extraction from an exponentially regulated sum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinitePartResult:
    """Finite part of a cutoff-regulated sum plus the fitted divergences.

    ``divergent_coeffs`` are ordered from the most divergent power down,
    eps^-(p) ... eps^-1 for p = number of negative-power basis elements.
    """

    finite_part: float
    divergent_coeffs: tuple[float, ...]
    fit_residual: float

    def __post_init__(self) -> None:
        if self.fit_residual < 0.0:
            raise ValueError("fit residual cannot be negative")


@dataclass(frozen=True)
class EpsilonSchedule:
    """Cutoff schedule for finite-part fits.

    ``values`` must be positive and strictly decreasing; ``fit_basis_degree``
    is the highest positive power of eps kept in the fit basis.
    """

    values: tuple[float, ...]
    fit_basis_degree: int = 2

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("epsilon schedule cannot be empty")
        if any(v <= 0.0 for v in vals):
            raise ValueError("all cutoff values must be positive")
        if any(b >= a for a, b in zip(vals, vals[1:])):
            raise ValueError("cutoff values must decrease strictly")
        if self.fit_basis_degree < 0:
            raise ValueError("fit basis degree must be non-negative")

    @classmethod
    def log_spaced(
        cls,
        smallest: float = 1e-3,
        largest: float = 1e-1,
        count: int = 12,
        fit_basis_degree: int = 2,
    ) -> "EpsilonSchedule":
        """Logarithmically spaced schedule, returned largest-to-smallest."""
        if not 0.0 < smallest < largest:
            raise ValueError("need 0 < smallest < largest")
        grid = np.geomspace(largest, smallest, count)
        return cls(values=tuple(float(v) for v in grid), fit_basis_degree=fit_basis_degree)


def _householder_lstsq(design: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Least squares by Householder QR, dtype-preserving.

    LAPACK only solves in single or double precision, so extended-
    precision fits (the x86 80-bit long double the oracles accumulate
    in) need their own triangularization.  Straight textbook QR; raises
    when a diagonal of R collapses, which is the rank-deficiency signal.
    """
    a = design.copy()
    b = rhs.copy()
    m, n = a.shape
    for j in range(n):
        x = a[j:, j]
        norm = np.sqrt(np.sum(x * x))
        if norm == 0.0:
            raise IllConditionedFitError("zero column encountered in QR sweep")
        alpha = -norm if x[0] >= 0 else norm
        v = x.copy()
        v[0] -= alpha
        vnorm2 = np.sum(v * v)
        if vnorm2 > 0.0:
            a[j:, j:] -= np.outer(v, (2.0 / vnorm2) * (v @ a[j:, j:]))
            b[j:] -= v * ((2.0 / vnorm2) * (v @ b[j:]))
        a[j, j] = alpha
    diag = np.abs(np.diagonal(a)[:n])
    eps_machine = float(np.finfo(a.dtype).eps)
    if np.min(diag) <= m * eps_machine * np.max(diag):
        raise IllConditionedFitError(
            "finite-part design matrix is numerically rank deficient"
        )
    coeffs = np.zeros(n, dtype=a.dtype)
    for i in reversed(range(n)):
        coeffs[i] = (b[i] - a[i, i + 1:] @ coeffs[i + 1:]) / a[i, i]
    return coeffs


def fit_finite_part(
    eps_values: tuple[float, ...],
    data: tuple[float, ...],
    max_divergent_power: int,
    fit_basis_degree: int = 2,
) -> FinitePartResult:
    """Strip divergent powers from data(eps) and return the constant term.

    The model is data(eps) = sum_{p=1}^{P} c_{-p} eps^-p + c_0 + c_1 eps
    + ... + c_D eps^D with P = ``max_divergent_power`` and D =
    ``fit_basis_degree``.  Internally every row is multiplied by eps^P,
    turning the problem into an ordinary polynomial fit whose dynamic
    range floating point can actually represent; the basis and the
    minimizing coefficients are unchanged in exact arithmetic.  Columns
    are normalized and the solve runs in extended precision, which the
    constant term needs: its column is eps^P-suppressed against the
    leading divergence, so double-precision round-off in the
    triangularization would feed straight into the finite part.
    """
    eps = np.asarray(eps_values, dtype=np.longdouble)
    y = np.asarray(data, dtype=np.longdouble)
    if eps.shape != y.shape:
        raise ValueError("schedule and data length mismatch")
    n_basis = max_divergent_power + 1 + fit_basis_degree
    if eps.size < n_basis:
        raise ValueError(
            f"schedule has {eps.size} points but the basis needs {n_basis}"
        )

    # Scaled problem: eps^P * data = polynomial of degree P + D in eps.
    tau = eps / eps.max()
    degree = max_divergent_power + fit_basis_degree
    design = np.vander(tau, degree + 1, increasing=True)
    scaled_y = y * eps ** max_divergent_power

    col_norms = np.sqrt(np.sum(design * design, axis=0))
    if np.any(col_norms == 0.0):
        raise IllConditionedFitError("degenerate column in finite-part fit")
    coeffs_tau = _householder_lstsq(design / col_norms, scaled_y) / col_norms

    residuals = design @ coeffs_tau - scaled_y
    rms = float(np.sqrt(np.mean(residuals**2)))

    # Back to coefficients of eps^j, then split into the contract layout.
    powers = np.arange(degree + 1)
    coeffs_eps = coeffs_tau / eps.max() ** powers
    divergent = tuple(float(c) for c in coeffs_eps[:max_divergent_power])
    finite = float(coeffs_eps[max_divergent_power])
    return FinitePartResult(finite_part=finite, divergent_coeffs=divergent, fit_residual=rms)


def cutoff_sum_oracle(k: int, schedule: EpsilonSchedule | None = None) -> FinitePartResult:
    """Exponential-cutoff oracle for the zeta-regularized power sum.

    Evaluates S(eps) = sum_{n>=1} n^k e^(-eps n) exactly on the schedule
    and fits away the divergent basis {eps^-(k+1) ... eps^-1}; the
    constant term of the fit is the finite part, which must agree with
    zeta(-k).

    Accuracy degrades steeply with k: the constant hides under a
    k!/eps^(k+1) divergence, costing roughly three digits per extra
    power.  The default schedule resolves zeta(-1) and zeta(-3) to
    better than 1e-7; k = 5 reaches ~2e-5 with a higher, denser
    schedule such as log_spaced(0.03, 0.5, 20, fit_basis_degree=4);
    beyond that the finite part is qualitative only, although the
    leading divergent coefficient stays sharp.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"oracle supports positive odd powers, got {k}")
    if schedule is None:
        schedule = EpsilonSchedule.log_spaced()
    values = tuple(exp_cutoff_power_sum(k, e) for e in schedule.values)
    return fit_finite_part(schedule.values, values, k + 1, schedule.fit_basis_degree)
