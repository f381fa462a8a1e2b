"""Herglotz/Stieltjes verification and sectorial classification.

Grid-based positivity tests for Herglotz and Stieltjes functions, the
beta-kernel positive-semidefiniteness test, classification by the two
boundary limits along the negative real axis (angles beta1 at -infinity and
beta2 at -0), closed-form angle relations for the rotated-boundary family,
and the accretivity/sectoriality classification of the boundary operator
and its coupled systems.

Two published formulas for the sector angle beta in terms of (beta1, beta2)
disagree away from the edge cases; both are exposed, under distinct names,
and the example suite asserts the discrepancy rather than hiding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, WeylsysError
from .mfunc import (
    MFunctionEvaluator,
    SolverSettings,
    bessel_m_closed_form,
    bessel_neg_m_alpha_closed_form,
    bessel_w_closed_form,
    limit_at_minus_infinity,
    limit_at_minus_zero,
    m_alpha,
    m_alpha_direct,
    m_infinity,
)
from .lsystem import as_extended_real, impedance, make_lsystem, transfer
from .potentials import Potential
from .reporting import Check, CheckReport

__all__ = [
    "DEFAULT_COMPLEX_GRID",
    "DEFAULT_NEGATIVE_GRID",
    "DEFAULT_KERNEL_SEED",
    "SampledFunction",
    "Witness",
    "Verdict",
    "herglotz_test",
    "stieltjes_test",
    "kernel_matrix",
    "KernelReport",
    "kernel_psd_test",
    "ClassAngles",
    "classify_s_beta12",
    "class_angles_from_alpha",
    "sector_angle_from_product",
    "sector_angle_from_gap",
    "AccretivityReport",
    "accretivity_and_sectoriality",
    "verify_example_suite",
]

_HALF_PI = math.pi / 2.0

#: 11 x 7 tensor grid in the upper half-plane: Re in [-5, 5], Im in [0.1, 10].
DEFAULT_COMPLEX_GRID = tuple(
    complex(re, im)
    for re in np.linspace(-5.0, 5.0, 11)
    for im in np.logspace(-1.0, 1.0, 7)
)

#: 25 log-spaced points on the negative real axis, ascending from -1e6 to -1e-6.
DEFAULT_NEGATIVE_GRID = tuple(-x for x in np.logspace(6.0, -6.0, 25))

DEFAULT_KERNEL_SEED = 1729


@dataclass(frozen=True)
class SampledFunction:
    """A scalar function given by an evaluator, with a note on its domain."""

    evaluator: Callable[[complex], complex]
    domain_note: str = "upper half-plane and negative real axis"
    label: str = ""

    def __call__(self, z: complex) -> complex:
        return self.evaluator(z)


@dataclass(frozen=True)
class Witness:
    """A concrete point demonstrating a failed (or extremal) check."""

    point: complex
    value: complex
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "point": [self.point.real, self.point.imag],
            "value": [complex(self.value).real, complex(self.value).imag],
            "note": self.note,
        }


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: Witness | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _eval_at(f, z: complex) -> complex:
    try:
        return complex(f(z))
    except WeylsysError as exc:
        if exc.args and isinstance(exc.args[0], str) and "at z =" not in exc.args[0]:
            exc.args = (f"{exc.args[0]} (while sampling at z = {complex(z)})",) + exc.args[1:]
        raise


def herglotz_test(f, grid: Sequence[complex] | None = None, tol: float = 1e-9) -> Verdict:
    """Check Im f(z) >= -tol over an upper-half-plane grid.

    Returns the minimum of Im f with the point where it is attained.
    """
    pts = DEFAULT_COMPLEX_GRID if grid is None else tuple(map(complex, grid))
    if not pts:
        raise DomainError("herglotz_test needs a nonempty grid")
    worst_im = math.inf
    worst: Witness | None = None
    for z in pts:
        if z.imag <= 0.0:
            raise DomainError(f"herglotz_test grid must lie in the upper half-plane, got {z}")
        val = _eval_at(f, z)
        if val.imag < worst_im:
            worst_im = val.imag
            worst = Witness(z, val, "minimum of Im f over the grid")
    return Verdict(
        passed=worst_im >= -tol,
        witness=worst,
        detail=f"min Im f = {worst_im:.6g} over {len(pts)} grid points",
    )


def stieltjes_test(
    f,
    complex_grid: Sequence[complex] | None = None,
    negative_grid: Sequence[float] | None = None,
    tol: float = 1e-9,
) -> Verdict:
    """Grid test of the Stieltjes property.

    Checks Im(z f(z))/Im z >= -tol on the complex grid, and that f is real,
    nonnegative and nondecreasing along the negative real axis.  On failure
    the verdict carries the first offending point and value.
    """
    cpts = DEFAULT_COMPLEX_GRID if complex_grid is None else tuple(map(complex, complex_grid))
    if negative_grid is None:
        xs = DEFAULT_NEGATIVE_GRID
    else:
        xs = tuple(sorted(float(x) for x in negative_grid))
    if any(x >= 0.0 for x in xs):
        raise DomainError("negative_grid must lie strictly on the negative real axis")

    worst_ratio = math.inf
    ratio_witness: Witness | None = None
    for z in cpts:
        if z.imag == 0.0:
            raise DomainError(f"complex grid point {z} lies on the real axis")
        val = _eval_at(f, z)
        ratio = (z * val).imag / z.imag
        if ratio < worst_ratio:
            worst_ratio = ratio
            ratio_witness = Witness(z, val, f"Im(z f)/Im z = {ratio:.6g}")
    if worst_ratio < -tol:
        return Verdict(False, ratio_witness, "Im(z f(z))/Im z negative on the complex grid")

    vals = []
    for x in xs:
        val = _eval_at(f, complex(x))
        if abs(val.imag) > 1e-8 * max(1.0, abs(val)):
            return Verdict(
                False,
                Witness(complex(x), val, "non-real value on the negative real axis"),
                "f is not real on (-inf, 0)",
            )
        if not math.isfinite(val.real):
            return Verdict(
                False,
                Witness(complex(x), val, "non-finite value on the negative real axis"),
                "f is not finite on (-inf, 0)",
            )
        vals.append(val.real)
    for x, v in zip(xs, vals):
        if v < -tol * max(1.0, abs(v)):
            return Verdict(
                False,
                Witness(complex(x), complex(v), "negative value on the negative real axis"),
                "f takes negative values on (-inf, 0)",
            )
    for (x0, v0), (x1, v1) in zip(zip(xs, vals), zip(xs[1:], vals[1:])):
        if v1 < v0 - tol * max(1.0, abs(v0)):
            return Verdict(
                False,
                Witness(complex(x1), complex(v1), f"f({x1:.6g}) = {v1:.6g} < f({x0:.6g}) = {v0:.6g}"),
                "f is not nondecreasing on (-inf, 0)",
            )
    return Verdict(
        True,
        ratio_witness,
        f"min Im(z f)/Im z = {worst_ratio:.6g}; negative-axis checks passed at {len(xs)} points",
    )


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not (0.0 < beta <= _HALF_PI):
        raise DomainError(f"sector angle beta must lie in (0, pi/2], got {beta}")
    return beta


def kernel_matrix(f, beta: float, points: Sequence[complex]) -> np.ndarray:
    """Hermitian sector kernel K[k,l] for the angle beta at the given points.

    K[k,l] = (z_k f_k - conj(z_l f_l)) / (z_k - conj z_l) - cot(beta) conj(f_l) f_k,
    with all points required in the open upper half-plane (so the denominator
    never vanishes).
    """
    beta = _check_beta(beta)
    pts = [complex(z) for z in points]
    if not pts:
        raise DomainError("kernel_matrix needs at least one point")
    for z in pts:
        if z.imag <= 0.0:
            raise DomainError(f"kernel points must lie in the open upper half-plane, got {z}")
    fs = np.array([_eval_at(f, z) for z in pts], dtype=complex)
    zs = np.array(pts, dtype=complex)
    cot = 0.0 if beta == _HALF_PI else 1.0 / math.tan(beta)
    zf = zs * fs
    num = zf[:, None] - np.conj(zf)[None, :]
    den = zs[:, None] - np.conj(zs)[None, :]
    kern = num / den - cot * np.conj(fs)[None, :] * fs[:, None]
    return (kern + kern.conj().T) / 2.0


@dataclass(frozen=True)
class KernelReport:
    beta: float
    psd: bool
    min_eigenvalue: float
    scale: float
    worst_points: tuple[complex, ...]
    trials: int
    tol: float

    def __bool__(self) -> bool:
        return self.psd


def kernel_psd_test(
    f,
    beta: float,
    points: Sequence[complex] | None = None,
    trials: int = 100,
    n_max: int = 6,
    seed: int = DEFAULT_KERNEL_SEED,
    tol: float = 1e-8,
) -> KernelReport:
    """Positive-semidefiniteness of the beta-kernel over random point sets.

    With explicit points, a single matrix is tested.  Otherwise `trials`
    point sets of size 1..n_max are drawn from a seeded generator (real
    parts uniform in [-5, 5], imaginary parts log-uniform in [0.1, 10]),
    so results are reproducible.  PSD means the minimum eigenvalue is
    >= -tol * max(1, max |entry|) for every set; the report records the
    worst set.
    """
    beta = _check_beta(beta)
    if points is not None:
        batches = [tuple(map(complex, points))]
    else:
        if trials < 1 or n_max < 1:
            raise DomainError("kernel_psd_test needs trials >= 1 and n_max >= 1")
        rng = np.random.default_rng(seed)
        batches = []
        for _ in range(int(trials)):
            n = int(rng.integers(1, n_max + 1))
            res = rng.uniform(-5.0, 5.0, n)
            ims = 10.0 ** rng.uniform(-1.0, 1.0, n)
            batches.append(tuple(complex(a, b) for a, b in zip(res, ims)))

    psd = True
    worst_margin = math.inf
    worst_eig = math.inf
    worst_scale = 1.0
    worst_pts: tuple[complex, ...] = batches[0]
    for pts in batches:
        kern = kernel_matrix(f, beta, pts)
        scale = max(1.0, float(np.abs(kern).max()))
        min_eig = float(np.linalg.eigvalsh(kern).min())
        margin = min_eig / scale
        if margin < worst_margin:
            worst_margin = margin
            worst_eig = min_eig
            worst_scale = scale
            worst_pts = pts
        if min_eig < -tol * scale:
            psd = False
    return KernelReport(
        beta=beta,
        psd=psd,
        min_eigenvalue=worst_eig,
        scale=worst_scale,
        worst_points=worst_pts,
        trials=len(batches),
        tol=tol,
    )


class ClassAngles(NamedTuple):
    beta1: float
    beta2: float


def _stieltjes_angle(value: float, where: str) -> float:
    if math.isnan(value):
        raise DomainError(f"limit at {where} is NaN")
    if math.isinf(value):
        if value > 0:
            return _HALF_PI
        raise DomainError(f"limit at {where} diverges to -infinity; not a Stieltjes function")
    if value < -1e-9 * max(1.0, abs(value)):
        raise DomainError(f"limit at {where} is negative ({value}); not a Stieltjes function")
    return math.atan(max(value, 0.0))


def classify_s_beta12(f, settings: SolverSettings | None = None) -> ClassAngles:
    """Angles (beta1, beta2) from the limits of f at -infinity and at -0.

    beta1 = arctan lim_{x->-inf} f(x), beta2 = arctan lim_{x->-0} f(x), with
    a divergent limit mapped to pi/2.  Both angles land in [0, pi/2] and
    satisfy beta1 <= beta2 for a Stieltjes f.
    """
    lim_inf = limit_at_minus_infinity(f, settings)
    lim_zero = limit_at_minus_zero(f, settings)
    beta1 = _stieltjes_angle(lim_inf, "-infinity")
    beta2 = _stieltjes_angle(lim_zero, "-0")
    if beta1 > beta2 + 1e-9:
        raise DomainError(
            f"limits are not ordered (beta1 = {beta1} > beta2 = {beta2}); not a Stieltjes function"
        )
    return ClassAngles(beta1, min(max(beta1, beta2), _HALF_PI))


def class_angles_from_alpha(alpha: float, m0: float = 1.0) -> ClassAngles:
    """Closed-form class angles of the rotated-boundary function -m_alpha.

    For 0 < alpha < pi/2 with tan(alpha) * m0 > 1 (the sectorial regime),
    tan beta1 = cot(alpha) and tan beta2 = (tan(alpha) + m0)/(tan(alpha) m0 - 1).
    """
    alpha = float(alpha)
    m0 = float(m0)
    if not (math.isfinite(m0) and m0 > 0.0):
        raise DomainError(f"m0 must be finite and positive, got {m0}")
    if not (0.0 < alpha < _HALF_PI):
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha}")
    t = math.tan(alpha)
    if t * m0 <= 1.0:
        raise DomainError(
            f"tan(alpha) * m0 = {t * m0} must exceed 1 for the sectorial regime"
        )
    beta1 = math.atan(1.0 / t)
    beta2 = math.atan((t + m0) / (t * m0 - 1.0))
    return ClassAngles(beta1, beta2)


def _check_beta12(beta1: float, beta2: float) -> tuple[float, float]:
    beta1 = float(beta1)
    beta2 = float(beta2)
    if not (0.0 <= beta1 <= beta2 <= _HALF_PI + 1e-15):
        raise DomainError(f"need 0 <= beta1 <= beta2 <= pi/2, got ({beta1}, {beta2})")
    return beta1, min(beta2, _HALF_PI)


def sector_angle_from_product(beta1: float, beta2: float) -> float:
    """Sector angle via tan(beta) = tan(beta1) + 2 sqrt(tan(beta1) tan(beta2)).

    Known to disagree with sector_angle_from_gap away from the edge cases;
    in particular it returns 0 whenever beta1 = 0.
    """
    beta1, beta2 = _check_beta12(beta1, beta2)
    if beta1 == 0.0:
        if beta2 >= _HALF_PI:
            raise DomainError("indeterminate product formula at beta1 = 0, beta2 = pi/2")
        return 0.0
    if beta2 >= _HALF_PI:
        return _HALF_PI
    t1 = math.tan(beta1)
    t2 = math.tan(beta2)
    return math.atan(t1 + 2.0 * math.sqrt(t1 * t2))


def sector_angle_from_gap(beta1: float, beta2: float) -> float:
    """Sector angle via tan(beta) = tan(beta2) + 2 sqrt(tan(beta1)(tan(beta2) - tan(beta1))).

    Requires beta2 < pi/2 (finite tan beta2).  Reduces to beta2 at both edge
    cases beta1 = 0 and beta1 = beta2.
    """
    beta1, beta2 = _check_beta12(beta1, beta2)
    if beta2 >= _HALF_PI:
        raise DomainError("sector_angle_from_gap needs beta2 < pi/2 (finite tan beta2)")
    t1 = math.tan(beta1)
    t2 = math.tan(beta2)
    return math.atan(t2 + 2.0 * math.sqrt(max(t1 * (t2 - t1), 0.0)))


@dataclass(frozen=True)
class AccretivityReport:
    """Accretivity/sectoriality of the boundary operator and its coupled system.

    `operator_*` fields classify the boundary operator alone (they depend
    only on h and m0 = m(-0)); `system_*` fields classify the coupled system
    for the given mu and are None when m0 = +inf makes them undecidable.
    tan_theta is the exact sector tangent Im h / (Re h + m0), infinite for
    accretive-but-not-sectorial operators.
    """

    h: complex
    mu: float
    m0: float
    operator_accretive: bool
    operator_sectorial: bool
    tan_theta: float
    theta: float
    mu_threshold: float | None
    system_accretive: bool | None
    system_extremal: bool | None
    system_sectorial: bool | None
    preserves_exact_angle: bool | None
    notes: tuple[str, ...] = ()


def accretivity_and_sectoriality(h: complex, mu, m0: float) -> AccretivityReport:
    """Classify the boundary operator for h and the coupled system for (mu, h).

    The operator is accretive iff Re h >= -m0 and sectorial iff Re h > -m0,
    with exact angle tan(theta) = Im h / (Re h + m0).  For finite mu the
    system is accretive iff mu >= Im(h)^2/(m0 + Re h) + Re h, extremal
    exactly at the threshold, and sectorial above it; mu = inf preserves the
    operator's classification and exact angle.
    """
    h = complex(h)
    if h.imag <= 0.0:
        raise DomainError(f"boundary parameter h must have Im h > 0, got {h}")
    mu = as_extended_real(mu)
    m0 = float(m0)
    if math.isnan(m0) or m0 == -math.inf:
        raise DomainError(f"m0 must be a real number or +inf, got {m0}")

    notes: list[str] = []
    if math.isinf(m0):
        notes.append("m0 = +inf: only mu-independent operator statements are decidable")
        # with m0 = +inf the accretivity threshold degenerates
        return AccretivityReport(
            h=h,
            mu=mu,
            m0=m0,
            operator_accretive=True,
            operator_sectorial=True,
            tan_theta=0.0,
            theta=0.0,
            mu_threshold=None,
            system_accretive=None,
            system_extremal=None,
            system_sectorial=None,
            preserves_exact_angle=None,
            notes=tuple(notes),
        )

    op_accretive = h.real >= -m0
    op_sectorial = h.real > -m0
    if op_sectorial:
        tan_theta = h.imag / (h.real + m0)
        theta = math.atan(tan_theta)
        mu_threshold = h.real + h.imag**2 / (m0 + h.real)
    else:
        tan_theta = math.inf
        theta = _HALF_PI
        mu_threshold = math.inf if op_accretive else None
        if op_accretive:
            notes.append("operator is accretive but extremal; no finite mu gives an accretive system")
        else:
            notes.append("operator is not accretive; no coupled system is accretive")

    if math.isinf(mu):
        sys_accretive = op_accretive
        sys_extremal = op_accretive and not op_sectorial
        sys_sectorial = op_sectorial
        preserves = op_sectorial
    elif mu_threshold is None or math.isinf(mu_threshold):
        sys_accretive = False
        sys_extremal = False
        sys_sectorial = False
        preserves = False
    else:
        slack = 1e-12 * max(1.0, abs(mu_threshold))
        sys_accretive = mu >= mu_threshold - slack
        sys_extremal = sys_accretive and abs(mu - mu_threshold) <= slack
        sys_sectorial = sys_accretive and not sys_extremal
        preserves = False
    return AccretivityReport(
        h=h,
        mu=mu,
        m0=m0,
        operator_accretive=op_accretive,
        operator_sectorial=op_sectorial,
        tan_theta=tan_theta,
        theta=theta,
        mu_threshold=mu_threshold,
        system_accretive=sys_accretive,
        system_extremal=sys_extremal,
        system_sectorial=sys_sectorial,
        preserves_exact_angle=preserves,
        notes=tuple(notes),
    )


# frozen reference values for the built-in example suite
_KERNEL_SINGLE_POINT = 3.0 / math.sqrt(2.0) - 2.0  # K_{pi/4}[1/m] at z = i
_PRODUCT_TAN_REFERENCE = 3.5131299192244385  # product formula at (pi/6, 5 pi/12)
_GAP_TAN_REFERENCE = 6.431211569767402  # gap formula at (pi/6, 5 pi/12)


def verify_example_suite(settings: SolverSettings | None = None) -> CheckReport:
    """Run the built-in exactly-solvable example end to end.

    Cross-checks the numeric m-function paths against the closed form,
    boundary limits, realization identities, kernel positivity, the
    trichotomy of derived Stieltjes functions, and the two sector-angle
    formulas.  Returns a CheckReport; every check carries its tolerance.
    """
    pot = Potential.bessel()
    closed = MFunctionEvaluator(pot, mode="closed_form")
    numeric = MFunctionEvaluator(pot, mode="numeric", settings=settings)
    checks: list[Check] = []

    zs = (1j, -1.0 + 1j, 2.0 + 0.5j, 1.0 - 1j)
    disk_err = max(
        abs(m_infinity(numeric, z) - bessel_m_closed_form(z)) / abs(bessel_m_closed_form(z))
        for z in zs
    )
    checks.append(Check("m-disk-vs-closed-max-rel-err", disk_err <= 1e-6, disk_err, 0.0, 1e-6))

    xs = (-0.5, -1.0, -25.0)
    ric_err = max(
        abs(m_infinity(numeric, x) - bessel_m_closed_form(x)) / abs(bessel_m_closed_form(x))
        for x in xs
    )
    checks.append(Check("m-riccati-vs-closed-max-rel-err", ric_err <= 1e-6, ric_err, 0.0, 1e-6))

    # cache the m values the limit extractors will request (both limits and
    # the classification below sample at +-10^k for k = 1..8)
    cache = {}

    def m_cached(x):
        x = complex(x).real
        if x not in cache:
            cache[x] = m_infinity(numeric, x)
        return cache[x]

    m0 = limit_at_minus_zero(m_cached, settings)
    checks.append(Check("m-limit-at-minus-zero", abs(m0 - 1.0) <= 1e-4, m0, 1.0, 1e-4))
    m_inf = limit_at_minus_infinity(m_cached, settings)
    checks.append(
        Check(
            "m-limit-at-minus-infinity-divergent",
            math.isinf(m_inf) and m_inf > 0,
            m_inf,
            "inf",
            None,
        )
    )

    alphas = (0.6, 1.0, _HALF_PI, 2.2, math.pi)
    lft_err = max(
        abs(bessel_neg_m_alpha_closed_form(a, z) + m_alpha(closed, a, z))
        for a in alphas
        for z in (1j, -2.0 + 0.5j)
    )
    checks.append(Check("rotated-m-transform-vs-closed", lft_err <= 1e-10, lft_err, 0.0, 1e-10))

    a0 = math.pi / 3.0
    direct_err = abs(m_alpha_direct(pot, a0, 1j, settings) - m_alpha(closed, a0, 1j))
    checks.append(Check("rotated-m-direct-vs-transform", direct_err <= 1e-6, direct_err, 0.0, 1e-6))

    grid100 = tuple(DEFAULT_COMPLEX_GRID) + tuple(complex(x) for x in DEFAULT_NEGATIVE_GRID)
    sys_zero = make_lsystem(pot, mu=0.0, h=1j)
    sys_inf = make_lsystem(pot, mu=math.inf, h=1j)
    err_zero = max(abs(impedance(sys_zero, z, closed) + bessel_m_closed_form(z)) for z in grid100)
    checks.append(Check("impedance-anchor-mu-zero", err_zero <= 1e-10, err_zero, 0.0, 1e-10))
    err_inf = max(
        abs(impedance(sys_inf, z, closed) - 1.0 / bessel_m_closed_form(z)) for z in grid100
    )
    checks.append(Check("impedance-anchor-mu-inf", err_inf <= 1e-10, err_inf, 0.0, 1e-10))
    err_w = max(abs(transfer(sys_inf, z, closed) - bessel_w_closed_form(z)) for z in DEFAULT_COMPLEX_GRID)
    checks.append(Check("transfer-anchor-mu-inf", err_w <= 1e-10, err_w, 0.0, 1e-10))

    err_rot = 0.0
    for a in (0.3, 0.7, 1.0, 1.9, 2.6):
        sys_rot = make_lsystem(pot, mu=math.tan(a), h=1j)
        err_rot = max(
            err_rot,
            max(abs(impedance(sys_rot, z, closed) + m_alpha(closed, a, z)) for z in zs),
        )
    checks.append(Check("impedance-anchor-mu-tan-alpha", err_rot <= 1e-10, err_rot, 0.0, 1e-10))

    angles = classify_s_beta12(lambda x: 1.0 / m_cached(x), settings)
    tan_b1 = math.tan(angles.beta1)
    tan_b2 = math.tan(angles.beta2)
    checks.append(Check("class-tan-beta1-at-zero", abs(tan_b1) <= 1e-3, tan_b1, 0.0, 1e-3))
    checks.append(Check("class-tan-beta2-at-one", abs(tan_b2 - 1.0) <= 1e-3, tan_b2, 1.0, 1e-3))
    checks.append(
        Check(
            "angle-from-limit-vs-quarter-pi",
            abs(angles.beta2 - math.pi / 4.0) <= 1e-3,
            angles.beta2,
            math.pi / 4.0,
            1e-3,
        )
    )

    report = accretivity_and_sectoriality(1j, math.inf, m0)
    checks.append(
        Check("exact-angle-tan-theta", abs(report.tan_theta - 1.0) <= 1e-3, report.tan_theta, 1.0, 1e-3)
    )

    inv_m_closed = SampledFunction(lambda z: 1.0 / bessel_m_closed_form(z), label="1/m")
    k11 = kernel_matrix(inv_m_closed, math.pi / 4.0, (1j,))[0, 0].real
    checks.append(
        Check(
            "kernel-single-point-value",
            abs(k11 - _KERNEL_SINGLE_POINT) <= 1e-9,
            k11,
            _KERNEL_SINGLE_POINT,
            1e-9,
        )
    )
    kern_rep = kernel_psd_test(inv_m_closed, math.pi / 4.0, trials=100, seed=DEFAULT_KERNEL_SEED)
    checks.append(
        Check(
            "kernel-psd-one-over-m",
            kern_rep.psd,
            kern_rep.min_eigenvalue,
            "min eigenvalue >= -1e-8 * scale",
            kern_rep.tol,
            witness={"points": [[p.real, p.imag] for p in kern_rep.worst_points]},
        )
    )

    verdict_inv = stieltjes_test(inv_m_closed)
    checks.append(
        Check(
            "stieltjes-one-over-m",
            verdict_inv.passed,
            verdict_inv.detail,
            "pass",
            None,
        )
    )
    verdict_neg = stieltjes_test(SampledFunction(lambda z: -bessel_m_closed_form(z), label="-m"))
    checks.append(
        Check(
            "stieltjes-minus-m-rejected",
            (not verdict_neg.passed) and verdict_neg.witness is not None,
            verdict_neg.detail,
            "fail with witness",
            None,
            witness=verdict_neg.witness.to_dict() if verdict_neg.witness else None,
        )
    )

    prod = math.tan(sector_angle_from_product(math.pi / 6.0, 5.0 * math.pi / 12.0))
    gap = math.tan(sector_angle_from_gap(math.pi / 6.0, 5.0 * math.pi / 12.0))
    checks.append(
        Check(
            "sector-angle-product-formula",
            abs(prod - _PRODUCT_TAN_REFERENCE) <= 1e-6,
            prod,
            _PRODUCT_TAN_REFERENCE,
            1e-6,
        )
    )
    checks.append(
        Check("sector-angle-gap-formula", abs(gap - _GAP_TAN_REFERENCE) <= 1e-6, gap, _GAP_TAN_REFERENCE, 1e-6)
    )
    checks.append(
        Check("sector-angle-formulas-differ", gap - prod > 1e-3, gap - prod, "> 0", 1e-3)
    )

    return CheckReport(tuple(checks), meta={"suite": "example"})
