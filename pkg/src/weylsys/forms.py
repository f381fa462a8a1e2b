"""Quadratic form comparison on the half-line [1, inf).

For real test functions y with finite energy, compares the Dirichlet-type
form re_form(y) = ∫ (y'^2 + 2 y^2 / x^2) dx against the boundary form
im_form(y) = y(1)^2.  The inequality im_form <= re_form is sharp: y = 1/x
achieves equality, and the reported ratio im_form/re_form never exceeds 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.interpolate import CubicSpline

from .errors import DivergenceError, DomainError

__all__ = [
    "TestFunction",
    "FormReport",
    "evaluate_form",
    "form_inner",
    "generate_test_functions",
    "SharpnessReport",
    "sharpness_search",
]

_SMOOTH_KINDS = ("power", "exp_poly", "mix")


@dataclass(frozen=True)
class TestFunction:
    """A real test function on [1, inf) with an evaluable derivative.

    Kinds: "power" is 1/x; "exp_poly" is p(x-1) e^{-decay (x-1)} with
    polynomial coefficients in ascending order; "sampled" interpolates
    values on a grid starting at 1 (cubic spline, truncated tail);
    "mix" is a finite real linear combination of smooth kinds.
    """

    __test__ = False  # not a test case, despite the name

    kind: str
    coefficients: tuple[float, ...] = ()
    decay: float = 1.0
    grid: tuple[float, ...] = ()
    values: tuple[float, ...] = ()
    parts: tuple["TestFunction", ...] = ()
    weights: tuple[float, ...] = ()
    label: str = ""
    _spline: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == "power":
            pass
        elif self.kind == "exp_poly":
            if not self.coefficients:
                raise DomainError("exp_poly needs at least one polynomial coefficient")
            if not all(math.isfinite(c) for c in self.coefficients):
                raise DomainError("exp_poly coefficients must be finite")
            if not (math.isfinite(self.decay) and self.decay > 0.0):
                raise DomainError(
                    f"exp_poly decay must be positive (integrable tail), got {self.decay}"
                )
        elif self.kind == "sampled":
            grid = np.asarray(self.grid, dtype=float)
            vals = np.asarray(self.values, dtype=float)
            if grid.size < 4 or grid.size != vals.size:
                raise DomainError("sampled needs >= 4 grid points with matching values")
            if abs(grid[0] - 1.0) > 1e-12:
                raise DomainError(f"sampled grid must start at x = 1, got {grid[0]}")
            if not np.all(np.diff(grid) > 0.0):
                raise DomainError("sampled grid must be strictly increasing")
            if not np.all(np.isfinite(vals)):
                raise DomainError("sampled values must be finite")
            object.__setattr__(self, "grid", tuple(map(float, grid)))
            object.__setattr__(self, "values", tuple(map(float, vals)))
            object.__setattr__(self, "_spline", CubicSpline(grid, vals, bc_type="natural"))
        elif self.kind == "mix":
            if not self.parts or len(self.parts) != len(self.weights):
                raise DomainError("mix needs matching nonempty parts and weights")
            if not all(math.isfinite(w) for w in self.weights):
                raise DomainError("mix weights must be finite")
            for part in self.parts:
                if part.kind not in _SMOOTH_KINDS:
                    raise DomainError("mix supports smooth kinds only (power, exp_poly, mix)")
        else:
            raise DomainError(f"unknown test-function kind: {self.kind!r}")

    @classmethod
    def power(cls, label: str = "1/x") -> "TestFunction":
        return cls(kind="power", label=label)

    @classmethod
    def exp_poly(cls, coefficients, decay: float = 1.0, label: str = "") -> "TestFunction":
        return cls(
            kind="exp_poly",
            coefficients=tuple(float(c) for c in coefficients),
            decay=float(decay),
            label=label,
        )

    @classmethod
    def sampled(cls, grid, values, label: str = "") -> "TestFunction":
        return cls(kind="sampled", grid=tuple(grid), values=tuple(values), label=label)

    @classmethod
    def mix(cls, parts, weights, label: str = "") -> "TestFunction":
        return cls(
            kind="mix",
            parts=tuple(parts),
            weights=tuple(float(w) for w in weights),
            label=label,
        )

    def value(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "power":
            return 1.0 / x
        if self.kind == "exp_poly":
            u = x - 1.0
            return np.polynomial.polynomial.polyval(u, self.coefficients) * np.exp(-self.decay * u)
        if self.kind == "sampled":
            return self._spline(x)
        return sum(w * part.value(x) for w, part in zip(self.weights, self.parts))

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "power":
            return -1.0 / x**2
        if self.kind == "exp_poly":
            u = x - 1.0
            p = np.polynomial.polynomial.polyval(u, self.coefficients)
            dp = np.polynomial.polynomial.polyval(
                u, np.polynomial.polynomial.polyder(self.coefficients)
            ) if len(self.coefficients) > 1 else 0.0
            return (dp - self.decay * p) * np.exp(-self.decay * u)
        if self.kind == "sampled":
            return self._spline(x, 1)
        return sum(w * part.derivative(x) for w, part in zip(self.weights, self.parts))

    def boundary_value(self) -> float:
        if self.kind == "power":
            return 1.0
        if self.kind == "exp_poly":
            return float(self.coefficients[0])
        if self.kind == "sampled":
            return float(self.values[0])
        return float(sum(w * part.boundary_value() for w, part in zip(self.weights, self.parts)))


@dataclass(frozen=True)
class FormReport:
    re_form: float
    im_form: float
    ratio: float
    tail_error: float = 0.0


def _quad_to_inf(integrand, upper=np.inf, points=None) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            val, err = quad(integrand, 1.0, upper, limit=400, epsabs=1e-12, epsrel=1e-10)
        except IntegrationWarning as exc:
            raise DivergenceError(f"quadrature did not converge: {exc}") from exc
    if err > max(1e-9, 1e-6 * abs(val)):
        raise DivergenceError(f"quadrature error estimate {err} too large for value {val}")
    return float(val)


def _sampled_tail_bound(y: TestFunction) -> float:
    """Bound the truncated tail of the energy integral for a sampled function.

    Models the tail as the exponential continuation of the last two samples;
    a non-decaying tail cannot be bounded and raises DivergenceError.
    """
    x_end = y.grid[-1]
    v_end = abs(y.values[-1])
    if v_end == 0.0:
        return 0.0
    x_prev = y.grid[-2]
    v_prev = abs(y.values[-2])
    if v_prev <= v_end or v_prev == 0.0:
        raise DivergenceError(
            f"sampled values do not decay at the grid end ({v_prev} -> {v_end}); "
            "tail energy cannot be bounded"
        )
    lam = math.log(v_prev / v_end) / (x_end - x_prev)
    return (lam**2 + 2.0 / x_end**2) * v_end**2 / (2.0 * lam)


def evaluate_form(y: TestFunction) -> FormReport:
    """Evaluate both forms and their ratio for one test function.

    re_form integrates y'^2 + 2 y^2/x^2 over [1, inf); im_form is y(1)^2.
    Sampled functions are integrated up to their last grid point, with the
    estimated tail energy reported (not added) as tail_error.
    """
    if not isinstance(y, TestFunction):
        raise DomainError("evaluate_form expects a TestFunction")

    def integrand(x):
        return y.derivative(x) ** 2 + 2.0 * y.value(x) ** 2 / x**2

    if y.kind == "sampled":
        tail = _sampled_tail_bound(y)
        re_form = _quad_to_inf(integrand, upper=y.grid[-1])
    else:
        tail = 0.0
        re_form = _quad_to_inf(integrand)
    im_form = y.boundary_value() ** 2
    if re_form <= 0.0:
        ratio = 0.0 if im_form == 0.0 else math.inf
    else:
        ratio = im_form / re_form
    return FormReport(re_form=re_form, im_form=im_form, ratio=ratio, tail_error=tail)


def form_inner(y: TestFunction, w: TestFunction) -> float:
    """Bilinear form ∫ (y' w' + 2 y w / x^2) dx over [1, inf), smooth kinds only.

    Pairing any admissible y against 1/x returns y(1): the boundary form is
    the restriction of this pairing, which is why the inequality is sharp
    exactly on multiples of 1/x.
    """
    for func in (y, w):
        if not isinstance(func, TestFunction) or func.kind not in _SMOOTH_KINDS:
            raise DomainError("form_inner supports smooth test functions only")

    def integrand(x):
        return y.derivative(x) * w.derivative(x) + 2.0 * y.value(x) * w.value(x) / x**2

    return _quad_to_inf(integrand)


def generate_test_functions(n: int, seed: int = 0) -> tuple[TestFunction, ...]:
    """Deterministically generate n admissible test functions from a seed.

    Mixes pure exponential-polynomial bumps, multiples of 1/x (the equality
    direction), and combinations of the two.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    rng = np.random.default_rng(seed)
    out: list[TestFunction] = []
    for i in range(int(n)):
        draw = rng.random()
        degree = int(rng.integers(0, 4))
        coeffs = rng.uniform(-2.0, 2.0, degree + 1)
        if np.abs(coeffs).max() < 1e-3:
            coeffs[0] = 1.0
        decay = 10.0 ** rng.uniform(-0.7, 0.7)
        bump = TestFunction.exp_poly(coeffs, decay, label=f"bump-{i}")
        if draw < 0.55:
            out.append(bump)
        elif draw < 0.85:
            weights = rng.uniform(-2.0, 2.0, 2)
            out.append(
                TestFunction.mix((TestFunction.power(), bump), weights, label=f"mix-{i}")
            )
        else:
            w0 = float(rng.uniform(-2.0, 2.0))
            if abs(w0) < 1e-3:
                w0 = 1.0
            out.append(TestFunction.mix((TestFunction.power(),), (w0,), label=f"scaled-power-{i}"))
    return tuple(out)


@dataclass(frozen=True)
class SharpnessReport:
    family: str
    params: tuple[float, ...]
    ratios: tuple[float, ...]
    best_ratio: float
    best_param: float
    best_index: int
    best_member: TestFunction


def sharpness_search(
    family: str = "power-plus-exp",
    n: int = 41,
    span: float = 0.1,
    members=None,
) -> SharpnessReport:
    """Scan a one-parameter family for the largest im/re form ratio.

    Families: "power-plus-exp" scans 1/x + eps * e^{-(x-1)} for eps in
    [-span, span] (the maximum sits at eps = 0 with ratio 1); "exp-decay"
    scans pure exponentials e^{-c(x-1)} over log-spaced c (all ratios < 1);
    "custom" scans an explicit list of members, with params the indices.
    """
    if family == "power-plus-exp":
        if n < 3:
            raise DomainError("need n >= 3 scan points")
        eps_grid = [0.0 if abs(e) < 1e-14 else float(e) for e in np.linspace(-span, span, n)]
        pool = [
            TestFunction.mix(
                (TestFunction.power(), TestFunction.exp_poly((1.0,), 1.0)),
                (1.0, eps),
                label=f"1/x + {eps:.4g} exp(-(x-1))",
            )
            for eps in eps_grid
        ]
        params = tuple(eps_grid)
    elif family == "exp-decay":
        if n < 3:
            raise DomainError("need n >= 3 scan points")
        cs = [float(c) for c in np.logspace(-1.0, 1.0, n)]
        pool = [TestFunction.exp_poly((1.0,), c, label=f"exp(-{c:.4g}(x-1))") for c in cs]
        params = tuple(cs)
    elif family == "custom":
        if not members:
            raise DomainError("custom family needs explicit members")
        pool = list(members)
        params = tuple(float(i) for i in range(len(pool)))
    else:
        raise DomainError(f"unknown sharpness family: {family!r}")

    ratios = tuple(evaluate_form(y).ratio for y in pool)
    best_index = int(np.argmax(ratios))
    return SharpnessReport(
        family=family,
        params=params,
        ratios=ratios,
        best_ratio=ratios[best_index],
        best_param=params[best_index],
        best_index=best_index,
        best_member=pool[best_index],
    )
