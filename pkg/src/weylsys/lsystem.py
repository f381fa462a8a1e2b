"""Two-parameter family of boundary-coupled systems for the half-line operator.

A system is fixed by a potential, a non-self-adjoint boundary parameter h
(Im h > 0) and a coupling parameter mu on the projectively extended real
line (a single point at infinity).  Its impedance function V is a fractional
linear transform of the principal m-function, and its transfer function W
satisfies W = (1 - iV)/(1 + iV).  The dual coupling xi gives the pair
V_mu = -1/V_xi, W_mu = -W_xi.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from .errors import ConstructionError, DomainError
from .mfunc import MFunctionEvaluator, m_infinity, safe_div
from .potentials import Potential

__all__ = [
    "MU_INFINITY",
    "as_extended_real",
    "xi_parameter",
    "BoundaryVector",
    "LSystem",
    "make_lsystem",
    "impedance",
    "transfer",
    "transfer_from_impedance",
    "impedance_from_transfer",
    "DualityReport",
    "duality_check",
    "lsystem_to_dict",
    "lsystem_from_dict",
    "lsystem_to_json",
    "lsystem_from_json",
]

#: The single point at infinity of the projective coupling line.
MU_INFINITY = math.inf


def as_extended_real(value) -> float:
    """Normalize a coupling parameter to float or the single infinity.

    Accepts floats, ints and the strings "inf"/"-inf"/"+inf".  Both signs
    of infinity denote the same projective point and normalize to +inf.
    """
    if isinstance(value, str):
        try:
            value = float(value.strip())
        except ValueError as exc:
            raise DomainError(f"not an extended-real coupling: {value!r}") from exc
    if isinstance(value, complex):
        if value.imag != 0.0:
            raise DomainError("coupling parameter mu must be real")
        value = value.real
    value = float(value)
    if math.isnan(value):
        raise DomainError("coupling parameter mu must not be NaN")
    if math.isinf(value):
        return MU_INFINITY
    return value


def _check_h(h: complex) -> complex:
    h = complex(h)
    if not (math.isfinite(h.real) and math.isfinite(h.imag)):
        raise ConstructionError("boundary parameter h must be finite")
    if h.imag <= 0.0:
        raise ConstructionError(
            f"boundary parameter h must have Im h > 0, got h = {h}"
        )
    return h


def xi_parameter(mu, h: complex) -> float:
    """Dual coupling xi = (mu*Re h - |h|^2) / (mu - Re h).

    The map is an involution on the projective line: mu = inf maps to Re h,
    mu = Re h maps to inf.
    """
    mu = as_extended_real(mu)
    h = _check_h(h)
    re_h = h.real
    if math.isinf(mu):
        return re_h
    if mu == re_h:
        return MU_INFINITY
    return (mu * re_h - abs(h) ** 2) / (mu - re_h)


@dataclass(frozen=True)
class BoundaryVector:
    """Coefficients (c0, c1) of the boundary functional c0*y(l) + c1*y'(l)."""

    delta_coeff: float
    prime_coeff: float


@dataclass(frozen=True)
class LSystem:
    potential: Potential
    ell: float
    mu: float
    h: complex
    xi: float
    channel_gain: float
    boundary_vector: BoundaryVector

    @property
    def mu_is_infinite(self) -> bool:
        return math.isinf(self.mu)


def make_lsystem(potential: Potential, ell: float | None = None, mu=None, h: complex | None = None) -> LSystem:
    """Assemble the boundary-coupled system for the given (mu, h).

    ``ell`` may be omitted (the potential's boundary point is used); an
    explicit value that contradicts it raises ConstructionError, as does
    Im h <= 0.
    """
    if not isinstance(potential, Potential):
        raise ConstructionError("potential must be a Potential instance")
    if mu is None or h is None:
        raise ConstructionError("make_lsystem needs both mu and h")
    h = _check_h(h)
    mu = as_extended_real(mu)
    if ell is None:
        ell = potential.ell
    elif abs(float(ell) - potential.ell) > 1e-12 * max(1.0, abs(potential.ell)):
        raise ConstructionError(
            f"ell = {ell} disagrees with the potential's boundary point {potential.ell}"
        )
    xi = xi_parameter(mu, h)
    if math.isinf(mu):
        gain = 1.0
        bvec = BoundaryVector(1.0, 0.0)
    else:
        gain = math.sqrt(h.imag) / abs(mu - h)
        bvec = BoundaryVector(mu, 1.0)
    return LSystem(
        potential=potential,
        ell=float(ell),
        mu=mu,
        h=h,
        xi=xi,
        channel_gain=gain,
        boundary_vector=bvec,
    )


def impedance(system: LSystem, z: complex, evaluator: MFunctionEvaluator) -> complex:
    """Impedance V(z) = Im(h) * (m(z) + mu) / ((mu - Re h) m(z) + mu Re h - |h|^2).

    For mu = inf this reduces to V(z) = Im(h) / (m(z) + Re h).  Zeros of the
    denominator raise PoleError carrying z.
    """
    m = m_infinity(evaluator, z)
    h = system.h
    if system.mu_is_infinite:
        return safe_div(complex(h.imag), m + h.real, z=z, what="impedance")
    num = (m + system.mu) * h.imag
    den = (system.mu - h.real) * m + system.mu * h.real - abs(h) ** 2
    return safe_div(num, den, z=z, what="impedance")


def transfer(system: LSystem, z: complex, evaluator: MFunctionEvaluator) -> complex:
    """Transfer W(z) = ((mu - h)/(mu - conj h)) * (m(z) + conj h)/(m(z) + h).

    For mu = inf the unimodular prefactor is 1.
    """
    m = m_infinity(evaluator, z)
    h = system.h
    core = safe_div(m + h.conjugate(), m + h, z=z, what="transfer")
    if system.mu_is_infinite:
        return core
    # mu - conj(h) has imaginary part Im h > 0, so the prefactor never blows up.
    return (system.mu - h) / (system.mu - h.conjugate()) * core


def transfer_from_impedance(v: complex) -> complex:
    """Moebius link W = (1 - iV) / (1 + iV); V = i has no image (PoleError)."""
    return safe_div(1.0 - 1j * v, 1.0 + 1j * v, what="transfer_from_impedance")


def impedance_from_transfer(w: complex) -> complex:
    """Inverse link V = i(W - 1) / (W + 1); W = -1 has no image (PoleError)."""
    return safe_div(1j * (w - 1.0), w + 1.0, what="impedance_from_transfer")


@dataclass(frozen=True)
class DualityReport:
    mu: float
    xi: float
    z: complex
    impedance_mu: complex
    impedance_xi: complex
    transfer_mu: complex
    transfer_xi: complex
    impedance_residual: float
    transfer_residual: float


def duality_check(system: LSystem, z: complex, evaluator: MFunctionEvaluator) -> DualityReport:
    """Residuals of V_mu(z) + 1/V_xi(z) and W_mu(z) + W_xi(z) for the dual pair.

    Requires a finite mu with mu != Re h so that the dual system is itself an
    ordinary member of the family.
    """
    if system.mu_is_infinite:
        raise DomainError("duality_check needs a finite coupling mu")
    if math.isinf(system.xi):
        raise DomainError("duality_check needs mu != Re h (dual coupling is infinite)")
    dual = make_lsystem(system.potential, system.ell, system.xi, system.h)
    v_mu = impedance(system, z, evaluator)
    v_xi = impedance(dual, z, evaluator)
    w_mu = transfer(system, z, evaluator)
    w_xi = transfer(dual, z, evaluator)
    inv_v_xi = safe_div(1.0, v_xi, z=z, what="1/impedance of the dual system")
    return DualityReport(
        mu=system.mu,
        xi=system.xi,
        z=complex(z),
        impedance_mu=v_mu,
        impedance_xi=v_xi,
        transfer_mu=w_mu,
        transfer_xi=w_xi,
        impedance_residual=abs(v_mu + inv_v_xi),
        transfer_residual=abs(w_mu + w_xi),
    )


def _encode_extended(x: float):
    return "inf" if math.isinf(x) else float(x)


def lsystem_to_dict(system: LSystem) -> dict:
    return {
        "ell": system.ell,
        "potential": system.potential.to_dict(),
        "mu": _encode_extended(system.mu),
        "h": {"re": system.h.real, "im": system.h.imag},
        "xi": _encode_extended(system.xi),
        "channel_gain": system.channel_gain,
    }


def lsystem_from_dict(doc: dict) -> LSystem:
    try:
        potential = Potential.from_dict(doc["potential"])
        mu = as_extended_real(doc["mu"])
        h = complex(doc["h"]["re"], doc["h"]["im"])
        ell = float(doc["ell"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConstructionError(f"malformed system document: {exc}") from exc
    system = make_lsystem(potential, ell, mu, h)
    for key, got in (("xi", system.xi), ("channel_gain", system.channel_gain)):
        if key in doc:
            stored = as_extended_real(doc[key]) if key == "xi" else float(doc[key])
            same = (math.isinf(stored) and math.isinf(got)) or (
                math.isfinite(stored)
                and math.isfinite(got)
                and abs(stored - got) <= 1e-9 * max(1.0, abs(got))
            )
            if not same:
                raise ConstructionError(
                    f"stored {key} = {stored} inconsistent with recomputed {got}"
                )
    return system


def lsystem_to_json(system: LSystem) -> str:
    return json.dumps(lsystem_to_dict(system), sort_keys=True, indent=2) + "\n"


def lsystem_from_json(text: str) -> LSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConstructionError(f"invalid JSON for system document: {exc}") from exc
    return lsystem_from_dict(doc)
