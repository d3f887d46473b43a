"""Irrotational rigid flows generated by a single worldline.

A twice-differentiable curve z(tau) in eigentime parameterisation defines,
inside the tube where its orthogonal hyperplanes do not cross, a unique
field u = zdot(sigma(x)) with sigma(x) solving zdot(tau).(x - z(tau)) = 0.
The flow is rigid with zero vorticity; its acceleration one-form is closed
exactly for worldlines of constant acceleration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from ..core import PreconditionError, metric_matrix
from .fields import VelocityField

__all__ = [
    "WorldLineCurve",
    "straight_worldline",
    "hyperbolic_worldline",
    "wiggly_worldline",
    "foliation_time",
    "foliation_gap",
    "herglotz_field",
    "expected_accel_oneform",
    "expected_accel_curl",
    "expected_lie_accel",
]

CAUSTIC_GUARD = 1e-3


@dataclass(frozen=True)
class WorldLineCurve:
    """Curve tau -> event with derivative evaluators, tau in eigentime.

    zdot.zdot = c^2 along the curve and zdot.zddot = 0 (differentiated
    normalisation); both are validated on sampled parameters.
    """

    z: Callable[[float], np.ndarray]
    zdot: Callable[[float], np.ndarray]
    zddot: Callable[[float], np.ndarray]
    zdddot: Callable[[float], np.ndarray]
    c: float = 1.0

    def validate(self, taus) -> None:
        c2 = self.c * self.c
        for t in taus:
            v = self.zdot(t)
            a = self.zddot(t)
            q = v[0] * v[0] - float(v[1:] @ v[1:])
            if abs(q - c2) > 1e-10 * c2:
                raise PreconditionError(f"zdot.zdot != c^2 at tau={t}")
            va = v[0] * a[0] - float(v[1:] @ a[1:])
            if abs(va) > 1e-10 * max(c2, 1.0):
                raise PreconditionError(f"zdot.zddot != 0 at tau={t}")


def straight_worldline(c: float = 1.0, dim: int = 4) -> WorldLineCurve:
    """Inertial curve z(tau) = (c tau, 0, ...)."""
    e0 = np.zeros(dim)
    e0[0] = 1.0
    zero = np.zeros(dim)
    return WorldLineCurve(
        z=lambda t: c * t * e0,
        zdot=lambda t: c * e0,
        zddot=lambda t: zero.copy(),
        zdddot=lambda t: zero.copy(),
        c=c,
    )


def hyperbolic_worldline(x0: float, c: float = 1.0, dim: int = 4) -> WorldLineCurve:
    """Constant-acceleration curve x0 (sinh(c tau/x0), cosh(c tau/x0), 0...)."""
    if x0 <= 0:
        raise PreconditionError("x0 must be positive")

    def make(fn0, fn1, scale):
        def ev(t):
            out = np.zeros(dim)
            lam = c * t / x0
            out[0] = scale * fn0(lam)
            out[1] = scale * fn1(lam)
            return out
        return ev

    return WorldLineCurve(
        z=make(math.sinh, math.cosh, x0),
        zdot=make(math.cosh, math.sinh, c),
        zddot=make(math.sinh, math.cosh, c * c / x0),
        zdddot=make(math.cosh, math.sinh, c ** 3 / (x0 * x0)),
        c=c,
    )


def wiggly_worldline(eps: float, c: float = 1.0, dim: int = 4) -> WorldLineCurve:
    """Variable-acceleration curve with closed-form eigentime derivatives.

    Built from the rapidity profile chi(tau) = ln(1 + eps tau^2): the
    velocity is c (cosh chi, sinh chi, 0, ...), automatically normalised,
    and the position integrates in closed form.  The projected jerk is
    nonzero wherever chi'' != 0, so the induced flow is rigid but not an
    isometry flow.
    """
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    s = math.sqrt(eps)

    def uexp(t):  # e^chi and derivatives of chi
        u = 1.0 + eps * t * t
        up = 2.0 * eps * t
        upp = 2.0 * eps
        chi_p = up / u
        chi_pp = upp / u - (up / u) ** 2
        return u, chi_p, chi_pp

    def z(t):
        out = np.zeros(dim)
        u = 1.0 + eps * t * t
        # integral of cosh(chi) = (u + 1/u)/2 and of sinh(chi) = (u - 1/u)/2
        poly = t + eps * t ** 3 / 3.0
        arct = math.atan(s * t) / s
        out[0] = c * 0.5 * (poly + arct)
        out[1] = c * 0.5 * (poly - arct)
        return out

    def zdot(t):
        out = np.zeros(dim)
        u = 1.0 + eps * t * t
        out[0] = c * 0.5 * (u + 1.0 / u)
        out[1] = c * 0.5 * (u - 1.0 / u)
        return out

    def zddot(t):
        out = np.zeros(dim)
        u, chi_p, _ = uexp(t)
        cosh = 0.5 * (u + 1.0 / u)
        sinh = 0.5 * (u - 1.0 / u)
        out[0] = c * chi_p * sinh
        out[1] = c * chi_p * cosh
        return out

    def zdddot(t):
        out = np.zeros(dim)
        u, chi_p, chi_pp = uexp(t)
        cosh = 0.5 * (u + 1.0 / u)
        sinh = 0.5 * (u - 1.0 / u)
        out[0] = c * (chi_pp * sinh + chi_p * chi_p * cosh)
        out[1] = c * (chi_pp * cosh + chi_p * chi_p * sinh)
        return out

    return WorldLineCurve(z=z, zdot=zdot, zddot=zddot, zdddot=zdddot, c=c)


def _dot(v: np.ndarray, w: np.ndarray) -> float:
    return float(v[0] * w[0] - v[1:] @ w[1:])


def foliation_time(curve: WorldLineCurve, event, tau_window: tuple[float, float],
                   guard: float = CAUSTIC_GUARD) -> float:
    """The parameter sigma(x) of the orthogonal hyperplane through x.

    Solves zdot(tau).(x - z(tau)) = 0 by bracketed root finding; the
    derivative of that function is -c^2 N with N the caustic factor, so the
    root is unique inside the tube.  Raises near caustics (N <= guard).
    """
    x = np.asarray(event, dtype=float)

    def f(tau: float) -> float:
        return _dot(curve.zdot(tau), x - curve.z(tau))

    lo, hi = tau_window
    flo, fhi = f(lo), f(hi)
    grow = 0
    while flo * fhi > 0:
        span = hi - lo
        lo, hi = lo - 0.5 * span, hi + 0.5 * span
        flo, fhi = f(lo), f(hi)
        grow += 1
        if grow > 60:
            raise PreconditionError("could not bracket the hyperplane parameter")
    tau = brentq(f, lo, hi, xtol=1e-14, rtol=8.9e-16, maxiter=200)
    n = foliation_gap(curve, tau, x)
    if n <= guard:
        raise PreconditionError(
            f"event within the caustic guard (N = {n!r} <= {guard})")
    return float(tau)


def foliation_gap(curve: WorldLineCurve, tau: float, event) -> float:
    """Caustic factor N = 1 - zddot.(x - z)/c^2 at the given parameter.

    Vanishing N marks crossing hyperplanes, a spatial distance c^2/accel
    away from the curve.
    """
    x = np.asarray(event, dtype=float)
    return 1.0 - _dot(curve.zddot(tau), x - curve.z(tau)) / (curve.c * curve.c)


def herglotz_field(curve: WorldLineCurve, tau_window: tuple[float, float] = (-1.0, 1.0),
                   guard: float = CAUSTIC_GUARD) -> VelocityField:
    """The irrotational rigid field u = zdot(sigma(x)) induced by the curve."""

    def ev(x: np.ndarray) -> np.ndarray:
        return curve.zdot(foliation_time(curve, x, tau_window, guard))

    def dom(x: np.ndarray) -> bool:
        try:
            foliation_time(curve, x, tau_window, guard)
        except PreconditionError:
            return False
        return True

    return VelocityField(ev, dom, curve.c, "worldline-induced")


def _proj_along(v: np.ndarray, w: np.ndarray, c: float) -> np.ndarray:
    """Component of w g-orthogonal to the normalised v (v.v = c^2)."""
    return w - v * (_dot(v, w) / (c * c))


def expected_accel_oneform(curve: WorldLineCurve, event,
                           tau_window: tuple[float, float] = (-1.0, 1.0)) -> np.ndarray:
    """Closed-form lowered acceleration zddot-flat(sigma)/N of the induced field."""
    x = np.asarray(event, dtype=float)
    tau = foliation_time(curve, x, tau_window)
    n = foliation_gap(curve, tau, x)
    G = metric_matrix(x.size)
    return (G @ curve.zddot(tau)) / n


def expected_accel_curl(curve: WorldLineCurve, event,
                        tau_window: tuple[float, float] = (-1.0, 1.0)) -> np.ndarray:
    """Closed-form exterior derivative of the acceleration one-form.

    da-flat = zdot-flat wedge {Proj jerk-flat + zddot-flat
    (Proj jerk).(x-z)/(N c^2)} / (N^2 c^2); it vanishes identically iff the
    projected jerk does (constant acceleration).
    """
    x = np.asarray(event, dtype=float)
    c = curve.c
    tau = foliation_time(curve, x, tau_window)
    n = foliation_gap(curve, tau, x)
    G = metric_matrix(x.size)
    zd = curve.zdot(tau)
    zdd = curve.zddot(tau)
    jerk_h = _proj_along(zd, curve.zdddot(tau), c)
    rel = x - curve.z(tau)
    bracket = G @ jerk_h + (G @ zdd) * (_dot(jerk_h, rel) / (n * c * c))
    zdl = G @ zd
    return (np.outer(zdl, bracket) - np.outer(bracket, zdl)) / (n * n * c * c)


def expected_lie_accel(curve: WorldLineCurve, event,
                       tau_window: tuple[float, float] = (-1.0, 1.0)) -> np.ndarray:
    """Closed-form L_u a-flat of the induced field.

    Equals {Proj jerk-flat + zddot-flat (Proj jerk).(x-z)/(N c^2)}/N^2; on
    the worldline itself (x = z, N = 1) only the projected-jerk term
    survives.
    """
    x = np.asarray(event, dtype=float)
    c = curve.c
    tau = foliation_time(curve, x, tau_window)
    n = foliation_gap(curve, tau, x)
    G = metric_matrix(x.size)
    zd = curve.zdot(tau)
    zdd = curve.zddot(tau)
    jerk_h = _proj_along(zd, curve.zdddot(tau), c)
    rel = x - curve.z(tau)
    bracket = G @ jerk_h + (G @ zdd) * (_dot(jerk_h, rel) / (n * c * c))
    return bracket / (n * n)
