"""Normalised timelike velocity fields and the wedge chart.

Events are plain arrays (c t, x, y, z) in length units, so the form matrix
is always diag(1, -1, ..., -1) and the light speed c enters only through
the normalisation u.u = c^2 and explicit factors in derived formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..core import PreconditionError, metric_matrix

__all__ = [
    "VelocityField",
    "RindlerChart",
    "constant_field",
    "boost_killing_field",
    "rotation_killing_field",
    "radial_expanding_field",
    "rescaled_field",
    "boost_killing_flow",
    "rindler_from_event",
    "wedge_chart_metric",
]

NORMALIZATION_RTOL = 1e-10


@dataclass(frozen=True)
class VelocityField:
    """Event -> vector evaluator with u.u = c^2 enforced on evaluation.

    `domain` guards evaluation; `tag` records the provenance
    (boost-killing | rotation-killing | worldline-induced | user).
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    domain: Callable[[np.ndarray], bool]
    c: float = 1.0
    tag: str = "user"

    def __call__(self, event) -> np.ndarray:
        x = np.asarray(event, dtype=float)
        if not self.domain(x):
            raise PreconditionError(f"event {x.tolist()} outside the field domain")
        u = np.asarray(self.evaluator(x), dtype=float)
        c2 = self.c * self.c
        q = u[0] * u[0] - float(u[1:] @ u[1:])
        if abs(q - c2) > NORMALIZATION_RTOL * c2:
            raise PreconditionError(
                f"field not normalised at {x.tolist()}: u.u = {q!r}, expected {c2!r}")
        return u

    def lower(self, event) -> np.ndarray:
        """Covector u-flat = G u at the event."""
        u = self(event)
        G = metric_matrix(u.size)
        return G @ u

    def in_domain(self, event) -> bool:
        return bool(self.domain(np.asarray(event, dtype=float)))


def constant_field(dim: int = 4, c: float = 1.0) -> VelocityField:
    """Inertial rest-frame field u = c e0."""
    u0 = np.zeros(dim)
    u0[0] = c
    return VelocityField(lambda x: u0.copy(), lambda x: True, c, "user")


def boost_killing_field(c: float = 1.0, dim: int = 4) -> VelocityField:
    """Normalised generator of boosts, on the right wedge x > |c t|.

    The unnormalised generator is x d_ct + ct d_x; its flow moves each
    point along the hyperbola x^2 - (ct)^2 = const.
    """

    def ev(x: np.ndarray) -> np.ndarray:
        x0 = math.sqrt(x[1] * x[1] - x[0] * x[0])
        u = np.zeros(x.size)
        u[0] = c * x[1] / x0
        u[1] = c * x[0] / x0
        return u

    def dom(x: np.ndarray) -> bool:
        return x[1] > abs(x[0])

    return VelocityField(ev, dom, c, "boost-killing")


def rotation_killing_field(kappa: float, c: float = 1.0) -> VelocityField:
    """Normalised rigid-rotation generator d_t + kappa d_phi, where timelike.

    In coordinates (ct, x, y, z) the generator is (c, -kappa y, kappa x, 0);
    it stays timelike for radii below c/kappa.
    """

    def ev(x: np.ndarray) -> np.ndarray:
        rho2 = x[1] * x[1] + x[2] * x[2]
        k2 = c * c - kappa * kappa * rho2
        f = c / math.sqrt(k2)
        return np.array([c * f, -kappa * x[2] * f, kappa * x[1] * f, 0.0])

    def dom(x: np.ndarray) -> bool:
        return kappa * math.hypot(x[1], x[2]) < c

    return VelocityField(ev, dom, c, "rotation-killing")


def radial_expanding_field(eps: float, c: float = 1.0, dim: int = 4) -> VelocityField:
    """Non-rigid comparison field: normalised c e0 + eps * (0, x-vector)."""

    def ev(x: np.ndarray) -> np.ndarray:
        v = np.zeros(x.size)
        v[0] = c
        v[1:] = eps * x[1:]
        q = v[0] * v[0] - float(v[1:] @ v[1:])
        return v * (c / math.sqrt(q))

    def dom(x: np.ndarray) -> bool:
        return eps * eps * float(x[1:] @ x[1:]) < c * c

    return VelocityField(ev, dom, c, "user")


def rescaled_field(field: VelocityField, scaling: Callable[[np.ndarray], float]) -> Callable:
    """Pointwise rescaling of the (un-normalised) generator.

    Returns a raw evaluator, not a VelocityField: the result is
    deliberately unnormalised.  Rigidity is a property of the flow lines,
    so verdicts must not change under such rescalings.
    """

    def ev(x: np.ndarray) -> np.ndarray:
        s = float(scaling(np.asarray(x, dtype=float)))
        if s == 0.0:
            raise PreconditionError("scaling must be nowhere zero")
        return s * field(x)

    return ev


# Wedge chart -------------------------------------------------------------

@dataclass(frozen=True)
class RindlerChart:
    """Comoving wedge coordinates of one event: flow angle, proper time,
    orbit label.  lam and tau are redundant (tau = x0 lam / c) and checked."""

    x0: float
    lam: float
    tau: float
    c: float = 1.0

    def __post_init__(self):
        if self.x0 <= 0:
            raise PreconditionError("orbit label x0 must be positive")
        if abs(self.lam - self.c * self.tau / self.x0) > 1e-10 * max(1.0, abs(self.lam)):
            raise PreconditionError("lam and tau disagree for this orbit label")

    @classmethod
    def from_event(cls, ct: float, x: float, c: float = 1.0) -> "RindlerChart":
        lam, tau, x0 = rindler_from_event(ct, x, c)
        return cls(x0, lam, tau, c)

    def event(self) -> np.ndarray:
        return boost_killing_flow(self.x0, self.tau, self.c)


def boost_killing_flow(x0: float, tau: float, c: float = 1.0) -> np.ndarray:
    """Orbit point (ct, x) = x0 (sinh(c tau / x0), cosh(c tau / x0)).

    tau is the proper time along the orbit labelled by x0 > 0, with tau = 0
    on the x axis.
    """
    if x0 <= 0:
        raise PreconditionError("orbit label x0 must be positive")
    lam = c * tau / x0
    return np.array([x0 * math.sinh(lam), x0 * math.cosh(lam)])


def rindler_from_event(ct: float, x: float, c: float = 1.0) -> tuple[float, float, float]:
    """Invert the wedge flow: (lambda, tau, x0) from an event with x > |ct|.

    lambda = artanh(ct/x) is the flow parameter of the unnormalised
    generator, x0 = sqrt(x^2 - (ct)^2) the orbit label, tau = x0 lambda / c
    the proper time.
    """
    if not x > abs(ct):
        raise PreconditionError("event must lie in the right wedge x > |ct|")
    lam = math.atanh(ct / x)
    x0 = math.sqrt(x * x - ct * ct)
    return lam, x0 * lam / c, x0


def wedge_chart_metric(x0: float, lam: float, step: float = 1e-5) -> np.ndarray:
    """Pulled-back form components in the comoving chart (lambda, x0).

    Computed by finite differences of the embedding; the exact components
    are diag(x0^2, -1).
    """

    def embed(q):
        l, r = q
        return np.array([r * math.sinh(l), r * math.cosh(l)])

    q0 = np.array([lam, x0])
    jac = np.zeros((2, 2))
    for j in range(2):
        dq = np.zeros(2)
        dq[j] = step
        jac[:, j] = (embed(q0 + dq) - embed(q0 - dq)) / (2 * step)
    G = metric_matrix(2)
    return jac.T @ G @ jac
