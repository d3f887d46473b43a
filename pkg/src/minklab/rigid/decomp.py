"""Finite-difference kinematics of velocity fields: projected metric,
expansion/shear and vorticity split, rigidity and Killing tests.

All derivatives are second-order central differences with a configurable
step, so identities checked here carry O(step^2) error; defaults follow the
split 1e-5 for first-derivative and 1e-4 for second-derivative residuals at
step 1e-3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import PreconditionError, metric_matrix
from .fields import VelocityField

__all__ = [
    "DEFAULT_STEP",
    "FIRST_DERIV_TOL",
    "SECOND_DERIV_TOL",
    "KinematicDecomposition",
    "spatial_metric",
    "grad_lowered",
    "kinematic_decomposition",
    "is_rigid",
    "reparameterization_invariance_check",
    "lie_derivative_oneform",
    "lie_derivative_2tensor",
    "lie_derivative_metric",
    "accel_oneform",
    "accel_curl",
    "killing_test",
]

DEFAULT_STEP = 1e-3
FIRST_DERIV_TOL = 1e-5
SECOND_DERIV_TOL = 1e-4


def spatial_metric(u: np.ndarray, c: float = 1.0) -> np.ndarray:
    """Projected rest-space metric h = c^-2 u-flat (x) u-flat - g.

    Annihilates u and is positive semidefinite of rank n-1.
    """
    u = np.asarray(u, dtype=float)
    G = metric_matrix(u.size)
    q = u[0] * u[0] - float(u[1:] @ u[1:])
    if abs(q - c * c) > 1e-8 * c * c:
        raise PreconditionError("u must be normalised to u.u = c^2")
    ul = G @ u
    return np.outer(ul, ul) / (c * c) - G


@dataclass(frozen=True)
class KinematicDecomposition:
    """Split of the lowered velocity gradient at an event.

    grad = theta + omega + c^-2 u-flat (x) accel-flat, with theta symmetric
    horizontal, omega antisymmetric horizontal, accel = gradient along u.
    """

    theta: np.ndarray
    omega: np.ndarray
    accel: np.ndarray
    accel_flat: np.ndarray
    u: np.ndarray
    at: np.ndarray
    fd_step: float

    @property
    def theta_norm(self) -> float:
        return float(np.abs(self.theta).max())

    @property
    def omega_norm(self) -> float:
        return float(np.abs(self.omega).max())

    @property
    def accel_norm_g(self) -> float:
        a = self.accel
        return float(np.sqrt(abs(a[0] * a[0] - a[1:] @ a[1:])))

    def reconstruction_residual(self, grad: np.ndarray, c: float) -> float:
        ul = metric_matrix(self.u.size) @ self.u
        model = self.theta + self.omega + np.outer(ul, self.accel_flat) / (c * c)
        return float(np.abs(model - grad).max())


def grad_lowered(field: VelocityField, event: np.ndarray, step: float) -> np.ndarray:
    """D[a, b] = d_a u_b by central differences (derivative index first)."""
    x = np.asarray(event, dtype=float)
    n = x.size
    G = metric_matrix(n)
    D = np.zeros((n, n))
    for a in range(n):
        dx = np.zeros(n)
        dx[a] = step
        D[a, :] = G @ (field(x + dx) - field(x - dx)) / (2 * step)
    return D


def _check_interior(field: VelocityField, event: np.ndarray, step: float) -> None:
    x = np.asarray(event, dtype=float)
    for a in range(x.size):
        dx = np.zeros(x.size)
        dx[a] = 2 * step
        if not (field.in_domain(x + dx) and field.in_domain(x - dx)):
            raise PreconditionError(
                f"event {x.tolist()} is within 2 steps of the domain boundary")


def kinematic_decomposition(field: VelocityField, event, step: float = DEFAULT_STEP) -> KinematicDecomposition:
    """Expansion/shear, vorticity and acceleration of the field at an event."""
    if step <= 0:
        raise PreconditionError("step must be positive")
    x = np.asarray(event, dtype=float)
    _check_interior(field, x, step)
    c = field.c
    u = field(x)
    n = u.size
    G = metric_matrix(n)
    D = grad_lowered(field, x, step)
    accel_flat = u @ D  # u^a d_a u_b
    accel = G @ accel_flat
    ul = G @ u
    P = np.eye(n) - np.outer(u, ul) / (c * c)  # mixed projector, vector slot
    sym = 0.5 * (D + D.T)
    antisym = 0.5 * (D - D.T)
    theta = P.T @ sym @ P
    omega = P.T @ antisym @ P
    return KinematicDecomposition(theta=theta, omega=omega, accel=accel,
                                  accel_flat=accel_flat, u=u, at=x, fd_step=step)


def is_rigid(field: VelocityField, probes, step: float = DEFAULT_STEP,
             tol: float = FIRST_DERIV_TOL) -> dict:
    """Rigidity verdict: the flow is rigid iff theta vanishes at all probes."""
    worst = 0.0
    for p in probes:
        worst = max(worst, kinematic_decomposition(field, p, step).theta_norm)
    return {"rigid": worst < tol, "max_theta": worst}


def _theta_of_raw(evaluator, c: float, event: np.ndarray, step: float) -> float:
    """Theta sup-norm for an arbitrary (not necessarily normalised) generator.

    The split uses the generator's own normalisation direction, mirroring
    the invariance of the rigidity condition under rescaling.
    """
    x = np.asarray(event, dtype=float)
    n = x.size
    G = metric_matrix(n)
    K = np.asarray(evaluator(x), dtype=float)
    q = K[0] * K[0] - float(K[1:] @ K[1:])
    if q <= 0:
        raise PreconditionError("generator must be timelike")
    u = K * (c / np.sqrt(q))

    def normalised(y):
        Ky = np.asarray(evaluator(y), dtype=float)
        qy = Ky[0] * Ky[0] - float(Ky[1:] @ Ky[1:])
        return Ky * (c / np.sqrt(qy))

    D = np.zeros((n, n))
    for a in range(n):
        dx = np.zeros(n)
        dx[a] = step
        D[a, :] = G @ (normalised(x + dx) - normalised(x - dx)) / (2 * step)
    ul = G @ u
    P = np.eye(n) - np.outer(u, ul) / (c * c)
    theta = P.T @ (0.5 * (D + D.T)) @ P
    return float(np.abs(theta).max())


def reparameterization_invariance_check(field: VelocityField, scaling, probes,
                                        step: float = DEFAULT_STEP,
                                        tol: float = FIRST_DERIV_TOL) -> dict:
    """Rigidity verdict before and after rescaling the generator.

    Rescaling by a nowhere-zero function leaves the flow lines, and hence
    the verdict, unchanged; the comparison is at verdict level.
    """
    base = is_rigid(field, probes, step, tol)

    def scaled(x):
        s = float(scaling(np.asarray(x, dtype=float)))
        if s == 0.0:
            raise PreconditionError("scaling must be nowhere zero")
        return s * field(x)

    worst = max(_theta_of_raw(scaled, field.c, p, step) for p in probes)
    return {
        "verdict_unchanged": base["rigid"] == (worst < tol),
        "base": base,
        "scaled_max_theta": worst,
    }


def lie_derivative_oneform(field: VelocityField, oneform, event,
                           step: float = DEFAULT_STEP) -> np.ndarray:
    """(L_u alpha)_b = u^c d_c alpha_b + alpha_c d_b u^c by central differences."""
    x = np.asarray(event, dtype=float)
    n = x.size
    u = field(x)
    alpha = np.asarray(oneform(x), dtype=float)
    out = np.zeros(n)
    dalpha = np.zeros((n, n))
    du = np.zeros((n, n))
    for a in range(n):
        dx = np.zeros(n)
        dx[a] = step
        dalpha[a, :] = (np.asarray(oneform(x + dx)) - np.asarray(oneform(x - dx))) / (2 * step)
        du[a, :] = (field(x + dx) - field(x - dx)) / (2 * step)
    for b in range(n):
        out[b] = u @ dalpha[:, b] + alpha @ du[b, :]
    return out


def lie_derivative_2tensor(field: VelocityField, tensor, event,
                           step: float = DEFAULT_STEP) -> np.ndarray:
    """(L_u T)_ab = u^c d_c T_ab + T_cb d_a u^c + T_ac d_b u^c."""
    x = np.asarray(event, dtype=float)
    n = x.size
    u = field(x)
    T = np.asarray(tensor(x), dtype=float)
    dT = np.zeros((n, n, n))
    du = np.zeros((n, n))
    for cidx in range(n):
        dx = np.zeros(n)
        dx[cidx] = step
        dT[cidx] = (np.asarray(tensor(x + dx)) - np.asarray(tensor(x - dx))) / (2 * step)
        du[cidx, :] = (field(x + dx) - field(x - dx)) / (2 * step)
    out = np.einsum("c,cab->ab", u, dT)
    out += np.einsum("cb,ac->ab", T, du)
    out += np.einsum("ac,bc->ab", T, du)
    return out


def lie_derivative_metric(field: VelocityField, event, step: float = DEFAULT_STEP) -> np.ndarray:
    """L_u g: for the flat form this is the symmetrised lowered gradient.

    Note this vanishes for the flow's *generator*, not for its normalised
    velocity field; see generator_killing_residual.
    """
    x = np.asarray(event, dtype=float)
    D = grad_lowered(field, x, step)
    return D + D.T


def generator_killing_residual(evaluator, event, step: float = DEFAULT_STEP) -> float:
    """Sup-norm of the symmetrised lowered gradient of a raw generator.

    Zero exactly when the generator satisfies the isometry (Killing)
    equation; the normalised velocity of the same flow generally does not,
    since normalisation rescales pointwise.
    """
    x = np.asarray(event, dtype=float)
    n = x.size
    G = metric_matrix(n)
    D = np.zeros((n, n))
    for a in range(n):
        dx = np.zeros(n)
        dx[a] = step
        D[a, :] = G @ (np.asarray(evaluator(x + dx), dtype=float)
                       - np.asarray(evaluator(x - dx), dtype=float)) / (2 * step)
    return float(np.abs(D + D.T).max())


def accel_oneform(field: VelocityField, event, step: float = DEFAULT_STEP) -> np.ndarray:
    """Lowered acceleration (u^a d_a u)_b at an event."""
    x = np.asarray(event, dtype=float)
    u = field(x)
    D = grad_lowered(field, x, step)
    return u @ D


def accel_curl(field: VelocityField, event, step: float = DEFAULT_STEP) -> np.ndarray:
    """Exterior derivative (d a-flat)_ab = d_a a_b - d_b a_a, nested differences."""
    x = np.asarray(event, dtype=float)
    n = x.size
    da = np.zeros((n, n))
    for a in range(n):
        dx = np.zeros(n)
        dx[a] = step
        da[a, :] = (accel_oneform(field, x + dx, step)
                    - accel_oneform(field, x - dx, step)) / (2 * step)
    return da - da.T


def killing_test(field: VelocityField, probes, step: float = DEFAULT_STEP,
                 rigid_tol: float = FIRST_DERIV_TOL,
                 curl_tol: float = SECOND_DERIV_TOL) -> dict:
    """A rigid flow is an isometry flow iff its acceleration one-form is
    closed (exact on the simply connected domains used here)."""
    rigid = is_rigid(field, probes, step, rigid_tol)
    worst = max(float(np.abs(accel_curl(field, p, step)).max()) for p in probes)
    return {
        "is_killing": bool(rigid["rigid"] and worst < curl_tol),
        "rigid": rigid["rigid"],
        "closedness_residual": worst,
    }
