"""CSV export of trajectories and sampled field diagnostics.

Fixed column order: tau,ct,x,y,z then optional theta_norm,omega_norm,
accel_norm when diagnostics are included; one row per sample.
"""

from __future__ import annotations

import io

import numpy as np

__all__ = ["trajectory_csv", "field_csv"]

BASE_HEADER = ["tau", "ct", "x", "y", "z"]
DIAG_HEADER = BASE_HEADER + ["theta_norm", "omega_norm", "accel_norm"]


def _pad4(event: np.ndarray) -> list[float]:
    out = [0.0, 0.0, 0.0, 0.0]
    for i, v in enumerate(np.asarray(event, dtype=float)):
        out[i] = float(v)
    return out


def trajectory_csv(samples) -> str:
    """Rows (tau, event) -> CSV text with the fixed trajectory header."""
    buf = io.StringIO()
    buf.write(",".join(BASE_HEADER) + "\n")
    for tau, event in samples:
        row = [float(tau)] + _pad4(event)
        buf.write(",".join(repr(v) for v in row) + "\n")
    return buf.getvalue()


def field_csv(samples) -> str:
    """Rows (tau, event, theta, omega, accel) -> CSV with diagnostics."""
    buf = io.StringIO()
    buf.write(",".join(DIAG_HEADER) + "\n")
    for tau, event, theta, omega, accel in samples:
        row = [float(tau)] + _pad4(event) + [float(theta), float(omega), float(accel)]
        buf.write(",".join(repr(v) for v in row) + "\n")
    return buf.getvalue()
