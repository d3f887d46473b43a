"""Finite-difference Riemannian curvature of a coordinate metric.

Conventions: Christoffels from the metric in the usual way, curvature
R^m_[a, bc] = d_b Gamma^m_ac - d_c Gamma^m_ab + Gamma^m_sb Gamma^s_ac
- Gamma^m_sc Gamma^s_ab, lowered with the metric in the first slot.  The
unit sphere then has R_[th ph th ph] = +sin^2."""

from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = [
    "christoffels_fd",
    "riemann_lowered_fd",
    "total_antisymmetrizer",
]


def christoffels_fd(metric: Callable[[np.ndarray], np.ndarray], q: np.ndarray,
                    step: float = 1e-4) -> np.ndarray:
    """Gamma[m, a, b] at q by central differences of the metric."""
    q = np.asarray(q, dtype=float)
    m = q.size
    dg = np.zeros((m, m, m))  # dg[c, a, b] = d_c g_ab
    for cidx in range(m):
        dq = np.zeros(m)
        dq[cidx] = step
        dg[cidx] = (metric(q + dq) - metric(q - dq)) / (2 * step)
    ginv = np.linalg.inv(metric(q))
    # Gamma^m_ab = 1/2 g^ml (d_a g_lb + d_b g_al - d_l g_ab)
    gamma = 0.5 * np.einsum("ml,alb->mab", ginv, dg)
    gamma += 0.5 * np.einsum("ml,bal->mab", ginv, dg)
    gamma -= 0.5 * np.einsum("ml,lab->mab", ginv, dg)
    return gamma


def riemann_lowered_fd(metric: Callable[[np.ndarray], np.ndarray], q: np.ndarray,
                       step: float = 1e-4) -> np.ndarray:
    """Totally covariant curvature R[m, a, b, c] at q, nested differences."""
    q = np.asarray(q, dtype=float)
    m = q.size
    dgamma = np.zeros((m, m, m, m))  # dgamma[d, m, a, b] = d_d Gamma^m_ab
    for didx in range(m):
        dq = np.zeros(m)
        dq[didx] = step
        dgamma[didx] = (christoffels_fd(metric, q + dq, step)
                        - christoffels_fd(metric, q - dq, step)) / (2 * step)
    gamma = christoffels_fd(metric, q, step)
    # R^m_abc = d_b Gamma^m_ac - d_c Gamma^m_ab + Gam^m_sb Gam^s_ac - Gam^m_sc Gam^s_ab
    riem_up = (np.einsum("bmac->mabc", dgamma)
               - np.einsum("cmab->mabc", dgamma)
               + np.einsum("msb,sac->mabc", gamma, gamma)
               - np.einsum("msc,sab->mabc", gamma, gamma))
    return np.einsum("mn,nabc->mabc", metric(q), riem_up)


def total_antisymmetrizer(t: np.ndarray) -> np.ndarray:
    """Projection of a rank-4 tensor onto its totally antisymmetric part."""
    from itertools import permutations

    out = np.zeros_like(t)
    for perm in permutations(range(4)):
        s = _perm_sign(perm)
        out += s * np.transpose(t, perm)
    return out / 24.0


def _perm_sign(perm) -> float:
    p = list(perm)
    sign = 1.0
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign
