"""Independent numerical oracles shared across the test suite.

These deliberately avoid the package's own analytic code paths: gradients are
checked against central finite differences, and metrics against brute-force
re-implementations written in plain loops.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


def fd_gradient(f: Callable[[np.ndarray], float], x: np.ndarray,
                eps: float = 1e-5) -> np.ndarray:
    """Central-difference gradient of a scalar function of a flat array."""
    x = np.asarray(x, dtype=float)
    grad = np.zeros_like(x)
    flat = grad.reshape(-1)
    xf = x.reshape(-1)
    for i in range(xf.size):
        orig = xf[i]
        xf[i] = orig + eps
        hi = f(x)
        xf[i] = orig - eps
        lo = f(x)
        xf[i] = orig
        flat[i] = (hi - lo) / (2.0 * eps)
    return grad


def relative_error(reference: np.ndarray, candidate: np.ndarray) -> float:
    """Norm-wise relative error of ``candidate`` against ``reference``."""
    ref = np.asarray(reference, dtype=float).ravel()
    cand = np.asarray(candidate, dtype=float).ravel()
    denom = max(float(np.linalg.norm(ref)), 1e-12)
    return float(np.linalg.norm(cand - ref)) / denom


def random_trajectory_arrays(rng: np.random.Generator, n_waypoints: int = 7,
                             scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """A smooth-ish random trajectory as raw arrays (may violate dynamics)."""
    w = np.zeros((n_waypoints, 6))
    w[:, 0] = np.cumsum(rng.normal(0.0, 0.3 * scale, n_waypoints))
    w[:, 1] = np.abs(np.cumsum(rng.normal(0.0, 0.15 * scale, n_waypoints))) + 0.05
    w[:, 2] = rng.uniform(-1.5, 1.5, n_waypoints)
    w[:, 3:] = rng.normal(0.0, scale, (n_waypoints, 3))
    dts = rng.uniform(0.08, 0.4, n_waypoints - 1)
    return w, dts


def quality_oracle(responses) -> "Fraction":
    """Exact rational alignment score, computed without float arithmetic."""
    from fractions import Fraction

    total = Fraction(0)
    for s, side in responses:
        total += Fraction(s) if side == "B" else Fraction(8) - Fraction(s)
    return total / len(responses)


def topx_oracle(choices, x: int) -> "Fraction":
    """Exact rational Top-X hit fraction via explicit set membership."""
    from fractions import Fraction

    hits = 0
    for first, second, intended in choices:
        top = {first} if x == 1 else {first, second}
        hits += intended in top
    return Fraction(hits, len(choices))
