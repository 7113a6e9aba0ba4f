"""The symmetric well -N(N+1) sech^2 x: normalization constants, ground
state, and the integrated ground-state density I(x) that drives the
isospectral deformation.
"""
from __future__ import annotations

from math import comb, factorial, pi

import numpy as np

from .specfun import gamma_complex


def norm_constant(N: int, n: int) -> float:
    """C_n^{(N)} = 2^N [n! (N-n) Gamma(N-n+1/2)^2 / (Gamma(2N-n+1) pi)]^{1/2}."""
    if not 0 <= n < N:
        raise ValueError(f"need 0 <= n < N, got n={n}, N={N}")
    g = gamma_complex(N - n + 0.5).real
    return 2.0**N * np.sqrt(factorial(n) * (N - n) * g * g / (factorial(2 * N - n) * pi))


def ground_state(N: int, x):
    return norm_constant(N, 0) * np.cosh(x) ** (-N)


def ground_density(N: int, x):
    """I'(x) = psi_0(x)^2."""
    return norm_constant(N, 0) ** 2 * np.cosh(x) ** (-2 * N)


def isospectral_integral(N: int, x):
    """I(x) = int_{-inf}^x psi_0^2, via the sech^{2n} reduction formula.

    J_1 = 1 + tanh x,
    J_n = sech^{2n-2} tanh / (2n-1) + (2n-2)/(2n-1) J_{n-1}.

    The constant part of J_N times C_0^2 is exactly 1/2, so I = 1/2 + C_0^2 K(x)
    with K odd; this keeps I(x) + I(-x) = 1 to the last bit.

    For x < -1 the factor 1 + tanh x cancels, so the left tail comes from the
    equivalent binomial series in v = 1 + tanh x (see ``_lower_tail``), which
    keeps full relative precision down to I ~ e^{2Nx}. Near x = 0 that series
    alternates with large terms, hence the split.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    x = np.asarray(x, dtype=float)
    t = np.tanh(x)
    s2 = 1.0 / np.cosh(np.minimum(np.abs(x), 350.0)) ** 2
    K = t
    for n in range(2, N + 1):
        K = s2 ** (n - 1) * t / (2 * n - 1) + (2 * n - 2) / (2 * n - 1) * K
    out = 0.5 + norm_constant(N, 0) ** 2 * K
    tail = x < -1.0
    out = np.where(tail, _lower_tail(N, np.where(tail, x, -1.0)), out)
    # the exact value lies in [0, 1]; clip the last-ulp overshoot on the right
    return np.clip(out, 0.0, 1.0)[()]


def _lower_tail(N: int, x):
    """I(x) for x < -1 without cancellation.

    With v = 1 + tanh x = 2 / (1 + e^{-2x}),
    int_{-inf}^x sech^{2N} = sum_j C(N-1, j) 2^{N-1-j} (-1)^j v^{N+j} / (N+j).
    """
    v = 2.0 / (1.0 + np.exp(-2.0 * x))
    total = np.zeros_like(v)
    for j in range(N):
        total = total + comb(N - 1, j) * 2.0 ** (N - 1 - j) * (-1) ** j * v ** (N + j) / (N + j)
    return norm_constant(N, 0) ** 2 * total


def shifted_integral(N: int, x, lam: float):
    """I(x) + lam, accurate in both tails (uses I(-x) = 1 - I(x))."""
    x = np.asarray(x, dtype=float)
    return np.where(x <= 0, isospectral_integral(N, x) + lam,
                    (1.0 + lam) - isospectral_integral(N, -x))[()]


def log_derivatives(N: int, x, lam: float):
    """Return (d/dx ln(I+lam), d^2/dx^2 ln(I+lam)), both analytic."""
    x = np.asarray(x, dtype=float)
    d1 = ground_density(N, x)
    d2 = -2.0 * N * np.tanh(x) * d1
    shifted = shifted_integral(N, x, lam)
    first = d1 / shifted
    return first[()], (d2 / shifted - first * first)[()]
