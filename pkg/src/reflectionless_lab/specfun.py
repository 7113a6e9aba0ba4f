"""Special functions: complex Gamma, Jacobi polynomials with arbitrary real
parameters, and exceptional X_m Jacobi polynomials.

All functions broadcast over numpy arrays in ``z``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PoleError",
    "JacobiParams",
    "gamma_complex",
    "jacobi_poly",
    "jacobi_poly_derivative",
    "jacobi_coefficients",
    "exceptional_jacobi",
]

MAX_DEGREE = 200

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)


class PoleError(ValueError):
    """Raised when a function is evaluated on (or numerically at) a pole."""


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameters (alpha, beta). No sign restriction."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ValueError("Jacobi parameters must be finite")


def _as_params(p) -> JacobiParams:
    if isinstance(p, JacobiParams):
        return p
    alpha, beta = p
    return JacobiParams(float(alpha), float(beta))


def _check_pole(z: complex, tol: float = 1e-13) -> None:
    r = round(z.real)
    if r <= 0 and abs(z - r) <= tol * max(1.0, abs(r)):
        raise PoleError(f"Gamma has a pole at z = {r}")


def _lanczos(z: complex) -> complex:
    # valid for Re z >= 1/2
    z = z - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return cmath.exp(_HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t) * x


def _gamma_scalar(z: complex) -> complex:
    _check_pole(z)
    if z.real < 0.5:
        # reflection
        return cmath.pi / (cmath.sin(cmath.pi * z) * _lanczos(1.0 - z))
    return _lanczos(z)


def gamma_complex(z):
    """Gamma function for complex argument.

    Lanczos approximation for ``Re z >= 1/2`` and the reflection formula
    otherwise. Raises :class:`PoleError` at non-positive integers.
    """
    if np.ndim(z) == 0:
        return _gamma_scalar(complex(z))
    zz = np.asarray(z, dtype=complex)
    out = np.empty(zz.shape, dtype=complex)
    for idx, v in np.ndenumerate(zz):
        out[idx] = _gamma_scalar(complex(v))
    return out


def _gbinom(x: float, k: int) -> float:
    """Generalised binomial coefficient C(x, k) as a falling factorial."""
    r = 1.0
    for i in range(k):
        r *= (x - i) / (i + 1)
    return r


def jacobi_poly(n: int, p, z):
    r"""Jacobi polynomial :math:`P_n^{(\alpha,\beta)}(z)` for any real alpha, beta.

    For |z| > 2 the explicit sum in u = (z-1)/2,

    .. math::
        \sum_{j=0}^{n} \binom{n+\alpha}{n-j}
        \frac{(n+\alpha+\beta+1)_j}{j!} u^j,

    is evaluated by Horner. When n+alpha+beta+1 is a non-positive integer
    (to 1e-12) its top coefficients are exactly zero, which keeps large |z|
    free of cancellation. Near the interval that sum cancels badly at higher
    degree, so for |z| <= 2 the symmetric form

    .. math::
        \sum_{s=0}^{n} \binom{n+\alpha}{n-s} \binom{n+\beta}{s}
        \left(\frac{z-1}{2}\right)^s \left(\frac{z+1}{2}\right)^{n-s}

    is used instead. Binomials are falling factorials. ``n = -1`` returns 0.
    """
    if n < -1:
        raise ValueError(f"degree must be >= -1, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds supported maximum {MAX_DEGREE}")
    p = _as_params(p)
    z = np.asarray(z, dtype=complex)
    if n == -1:
        return np.zeros_like(z)[()]
    u = (z - 1.0) / 2.0
    coefs = _jacobi_u_coefs(n, p)
    # Horner in u, skipping leading zeros
    while len(coefs) > 1 and coefs[-1] == 0.0:
        coefs.pop()
    far = np.full_like(z, coefs[-1])
    for cj in reversed(coefs[:-1]):
        far = far * u + cj
    near = np.zeros_like(z)
    v = (z + 1.0) / 2.0
    top_a, top_b = _snap(n + p.alpha), _snap(n + p.beta)
    for s_ in range(n + 1):
        near = near + _gbinom(top_a, n - s_) * _gbinom(top_b, s_) * u**s_ * v ** (n - s_)
    return np.where(np.abs(z) <= 2.0, near, far)[()]


def _snap(v, tol=1e-12):
    # parameters built as e.g. b - a - 1/2 land next to integers; snapping
    # makes the degenerate Pochhammer / binomial factors exactly zero
    r = round(v)
    return float(r) if abs(v - r) < tol else v


def _jacobi_u_coefs(n, p):
    c = _snap(n + p.alpha + p.beta + 1.0)
    top = _snap(n + p.alpha)
    coefs = []
    poch = 1.0
    for j in range(n + 1):
        coefs.append(_gbinom(top, n - j) * poch)
        poch *= (c + j) / (j + 1)
    return coefs


def jacobi_coefficients(n: int, p) -> np.polynomial.Polynomial:
    """P_n^{(alpha,beta)} as a numpy Polynomial in z (monomial basis).

    Exactly-zero top coefficients are trimmed, so ``.degree()`` is the true
    degree for degenerate parameters.
    """
    p = _as_params(p)
    if n == -1:
        return np.polynomial.Polynomial([0.0])
    u = np.polynomial.Polynomial([-0.5, 0.5])
    poly = np.polynomial.Polynomial(_jacobi_u_coefs(n, p))(u)
    return poly.trim(0.0)


def jacobi_poly_derivative(n: int, p, z):
    """d/dz of :func:`jacobi_poly`."""
    p = _as_params(p)
    if n <= 0:
        return (0.0 * np.asarray(z, dtype=complex))[()]
    shifted = JacobiParams(p.alpha + 1.0, p.beta + 1.0)
    return 0.5 * (n + p.alpha + p.beta + 1.0) * jacobi_poly(n - 1, shifted, z)


def exceptional_jacobi(n: int, m: int, p, z):
    r"""Exceptional Jacobi polynomial :math:`\hat P^{(\alpha,\beta)}_{n+m}(z)`.

    Two-term form

    .. math::
        (-1)^m\Big[\frac{1+\alpha+\beta+n}{2(1+\alpha+n)}(z-1)
        P_m^{(-\alpha-1,\beta-1)}(z) P_{n-1}^{(\alpha+2,\beta)}(z)
        + \frac{1+\alpha-m}{\alpha+1+n}
        P_m^{(-2-\alpha,\beta)}(z) P_n^{(\alpha+1,\beta-1)}(z)\Big]

    For ``n = 0`` the first term drops out (``P_{-1} = 0``).
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    p = _as_params(p)
    a, b = p.alpha, p.beta
    denom = a + 1.0 + n
    if abs(denom) < 1e-14:
        raise PoleError(f"degenerate prefactor: alpha + 1 + n = 0 (alpha={a}, n={n})")
    z = np.asarray(z, dtype=complex)
    first = (
        (1.0 + a + b + n) / (2.0 * denom)
        * (z - 1.0)
        * jacobi_poly(m, (-a - 1.0, b - 1.0), z)
        * jacobi_poly(n - 1, (a + 2.0, b), z)
    )
    second = (
        (1.0 + a - m) / denom
        * jacobi_poly(m, (-2.0 - a, b), z)
        * jacobi_poly(n, (a + 1.0, b - 1.0), z)
    )
    return ((-1) ** m * (first + second))[()]
