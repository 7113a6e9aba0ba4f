"""Bound-state spectra and closed-form eigenfunctions for every family, with
numerical L2 normalization and a finite-difference Schrodinger residual.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from . import realwell
from .errors import DomainError
from .potentials import Family, PotentialSpec, effective_scarf_params
from .specfun import exceptional_jacobi, jacobi_poly, jacobi_poly_derivative

__all__ = [
    "BoundState",
    "bound_energies",
    "eigenfunction",
    "family_eigenfunction",
    "schrodinger_residual",
    "l2_norm_squared",
]

NORM_BOUND = 40.0


@dataclass(frozen=True)
class BoundState:
    n: int
    energy: float
    wavefunction: Callable
    norm_constant: complex
    derivative: Optional[Callable] = None

    def __call__(self, x):
        return self.wavefunction(x)


def _branch_levels(depth: float) -> list[float]:
    # -(depth - n)^2 for 0 <= n < depth
    out = []
    n = 0
    while n < depth:
        out.append(-((depth - n) ** 2))
        n += 1
    return out


def _scarf_depth(a, b, branch):
    return a if branch == "normal" else b - 0.5


def bound_energies(spec: PotentialSpec) -> list[float]:
    """Ordered bound-state energies (most bound first). May be empty."""
    fam = spec.family
    if fam in (Family.REAL_SECH, Family.ISOSPECTRAL):
        return _branch_levels(float(spec.N))
    if fam in (Family.PURSEY, Family.ABRAHAM_MOSES):
        return _branch_levels(float(spec.N))[1:]
    if fam in (Family.SCARF2, Family.SCARF2_EXT):
        return _branch_levels(_scarf_depth(spec.a, spec.b, spec.eigen_branch))
    base = spec.base
    if base.family is Family.SCARF2:
        return _branch_levels(_scarf_depth(base.a, base.b, spec.branch))[1:]
    return _branch_levels(float(base.N))[1:]


# raw (unnormalized) closed forms ------------------------------------------

def _scarf_raw(a: float, b: float, n: int):
    """sech^a x exp(-i b arctan(sinh x)) P_n^{(alpha,beta)}(i sinh x) and its derivative."""
    p = (b - a - 0.5, -b - a - 0.5)

    def envelope(x):
        return np.cosh(x) ** (-a) * np.exp(-1j * b * np.arctan(np.sinh(x)))

    def psi(x):
        x = np.asarray(x, dtype=float)
        return (envelope(x) * jacobi_poly(n, p, 1j * np.sinh(x)))[()]

    def dpsi(x):
        x = np.asarray(x, dtype=float)
        z = 1j * np.sinh(x)
        w = a * np.tanh(x) + 1j * b / np.cosh(x)
        env = envelope(x)
        return (-w * env * jacobi_poly(n, p, z)
                + env * jacobi_poly_derivative(n, p, z) * 1j * np.cosh(x))[()]

    def a_psi(x):
        # (d/dx + W) psi: the envelope is annihilated, only P' survives
        x = np.asarray(x, dtype=float)
        z = 1j * np.sinh(x)
        return (envelope(x) * jacobi_poly_derivative(n, p, z) * 1j * np.cosh(x))[()]

    return psi, dpsi, a_psi


def _extended_raw(a: float, b: float, n: int, m: int):
    alpha, beta = b - a - 0.5, -b - a - 0.5

    def psi(x):
        x = np.asarray(x, dtype=float)
        z = 1j * np.sinh(x)
        env = np.cosh(x) ** (-a) * np.exp(-1j * b * np.arctan(np.sinh(x)))
        return (env * exceptional_jacobi(n, m, (alpha, beta), z)
                / jacobi_poly(m, (-alpha - 1.0, beta - 1.0), z))[()]

    return psi


def l2_norm_squared(psi: Callable, bound: float = NORM_BOUND) -> float:
    """int_{-bound}^{bound} |psi|^2 dx by adaptive quadrature."""
    f = lambda x: abs(psi(x)) ** 2
    pts = [-20.0, -5.0, 0.0, 5.0, 20.0]
    total, _ = integrate.quad(f, -bound, bound, points=pts, limit=400, epsabs=1e-14, epsrel=1e-13)
    return total


def _normalized(n, energy, psi, dpsi=None) -> BoundState:
    # L2 normalization; phase chosen so psi(0) is real positive when nonzero
    c = 1.0 / np.sqrt(l2_norm_squared(psi))
    v0 = complex(psi(0.0))
    if abs(v0) * c > 1e-10:
        c = c * abs(v0) / v0
    wf = lambda x: c * psi(x)
    d = (lambda x: c * dpsi(x)) if dpsi is not None else None
    return BoundState(n, energy, wf, c, d)


def _real_sech_state(N: int, n: int) -> BoundState:
    # P_n(i sinh x) = i^n (real polynomial in sinh x) with leading sign (-1)^n,
    # so the factor i^n gives a real psi_n that is positive as x -> +inf
    c = realwell.norm_constant(N, n) * 1j ** n
    psi, dpsi, _ = _scarf_raw(float(N), 0.0, n)
    return BoundState(n, -float((N - n) ** 2), lambda x: c * psi(x), c, lambda x: c * dpsi(x))


def _check_index(spec, n):
    levels = bound_energies(spec)
    if not 0 <= n < len(levels):
        raise IndexError(f"state n={n} requested but {spec.family.value} has {len(levels)} bound states")
    return levels[n]


def eigenfunction(spec: PotentialSpec, n: int) -> BoundState:
    """Normalized closed-form eigenstate ``n`` of ``spec``.

    The real well uses its explicit normalization constant. Every other
    family is normalized numerically on [-40, 40].
    """
    energy = _check_index(spec, n)
    fam = spec.family
    if fam is Family.REAL_SECH:
        return _real_sech_state(spec.N, n)
    if fam is Family.ISOSPECTRAL:
        return family_eigenfunction(spec.N, spec.lam, n)
    if fam in (Family.PURSEY, Family.ABRAHAM_MOSES):
        lam = 0.0 if fam is Family.PURSEY else -1.0
        st = _deformed_excited(spec.N, lam, n + 1)
        return BoundState(n, energy, st.wavefunction, st.norm_constant)
    if fam is Family.SCARF2:
        a, b = effective_scarf_params(spec.a, spec.b, spec.parametric)
        psi, dpsi, _ = _scarf_raw(a, b, n)
        return _normalized(n, energy, psi, dpsi)
    if fam is Family.SCARF2_EXT:
        a, b = effective_scarf_params(spec.a, spec.b, spec.parametric)
        return _normalized(n, energy, _extended_raw(a, b, n, spec.m))
    return _partner_state(spec, n, energy)


def _partner_state(spec: PotentialSpec, n: int, energy: float) -> BoundState:
    # psi^{(2)}_n = A psi^{(1)}_{n+1} / sqrt(E_{n+1} - E_0); the phase is the
    # one A produces, only the modulus is renormalized
    base = spec.base
    if base.family is Family.SCARF2:
        a, b = effective_scarf_params(base.a, base.b, spec.branch == "parametric")
        _, _, a_psi = _scarf_raw(a, b, n + 1)
        gap = a * a - (a - n - 1) ** 2
        f = lambda x: a_psi(x) / np.sqrt(gap)
        c = 1.0 / np.sqrt(l2_norm_squared(f))
        return BoundState(n, energy, lambda x: c * f(x), c)
    # real base: A preserves the norm, psi_{n+1} is already normalized
    N = base.N
    st = _real_sech_state(N, n + 1)
    gap = float(N * N - (N - n - 1) ** 2)
    wf = lambda x: (st.derivative(x) + N * np.tanh(x) * st(x)) / np.sqrt(gap)
    return BoundState(n, energy, wf, st.norm_constant / np.sqrt(gap))


def family_eigenfunction(N: int, lam: float, n: int) -> BoundState:
    """Eigenstate ``n`` of the lambda-deformed real well.

    n = 0: sqrt(lam(1+lam)) psi_0 / (I + lam).
    n >= 1: psi_n + (I' / (I + lam)) (psi_n' + W psi_n) / (E_n - E_0).
    Both are normalized analytically.
    """
    if -1.0 <= lam <= 0.0:
        raise DomainError(f"lambda must be > 0 or < -1, got {lam}")
    if not 0 <= n < N:
        raise IndexError(f"state n={n} requested but the well has {N} bound states")
    if n == 0:
        pref = np.sqrt(lam * (1.0 + lam))

        def wf(x):
            x = np.asarray(x, dtype=float)
            return (pref * realwell.ground_state(N, x) / realwell.shifted_integral(N, x, lam) + 0j)[()]

        def dwf(x):
            x = np.asarray(x, dtype=float)
            g = realwell.ground_state(N, x)
            s = realwell.shifted_integral(N, x, lam)
            dg = -N * np.tanh(x) * g
            return (pref * (dg / s - g * realwell.ground_density(N, x) / s**2) + 0j)[()]

        return BoundState(0, -float(N * N), wf, pref, dwf)
    return _deformed_excited(N, lam, n)


def _deformed_excited(N: int, lam: float, n: int) -> BoundState:
    base = _real_sech_state(N, n)
    gap = float(N * N - (N - n) ** 2)

    def wf(x):
        x = np.asarray(x, dtype=float)
        first, _ = realwell.log_derivatives(N, x, lam)
        a_psi = base.derivative(x) + N * np.tanh(x) * base(x)
        return (base(x) + first * a_psi / gap)[()]

    return BoundState(n, base.energy, wf, base.norm_constant)


def schrodinger_residual(V: Callable, E: float, psi: Callable,
                         x_range: tuple[float, float] = (-12.0, 12.0), dx: float = 1e-3) -> float:
    """max |-psi'' + (V - E) psi| / max |psi| over the interior of a uniform
    grid, psi'' by fourth-order central differences."""
    lo, hi = x_range
    n = int(round((hi - lo) / dx))
    x = np.linspace(lo, hi, n + 1)
    h = x[1] - x[0]
    p = np.asarray(psi(x), dtype=complex)
    d2 = (-p[4:] + 16 * p[3:-1] - 30 * p[2:-2] + 16 * p[1:-3] - p[:-4]) / (12 * h * h)
    r = -d2 + (np.asarray(V(x[2:-2]), dtype=complex) - E) * p[2:-2]
    scale = np.max(np.abs(p))
    if scale == 0.0:
        return float(np.max(np.abs(r)))
    return float(np.max(np.abs(r)) / scale)
