"""Superpotentials, the factorization operators A and A^dagger, and the
integral I(x) behind the one-parameter isospectral family.

Energies stay unshifted everywhere. The factorization therefore reads
V^{(1)} - E_0 = W^2 - W' and V^{(2)} - E_0 = W^2 + W'.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import realwell
from .errors import DomainError
from .potentials import Family, PotentialSpec, effective_scarf_params

__all__ = [
    "Superpotential",
    "superpotential",
    "isospectral_integral",
    "apply_A",
    "apply_A_dagger",
    "derivative",
]

isospectral_integral = realwell.isospectral_integral


@dataclass(frozen=True)
class Superpotential:
    """W(x) with its derivative and asymptotic limits W(-inf), W(+inf)."""

    branch: str
    w: Callable
    dw: Callable
    w_minus: complex
    w_plus: complex
    ground_energy: float

    def __call__(self, x):
        return self.w(x)


def _tanh_sech(amp_tanh, amp_sech):
    # W = A tanh x + B sech x
    def w(x):
        x = np.asarray(x, dtype=float)
        return (amp_tanh * np.tanh(x) + amp_sech / np.cosh(x))[()]

    def dw(x):
        x = np.asarray(x, dtype=float)
        s = 1.0 / np.cosh(x)
        return (amp_tanh * s * s - amp_sech * s * np.tanh(x))[()]

    return w, dw


def superpotential(spec: PotentialSpec, branch: Optional[str] = None) -> Superpotential:
    """Superpotential W = -(ln psi_0)' of ``spec`` on the requested branch.

    Supported: real well (N tanh x), Scarf-II on either branch
    (a tanh x + i b sech x, or (b-1/2) tanh x + i (a+1/2) sech x), and the
    lambda family W + (ln(I+lambda))'. Pursey and Abraham-Moses specs give
    the lambda = 0 and lambda = -1 members of that family.
    """
    fam = spec.family
    branch = branch or ("parametric" if spec.parametric else "normal")
    if branch == "parametric" and fam is not Family.SCARF2:
        raise DomainError("the parametric branch exists only for scarf2")
    if fam is Family.REAL_SECH:
        N = spec.N
        w, dw = _tanh_sech(float(N), 0.0)
        return Superpotential(branch, w, dw, -float(N), float(N), -float(N * N))
    if fam is Family.SCARF2:
        a, b = effective_scarf_params(spec.a, spec.b, branch == "parametric")
        w, dw = _tanh_sech(a, 1j * b)
        return Superpotential(branch, w, dw, complex(-a), complex(a), -a * a)
    if fam in (Family.ISOSPECTRAL, Family.PURSEY, Family.ABRAHAM_MOSES):
        N = spec.N
        lam = {Family.PURSEY: 0.0, Family.ABRAHAM_MOSES: -1.0}.get(fam, spec.lam)
        w0, dw0 = _tanh_sech(float(N), 0.0)

        def w(x):
            first, _ = realwell.log_derivatives(N, x, lam)
            return w0(x) + first

        def dw(x):
            _, second = realwell.log_derivatives(N, x, lam)
            return dw0(x) + second

        # (ln(I+lam))' -> 2N at -inf when lam = 0 and -> -2N at +inf when lam = -1
        w_minus = N if lam == 0.0 else -N
        w_plus = -N if lam == -1.0 else N
        return Superpotential(branch, w, dw, float(w_minus), float(w_plus), -float(N * N))
    raise DomainError(f"no superpotential for family {fam.value}")


def derivative(f: Callable, h: float = 1e-3) -> Callable:
    """Fourth-order central-difference derivative of ``f``."""

    def df(x):
        x = np.asarray(x, dtype=float)
        return ((f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h))[()]

    return df


def _derivative_of(f, h):
    d = getattr(f, "derivative", None)
    return d if d is not None else derivative(f, h)


def apply_A(spec: PotentialSpec, branch: Optional[str], f: Callable, h: float = 1e-3) -> Callable:
    """Return x -> f'(x) + W(x) f(x).

    ``f`` may carry an analytic ``derivative`` attribute (a BoundState does);
    otherwise a fourth-order finite difference with step ``h`` is used.
    """
    W = superpotential(spec, branch)
    df = _derivative_of(f, h)
    return lambda x: df(x) + W.w(x) * f(x)


def apply_A_dagger(spec: PotentialSpec, branch: Optional[str], f: Callable, h: float = 1e-3) -> Callable:
    """Return x -> -f'(x) + W(x) f(x)."""
    W = superpotential(spec, branch)
    df = _derivative_of(f, h)
    return lambda x: -df(x) + W.w(x) * f(x)
