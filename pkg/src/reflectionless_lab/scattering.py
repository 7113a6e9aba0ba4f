"""Reflection and transmission amplitudes.

Analytic: Gamma-function products for the real well and Scarf-II, the
zeta factor for the rational extensions, and SUSY phase relations for
partners, Pursey and Abraham-Moses potentials.

Numeric: psi'' = (V - k^2) psi integrated from the transmitted side,
starting from a pure outgoing wave, with a fixed-step 4th-order Magnus
scheme in the interaction picture: psi = c0 e^{ikx} + c1 e^{-ikx} with
psi' = ik (c0 e^{ikx} - c1 e^{-ikx}), so c' is proportional to V and free
regions propagate exactly. Each step is a closed-form 2x2 matrix
exponential; all steps are built at once with numpy and multiplied by
pairwise reduction.

Conventions: left incidence means psi = e^{ikx} + R e^{-ikx} for x -> -inf
and psi = T e^{ikx} for x -> +inf. Right incidence mirrors this.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .potentials import Family, PotentialSpec, effective_scarf_params, evaluate, extension_poles
from .specfun import gamma_complex, jacobi_coefficients
from .susyqm import Superpotential

__all__ = [
    "ScatteringAmplitudes",
    "analytic_T_real",
    "analytic_RT_scarf2",
    "zeta_factor",
    "analytic_RT_extended",
    "extension_degree",
    "partner_RT",
    "numeric_scatter",
    "analytic_amplitudes",
]

K_MIN_DEFAULT = 0.2


@dataclass(frozen=True)
class ScatteringAmplitudes:
    k: float
    R: complex
    T: complex
    source: str
    incidence: str = "left"
    error_estimate: Optional[float] = None


def _check_k(k):
    if not k > 0:
        raise PoleError(f"amplitudes need k > 0, got {k}")


def analytic_T_real(N: int, k: float) -> complex:
    """T(k) = Gamma(-N-ik) Gamma(N+1-ik) / (Gamma(1-ik) Gamma(-ik)) for -N(N+1) sech^2."""
    _check_k(k)
    ik = 1j * k
    g = gamma_complex
    return g(-N - ik) * g(N + 1 - ik) / (g(1 - ik) * g(-ik))


def _scarf_T(a, b, k):
    ik = 1j * k
    g = gamma_complex
    num = g(-a - ik) * g(1 + a - ik) * g(0.5 - b - ik) * g(0.5 + b - ik)
    return num / (g(-ik) * g(1 - ik) * g(0.5 - ik) ** 2)


def _scarf_bracket(a, b, k):
    return 1j * (np.cos(np.pi * a) * np.sin(np.pi * b) / np.cosh(np.pi * k)
                 + np.sin(np.pi * a) * np.cos(np.pi * b) / np.sinh(np.pi * k))


def _exact_trig_zero(a, b):
    # the bracket vanishes identically when a, b are both integers or both half-integers
    two_a, two_b = 2 * a, 2 * b
    return two_a == round(two_a) and two_b == round(two_b) and (round(two_a) - round(two_b)) % 2 == 0


def analytic_RT_scarf2(a: float, b: float, k: float, branch: str = "normal",
                       incidence: str = "left") -> ScatteringAmplitudes:
    """Scarf-II amplitudes.

    T = Gamma(-a-ik) Gamma(1+a-ik) Gamma(1/2-b-ik) Gamma(1/2+b-ik)
        / (Gamma(-ik) Gamma(1-ik) Gamma(1/2-ik)^2)
    R = T * i [cos(pi a) sin(pi b) / cosh(pi k) + sin(pi a) cos(pi b) / sinh(pi k)]

    R is the left-incidence reflection; right incidence is the same
    expression with b -> -b (the mirror image x -> -x). R is exactly 0 when
    a and b are both integers or both half-integers.
    """
    _check_k(k)
    a, b = effective_scarf_params(a, b, branch == "parametric")
    if incidence == "right":
        b_r = -b
    elif incidence == "left":
        b_r = b
    else:
        raise DomainError(f"incidence must be 'left' or 'right', got {incidence!r}")
    T = _scarf_T(a, b, k)
    R = 0j if _exact_trig_zero(a, b) else T * _scarf_bracket(a, b_r, k)
    return ScatteringAmplitudes(k, complex(R), complex(T), "analytic", incidence)


def zeta_factor(m: int, b: float, k: float) -> complex:
    """zeta = ([b^2 - (ik-1/2)^2] + (b-ik+1/2)(1-m)) / ([b^2 - (ik+1/2)^2] + (b+ik+1/2)(1-m))."""
    ik = 1j * k
    num = (b * b - (ik - 0.5) ** 2) + (b - ik + 0.5) * (1 - m)
    den = (b * b - (ik + 0.5) ** 2) + (b + ik + 0.5) * (1 - m)
    if abs(den) < 1e-14:
        raise PoleError(f"zeta has a pole at m={m}, b={b}, k={k}")
    return num / den


def extension_degree(a: float, b: float, m: int) -> int:
    """Degree of P_m^{(-alpha-1, beta-1)}(z), alpha = b-a-1/2, beta = -b-a-1/2."""
    if m == 0:
        return 0
    return jacobi_coefficients(m, (a - b - 0.5, -b - a - 1.5)).degree()


def analytic_RT_extended(a: float, b: float, m: int, k: float,
                         branch: str = "normal") -> ScatteringAmplitudes:
    """Left-incidence amplitudes of the X_m extended Scarf-II potential:
    (R, T) = (R_scarf, T_scarf) * zeta(d, b). On the parametric branch the
    substitution a -> b-1/2, b -> a+1/2 is made before zeta is formed.

    d is the actual degree of the denominator P_m^{(-alpha-1, beta-1)}. It
    equals m except at degenerate parameters (2b+1-m an integer in [0, m-1]),
    where the polynomial drops degree and zeta(m, b) would be wrong.
    """
    a, b = effective_scarf_params(a, b, branch == "parametric")
    base = analytic_RT_scarf2(a, b, k)
    z = zeta_factor(extension_degree(a, b, m), b, k)
    return ScatteringAmplitudes(k, base.R * z, base.T * z, "analytic", "left")


def partner_RT(base: ScatteringAmplitudes, w: Superpotential, k: float,
               kind: str = "partner") -> ScatteringAmplitudes:
    """Amplitudes of a SUSY-related potential from those of the base.

    kind='partner':  R2 = (W- - ik)/(W- + ik) R1,   T2 = (W- - ik)/(W+ - ik') T1
    kind='pursey':   R  = ((W- - ik)/(W- + ik))^2 R1, T = -(W- - ik)/(W- + ik) T1
    kind='am':       R  = R1,                        T = -(W+ + ik')/(W+ - ik') T1
    with k' = sqrt(k^2 + W-^2 - W+^2) = k for the symmetric channels handled here.
    ``w`` is the superpotential of the undeformed base.
    """
    _check_k(k)
    wm, wp = complex(w.w_minus), complex(w.w_plus)
    if abs(wm * wm - wp * wp) > 1e-12:
        raise DomainError("asymmetric asymptotic channels (W-^2 != W+^2) are not supported")
    kp = k
    ik = 1j * k
    if kind == "partner":
        R = (wm - ik) / (wm + ik) * base.R
        T = (wm - ik) / (wp - 1j * kp) * base.T
    elif kind == "pursey":
        f = (wm - ik) / (wm + ik)
        R, T = f * f * base.R, -f * base.T
    elif kind == "am":
        R, T = base.R, -(wp + 1j * kp) / (wp - 1j * kp) * base.T
    else:
        raise DomainError(f"kind must be partner, pursey or am, got {kind!r}")
    return ScatteringAmplitudes(k, complex(R), complex(T), base.source, base.incidence)


# numeric solver ------------------------------------------------------------

def _generator(v, x, k):
    """B(x) with c' = B c for psi = c0 e^{ikx} + c1 e^{-ikx}, psi' = ik (c0 e^{ikx} - c1 e^{-ikx})."""
    f = (v / (2j * k))[:, None, None]
    ph = np.exp(2j * k * x)
    out = np.empty((v.size, 2, 2), dtype=complex)
    out[:, 0, 0] = 1.0
    out[:, 0, 1] = 1.0 / ph
    out[:, 1, 0] = -ph
    out[:, 1, 1] = -1.0
    return f * out


def _magnus_steps(v1, x1, v2, x2, k, h):
    """Batched 4th-order Magnus steps for c' = B(x) c.

    (v1, x1), (v2, x2) are the two Gauss points of each step in the order the
    step visits them. Omega = h/2 (B1 + B2) + sqrt(3) h^2/12 [B2, B1] is
    traceless, so exp(Omega) = cosh(s) I + sinh(s)/s Omega with s^2 = -det Omega.
    """
    B1, B2 = _generator(v1, x1, k), _generator(v2, x2, k)
    om = 0.5 * h * (B1 + B2) + (np.sqrt(3.0) * h * h / 12.0) * (B2 @ B1 - B1 @ B2)
    alpha, beta, gamma = om[:, 0, 0], om[:, 0, 1], om[:, 1, 0]
    s2 = alpha * alpha + beta * gamma
    small = np.abs(s2) < 1e-8
    s = np.sqrt(np.where(small, 1.0, s2))
    ch = np.where(small, 1 + s2 / 2 + s2 * s2 / 24, np.cosh(s))
    sh = np.where(small, 1 + s2 / 6 + s2 * s2 / 120, np.sinh(s) / s)
    out = sh[:, None, None] * om
    out[:, 0, 0] += ch
    out[:, 1, 1] += ch
    return out


def _ordered_product(mats):
    # mats[0] acts first: returns mats[-1] @ ... @ mats[0]
    while mats.shape[0] > 1:
        if mats.shape[0] % 2:
            carry = mats[-1:]
            mats = np.concatenate([mats[1:-1:2] @ mats[0:-1:2], carry])
        else:
            mats = mats[1::2] @ mats[0::2]
    return mats[0]


def _solve(g1, g2, L, k, incidence):
    """g1, g2: (x, V) at the lower and upper Gauss point of each cell, left to right."""
    (x1, v1), (x2, v2) = g1, g2
    h = 2.0 * L / v1.size
    if incidence == "left":
        # integrate from +L back to -L starting from the pure outgoing wave c = (1, 0)
        steps = _magnus_steps(v2[::-1], x2[::-1], v1[::-1], x1[::-1], k, -h)
        plus, minus = _ordered_product(steps)[:, 0]
        return minus / plus, 1.0 / plus
    steps = _magnus_steps(v1, x1, v2, x2, k, h)
    plus, minus = _ordered_product(steps)[:, 1]
    return plus / minus, 1.0 / minus


GAUSS = np.sqrt(3.0) / 6.0


def _gauss_values(V, L, n):
    left = np.linspace(-L, L, n + 1)[:-1]
    h = 2.0 * L / n
    g = np.concatenate([left + (0.5 - GAUSS) * h, left + (0.5 + GAUSS) * h])
    v = np.asarray(V(g), dtype=complex) * np.ones_like(g)
    return (g[:n], v[:n]), (g[n:], v[n:])


def numeric_scatter(spec: Union[PotentialSpec, Callable], k: float, L: float = 25.0,
                    dx: float = 1e-3, incidence: str = "left", tail_tol: float = 1e-8,
                    conv_tol: float = 1e-7, check_convergence: bool = True) -> ScatteringAmplitudes:
    """Scattering amplitudes by direct integration on [-L, L].

    Preconditions: max |V(+-L)| <= tail_tol * k^2 and dx <= min(0.25/k, 1e-2).
    Extended potentials with real-axis poles raise PoleError.
    With ``check_convergence`` the run is repeated at dx/2; the larger of
    |dR|, |dT| is reported as ``error_estimate`` and must not exceed
    ``conv_tol``. The returned R, T are the ones at the requested dx.
    """
    _check_k(k)
    if incidence not in ("left", "right"):
        raise DomainError(f"incidence must be 'left' or 'right', got {incidence!r}")
    if dx > min(0.25 / k, 1e-2):
        raise DomainError(f"dx={dx} too coarse for k={k}; need dx <= min(0.25/k, 1e-2)")
    if isinstance(spec, PotentialSpec) and spec.family is Family.SCARF2_EXT:
        poles = extension_poles(spec.a, spec.b, spec.m, spec.parametric)
        if len(poles):
            raise PoleError(f"potential is singular on the real axis at x = {poles}")
    V = (lambda x: evaluate(spec, x)) if isinstance(spec, PotentialSpec) else spec
    edge = np.abs(np.asarray(V(np.array([-L, L])), dtype=complex))
    if np.max(edge) > tail_tol * k * k:
        raise DomainError(
            f"domain too small: |V(+-L)| = {np.max(edge):.3e} exceeds {tail_tol:g} k^2 at L={L}"
        )
    n = int(np.ceil(2 * L / dx - 1e-9))
    g1, g2 = _gauss_values(V, L, n)
    if not (np.all(np.isfinite(g1[1])) and np.all(np.isfinite(g2[1]))):
        raise DomainError("potential is not finite on the integration grid")
    R, T = _solve(g1, g2, L, k, incidence)
    err = None
    if check_convergence:
        R2, T2 = _solve(*_gauss_values(V, L, 2 * n), L, k, incidence)
        err = float(max(abs(R2 - R), abs(T2 - T)))
        if err > conv_tol:
            raise ConvergenceError(f"step halving changed amplitudes by {err:.3e} > {conv_tol:g}")
    return ScatteringAmplitudes(float(k), complex(R), complex(T), "numeric", incidence, err)


def analytic_amplitudes(spec: PotentialSpec, k: float, incidence: str = "left") -> ScatteringAmplitudes:
    """Closed-form amplitudes for any family.

    The real well and its lambda deformations share R = 0 and T_real; the
    deformation term decays on both sides and leaves T unchanged. Pursey,
    Abraham-Moses and partner amplitudes follow from the base by the SUSY
    phase relations. Right incidence is available for Scarf-II only; the
    other families carry left-incidence closed forms.
    """
    from .susyqm import superpotential

    fam = spec.family
    if fam is Family.SCARF2:
        return analytic_RT_scarf2(spec.a, spec.b, k, spec.eigen_branch, incidence)
    if incidence != "left":
        raise DomainError(f"{fam.value}: closed-form amplitudes are left-incidence only")
    if fam in (Family.REAL_SECH, Family.ISOSPECTRAL):
        return ScatteringAmplitudes(float(k), 0j, complex(analytic_T_real(spec.N, k)), "analytic")
    if fam is Family.SCARF2_EXT:
        return analytic_RT_extended(spec.a, spec.b, spec.m, k, spec.eigen_branch)
    if fam in (Family.PURSEY, Family.ABRAHAM_MOSES):
        real = PotentialSpec.real_sech(spec.N)
        kind = "pursey" if fam is Family.PURSEY else "am"
        return partner_RT(analytic_amplitudes(real, k), superpotential(real), k, kind)
    base = spec.base
    return partner_RT(analytic_amplitudes(base, k), superpotential(base, spec.branch), k, "partner")
