"""Closed-form potentials: the real sech^2 well, its isospectral deformations
(lambda family, Pursey, Abraham-Moses), the complex PT-symmetric Scarf-II
potential, its rational X_m extensions, and SUSY partners.

Units hbar = 2m = 1. Every evaluator accepts scalars or numpy arrays in x.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from . import realwell
from .errors import DomainError, SingularPointError
from .specfun import jacobi_coefficients, jacobi_poly

__all__ = [
    "Family",
    "PotentialSpec",
    "GridFunction",
    "eval_real_sech",
    "eval_scarf2",
    "eval_scarf2_parametric",
    "eval_scarf2_extended",
    "eval_isospectral_family",
    "eval_pursey_am",
    "partner_potential",
    "evaluate",
    "sample",
    "effective_scarf_params",
    "extension_polynomials",
    "extension_poles",
]

SINGULAR_TOL = 1e-12


class Family(str, Enum):
    REAL_SECH = "realsech"
    SCARF2 = "scarf2"
    SCARF2_EXT = "scarf2ext"
    ISOSPECTRAL = "isofamily"
    PURSEY = "pursey"
    ABRAHAM_MOSES = "am"
    PARTNER = "partner"


BRANCHES = ("normal", "parametric")


@dataclass(frozen=True)
class PotentialSpec:
    """Tagged description of one potential.

    Build instances with the classmethods (``real_sech``, ``scarf2``, ...);
    fields irrelevant to a family stay ``None``.
    """

    family: Family
    N: Optional[int] = None
    a: Optional[float] = None
    b: Optional[float] = None
    m: int = 0
    lam: Optional[float] = None
    parametric: bool = False
    base: Optional["PotentialSpec"] = None
    branch: str = "normal"

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        fam = self.family
        if fam in (Family.REAL_SECH, Family.ISOSPECTRAL, Family.PURSEY, Family.ABRAHAM_MOSES):
            if self.N is None or int(self.N) != self.N or self.N < 1:
                raise DomainError(f"{fam.value}: N must be a positive integer, got {self.N}")
            object.__setattr__(self, "N", int(self.N))
        if fam is Family.ISOSPECTRAL:
            if self.lam is None or not np.isfinite(self.lam):
                raise DomainError("isofamily: lambda must be a finite real")
            if -1.0 <= self.lam <= 0.0:
                raise DomainError(
                    f"isofamily: lambda must be > 0 or < -1, got {self.lam} "
                    "(use the pursey / am families for the limits 0 and -1)"
                )
        if fam in (Family.SCARF2, Family.SCARF2_EXT):
            if self.a is None or self.b is None:
                raise DomainError(f"{fam.value}: both a and b are required")
            if not (np.isfinite(self.a) and np.isfinite(self.b)):
                raise DomainError(f"{fam.value}: a and b must be finite")
        if fam is Family.SCARF2_EXT:
            if int(self.m) != self.m or self.m < 0:
                raise DomainError(f"scarf2ext: m must be a non-negative integer, got {self.m}")
            object.__setattr__(self, "m", int(self.m))
        if self.parametric and fam not in (Family.SCARF2, Family.SCARF2_EXT):
            raise DomainError("the parametric flag applies only to scarf2 / scarf2ext")
        if self.branch not in BRANCHES:
            raise DomainError(f"branch must be one of {BRANCHES}, got {self.branch!r}")
        if fam is Family.PARTNER:
            if self.base is None:
                raise DomainError("partner: a base spec is required")
            if self.base.family not in (Family.REAL_SECH, Family.SCARF2, Family.ISOSPECTRAL):
                raise DomainError(f"partner: no superpotential for family {self.base.family.value}")
            if self.branch == "parametric" and self.base.family is not Family.SCARF2:
                raise DomainError("partner: the parametric branch exists only for scarf2")

    # constructors -------------------------------------------------------
    @classmethod
    def real_sech(cls, N: int) -> "PotentialSpec":
        return cls(Family.REAL_SECH, N=N)

    @classmethod
    def scarf2(cls, a: float, b: float, parametric: bool = False) -> "PotentialSpec":
        return cls(Family.SCARF2, a=float(a), b=float(b), parametric=parametric)

    @classmethod
    def scarf2_extended(cls, a: float, b: float, m: int, parametric: bool = False) -> "PotentialSpec":
        return cls(Family.SCARF2_EXT, a=float(a), b=float(b), m=m, parametric=parametric)

    @classmethod
    def isospectral(cls, N: int, lam: float) -> "PotentialSpec":
        return cls(Family.ISOSPECTRAL, N=N, lam=float(lam))

    @classmethod
    def pursey(cls, N: int) -> "PotentialSpec":
        return cls(Family.PURSEY, N=N)

    @classmethod
    def abraham_moses(cls, N: int) -> "PotentialSpec":
        return cls(Family.ABRAHAM_MOSES, N=N)

    @classmethod
    def partner_of(cls, base: "PotentialSpec", branch: str = "normal") -> "PotentialSpec":
        return cls(Family.PARTNER, base=base, branch=branch)

    @property
    def eigen_branch(self) -> str:
        """Which Scarf-II eigen-branch (normal/parametric) this spec uses."""
        if self.family is Family.PARTNER:
            return self.branch
        return "parametric" if self.parametric else "normal"

    def to_dict(self) -> dict:
        d = {"family": self.family.value}
        for name in ("N", "a", "b", "lam"):
            v = getattr(self, name)
            if v is not None:
                d[name] = v
        if self.family is Family.SCARF2_EXT:
            d["m"] = self.m
        if self.family in (Family.SCARF2, Family.SCARF2_EXT):
            d["parametric"] = self.parametric
        if self.family is Family.PARTNER:
            d["base"] = self.base.to_dict()
            d["branch"] = self.branch
        return d


@dataclass
class GridFunction:
    """Complex samples on a uniform grid x0, x0 + dx, ..."""

    x0: float
    dx: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if not self.dx > 0:
            raise ValueError("dx must be positive")
        if self.values.ndim != 1 or self.values.size < 2:
            raise ValueError("a grid function needs at least two samples")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("grid values must be finite")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.values.size)

    def __len__(self):
        return self.values.size


def _sech(x):
    return 1.0 / np.cosh(x)


def effective_scarf_params(a: float, b: float, parametric: bool) -> tuple[float, float]:
    """(a, b) -> (b - 1/2, a + 1/2) on the parametric branch."""
    if parametric:
        return b - 0.5, a + 0.5
    return a, b


def eval_real_sech(N: int, x):
    """-N(N+1) sech^2 x."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return -N * (N + 1) * _sech(np.asarray(x, dtype=float)) ** 2


def eval_scarf2(a: float, b: float, x):
    """Complex PT-symmetric Scarf-II potential
    -[b^2 + a(a+1)] sech^2 x + i b (2a+1) sech x tanh x."""
    x = np.asarray(x, dtype=float)
    s = _sech(x)
    return (-(b * b + a * (a + 1.0)) * s * s + 1j * b * (2.0 * a + 1.0) * s * np.tanh(x))[()]


def eval_scarf2_parametric(a: float, b: float, x):
    """Scarf-II with (a, b) -> (b - 1/2, a + 1/2); identical to eval_scarf2."""
    return eval_scarf2(b - 0.5, a + 0.5, x)


def _check_denominator(den, x, what):
    bad = np.abs(den) < SINGULAR_TOL
    if np.any(bad):
        idx = int(np.flatnonzero(np.atleast_1d(bad))[0])
        xv = float(np.atleast_1d(x)[idx])
        raise SingularPointError(f"{what} vanishes at x = {xv!r} (index {idx})", x=xv, index=idx)


def eval_scarf2_extended(a: float, b: float, m: int, x, parametric: bool = False):
    """Rationally extended Scarf-II potential V_{m,ext}(x, a, b).

    V + 2m(2b-m+1) + (2b-m+1)[(-2a-1) + (2b+1) z] r - (2b-m+1)^2 cosh^2 x r^2 / 2
    with z = i sinh x and r = P_{m-1}^{(-alpha,beta)}(z) / P_m^{(-alpha-1,beta-1)}(z),
    alpha = b - a - 1/2, beta = -b - a - 1/2. For ``parametric`` the
    substitution a -> b - 1/2, b -> a + 1/2 is applied first.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    a, b = effective_scarf_params(a, b, parametric)
    x = np.asarray(x, dtype=float)
    base = eval_scarf2(a, b, x)
    if m == 0:
        return base
    num, den_poly = extension_polynomials(a, b, m)
    z = 1j * np.sinh(x)
    den = den_poly(z)
    _check_denominator(den, x, "extension denominator P_m")
    return (base + num(z) / (den * den))[()]


def extension_polynomials(a: float, b: float, m: int):
    """Numerator and denominator polynomials (in z = i sinh x) of the
    rational part of the extended potential, correction = num(z) / den(z)^2.

    With cosh^2 x = 1 - z^2 the correction collapses to
    [2m c P_m^2 + c((-2a-1) + (2b+1) z) P_{m-1} P_m - c^2 (1 - z^2) P_{m-1}^2 / 2] / P_m^2,
    c = 2b - m + 1. The correction decays at infinity, so numerator terms of
    degree >= 2 deg P_m are cancellation residue and are dropped when they
    sit at rounding level.
    """
    alpha = b - a - 0.5
    beta = -b - a - 0.5
    Poly = np.polynomial.Polynomial
    pm = jacobi_coefficients(m, (-alpha - 1.0, beta - 1.0))
    pm1 = jacobi_coefficients(m - 1, (-alpha, beta))
    c = 2.0 * b - m + 1.0
    num = (2.0 * m * c) * pm * pm + c * Poly([-2.0 * a - 1.0, 2.0 * b + 1.0]) * pm1 * pm \
        - (0.5 * c * c) * Poly([1.0, 0.0, -1.0]) * pm1 * pm1
    coef = np.array(num.coef, dtype=float)
    keep = 2 * pm.degree()
    scale = np.max(np.abs(coef)) if coef.size else 0.0
    if coef.size > keep and np.all(np.abs(coef[keep:]) <= 1e-10 * max(scale, 1.0)):
        coef = coef[:keep] if keep > 0 else np.zeros(1)
    return Poly(coef), pm


def extension_poles(a: float, b: float, m: int, parametric: bool = False,
                    tol: float = 1e-9) -> np.ndarray:
    """Real x where the extension denominator P_m(i sinh x) vanishes.

    Roots z of the denominator polynomial with |Re z| <= tol sit on the real
    x axis at x = asinh(Im z). An empty array means the potential is regular.
    """
    if m == 0:
        return np.zeros(0)
    a, b = effective_scarf_params(a, b, parametric)
    _, den = extension_polynomials(a, b, m)
    if den.degree() < 1:
        return np.zeros(0)
    roots = den.roots()
    hits = roots[np.abs(roots.real) <= tol * np.maximum(1.0, np.abs(roots))]
    return np.sort(np.arcsinh(hits.imag))


def eval_isospectral_family(N: int, lam: float, x):
    """-N(N+1) sech^2 x - 2 d^2/dx^2 ln(I(x) + lam), derivatives analytic.

    ``lam`` in {0, -1} is forwarded to :func:`eval_pursey_am`.
    """
    if lam == 0.0:
        return eval_pursey_am(N, "pursey", x)
    if lam == -1.0:
        return eval_pursey_am(N, "am", x)
    if -1.0 < lam < 0.0:
        raise DomainError(f"lambda must be > 0 or < -1, got {lam}")
    return _deformed(N, lam, x)


def _deformed(N, lam, x):
    x = np.asarray(x, dtype=float)
    _, second = realwell.log_derivatives(N, x, lam)
    return (eval_real_sech(N, x) - 2.0 * second)[()]


def eval_pursey_am(N: int, which: str, x):
    """Pursey (lambda = 0) or Abraham-Moses (lambda = -1) potential."""
    if which == "pursey":
        return _deformed(N, 0.0, x)
    if which == "am":
        return _deformed(N, -1.0, x)
    raise DomainError(f"which must be 'pursey' or 'am', got {which!r}")


def partner_potential(spec: PotentialSpec, x, branch: Optional[str] = None):
    """SUSY partner V^{(2)} = W^2 + W' + E_0 of the base potential.

    Accepts either a ``partner`` spec or a base spec plus ``branch``.
    Closed forms: -N(N-1) sech^2 for the real well (any lambda),
    Scarf-II with a -> a-1 on the normal branch, and
    -((b-1)^2 + a(a+1)) sech^2 + i (b-1)(2a+1) sech tanh on the parametric one.
    """
    if spec.family is Family.PARTNER:
        base, branch = spec.base, spec.branch
    else:
        base = spec
        branch = branch or base.eigen_branch
        PotentialSpec.partner_of(base, branch)  # validates
    x = np.asarray(x, dtype=float)
    if base.family in (Family.REAL_SECH, Family.ISOSPECTRAL):
        return (-base.N * (base.N - 1.0) * _sech(x) ** 2 + 0j)[()]
    a, b = base.a, base.b
    if branch == "normal":
        return eval_scarf2(a - 1.0, b, x)
    s = _sech(x)
    return (
        -((b - 1.0) ** 2 + a * (a + 1.0)) * s * s
        + 1j * (b - 1.0) * (2.0 * a + 1.0) * s * np.tanh(x)
    )[()]


def evaluate(spec: PotentialSpec, x):
    """Evaluate any spec at x; always returns complex values."""
    fam = spec.family
    if fam is Family.REAL_SECH:
        out = eval_real_sech(spec.N, x) + 0j
    elif fam is Family.SCARF2:
        out = eval_scarf2(spec.a, spec.b, x)
    elif fam is Family.SCARF2_EXT:
        out = eval_scarf2_extended(spec.a, spec.b, spec.m, x, spec.parametric)
    elif fam is Family.ISOSPECTRAL:
        out = eval_isospectral_family(spec.N, spec.lam, x) + 0j
    elif fam is Family.PURSEY:
        out = eval_pursey_am(spec.N, "pursey", x) + 0j
    elif fam is Family.ABRAHAM_MOSES:
        out = eval_pursey_am(spec.N, "am", x) + 0j
    else:
        out = partner_potential(spec, x)
    return np.asarray(out, dtype=complex)[()]


def sample(spec: PotentialSpec, x0: float, dx: float, count: int) -> GridFunction:
    """Sample ``spec`` at x0 + j*dx, j = 0..count-1."""
    if not dx > 0:
        raise DomainError("dx must be positive")
    if count < 2:
        raise DomainError("count must be >= 2")
    x = x0 + dx * np.arange(count)
    return GridFunction(x0, dx, evaluate(spec, x))
