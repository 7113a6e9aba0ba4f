"""Verification suites shared by the CLI and the test-suite.

Every suite returns a list of :class:`Check` records: a name, the measured
value, the tolerance it is held to and the verdict. Sweeps over (spec, k)
run on a thread pool capped by the REFLECTIONLESS_LAB_THREADS environment
variable.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import catalog, realwell, scattering, specfun, spectra, susyqm
from .potentials import PotentialSpec, evaluate, eval_pursey_am, eval_scarf2, eval_scarf2_extended

__all__ = [
    "Check",
    "SUITES",
    "run_suite",
    "n3_state_matrix",
    "n3_scattering_specs",
    "thread_count",
    "parallel_map",
]

N3_PAIRS = [(2.5, 0.5), (1.5, 1.5), (0.5, 2.5), (2.0, 1.0), (1.0, 2.0), (0.0, 3.0)]
N3_LAMBDAS = (0.1, 5.0, -1.1, -5.0)
CERT_K = (0.5, 1.0, 2.0, 4.0)
CONTROLS = [(1.3, 0.4), (0.7, 1.2)]
CONTROL_K = (0.5, 1.0, 2.0)


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["value"] = float(self.value)
        return d


def _le(name, value, tol) -> Check:
    value = float(value)
    return Check(name, value, tol, bool(value <= tol))


def _eq(name, got, want) -> Check:
    # exact comparison, value is 0 on success
    return Check(name, 0.0 if got == want else 1.0, 0.0, got == want)


def thread_count() -> int:
    env = os.environ.get("REFLECTIONLESS_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def parallel_map(fn: Callable, items: Iterable) -> list:
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# test matrices ------------------------------------------------------------

def _valid_branches(a, b):
    v = catalog.branch_validity(Fraction(a), Fraction(b))
    return [p for p, ok in ((False, v.normal), (True, v.parametric)) if ok]


def n3_state_matrix() -> list[tuple[str, PotentialSpec]]:
    """All N = 3 specs whose closed-form eigenstates are checked."""
    out = [("realsech", PotentialSpec.real_sech(3)),
           ("pursey", PotentialSpec.pursey(3)),
           ("am", PotentialSpec.abraham_moses(3)),
           ("partner(realsech)", PotentialSpec.partner_of(PotentialSpec.real_sech(3)))]
    for lam in N3_LAMBDAS:
        out.append((f"isofamily(lam={lam:g})", PotentialSpec.isospectral(3, lam)))
    for a, b in N3_PAIRS:
        for par in _valid_branches(a, b):
            br = "parametric" if par else "normal"
            out.append((f"scarf2({a:g},{b:g},{br})", PotentialSpec.scarf2(a, b, par)))
            out.append((f"scarf2ext({a:g},{b:g},m=1,{br})", PotentialSpec.scarf2_extended(a, b, 1, par)))
            out.append((f"partner(scarf2({a:g},{b:g}),{br})",
                        PotentialSpec.partner_of(PotentialSpec.scarf2(a, b), br)))
    return out


def n3_scattering_specs(m_max: int = 1) -> list[tuple[str, PotentialSpec]]:
    """Catalog entries for N = 3 up to order m_max plus the real families."""
    out = []
    for e in catalog.enumerate_catalog(3, m_max):
        br = e.spec.eigen_branch
        out.append((f"catalog({e.pair[0]},{e.pair[1]},m={e.spec.m},{br})", e.spec))
    out += [("realsech", PotentialSpec.real_sech(3)),
            ("pursey", PotentialSpec.pursey(3)),
            ("am", PotentialSpec.abraham_moses(3))]
    out += [(f"isofamily(lam={lam:g})", PotentialSpec.isospectral(3, lam)) for lam in (0.1, 5.0, -1.1)]
    return out


# individual groups ----------------------------------------------------------

def spectrum_checks() -> list[Check]:
    E = spectra.bound_energies
    return [
        _eq("spectrum:realsech(3)", E(PotentialSpec.real_sech(3)), [-9.0, -4.0, -1.0]),
        _eq("spectrum:pursey(3)", E(PotentialSpec.pursey(3)), [-4.0, -1.0]),
        _eq("spectrum:am(3)", E(PotentialSpec.abraham_moses(3)), [-4.0, -1.0]),
    ]


def residual_checks(tol: float = 1e-6) -> list[Check]:
    jobs = []
    for label, spec in n3_state_matrix():
        for n, energy in enumerate(spectra.bound_energies(spec)):
            jobs.append((label, spec, n, energy))

    def run(job):
        label, spec, n, energy = job
        st = spectra.eigenfunction(spec, n)
        r = spectra.schrodinger_residual(lambda x: evaluate(spec, x), energy, st.wavefunction)
        return _le(f"residual:{label}:n={n}", r, tol)

    return parallel_map(run, jobs)


def isospectral_checks() -> list[Check]:
    x = np.linspace(-8.0, 8.0, 1000)
    s, t = 1.0 / np.cosh(x), np.tanh(x)
    closed = (8.0 + (8.0 + 4.0 * s**2 + 3.0 * s**4) * t) / 16.0
    out = [_le("I(x):N=3 closed form", np.max(np.abs(realwell.isospectral_integral(3, x) - closed)), 1e-13)]
    for lam in (0.1, 5.0, -1.1):
        W = susyqm.superpotential(PotentialSpec.isospectral(3, lam))
        v2 = W.w(x) ** 2 + W.dw(x) + W.ground_energy
        out.append(_le(f"partner of isofamily(lam={lam:g}) = -6 sech^2",
                       np.max(np.abs(v2 + 6.0 * s**2)), 1e-8))
    for lam in N3_LAMBDAS:
        d = 8.0 + 16.0 * lam + (8.0 + 4.0 * s**2 + 3.0 * s**4) * t
        psi = 4.0 * np.sqrt(15.0 * lam * (lam + 1.0)) * s**3 / d
        got = spectra.eigenfunction(PotentialSpec.isospectral(3, lam), 0)(x)
        out.append(_le(f"isofamily ground state(lam={lam:g}) closed form", np.max(np.abs(got - psi)), 1e-12))
        v = 6.0 * s**2 * (-2.0 + 15.0 * s**4 * ((1.0 + 3.0 * np.cosh(2 * x) + np.cosh(4 * x)) * s**6
                                                 + 16.0 * t * (1.0 + 2.0 * lam + t)) / d**2)
        out.append(_le(f"isofamily potential(lam={lam:g}) closed form",
                       np.max(np.abs(evaluate(PotentialSpec.isospectral(3, lam), x) - v)), 1e-10))
    for sg, kind in ((1.0, "pursey"), (-1.0, "am")):
        num = 25 * np.cosh(2 * x) + 13 * np.cosh(4 * x) - sg * 3 * (-sg * 5 + 5 * np.sinh(2 * x) + 4 * np.sinh(4 * x))
        den = (5 + 11 * np.cosh(2 * x) - sg * 9 * np.sinh(2 * x)) ** 2
        out.append(_le(f"{kind}(3) closed form", np.max(np.abs(-24 * s**2 * num / den - eval_pursey_am(3, kind, x))), 1e-10))
    return out


def susy_checks() -> list[Check]:
    out = []
    base = PotentialSpec.real_sech(3)
    psi1 = spectra.eigenfunction(base, 1)
    psi2 = spectra.eigenfunction(PotentialSpec.partner_of(base), 0)
    gap = psi1.energy - spectra.bound_energies(base)[0]
    a_psi = susyqm.apply_A(base, None, psi1)
    x = np.linspace(-12.0, 12.0, 2401)
    ref = np.sqrt(gap) * psi2(x)
    out.append(_le("A psi_1 = sqrt(E1-E0) psi^(2)_0 (realsech 3)",
                   np.linalg.norm(a_psi(x) - ref) / np.linalg.norm(ref), 1e-6))
    x = np.linspace(-10.0, 10.0, 801)
    for a, b in [(2.0, 1.0), (1.5, 1.5)]:
        for br in ("normal", "parametric"):
            W = susyqm.superpotential(PotentialSpec.scarf2(a, b), br)
            v1 = W.w(x) ** 2 - W.dw(x) + W.ground_energy
            v2 = W.w(x) ** 2 + W.dw(x) + W.ground_energy
            part = evaluate(PotentialSpec.partner_of(PotentialSpec.scarf2(a, b), br), x)
            out.append(_le(f"factorization scarf2({a:g},{b:g},{br})",
                           np.max(np.abs(v1 - eval_scarf2(a, b, x))), 1e-12))
            out.append(_le(f"partner closed form scarf2({a:g},{b:g},{br})",
                           np.max(np.abs(v2 - part)), 1e-12))
    return out


def parametric_checks() -> list[Check]:
    x = np.linspace(-5.0, 5.0, 1001)
    out = []
    for a, b in N3_PAIRS + CONTROLS:
        d = np.max(np.abs(eval_scarf2(a, b, x) - eval_scarf2(b - 0.5, a + 0.5, x)))
        out.append(_le(f"parametric invariance scarf2({a:g},{b:g})", d, 1e-13))
    d = np.max(np.abs(eval_scarf2_extended(2.0, 1.0, 1, x) - eval_scarf2_extended(2.0, 1.0, 1, x, parametric=True)))
    out.append(Check("extended (2,1) m=1 breaks parametric symmetry", d, 0.1, bool(d > 0.1)))
    # m = 1 general evaluator against its explicit specialisation
    for a, b in [(2.0, 1.0), (1.5, 1.5), (0.7, 1.2)]:
        u = -2j * b * np.sinh(x) + 2 * a + 1
        m1 = eval_scarf2(a, b, x) - 2 * (2 * a + 1) / u + 2 * ((2 * a + 1) ** 2 - 4 * b * b) / u**2
        out.append(_le(f"extended m=1 explicit form ({a:g},{b:g})",
                       np.max(np.abs(eval_scarf2_extended(a, b, 1, x) - m1)), 1e-12))
    return out


def count_checks(N_values: Iterable[int] = range(1, 7), m_values: Iterable[int] = range(0, 5)) -> list[Check]:
    out = []
    for N in N_values:
        for m in m_values:
            entries = catalog.enumerate_catalog(N, m)
            out.append(_eq(f"count N={N} m={m} ({catalog.expected_count(N, m)})",
                           len(entries), catalog.expected_count(N, m)))
            ok = all(len(catalog.combined_levels(*e.pair)) == N
                     and e.spectrum_split.total == N for e in entries)
            out.append(_eq(f"combined spectrum N={N} m={m}", ok, True))
            out.append(_eq(f"extended entries regular N={N} m={m}", all(e.regular for e in entries), True))
    pairs = [(float(a), float(b)) for _, a, b in catalog.conventional_pairs(3)]
    out.append(_eq("N=3 conventional pairs", pairs, N3_PAIRS))
    return out


def specfun_checks(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    z = rng.uniform(-6, 6, 200) + 1j * rng.uniform(-6, 6, 200)
    g = specfun.gamma_complex
    rec = np.max(np.abs(g(z + 1) - z * g(z)) / np.abs(z * g(z)))
    zr = z[np.abs(np.sin(np.pi * z)) > 1e-3]
    refl = np.max(np.abs(g(zr) * g(1 - zr) * np.sin(np.pi * zr) / np.pi - 1.0))
    fact = max(abs(g(n) / math.factorial(n - 1) - 1.0) for n in range(1, 25))
    out = [_le("gamma recurrence", rec, 1e-10), _le("gamma reflection", refl, 1e-10),
           _le("gamma factorials", fact, 1e-12)]
    # three-term recurrence against the explicit sum
    worst = 0.0
    for _ in range(40):
        al, be = rng.uniform(-0.9, 3.0, 2)
        zz = rng.uniform(-1.5, 1.5) + 1j * rng.uniform(-1.5, 1.5)
        P = [1.0 + 0j, 0.5 * (al - be) + 0.5 * (al + be + 2) * zz]
        for n in range(2, 12):
            a1 = 2 * n * (n + al + be) * (2 * n + al + be - 2)
            a2 = (2 * n + al + be - 1) * (al * al - be * be)
            a3 = (2 * n + al + be - 1) * (2 * n + al + be) * (2 * n + al + be - 2)
            a4 = 2 * (n + al - 1) * (n + be - 1) * (2 * n + al + be)
            P.append(((a2 + a3 * zz) * P[-1] - a4 * P[-2]) / a1)
        for n, pn in enumerate(P):
            ref = specfun.jacobi_poly(n, (al, be), zz)
            worst = max(worst, abs(ref - pn) / max(1.0, abs(pn)))
    out.append(_le("jacobi recurrence vs sum", worst, 1e-10))
    k = rng.uniform(0.01, 10.0, 1000)
    b = rng.uniform(-5.0, 5.0, 1000)
    zmax = max(abs(scattering.zeta_factor(0, bi, ki) - 1.0) for bi, ki in zip(b, k))
    out.append(_le("zeta(m=0) = 1", zmax, 1e-13))
    return out


def _cert_job(job):
    label, spec, k = job
    an = scattering.analytic_amplitudes(spec, k)
    nu = scattering.numeric_scatter(spec, k, L=25.0, dx=1e-3)
    return [
        _eq(f"analytic R=0:{label}:k={k:g}", an.R, 0j),
        _le(f"numeric |R|:{label}:k={k:g}", abs(nu.R), 1e-5),
        _le(f"numeric ||T|^2-1|:{label}:k={k:g}", abs(abs(nu.T) ** 2 - 1.0), 1e-5),
        _le(f"numeric vs analytic T:{label}:k={k:g}", abs(nu.T - an.T), 1e-5),
    ]


def certification_checks(k_values=CERT_K, m_max: int = 1) -> list[Check]:
    jobs = [(label, spec, k) for label, spec in n3_scattering_specs(m_max) for k in k_values]
    return [c for group in parallel_map(_cert_job, jobs) for c in group]


def control_checks(k_values=CONTROL_K) -> list[Check]:
    jobs = [(a, b, k, side) for a, b in CONTROLS for k in k_values for side in ("left", "right")]

    def run(job):
        a, b, k, side = job
        spec = PotentialSpec.scarf2(a, b)
        an = scattering.analytic_amplitudes(spec, k, side)
        nu = scattering.numeric_scatter(spec, k, incidence=side)
        tag = f"({a:g},{b:g}):k={k:g}:{side}"
        return [_le(f"control R:{tag}", abs(nu.R - an.R), 1e-3),
                _le(f"control T:{tag}", abs(nu.T - an.T), 1e-3)]

    return [c for group in parallel_map(run, jobs) for c in group]


def real_transmission_checks(numeric: bool = True) -> list[Check]:
    ks = np.linspace(0.2, 5.0, 50)
    worst = max(abs(abs(scattering.analytic_T_real(N, k)) ** 2 - 1.0) for N in range(1, 6) for k in ks)
    out = [_le("|T_real|^2 = 1, N=1..5", worst, 1e-10)]
    if numeric:
        spec = PotentialSpec.real_sech(3)
        errs = parallel_map(lambda k: abs(scattering.numeric_scatter(spec, k).T - scattering.analytic_T_real(3, k)),
                            [0.5, 1.5, 3.0])
        out.append(_le("numeric T_real N=3", max(errs), 1e-5))
    return out


def partner_relation_checks(k_values=(0.5, 1.5)) -> list[Check]:
    cases = [
        ("partner(scarf2(1.3,0.4),normal)", PotentialSpec.scarf2(1.3, 0.4), "normal"),
        ("partner(scarf2(1.3,0.4),parametric)", PotentialSpec.scarf2(1.3, 0.4), "parametric"),
        ("partner(realsech 3)", PotentialSpec.real_sech(3), None),
    ]
    jobs = [(c, k) for c in cases for k in k_values]

    def run(job):
        (label, base, br), k = job
        b_num = scattering.numeric_scatter(base, k)
        p_num = scattering.numeric_scatter(PotentialSpec.partner_of(base, br or "normal"), k)
        pred = scattering.partner_RT(b_num, susyqm.superpotential(base, br), k)
        return [_le(f"partner R:{label}:k={k:g}", abs(pred.R - p_num.R), 1e-4),
                _le(f"partner T:{label}:k={k:g}", abs(pred.T - p_num.T), 1e-4)]

    return [c for group in parallel_map(run, jobs) for c in group]


def extended_amplitude_checks(k_values=(0.5, 1.0, 2.0)) -> list[Check]:
    # (0.7, 1.2) would be a fixed point of (a, b) -> (b - 1/2, a + 1/2); use generic pairs
    out = []
    for a, b in [(1.3, 0.4), (0.6, 1.7)]:
        for k in k_values:
            an = scattering.analytic_RT_extended(a, b, 1, k)
            ap = scattering.analytic_RT_extended(a, b, 1, k, "parametric")
            d = abs(an.T - ap.T)
            out.append(Check(f"extended normal vs parametric T differ ({a:g},{b:g}):k={k:g}",
                             d, 1e-6, bool(d > 1e-6)))
            a0 = scattering.analytic_RT_extended(a, b, 0, k)
            p0 = scattering.analytic_RT_extended(a, b, 0, k, "parametric")
            out.append(_le(f"m=0 normal vs parametric agree ({a:g},{b:g}):k={k:g}",
                           max(abs(a0.T - p0.T), abs(a0.R - p0.R)), 1e-12))
    return out


# suites -------------------------------------------------------------------

def suite_n3(quick: bool = False, **_) -> list[Check]:
    out = spectrum_checks() + residual_checks() + isospectral_checks() + susy_checks() + parametric_checks()
    out += count_checks([3], [0, 1])
    out += certification_checks((1.0,) if quick else CERT_K)
    return out


def suite_count(N: int = 3, m: int = 1, **_) -> list[Check]:
    return count_checks([N], [m])


def suite_scattering(quick: bool = False, **_) -> list[Check]:
    out = certification_checks((1.0, 2.0) if quick else CERT_K)
    out += control_checks((1.0,) if quick else CONTROL_K)
    out += real_transmission_checks(numeric=not quick)
    out += extended_amplitude_checks()
    if not quick:
        out += partner_relation_checks()
    return out


def suite_specfun(**_) -> list[Check]:
    return specfun_checks()


SUITES = {
    "n3": suite_n3,
    "count": suite_count,
    "scattering": suite_scattering,
    "specfun": suite_specfun,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    if name == "all":
        out = []
        for key in ("specfun", "n3", "count", "scattering"):
            out += SUITES[key](**kwargs)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](**kwargs)
