"""Curve definitions for the N = 3 illustration figures.

Each figure is a list of named curves; a curve is either a potential or a
normalized bound state sampled on a uniform grid. Potentials default to
x in [-5, 5], wavefunctions to [-10, 10].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .potentials import PotentialSpec, evaluate
from .spectra import eigenfunction

__all__ = ["Curve", "FIGURES", "figure_curves", "sample_curve", "POTENTIAL_GRID", "WAVEFUNCTION_GRID"]

POTENTIAL_GRID = (-5.0, 5.0, 1001)
WAVEFUNCTION_GRID = (-10.0, 10.0, 2001)

HALF = [(2.5, 0.5), (1.5, 1.5), (0.5, 2.5)]
INTEGER = [(2.0, 1.0), (1.0, 2.0), (0.0, 3.0)]


@dataclass(frozen=True)
class Curve:
    label: str
    kind: str            # "potential" or "wavefunction"
    spec: PotentialSpec
    n: int = 0

    def function(self) -> Callable:
        if self.kind == "potential":
            return lambda x: evaluate(self.spec, x)
        return eigenfunction(self.spec, self.n).wavefunction


def _pot(label, spec):
    return Curve(label, "potential", spec)


def _psi(label, spec, n=0):
    return Curve(label, "wavefunction", spec, n)


def _tag(a, b):
    return f"a={a:g},b={b:g}"


def _fig1a():
    out = [_pot(f"lambda={lam:g}", PotentialSpec.isospectral(3, lam)) for lam in (0.1, 0.01, 0.0001)]
    return out + [_pot("pursey", PotentialSpec.pursey(3)), _pot("lambda=inf", PotentialSpec.real_sech(3))]


def _fig1b():
    out = [_pot(f"lambda={lam:g}", PotentialSpec.isospectral(3, lam)) for lam in (-1.1, -1.01, -1.0001)]
    return out + [_pot("am", PotentialSpec.abraham_moses(3)), _pot("lambda=-inf", PotentialSpec.real_sech(3))]


def _fig1c():
    return [_pot("pursey", PotentialSpec.pursey(3)),
            _pot("am", PotentialSpec.abraham_moses(3)),
            _pot("partner", PotentialSpec.partner_of(PotentialSpec.real_sech(3)))]


def _fig1d():
    out = [_psi(f"lambda={lam:g}", PotentialSpec.isospectral(3, lam)) for lam in (0.1, 0.01, 0.001)]
    return out + [_psi("lambda=inf", PotentialSpec.real_sech(3))]


def _fig2():
    return [_pot(_tag(a, b), PotentialSpec.scarf2(a, b)) for a, b in HALF + INTEGER]


def _fig3():
    pairs = HALF + INTEGER[:2]
    return [_psi(_tag(a, b), PotentialSpec.scarf2(a, b)) for a, b in pairs]


def _fig4():
    pairs = HALF[1:] + INTEGER
    return [_psi(_tag(a, b), PotentialSpec.scarf2(a, b, parametric=True)) for a, b in pairs]


def _fig5():
    out = []
    for a, b in [(0.5, 2.5), (2.0, 1.0)]:
        out.append(_psi(_tag(a, b) + ",normal", PotentialSpec.scarf2(a, b)))
        out.append(_psi(_tag(a, b) + ",parametric", PotentialSpec.scarf2(a, b, parametric=True)))
    return out


def _extended(parametric):
    out = []
    for a, b in HALF + INTEGER:
        if (not parametric and a <= 0) or (parametric and b <= 0.5):
            continue
        spec = PotentialSpec.scarf2_extended(a, b, 1, parametric)
        out += [_pot(_tag(a, b), spec), _psi(_tag(a, b), spec)]
    return out


def _fig8():
    out = []
    for a, b in [(1.5, 1.5), (2.0, 1.0)]:
        for parametric in (False, True):
            spec = PotentialSpec.scarf2_extended(a, b, 1, parametric)
            tag = _tag(a, b) + (",parametric" if parametric else ",normal")
            out += [_pot(tag, spec), _psi(tag, spec)]
    return out


FIGURES = {
    "1a": _fig1a, "1b": _fig1b, "1c": _fig1c, "1d": _fig1d,
    "2": _fig2, "3": _fig3, "4": _fig4, "5": _fig5,
    "6": lambda: _extended(False), "7": lambda: _extended(True), "8": _fig8,
}


def figure_curves(fig: str) -> list[Curve]:
    if fig not in FIGURES:
        raise KeyError(f"unknown figure {fig!r}; choose from {sorted(FIGURES)}")
    return FIGURES[fig]()


def sample_curve(curve: Curve, grid=None) -> tuple[np.ndarray, np.ndarray]:
    lo, hi, points = grid or (POTENTIAL_GRID if curve.kind == "potential" else WAVEFUNCTION_GRID)
    x = np.linspace(lo, hi, points)
    return x, np.asarray(curve.function()(x), dtype=complex) * np.ones_like(x)
