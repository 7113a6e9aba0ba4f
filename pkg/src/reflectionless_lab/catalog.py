"""Enumeration of the reflectionless PT-symmetric Scarf-II potentials with
N bound states: the conventional half-integer (case A) and integer (case B)
pairs, plus their rational X_m extensions on both eigen-branches.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .potentials import PotentialSpec, evaluate, extension_poles

__all__ = [
    "BranchValidity",
    "SpectrumSplit",
    "CatalogEntry",
    "conventional_pairs",
    "spectrum_split",
    "branch_validity",
    "combined_levels",
    "enumerate_catalog",
    "expected_count",
    "distinct_potentials",
]


@dataclass(frozen=True)
class BranchValidity:
    normal: bool
    parametric: bool


@dataclass(frozen=True)
class SpectrumSplit:
    from_normal: int
    from_parametric: int

    @property
    def total(self) -> int:
        return self.from_normal + self.from_parametric


@dataclass(frozen=True)
class CatalogEntry:
    spec: PotentialSpec
    case_label: str
    n_bound: int
    branch_validity: BranchValidity
    spectrum_split: SpectrumSplit
    pair: tuple[Fraction, Fraction]
    regular: bool = True

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "case_label": self.case_label,
            "pair": [str(self.pair[0]), str(self.pair[1])],
            "n_bound": self.n_bound,
            "branch_validity": {"normal": self.branch_validity.normal,
                                "parametric": self.branch_validity.parametric},
            "spectrum_split": {"from_normal": self.spectrum_split.from_normal,
                               "from_parametric": self.spectrum_split.from_parametric},
            "regular": self.regular,
        }


def conventional_pairs(N: int) -> list[tuple[str, Fraction, Fraction]]:
    """Case A pairs [(2N-1)/2, 1/2], ..., [1/2, (2N-1)/2] followed by the
    case B pairs [N-1, 1], ..., [0, N], as exact fractions."""
    if N < 1:
        raise ValueError("N must be >= 1")
    half = Fraction(1, 2)
    case_a = [("A", Fraction(2 * N - 1 - 2 * j, 2), half + j) for j in range(N)]
    case_b = [("B", Fraction(N - 1 - j), Fraction(1 + j)) for j in range(N)]
    return case_a + case_b


def _count_below(depth) -> int:
    # number of integers n >= 0 with n < depth
    return max(0, math.ceil(depth))


def spectrum_split(a, b) -> SpectrumSplit:
    """Bound states per eigen-branch: n < a (normal) and n < b - 1/2 (parametric)."""
    a, b = Fraction(a), Fraction(b)
    return SpectrumSplit(_count_below(a), _count_below(b - Fraction(1, 2)))


def combined_levels(a, b) -> set[Fraction]:
    """Union of {-(a-n)^2} and {-(b-1/2-n)^2} in exact arithmetic."""
    a, b = Fraction(a), Fraction(b)
    split = spectrum_split(a, b)
    levels = {-(a - n) ** 2 for n in range(split.from_normal)}
    c = b - Fraction(1, 2)
    levels |= {-(c - n) ** 2 for n in range(split.from_parametric)}
    return levels


def branch_validity(a, b) -> BranchValidity:
    """The normal branch needs a > 0, the parametric one b > 1/2."""
    return BranchValidity(Fraction(a) > 0, Fraction(b) > Fraction(1, 2))


def expected_count(N: int, m: int) -> int:
    return 2 * ((2 * N - 1) * m + N)


def enumerate_catalog(N: int, m: int) -> list[CatalogEntry]:
    """All reflectionless Scarf-II entries with N bound states up to extension order m.

    m = 0 gives the 2N conventional pairs. Each order 1..m adds a normal and
    a parametric extended entry per pair, except that [(2N-1)/2, 1/2] has no
    parametric and [0, N] no normal extension (that branch holds no bound
    states). Length: 2[(2N-1)m + N].
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    entries = []
    pairs = conventional_pairs(N)
    for label, a, b in pairs:
        valid = branch_validity(a, b)
        # conventional potentials are branch invariant; tag [0, N] parametric
        spec = PotentialSpec.scarf2(float(a), float(b), parametric=not valid.normal)
        entries.append(CatalogEntry(spec, label, N, valid, spectrum_split(a, b), (a, b)))
    for order in range(1, m + 1):
        for label, a, b in pairs:
            valid = branch_validity(a, b)
            for parametric, ok in ((False, valid.normal), (True, valid.parametric)):
                if not ok:
                    continue
                spec = PotentialSpec.scarf2_extended(float(a), float(b), order, parametric)
                regular = extension_poles(float(a), float(b), order, parametric).size == 0
                entries.append(CatalogEntry(spec, label, N, valid, spectrum_split(a, b),
                                            (a, b), regular))
    return entries


def distinct_potentials(entries: list[CatalogEntry], x=None, tol: float = 1e-13) -> list[list[CatalogEntry]]:
    """Group entries whose potentials agree pointwise on a probe grid.

    The conventional potentials pair up under (a, b) <-> (b - 1/2, a + 1/2),
    which maps each case A pair onto a case B pair; this view exposes that
    degeneracy without dropping entries from the count.
    """
    if x is None:
        x = np.linspace(-5.0, 5.0, 201)
    groups: list[tuple[np.ndarray, list[CatalogEntry]]] = []
    for e in entries:
        v = np.asarray(evaluate(e.spec, x))
        for ref, members in groups:
            if np.max(np.abs(v - ref)) <= tol * max(1.0, np.max(np.abs(ref))):
                members.append(e)
                break
        else:
            groups.append((v, [e]))
    return [members for _, members in groups]
