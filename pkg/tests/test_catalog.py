from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from reflectionless_lab.catalog import (
    branch_validity,
    combined_levels,
    conventional_pairs,
    distinct_potentials,
    enumerate_catalog,
    expected_count,
    spectrum_split,
)
from reflectionless_lab.potentials import Family, PotentialSpec, evaluate
from reflectionless_lab.scattering import analytic_amplitudes
from reflectionless_lab.spectra import bound_energies


@pytest.mark.parametrize("N", range(1, 7))
@pytest.mark.parametrize("m", range(0, 5))
def test_catalog_size(N, m):
    assert len(enumerate_catalog(N, m)) == expected_count(N, m) == 2 * ((2 * N - 1) * m + N)


def test_n3_conventional_pairs():
    got = [(a, b) for _, a, b in conventional_pairs(3)]
    assert got == [(F(5, 2), F(1, 2)), (F(3, 2), F(3, 2)), (F(1, 2), F(5, 2)),
                   (F(2), F(1)), (F(1), F(2)), (F(0), F(3))]
    entries = enumerate_catalog(3, 0)
    assert [e.pair for e in entries] == got
    assert [e.case_label for e in entries] == list("AAABBB")


def test_n1_pairs():
    assert [(a, b) for _, a, b in conventional_pairs(1)] == [(F(1, 2), F(1, 2)), (F(0), F(1))]


@pytest.mark.parametrize("pair,split", [
    ((F(5, 2), F(1, 2)), (3, 0)),
    ((F(3, 2), F(3, 2)), (2, 1)),
    ((F(0), F(3)), (0, 3)),
    ((F(2), F(1)), (2, 1)),
])
def test_spectrum_split(pair, split):
    s = spectrum_split(*pair)
    assert (s.from_normal, s.from_parametric) == split
    assert s.total == 3


@pytest.mark.parametrize("N", range(1, 7))
def test_every_pair_has_n_levels(N):
    for _, a, b in conventional_pairs(N):
        assert spectrum_split(a, b).total == N
        assert len(combined_levels(a, b)) == N


def test_branch_validity_edges():
    assert branch_validity(F(5, 2), F(1, 2)).parametric is False
    assert branch_validity(0, 3).normal is False
    v = branch_validity(F(3, 2), F(3, 2))
    assert v.normal and v.parametric


def test_entries_are_reflectionless_and_regular():
    for e in enumerate_catalog(3, 2):
        assert e.regular
        assert analytic_amplitudes(e.spec, 1.1).R == 0j
        assert e.n_bound == 3


def test_branch_spectra_add_up():
    for e in enumerate_catalog(3, 0):
        a, b = float(e.pair[0]), float(e.pair[1])
        normal = bound_energies(PotentialSpec.scarf2(a, b))
        para = bound_energies(PotentialSpec.scarf2(a, b, parametric=True))
        assert (len(normal), len(para)) == (e.spectrum_split.from_normal, e.spectrum_split.from_parametric)


def test_extended_entries_per_order():
    entries = enumerate_catalog(3, 2)
    ext = [e for e in entries if e.spec.family is Family.SCARF2_EXT]
    for order in (1, 2):
        assert sum(e.spec.m == order for e in ext) == 2 * (2 * 3 - 1)


def test_conventional_degeneracy():
    # each case A potential equals its case B image under the parametric map
    groups = distinct_potentials(enumerate_catalog(3, 0))
    assert len(groups) == 3
    for g in groups:
        assert sorted(e.case_label for e in g) == ["A", "B"]


def test_extended_degeneracy():
    groups = distinct_potentials(enumerate_catalog(3, 1))
    assert len(groups) == 8
    x = np.linspace(-5, 5, 101)
    for g in groups:
        ref = evaluate(g[0].spec, x)
        for e in g[1:]:
            assert np.max(np.abs(evaluate(e.spec, x) - ref)) < 1e-12


def test_to_dict_is_json_ready():
    import json
    d = enumerate_catalog(2, 1)[3].to_dict()
    assert json.loads(json.dumps(d)) == d
    assert set(d) >= {"spec", "pair", "branch_validity", "spectrum_split", "regular"}


@given(st.integers(-10, 10), st.integers(-10, 10))
def test_split_counts_integers_below_depth(two_a, two_b):
    a, b = F(two_a, 2), F(two_b, 2)
    s = spectrum_split(a, b)
    assert s.from_normal == sum(1 for n in range(12) if n < a)
    assert s.from_parametric == sum(1 for n in range(12) if n < b - F(1, 2))


def test_bad_arguments():
    with pytest.raises(ValueError):
        conventional_pairs(0)
    with pytest.raises(ValueError):
        enumerate_catalog(2, -1)
