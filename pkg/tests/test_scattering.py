import numpy as np
import pytest
from hypothesis import given, strategies as st

from reflectionless_lab.errors import ConvergenceError, DomainError
from reflectionless_lab.potentials import PotentialSpec
from reflectionless_lab.scattering import (
    analytic_amplitudes,
    analytic_RT_extended,
    analytic_RT_scarf2,
    analytic_T_real,
    extension_degree,
    numeric_scatter,
    partner_RT,
    zeta_factor,
)
from reflectionless_lab.specfun import PoleError
from reflectionless_lab.susyqm import superpotential


def free(x):
    return np.zeros_like(np.asarray(x, dtype=float))


@pytest.mark.parametrize("k", [0.3, 1.0, 3.0])
def test_free_particle(k):
    out = numeric_scatter(free, k, L=5.0, dx=1e-3)
    assert abs(out.R) < 1e-12
    assert abs(out.T - 1) < 1e-12


def test_real_well_numeric():
    spec = PotentialSpec.real_sech(3)
    out = numeric_scatter(spec, 1.5, L=20.0)
    assert abs(out.R) < 1e-8
    assert abs(out.T - analytic_T_real(3, 1.5)) < 1e-6
    assert out.error_estimate is not None and out.error_estimate < 1e-7


@given(st.integers(1, 5), st.floats(0.2, 5.0))
def test_real_well_unitary(N, k):
    assert abs(abs(analytic_T_real(N, k)) ** 2 - 1) < 1e-10


@pytest.mark.parametrize("k", [0.3, 0.8, 2.0])
def test_real_well_n1_closed_form(k):
    # Gamma(z+1) = z Gamma(z) collapses the ratio to (1-ik)/(-1-ik)
    ik = 1j * k
    assert analytic_T_real(1, k) == pytest.approx((1 - ik) / (-1 - ik), abs=1e-12)


def test_scarf_reflectionless_numeric():
    spec = PotentialSpec.scarf2(1.0, 2.0)
    # the sech*tanh tail is still 2.5e-8 at x = 20
    with pytest.raises(DomainError):
        numeric_scatter(spec, 1.0, L=20.0)
    out = numeric_scatter(spec, 1.0, L=20.0, tail_tol=1e-7)
    ana = analytic_amplitudes(spec, 1.0)
    assert ana.R == 0j
    assert abs(out.R) < 1e-6
    assert abs(out.T - ana.T) < 1e-6


@pytest.mark.parametrize("a,b", [(1.3, 0.4), (0.7, 1.2)])
@pytest.mark.parametrize("side", ["left", "right"])
def test_controls_both_sides(a, b, side):
    spec = PotentialSpec.scarf2(a, b)
    for k in (0.5, 2.0):
        num = numeric_scatter(spec, k, incidence=side)
        ana = analytic_RT_scarf2(a, b, k, incidence=side)
        assert abs(ana.R) > 1e-3
        assert abs(num.R - ana.R) < 1e-6
        assert abs(num.T - ana.T) < 1e-6


def test_left_right_differ_for_complex_well():
    # PT symmetry keeps T side-independent but not R
    left = analytic_RT_scarf2(1.3, 0.4, 1.0, incidence="left")
    right = analytic_RT_scarf2(1.3, 0.4, 1.0, incidence="right")
    assert left.T == right.T
    assert abs(left.R - right.R) > 1e-3


@pytest.mark.parametrize("a,b,m,branch", [
    (2.5, 0.5, 2, "normal"),
    (2.0, 1.0, 2, "normal"),
    (1.5, 1.5, 3, "normal"),
    (1.3, 1.0, 2, "normal"),
    (1.3, 0.4, 1, "normal"),
    (0.6, 1.7, 1, "parametric"),
])
def test_extended_matches_numeric(a, b, m, branch):
    spec = PotentialSpec.scarf2_extended(a, b, m, branch == "parametric")
    for k in (0.5, 1.5):
        num = numeric_scatter(spec, k)
        ana = analytic_RT_extended(a, b, m, k, branch)
        assert abs(num.R - ana.R) < 1e-6
        assert abs(num.T - ana.T) < 1e-6


def test_extension_degree_drops_at_degenerate_parameters():
    assert extension_degree(1.3, 0.4, 2) == 2
    assert extension_degree(2.0, 1.0, 2) < 2
    assert extension_degree(1.0, 2.0, 0) == 0


@given(st.integers(0, 6), st.floats(-3, 3), st.floats(0.05, 10))
def test_zeta_unimodular(m, b, k):
    try:
        z = zeta_factor(m, b, k)
    except PoleError:
        return
    assert abs(abs(z) - 1) < 1e-10


@given(st.floats(-5, 5), st.floats(0.01, 20))
def test_zeta_order_zero_is_one(b, k):
    assert abs(zeta_factor(0, b, k) - 1) < 1e-13


@pytest.mark.parametrize("spec", [
    PotentialSpec.partner_of(PotentialSpec.real_sech(3)),
    PotentialSpec.partner_of(PotentialSpec.scarf2(1.3, 0.4)),
    PotentialSpec.partner_of(PotentialSpec.scarf2(1.3, 0.4), "parametric"),
    PotentialSpec.pursey(3),
    PotentialSpec.abraham_moses(3),
    PotentialSpec.isospectral(3, 0.1),
])
def test_partner_families_match_numeric(spec):
    for k in (0.5, 1.5):
        num = numeric_scatter(spec, k)
        ana = analytic_amplitudes(spec, k)
        assert abs(num.R - ana.R) < 1e-6
        assert abs(num.T - ana.T) < 1e-6


def test_partner_relation_preserves_modulus():
    base = PotentialSpec.scarf2(1.3, 0.4)
    amp = analytic_amplitudes(base, 0.9)
    out = partner_RT(amp, superpotential(base), 0.9)
    assert abs(abs(out.R) - abs(amp.R)) < 1e-12
    assert abs(abs(out.T) - abs(amp.T)) < 1e-12


def test_partner_relation_rejects_unknown_kind():
    base = PotentialSpec.real_sech(2)
    with pytest.raises(DomainError):
        partner_RT(analytic_amplitudes(base, 1.0), superpotential(base), 1.0, "bogus")


def test_non_positive_k():
    with pytest.raises(PoleError):
        analytic_T_real(2, 0.0)
    with pytest.raises(PoleError):
        numeric_scatter(free, -1.0)


def test_coarse_grid_rejected():
    with pytest.raises(DomainError):
        numeric_scatter(free, 2.0, dx=0.2)


def test_short_domain_rejected():
    with pytest.raises(DomainError):
        numeric_scatter(PotentialSpec.real_sech(3), 1.0, L=3.0)


def test_convergence_failure():
    with pytest.raises(ConvergenceError):
        numeric_scatter(PotentialSpec.real_sech(3), 3.0, L=12.0, dx=0.01, conv_tol=1e-12)


def test_right_incidence_only_for_scarf():
    with pytest.raises(DomainError):
        analytic_amplitudes(PotentialSpec.real_sech(3), 1.0, incidence="right")


def test_singular_extension_rejected():
    # (3, 0) parametric at m = 2 has a real-axis pole pair near x = +-0.4
    with pytest.raises(PoleError):
        numeric_scatter(PotentialSpec.scarf2_extended(3.0, 0.0, 2, True), 1.0)


def test_non_finite_potential_rejected():
    with pytest.raises(DomainError):
        numeric_scatter(lambda x: np.where(np.abs(x) < 0.5, np.nan, 0.0), 1.0, L=5.0)
