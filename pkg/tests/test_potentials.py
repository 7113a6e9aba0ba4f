import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from reflectionless_lab.errors import DomainError, SingularPointError
from reflectionless_lab.potentials import (
    GridFunction,
    PotentialSpec,
    eval_isospectral_family,
    eval_pursey_am,
    eval_real_sech,
    eval_scarf2,
    eval_scarf2_extended,
    eval_scarf2_parametric,
    evaluate,
    extension_poles,
    partner_potential,
    sample,
)

X = np.linspace(-6, 6, 601)
S, T = 1 / np.cosh(X), np.tanh(X)
finite = dict(allow_nan=False, allow_infinity=False)
params = st.floats(0.05, 3.5, **finite)


def ext_reference(a, b, m, x, dps=50):
    """Term-by-term evaluation of the extended potential in high precision."""
    with mpmath.workdps(dps):
        a, b, x = mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(x)
        al, be = b - a - mpmath.mpf(1) / 2, -b - a - mpmath.mpf(1) / 2
        z = 1j * mpmath.sinh(x)
        r = mpmath.jacobi(m - 1, -al, be, z) / mpmath.jacobi(m, -al - 1, be - 1, z)
        c = 2 * b - m + 1
        v = -(b**2 + a * (a + 1)) * mpmath.sech(x) ** 2 + 1j * b * (2 * a + 1) * mpmath.sech(x) * mpmath.tanh(x)
        v += 2 * m * c + c * ((-2 * a - 1) + (2 * b + 1) * z) * r - c**2 * mpmath.cosh(x) ** 2 * r**2 / 2
        return complex(v)


def test_real_sech_golden():
    v = eval_real_sech(3, X)
    assert v.min() == -12.0 and X[np.argmin(v)] == 0.0
    assert np.allclose(v, -12 * S**2, atol=1e-15)


@given(params, params)
def test_scarf2_pt_symmetry(a, b):
    assert np.allclose(eval_scarf2(a, b, -X), np.conj(eval_scarf2(a, b, X)), atol=1e-13)


@given(params, params)
def test_scarf2_parametric_invariance(a, b):
    d = np.abs(eval_scarf2(a, b, X) - eval_scarf2_parametric(a, b, X))
    assert d.max() <= 1e-12 * max(1.0, np.abs(eval_scarf2(a, b, X)).max())


def test_scarf2_real_limit():
    assert np.allclose(eval_scarf2(3.0, 0.0, X), eval_real_sech(3, X), atol=1e-14)


@pytest.mark.parametrize("a,b,m", [(2.0, 1.0, 1), (1.5, 1.5, 1), (0.7, 1.2, 1), (2.0, 1.0, 2),
                                   (1.3, 0.4, 2), (1.5, 1.5, 3), (2.5, 0.5, 2), (1.3, 1.0, 2)])
def test_extended_matches_high_precision(a, b, m):
    for x in [-9.0, -2.3, -0.4, 0.0, 0.8, 3.1, 12.0]:
        ref = ext_reference(a, b, m, x)
        got = eval_scarf2_extended(a, b, m, x)
        assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref)), (x, got, ref)


def test_extended_tail_decays_for_degenerate_parameters():
    # 2b + 1 - m integer: the correction polynomials cancel at large |x|
    for a, b, m in [(1.3, 1.0, 2), (2.5, 0.5, 2), (2.0, 1.0, 3)]:
        tail = np.abs(eval_scarf2_extended(a, b, m, np.array([-30.0, 30.0])))
        assert tail.max() < 1e-9


def test_extended_m1_explicit_form():
    for a, b in [(2.0, 1.0), (1.5, 1.5), (0.5, 2.5)]:
        u = -2j * b * np.sinh(X) + 2 * a + 1
        ref = eval_scarf2(a, b, X) - 2 * (2 * a + 1) / u + 2 * ((2 * a + 1) ** 2 - 4 * b * b) / u**2
        assert np.max(np.abs(eval_scarf2_extended(a, b, 1, X) - ref)) < 1e-12


def test_extended_m0_is_conventional():
    assert np.array_equal(eval_scarf2_extended(1.5, 0.5, 0, X), eval_scarf2(1.5, 0.5, X))


@pytest.mark.parametrize("par", [False, True])
@pytest.mark.parametrize("a,b", [(2.0, 1.0), (1.5, 1.5), (0.5, 2.5), (1.0, 2.0)])
def test_extended_pt_symmetry(a, b, par):
    v = eval_scarf2_extended(a, b, 1, X, parametric=par)
    assert np.allclose(v[::-1], np.conj(v), atol=1e-12)


def test_extended_breaks_parametric_symmetry():
    d = np.abs(eval_scarf2_extended(2, 1, 1, X) - eval_scarf2_extended(2, 1, 1, X, parametric=True))
    assert d.max() > 0.1


def test_extended_parametric_is_substitution():
    assert np.allclose(eval_scarf2_extended(2.0, 1.0, 1, X, parametric=True),
                       eval_scarf2_extended(0.5, 2.5, 1, X), atol=0)


def test_singular_extension_detected():
    poles = extension_poles(3.0, 0.0, 2, parametric=True)
    assert poles.size == 2
    with pytest.raises(SingularPointError) as info:
        eval_scarf2_extended(3.0, 0.0, 2, np.array([0.0, 1.0, poles[1]]), parametric=True)
    assert info.value.index == 2
    assert extension_poles(2.0, 1.0, 1).size == 0


def test_isospectral_limits():
    # large |lambda| recovers the undeformed well; the correction is O(1/lambda)
    for lam in (1e6, -1e6):
        d = np.abs(eval_isospectral_family(3, lam, X) - eval_real_sech(3, X))
        assert d.max() < 1e-4


def test_isospectral_transcribed_closed_form():
    for lam in (0.1, 0.01, 5.0, -1.1, -1.01, -5.0):
        D = 8 + 16 * lam + (8 + 4 * S**2 + 3 * S**4) * T
        ref = 6 * S**2 * (-2 + 15 * S**4 * ((1 + 3 * np.cosh(2 * X) + np.cosh(4 * X)) * S**6
                                             + 16 * T * (1 + 2 * lam + T)) / D**2)
        assert np.max(np.abs(eval_isospectral_family(3, lam, X) - ref)) < 1e-10


def test_isospectral_routes_limits():
    assert np.array_equal(eval_isospectral_family(3, 0.0, X), eval_pursey_am(3, "pursey", X))
    assert np.array_equal(eval_isospectral_family(3, -1.0, X), eval_pursey_am(3, "am", X))
    with pytest.raises(DomainError):
        eval_isospectral_family(3, -0.5, X)


def test_pursey_am_closed_form_and_mirror():
    for sg, kind in ((1, "pursey"), (-1, "am")):
        num = 25 * np.cosh(2 * X) + 13 * np.cosh(4 * X) - sg * 3 * (-sg * 5 + 5 * np.sinh(2 * X) + 4 * np.sinh(4 * X))
        den = (5 + 11 * np.cosh(2 * X) - sg * 9 * np.sinh(2 * X)) ** 2
        assert np.max(np.abs(eval_pursey_am(3, kind, X) + 24 * S**2 * num / den)) < 1e-10
    assert np.allclose(eval_pursey_am(3, "pursey", X), eval_pursey_am(3, "am", -X), atol=1e-12)


def test_pursey_is_small_lambda_limit():
    # non-uniform: where I(x) ~ lambda the deformation still differs, so stay right of that region
    xs = np.linspace(-1, 3, 41)
    d = np.abs(eval_isospectral_family(3, 1e-12, xs) - eval_pursey_am(3, "pursey", xs))
    assert d.max() < 1e-5


@given(params, params)
def test_shape_invariance(a, b):
    spec = PotentialSpec.scarf2(a, b)
    assert np.array_equal(partner_potential(spec, X), eval_scarf2(a - 1, b, X))


def test_partner_closed_forms():
    real = PotentialSpec.real_sech(3)
    assert np.allclose(partner_potential(real, X), -6 * S**2, atol=1e-15)
    assert np.allclose(partner_potential(PotentialSpec.isospectral(3, 0.1), X), -6 * S**2, atol=1e-15)
    a, b = 1.3, 0.4
    par = partner_potential(PotentialSpec.scarf2(a, b), X, "parametric")
    ref = -((b - 1) ** 2 + a * (a + 1)) * S**2 + 1j * (b - 1) * (2 * a + 1) * S * T
    assert np.allclose(par, ref, atol=1e-14)


def test_spec_validation():
    with pytest.raises(DomainError):
        PotentialSpec.real_sech(0)
    with pytest.raises(DomainError):
        PotentialSpec.isospectral(3, -0.3)
    with pytest.raises(DomainError):
        PotentialSpec.isospectral(3, 0.0)
    with pytest.raises(DomainError):
        PotentialSpec("scarf2", a=1.0)
    with pytest.raises(DomainError):
        PotentialSpec.scarf2_extended(1.0, 1.0, -1)
    with pytest.raises(DomainError):
        PotentialSpec("realsech", N=3, parametric=True)
    with pytest.raises(DomainError):
        PotentialSpec.partner_of(PotentialSpec.pursey(3))
    with pytest.raises(DomainError):
        PotentialSpec.partner_of(PotentialSpec.real_sech(3), "parametric")


def test_spec_to_dict():
    d = PotentialSpec.partner_of(PotentialSpec.scarf2(2, 1), "parametric").to_dict()
    assert d == {"family": "partner", "base": {"family": "scarf2", "a": 2.0, "b": 1.0, "parametric": False},
                 "branch": "parametric"}


def test_evaluate_dispatch():
    assert evaluate(PotentialSpec.real_sech(3), 0.0) == -12
    assert evaluate(PotentialSpec.scarf2(2, 1, parametric=True), 0.0) == eval_scarf2(2, 1, 0.0)
    assert evaluate(PotentialSpec.pursey(3), 0.4) == pytest.approx(eval_pursey_am(3, "pursey", 0.4))


def test_sample_and_grid_function():
    g = sample(PotentialSpec.real_sech(2), -1.0, 0.5, 5)
    assert isinstance(g, GridFunction)
    assert np.allclose(g.x, [-1, -0.5, 0, 0.5, 1])
    assert g.values[2] == -6
    with pytest.raises(ValueError):
        GridFunction(0.0, 0.1, [1.0])
    with pytest.raises(ValueError):
        GridFunction(0.0, -0.1, [1.0, 2.0])
    with pytest.raises(ValueError):
        GridFunction(0.0, 0.1, [1.0, np.nan])
