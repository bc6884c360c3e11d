import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lensfib import contact as ct
from lensfib.errors import NumericalBreakdown
from lensfib.lenslift import LensParams

FORMS = ct.standard_forms()
ALPHA = FORMS["s3_standard"]
SYM = FORMS["r3_symmetric"]
COPRIME_12 = [(p, q) for p in range(1, 13) for q in range(p) if math.gcd(p, q) == 1]


def test_standard_form_coefficients():
    assert tuple(FORMS["r3_standard"]((2.0, 0.0, 0.0))) == (0.0, 2.0, 1.0)
    assert tuple(SYM((0.0, 0.0, 0.0))) == (0.0, 0.0, 1.0)
    assert tuple(ALPHA((1.0, 0.0, 0.0, 0.0))) == (0.0, 1.0, 0.0, 0.0)


def test_contact_volume_examples():
    assert ct.contact_volume_value(SYM, (1.0, 2.0, 3.0), h=1e-5) == pytest.approx(2.0, abs=1e-6)
    dz = ct.SampledOneForm(3, lambda p: (0.0, 0.0, 1.0), "dz")
    assert abs(ct.contact_volume_value(dz, (0.3, -1.0, 2.0))) < 1e-8
    for pt in [(0.0, 0.0, 0.0), (2.5, -1.0, 4.0)]:
        assert ct.contact_volume_value(FORMS["r3_standard"], pt) == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(ValueError):
        ct.contact_volume_value(ALPHA, (1.0, 0.0, 0.0, 0.0))


def test_non_finite_form_breaks_down():
    bad = ct.SampledOneForm(3, lambda p: (1.0 / p[0], 0.0, 0.0), "1/x dx")
    with pytest.raises(NumericalBreakdown):
        ct.contact_volume_value(bad, (0.0, 0.0, 0.0))
    nan = ct.SampledOneForm(3, lambda p: (math.nan, 0.0, 0.0), "nan")
    with pytest.raises(NumericalBreakdown):
        ct.contact_volume_value(nan, (0.0, 0.0, 0.0))


def test_symmetric_form_at_random_points():
    rng = np.random.default_rng(7)
    for pt in rng.uniform(-3.0, 3.0, size=(100, 3)):
        assert abs(ct.contact_volume_value(SYM, pt) - 2.0) <= 1e-6


@pytest.mark.parametrize("t,expected", [(0.5, -0.5), (1 / math.sqrt(2), 0.0), (0.9, 0.62)])
def test_pullback_examples(t, expected):
    ft, fth = ct.pullback_page(ALPHA, ct.hopf_page(0.0), t, 1.0)
    assert abs(ft) <= 1e-6
    assert abs(fth - expected) <= 1e-6


def test_pullback_rejects_boundary():
    with pytest.raises(NumericalBreakdown):
        ct.pullback_page(ALPHA, ct.hopf_page(0.0), 1e-7, 0.0)
    with pytest.raises(NumericalBreakdown):
        ct.pullback_page(ALPHA, ct.hopf_page(0.0), 1.0, 0.0)


@pytest.mark.parametrize("t,expected", [(0.5, 2.0), (0.25, 1.0)])
def test_page_area_examples(t, expected):
    for theta in (0.0, 2.0, 5.5):
        assert abs(ct.page_area_value(ALPHA, ct.hopf_page(1.0), t, theta) - expected) <= 1e-4


def test_page_area_vanishes_at_core():
    vals = [ct.page_area_value(ALPHA, ct.hopf_page(0.0), t, 0.3) for t in (0.1, 0.01, 0.001)]
    assert vals[0] > vals[1] > vals[2] > 0
    assert vals[2] == pytest.approx(0.004, abs=1e-4)


@pytest.mark.parametrize("omega", [0.0, math.pi / 2, math.pi])
def test_page_grid(omega):
    page = ct.hopf_page(omega)
    for t in np.linspace(0.01, 0.99, 50):
        for theta in np.linspace(0.0, 2 * math.pi, 50, endpoint=False):
            ft, fth = ct.pullback_page(ALPHA, page, float(t), float(theta))
            assert abs(ft) <= 1e-6
            assert abs(fth - (2 * t * t - 1)) <= 1e-6
            assert abs(ct.page_area_value(ALPHA, page, float(t), float(theta)) - 4 * t) <= 1e-4


def test_page_image_on_sphere():
    page = ct.hopf_page(0.4)
    for t in np.linspace(0.0, 1.0, 11):
        x = page(float(t), 1.3)
        assert abs(x.rho1 ** 2 + x.rho2 ** 2 - 1) <= 1e-12


@pytest.mark.parametrize("comp", list(ct.BindingComponent))
def test_binding_values(comp):
    for theta in np.linspace(0, 2 * math.pi, 7):
        assert ct.binding_value(ALPHA, comp, float(theta)) == 1.0
        assert ct.binding_value(ALPHA.scaled(2.0), comp, float(theta)) == 2.0


def test_zp_defect_examples():
    assert ct.zp_invariance_defect(LensParams(1, 0)) == 0.0
    assert ct.zp_invariance_defect(LensParams(5, 2), sample_count=200) < 1e-9
    assert ct.zp_invariance_defect(LensParams(7, 3)) < 1e-9


@pytest.mark.parametrize("p,q", COPRIME_12)
def test_zp_defect_all_small_lens_spaces(p, q):
    assert ct.zp_invariance_defect(LensParams(p, q), sample_count=50, seed=p * 13 + q) < 1e-9


def test_zp_defect_detects_a_non_invariant_form():
    # rho1^2 cos(theta1) dtheta1 is not rotation invariant
    skew = ct.SampledOneForm(4, lambda x: (0.0, x[0] ** 2 * math.cos(x[1]), 0.0, 0.0), "skew", (1, 3))
    assert ct.zp_invariance_defect(LensParams(5, 2), sample_count=20, alpha=skew) > 1e-3


def test_check_supports_verdicts():
    rep = ct.check_supports(ALPHA)
    assert rep.verdict
    assert rep.sample_count == 50 * 50 * 3 + 2 * 50
    assert rep.min_page_area_value == pytest.approx(4e-3, abs=1e-4)
    assert rep.min_binding_value == 1.0
    assert not ct.check_supports(-ALPHA).verdict
    flipped = ct.check_supports(ALPHA, pages=lambda om: ct.hopf_page(om, orientation=-1))
    assert not flipped.verdict
    assert flipped.min_page_area_value < 0


def test_check_supports_tolerance_from_environment(monkeypatch):
    monkeypatch.setenv("LENSFIB_TOL", "0.5")
    rep = ct.check_supports(ALPHA, grid=(5, 4, 2))
    assert rep.tolerance == 0.5
    # min area 0.004 is now below the threshold
    assert not rep.verdict
    monkeypatch.delenv("LENSFIB_TOL")
    assert ct.check_supports(ALPHA, grid=(5, 4, 2)).tolerance == ct.DEFAULT_TOL


def test_check_supports_grid_validation():
    with pytest.raises(ValueError):
        ct.check_supports(ALPHA, grid=(1, 5, 5))


# --- properties ---------------------------------------------------------------

finite = st.floats(-3.0, 3.0)


@settings(max_examples=100, deadline=None)
@given(finite, finite, finite, st.floats(0.05, 0.95), st.floats(0.0, 6.28), st.floats(-4.0, 4.0))
def test_linearity(x, y, z, t, theta, c):
    for form in (SYM, FORMS["r3_standard"]):
        # alpha ^ d alpha is quadratic in alpha
        assert ct.contact_volume_value(form.scaled(c), (x, y, z)) == pytest.approx(
            c * c * ct.contact_volume_value(form, (x, y, z)), abs=1e-5)
    page = ct.hopf_page(0.7)
    two = ALPHA.scaled(2.0)
    assert np.allclose(ct.pullback_page(two, page, t, theta),
                       2 * np.array(ct.pullback_page(ALPHA, page, t, theta)), atol=1e-6)
    assert ct.page_area_value(two, page, t, theta) == pytest.approx(
        2 * ct.page_area_value(ALPHA, page, t, theta), abs=1e-4)
    v = (0.1, 0.3, -0.2, 0.5)
    pt = (math.sqrt(1 - t * t), theta, t, 0.2)
    assert two.evaluate(pt, v) == pytest.approx(2 * ALPHA.evaluate(pt, v), abs=1e-12)


WAVY = ct.SampledOneForm(3, lambda p: (math.sin(p[1]), math.sin(p[2]), math.sin(p[0])), "wavy")


def _wavy_exact(x, y, z):
    return -math.sin(y) * math.cos(z) - math.sin(z) * math.cos(x) - math.sin(x) * math.cos(y)


@settings(max_examples=100, deadline=None)
@given(finite, finite, finite)
def test_second_order_convergence(x, y, z):
    exact = _wavy_exact(x, y, z)
    errs = [abs(ct.contact_volume_value(WAVY, (x, y, z), h) - exact) for h in (0.04, 0.02, 0.01)]
    if errs[0] < 1e-9:
        return  # leading error term vanishes here
    # halving h divides the error by about four
    assert errs[1] <= errs[0] / 3.0 + 1e-10
    assert errs[2] <= errs[1] / 3.0 + 1e-10
    assert errs[0] <= 0.04 ** 2


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(COPRIME_12), st.integers(0, 10_000))
def test_zp_defect_small_for_any_seed(pq, seed):
    assert ct.zp_invariance_defect(LensParams(*pq), sample_count=3, seed=seed) < 1e-9
