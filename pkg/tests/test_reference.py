import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracwell import reference as ref

# Reference columns of the published tables: alpha -> (lower, upper) for the
# ground state and alpha -> (lower, upper, asymptotic) for the first excited state.
GROUND_BOUNDS = {
    0.1: (0.9514, 0.9786), 0.2: (0.9182, 0.9675), 0.3: (0.8975, 0.9655),
    0.5: (0.8862, 0.9862), 0.7: (0.9086, 1.0383), 0.9: (0.9618, 1.1227),
    1.0: (1.0, 3 * math.pi / 8), 1.1: (1.0465, 1.2432), 1.3: (1.1667, 1.4064),
    1.5: (1.3293, 1.6223), 1.7: (1.5447, 1.9053), 1.9: (1.8274, 2.2747),
    1.99: (1.9817, 2.4761),
}
GROUND_ASYMPTOTIC = {
    0.1: 0.9809, 0.2: 0.9712, 0.3: 0.9699, 0.5: 0.9908, 0.7: 1.0418, 0.9: 1.1241,
    1.1: 1.2415, 1.3: 1.4007, 1.5: 1.6114, 1.7: 1.8873, 1.9: 2.2477, 1.99: 2.4441,
}
EXCITED_REFERENCE = {
    0.1: (0.5606, 1.1213, 1.0913), 0.2: (0.6286, 1.2573, 1.1948),
    # printed as 1.3132; the table's own difference column (0.0026) implies 1.3122
    0.3: (0.7049, 1.4098, 1.3122), 0.5: (0.8862, 1.7725, 1.5977),
    0.7: (1.1142, 2.2285, 1.9683), 0.9: (1.4009, 2.8018, 2.4526),
    1.1: (1.7613, 3.5226, 3.0892), 1.3: (2.2144, 4.4289, 3.9319),
    1.5: (2.7842, 5.5683, 5.0545), 1.7: (3.5005, 7.0009, 6.5605),
    1.9: (4.4010, 8.8021, 8.5942), 1.99: (4.8786, 9.7573, 9.7330),
}

# mpmath at 40 digits
TF_MU_100 = 74.39607805437113932
TF_PHI0_100 = 0.86252291648623960294


def test_standard_eigenpairs():
    phi, mu = ref.standard_eigenpair(0, 1.0, 0.0)
    assert phi == pytest.approx(1.0)
    assert mu == pytest.approx(math.pi**2 / 4)
    phi, mu = ref.standard_eigenpair(1, 1.0, 0.0)
    assert phi == pytest.approx(0.0, abs=1e-15)
    assert mu == pytest.approx(math.pi**2)
    for x in (-1.0, 1.0):
        assert ref.standard_eigenpair(0, 1.0, x)[0] == pytest.approx(0.0, abs=1e-15)


def test_standard_eigenpair_normalized():
    x = np.linspace(-2, 2, 20001)
    for s in (0, 1):
        phi, _ = ref.standard_eigenpair(s, 2.0, x)
        assert np.trapezoid(phi**2, x) == pytest.approx(1.0, rel=1e-8)


def test_standard_eigenpair_rejects_outside():
    with pytest.raises(ValueError):
        ref.standard_eigenpair(0, 1.0, 1.5)
    with pytest.raises(ValueError):
        ref.standard_eigenpair(2, 1.0, 0.0)


def test_standard_variance():
    assert ref.standard_variance(0) == pytest.approx(0.13069, abs=1e-5)
    assert ref.standard_variance(1) == pytest.approx(0.28267, abs=1e-5)
    # large-s limit, evaluated through the closed form directly
    assert 1 / 3 * (1 - 6 / (math.pi**2 * 1e6**2)) == pytest.approx(1 / 3)


def test_standard_variance_matches_quadrature():
    x = np.linspace(-1, 1, 200001)
    for s in (0, 1):
        phi, _ = ref.standard_eigenpair(s, 1.0, x)
        assert np.trapezoid(x**2 * phi**2, x) == pytest.approx(ref.standard_variance(s), rel=1e-8)


def test_thomas_fermi_values():
    phi, mu = ref.thomas_fermi(0, 100.0, 1.0, 0.0)
    assert mu == pytest.approx(TF_MU_100, rel=1e-14)
    assert phi == pytest.approx(TF_PHI0_100, rel=1e-13)
    phi1, _ = ref.thomas_fermi(1, 100.0, 1.0, 0.0)
    assert phi1 == pytest.approx(0.0, abs=1e-14)


def test_thomas_fermi_shape():
    x = np.linspace(-1, 1, 401)
    phi0, _ = ref.thomas_fermi(0, 1000.0, 1.0, x)
    np.testing.assert_allclose(phi0, phi0[::-1], atol=1e-12)
    assert abs(phi0[0]) < 1e-12 and abs(phi0[-1]) < 1e-12
    phi1, _ = ref.thomas_fermi(1, 1000.0, 1.0, x)
    np.testing.assert_allclose(phi1, -phi1[::-1], atol=1e-12)


def test_thomas_fermi_warns_for_weak_interaction():
    with pytest.warns(UserWarning):
        ref.thomas_fermi(0, 1.0, 1.0, 0.0)


def test_thomas_fermi_mu_scales_like_half_beta():
    # mu/(beta/2) = 1 + 4/sqrt(beta) + O(1/beta): slow approach to one
    betas = np.array([1e2, 1e3, 1e4, 1e6])
    excess = np.array([ref.thomas_fermi_mu(0, b) / (b / 2) - 1 for b in betas])
    assert np.all(np.diff(excess) < 0)
    np.testing.assert_allclose(excess * np.sqrt(betas), 4.0, rtol=0.5)
    assert excess[-1] < 0.005


def test_chen_bounds():
    lo, hi = ref.chen_bounds(1, 1.0, 2.0)
    assert (lo, hi) == pytest.approx((math.pi / 2, math.pi))
    lo, hi = ref.chen_bounds(0, 2.0, 2.0)
    assert (lo, hi) == pytest.approx((math.pi**2 / 8, math.pi**2 / 4))
    assert ref.chen_bounds(1, 0.5, 2.0) == pytest.approx((0.8862, 1.7725), abs=5e-5)


@pytest.mark.parametrize("alpha", sorted(EXCITED_REFERENCE))
def test_excited_reference_columns(alpha):
    lo, hi, asym = EXCITED_REFERENCE[alpha]
    assert ref.chen_bounds(1, alpha, 2.0) == pytest.approx((lo, hi), abs=5e-4)
    assert ref.kwasnicki_mu(1, alpha) == pytest.approx(asym, abs=5e-4)


@pytest.mark.parametrize("alpha", sorted(GROUND_BOUNDS))
def test_banuelos_table(alpha):
    assert ref.banuelos_bounds(alpha) == pytest.approx(GROUND_BOUNDS[alpha], abs=5e-4)


def test_banuelos_alpha_one_lower_is_one():
    assert ref.banuelos_bounds(1.0)[0] == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("alpha", sorted(GROUND_ASYMPTOTIC))
def test_kwasnicki_ground_table(alpha):
    assert ref.kwasnicki_mu(0, alpha) == pytest.approx(GROUND_ASYMPTOTIC[alpha], abs=5e-4)


def test_kwasnicki_closed_forms():
    assert ref.kwasnicki_mu(0, 1.0) == pytest.approx(3 * math.pi / 8)
    assert ref.kwasnicki_mu(1, 1.0) == pytest.approx(7 * math.pi / 8)
    assert ref.kwasnicki_mu(0, 2.0) == pytest.approx(math.pi**2 / 4, rel=1e-15)
    assert ref.kwasnicki_mu(1, 2.0) == pytest.approx(math.pi**2, rel=1e-15)


def test_beta_function_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    for a, b in [(0.5, 1.25), (0.5, 2.0), (1.3, 0.7)]:
        assert ref.beta_function(a, b) == pytest.approx(float(mpmath.beta(a, b)), rel=1e-13)


@given(st.floats(0.005, 2.0))
def test_banuelos_ordered(alpha):
    lo, hi = ref.banuelos_bounds(alpha)
    assert 0 < lo <= hi


def test_banuelos_sharper_than_chen_for_alpha_above_one():
    for alpha in np.linspace(1.0, 2.0, 101):
        c_lo, c_hi = ref.chen_bounds(0, alpha, 2.0)
        b_lo, b_hi = ref.banuelos_bounds(alpha)
        assert c_lo <= b_lo + 1e-14
        if alpha <= 1.95:
            assert b_hi <= c_hi


def test_banuelos_upper_exceeds_chen_upper_near_two():
    # at alpha = 2 the pair gives 2.5 against the exact pi^2/4
    assert ref.banuelos_bounds(2.0)[1] == pytest.approx(2.5)
    assert ref.banuelos_bounds(1.99)[1] > ref.chen_bounds(0, 1.99, 2.0)[1]


def test_bounds_row():
    row = ref.bounds_row(1.0, 0)
    assert row.lower == pytest.approx(1.0)
    assert row.asymptotic == pytest.approx(3 * math.pi / 8)
    row = ref.bounds_row(0.5, 1)
    assert row.banuelos_lower is None
    assert (row.lower, row.upper) == pytest.approx((0.8862, 1.7725), abs=5e-5)
