import math

import numpy as np
import pytest
from scipy import special

from settings import environment
from utils.errors import DomainError, IntegrationError, InvalidParameterError
from utils.finite_difference import (
    first_derivative,
    laplacian_1d,
    log_log_slope,
    observed_order,
    richardson,
    second_derivative,
)
from utils.special_functions import AI_PRIME_ZERO, AI_ZERO, airy, airy_ai_bi, asinh_log, log_cosh
from utils.version import describe_version


@pytest.mark.parametrize("z", [-20.0, -9.5, -6.9, -3.0, -1.0, 0.0, 0.5, 1.0, 2.0])
def test_airy_matches_scipy_where_ai_is_well_conditioned(z):
    pair = airy(z)
    ai, aip, bi, bip = special.airy(z)
    assert pair.ai == pytest.approx(ai, rel=1e-8, abs=1e-9)
    assert pair.ai_prime == pytest.approx(aip, rel=1e-8, abs=1e-9)
    assert pair.bi == pytest.approx(bi, rel=1e-8, abs=1e-9)
    assert pair.bi_prime == pytest.approx(bip, rel=1e-8, abs=1e-9)


@pytest.mark.parametrize("z", [3.0, 5.0, 6.9, 7.1, 10.0, 25.0])
def test_airy_positive_argument(z):
    pair = airy(z)
    ai, _, bi, bip = special.airy(z)
    assert pair.ai == pytest.approx(ai, rel=1e-8, abs=1e-9)
    assert pair.bi == pytest.approx(bi, rel=1e-8)
    assert pair.bi_prime == pytest.approx(bip, rel=1e-8)


@pytest.mark.parametrize("z", [-12.0, -4.0, 0.0, 1.5, 9.0])
def test_airy_wronskian(z):
    assert airy(z).wronskian() == pytest.approx(1.0 / math.pi, rel=1e-8)


def test_airy_values_at_origin():
    pair = airy(0.0)
    assert pair.ai == pytest.approx(AI_ZERO, rel=1e-15)
    assert pair.ai_prime == pytest.approx(-AI_PRIME_ZERO, rel=1e-15)


def test_airy_saturates_bi_above_overflow():
    pair = airy(110.0)
    assert pair.saturated
    assert math.isinf(pair.bi)
    assert pair.ai >= 0.0


def test_airy_rejects_non_finite():
    with pytest.raises(InvalidParameterError, match="finite"):
        airy(float("nan"))


def test_airy_vectorised_shape():
    z = np.linspace(-3.0, 3.0, 12).reshape(3, 4)
    ai, bi = airy_ai_bi(z)
    assert ai.shape == z.shape
    np.testing.assert_allclose(bi, special.airy(z)[2], rtol=1e-9)


def test_log_cosh_does_not_overflow():
    assert log_cosh(2000.0) == pytest.approx(2000.0 - math.log(2.0))
    assert log_cosh(0.3) == pytest.approx(math.log(math.cosh(0.3)))


def test_asinh_log():
    np.testing.assert_allclose(asinh_log(np.array([0.1, 1.0, 4.0])), np.arcsinh([0.1, 1.0, 4.0]))


def test_central_stencils_are_fourth_order():
    d1 = first_derivative(np.sin, 1.0, 1e-2)
    d2 = second_derivative(np.sin, 1.0, 1e-2)
    assert d1 == pytest.approx(math.cos(1.0), abs=1e-9)
    assert d2 == pytest.approx(-math.sin(1.0), abs=1e-8)


def test_richardson_improves_estimate():
    coarse = first_derivative(np.exp, 0.5, 0.1)
    fine = first_derivative(np.exp, 0.5, 0.05)
    exact = math.exp(0.5)
    assert abs(richardson(coarse, fine) - exact) < abs(fine - exact)


def test_laplacian_leaves_end_entries():
    xs = np.linspace(0.0, 1.0, 11)
    lap = laplacian_1d(xs ** 2, xs[1] - xs[0])
    assert lap[0] == 0.0 and lap[-1] == 0.0
    np.testing.assert_allclose(lap[1:-1], 2.0)


def test_observed_order_and_slope():
    assert observed_order([1.0, 0.25, 0.0625]) == pytest.approx([2.0, 2.0])
    xs = np.array([1e-3, 1e-2, 1e-1])
    assert log_log_slope(xs, 3.0 * xs ** 2) == pytest.approx(2.0)


def test_errors_carry_location():
    err = DomainError("outside", t=1.0, x=2.0)
    assert (err.t, err.x) == (1.0, 2.0)
    assert "last reached point 0.5" in str(IntegrationError("blow-up", 0.5))
    assert InvalidParameterError("d", "must be > 0").field == "d"


def test_output_directory_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(environment.OUTPUT_DIR_VARIABLE, str(tmp_path))
    assert environment.output_directory() == tmp_path
    monkeypatch.delenv(environment.OUTPUT_DIR_VARIABLE)
    assert environment.output_directory().name == environment.DEFAULT_OUTPUT_DIR


@pytest.mark.parametrize("value, expected", [("1", True), ("yes", True), ("0", False), ("", False)])
def test_debug_flag(monkeypatch, value, expected):
    monkeypatch.setenv(environment.DEBUG_VARIABLE, value)
    assert environment.debug_enabled() is expected


def test_version_string():
    assert describe_version().startswith("v")
