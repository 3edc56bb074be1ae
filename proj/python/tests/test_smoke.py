import cmath
import math

import pytest

import suita


def test_f_ratio_at_2i():
    r = suita.f_ratio(2j)
    assert r["f"] == pytest.approx(-1.8229095562535915, abs=1e-12)
    parts = r["log_im_term"] + r["const_term"] + r["linear_term"] + r["qsum_term"]
    assert r["f"] == parts


def test_capacity_and_bergman():
    assert suita.capacity(2j) == pytest.approx(3.1181694995108225, abs=1e-12)
    assert suita.bergman_density(0.7 + 2j) == 0.5


def test_theta_routes_agree():
    z, tau = 0.3, 0.5 + 1.9192j
    assert abs(suita.theta_series(z, tau) - suita.theta_product(z, tau)) < 1e-12
    assert suita.theta_series(0, 1j) == pytest.approx(1.0864348112133080, abs=1e-14)


def test_nome_and_eta():
    assert suita.nome(2j) == pytest.approx(math.exp(-2 * math.pi))
    assert abs(suita.eta(1j)) == pytest.approx(0.768225422326056659, abs=1e-14)


def test_green_function_and_errors():
    assert suita.green_function(0.25, 0, 2j) == pytest.approx(-0.70062396090446353, abs=1e-12)
    with pytest.raises(ValueError):
        suita.green_function(0.3, 0.3, 2j)
    with pytest.raises(ValueError):
        suita.f_ratio(-1j)


def test_sweep_shape():
    re, im, values = suita.sweep((-1, 1), (1, 2), 3, 4)
    assert len(re) == 4 and len(im) == 3
    assert len(values) == 3 and all(len(row) == 4 for row in values)
    assert values[0][0] == suita.f_ratio(complex(-1, 1))["f"]


def test_minimize_constants():
    r = suita.minimize(rows=40, cols=40)
    assert r["alpha"] == pytest.approx(6.2034, abs=5e-3)
    assert 1.905 <= r["tau"].imag <= 1.915
    assert r["alpha"] * r["exp_f_min"] == pytest.approx(1.0, abs=1e-15)


def test_theta_identity_check():
    passed, observed, tol = suita.check_theta_identity(50, 7)
    assert passed and observed <= tol
