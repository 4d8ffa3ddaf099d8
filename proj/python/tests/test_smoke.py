import csv
import math

import pytest

import sta_zbw as sz

HELIX = """
mass = 1
p0 = 1*g0
psi0 = exp(0.25*g10)
steps_per_period = 200
periods = 2
"""


def test_gamma_anticommutators():
    g = [sz.Multivector.gamma(mu) for mu in range(4)]
    eta = [1.0, -1.0, -1.0, -1.0]
    for mu in range(4):
        for nu in range(4):
            s = g[mu] * g[nu] + g[nu] * g[mu]
            want = 2 * eta[mu] if mu == nu else 0.0
            assert s == sz.Multivector.scalar(want)


def test_text_round_trip_and_matrix():
    a = sz.Multivector.parse("1.5*s + -2*g01 + 0.25*g123")
    assert sz.Multivector.parse(str(a)) == a
    m = sz.mv_to_matrix(sz.Multivector.gamma(0) * sz.Multivector.gamma(0))
    assert m[0][0] == 1 and m[0][1] == 0


def test_exp_log_rotor():
    b = sz.Multivector.parse("0.3*g12 + 0.2*g10")
    r = sz.exp(b)
    assert (r * r.reverse() - sz.Multivector.scalar(1)).norm() < 1e-12
    assert (sz.log_rotor(r) - b).norm() < 1e-12


def test_simulate_helix():
    t = sz.simulate(HELIX)
    assert list(t) == sz.CSV_COLUMNS
    assert len(t["tau"]) == 401
    assert max(abs(h - 1.0) for h in t["H"]) < 1e-9
    assert max(t["res_nl"]) <= 1e-10
    assert max(t["v1"]) > 0.1 and min(t["v1"]) < -0.1


def test_write_trajectory(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    sz.write_trajectory(HELIX, str(a))
    sz.write_trajectory(HELIX, str(b))
    assert a.read_bytes() == b.read_bytes()
    with a.open() as f:
        rows = list(csv.DictReader(f))
    assert list(rows[0]) == sz.CSV_COLUMNS
    assert float(rows[0]["H"]) == pytest.approx(1.0, abs=1e-14)


def test_oracle_order():
    r = sz.oracle(HELIX)
    assert r["passed"]
    assert 15 < r["ratio"] < 17
    assert sz.oracle(HELIX, euler=True)["ratio"] == pytest.approx(2.0, rel=0.1)


def test_checks_and_fault_injection():
    clean = sz.check("algebra")
    assert all(c["passed"] for c in clean)
    bad = sz.check("algebra", perturb=1e-6)
    assert not all(c["passed"] for c in bad if c["gated"])
    with pytest.raises(sz.StaError):
        sz.check("nonsense")


def test_config_errors():
    with pytest.raises(sz.ConfigError):
        sz.simulate("mass = 1\nmass = 2\n")
    with pytest.raises(ValueError):
        sz.config_text("colour = red\n")


def test_plane_wave_sign():
    psi0 = sz.Multivector.scalar(1)
    x = sz.Multivector.vector(1.3, 0.2, -0.4, 0.1)
    assert sz.plane_wave_residual(psi0, 1.0, x) < 1e-12
    assert sz.plane_wave_residual(psi0, 1.0, x, sign=1.0) == pytest.approx(2.0)
    assert math.isfinite(sz.scalar_product(x, x))
