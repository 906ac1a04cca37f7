import math

import pytest

import lorasic


def test_sf_table():
    table = lorasic.default_sf_table()
    assert [row.sf for row in table] == [7, 8, 9, 10, 11, 12]
    assert table[0].duty_cycle == pytest.approx(45.8e-6)
    assert lorasic.duty_cycle_from_toa(991.23, 900000) == pytest.approx(1101.4e-6, abs=1e-7)


def test_border_point():
    cfg = lorasic.NetworkConfig()
    c = lorasic.coverage(3000.0, cfg, 1.0)
    assert c.ring == 6
    assert c.h1 * c.q1 == pytest.approx(0.4889, abs=1e-4)
    assert c.c1_sic == pytest.approx(0.6560, abs=1e-4)
    assert c.c1 == pytest.approx(c.h1 * c.q1)


def test_hypergeometric_against_log_form():
    for z in (-0.3, -3.0, -1e5):
        assert lorasic.hyp2f1_1b(1.0, z) == pytest.approx(math.log1p(-z) / -z, rel=1e-13)


def test_estimate_is_seeded():
    cfg = lorasic.NetworkConfig()
    a = lorasic.estimate(3000.0, cfg, 1.0, 30000, 11, workers=1)
    b = lorasic.estimate(3000.0, cfg, 1.0, 30000, 11, workers=3)
    assert a.captured.mean == b.captured.mean
    assert abs(a.captured.mean - lorasic.capture_probability(3000.0, cfg, 1.0)) < 4 * a.captured.ci95_halfwidth


def test_capacity_and_planning():
    rows = lorasic.capacity_table([0.20, 0.52])
    assert [r.total for r in rows] == [4689, 12191]
    cfg = lorasic.NetworkConfig()
    assert lorasic.find_alpha_for_target(0.8, 3000.0, cfg, False) == pytest.approx(0.199, abs=1e-3)


def test_config_and_errors():
    cfg = lorasic.NetworkConfig.from_text("gamma_db = 6\n")
    assert cfg.gamma_db == 6.0
    with pytest.raises(lorasic.ConfigError):
        lorasic.NetworkConfig.from_text("path_loss_exp = 1.5")
    with pytest.raises(lorasic.OutOfCoverageError):
        lorasic.coverage(3500.0, cfg, 1.0)
    with pytest.raises(lorasic.InfeasibleError):
        lorasic.find_alpha_for_target(0.99, 3000.0, cfg, True)
