import math

import pytest

import chebstab


def test_linf_center_example():
    radius, box = chebstab.cheb_linf([[0.0, 0.0], [0.0, 2.0]])
    assert radius == 1.0
    assert box == [(-1.0, 1.0), (1.0, 1.0)]


def test_l2_ball_equilateral():
    s3 = math.sqrt(3.0)
    radius, center, support = chebstab.cheb_l2([[0.0, 0.0], [2.0, 0.0], [1.0, s3]], 42)
    assert radius == pytest.approx(2.0 / s3, abs=1e-12)
    assert center == pytest.approx([1.0, s3 / 3.0], abs=1e-12)
    assert sorted(support) == [0, 1, 2]


def test_metrics():
    a = [[0.0], [1.0]]
    b = [[0.5], [1.5]]
    assert chebstab.nnet_dist(a, b, chebstab.Norm.linf) == 0.5
    assert chebstab.hausdorff(a, b, chebstab.Norm.linf) == 0.5
    with pytest.raises(ValueError):
        chebstab.nnet_dist(a, [[0.5]], chebstab.Norm.linf)


def test_campaign_is_reproducible():
    cfg = chebstab.CampaignConfig()
    cfg.trials = 50
    first = chebstab.run_check("theorem2", cfg)
    second = chebstab.run_check("theorem2", cfg)
    assert first.passed
    assert first.to_json() == second.to_json()
    assert first.max_ratio <= 2.0 + 1e-9
    assert "tightness" in chebstab.check_names()


def test_cli_exit_codes():
    code, out, _ = chebstab.run_cli(["verify", "lemma0", "--trials", "20"])
    assert code == 0 and out.startswith("lemma0: PASS")
    assert chebstab.run_cli(["verify", "bogus"])[0] == 2
    assert chebstab.run_cli(["verify", "tightness", "--trials", "3", "--margin", "1e-6"])[0] == 1
