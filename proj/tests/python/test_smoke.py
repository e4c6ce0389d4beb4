"""End-to-end smoke tests for the forddomain python package."""

import math

import pytest

import forddomain as fd


FAMILY = {"family": {"eps": 0.01}}


def test_version_and_exports():
    assert fd.__version__
    for name in fd.__all__:
        assert hasattr(fd, name), name


def test_moebius_roundtrip():
    g = fd.family_generator(0.01)
    center, radius = g.isometric_sphere()
    assert center == pytest.approx(-1.0)
    assert radius == pytest.approx(0.1)

    gg = g * g
    assert gg.det() == pytest.approx(1.0)
    ident = gg * gg.inverse()
    assert ident.a == pytest.approx(1.0)
    assert ident.b == pytest.approx(0.0)

    t = fd.Moebius.translation(2 + 3j)
    assert t.apply(1 + 0j) == pytest.approx(3 + 3j)
    assert "Moebius[" in repr(t)


def test_apply_infinity_is_none():
    g = fd.Moebius.make(2.5, -1.0, 1.0, 0.0)
    assert g.apply(0j) is None  # pole of z -> (2.5 z - 1) / z


def test_epsilon_for_target_round_trip():
    for R in (1.0, 5.0, 20.0):
        eps = fd.epsilon_for_target(R, 0.5)
        assert eps == pytest.approx(0.5 * math.exp(-R))
        report = fd.analyze({"family": {"eps": eps}})
        assert report["certificate"]["verdict"] == "CertifiedFordDomain"
        assert report["tunnel"]["length"] >= R


def test_analyze_family():
    report = fd.analyze(FAMILY)
    assert report["schema"] == "ford-analysis/1"
    assert report["certificate"]["verdict"] == "CertifiedFordDomain"
    assert report["tunnel"]["length"] == pytest.approx(math.log(100.0))
    visible = [v for v in report["visibility"] if v["status"] == "Visible"]
    assert {v["word"] for v in visible} >= {"g", "g^-1", "g^2", "g^-2"}
    assert len(report["edges"]) == 3


def test_analyze_indiscrete():
    config = {"family": {"eps": 0.01}, "lattice": {"t_alpha": 0.9}}
    report = fd.analyze(config)
    assert report["certificate"]["verdict"] == "CertifiedIndiscrete"
    witness = report["certificate"]["indiscreteness"]
    assert witness["radius"] == pytest.approx(1.0)
    assert witness["escalation"] == pytest.approx(1.0 / 0.9)


def test_sweep_explicit_values():
    config = {
        "family": {"eps": 0.01},
        "sweep": {"parameter": "t_alpha", "values": [20.0, 0.9]},
    }
    result = fd.sweep(config)
    assert result["schema"] == "ford-sweep/1"
    verdicts = [row["verdict"] for row in result["rows"]]
    assert verdicts[0] == "CertifiedFordDomain"
    assert verdicts[-1] == "CertifiedIndiscrete"
    assert result["bracket"]["last_certified"] == pytest.approx(20.0)
    assert result["bracket"]["first_indiscrete"] == pytest.approx(0.9)


def test_render_svg():
    svg = fd.render_svg(FAMILY)
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert "circle" in svg


def test_homology_plan():
    plan = fd.homology([(1, 0), (2, 3)])
    assert plan["m"] == 5
    assert plan["n"] == 170
    assert plan["c"] == [10, 17]
    assert plan["kernel_basis"] == [[1, 10], [0, 170]]
    assert plan["determinant"] == 170

    stretched = fd.homology([(1, 0)], k=3)
    assert stretched["n"] == 4
    assert stretched["kernel_basis"][0] == [1, 4 + 3 * 4]


def test_errors_map_to_ford_error():
    with pytest.raises(fd.FordError):
        fd.homology([])
    with pytest.raises(fd.FordError):
        fd.analyze({"family": {"eps": -1.0}})
    with pytest.raises(fd.FordError):
        fd.Moebius.make(1.0, 0.0, 0.0, 0.0)  # determinant zero
