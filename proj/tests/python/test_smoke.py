"""Smoke tests for the pybind11 kernel bindings."""
import os

import bringlab._core as core


def test_theta_series():
    t = core.theta_series(2, 50)
    assert t["valuation"] == 4
    assert t["coeffs"][4] == 1
    assert t["coeffs"][9] == -1
    assert t["coeffs"][49] == -1


def test_cuspform_basis_heads():
    f = core.cuspform_basis(10)
    assert [f["f1"]["coeffs"].get(n, 0) for n in range(1, 8)] == [1, -1, 1, 1, 0, -1, 2]
    assert [f["f4"]["coeffs"].get(n, 0) for n in range(1, 9)] == [0, 1, 1, 0, 0, 0, -2, -1]


def test_j_series():
    j = core.j_series(4)
    assert j["coeffs"][-1] == 1
    assert j["coeffs"][0] == 744
    assert j["coeffs"][1] == 196884
    assert j["coeffs"][2] == 21493760


def test_quotient_g():
    g = core.quotient_g_coefficients()
    assert g == [1, 5, 15, 35, 65, 101, 135, 155, 165, 165, 161,
                 165, 165, 155, 135, 101, 65, 35, 15, 5, 1]


def test_j_invariant_from_records():
    path = os.environ.get("BRINGLAB_CURVES", "data/curves.txt")
    assert core.j_invariant(path, "50.a3") == "-25/2"


def test_run_certificate():
    reports = core.run_certificate("theta-point", prec=60)
    assert len(reports) == 1
    assert reports[0]["status"] == "pass"
    assert reports[0]["precision_used"] == 60


def test_parser_roundtrip():
    printed = core.parse_roundtrip("-(x^2+y^2)+2*(z^2+w^2)", ["x", "y", "z", "w"])
    assert core.parse_roundtrip(printed, ["x", "y", "z", "w"]) == printed


def test_certificate_names():
    names = core.certificate_names()
    assert "st-relation" in names and "weierstrass" in names
