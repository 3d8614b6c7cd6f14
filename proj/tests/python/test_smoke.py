"""End-to-end smoke tests for the Python package."""

from fractions import Fraction

import pytest

import okbody


def F(text):
    return Fraction(text)


def test_labels():
    assert set(okbody.tower_labels()) == {"cxp2", "ccc", "cxjac"}
    assert "two_curves" in okbody.surface_model_labels()
    assert okbody.surface_basis("genus2_jacobian") == ["theta", "E"]


def test_volume_spot_value():
    assert okbody.vol_ray("cxjac", {"s": "1/2", "t": 0}) == F("3/4")
    assert okbody.vol_ray("cxp2", {"a": 3, "b": 2, "t": Fraction(1, 2)}) == F("287/8")


def test_exact_input_only():
    with pytest.raises(ValueError):
        okbody.vol_ray("cxjac", {"s": "0.5", "t": 0})
    with pytest.raises(TypeError):
        okbody.vol_ray("cxjac", {"s": 0.5, "t": 0})


def test_unknown_family():
    with pytest.raises(ValueError):
        okbody.vol_ray("nosuch", {"t": 0})


def test_body_tetrahedron():
    b = okbody.body("ccc", {"d1": 1, "d2": 1, "d3": 1})
    assert b.dim == 3
    assert b.coords == ("t", "x", "y")
    expected = {(0, 0, 0), (3, 0, 0), (1, 1, 0), (2, 0, 2)}
    assert {tuple(map(int, v)) for v in b.vertices} == expected
    assert not b.rays


def test_zariski_negative_part():
    positive, negative = okbody.zariski("genus2_jacobian", [1, "-7/5"])
    assert positive == (F("3/5"), F("-4/5"))
    assert negative == {"Rbar": F("1/10")}


def test_surface_polygon():
    verts = okbody.nobody_surface("two_curves", [3, 2, 0], [0, 0, 1])
    assert set(verts) == {(0, 0), (2, 2), (3, 2), (5, 0)}


def test_psigma_worked_example():
    positive, negative = okbody.psigma("cxjac", {"s": "1/2", "t": 0})
    assert positive["Jcheck"] == F("1/2")
    assert positive["Ncheck"] == F("7/4")
    assert negative == {}


def test_glue():
    g = okbody.glue("cxjac")
    assert g.dim == 4
    assert len(g.vertices) == 7
    with pytest.raises(ValueError):
        okbody.glue("ccc")


def test_slice():
    sl = okbody.slice_at("cxp2", {"a": 3, "b": 2, "t": 1})
    assert sl.t == 1
    assert sl.model
    assert len(sl.vertices) >= 3


def test_seshadri_and_projection():
    assert okbody.seshadri_curve("cxp2", {"a": 3, "b": 2}) == 4
    pc = okbody.projection_check("cxjac", {"s": "1/2"})
    assert (pc.lhs, pc.rhs, pc.equality) == (F("1/2"), F("59/126"), False)
    assert okbody.projection_check("ccc", {"d1": 4, "d2": 3, "d3": 2}).equality


def test_off_export():
    text = okbody.body_off("cxp2", {"a": 3, "b": 2})
    assert text.startswith("OFF\n6 8 0\n")


def test_checks_fast_tier():
    passed, report = okbody.run_checks("surfaces")
    assert passed
    assert "5 of 5 checks passed" in report
    with pytest.raises(ValueError):
        okbody.run_checks("bogus")
