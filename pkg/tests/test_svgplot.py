import pytest

from knee_mcdm import FrontSpec, generate, normalize, select_mmd
from knee_mcdm.svgplot import render_decision_svg


@pytest.fixture(scope="module")
def convex_case():
    nf = normalize(generate(FrontSpec(family="convex2d", samples=30, seed=9)))
    return nf, select_mmd(nf)


def test_svg_is_deterministic(convex_case):
    nf, decision = convex_case
    assert render_decision_svg(nf, decision) == render_decision_svg(nf, decision)


def test_svg_contains_expected_elements(convex_case):
    nf, decision = convex_case
    svg = render_decision_svg(nf, decision)
    assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle ") == nf.base.m
    assert "<polygon " in svg  # the Manhattan ball
    assert "(winner)" in svg
    assert "f1 (normalized)" in svg and "f2 (normalized)" in svg
    assert f"method={decision.method}" in svg


def test_svg_concave_ball_radius_is_one():
    nf = normalize(generate(FrontSpec(family="concave2d", samples=20, seed=1)))
    decision = select_mmd(nf)
    svg = render_decision_svg(nf, decision)
    assert "c_min=1" in svg
    assert svg.count('stroke="white"') == 2  # both endpoints highlighted


def test_svg_rejects_non_2d():
    nf = normalize(generate(FrontSpec(family="sphere3d", samples=10, seed=2)))
    with pytest.raises(ValueError):
        render_decision_svg(nf, select_mmd(nf))
