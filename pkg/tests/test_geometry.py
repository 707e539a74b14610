import math

import pytest
from hypothesis import given, strategies as st

from mckibben.geometry import (
    BraidSpec,
    DomainError,
    GeometryState,
    RawParameterSet,
    StrokeSpec,
    check_consistency,
    diameter_of,
    fiber_length_from,
    gamma_of,
    length_of,
    resolve,
    theta_from_diameter,
    theta_from_length,
)

from .conftest import B_IND, D_IND, L_IND, N_IND, REF_BRAID, THETA_IND, braids

THETA_3SF = math.radians(80.369)


def test_braid_d0():
    assert REF_BRAID.d0 == pytest.approx(B_IND / (16 * math.pi), rel=1e-15)
    # D / sin(theta) with the resolved angle
    assert REF_BRAID.d0 * 1e3 == pytest.approx(17.2430, abs=5e-5)


@pytest.mark.parametrize("b, N", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_braid_rejects_nonpositive(b, N):
    with pytest.raises(DomainError):
        BraidSpec(b, N)


def test_length_reference():
    assert length_of(REF_BRAID, THETA_3SF) * 1e3 == pytest.approx(145.0, abs=0.05)


def test_length_near_zero_angle():
    assert length_of(REF_BRAID, 1e-9) == pytest.approx(B_IND, rel=1e-15)


def test_length_at_magic_angle():
    # 866.728 * cos(54.7356 deg) by hand: 500.406 mm
    braid = BraidSpec(0.866728, 16)
    assert length_of(braid, math.radians(54.7356)) * 1e3 == pytest.approx(500.406, abs=1e-3)


def test_diameter_reference():
    assert diameter_of(REF_BRAID, THETA_3SF) * 1e3 == pytest.approx(17.0, abs=0.05)
    assert diameter_of(REF_BRAID, math.pi / 2 - 1e-9) == pytest.approx(REF_BRAID.d0)
    assert diameter_of(REF_BRAID, 1e-12) < 1e-12


@pytest.mark.parametrize("theta", [0.0, math.pi / 2, -0.1, 2.0])
def test_angle_domain(theta):
    with pytest.raises(DomainError, match=repr(theta)):
        length_of(REF_BRAID, theta)
    with pytest.raises(DomainError):
        diameter_of(REF_BRAID, theta)


def test_geometry_state():
    state = GeometryState(REF_BRAID, THETA_IND)
    assert state.length == pytest.approx(L_IND, rel=1e-14)
    assert state.diameter == pytest.approx(D_IND, rel=1e-14)
    assert state.area == pytest.approx(math.pi / 4 * D_IND**2, rel=1e-14)


@pytest.mark.parametrize("L, D, N, expected", [
    (0.145, 0.017, 16, 0.866728),
    (0.5, 0.0, 3, 0.5),
    # sqrt(0.1**2 + (0.01*pi*10)**2) by hand
    (0.1, 0.01, 10, 0.329691),
])
def test_fiber_length(L, D, N, expected):
    assert fiber_length_from(L, D, N) == pytest.approx(expected, abs=5e-7)


@pytest.mark.parametrize("L, D, N", [(0, 1, 1), (1, -1, 1), (1, 1, 0)])
def test_fiber_length_domain(L, D, N):
    with pytest.raises(DomainError):
        fiber_length_from(L, D, N)


def test_theta_from_length():
    assert math.degrees(theta_from_length(REF_BRAID, 0.145)) == pytest.approx(80.369, abs=5e-4)
    assert theta_from_length(BraidSpec(2.0, 1.0), 1.0) == pytest.approx(math.pi / 3, abs=1e-15)
    assert theta_from_length(REF_BRAID, B_IND * (1 - 1e-12)) < 1e-5
    for L in (0.0, B_IND, 2 * B_IND):
        with pytest.raises(DomainError):
            theta_from_length(REF_BRAID, L)


def test_theta_from_diameter():
    assert math.degrees(theta_from_diameter(REF_BRAID, 0.017)) == pytest.approx(80.369, abs=5e-4)
    d0 = REF_BRAID.d0
    assert theta_from_diameter(REF_BRAID, d0 / 2) == pytest.approx(math.pi / 6, abs=1e-15)
    assert theta_from_diameter(REF_BRAID, d0 * (1 - 1e-12)) == pytest.approx(math.pi / 2, abs=1e-5)
    for D in (0.0, d0, 2 * d0):
        with pytest.raises(DomainError):
            theta_from_diameter(REF_BRAID, D)


@given(braids, st.floats(0.01, math.pi / 2 - 0.01))
def test_round_trip(braid, theta):
    assert theta_from_length(braid, length_of(braid, theta)) == pytest.approx(theta, abs=1e-12)
    assert theta_from_diameter(braid, diameter_of(braid, theta)) == pytest.approx(theta, abs=1e-12)


@given(braids, st.floats(1e-6, math.pi / 2 - 1e-6))
def test_pythagorean_closure(braid, theta):
    b = fiber_length_from(length_of(braid, theta), diameter_of(braid, theta), braid.N)
    assert b == pytest.approx(braid.b, rel=1e-12)


def test_consistency_quoted():
    raw = RawParameterSet(0.145, 0.017, 16, math.radians(75.2))
    report = check_consistency(raw, 1e-3)
    assert not report.consistent
    assert report.max_relative_spread > 0.3
    assert check_consistency(raw, 0.5).consistent


def test_consistency_reference():
    raw = RawParameterSet(0.145, 0.017, 16, THETA_3SF)
    report = check_consistency(raw, 1e-3)
    assert report.consistent
    assert report.b_from_pythagoras == pytest.approx(0.866728, abs=5e-7)


def test_consistency_without_theta():
    report = check_consistency(RawParameterSet(0.145, 0.017, 16))
    assert report.theta_absent
    assert report.b_from_length is None and report.b_from_diameter is None
    assert report.consistent


def test_consistency_rejects_bad_tolerance():
    with pytest.raises(DomainError):
        check_consistency(RawParameterSet(0.145, 0.017, 16), 0.0)


def test_resolve_reference():
    braid, theta = resolve(0.145, 0.017, 16)
    assert braid.b * 1e3 == pytest.approx(866.728, abs=5e-4)
    assert math.degrees(theta) == pytest.approx(80.369, abs=5e-4)
    assert abs(theta_from_diameter(braid, 0.017) - theta_from_length(braid, 0.145)) < 1e-10


def test_resolve_other():
    # sqrt(100^2 + (10*pi*8)^2) = 270.491 mm, arccos(100/270.491) = 68.303 deg
    braid, theta = resolve(0.1, 0.01, 8)
    assert braid.b * 1e3 == pytest.approx(270.491, abs=1e-3)
    assert math.degrees(theta) == pytest.approx(68.303, abs=1e-3)


def test_resolve_thin_limit():
    braid, theta = resolve(0.1, 1e-9, 8)
    assert theta < 1e-6
    assert braid.b == pytest.approx(0.1, rel=1e-12)


@given(st.floats(1e-3, 10), st.floats(1e-4, 1), st.floats(0.5, 100))
def test_resolve_is_consistent(L, D, N):
    braid, theta = resolve(L, D, N)
    assert check_consistency(RawParameterSet(L, D, N, theta), 1e-9).consistent


@given(st.floats(1e-3, 1), st.floats(0.05, 1.5), st.floats(1e-3, 0.1), st.floats(0.5, 50))
def test_equal_length_and_angle_give_equal_b(L, theta, D1, N1):
    # two braids at the same L and theta, different diameters
    N2 = N1 * 1.7
    D2 = math.tan(theta) * L / (math.pi * N2)
    D1 = math.tan(theta) * L / (math.pi * N1)
    b1, th1 = resolve(L, D1, N1)
    b2, th2 = resolve(L, D2, N2)
    assert th1 == pytest.approx(th2, abs=1e-12)
    assert b1.b == pytest.approx(b2.b, rel=1e-12)


@given(braids, st.floats(0.05, 1.5), st.floats(1.01, 50))
def test_turns_change_iff_diameter_changes(braid, theta, scale):
    # same b and theta, diameter scaled: N must change
    D = diameter_of(braid, theta) * scale
    N_new = braid.b * math.sin(theta) / (math.pi * D)
    assert N_new != pytest.approx(braid.N, rel=1e-9)
    assert N_new == pytest.approx(braid.N / scale, rel=1e-12)


def test_gamma():
    th = math.radians(80.369)
    assert gamma_of(StrokeSpec(th, th)) == 1.0
    # sin(60) / sin(80.369) by hand: 0.878406
    assert gamma_of(StrokeSpec(th, math.radians(60))) == pytest.approx(0.878406, abs=1e-6)
    assert gamma_of(StrokeSpec(math.pi / 2 - 1e-12, math.pi / 6)) == pytest.approx(0.5)
    stroke = StrokeSpec(th, math.radians(60))
    assert stroke.is_extension and stroke.gamma < 1


def test_stroke_domain():
    with pytest.raises(DomainError):
        StrokeSpec(math.pi / 2, 1.0)
