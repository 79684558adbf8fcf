import json
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galilei21.algebra import ExtensionParams, random_params
from galilei21.group import (
    IDENTITY,
    GroupElement,
    GroupKind,
    angle_distance,
    apply_coboundary,
    associativity_defect,
    cocycle_exponent,
    compose,
    compose_with_exponent,
    element_distance,
    element_from_json,
    element_to_json,
    eliminate_k_map,
    galilei_product,
    homomorphism_defect,
    inverse,
    random_element,
    random_rational_element,
    rotate,
)

EXT = GroupKind.EXTENDED
COV = GroupKind.COVERING
TOL = 1e-12


def test_identity_is_neutral():
    rng = random.Random(1)
    p = ExtensionParams(F(3), F(1), F(2))
    for _ in range(20):
        g = random_element(rng)
        for kind, params in ((COV, p), (EXT, ExtensionParams(F(3), F(1), F(0)))):
            assert element_distance(compose(kind, params, IDENTITY, g), g, kind) < TOL
            assert element_distance(compose(kind, params, g, IDENTITY), g, kind) < TOL


def test_zero_charges_twist_nothing():
    rng = random.Random(2)
    p0 = ExtensionParams(0, 0, 0)
    for _ in range(50):
        g, h = random_element(rng), random_element(rng)
        assert cocycle_exponent(COV, p0, g, h) == 0
        assert element_distance(compose(COV, p0, g, h), galilei_product(g, h)) == 0


def test_boost_against_time_translation():
    # m = 1: a boost composed with a pure time step picks up -v^2 tau'/2
    p = ExtensionParams(1, 1, 0)
    g = GroupElement(v=(1.0, 0.0))
    h = GroupElement(tau=1.0)
    out = compose(EXT, p, g, h)
    assert out.phase == pytest.approx(-0.5, abs=1e-15)
    assert out.u == pytest.approx((1.0, 0.0))
    assert out.v == (1.0, 0.0)
    assert out.tau == 1.0


def test_boost_charge_term_isolated():
    p = ExtensionParams(2, 0, 0)
    g = GroupElement(v=(1.0, 0.0))
    h = GroupElement(v=(0.0, 1.0))
    assert cocycle_exponent(EXT, p, g, h) == pytest.approx(-1.0, abs=1e-15)


def test_rotation_time_charge_term_isolated():
    p = ExtensionParams(0, 0, 3)
    g = GroupElement(theta=math.pi)
    h = GroupElement(tau=2.0)
    assert cocycle_exponent(COV, p, g, h) == pytest.approx(6 * math.pi, abs=1e-12)


def test_cocycle_is_normalized():
    rng = random.Random(3)
    p = ExtensionParams(F(1), F(2), F(3))
    for _ in range(20):
        g = random_element(rng)
        assert cocycle_exponent(COV, p, g, IDENTITY) == 0
        assert cocycle_exponent(COV, p, IDENTITY, g) == 0


def test_extension_kind_rejects_l():
    with pytest.raises(ValueError):
        compose(EXT, ExtensionParams(0, 0, 1), IDENTITY, IDENTITY)
    with pytest.raises(ValueError):
        inverse(EXT, ExtensionParams(0, 0, 1), IDENTITY)


def test_inverse_round_trip():
    rng = random.Random(4)
    p = ExtensionParams(F(2), F(-1), F(1, 2))
    assert inverse(COV, p, IDENTITY) == IDENTITY
    rot = GroupElement(theta=0.7)
    assert inverse(COV, p, rot) == GroupElement(theta=-0.7)
    for _ in range(100):
        g = random_element(rng)
        gi = inverse(COV, p, g)
        assert element_distance(compose(COV, p, g, gi), IDENTITY) < TOL
        assert element_distance(compose(COV, p, gi, g), IDENTITY) < TOL


def test_inverse_exact_mode():
    rng = random.Random(5)
    p = ExtensionParams(F(2), F(-1), F(1, 2))
    for _ in range(50):
        g = random_rational_element(rng)
        gi = inverse(COV, p, g)
        assert compose(COV, p, g, gi) == IDENTITY
        assert compose(COV, p, gi, g) == IDENTITY


def test_associativity_float_mode():
    rng = random.Random(6)
    for _ in range(20):
        p = random_params(rng)
        p_ext = ExtensionParams(p.k, p.m, F(0))
        for _ in range(50):
            g, h, f = (random_element(rng) for _ in range(3))
            assert associativity_defect(COV, p, g, h, f) < TOL
            assert associativity_defect(EXT, p_ext, g, h, f) < TOL


def test_associativity_exact_mode():
    rng = random.Random(7)
    for _ in range(10):
        p = random_params(rng)
        for _ in range(20):
            g, h, f = (random_rational_element(rng) for _ in range(3))
            d = associativity_defect(COV, p, g, h, f)
            assert d == 0 and not isinstance(d, float)


def test_corrupted_law_fails_associativity():
    # dropping the rotation in front of u' breaks the cocycle identity
    p = ExtensionParams(0, 1, 0)

    def bad_xi(g, h):
        return -(g.v[0] ** 2 + g.v[1] ** 2) / 2 * h.tau - (
            g.v[0] * h.u[0] + g.v[1] * h.u[1]
        )

    rng = random.Random(8)
    worst = 0.0
    for _ in range(50):
        g, h, f = (random_element(rng) for _ in range(3))
        left = compose_with_exponent(compose_with_exponent(g, h, bad_xi), f, bad_xi)
        right = compose_with_exponent(g, compose_with_exponent(h, f, bad_xi), bad_xi)
        worst = max(worst, element_distance(left, right))
    assert worst > 0.05


def test_covering_matches_extension_when_l_vanishes():
    rng = random.Random(9)
    p = ExtensionParams(F(3, 2), F(-2), F(0))
    for _ in range(100):
        g, h = random_element(rng), random_element(rng)
        a = compose(COV, p, g, h)
        b = compose(EXT, p, g, h)
        assert element_distance(a, b, EXT) < TOL


def test_zero_coboundary_keeps_xi():
    p = ExtensionParams(F(1), F(2), F(0))
    xi = lambda g, h: cocycle_exponent(EXT, p, g, h)
    shifted = apply_coboundary(xi, lambda g: 0)
    rng = random.Random(10)
    for _ in range(20):
        g, h = random_element(rng), random_element(rng)
        assert shifted(g, h) == xi(g, h)


def test_additive_zeta_has_zero_coboundary():
    shifted = apply_coboundary(lambda g, h: 0, lambda g: 5.0 * g.tau)
    rng = random.Random(11)
    for _ in range(20):
        g, h = random_element(rng), random_element(rng)
        assert shifted(g, h) == pytest.approx(0.0, abs=1e-14)


def test_coboundary_of_anything_is_a_cocycle():
    # starting from xi = 0, any zeta produces an associative law
    zetas = [
        lambda g: g.v[0] ** 2 + 0.3 * g.u[1] * g.tau,
        lambda g: math.sin(g.theta) * g.u[0] + g.tau ** 2,
    ]
    rng = random.Random(12)
    for zeta in zetas:
        xi = apply_coboundary(lambda g, h: 0, zeta)
        for _ in range(50):
            g, h, f = (random_element(rng) for _ in range(3))
            left = compose_with_exponent(compose_with_exponent(g, h, xi), f, xi)
            right = compose_with_exponent(g, compose_with_exponent(h, f, xi), xi)
            assert element_distance(left, right) < 1e-11


def test_coboundary_shift_of_group_law_stays_associative():
    p = ExtensionParams(F(1), F(2), F(3))
    xi = lambda g, h: cocycle_exponent(COV, p, g, h)
    shifted = apply_coboundary(xi, lambda g: 0.7 * g.v[0] * g.u[0] - g.tau * g.theta)
    rng = random.Random(13)
    for _ in range(50):
        g, h, f = (random_element(rng) for _ in range(3))
        left = compose_with_exponent(compose_with_exponent(g, h, shifted), f, shifted)
        right = compose_with_exponent(g, compose_with_exponent(h, f, shifted), shifted)
        assert element_distance(left, right) < 1e-11


def test_charge_removal_fixes_boosts_and_small_elements():
    p = ExtensionParams(F(3), F(2), F(0))
    g = GroupElement(v=(0, 0), u=(1, 2), tau=3, theta=0.4)
    assert eliminate_k_map(p, g) == g  # shift proportional to v
    assert eliminate_k_map(ExtensionParams(F(0), F(2), F(0)), g) == g
    with pytest.raises(ValueError):
        eliminate_k_map(ExtensionParams(F(1), F(0), F(0)), g)


def test_charge_removal_is_homomorphism_float():
    rng = random.Random(14)
    p_k = ExtensionParams(F(1), F(2), F(0))
    p_0 = ExtensionParams(F(0), F(2), F(0))
    phi = lambda g: eliminate_k_map(p_k, g)
    for _ in range(200):
        g, h = random_element(rng), random_element(rng)
        assert homomorphism_defect(EXT, p_k, p_0, phi, g, h) < TOL


def test_charge_removal_is_homomorphism_exact():
    rng = random.Random(15)
    for _ in range(10):
        p = random_params(rng, nonzero_m=True)
        p_k = ExtensionParams(p.k, p.m, F(0))
        p_0 = ExtensionParams(F(0), p.m, F(0))
        phi = lambda g: eliminate_k_map(p_k, g)
        for _ in range(20):
            g, h = random_rational_element(rng), random_rational_element(rng)
            d = homomorphism_defect(EXT, p_k, p_0, phi, g, h)
            assert d == 0 and not isinstance(d, float)


def test_charge_removal_wrong_sign_fails():
    p_k = ExtensionParams(F(1), F(2), F(0))
    p_0 = ExtensionParams(F(0), F(2), F(0))

    def bad(g):
        lam = p_k.k / (2 * p_k.m)
        return GroupElement(
            phase=g.phase, tau=g.tau,
            u=(g.u[0] - lam * g.v[1], g.u[1] + lam * g.v[0]),
            v=g.v, theta=g.theta,
        )

    rng = random.Random(16)
    worst = 0.0
    for _ in range(100):
        g, h = random_element(rng), random_element(rng)
        worst = max(worst, homomorphism_defect(EXT, p_k, p_0, bad, g, h))
    # analytic mismatch is (m lam + k/2)(v x R v') = k (v x R v') here
    assert worst > 0.1


def test_identity_map_between_equal_charges():
    p = ExtensionParams(F(1), F(2), F(0))
    rng = random.Random(17)
    for _ in range(20):
        g, h = random_element(rng), random_element(rng)
        assert homomorphism_defect(EXT, p, p, lambda x: x, g, h) == 0


def test_angle_distance_folds():
    assert angle_distance(0, 2 * math.pi) < 1e-12
    assert angle_distance(-math.pi, math.pi) < 1e-12
    assert angle_distance(F(3), F(3)) == 0
    assert not isinstance(angle_distance(F(3), F(3)), float)


def test_rotation_matrix_convention():
    # R(theta) = [[cos, sin], [-sin, cos]]
    x = rotate(math.pi / 2, (1.0, 0.0))
    assert x == pytest.approx((0.0, -1.0), abs=1e-15)
    y = rotate(math.pi / 2, (0.0, 1.0))
    assert y == pytest.approx((1.0, 0.0), abs=1e-15)
    assert rotate(0, (F(1, 2), F(3))) == (F(1, 2), F(3))


def test_element_json_round_trip():
    g = GroupElement(phase=0.5, tau=1.0, u=(2.0, 3.0), v=(-1.0, 0.25), theta=2.5)
    data = element_to_json(g)
    assert json.loads(json.dumps(data)) == data
    assert element_from_json(json.dumps(data)) == g


@settings(max_examples=50)
@given(
    tau=st.floats(-2, 2), ux=st.floats(-2, 2), vy=st.floats(-2, 2),
    theta=st.floats(-3, 3),
)
def test_pure_subgroup_composition_is_plain(tau, ux, vy, theta):
    # elements of each one-parameter subgroup compose without any twist
    p = ExtensionParams(F(1), F(2), F(3))
    for g in (
        GroupElement(tau=tau),
        GroupElement(u=(ux, 0.0)),
        GroupElement(theta=theta),
    ):
        out = compose(COV, p, g, g)
        assert out.phase == 0
    # boosts against boosts only see the k term
    b1, b2 = GroupElement(v=(0.0, vy)), GroupElement(v=(0.0, vy))
    assert cocycle_exponent(COV, p, b1, b2) == 0  # parallel boosts
