import math
import random

import numpy as np
import pytest

from galilei21.contraction import (
    DEFAULT_C_GRID,
    ETA,
    BoostDecomposition,
    PoincareElement,
    boost_matrix,
    compose_boosts,
    contract_element,
    convergence_study,
    decompose,
    diagram_experiment,
    growth_slope,
    lorentz_defect,
    mass_cocycle_exponent,
    mass_experiment,
    poincare_from_galilei,
    poincare_product,
    report_csv_rows,
    report_summary,
    rotation_cocycle_exponent,
    rotation_matrix,
    sample_experiments,
    thomas_experiment,
    thomas_target,
)
from galilei21.group import GroupElement, angle_distance, galilei_product


def rand_vel(rng, lo=0.1, hi=0.9, c=1.0):
    speed = rng.uniform(lo, hi) * c
    ang = rng.uniform(0, 2 * math.pi)
    return (speed * math.cos(ang), speed * math.sin(ang))


def test_zero_velocity_boost_is_identity():
    assert np.array_equal(boost_matrix((0.0, 0.0), 5.0), np.eye(3))


def test_boost_matrix_textbook_values():
    # |v| = 3c/5 gives gamma = 5/4
    L = boost_matrix((3.0, 0.0), 5.0)
    assert float(L[0, 0]) == pytest.approx(1.25, abs=1e-15)
    assert float(L[1, 0]) == pytest.approx(0.75, abs=1e-15)
    assert float(L[0, 1]) == pytest.approx(0.75, abs=1e-15)
    assert float(L[2, 2]) == pytest.approx(1.0, abs=1e-15)


def test_boost_rejects_superluminal():
    with pytest.raises(ValueError):
        boost_matrix((1.0, 1.0), 1.0)


def test_boosts_and_rotations_are_lorentz():
    rng = random.Random(0)
    for _ in range(200):
        c = rng.uniform(1.0, 100.0)
        L = boost_matrix(rand_vel(rng, c=0.9 * c), c)
        assert lorentz_defect(L) < 1e-12
        R = rotation_matrix(rng.uniform(-10, 10))
        assert lorentz_defect(R) < 1e-12
        assert lorentz_defect(L @ R) < 1e-10


def test_poincare_element_validation():
    good = PoincareElement(np.eye(3), np.zeros(3), 1.0)
    assert good.c == 1.0
    with pytest.raises(ValueError):
        PoincareElement(2 * np.eye(3), np.zeros(3), 1.0)
    with pytest.raises(ValueError):
        PoincareElement(np.diag([-1.0, -1.0, 1.0]), np.zeros(3), 1.0)  # not orthochronous
    with pytest.raises(ValueError):
        PoincareElement(np.eye(3), np.zeros(3), -2.0)


def test_decompose_pure_rotation():
    p = PoincareElement(rotation_matrix(0.8), np.zeros(3), 10.0)
    dec = decompose(p)
    assert dec.v == pytest.approx((0.0, 0.0), abs=1e-14)
    assert float(dec.theta) == pytest.approx(0.8, abs=1e-14)


def test_decompose_round_trip():
    rng = random.Random(1)
    for _ in range(1000):
        c = rng.uniform(1.0, 50.0)
        v = rand_vel(rng, hi=0.9, c=c)
        th = rng.uniform(-math.pi, math.pi)
        p = poincare_from_galilei(rng.uniform(-2, 2), (0.0, 0.0), v, th, c)
        dec = decompose(p)
        assert float(dec.v[0]) == pytest.approx(v[0], abs=1e-10)
        assert float(dec.v[1]) == pytest.approx(v[1], abs=1e-10)
        assert float(angle_distance(float(dec.theta), th)) < 1e-10


def test_two_boosts_produce_rotation():
    v, th = compose_boosts((0.5, 0.0), (0.0, 0.5), 1.0)
    assert abs(float(th)) > 1e-3  # generic non-collinear pair
    # collinear boosts stay boosts
    _, th2 = compose_boosts((0.5, 0.0), (0.25, 0.0), 1.0)
    assert abs(float(th2)) < 1e-15


def test_wigner_angle_small_speed_value():
    c = 100.0
    _, dth = compose_boosts((1.0, 0.0), (0.0, 1.0), c)
    assert float(c * c * dth) == pytest.approx(0.5, rel=1e-4)


def test_wigner_angle_antisymmetry():
    rng = random.Random(2)
    for _ in range(50):
        c = rng.uniform(5.0, 50.0)
        v, w = rand_vel(rng, c=0.9 * c), rand_vel(rng, c=0.9 * c)
        _, a = compose_boosts(v, w, c)
        _, b = compose_boosts(w, v, c)
        assert float(a + b) == pytest.approx(0.0, abs=1e-12)


def test_thomas_target_values():
    assert thomas_target((1.0, 0.0), (0.0, 1.0)) == 0.5
    assert thomas_target((2.0, 0.0), (0.0, 1.0)) == 1.0
    assert thomas_target((1.0, 2.0), (0.5, 1.0)) == 0.0  # parallel


def test_boost_rotation_regrouping_identity():
    # L(v) R . L(v') R' = (L(v) L(R v')) (R R') entrywise
    rng = random.Random(3)
    for _ in range(100):
        c = rng.uniform(2.0, 100.0)
        v, vp = rand_vel(rng, c=0.85 * c), rand_vel(rng, c=0.85 * c)
        th, thp = rng.uniform(-3, 3), rng.uniform(-3, 3)
        lhs = (boost_matrix(v, c) @ rotation_matrix(th)) @ (
            boost_matrix(vp, c) @ rotation_matrix(thp)
        )
        rv = (
            math.cos(th) * vp[0] + math.sin(th) * vp[1],
            -math.sin(th) * vp[0] + math.cos(th) * vp[1],
        )
        rhs = (boost_matrix(v, c) @ boost_matrix(rv, c)) @ rotation_matrix(th + thp)
        assert float(np.max(np.abs(lhs - rhs))) < 1e-12 * float(np.max(np.abs(lhs)))


def test_mass_cocycle_trivial_cases():
    g = poincare_from_galilei(0.0, (0.0, 0.0), (1.0, 0.0), 0.0, 1000.0)
    h = poincare_from_galilei(0.0, (0.0, 0.0), (0.0, 0.0), 0.0, 1000.0)
    assert float(mass_cocycle_exponent(g, h)) == 0.0
    with pytest.raises(ValueError):
        mass_cocycle_exponent(g, poincare_from_galilei(0, (0, 0), (0, 0), 0, 10.0))


def test_mass_cocycle_limits():
    c = 1000.0
    boost = poincare_from_galilei(0.0, (0.0, 0.0), (1.0, 0.0), 0.0, c)
    time_step = poincare_from_galilei(1.0, (0.0, 0.0), (0.0, 0.0), 0.0, c)
    space_step = poincare_from_galilei(0.0, (1.0, 0.0), (0.0, 0.0), 0.0, c)
    assert float(mass_cocycle_exponent(boost, time_step)) == pytest.approx(0.5, rel=1e-5)
    assert float(mass_cocycle_exponent(boost, space_step)) == pytest.approx(1.0, rel=1e-6)


def test_rotation_cocycle_vanishes_on_rotations():
    c = 100.0
    out = rotation_cocycle_exponent(rotation_matrix(1.0), rotation_matrix(-2.5), c)
    assert abs(float(out)) < 1e-9 * c * c


def test_rotation_cocycle_matches_thomas_limit():
    c = 10000.0
    v, vp = (1.0, 0.0), (0.0, 1.0)
    out = rotation_cocycle_exponent(boost_matrix(v, c), boost_matrix(vp, c), c)
    assert float(out) == pytest.approx(0.5, rel=1e-6)
    # boost-then-rotation vs rotation-then-boost agree in the limit
    th = 0.7
    a = rotation_cocycle_exponent(
        boost_matrix(v, c) @ rotation_matrix(th), boost_matrix(vp, c), c
    )
    rv = (math.cos(th) * vp[0] + math.sin(th) * vp[1],
          -math.sin(th) * vp[0] + math.cos(th) * vp[1])
    b = rotation_cocycle_exponent(
        rotation_matrix(th) @ boost_matrix(rv, c), boost_matrix(vp, c) , c
    )
    assert float(a) == pytest.approx(thomas_target(v, rv), rel=1e-4)


def test_contract_identity_and_translation():
    c = 50.0
    assert contract_element(
        PoincareElement(np.eye(3), np.zeros(3), c)
    ) == GroupElement(phase=0.0, tau=0.0, u=(0.0, 0.0), v=(0.0, 0.0), theta=0.0)
    p = PoincareElement(np.eye(3), np.array([c * 2.0, 3.0, 4.0]), c)
    out = contract_element(p)
    assert out.tau == pytest.approx(2.0)
    assert out.u == pytest.approx((3.0, 4.0))


def test_contract_commutes_with_product_asymptotically():
    rng = random.Random(4)
    for c in (1e3, 1e5):
        for _ in range(20):
            data = lambda: (
                rng.uniform(0.5, 2.0),
                (rng.uniform(-2, 2), rng.uniform(-2, 2)),
                rand_vel(rng, hi=2.0, c=1.0),
                rng.uniform(-1.5, 1.5),
            )
            g = poincare_from_galilei(*data(), c)
            h = poincare_from_galilei(*data(), c)
            left = contract_element(poincare_product(g, h))
            right = galilei_product(contract_element(g), contract_element(h))
            worst = max(
                abs(left.tau - right.tau),
                abs(left.u[0] - right.u[0]), abs(left.u[1] - right.u[1]),
                abs(left.v[0] - right.v[0]), abs(left.v[1] - right.v[1]),
                float(angle_distance(left.theta, right.theta)),
            )
            assert worst < 100.0 / c ** 2


def test_convergence_study_guards():
    exp = thomas_experiment((1.0, 0.0), (0.0, 1.0), 0.0)
    with pytest.raises(ValueError):
        convergence_study(exp, [100.0])
    with pytest.raises(ValueError):
        convergence_study(exp, [100.0, 10.0, 1000.0])


def test_thomas_study_slope_and_limit():
    rng = random.Random(5)
    for exp in sample_experiments("thomas", rng, 5, min(DEFAULT_C_GRID)):
        rep = convergence_study(exp, DEFAULT_C_GRID)
        assert rep.fitted_slope == pytest.approx(-2.0, abs=0.1)
        # at the top of the grid the limit value is reached to 1e-3 relative
        assert rep.errors[-1] < 1e-3 * abs(rep.target)
        assert report_summary(rep)["pass"]


def test_mass_study_slope_and_zeta_growth():
    rng = random.Random(6)
    for exp in sample_experiments("mass", rng, 5, min(DEFAULT_C_GRID)):
        rep = convergence_study(exp, DEFAULT_C_GRID)
        assert rep.fitted_slope == pytest.approx(-2.0, abs=0.1)
        assert growth_slope(rep) == pytest.approx(2.0, abs=0.1)


def test_diagram_study_slope():
    rng = random.Random(7)
    for exp in sample_experiments("diagram", rng, 5, min(DEFAULT_C_GRID)):
        rep = convergence_study(exp, DEFAULT_C_GRID)
        assert rep.fitted_slope == pytest.approx(-2.0, abs=0.1)


def test_thomas_zeta_tracks_rotation_angle():
    exp = thomas_experiment((30.0, 0.0), (0.0, 40.0), 1.3)
    # zeta = c^2 theta(Lambda) diverges quadratically for theta != 0
    z2, z3 = exp.zeta_magnitude(1e2), exp.zeta_magnitude(1e3)
    assert z3 / z2 == pytest.approx(100.0, rel=1e-3)
    assert z2 == pytest.approx(1.3 * 1e4, rel=1e-2)


def test_report_csv_rows_shape():
    exp = mass_experiment((10.0, 0.0), 0.0, 1.0, (0.0, 0.0))
    rep = convergence_study(exp, (100.0, 1000.0, 10000.0))
    rows = report_csv_rows(rep)
    assert len(rows) == 3
    assert rows[0][0] == 100.0
    assert all(len(r) == 3 for r in rows)


def test_sample_experiments_rejects_unknown():
    with pytest.raises(ValueError):
        sample_experiments("nope", random.Random(0), 1, 100.0)


def test_limit_reproduces_group_cocycle_k_term():
    # the surviving exponent (v x R v')/2 is the group law's k-term at
    # k = 1; the project-wide phase convention makes the signs opposite
    from fractions import Fraction

    from galilei21.algebra import ExtensionParams
    from galilei21.group import GroupElement, GroupKind, cocycle_exponent

    rng = random.Random(8)
    c = 1e5
    for _ in range(20):
        v, vp = rand_vel(rng, hi=3.0, c=1.0), rand_vel(rng, hi=3.0, c=1.0)
        th = rng.uniform(-1.5, 1.5)
        limit = rotation_cocycle_exponent(
            boost_matrix(v, c) @ rotation_matrix(th), boost_matrix(vp, c), c
        )
        xi = cocycle_exponent(
            GroupKind.EXTENDED,
            ExtensionParams(Fraction(1), Fraction(0), Fraction(0)),
            GroupElement(v=v, theta=th),
            GroupElement(v=vp),
        )
        assert float(limit) == pytest.approx(-xi, rel=1e-6, abs=1e-8)
