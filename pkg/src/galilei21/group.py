"""Composition engine for the centrally extended planar Galilei group.

An element is (phase, tau, u, v, theta): the U(1) factor is stored as
its real exponent (zeta = exp(i*phase)) so phases compose additively and
compare modulo 2*pi.  tau is the time translation, u the space
translation, v the boost velocity and theta the rotation angle, acting
through

    R(theta) = [[cos theta, sin theta], [-sin theta, cos theta]].

Two group laws are provided:

* EXTENDED - the extension of the Galilei group itself, charges (k, m),
  l must vanish; theta is an angle modulo 2*pi for equality purposes.
* COVERING - the extension of the universal covering group, all three
  charges act and theta lives on the whole real line.

The product is

    g * h = (phase + phase' + xi(g, h), tau + tau',
             R(theta) u' + v tau' + u, R(theta) v' + v, theta + theta')

with the phase increment

    xi = -m (v^2/2 tau' + v . R(theta) u') - (k/2) (v x R(theta) v')
         [+ l theta tau'   on the covering]

Everything is written so that elements with theta = 0 and Fraction
components compose in exact rational arithmetic; with float components
the usual double-precision trigonometry applies.  All values are
immutable and all functions pure.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import ExtensionParams

TWO_PI = 2 * math.pi


class GroupKind(enum.Enum):
    EXTENDED = "extended"
    COVERING = "covering"


@dataclass(frozen=True)
class GroupElement:
    phase: object = 0
    tau: object = 0
    u: tuple = (0, 0)
    v: tuple = (0, 0)
    theta: object = 0

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))


IDENTITY = GroupElement()


def rotate(theta, vec: tuple) -> tuple:
    """Apply R(theta); the theta == 0 branch keeps exact scalars exact."""
    if theta == 0:
        return (vec[0], vec[1])
    c, s = math.cos(theta), math.sin(theta)
    return (c * vec[0] + s * vec[1], -s * vec[0] + c * vec[1])


def cross(a: tuple, b: tuple):
    """Planar cross product a x b = a1 b2 - a2 b1 (eps_12 = +1)."""
    return a[0] * b[1] - a[1] * b[0]


def dot(a: tuple, b: tuple):
    return a[0] * b[0] + a[1] * b[1]


def _check_kind(kind: GroupKind, params: ExtensionParams):
    if kind is GroupKind.EXTENDED and params.l != 0:
        raise ValueError(
            "l != 0 does not integrate on the Galilei group itself; "
            "use GroupKind.COVERING"
        )


def cocycle_exponent(
    kind: GroupKind, params: ExtensionParams, g: GroupElement, h: GroupElement
):
    """Phase increment xi(g, h) of the product beyond phase_g + phase_h."""
    _check_kind(kind, params)
    ru = rotate(g.theta, h.u)
    rv = rotate(g.theta, h.v)
    xi = -params.m * (dot(g.v, g.v) * Fraction(1, 2) * h.tau + dot(g.v, ru)) \
        - params.k * Fraction(1, 2) * cross(g.v, rv)
    if kind is GroupKind.COVERING:
        xi = xi + params.l * g.theta * h.tau
    return xi


def _base_product(g: GroupElement, h: GroupElement, phase) -> GroupElement:
    ru = rotate(g.theta, h.u)
    rv = rotate(g.theta, h.v)
    return GroupElement(
        phase=phase,
        tau=g.tau + h.tau,
        u=(ru[0] + g.v[0] * h.tau + g.u[0], ru[1] + g.v[1] * h.tau + g.u[1]),
        v=(rv[0] + g.v[0], rv[1] + g.v[1]),
        theta=g.theta + h.theta,
    )


def compose(
    kind: GroupKind, params: ExtensionParams, g: GroupElement, h: GroupElement
) -> GroupElement:
    xi = cocycle_exponent(kind, params, g, h)
    return _base_product(g, h, g.phase + h.phase + xi)


def compose_with_exponent(
    g: GroupElement, h: GroupElement, xi: Callable[[GroupElement, GroupElement], object]
) -> GroupElement:
    """The group law twisted by an arbitrary phase pair-function."""
    return _base_product(g, h, g.phase + h.phase + xi(g, h))


def galilei_product(g: GroupElement, h: GroupElement) -> GroupElement:
    """Underlying product with no phase twist (phase components still add)."""
    return _base_product(g, h, g.phase + h.phase)


def inverse(kind: GroupKind, params: ExtensionParams, g: GroupElement) -> GroupElement:
    """Two-sided inverse under the twisted law (phases modulo 2*pi)."""
    _check_kind(kind, params)
    rminus = lambda w: rotate(-g.theta, w)
    v_inv = rminus((-g.v[0], -g.v[1]))
    u_inv = rminus((g.v[0] * g.tau - g.u[0], g.v[1] * g.tau - g.u[1]))
    partial = GroupElement(phase=0, tau=-g.tau, u=u_inv, v=v_inv, theta=-g.theta)
    xi = cocycle_exponent(kind, params, g, partial)
    return GroupElement(
        phase=-g.phase - xi, tau=partial.tau, u=partial.u, v=partial.v,
        theta=partial.theta,
    )


def angle_distance(a, b):
    """|a - b| folded into [0, pi]; exact zero stays exact."""
    d = a - b
    if d == 0:
        return d * 0  # preserves int/Fraction zero
    return abs((float(d) + math.pi) % TWO_PI - math.pi)


def element_distance(a: GroupElement, b: GroupElement, kind: GroupKind = GroupKind.COVERING):
    """Component-wise max distance; phase always mod 2*pi, theta too for EXTENDED."""
    ds = [
        angle_distance(a.phase, b.phase),
        abs(a.tau - b.tau),
        abs(a.u[0] - b.u[0]),
        abs(a.u[1] - b.u[1]),
        abs(a.v[0] - b.v[0]),
        abs(a.v[1] - b.v[1]),
    ]
    if kind is GroupKind.EXTENDED:
        ds.append(angle_distance(a.theta, b.theta))
    else:
        ds.append(abs(a.theta - b.theta))
    return max(ds)


def associativity_defect(
    kind: GroupKind,
    params: ExtensionParams,
    g: GroupElement,
    h: GroupElement,
    f: GroupElement,
):
    """Executable 2-cocycle condition: distance of (gh)f from g(hf)."""
    left = compose(kind, params, compose(kind, params, g, h), f)
    right = compose(kind, params, g, compose(kind, params, h, f))
    return element_distance(left, right, kind)


def apply_coboundary(
    xi: Callable[[GroupElement, GroupElement], object],
    zeta: Callable[[GroupElement], object],
) -> Callable[[GroupElement, GroupElement], object]:
    """Shift a cocycle exponent by the coboundary of zeta.

    Returns xi'(g, h) = xi(g, h) + zeta(g h) - zeta(g) - zeta(h), where
    g h is the underlying product.  zeta must depend only on the group
    coordinates (tau, u, v, theta), not on the phase, which is not a
    coordinate of the quotient the cocycle lives on.
    """

    def shifted(g: GroupElement, h: GroupElement):
        return xi(g, h) + zeta(galilei_product(g, h)) - zeta(g) - zeta(h)

    return shifted


def eliminate_k_map(params: ExtensionParams, g: GroupElement) -> GroupElement:
    """Reparametrization u -> u + (k/2m)(v2, -v1) taking G_(k,m) onto G_(0,m).

    Requires m != 0.  With the shift in this direction the map Phi obeys
    compose_(0,m)(Phi g, Phi h) = Phi(compose_(k,m)(g, h)); the sign is
    frozen by the homomorphism regression test.
    """
    if params.m == 0:
        raise ValueError("m = 0: the charge k cannot be shifted away")
    lam = params.k / (2 * params.m)
    if lam == 0:
        return g
    return GroupElement(
        phase=g.phase,
        tau=g.tau,
        u=(g.u[0] + lam * g.v[1], g.u[1] - lam * g.v[0]),
        v=g.v,
        theta=g.theta,
    )


def homomorphism_defect(
    kind: GroupKind,
    params_a: ExtensionParams,
    params_b: ExtensionParams,
    mapping: Callable[[GroupElement], GroupElement],
    g: GroupElement,
    h: GroupElement,
):
    """Distance of compose_b(map g, map h) from map(compose_a(g, h))."""
    lhs = compose(kind, params_b, mapping(g), mapping(h))
    rhs = mapping(compose(kind, params_a, g, h))
    return element_distance(lhs, rhs, kind)


# --- serialization and sampling ----------------------------------------------


def element_to_json(g: GroupElement) -> dict:
    return {
        "phase": float(g.phase),
        "tau": float(g.tau),
        "u": [float(g.u[0]), float(g.u[1])],
        "v": [float(g.v[0]), float(g.v[1])],
        "theta": float(g.theta),
    }


def element_from_json(data) -> GroupElement:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    return GroupElement(
        phase=data["phase"],
        tau=data["tau"],
        u=tuple(data["u"]),
        v=tuple(data["v"]),
        theta=data["theta"],
    )


def random_element(rng, scale: float = 1.0, max_angle: float = math.pi) -> GroupElement:
    """Bounded random element from a seeded `random.Random` (float mode)."""
    r = lambda: rng.uniform(-scale, scale)
    return GroupElement(
        phase=rng.uniform(-math.pi, math.pi),
        tau=r(),
        u=(r(), r()),
        v=(r(), r()),
        theta=rng.uniform(-max_angle, max_angle),
    )


def random_rational_element(rng, max_num: int = 4, max_den: int = 4) -> GroupElement:
    """Random element with Fraction components and theta = 0 (exact mode)."""
    q = lambda: Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return GroupElement(phase=q(), tau=q(), u=(q(), q()), v=(q(), q()), theta=Fraction(0))
