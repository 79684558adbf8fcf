"""Normal-ordered enveloping algebra of the extended Galilei algebra.

Monomials are written with the generators in the fixed sequence

    N1^a1 N2^a2 P1^b1 P2^b2 H^c M^d

and a polynomial is a sparse map from exponent tuples
(a1, a2, b1, b2, c, d) to rational coefficients.  The central element E
of the underlying algebra is evaluated to the scalar unit, so brackets
like [N1, P1] = m E contribute plain numbers when products are reordered.

Products are normalized by repeatedly replacing an adjacent out-of-order
pair X Y with Y X + [X, Y]; every rewrite either removes an inversion at
fixed degree or lowers the degree, so the process terminates.  The
leftmost out-of-order pair is rewritten first; confluence is certified
by the associativity tests rather than assumed.

All linear algebra here (the bounded-degree centralizer search) is exact
integer/rational arithmetic; no floating point enters this module.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .algebra import ExtensionParams, LieAlgebra, make_galilei_algebra

GEN_NAMES = ("N1", "N2", "P1", "P2", "H", "M")
NGEN = len(GEN_NAMES)

_ZERO = Fraction(0)
_ONE = Fraction(1)

Exponents = tuple  # length-6 tuple of non-negative ints
_UNIT_MONO: Exponents = (0,) * NGEN


def _word_to_mono(word: tuple) -> Exponents:
    m = [0] * NGEN
    for g in word:
        m[g] += 1
    return tuple(m)


def _mono_to_word(mono: Exponents) -> tuple:
    w = []
    for g, e in enumerate(mono):
        w.extend([g] * e)
    return tuple(w)


class NOPoly:
    """Normal-ordered polynomial: sparse {exponents: Fraction}, no zeros stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponents, Fraction] | None = None):
        cleaned = {}
        if terms:
            for mono, co in terms.items():
                co = co if isinstance(co, Fraction) else Fraction(co)
                if co:
                    cleaned[tuple(mono)] = co
        self.terms = cleaned

    # construction helpers
    @classmethod
    def zero(cls) -> "NOPoly":
        return cls()

    @classmethod
    def one(cls) -> "NOPoly":
        return cls({_UNIT_MONO: _ONE})

    @classmethod
    def generator(cls, name: str) -> "NOPoly":
        mono = [0] * NGEN
        mono[GEN_NAMES.index(name)] = 1
        return cls({tuple(mono): _ONE})

    @classmethod
    def scalar(cls, value) -> "NOPoly":
        return cls({_UNIT_MONO: Fraction(value)})

    # ring-module structure (multiplication needs an algebra: see no_mul)
    def __add__(self, other: "NOPoly") -> "NOPoly":
        out = dict(self.terms)
        for mono, co in other.terms.items():
            out[mono] = out.get(mono, _ZERO) + co
        return NOPoly(out)

    def __sub__(self, other: "NOPoly") -> "NOPoly":
        out = dict(self.terms)
        for mono, co in other.terms.items():
            out[mono] = out.get(mono, _ZERO) - co
        return NOPoly(out)

    def __neg__(self) -> "NOPoly":
        return NOPoly({m: -c for m, c in self.terms.items()})

    def __rmul__(self, scalar) -> "NOPoly":
        s = Fraction(scalar)
        return NOPoly({m: s * c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, NOPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Exponents) -> Fraction:
        return self.terms.get(tuple(mono), _ZERO)

    def max_abs_coefficient(self) -> Fraction:
        return max((abs(c) for c in self.terms.values()), default=_ZERO)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        order = lambda m: (sum(m), tuple(-e for e in m))
        for mono in sorted(self.terms, key=order):
            co = self.terms[mono]
            factors = [
                f"{GEN_NAMES[g]}^{e}" if e > 1 else GEN_NAMES[g]
                for g, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if co == 1 and factors:
                parts.append(body)
            elif co == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{co}*{body}" if factors else str(co))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


class _Rewriter:
    """Normal-ordering engine for one algebra, with a word-level cache."""

    def __init__(self, alg: LieAlgebra):
        try:
            e_idx = alg.index("E")
            gen_idx = [alg.index(n) for n in GEN_NAMES]
        except KeyError as exc:
            raise ValueError(
                "enveloping products need the extended Galilei basis labels"
            ) from exc
        # [g_a, g_b] = scalar*1 + sum of generator terms, E evaluated to 1
        table = {}
        for a in range(NGEN):
            for b in range(NGEN):
                row = alg.tensor[gen_idx[a]][gen_idx[b]]
                scalar = row[e_idx]
                terms = []
                for n, cn in enumerate(row):
                    if n == e_idx or not cn:
                        continue
                    try:
                        terms.append((gen_idx.index(n), cn))
                    except ValueError:
                        raise ValueError(
                            "bracket leaves the generator span; cannot "
                            "normal-order over this algebra"
                        ) from None
                table[(a, b)] = (scalar, tuple(terms))
        self._table = table
        self._cache: dict[tuple, dict] = {}

    def normal_form(self, word: tuple) -> dict:
        """{exponents: coeff} expansion of an arbitrary generator word."""
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if x > y:
                out: dict[Exponents, Fraction] = {}
                for mono, co in self.normal_form(word[:i] + (y, x) + word[i + 2:]).items():
                    out[mono] = out.get(mono, _ZERO) + co
                scalar, terms = self._table[(x, y)]
                if scalar:
                    for mono, co in self.normal_form(word[:i] + word[i + 2:]).items():
                        out[mono] = out.get(mono, _ZERO) + scalar * co
                for g, cg in terms:
                    for mono, co in self.normal_form(word[:i] + (g,) + word[i + 2:]).items():
                        out[mono] = out.get(mono, _ZERO) + cg * co
                out = {m: c for m, c in out.items() if c}
                self._cache[word] = out
                return out
        out = {_word_to_mono(word): _ONE}
        self._cache[word] = out
        return out


@lru_cache(maxsize=None)
def _rewriter(alg: LieAlgebra) -> _Rewriter:
    return _Rewriter(alg)


def no_mul(alg: LieAlgebra, p: NOPoly, q: NOPoly) -> NOPoly:
    """Product of p and q in the enveloping algebra, in normal order."""
    rw = _rewriter(alg)
    out: dict[Exponents, Fraction] = {}
    for m1, c1 in p.terms.items():
        w1 = _mono_to_word(m1)
        for m2, c2 in q.terms.items():
            f = c1 * c2
            for mono, co in rw.normal_form(w1 + _mono_to_word(m2)).items():
                out[mono] = out.get(mono, _ZERO) + f * co
    return NOPoly(out)


def no_commutator(alg: LieAlgebra, p: NOPoly, q: NOPoly) -> NOPoly:
    return no_mul(alg, p, q) - no_mul(alg, q, p)


def is_central(alg: LieAlgebra, p: NOPoly) -> bool:
    """True iff p commutes with every generator N1, N2, P1, P2, H, M."""
    return all(
        not no_commutator(alg, p, NOPoly.generator(name)) for name in GEN_NAMES
    )


def substitute_generators(
    alg: LieAlgebra, p: NOPoly, images: Mapping[str, NOPoly]
) -> NOPoly:
    """Apply a generator substitution and re-normalize products in `alg`.

    Generators absent from `images` map to themselves.  Used to transport
    polynomials along an algebra isomorphism given on the generators.
    """
    table = [images.get(name, NOPoly.generator(name)) for name in GEN_NAMES]
    out = NOPoly.zero()
    for mono, co in p.terms.items():
        acc = NOPoly.scalar(co)
        for g in _mono_to_word(mono):
            acc = no_mul(alg, acc, table[g])
        out = out + acc
    return out


# --- the invariants from the Casimir table ----------------------------------


def internal_energy(params: ExtensionParams) -> NOPoly:
    """H - (1/2m) (P1^2 + P2^2); requires m != 0."""
    if params.m == 0:
        raise ValueError("m = 0: internal energy is not defined")
    half = Fraction(1, 2) / params.m
    return NOPoly(
        {
            (0, 0, 0, 0, 1, 0): _ONE,
            (0, 0, 2, 0, 0, 0): -half,
            (0, 0, 0, 2, 0, 0): -half,
        }
    )


def internal_angular_momentum(params: ExtensionParams) -> NOPoly:
    """M - (1/m)(N1 P2 - N2 P1) - (k/m) H; requires m != 0.

    Already in normal order (boosts precede momenta), so no reordering
    correction appears in the definition.
    """
    if params.m == 0:
        raise ValueError("m = 0: internal angular momentum is not defined")
    inv = 1 / params.m
    return NOPoly(
        {
            (0, 0, 0, 0, 0, 1): _ONE,
            (1, 0, 0, 1, 0, 0): -inv,
            (0, 1, 1, 0, 0, 0): inv,
            (0, 0, 0, 0, 1, 0): -params.k * inv,
        }
    )


def momentum_squared() -> NOPoly:
    """P1^2 + P2^2 (the m = 0 invariant)."""
    return NOPoly({(0, 0, 2, 0, 0, 0): _ONE, (0, 0, 0, 2, 0, 0): _ONE})


def boost_momentum_cross() -> NOPoly:
    """N1 P2 - N2 P1 (invariant only when both m = 0 and k = 0)."""
    return NOPoly({(1, 0, 0, 1, 0, 0): _ONE, (0, 1, 1, 0, 0, 0): -_ONE})


# --- bounded-degree centralizer ----------------------------------------------


@dataclass(frozen=True)
class CentralizerBasis:
    elements: tuple[NOPoly, ...]
    max_degree: int

    @property
    def dimension(self) -> int:
        return len(self.elements)


def monomials_up_to(max_degree: int) -> list[Exponents]:
    """All exponent tuples of total degree <= max_degree, graded order."""
    out = []
    for total in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(NGEN), total):
            out.append(_word_to_mono(combo))
    return out


def _integer_rows(rows: Iterable[Mapping[int, Fraction]]) -> list[dict]:
    """Clear denominators and common factors; keeps elimination in Z."""
    out = []
    for row in rows:
        if not row:
            continue
        den = lcm(*(c.denominator for c in row.values()))
        ints = {j: int(c * den) for j, c in row.items()}
        g = gcd(*ints.values())
        out.append({j: v // g for j, v in ints.items()})
    return out


def _eliminate(rows: list[dict]) -> dict[int, dict]:
    """Fraction-free forward elimination; returns {pivot column: row}."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                if row[col] < 0:
                    row = {j: -v for j, v in row.items()}
                g = gcd(*row.values())
                pivots[col] = {j: v // g for j, v in row.items()}
                break
            a, b = pivot[col], row[col]
            new = {}
            for j, v in row.items():
                w = a * v - b * pivot.get(j, 0)
                if w:
                    new[j] = w
            for j, pv in pivot.items():
                if j not in row:
                    w = -b * pv
                    if w:
                        new[j] = w
            # drop the shared content so the integers stay small
            if new:
                g = gcd(*new.values())
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
            row = new
    return pivots


def exact_nullspace(
    rows: Iterable[Mapping[int, Fraction]], ncols: int
) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0} over the rationals, one vector per free column.

    Forward elimination is fraction-free (integer cross-multiplication
    with gcd reduction); back-substitution assembles exact rational
    solutions which are then scaled to primitive integer vectors.
    """
    pivots = _eliminate(_integer_rows(rows))
    pivot_cols = sorted(pivots, reverse=True)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [_ZERO] * ncols
        vec[free] = _ONE
        for col in pivot_cols:  # descending: later pivots are already final
            row = pivots[col]
            s = sum((Fraction(v) * vec[j] for j, v in row.items() if j != col), _ZERO)
            if s:
                vec[col] = -s / row[col]
        den = lcm(*(c.denominator for c in vec if c)) if any(vec) else 1
        vec = [c * den for c in vec]
        basis.append(tuple(vec))
    return basis


def centralizer_basis(alg: LieAlgebra, max_degree: int) -> CentralizerBasis:
    """All degree <= max_degree polynomials commuting with every generator.

    Sets up the exact linear system [g, sum_m x_m X^m] = 0 for each
    generator g over the graded monomial list and returns a basis of its
    kernel.  Scalars are always present, so the dimension is >= 1.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    monos = monomials_up_to(max_degree)
    rows: dict[tuple, dict[int, Fraction]] = {}
    for name in GEN_NAMES:
        gen = NOPoly.generator(name)
        for col, mono in enumerate(monos):
            com = no_commutator(alg, gen, NOPoly({mono: _ONE}))
            for rmono, co in com.terms.items():
                rows.setdefault((name, rmono), {})[col] = co
    kernel = exact_nullspace(rows.values(), len(monos))
    elements = tuple(
        NOPoly({monos[i]: c for i, c in enumerate(vec) if c}) for vec in kernel
    )
    return CentralizerBasis(elements, max_degree)


def in_span(polys: Sequence[NOPoly], p: NOPoly) -> bool:
    """Exact membership of p in the linear span of `polys`."""
    support = sorted({m for q in polys for m in q.terms} | set(p.terms))
    sidx = {m: i for i, m in enumerate(support)}
    # solve sum_j x_j polys[j] = p by elimination on the augmented columns
    aug = len(polys)
    rows = []
    for m in support:
        row = {j: q.terms.get(m, _ZERO) for j, q in enumerate(polys) if m in q.terms}
        if m in p.terms:
            row[aug] = p.terms[m]
        if row:
            rows.append(row)
    pivots = _eliminate(_integer_rows(rows))
    # inconsistent iff some pivot sits in the augmented column
    return all(col != aug for col in pivots)


# --- serialization -----------------------------------------------------------


def poly_to_json(p: NOPoly) -> dict:
    """{"a1,a2,b1,b2,c,d": "coeff"} with exact rational strings."""
    return {
        ",".join(map(str, mono)): str(co)
        for mono, co in sorted(p.terms.items())
    }


def poly_from_json(data) -> NOPoly:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    terms = {}
    for key, cs in data.items():
        mono = tuple(int(x) for x in key.split(","))
        if len(mono) != NGEN or any(e < 0 for e in mono):
            raise ValueError(f"bad exponent key {key!r}")
        terms[mono] = Fraction(cs)
    return NOPoly(terms)


def galilei_enveloping(params: ExtensionParams) -> LieAlgebra:
    """Convenience: the algebra most callers normal-order over."""
    return make_galilei_algebra(params)
