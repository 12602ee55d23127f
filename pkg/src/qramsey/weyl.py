"""Exact arithmetic in the three-dimensional Weyl algebra.

Elements are noncommutative polynomials in the generators
``x, y, z, p_x, p_y, p_z`` kept in normal order (coordinates to the left of
momenta). Coefficients are Gaussian rationals times integer powers of hbar,
so ``1/hbar`` and ``-i*hbar`` are both representable without floating point.

The only rewrite rule is the canonical commutation relation
``p_k x_k = x_k p_k - i hbar``; generators on different axes commute.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple

from .errors import CatalogError

GENERATORS = ("x", "y", "z", "p_x", "p_y", "p_z")
AXES = ("x", "y", "z")

# (-i)^k for k mod 4, as (re, im)
_MINUS_I_POWERS = ((1, 0), (0, -1), (-1, 0), (0, 1))


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Scalar:
    """Laurent polynomial in hbar with Gaussian-rational coefficients.

    ``terms`` maps an hbar exponent to a ``(real, imag)`` pair of Fractions.
    Zero coefficients are never stored, so the empty map is zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, tuple] | None = None):
        clean = {}
        for exp, (re, im) in (terms or {}).items():
            re, im = Fraction(re), Fraction(im)
            if re or im:
                clean[int(exp)] = (re, im)
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict) -> "Scalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def of(cls, value=1, hbar: int = 0) -> "Scalar":
        """Coerce ``value`` (int, Fraction, complex with rational parts, or Scalar)."""
        if isinstance(value, Scalar):
            return value if hbar == 0 else value * cls.of(1, hbar)
        if isinstance(value, complex):
            re, im = Fraction(value.real), Fraction(value.imag)
        else:
            re, im = Fraction(value), Fraction(0)
        return cls({hbar: (re, im)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, complex)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, (re, im) in other._terms.items():
            if e in out:
                r0, i0 = out[e]
                re, im = r0 + re, i0 + im
                if re or im:
                    out[e] = (re, im)
                else:
                    del out[e]
            else:
                out[e] = (re, im)
        return Scalar._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._wrap({e: (-re, -im) for e, (re, im) in self._terms.items()})

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, (a, b) in self._terms.items():
            for e2, (c, d) in other._terms.items():
                e = e1 + e2
                re, im = a * c - b * d, a * d + b * c
                if e in out:
                    re, im = out[e][0] + re, out[e][1] + im
                out[e] = (re, im)
        return Scalar._wrap({e: v for e, v in out.items() if v[0] or v[1]})

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar._wrap({e: (re, -im) for e, (re, im) in self._terms.items()})

    def inverse(self) -> "Scalar":
        """Inverse of a single-term scalar ``c * hbar^k``; anything else raises."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in this ring")
        (e, (re, im)), = self._terms.items()
        norm = re * re + im * im
        return Scalar._wrap({-e: (re / norm, -im / norm)})

    def to_complex(self, hbar: float = 1.0) -> complex:
        return sum(
            (complex(float(re), float(im)) * hbar ** e for e, (re, im) in self._terms.items()),
            0j,
        )

    def _single_terms(self):
        for e in sorted(self._terms):
            re, im = self._terms[e]
            if re:
                yield e, re, False
            if im:
                yield e, im, True

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, q, imag in self._single_terms():
            sign = "-" if q < 0 else "+"
            parts.append((sign, _coefficient_text(abs(q), imag, e, bare=False)))
        text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Scalar({self})"


def _as_scalar(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction, complex)):
        return Scalar.of(value)
    return None


def _coefficient_text(q: Fraction, imag: bool, hbar_exp: int, bare: bool) -> str:
    """Text for ``q * [i] * hbar^e`` with q > 0.

    With ``bare`` the result may be empty (unit coefficient, to be followed
    by generator factors). Negative hbar powers are written as ``/hbar``
    suffixes on the numeric factor, which keeps the output inside the
    expression grammar.
    """
    factors = []
    if hbar_exp < 0:
        factors.append(_fmt_rational(q) + "/hbar" * (-hbar_exp))
    elif q != 1 or not bare or (not imag and hbar_exp == 0):
        factors.append(_fmt_rational(q))
    if imag:
        factors.append("i")
    if hbar_exp > 0:
        factors.append("hbar" if hbar_exp == 1 else f"hbar^{hbar_exp}")
    if bare and factors == ["1"]:
        return ""
    if factors[0] == "1" and len(factors) > 1:
        factors = factors[1:]
    return "*".join(factors)


ZERO = Scalar()
ONE = Scalar.of(1)
I = Scalar.of(1j)
HBAR = Scalar.of(1, hbar=1)


class Monomial(NamedTuple):
    """Exponents of a normal-ordered word ``x^a y^b z^c p_x^d p_y^e p_z^f``."""

    x: int = 0
    y: int = 0
    z: int = 0
    px: int = 0
    py: int = 0
    pz: int = 0

    @property
    def degree(self) -> int:
        return sum(self)

    def coordinate_part(self) -> "Monomial":
        return Monomial(self.x, self.y, self.z, 0, 0, 0)

    def momentum_part(self) -> "Monomial":
        return Monomial(0, 0, 0, self.px, self.py, self.pz)

    def __str__(self):
        factors = []
        for name, power in zip(("x", "y", "z", "px", "py", "pz"), self):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        return "*".join(factors) if factors else "1"


IDENTITY = Monomial()


@lru_cache(maxsize=None)
def _axis_product(a: int, b: int, c: int, d: int) -> tuple:
    """Normal-order ``x^a p^b * x^c p^d`` on one axis.

    Returns ``(count, k, x_power, p_power)`` tuples meaning
    ``count * (-i hbar)^k * x^(a+c-k) p^(b+d-k)``.
    """
    return tuple(
        (factorial(k) * comb(b, k) * comb(c, k), k, a + c - k, b + d - k)
        for k in range(min(b, c) + 1)
    )


@lru_cache(maxsize=65536)
def _monomial_product(m1: Monomial, m2: Monomial) -> tuple:
    """Normal-ordered product of two monomials as ``(Monomial, count, k)`` triples."""
    per_axis = [_axis_product(m1[i], m1[i + 3], m2[i], m2[i + 3]) for i in range(3)]
    out = []
    for (cx, kx, ax, bx), (cy, ky, ay, by), (cz, kz, az, bz) in product(*per_axis):
        out.append((Monomial(ax, ay, az, bx, by, bz), cx * cy * cz, kx + ky + kz))
    return tuple(out)


class OperatorPoly:
    """Normal-ordered element of the Weyl algebra.

    Immutable. ``terms`` maps :class:`Monomial` to nonzero :class:`Scalar`,
    so structural equality is operator equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Scalar.of(coeff)
            if coeff:
                clean[Monomial(*mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "OperatorPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def generator(cls, name: str) -> "OperatorPoly":
        idx = GENERATORS.index(_GENERATOR_ALIASES.get(name, name))
        exps = [0] * 6
        exps[idx] = 1
        return cls._wrap({Monomial(*exps): ONE})

    @classmethod
    def constant(cls, value) -> "OperatorPoly":
        value = Scalar.of(value)
        return cls._wrap({IDENTITY: value} if value else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def scalar_value(self) -> Scalar | None:
        """The scalar if this is a multiple of the identity, else None."""
        if not self._terms:
            return ZERO
        if len(self._terms) == 1 and IDENTITY in self._terms:
            return self._terms[IDENTITY]
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, complex, Scalar)):
            other = OperatorPoly.constant(other)
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return linear_combine([(ONE, self), (ONE, other)])

    __radd__ = __add__

    def __neg__(self):
        return OperatorPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return linear_combine([(ONE, self), (-ONE, other)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            return mul(self, other)
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return linear_combine([(other, self)])

    def __rmul__(self, other):
        # scalars are central
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return linear_combine([(other, self)])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = OperatorPoly.constant(1)
        for _ in range(n):
            result = mul(result, self)
        return result

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: (mc[0].degree, tuple(mc[0])))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self.sorted_terms():
            single = list(coeff._single_terms())
            if len(single) == 1:
                e, q, imag = single[0]
                sign = "-" if q < 0 else "+"
                head = _coefficient_text(abs(q), imag, e, bare=mono != IDENTITY)
            else:
                sign = "+"
                head = f"({coeff})"
            body = head if mono == IDENTITY else ("*".join(filter(None, [head, str(mono)])))
            chunks.append((sign, body))
        text = chunks[0][1] if chunks[0][0] == "+" else "-" + chunks[0][1]
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"OperatorPoly({self})"


def _as_poly(value):
    if isinstance(value, OperatorPoly):
        return value
    scalar = _as_scalar(value)
    return None if scalar is None else OperatorPoly.constant(scalar)


def linear_combine(pairs: Iterable[tuple]) -> OperatorPoly:
    """Exact sum of ``s_i * A_i`` over ``(scalar, poly)`` pairs."""
    acc: dict = {}
    for s, poly in pairs:
        s = Scalar.of(s)
        if not s:
            continue
        for mono, coeff in poly._terms.items():
            term = s * coeff
            acc[mono] = acc[mono] + term if mono in acc else term
    return OperatorPoly._wrap({m: c for m, c in acc.items() if c})


def mul(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    """Normal-ordered product ``a * b``.

    Uses the closed form on each axis::

        x^a p^b * x^c p^d = sum_k k! C(b,k) C(c,k) (-i hbar)^k x^(a+c-k) p^(b+d-k)
    """
    acc: dict = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            base = (c1 * c2)._terms
            for mono, count, k in _monomial_product(m1, m2):
                pr, pi = _MINUS_I_POWERS[k % 4]
                slot = acc.setdefault(mono, {})
                for e, (re, im) in base.items():
                    # count * (-i)^k * (re + i im), shifted by hbar^k
                    nr = count * (re * pr - im * pi)
                    ni = count * (re * pi + im * pr)
                    ek = e + k
                    if ek in slot:
                        r0, i0 = slot[ek]
                        slot[ek] = (r0 + nr, i0 + ni)
                    else:
                        slot[ek] = (nr, ni)
    out = {}
    for mono, slot in acc.items():
        terms = {e: v for e, v in slot.items() if v[0] or v[1]}
        if terms:
            out[mono] = Scalar._wrap(terms)
    return OperatorPoly._wrap(out)


@lru_cache(maxsize=4096)
def commutator(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    """``[a, b] = a b - b a``. Memoized: graph building asks for the same pairs repeatedly."""
    return linear_combine([(ONE, mul(a, b)), (-ONE, mul(b, a))])


def is_zero(a: OperatorPoly) -> bool:
    return a.is_zero()


def adjoint(a: OperatorPoly) -> OperatorPoly:
    """Formal adjoint: reverse each word, conjugate coefficients, re-normal-order.

    The reversed word of ``X P`` (all coordinates, then all momenta) is
    ``P X``, so each monomial's adjoint is the product of its momentum part
    by its coordinate part.
    """
    pairs = []
    for mono, coeff in a._terms.items():
        p_part = OperatorPoly._wrap({mono.momentum_part(): ONE})
        x_part = OperatorPoly._wrap({mono.coordinate_part(): ONE})
        pairs.append((coeff.conjugate(), mul(p_part, x_part)))
    return linear_combine(pairs)


@lru_cache(maxsize=4096)
def is_hermitian(a: OperatorPoly) -> bool:
    return adjoint(a) == a


_GENERATOR_ALIASES = {"px": "p_x", "py": "p_y", "pz": "p_z"}
BUILTIN_ALIASES = {
    "px": "p_x", "py": "p_y", "pz": "p_z",
    "lx": "l_x", "ly": "l_y", "lz": "l_z",
}
BUILTIN_NAMES = ("x", "y", "z", "p_x", "p_y", "p_z", "l_x", "l_y", "l_z", "L2")


def _angular(u: str, v: str) -> OperatorPoly:
    # (u p_v - v p_u) / hbar
    return linear_combine([
        (ONE, mul(OperatorPoly.generator(u), OperatorPoly.generator("p_" + v))),
        (-ONE, mul(OperatorPoly.generator(v), OperatorPoly.generator("p_" + u))),
    ]) * HBAR.inverse()


@lru_cache(maxsize=None)
def builtin(name: str) -> OperatorPoly:
    """Built-in observable by name (``x``..``p_z``, ``l_x``..``l_z``, ``L2``)."""
    name = BUILTIN_ALIASES.get(name, name)
    if name in GENERATORS:
        return OperatorPoly.generator(name)
    if name == "l_x":
        return _angular("y", "z")
    if name == "l_y":
        return _angular("z", "x")
    if name == "l_z":
        return _angular("x", "y")
    if name == "L2":
        return linear_combine((ONE, mul(builtin(n), builtin(n))) for n in ("l_x", "l_y", "l_z"))
    raise CatalogError(f"unknown polynomial operator {name!r}")
