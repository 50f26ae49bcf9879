"""Rational functions over Q.

Numerator and denominator are kept with integer coefficients, joint content
one and a positive leading denominator coefficient.  There is no
multivariate gcd: only monomial factors and exact quotients are cancelled,
so two equal functions may have different stored forms.  Equality is
decided by cross-multiplication.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ..errors import (
    DimensionMismatchError,
    IndeterminateCompositionError,
    PoleError,
    ZeroDenominatorError,
)
from .monomial import fieldwise_min
from .polynomial import Polynomial, as_rational, format_polynomial

SAMPLE_RANGE = 10**6


def _normal_pair(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.is_zero():
        raise ZeroDenominatorError("denominator is the zero polynomial")
    n = num.nvars
    if num.is_zero():
        return num, Polynomial.one(n)
    if den.is_constant():
        num = num.scale(Fraction(1) / as_rational(den.constant_value()))
        den = Polynomial.one(n)
    else:
        m = num.min_monomial_key() if num else 0
        if m:
            m = fieldwise_min(m, den.min_monomial_key())
            if m:
                num = num.unshift(m)
                den = den.unshift(m)
        if num == den:
            return Polynomial.one(n), Polynomial.one(n)
        if den.is_constant():
            num = num.scale(Fraction(1) / as_rational(den.constant_value()))
            den = Polynomial.one(n)
        elif num.degree() >= den.degree():
            q = num.divide_exact(den)
            if q is not None:
                num, den = q, Polynomial.one(n)
        elif len(num) <= len(den):
            q = den.divide_exact(num)
            if q is not None:
                num, den = Polynomial.one(n), q
    coeffs = list(num._t.values()) + list(den._t.values())
    scale = lcm(*(Fraction(c).denominator for c in coeffs))
    g = gcd(*(int(c * scale) for c in coeffs))
    factor = Fraction(scale, g)
    if den.leading_coefficient() < 0:
        factor = -factor
    if factor != 1:
        num = num.scale(factor)
        den = den.scale(factor)
    return num, den


class RationalFunction:
    """Immutable quotient ``num/den`` of polynomials in ``nvars`` variables.

    ``==`` is mathematical equality (cross-multiplication), so instances
    are deliberately unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            raise TypeError("numerator must be a Polynomial; use RationalFunction.constant")
        if den is None:
            den = Polynomial.one(num.nvars)
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(num.nvars, den)
        if den.nvars != num.nvars:
            raise DimensionMismatchError("numerator and denominator in different rings")
        self.num, self.den = _normal_pair(num, den)

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def constant(cls, nvars: int, c) -> RationalFunction:
        return cls(Polynomial.constant(nvars, c))

    @classmethod
    def variable(cls, nvars: int, i: int) -> RationalFunction:
        return cls._trusted(Polynomial.variable(nvars, i), Polynomial.one(nvars))

    @classmethod
    def of(cls, value, nvars: int) -> RationalFunction:
        if isinstance(value, RationalFunction):
            if value.nvars != nvars:
                raise DimensionMismatchError("rational function in the wrong ring")
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        return cls.constant(nvars, value)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    # predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self) -> int | Fraction | None:
        """The value if this function is constant, else ``None``."""
        if self.num.is_zero():
            return 0
        if self.num.is_constant() and self.den.is_constant():
            return as_rational(Fraction(self.num.constant_value()) / self.den.constant_value())
        if self.num.degree() != self.den.degree() or len(self.num) != len(self.den):
            return None
        lam = Fraction(self.num.leading_coefficient()) / self.den.leading_coefficient()
        if self.den.scale(lam) == self.num:
            return as_rational(lam)
        return None

    # arithmetic

    def _coerce(self, other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            if other.nvars != self.nvars:
                raise DimensionMismatchError(
                    f"rational functions in {self.nvars} and {other.nvars} variables"
                )
            return other
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatchError("polynomial in the wrong ring")
            return RationalFunction(other)
        try:
            return RationalFunction.constant(self.nvars, other)
        except TypeError:
            return None

    def _add(self, o: RationalFunction, sign: int) -> RationalFunction:
        bn = o.num if sign > 0 else -o.num
        if self.den == o.den:
            return RationalFunction(self.num + bn, self.den)
        # a constant denominator need not be 1: content normalisation keeps 1/2 as 1 over 2
        if o.den.is_constant():
            c = Fraction(1) / as_rational(o.den.constant_value())
            return RationalFunction(self.num + bn.scale(c) * self.den, self.den)
        if self.den.is_constant():
            c = Fraction(1) / as_rational(self.den.constant_value())
            return RationalFunction(self.num.scale(c) * o.den + bn, o.den)
        q = o.den.divide_exact(self.den)
        if q is not None:
            return RationalFunction(self.num * q + bn, o.den)
        q = self.den.divide_exact(o.den)
        if q is not None:
            return RationalFunction(self.num + bn * q, self.den)
        return RationalFunction(self.num * o.den + bn * self.den, self.den * o.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._add(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._add(o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._add(self, -1)

    def __neg__(self) -> RationalFunction:
        return RationalFunction._trusted(-self.num, self.den)

    @staticmethod
    def _product(n1: Polynomial, d1: Polynomial, n2: Polynomial, d2: Polynomial) -> RationalFunction:
        # opportunistic cross-cancellation keeps degrees down without a gcd
        if not d2.is_constant() and not n1.is_zero():
            q = n1.divide_exact(d2)
            if q is not None:
                n1, d2 = q, Polynomial.one(q.nvars)
        if not d1.is_constant() and not n2.is_zero():
            q = n2.divide_exact(d1)
            if q is not None:
                n2, d1 = q, Polynomial.one(q.nvars)
        return RationalFunction(n1 * n2, d1 * d2)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._product(self.num, self.den, o.num, o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return self._product(self.num, self.den, o.den, o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RationalFunction:
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if self.is_zero():
                raise ZeroDenominatorError("negative power of the zero function")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self, var: int) -> RationalFunction:
        dn = self.num.derivative(var)
        if self.den.is_constant():
            return RationalFunction(dn, self.den)
        dd = self.den.derivative(var)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    # evaluation and composition

    def evaluate(self, point: Sequence) -> int | Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(f"denominator {format_polynomial(self.den)} vanishes at {tuple(point)}")
        return as_rational(Fraction(self.num.evaluate(point)) / d)

    __call__ = evaluate

    def substitute(self, images: Sequence[RationalFunction]) -> RationalFunction:
        """Compose: replace x_i by images[i]; all images share one ring."""
        return rf_substitute(self, images)

    def extend(self, nvars: int) -> RationalFunction:
        return RationalFunction._trusted(self.num.extend(nvars), self.den.extend(nvars))

    def reindex(self, mapping: Sequence[int | None], nvars: int) -> RationalFunction:
        return RationalFunction(self.num.reindex(mapping, nvars), self.den.reindex(mapping, nvars))

    # comparison

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, RationalFunction) else other
        if o is None:
            return NotImplemented
        return rf_equal(self, o)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RationalFunction({self.nvars}, {self})"

    def __str__(self) -> str:
        return format_rational_function(self)


def format_rational_function(f: RationalFunction, names: Sequence[str] | None = None) -> str:
    n = format_polynomial(f.num, names)
    if f.den.is_constant() and f.den.constant_value() == 1:
        return n
    d = format_polynomial(f.den, names)
    if len(f.num) > 1:
        n = f"({n})"
    if len(f.den) > 1 or f.den.degree() > 0 and ("*" in d or "^" in d):
        d = f"({d})"
    return f"{n}/{d}"


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Functional form of field arithmetic, op in {'add','sub','mul','div'}."""
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"rational functions in {a.nvars} and {b.nvars} variables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def random_point(rng: random.Random, nvars: int, avoid: Sequence[Polynomial] = (),
                 bound: int = SAMPLE_RANGE, max_tries: int = 1000) -> list[int]:
    """Uniform integer point in [-bound, bound]^nvars off every ``avoid`` zero set."""
    for _ in range(max_tries):
        pt = [rng.randint(-bound, bound) for _ in range(nvars)]
        if all(p.evaluate(pt) != 0 for p in avoid):
            return pt
    raise RuntimeError("could not find a point avoiding the given hypersurfaces")


def rf_equal(a: RationalFunction, b: RationalFunction, *, rng: random.Random | None = None,
             trials: int = 2) -> bool:
    """Exact equality by cross-multiplication.

    With ``rng`` given, the cross-difference is first evaluated at ``trials``
    random integer points; a nonzero value proves inequality.  Agreement at
    the sample points never decides equality on its own.
    """
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"rational functions in {a.nvars} and {b.nvars} variables")
    if a.den == b.den:
        return a.num == b.num
    if rng is not None:
        for _ in range(trials):
            pt = [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(a.nvars)]
            if a.num.evaluate(pt) * b.den.evaluate(pt) != b.num.evaluate(pt) * a.den.evaluate(pt):
                return False
    return a.num * b.den == b.num * a.den


def _poly_over(p: Polynomial, nums: Sequence[Polynomial], dens: Sequence[Polynomial],
               m: int) -> tuple[Polynomial, list[int]]:
    """Numerator N and exponents D with p(nums/dens) = N / prod dens[i]**D[i]."""
    n = p.nvars
    top = [p.degree_in(i) if n else 0 for i in range(n)]
    trivial = [dens[i].is_constant() and dens[i].constant_value() == 1 for i in range(n)]
    for i in range(n):
        if trivial[i]:
            top[i] = 0 if top[i] >= 0 else top[i]
    npow: list[list[Polynomial]] = [[Polynomial.one(m), nums[i]] for i in range(n)]
    dpow: list[list[Polynomial]] = [[Polynomial.one(m), dens[i]] for i in range(n)]

    def power(table, i, e):
        row = table[i]
        while len(row) <= e:
            row.append(row[-1] * row[1])
        return row[e]

    total = Polynomial.zero(m)
    for exps, c in p.terms():
        t = Polynomial.constant(m, c)
        for i, e in enumerate(exps):
            if e:
                t = t * power(npow, i, e)
            if not trivial[i] and top[i] > e:
                t = t * power(dpow, i, top[i] - e)
        total = total + t
    return total, [max(t, 0) for t in top]


def rf_substitute(target: RationalFunction, images: Sequence[RationalFunction]) -> RationalFunction:
    """Exact composition ``target(images)``; denominators are cleared exactly."""
    if len(images) != target.nvars:
        raise DimensionMismatchError(
            f"{len(images)} images given for a function of {target.nvars} variables"
        )
    if not images:
        return target
    m = images[0].nvars
    if any(im.nvars != m for im in images):
        raise DimensionMismatchError("substitution images live in different rings")
    nums = [im.num for im in images]
    dens = [im.den for im in images]
    top_n, en = _poly_over(target.num, nums, dens, m)
    top_d, ed = _poly_over(target.den, nums, dens, m)
    if top_d.is_zero():
        raise IndeterminateCompositionError("substitution makes the denominator vanish identically")
    num, den = top_n, top_d
    for i in range(target.nvars):
        diff = ed[i] - en[i]
        if diff > 0:
            num = num * dens[i] ** diff
        elif diff < 0:
            den = den * dens[i] ** (-diff)
    return RationalFunction(num, den)
