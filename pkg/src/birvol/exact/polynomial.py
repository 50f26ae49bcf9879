"""Sparse multivariate polynomials over Q in canonical graded-lex form."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from ..errors import DimensionMismatchError, LimitError
from . import kernels as _k
from .monomial import (
    DEG_SHIFT,
    MAX_DEGREE,
    MAX_VARS,
    SHIFTS,
    FIELD_MASK,
    VAR_UNIT,
    degree as _key_degree,
    exponent as _key_exp,
    fieldwise_min,
    pack,
    unpack,
)

VAR_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}


def as_rational(c) -> int | Fraction:
    """Coerce to an exact rational, demoting integral fractions to int."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        f = Fraction(c.numerator, c.denominator)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _check_nvars(n: int) -> None:
    if not 0 <= n <= MAX_VARS:
        raise LimitError(f"number of variables must be in [0, {MAX_VARS}], got {n}")


class Polynomial:
    """Immutable polynomial in ``nvars`` variables x1..x{nvars}.

    Terms are stored as a dict from packed monomial keys to nonzero exact
    coefficients, so ``==`` is structural and mathematical equality at once.
    Iteration order (``terms()``) is descending graded lex.
    """

    __slots__ = ("nvars", "_t", "_hash", "_keys")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        _check_nvars(nvars)
        raw: dict = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise DimensionMismatchError(
                    f"monomial {tuple(exps)} does not have {nvars} exponents"
                )
            c = as_rational(c)
            if c:
                k = pack(exps)
                raw[k] = raw.get(k, 0) + c
        self.nvars = nvars
        self._t = _k.clean(raw)
        self._hash = None
        self._keys = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Polynomial:
        p = object.__new__(cls)
        p.nvars = nvars
        p._t = terms
        p._hash = None
        p._keys = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        _check_nvars(nvars)
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        _check_nvars(nvars)
        c = as_rational(c)
        return cls._raw(nvars, {0: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> Polynomial:
        _check_nvars(nvars)
        if not 0 <= index < nvars:
            raise DimensionMismatchError(f"variable index {index} out of range for {nvars} variables")
        return cls._raw(nvars, {VAR_UNIT[index]: 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> Polynomial:
        return cls(len(exponents), {tuple(exponents): coeff})

    # inspection

    def _sorted_keys(self) -> tuple[int, ...]:
        if self._keys is None:
            self._keys = tuple(sorted(self._t, reverse=True))
        return self._keys

    def terms(self) -> Iterator[tuple[tuple[int, ...], int | Fraction]]:
        for k in self._sorted_keys():
            yield unpack(k, self.nvars), self._t[k]

    def coefficient(self, exponents: Sequence[int]) -> int | Fraction:
        return self._t.get(pack(exponents), 0)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._t:
            return -1
        return self._sorted_keys()[0] >> DEG_SHIFT

    def degree_in(self, var: int) -> int:
        self._check_var(var)
        if not self._t:
            return -1
        return max(_key_exp(k, var) for k in self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> int | Fraction:
        """The value of a constant polynomial; raises if not constant."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def leading_key(self) -> int:
        return self._sorted_keys()[0]

    def leading_coefficient(self) -> int | Fraction:
        if not self._t:
            return 0
        return self._t[self._sorted_keys()[0]]

    def leading_monomial(self) -> tuple[int, ...]:
        return unpack(self._sorted_keys()[0], self.nvars)

    def variables(self) -> set[int]:
        """Indices of the variables that actually occur."""
        used = set()
        for k in self._t:
            for i in range(self.nvars):
                if (k >> SHIFTS[i]) & FIELD_MASK:
                    used.add(i)
        return used

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._t.values())

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive (0 for zero)."""
        if not self._t:
            return Fraction(0)
        den = lcm(*(Fraction(c).denominator for c in self._t.values()))
        g = gcd(*(int(c * den) for c in self._t.values()))
        return Fraction(g, den)

    def min_monomial_key(self) -> int:
        """Key of the largest monomial dividing every term (0 for zero)."""
        it = iter(self._t)
        try:
            m = next(it)
        except StopIteration:
            return 0
        for k in it:
            if m == 0:
                break
            m = fieldwise_min(m, k)
        return m

    # arithmetic

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatchError(
                    f"polynomials in {self.nvars} and {other.nvars} variables"
                )
            return other
        try:
            return Polynomial.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self.nvars, _k.add_terms(self._t, o._t, 1))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(self.nvars, _k.add_terms(self._t, o._t, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.nvars, {k: -c for k, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            o = self._coerce(other)
            if not self._t or not o._t:
                return Polynomial._raw(self.nvars, {})
            d = self.degree() + o.degree()
            if d > MAX_DEGREE:
                raise LimitError(f"product degree {d} exceeds the limit {MAX_DEGREE}")
            return Polynomial._raw(self.nvars, _k.mul_terms(self._t, o._t))
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return Polynomial._raw(self.nvars, _k.scale_terms(self._t, c))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        if n == 0:
            return Polynomial.one(self.nvars)
        if self.degree() * n > MAX_DEGREE:
            raise LimitError(f"power degree {self.degree() * n} exceeds the limit {MAX_DEGREE}")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        return Polynomial._raw(self.nvars, _k.scale_terms(self._t, as_rational(c)))

    def shift(self, key: int) -> Polynomial:
        """Multiply by the monomial with packed key ``key``."""
        if key and self._t and self.degree() + _key_degree(key) > MAX_DEGREE:
            raise LimitError("monomial shift exceeds the degree limit")
        return Polynomial._raw(self.nvars, _k.shift_terms(self._t, key))

    def unshift(self, key: int) -> Polynomial:
        """Divide by a monomial that divides every term."""
        return Polynomial._raw(self.nvars, {k - key: c for k, c in self._t.items()})

    def divide_exact(self, other: Polynomial) -> Polynomial | None:
        """``self / other`` if the division is exact, otherwise ``None``."""
        o = self._coerce(other)
        q = _k.divide_exact(self._t, o._t)
        return None if q is None else Polynomial._raw(self.nvars, q)

    def multiplicity(self, factor: Polynomial, limit: int = MAX_DEGREE) -> tuple[int, Polynomial]:
        """Largest m with factor**m dividing self, and the cofactor."""
        if factor.is_constant():
            raise ValueError("multiplicity of a constant factor is undefined")
        if self.is_zero():
            raise ValueError("multiplicity in the zero polynomial is undefined")
        m = 0
        cur = self
        while m < limit:
            q = cur.divide_exact(factor)
            if q is None:
                break
            cur = q
            m += 1
        return m, cur

    # calculus and evaluation

    def _check_var(self, var: int) -> None:
        if not 0 <= var < self.nvars:
            raise DimensionMismatchError(f"variable index {var} out of range for {self.nvars} variables")

    def derivative(self, var: int) -> Polynomial:
        self._check_var(var)
        return Polynomial._raw(self.nvars, _k.deriv_terms(self._t, var))

    def evaluate(self, point: Sequence) -> int | Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"point of length {len(point)} for a polynomial in {self.nvars} variables"
            )
        return _k.eval_terms(self._t, [as_rational(p) for p in point], self.nvars)

    __call__ = evaluate

    def coefficients_in(self, var: int) -> list[Polynomial]:
        """Coefficients with respect to x_var: self = sum c_j * x_var**j."""
        self._check_var(var)
        s = SHIFTS[var]
        buckets: dict[int, dict] = {}
        for k, c in self._t.items():
            e = (k >> s) & FIELD_MASK
            reduced = k - e * VAR_UNIT[var]
            buckets.setdefault(e, {})[reduced] = c
        top = max(buckets, default=-1)
        return [Polynomial._raw(self.nvars, buckets.get(j, {})) for j in range(top + 1)]

    # change of variables

    def reindex(self, mapping: Sequence[int | None], nvars: int) -> Polynomial:
        """Send variable i to variable mapping[i] in a ring of ``nvars`` variables.

        Variables mapped to ``None`` must not occur.  Several variables may
        share a target (their exponents add).
        """
        if len(mapping) != self.nvars:
            raise DimensionMismatchError("reindex mapping has the wrong length")
        _check_nvars(nvars)
        out: dict = {}
        for k, c in self._t.items():
            exps = [0] * nvars
            for i, e in enumerate(unpack(k, self.nvars)):
                if e:
                    j = mapping[i]
                    if j is None:
                        raise ValueError(f"variable x{i + 1} occurs but is being dropped")
                    exps[j] += e
            nk = pack(exps)
            out[nk] = out.get(nk, 0) + c
        return Polynomial._raw(nvars, _k.clean(out))

    def extend(self, nvars: int) -> Polynomial:
        """The same polynomial viewed in a ring with more variables."""
        if nvars < self.nvars:
            raise DimensionMismatchError("extend() cannot drop variables")
        _check_nvars(nvars)
        return Polynomial._raw(nvars, dict(self._t))

    def drop_variable(self, var: int) -> Polynomial:
        mapping = [i if i < var else (None if i == var else i - 1) for i in range(self.nvars)]
        return self.reindex(mapping, self.nvars - 1)

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Compose with polynomial images (one per variable)."""
        if len(images) != self.nvars:
            raise DimensionMismatchError("need one image per variable")
        if not images:
            return self
        m = images[0].nvars
        if any(im.nvars != m for im in images):
            raise DimensionMismatchError("images live in different rings")
        pows: list[list[Polynomial]] = [[Polynomial.one(m), im] for im in images]
        total = Polynomial.zero(m)
        for exps, c in self.terms():
            t = Polynomial.constant(m, c)
            for i, e in enumerate(exps):
                if e:
                    row = pows[i]
                    while len(row) <= e:
                        row.append(row[-1] * row[1])
                    t = t * row[e]
            total = total + t
        return total

    # dunder plumbing

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._t == other._t
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._t.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self})"

    def __str__(self) -> str:
        return format_polynomial(self)


def variable_name(i: int) -> str:
    return f"x{i + 1}"


def _format_monomial(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, names: Sequence[str] | None = None) -> str:
    """Render in the literal syntax accepted by the scenario language."""
    names = names or [variable_name(i) for i in range(p.nvars)]
    if p.is_zero():
        return "0"
    out = []
    for idx, (exps, c) in enumerate(p.terms()):
        mono = _format_monomial(exps, names)
        neg = c < 0
        a = -c if neg else c
        if mono:
            if a == 1:
                body = mono
            elif isinstance(a, Fraction):
                body = f"{a.numerator}/{a.denominator}*{mono}"
            else:
                body = f"{a}*{mono}"
        else:
            body = str(a)
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Functional form of ``a op b`` for op in {'add', 'sub', 'mul'}."""
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"polynomials in {a.nvars} and {b.nvars} variables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def variables(nvars: int) -> tuple[Polynomial, ...]:
    """Convenience: the coordinate polynomials x1..x{nvars}."""
    return tuple(Polynomial.variable(nvars, i) for i in range(nvars))


def from_terms(nvars: int, pairs: Iterable[tuple[Sequence[int], object]]) -> Polynomial:
    acc: dict = {}
    for exps, c in pairs:
        acc[tuple(exps)] = acc.get(tuple(exps), 0) + as_rational(c)
    return Polynomial(nvars, acc)
