"""Rational maps between affine charts.

A map is a tuple of rational functions in ``src_dim`` variables, one per
target coordinate.  Composition follows the "first, then" convention:
``compose(f, g)`` applies ``f`` and then ``g``, i.e. it substitutes the
coordinates of ``f`` into those of ``g``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    IndeterminateCompositionError,
    PoleError,
)
from .exact import Polynomial, RationalFunction, rf_substitute
from .exact.monomial import MAX_VARS
from .exact.ratfunc import format_rational_function

DEFAULT_MAX_ITER = 24


class RationalMap:
    """Immutable rational map ``A^src_dim --> A^dst_dim``.

    ``coords[i]`` is the i-th target coordinate as a function of the source
    variables.  Equality is coordinatewise equality of rational functions.
    """

    __slots__ = ("src_dim", "dst_dim", "coords", "name")

    def __init__(self, coords: Sequence, src_dim: int | None = None, name: str | None = None):
        coords = list(coords)
        if src_dim is None:
            rings = {c.nvars for c in coords if isinstance(c, (Polynomial, RationalFunction))}
            if len(rings) != 1:
                raise DimensionMismatchError(
                    "cannot infer the source dimension; pass src_dim explicitly"
                )
            src_dim = rings.pop()
        if not 1 <= src_dim <= MAX_VARS or not 1 <= len(coords) <= MAX_VARS:
            raise DimensionMismatchError(
                f"chart dimensions must lie in [1, {MAX_VARS}] (got {src_dim} -> {len(coords)})"
            )
        self.src_dim = src_dim
        self.dst_dim = len(coords)
        self.coords = tuple(RationalFunction.of(c, src_dim) for c in coords)
        self.name = name

    def named(self, name: str) -> RationalMap:
        return RationalMap(self.coords, self.src_dim, name)

    def __call__(self, point: Sequence):
        return eval_map(self, point)

    def then(self, other: RationalMap) -> RationalMap:
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMap):
            return NotImplemented
        return (
            self.src_dim == other.src_dim
            and self.dst_dim == other.dst_dim
            and all(a == b for a, b in zip(self.coords, other.coords))
        )

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational_function(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"RationalMap{label}[{self.src_dim}->{self.dst_dim}]{self}"


# constructors


def identity(n: int) -> RationalMap:
    return RationalMap([RationalFunction.variable(n, i) for i in range(n)], n, "id")


def monomial_map(matrix: Sequence[Sequence[int]]) -> RationalMap:
    """x -> x^A: target coordinate i is prod_j x_j ** A[i][j] (negative powers allowed)."""
    rows = [list(r) for r in matrix]
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("exponent matrix rows have different lengths")
    coords = []
    for r in rows:
        up = [max(e, 0) for e in r]
        down = [max(-e, 0) for e in r]
        coords.append(RationalFunction(Polynomial.monomial(up), Polynomial.monomial(down)))
    return RationalMap(coords, n, "monomial")


def cremona(n: int) -> RationalMap:
    """The standard Cremona involution read in the chart x0 = 1: x_i -> 1/x_i."""
    xs = [RationalFunction.variable(n, i) for i in range(n)]
    return RationalMap([1 / x for x in xs], n, f"sigma{n}")


def cluster_tau() -> RationalMap:
    """The order-5 cluster map (x, y) -> (y, (y + 1)/x)."""
    x, y = (RationalFunction.variable(2, i) for i in range(2))
    return RationalMap([y, (y + 1) / x], 2, "tau")


# algebra


def compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """``f`` first, then ``g``: the coordinates g_i(f_1, ..., f_m)."""
    if f.dst_dim != g.src_dim:
        raise DimensionMismatchError(
            f"cannot compose a map to A^{f.dst_dim} with a map from A^{g.src_dim}"
        )
    out = []
    for i, c in enumerate(g.coords):
        try:
            out.append(rf_substitute(c, f.coords))
        except IndeterminateCompositionError as exc:
            raise IndeterminateCompositionError(
                f"coordinate {i + 1} of the composite is indeterminate: {exc}", i
            ) from None
    name = f"{f.name} then {g.name}" if f.name and g.name else None
    return RationalMap(out, f.src_dim, name)


def power(f: RationalMap, k: int) -> RationalMap:
    if f.src_dim != f.dst_dim:
        raise DimensionMismatchError("only self-maps can be iterated")
    if k < 0:
        raise ValueError("negative powers need an explicit inverse")
    out = identity(f.src_dim)
    for _ in range(k):
        out = compose(out, f)
    return out


def is_identity(f: RationalMap) -> bool:
    if f.src_dim != f.dst_dim:
        return False
    for i, c in enumerate(f.coords):
        if c.num != c.den * Polynomial.variable(f.src_dim, i):
            return False
    return True


def order(f: RationalMap, max_iter: int = DEFAULT_MAX_ITER) -> int | None:
    """Smallest k <= max_iter with f^k = id, or ``None``.

    Degree growth of the iterates may hit the exact-arithmetic limits for
    maps of infinite order; that surfaces as a ``LimitError``.
    """
    if f.src_dim != f.dst_dim:
        raise DimensionMismatchError("order is only defined for self-maps")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    cur = f
    for k in range(1, max_iter + 1):
        if is_identity(cur):
            return k
        if k < max_iter:
            cur = compose(cur, f)
    return None


def is_inverse_pair(f: RationalMap, g: RationalMap) -> bool:
    """Both f then g and g then f are the identity."""
    return is_identity(compose(f, g)) and is_identity(compose(g, f))


def _det(rows: list[list[Polynomial]], n: int, zero: Polynomial) -> Polynomial:
    # Laplace expansion along rows, memoised on the set of unused columns.
    memo: dict[int, Polynomial] = {}

    def minor(r: int, cols: int) -> Polynomial:
        if r == n:
            return zero + 1
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = zero
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                a = rows[r][j]
                if a:
                    sub = minor(r + 1, cols & ~(1 << j))
                    if sub:
                        acc = acc + a * sub if sign > 0 else acc - a * sub
                sign = -sign
        memo[cols] = acc
        return acc

    return minor(0, (1 << n) - 1)


def jacobian_det(f: RationalMap) -> RationalFunction:
    """Exact determinant of the matrix of partial derivatives.

    Row i of the Jacobian of p_i/q_i is N_i/q_i^2 with polynomial N_i, so the
    determinant is det(N)/prod(q_i^2); constant denominators are skipped.
    """
    if f.src_dim != f.dst_dim:
        raise DimensionMismatchError("Jacobian determinant needs a square map")
    n = f.src_dim
    rows: list[list[Polynomial]] = []
    den = Polynomial.one(n)
    for c in f.coords:
        p, q = c.num, c.den
        if q.is_constant():
            scale = Fraction(1) / q.constant_value()
            rows.append([p.derivative(j).scale(scale) for j in range(n)])
        else:
            rows.append([p.derivative(j) * q - p * q.derivative(j) for j in range(n)])
            den = den * q * q
    return RationalFunction(_det(rows, n, Polynomial.zero(n)), den)


def is_dominant(f: RationalMap) -> bool:
    return f.src_dim == f.dst_dim and not jacobian_det(f).is_zero()


def eval_map(f: RationalMap, point: Sequence) -> tuple:
    """Exact image of ``point``; a pole names the offending coordinate."""
    if len(point) != f.src_dim:
        raise DimensionMismatchError(f"point of length {len(point)} for a map from A^{f.src_dim}")
    out = []
    for i, c in enumerate(f.coords):
        try:
            out.append(c.evaluate(point))
        except PoleError as exc:
            raise PoleError(f"coordinate {i + 1} has a pole: {exc}", i) from None
    return tuple(out)
