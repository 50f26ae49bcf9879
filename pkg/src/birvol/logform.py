"""Top-degree rational forms ``coeff * dx1 ^ ... ^ dxn`` in an affine chart.

Pullback multiplies the substituted coefficient by the Jacobian
determinant.  Residues are taken along factors linear in one variable:
for ``f = a*x_v + b`` with a, b free of x_v, the residue of ``g/f * dx`` is

    (-1)**v * (g / a) restricted to x_v = -b/a

in the remaining variables (v is 0-based), which comes from writing
``dx = (-1)**v * (df/a) ^ dx_rest`` modulo terms containing ``dx_v`` twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    IndeterminateCompositionError,
    LimitError,
    NonDominantMapError,
    ResidueError,
    StructuralError,
)
from .exact import Polynomial, RationalFunction, rf_substitute
from .exact.monomial import MAX_VARS
from .exact.polynomial import format_polynomial
from .exact.ratfunc import format_rational_function
from .ratmap import RationalMap, jacobian_det


class LogVolumeForm:
    """Immutable top form ``coeff * dx1 ^ ... ^ dx_nvars``.

    The zero coefficient is allowed; it stands for a class carrying the zero
    form.  ``nvars = 0`` is allowed for residues of one-forms.
    """

    __slots__ = ("nvars", "coeff")

    def __init__(self, coeff, nvars: int | None = None):
        if nvars is None:
            if not isinstance(coeff, (Polynomial, RationalFunction)):
                raise DimensionMismatchError("pass nvars for a constant coefficient")
            nvars = coeff.nvars
        if not 0 <= nvars <= MAX_VARS:
            raise LimitError(f"form dimension must lie in [0, {MAX_VARS}], got {nvars}")
        self.nvars = nvars
        self.coeff = RationalFunction.of(coeff, nvars)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def scaled(self, c) -> LogVolumeForm:
        return LogVolumeForm(self.coeff * c, self.nvars)

    def __neg__(self) -> LogVolumeForm:
        return LogVolumeForm(-self.coeff, self.nvars)

    def __mul__(self, c) -> LogVolumeForm:
        return self.scaled(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogVolumeForm):
            return NotImplemented
        return form_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if self.nvars == 0:
            return f"{format_rational_function(self.coeff)}"
        wedge = "^".join(f"dx{i + 1}" for i in range(self.nvars))
        return f"{format_rational_function(self.coeff)} {wedge}"

    def __repr__(self) -> str:
        return f"LogVolumeForm({self})"


def standard_form(n: int) -> LogVolumeForm:
    """The torus-invariant form dx1/x1 ^ ... ^ dxn/xn."""
    if not 1 <= n <= MAX_VARS:
        raise LimitError(f"standard form needs 1 <= n <= {MAX_VARS}, got {n}")
    return LogVolumeForm(RationalFunction(Polynomial.one(n), Polynomial.monomial([1] * n)))


def form_equal(a: LogVolumeForm, b: LogVolumeForm) -> bool:
    if a.nvars != b.nvars:
        raise DimensionMismatchError(f"forms in {a.nvars} and {b.nvars} variables")
    return a.coeff == b.coeff


def pullback(f: RationalMap, w: LogVolumeForm) -> LogVolumeForm:
    if f.dst_dim != w.nvars:
        raise DimensionMismatchError(f"map lands in A^{f.dst_dim}, form lives on A^{w.nvars}")
    if f.src_dim != f.dst_dim:
        raise NonDominantMapError("pullback of a top form needs a square map")
    jac = jacobian_det(f)
    if jac.is_zero():
        raise NonDominantMapError(f"map {f.name or f} has vanishing Jacobian determinant")
    if w.is_zero():
        return LogVolumeForm(RationalFunction.constant(f.src_dim, 0), f.src_dim)
    return LogVolumeForm(rf_substitute(w.coeff, f.coords) * jac, f.src_dim)


def scaling_factor(f: RationalMap, w: LogVolumeForm) -> int | Fraction | None:
    """The constant c with f^*(w) = c*w, or ``None`` if the ratio is not constant."""
    if w.is_zero():
        raise ValueError("scaling factor of the zero form is undefined")
    ratio = pullback(f, w).coeff / w.coeff
    return ratio.constant_value()


# residues


def pole_order(coeff: RationalFunction, factor: Polynomial) -> int:
    """Multiplicity of ``factor`` in the denominator minus that in the numerator."""
    if factor.is_constant():
        raise ValueError("pole order along a constant is undefined")
    down, _ = coeff.den.multiplicity(factor)
    up = coeff.num.multiplicity(factor)[0] if coeff.num else 0
    return down - up


def residue(w: LogVolumeForm, factor: Polynomial, var: int) -> LogVolumeForm:
    """Residue along ``{factor = 0}`` using x_var as the normal coordinate (0-based).

    A factor along which the form is regular yields the zero form.
    """
    n = w.nvars
    if factor.nvars != n:
        raise DimensionMismatchError("factor and form live in different rings")
    if not 0 <= var < n:
        raise DimensionMismatchError(f"variable index {var} out of range for {n} variables")
    if factor.degree_in(var) != 1:
        raise ResidueError(
            f"unsupported residue chart: {format_polynomial(factor)} is not linear in x{var + 1}"
        )
    b, a = factor.coefficients_in(var)
    m = n - 1
    if w.is_zero():
        return LogVolumeForm(RationalFunction.constant(m, 0), m)
    order_ = pole_order(w.coeff, factor)
    if order_ >= 2:
        raise ResidueError(
            f"non-logarithmic pole: order {order_} along {format_polynomial(factor)}"
        )
    if order_ <= 0:
        return LogVolumeForm(RationalFunction.constant(m, 0), m)
    up, num = w.coeff.num.multiplicity(factor)
    _, den = w.coeff.den.multiplicity(factor)
    # coeff * factor = num/den exactly, since the pole order is one
    g = RationalFunction(num, den * a)
    a_, b_ = a.drop_variable(var), b.drop_variable(var)
    images = []
    for j in range(n):
        if j == var:
            images.append(RationalFunction(-b_, a_))
        else:
            images.append(RationalFunction.variable(m, j if j < var else j - 1))
    try:
        r = rf_substitute(g, images)
    except IndeterminateCompositionError:
        raise ResidueError(
            f"unsupported residue chart: the restriction to {format_polynomial(factor)} = 0 "
            "is indeterminate (reducible factor?)"
        ) from None
    if var % 2:
        r = -r
    return LogVolumeForm(r, m)


# divisor of a form


@dataclass(frozen=True)
class DivisorCheck:
    ok: bool
    constant: int | Fraction | None = None
    diagnostic: str = ""
    orders: tuple = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def divisor_report(w: LogVolumeForm, boundary: Sequence[tuple[Polynomial, int]]) -> DivisorCheck:
    """Decide whether coeff = lambda * prod f_i**(-c_i) for a nonzero constant lambda.

    The boundary must be given factored, with pairwise non-associate factors
    and coefficients at most one.
    """
    boundary = [(p, int(c)) for p, c in boundary]
    for p, c in boundary:
        if p.nvars != w.nvars:
            raise DimensionMismatchError("boundary factor in the wrong ring")
        if p.is_constant():
            raise StructuralError("boundary factors must be non-constant")
        if c > 1:
            raise StructuralError(f"boundary coefficient {c} exceeds 1")
    for i, (p, _) in enumerate(boundary):
        for q, _ in boundary[i + 1:]:
            if RationalFunction(p, q).constant_value() is not None:
                raise StructuralError(
                    f"boundary factors {format_polynomial(p)} and {format_polynomial(q)} are associate"
                )
    if w.is_zero():
        return DivisorCheck(False, None, "the zero form has no divisor")
    orders = tuple(
        (format_polynomial(p), c, pole_order(w.coeff, p)) for p, c in boundary
    )
    ratio = w.coeff
    for p, c in boundary:
        if c > 0:
            ratio = ratio * p**c
        elif c < 0:
            ratio = ratio / p ** (-c)
    lam = ratio.constant_value()
    if lam is not None:
        return DivisorCheck(True, lam, "", orders)
    bad = [f"{name}: expected pole order {c}, found {o}" for name, c, o in orders if o != c]
    rest = f"unaccounted factor {format_rational_function(ratio)}"
    return DivisorCheck(False, None, "; ".join(bad + [rest]), orders)


def check_divisor(w: LogVolumeForm, boundary: Sequence[tuple[Polynomial, int]]) -> bool:
    return divisor_report(w, boundary).ok
