"""Concrete maps and forms used by the built-in scenarios.

Projective formulas are entered in affine charts.  Generic forms (the
quadric and cubic defining the cubic-surface boundary in P^3, and the forms
h1, h3, h4 in P^4) are instantiated with explicit sample polynomials; each
identity is checked for two instantiations.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exact import Polynomial, RationalFunction, variables
from ..logform import LogVolumeForm
from ..ratmap import RationalMap


def dehomogenize(p: Polynomial, var: int) -> Polynomial:
    """Set x_var = 1 and renumber the remaining variables in order."""
    n = p.nvars
    images = []
    for j in range(n):
        if j == var:
            images.append(Polynomial.one(n - 1))
        else:
            images.append(Polynomial.variable(n - 1, j if j < var else j - 1))
    return p.substitute(images)


def _form(num: Polynomial | int, den: Polynomial) -> LogVolumeForm:
    num = num if isinstance(num, Polynomial) else Polynomial.constant(den.nvars, num)
    return LogVolumeForm(RationalFunction(num, den))


# cubic surface boundary in P^3_{x1..x4}, chart x4 = 1


@dataclass(frozen=True)
class CubicBoundaryData:
    label: str
    f2: Polynomial  # homogeneous, in 4 variables, free of x1
    f3: Polynomial


def cubic_boundary_samples() -> list[CubicBoundaryData]:
    x1, x2, x3, x4 = variables(4)
    return [
        CubicBoundaryData("A", x2**2 + x3 * x4, x3**3),
        CubicBoundaryData(
            "B",
            x2**2 + x2 * x4 + x3**2 - x4**2,
            x2**3 + x3**2 * x4 + 2 * x4**3 - x2 * x3 * x4,
        ),
    ]


@dataclass(frozen=True)
class PsiFixture:
    label: str
    f2: Polynomial  # chart restrictions, in (x1, x2, x3)
    f3: Polynomial
    psi: RationalMap
    psi_inv: RationalMap
    source_form: LogVolumeForm  # dx/(x2 (x1 f2 + f3)) on (P^3, S2 + H3)
    target_form: LogVolumeForm  # dx/(x1 x2 f2) on (P^3, H4 + S3)
    source_boundary: tuple
    target_boundary: tuple


def psi_fixture(data: CubicBoundaryData) -> PsiFixture:
    f2 = dehomogenize(data.f2, 3)
    f3 = dehomogenize(data.f3, 3)
    x1, x2, x3 = variables(3)
    r1, r2, r3 = (RationalFunction(v) for v in (x1, x2, x3))
    shift = RationalFunction(f3, f2)
    psi = RationalMap([r1 + shift, r2, r3], 3, f"psi_{data.label}")
    psi_inv = RationalMap([r1 - shift, r2, r3], 3, f"psi_{data.label}_inv")
    surface = x1 * f2 + f3
    return PsiFixture(
        data.label, f2, f3, psi, psi_inv,
        _form(1, x2 * surface), _form(1, x1 * x2 * f2),
        ((x2, 1), (surface, 1)), ((x1, 1), (x2, 1), (f2, 1)),
    )


# quartic boundary in P^4_{x1..x5}


@dataclass(frozen=True)
class QuarticBoundaryData:
    label: str
    h1: Polynomial  # homogeneous in 5 variables, free of x1
    h3: Polynomial
    h4: Polynomial


def quartic_boundary_samples() -> list[QuarticBoundaryData]:
    x1, x2, x3, x4, x5 = variables(5)
    return [
        QuarticBoundaryData(
            "A",
            x2 + x3 + x5,
            x2**3 + x3**3 + x4**3 + x5**3,
            x2**4 + x3 * x4**3 - x4**2 * x5**2 + x2 * x5**3,
        ),
        QuarticBoundaryData(
            "B",
            x3 - 2 * x4 + x2,
            x2**2 * x3 + x4**3 + x5**3 + x3**3 - x2 * x4 * x5,
            x3**4 + x2 * x5**3 + 3 * x4**2 * x5**2 + x2**4,
        ),
    ]


@dataclass(frozen=True)
class PhiFixture:
    label: str
    phi: RationalMap  # chart x2 = 1, variables (x1, x3, x4, x5)
    phi_inv: RationalMap
    form_D: LogVolumeForm  # 1/(h1 (x1 h3 + h4))
    form_D_prime: LogVolumeForm  # 1/(x1 h1 h3)
    boundary_D: tuple
    boundary_D_prime: tuple


def phi_fixture(data: QuarticBoundaryData) -> PhiFixture:
    h1, h3, h4 = (dehomogenize(h, 1) for h in (data.h1, data.h3, data.h4))
    y1, y3, y4, y5 = variables(4)
    r = [RationalFunction(v) for v in (y1, y3, y4, y5)]
    shift = RationalFunction(h4, h3)
    phi = RationalMap([r[0] + shift, r[1], r[2], r[3]], 4, f"phi_{data.label}")
    phi_inv = RationalMap([r[0] - shift, r[1], r[2], r[3]], 4, f"phi_{data.label}_inv")
    quartic = y1 * h3 + h4
    return PhiFixture(
        data.label, phi, phi_inv,
        _form(1, h1 * quartic), _form(1, y1 * h1 * h3),
        ((h1, 1), (quartic, 1)), ((y1, 1), (h1, 1), (h3, 1)),
    )


@dataclass(frozen=True)
class Eta1Fixture:
    label: str
    chart_x5: RationalMap  # (x1, x2, x3, x4) -> (u, x2, x3, x4); the identity
    form_D_prime_x5: LogVolumeForm  # 1/(x1 x2 h3) with h3 at x5 = 1
    form_delta_x5: LogVolumeForm
    chart_x2: RationalMap  # (x1, x3, x4, x5) -> (x1/x5, x3, x4, x5)
    form_D_prime_x2: LogVolumeForm  # 1/(x1 h3) with h3 at x2 = 1
    form_delta_x2: LogVolumeForm  # 1/(s h3) on A^1_s x A^3
    normalizer: RationalMap  # chart x5 = 1: (x1, x2, x3, x4) -> (x1, h1, x3, x4)
    form_phi_D_prime: LogVolumeForm  # 1/(x1 h1 h3) in chart x5 = 1
    form_normalized: LogVolumeForm  # 1/(y1 y2 h3') with h3' = h3 after the change


def eta1_fixture(data: QuarticBoundaryData) -> Eta1Fixture:
    x1, x2, x3, x4, x5 = variables(5)
    # the boundary {x1 x2 h3 = 0} is the image of {x1 h1 h3 = 0} under the linear
    # change y2 = h1 = x2 + l; h3 is rewritten in the new coordinates
    l = data.h1 - x2
    if l.degree_in(1) > 0 or data.h1.degree() != 1:
        raise ValueError("h1 must have the shape x2 + l(x3, x4, x5)")
    h3n = data.h3.substitute([x1, x2 - l, x3, x4, x5])
    # chart x5 = 1
    h3_5 = dehomogenize(h3n, 4)
    z1, z2, z3, z4 = variables(4)
    ident = RationalMap([RationalFunction(v) for v in (z1, z2, z3, z4)], 4, "eta1_x5")
    form_x5 = _form(1, z1 * z2 * h3_5)
    # chart x2 = 1 on the source; the P^1 factor uses s = x1/x5
    h3_2 = dehomogenize(h3n, 1)
    w1, w3, w4, w5 = variables(4)
    chart2 = RationalMap(
        [RationalFunction(w1, w5), RationalFunction(w3), RationalFunction(w4), RationalFunction(w5)],
        4, "eta1_x2",
    )
    # linear normalisation read in chart x5 = 1
    h1_5 = dehomogenize(data.h1, 4)
    h3_orig_5 = dehomogenize(data.h3, 4)
    norm = RationalMap(
        [RationalFunction(z1), RationalFunction(h1_5), RationalFunction(z3), RationalFunction(z4)],
        4, "normalize_h1",
    )
    return Eta1Fixture(
        data.label, ident, form_x5, form_x5, chart2,
        _form(1, w1 * h3_2), _form(1, w1 * h3_2),
        norm, _form(1, z1 * h1_5 * h3_orig_5), form_x5,
    )


# toric maps


def eta2_charts() -> list[tuple[str, RationalMap]]:
    """(u1:u2) x (t1:t2:t3) -> (1 : u2/u1 : t2/t1 : t3/t1) in two source charts."""
    a, b, c = (RationalFunction.variable(3, i) for i in range(3))
    return [
        ("u1=t1=1", RationalMap([a, b, c], 3, "eta2_u1t1")),
        ("u2=t3=1", RationalMap([1 / a, c / b, 1 / b], 3, "eta2_u2t3")),
    ]


def eta4_charts() -> list[tuple[str, RationalMap]]:
    """(u1:u2) x (t1:t2) x (y1:y2:y3) -> (1 : u1/u2 : t1/t2 : y1/y3 : y2/y3)."""
    p, q, r, s = (RationalFunction.variable(4, i) for i in range(4))
    return [
        ("u2=t2=y3=1", RationalMap([p, q, r, s], 4, "eta4_u2t2y3")),
        ("u1=t1=y1=1", RationalMap([1 / p, 1 / q, 1 / s, r / s], 4, "eta4_u1t1y1")),
    ]
