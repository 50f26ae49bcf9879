"""The built-in scenario catalogue."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from ..burnside import compose_ledger, c_invariant, check_zero_form_discipline, project
from ..cypairs import (
    BoundaryComponent,
    SncBoundary,
    coordinate_boundary,
    coregularity,
    dual_complex,
    empty_boundary,
    product_pair,
    stabilize,
    standard_toric,
)
from ..errors import ResidueError
from ..exact import Polynomial, RationalFunction, random_point, rf_equal
from ..lattice import builtin_hl_lattice, express, pair, verify_gram_transform
from ..logform import (
    LogVolumeForm,
    check_divisor,
    divisor_report,
    form_equal,
    pullback,
    residue,
    scaling_factor,
    standard_form,
)
from ..ratmap import (
    RationalMap,
    cluster_tau,
    compose,
    cremona,
    eval_map,
    is_identity,
    is_inverse_pair,
    jacobian_det,
    monomial_map,
    order,
    power,
)
from .core import PLUMBING, Check, Outcome, Scenario, expect_equal
from .fixtures import (
    cubic_boundary_samples,
    eta1_fixture,
    eta2_charts,
    eta4_charts,
    phi_fixture,
    psi_fixture,
    quartic_boundary_samples,
)
from .ledgers import ledger_p3, ledger_p4, p3_generators, p4_generators

CITE_TAU = "tau: (x, y) -> (y, (y+1)/x) is the order-5 cluster map in Bir(P^2, omega_2)"
CITE_MONO = "monomial maps (x, y) -> (x^a y^b, x^c y^d) scale omega_2 by ad - bc"
CITE_CREMONA = "the Cremona involution acts on omega_n by (-1)^n"
CITE_PSI = "psi: x1 -> x1 + f3/f2 pulls dx/(x1 x2 f2) back to dx/(x2 (x1 f2 + f3)) in the chart x4 = 1"
CITE_ETA2 = "eta2: (u1:u2) x (t1:t2:t3) -> (1 : u2/u1 : t2/t1 : t3/t1) is a toric map"
CITE_PHI = "phi: x1 -> x1 + h4/h3 pulls omega_{D'_L} = dx/(x1 h1 h3) back to omega_{D_L} = dx/(h1 (x1 h3 + h4))"
CITE_ETA1 = "eta1: (x1:x5) x (x2:x3:x4:x5) pulls omega_{Delta'} back to omega_{D'_L} = dx/(x1 x2 h3)"
CITE_ETA4 = "eta4: (u1:u2) x (t1:t2) x (y1:y2:y3) -> (1 : u1/u2 : t1/t2 : y1/y3 : y2/y3) is a toric map"
CITE_LOGFORM = "a logarithmic form has poles of order at most one along the boundary"
CITE_RESIDUE = "residue of omega_n along a coordinate hyperplane is +-omega_{n-1}"
CITE_COREG = "coreg(X, D) = dim X - dim D(X, D) - 1; coreg(P^n, Delta_n) = 0"
CITE_CUBIC = "(P^3, S + H) with S cap H a triangle of lines or a line plus a conic has coregularity 0"
CITE_JNR = "j_{n,r}: (X, D) -> (X x P^r, D + Delta_r) preserves coregularity"
CITE_EMPTY = "an empty boundary has dual complex of dimension -1"
CITE_HL_GRAM = "HL lattice: L_X^4 = 1, Gamma_L^2 = -12, the 8x8 basis change is an isometry"
CITE_HL_PLANE = "M_X^2 . (L_X^2 - Q1 - Q2 - Q3) = 1 and M_X^2 - sum K_i = L_X^2 - sum Q_i"
CITE_HL_QK = "Q_i . K_j = 1 for all i, j"
CITE_HL_K = "K_j = 2 L_X^2 - Gamma_L + F_j + sum_k (F_k + Q_k)"
CITE_HL_P = "on P': L' E'_i = 0, E^3 E'_i = -4, E^2 E'_i^2 = 2, E E'_i^3 = 0, E'_i^4 = -1, L'^3 E = 0"
CITE_P3 = "P^3 ledger: c(sigma) = c(phi) = (C x P^1, 0) - (C' x P^1, 0) is nonzero"
CITE_P3_PARTS = "P^3 ledger: c(pi) = 0, c(psi) = c(psi') = 0, c(eta^-1) + c(eta') = 0"
CITE_P4 = "P^4 ledger: (dpr . c)(sigma) is nonzero, with c(psi) = (S_L x P^1, 0) - (S_M x P^1, 0)"
CITE_P4_PARTS = "P^4 ledger: c(phi') = c(phi^-1) = 0 and the eta parts only involve P^3 and curve x P^2 classes"
CITE_DISCIPLINE = "c-invariants of crepant maps only carry zero-form classes after cancellation"


def _x(n: int) -> list[RationalFunction]:
    return [RationalFunction.variable(n, i) for i in range(n)]


# tau5


def _tau5() -> Scenario:
    tau = cluster_tau()
    w2 = standard_form(2)

    def tau_square(_rng):
        x, y = _x(2)
        return expect_equal(compose(tau, tau), RationalMap([(y + 1) / x, (x + y + 1) / (x * y)], 2))

    def tau_cube(_rng):
        x, y = _x(2)
        return expect_equal(power(tau, 3).coords[0], (x + y + 1) / (x * y))

    def tau_points(rng: random.Random):
        t5 = power(tau, 5)
        for _ in range(20):
            pt = random_point(rng, 2, [Polynomial.variable(2, 0), Polynomial.variable(2, 1)])
            try:
                if eval_map(t5, pt) != tuple(pt):
                    return Outcome(False, f"tau^5 moves {pt}")
            except Exception:
                continue
        return True

    return Scenario("tau5", "the cluster map tau has order 5 and preserves omega_2", (
        Check("order(tau) == 5", CITE_TAU, lambda r: expect_equal(order(tau), 5)),
        Check("is_identity(tau^5)", CITE_TAU, lambda r: is_identity(power(tau, 5))),
        Check("not is_identity(tau^k), k < 5", CITE_TAU,
              lambda r: not any(is_identity(power(tau, k)) for k in range(1, 5))),
        Check("scale(tau, omega_2) == 1", CITE_TAU, lambda r: expect_equal(scaling_factor(tau, w2), 1)),
        Check("pullback(tau, omega_2) == omega_2", CITE_TAU, lambda r: form_equal(pullback(tau, w2), w2)),
        Check("tau^2 = ((y+1)/x, (x+y+1)/(xy))", PLUMBING, tau_square),
        Check("tau^3 first coordinate (x+y+1)/(xy)", PLUMBING, tau_cube),
        Check("tau^5 fixes random points", PLUMBING, tau_points),
    ))


# sl2z_monomials


MONOMIAL_MATRICES = ([[1, 1], [0, 1]], [[0, 1], [-1, 0]], [[2, 1], [1, 1]])


def _det2(a) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def _sl2z() -> Scenario:
    w2 = standard_form(2)
    checks = []
    for a in MONOMIAL_MATRICES:
        checks.append(Check(f"scale(monomial({a}), omega_2) == {_det2(a)}", CITE_MONO,
                            lambda r, a=a: expect_equal(scaling_factor(monomial_map(a), w2), _det2(a))))
    a, b = [[1, 1], [0, 1]], [[0, 1], [1, 0]]
    ba = [[sum(b[i][k] * a[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    checks.append(Check("compose(monomial(A), monomial(B)) == monomial(BA)", PLUMBING,
                        lambda r: expect_equal(compose(monomial_map(a), monomial_map(b)), monomial_map(ba))))
    checks.append(Check("jacobian(x*y, y) == y", PLUMBING,
                        lambda r: expect_equal(jacobian_det(monomial_map([[1, 1], [0, 1]])), _x(2)[1])))
    checks.append(Check("scale(monomial([[0,1],[1,0]]), omega_2) == -1", CITE_MONO,
                        lambda r: expect_equal(scaling_factor(monomial_map([[0, 1], [1, 0]]), w2), -1)))
    return Scenario("sl2z_monomials", "monomial maps scale omega_2 by their determinant", tuple(checks))


# cremona_sign


def _cremona() -> Scenario:
    checks = []
    for n in (2, 3, 4):
        checks.append(Check(f"scale(sigma_{n}, omega_{n}) == {(-1) ** n}", CITE_CREMONA,
                            lambda r, n=n: expect_equal(scaling_factor(cremona(n), standard_form(n)), (-1) ** n)))
        checks.append(Check(f"order(sigma_{n}) == 2", CITE_CREMONA,
                            lambda r, n=n: expect_equal(order(cremona(n)), 2)))
    x, y = _x(2)
    checks.append(Check("jacobian(sigma_2) == 1/(x^2 y^2)", PLUMBING,
                        lambda r: expect_equal(jacobian_det(cremona(2)), 1 / (x * x * y * y))))
    return Scenario("cremona_sign", "the standard Cremona involution scales omega_n by (-1)^n", tuple(checks))


# psi_quintic


def _psi() -> Scenario:
    checks = []
    for data in cubic_boundary_samples():
        fx = psi_fixture(data)
        tag = f"[{fx.label}: f2 = {data.f2}, f3 = {data.f3}]"
        checks += [
            Check(f"pullback(psi, dx/(x1 x2 f2)) == dx/(x2 (x1 f2 + f3)) {tag}", CITE_PSI,
                  lambda r, fx=fx: expect_equal(pullback(fx.psi, fx.target_form), fx.source_form)),
            Check(f"divisor of the pulled-back form is x2 (x1 f2 + f3) {tag}", CITE_PSI,
                  lambda r, fx=fx: _divisor(pullback(fx.psi, fx.target_form), fx.source_boundary)),
            Check(f"divisor of dx/(x1 x2 f2) is x1 x2 f2 {tag}", CITE_PSI,
                  lambda r, fx=fx: _divisor(fx.target_form, fx.target_boundary)),
            Check(f"compose(psi, psi_inv) == id both ways {tag}", CITE_PSI,
                  lambda r, fx=fx: is_inverse_pair(fx.psi, fx.psi_inv)),
            Check(f"jacobian(psi) == 1 {tag}", PLUMBING,
                  lambda r, fx=fx: expect_equal(jacobian_det(fx.psi), 1)),
        ]
    return Scenario("psi_quintic", "the map psi of the cubic-surface boundary is crepant (chart x4 = 1)",
                    tuple(checks))


def _divisor(w: LogVolumeForm, boundary) -> Outcome:
    rep = divisor_report(w, boundary)
    return Outcome(rep.ok, rep.diagnostic)


# toric eta2 / eta4


def _toric(sid: str, desc: str, cite: str, charts, n: int) -> Scenario:
    w = standard_form(n)
    checks = []
    for label, m in charts:
        checks.append(Check(f"scale({m.name}, omega_{n}) in {{1, -1}} (chart {label})", cite,
                            lambda r, m=m: Outcome(scaling_factor(m, w) in (1, -1),
                                                   f"scale = {scaling_factor(m, w)}")))
        checks.append(Check(f"divisor(pullback({m.name}, omega_{n})) is the coordinate boundary", cite,
                            lambda r, m=m: _divisor(pullback(m, w), coordinate_boundary(n).chart_trace())))
    return Scenario(sid, desc, tuple(checks))


def _eta2() -> Scenario:
    sc = _toric("eta2_toric", "eta2 preserves the toric forms up to sign", CITE_ETA2, eta2_charts(), 3)
    maps = [m for _, m in eta2_charts()]
    extra = (
        Check("scale(eta2, omega_3) == 1 in chart u1 = t1 = 1", CITE_ETA2,
              lambda r: expect_equal(scaling_factor(maps[0], standard_form(3)), 1)),
        Check("scale(eta2, omega_3) == -1 in chart u2 = t3 = 1", CITE_ETA2,
              lambda r: expect_equal(scaling_factor(maps[1], standard_form(3)), -1)),
    )
    return Scenario(sc.id, sc.description, sc.checks + extra)


def _eta4() -> Scenario:
    return _toric("eta4_toric", "eta4 preserves the toric forms up to sign", CITE_ETA4, eta4_charts(), 4)


# phi_hl / eta1_hl


def _phi() -> Scenario:
    checks = []
    for data in quartic_boundary_samples():
        fx = phi_fixture(data)
        tag = f"[{fx.label}: h1 = {data.h1}]"
        checks += [
            Check(f"pullback(phi, omega_D'L) == omega_DL {tag}", CITE_PHI,
                  lambda r, fx=fx: expect_equal(pullback(fx.phi, fx.form_D_prime), fx.form_D)),
            Check(f"divisor(omega_DL) == h1 (x1 h3 + h4) {tag}", CITE_PHI,
                  lambda r, fx=fx: _divisor(fx.form_D, fx.boundary_D)),
            Check(f"divisor(omega_D'L) == x1 h1 h3 {tag}", CITE_PHI,
                  lambda r, fx=fx: _divisor(fx.form_D_prime, fx.boundary_D_prime)),
            Check(f"compose(phi, phi_inv) == id both ways {tag}", CITE_PHI,
                  lambda r, fx=fx: is_inverse_pair(fx.phi, fx.phi_inv)),
            Check(f"pullback(phi_inv, omega_DL) == omega_D'L {tag}", CITE_PHI,
                  lambda r, fx=fx: expect_equal(pullback(fx.phi_inv, fx.form_D), fx.form_D_prime)),
        ]
    return Scenario("phi_hl", "the map phi of the quartic boundary is crepant (chart x2 = 1)", tuple(checks))


def _eta1() -> Scenario:
    checks = []
    for data in quartic_boundary_samples():
        fx = eta1_fixture(data)
        tag = f"[{fx.label}]"
        checks += [
            Check(f"pullback(eta1, omega_Delta') == omega_D'L in chart x5 = 1 {tag}", CITE_ETA1,
                  lambda r, fx=fx: expect_equal(pullback(fx.chart_x5, fx.form_delta_x5), fx.form_D_prime_x5)),
            Check(f"pullback(eta1, omega_Delta') == omega_D'L in chart x2 = 1 {tag}", CITE_ETA1,
                  lambda r, fx=fx: expect_equal(pullback(fx.chart_x2, fx.form_delta_x2), fx.form_D_prime_x2)),
            Check(f"linear change h1 -> x2 carries dx/(x1 x2 h3) to dx/(x1 h1 h3) {tag}", CITE_ETA1,
                  lambda r, fx=fx: expect_equal(pullback(fx.normalizer, fx.form_normalized),
                                                fx.form_phi_D_prime)),
        ]
    return Scenario("eta1_hl", "eta1 preserves the log volume forms of the quartic boundary", tuple(checks))


# residue_standard


def _residue_suite() -> Scenario:
    def all_coordinate_residues(_rng):
        for n in range(1, 7):
            w = standard_form(n)
            for i in range(n):
                res = residue(w, Polynomial.variable(n, i), i)
                want = (-1) ** i
                target = standard_form(n - 1).coeff if n > 1 else RationalFunction.constant(0, 1)
                if not rf_equal(res.coeff, target * want):
                    return Outcome(False, f"n={n}, i={i + 1}: got {res}")
        return True

    def rejects_double_pole(_rng):
        x1, x2 = (Polynomial.variable(2, i) for i in range(2))
        w = LogVolumeForm(RationalFunction(Polynomial.one(2), x1 * x1 * x2))
        try:
            residue(w, x1, 0)
        except ResidueError as exc:
            return Outcome("non-logarithmic" in str(exc), str(exc))
        return Outcome(False, "order-2 pole accepted")

    def linear_factor(_rng):
        x1, x2 = (Polynomial.variable(2, i) for i in range(2))
        w = LogVolumeForm(RationalFunction(Polynomial.one(2), (x1 + x2) * x2))
        expected = LogVolumeForm(RationalFunction(Polynomial.one(1), Polynomial.variable(1, 0)))
        return expect_equal(residue(w, x1 + x2, 0), expected)

    def pullback_residue(_rng):
        # last row e_3, so {x3 = 0} is preserved and the top-left block is the restriction
        mats = ([[1, 1, 1], [0, 1, 2], [0, 0, 1]], [[0, 1, 0], [1, 0, 3], [0, 0, 1]], [[2, 1, 0], [1, 1, -1], [0, 0, 1]])
        for a in mats:
            g = monomial_map(a)
            w = standard_form(3)
            lhs = residue(pullback(g, w), Polynomial.variable(3, 2), 2)
            restricted = monomial_map([row[:2] for row in a[:2]])
            rhs = pullback(restricted, residue(w, Polynomial.variable(3, 2), 2))
            if not form_equal(lhs, rhs):
                return Outcome(False, f"A = {a}: {lhs} vs {rhs}")
        return True

    return Scenario("residue_standard", "residues of the standard forms along coordinate hyperplanes", (
        Check("residue(omega_n, x_i) == (-1)^(i-1) omega_(n-1), n <= 6", CITE_RESIDUE, all_coordinate_residues),
        Check("residue rejects an order-2 pole", CITE_LOGFORM, rejects_double_pole),
        Check("residue(dx1 dx2/((x1+x2) x2), x1+x2) == dx/x", PLUMBING, linear_factor),
        Check("residue commutes with pullback by monomial maps fixing {x3 = 0}", CITE_RESIDUE, pullback_residue),
    ))


# coreg_standard / stabilize_jnr


def cubic_boundary_model() -> SncBoundary:
    """Declared snc model: strict transforms of S and H plus one exceptional divisor E.

    S and H meet in two curves (a line and a conic); all three meet in a point.
    """
    return SncBoundary(3, ["S", "H", "E"],
                       [(("S", "H"), 2), ("S", "E"), ("H", "E"), ("S", "H", "E")])


def _coreg() -> Scenario:
    def toric(_rng):
        for n in range(1, 7):
            b = standard_toric(n)
            d = dual_complex(b)
            if coregularity(b) != 0 or d.dimension != n - 1:
                return Outcome(False, f"n={n}: coreg {coregularity(b)}, dim {d.dimension}")
        return True

    def faces(_rng):
        for n in range(1, 7):
            d = dual_complex(standard_toric(n))
            want = tuple(comb(n + 1, k + 1) for k in range(n))
            if d.face_vector() != want or d.euler_characteristic() != 1 + (-1) ** (n - 1):
                return Outcome(False, f"n={n}: {d.face_vector()} chi={d.euler_characteristic()}")
        return True

    def traces(_rng):
        return all(check_divisor(standard_form(n), coordinate_boundary(n).chart_trace()) for n in range(1, 9))

    return Scenario("coreg_standard", "coregularity and dual complexes of standard boundaries", (
        Check("coreg(P^n, Delta_n) == 0 for 1 <= n <= 6", CITE_COREG, toric),
        Check("D(Delta_n) has the face vector and Euler characteristic of a sphere", CITE_COREG, faces),
        Check("coreg(P^3, S + H) == 0 on the declared model", CITE_CUBIC,
              lambda r: expect_equal(coregularity(cubic_boundary_model()), 0)),
        Check("empty boundary has dim D = -1 and coreg = n", CITE_EMPTY,
              lambda r: dual_complex(empty_boundary(4)).dimension == -1 and coregularity(empty_boundary(4)) == 4),
        Check("divisor(omega_n) is the coordinate boundary, n <= 8", CITE_COREG, traces),
    ))


def stabilize_grid() -> list[SncBoundary]:
    two_points = SncBoundary(2, ["A", "B"], [])
    partial = SncBoundary(3, ["A", "B", "C"], [("A", "B"), ("B", "C")])
    half = SncBoundary(2, ["A", BoundaryComponent("B", Fraction(1, 2))], [("A", "B")])
    return [standard_toric(2), standard_toric(3), empty_boundary(2), two_points, partial,
            cubic_boundary_model(), half]


def _stabilize() -> Scenario:
    def preserves(_rng):
        for b in stabilize_grid():
            for r in (1, 2, 3):
                if coregularity(stabilize(b, r)) != coregularity(b):
                    return Outcome(False, f"{b} r={r}")
        return True

    def associative(_rng):
        for b in stabilize_grid():
            one = dual_complex(stabilize(stabilize(b, 1), 1))
            two = dual_complex(stabilize(b, 2))
            if one.dimension != two.dimension:
                return Outcome(False, f"{b}: {one.dimension} vs {two.dimension}")
        return True

    def empty_times_p1(_rng):
        d = dual_complex(stabilize(empty_boundary(3), 1))
        return d.dimension == 0 and len(d.vertices) == 2 and coregularity(stabilize(empty_boundary(3), 1)) == 3

    def square(_rng):
        d = dual_complex(product_pair(standard_toric(1, "A"), standard_toric(1, "B")))
        return expect_equal((d.face_vector(), d.dimension), ((4, 4), 1))

    def product_coreg(_rng):
        grid = stabilize_grid()
        for a in grid:
            for b in grid:
                bb = _relabel(b, "R")
                if coregularity(product_pair(a, bb)) != coregularity(a) + coregularity(bb):
                    return Outcome(False, f"{a} x {b}")
        return True

    return Scenario("stabilize_jnr", "stabilisation by standard toric pairs", (
        Check("coreg(stabilize(b, r)) == coreg(b) on the grid", CITE_JNR, preserves),
        Check("coreg(stabilize(Delta_n, r)) == 0", CITE_JNR,
              lambda r: all(coregularity(stabilize(standard_toric(n), k)) == 0
                            for n in (1, 2, 3) for k in (1, 2, 3))),
        Check("stabilize(stabilize(b, 1), 1) ~ stabilize(b, 2)", PLUMBING, associative),
        Check("stabilize((X, 0), 1) has two isolated vertices", PLUMBING, empty_times_p1),
        Check("Delta_1 x Delta_1 is a square", PLUMBING, square),
        Check("coreg(a x b) == coreg(a) + coreg(b)", PLUMBING, product_coreg),
    ))


def _relabel(b: SncBoundary, prefix: str) -> SncBoundary:
    comps = [BoundaryComponent(prefix + c.label, c.coefficient, c.polynomial) for c in b.components]
    return SncBoundary(b.ambient_dim, comps, b.strata)


# hl_lattice


def _hl() -> Scenario:
    L, B, P = builtin_hl_lattice()

    def qk(_rng):
        bad = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if pair(L, L[f"Q{i}"], L[f"K{j}"]) != 1]
        return Outcome(not bad, f"Q_i K_j != 1 for {bad}")

    def k_rows(_rng):
        for j in (1, 2, 3):
            e = express(L, f"2 LX2 - GammaL + F{j} + F1 + F2 + F3 + Q1 + Q2 + Q3")
            if e != L[f"K{j}"]:
                return Outcome(False, f"K{j}: {e.coords} vs {L[f'K{j}'].coords}")
        return True

    def p_prime(_rng):
        vals = []
        for i in (1, 2, 3):
            e = f"E'{i}"
            vals += [P[f"L' {e}"] == 0, P[f"E^3 {e}"] == -4, P[f"E^2 {e}^2"] == 2,
                     P[f"E {e}^3"] == 0, P[f"{e}^4"] == -1]
        vals.append(P["L'^3 E"] == 0)
        return all(vals)

    return Scenario("hl_lattice", "intersection numbers of the HL fourfold", (
        Check("B G B^T == G", CITE_HL_GRAM, lambda r: verify_gram_transform(L, B)),
        Check("gram diagonal == (1, -12, 1, 1, 1, 1, 1, 1)", CITE_HL_GRAM,
              lambda r: expect_equal(tuple(L.gram[i][i] for i in range(8)), (1, -12, 1, 1, 1, 1, 1, 1))),
        Check("pair(M_X^2, L_X^2 - sum Q_i) == 1", CITE_HL_PLANE,
              lambda r: expect_equal(pair(L, L["MX2"], L["PiL"]), 1)),
        Check("M_X^2 - sum K_i == L_X^2 - sum Q_i", CITE_HL_PLANE,
              lambda r: expect_equal(express(L, "MX2 - K1 - K2 - K3"), express(L, "LX2 - Q1 - Q2 - Q3"))),
        Check("pair(Q_i, K_j) == 1 for all i, j", CITE_HL_QK, qk),
        Check("K_j rows match their expansion", CITE_HL_K, k_rows),
        Check("P' intersection table", CITE_HL_P, p_prime),
    ))


# ledgers


def _ledger_p3() -> Scenario:
    led = ledger_p3()
    o = led.oracle
    flipped = o.declare_equivalent("C", "Cjac", "flipped for the converse check")
    phi_part = c_invariant(led.parts[4].data, o)

    def parts_vanish(_rng):
        vals = dict((name, v) for name, _, v in led.part_values())
        return all(vals[k].is_zero() for k in ("pi^-1", "psi^-1", "psi'")) and \
            compose_ledger([(-1, vals["eta1"]), (1, vals["eta1'"])], o).is_zero()

    def discipline(_rng):
        for _, _, v in led.part_values():
            check_zero_form_discipline(v)
        return True

    return Scenario("ledger_p3", "c of the composite automorphism of (P^3, Delta_3)", (
        Check("c(sigma) == c(phi)", CITE_P3, lambda r: expect_equal(led.total(), phi_part)),
        Check("c(phi) == [C*P1, 0] - [Cjac*P1, 0]", CITE_P3,
              lambda r: expect_equal(str(phi_part), "[C*P1, 0] - [Cjac*P1, 0]")),
        Check("c(sigma) != 0", CITE_P3, lambda r: not led.total().is_zero()),
        Check("vanishing parts", CITE_P3_PARTS, parts_vanish),
        Check("project(c(sigma), {C*P1, Cjac*P1}) != 0", CITE_P3,
              lambda r: not project(led.total(), p3_generators(), o).is_zero()),
        Check("declaring C ~ Cjac makes the projection vanish", CITE_P3,
              lambda r: project(led.total(flipped), p3_generators(), flipped).is_zero()),
        Check("only zero-form classes survive", CITE_DISCIPLINE, discipline),
    ))


def _ledger_p4() -> Scenario:
    led = ledger_p4()
    o = led.oracle
    flipped = o.declare_equivalent("SL", "SM", "flipped for the converse check")

    def projection(_rng):
        p = project(led.total(), p4_generators(), o)
        psi = c_invariant(led.parts[4].data, o)
        return Outcome(p == psi and not p.is_zero(), f"projection = {p}")

    def eta_parts(_rng):
        for name, _, v in led.part_values():
            if name.startswith("eta") or name.startswith("id x"):
                for lab in v.terms:
                    if not (lab.name == "P3" or (len(lab.factors) == 2 and "P2" in lab.factors)):
                        return Outcome(False, f"{name} contains {lab}")
        return True

    def phi_parts(_rng):
        vals = {name: v for name, _, v in led.part_values()}
        return vals["phi^-1"].is_zero() and vals["phi'"].is_zero()

    def discipline(_rng):
        for _, _, v in led.part_values():
            check_zero_form_discipline(v)
        return True

    return Scenario("ledger_p4", "c of the composite automorphism of (P^4, Delta_4)", (
        Check("c(psi) == [SL*P1, 0] - [SM*P1, 0]", CITE_P4,
              lambda r: expect_equal(str(c_invariant(led.parts[4].data, o)), "[P1*SL, 0] - [P1*SM, 0]")),
        Check("c(phi') == c(phi^-1) == 0", CITE_P4_PARTS, phi_parts),
        Check("eta parts only hold P3 and curve x P2 classes", CITE_P4_PARTS, eta_parts),
        Check("(dpr . c)(sigma) == c(psi) != 0", CITE_P4, projection),
        Check("declaring SL ~ SM makes the projection vanish", CITE_P4,
              lambda r: project(led.total(flipped), p4_generators(), flipped).is_zero()),
        Check("only zero-form classes survive", CITE_DISCIPLINE, discipline),
    ))


_BUILDERS = (
    _tau5, _sl2z, _cremona, _psi, _eta2, _phi, _eta1, _eta4,
    _residue_suite, _coreg, _stabilize, _hl, _ledger_p3, _ledger_p4,
)


def list_scenarios() -> dict[str, Scenario]:
    """The built-in catalogue, keyed by id, in catalogue order."""
    out: dict[str, Scenario] = {}
    for build in _BUILDERS:
        s = build()
        if s.id in out:
            raise ValueError(f"duplicate scenario id {s.id}")
        out[s.id] = s
    return out


def get_scenario(scenario_id: str) -> Scenario:
    try:
        return list_scenarios()[scenario_id]
    except KeyError:
        raise KeyError(f"unknown scenario {scenario_id!r}") from None
