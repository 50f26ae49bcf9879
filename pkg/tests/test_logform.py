import pytest
from hypothesis import given, strategies as st

from birvol.errors import LimitError, NonDominantMapError, ResidueError, StructuralError
from birvol.exact import Polynomial, RationalFunction, variables
from birvol.logform import (
    LogVolumeForm,
    check_divisor,
    divisor_report,
    form_equal,
    pole_order,
    pullback,
    residue,
    scaling_factor,
    standard_form,
)
from birvol.ratmap import RationalMap, cluster_tau, compose, cremona, identity, monomial_map

from strategies import det, integer_matrices, maps, within_limits

tau = cluster_tau()


def form(num, den):
    return LogVolumeForm(RationalFunction(num, den))


def test_standard_form():
    w = standard_form(3)
    a, b, c = variables(3)
    assert w == form(Polynomial.one(3), a * b * c)
    assert str(standard_form(2)) == "1/(x1*x2) dx1^dx2"
    with pytest.raises(LimitError):
        standard_form(9)


def test_cremona_pullbacks():
    assert pullback(cremona(2), standard_form(2)) == standard_form(2)
    assert pullback(cremona(3), standard_form(3)) == -standard_form(3)
    for n in (2, 3, 4, 5):
        assert scaling_factor(cremona(n), standard_form(n)) == (-1) ** n


def test_tau_preserves_omega2():
    assert form_equal(pullback(tau, standard_form(2)), standard_form(2))
    assert scaling_factor(tau, standard_form(2)) == 1


def test_scaling_factor_none_when_not_proportional():
    x, y = (RationalFunction.variable(2, i) for i in range(2))
    f = RationalMap([x + 1, y], 2)
    assert scaling_factor(f, standard_form(2)) is None


def test_pullback_non_dominant():
    x, y = (RationalFunction.variable(2, i) for i in range(2))
    with pytest.raises(NonDominantMapError):
        pullback(RationalMap([x * y, x * y], 2), standard_form(2))


def test_scaling_factor_of_zero_form():
    with pytest.raises(ValueError):
        scaling_factor(identity(2), LogVolumeForm(RationalFunction.constant(2, 0)))


def test_pole_order():
    a, b = variables(2)
    coeff = RationalFunction(a + 1, a * a * b * (a + b))
    assert pole_order(coeff, a) == 2
    assert pole_order(coeff, a + b) == 1
    assert pole_order(coeff, a + 1) == -1
    assert pole_order(coeff, a - b) == 0


def test_residue_coordinate_examples():
    a, b = variables(2)
    w = standard_form(2)
    one_var = standard_form(1)
    assert residue(w, b, 1) == -one_var
    assert residue(w, a, 0) == one_var


def test_residue_linear_factor_sign_convention():
    # (-1)^(var) * coeff*factor / (d factor/d x_var), restricted to x1 = -x2; x2 is renamed x1
    a, b = variables(2)
    w = form(Polynomial.one(2), (a + b) * b)
    r = residue(w, a + b, 0)
    assert r == form(Polynomial.one(1), Polynomial.variable(1, 0))


def test_residue_scaled_factor():
    a, b = variables(2)
    w = form(Polynomial.one(2), (2 * a + b) * b)
    assert residue(w, 2 * a + b, 0) == form(Polynomial.constant(1, 1), Polynomial.variable(1, 0).scale(2))


def test_residue_errors():
    a, b = variables(2)
    with pytest.raises(ResidueError, match="non-logarithmic pole"):
        residue(form(Polynomial.one(2), a * a * b), a, 0)
    with pytest.raises(ResidueError, match="unsupported residue chart"):
        residue(form(Polynomial.one(2), (a * a + b) * b), a * a + b, 0)


def test_residue_of_regular_factor_is_zero():
    a, b = variables(2)
    assert residue(standard_form(2), a + 1, 0).is_zero()


def test_residue_n1_gives_constant():
    r = residue(standard_form(1), Polynomial.variable(1, 0), 0)
    assert r.nvars == 0 and r.coeff.constant_value() == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_residue_all_coordinates(n):
    w = standard_form(n)
    for i in range(n):
        r = residue(w, Polynomial.variable(n, i), i)
        want = standard_form(n - 1).scaled((-1) ** i) if n > 1 else None
        if want is None:
            assert r.coeff.constant_value() == 1
        else:
            assert r == want


def test_divisor_report():
    a, b, c = variables(3)
    w = standard_form(3)
    assert check_divisor(w, [(a, 1), (b, 1), (c, 1)])
    rep = divisor_report(w, [(a, 1), (b, 1)])
    assert not rep.ok and "unaccounted" in rep.diagnostic
    rep = divisor_report(form(Polynomial.one(3), a * a * b * c), [(a, 1), (b, 1), (c, 1)])
    assert not rep.ok and "found 2" in rep.diagnostic


def test_divisor_structural_errors():
    a, b = variables(2)
    with pytest.raises(StructuralError):
        divisor_report(standard_form(2), [(a, 2), (b, 1)])
    with pytest.raises(StructuralError):
        divisor_report(standard_form(2), [(a, 1), (a.scale(3), 1)])


@pytest.mark.parametrize("n", range(1, 9))
def test_divisor_of_standard_form(n):
    assert check_divisor(standard_form(n), [(Polynomial.variable(n, i), 1) for i in range(n)])


@given(maps(2), maps(2))
def test_pullback_functorial(f, g):
    with within_limits():
        w = standard_form(2)
        assert pullback(compose(f, g), w) == pullback(f, pullback(g, w))


@given(maps(3), maps(3))
def test_pullback_functorial_3(f, g):
    with within_limits():
        a, b, c = variables(3)
        w = form(a + 1, b * c)
        assert pullback(compose(f, g), w) == pullback(f, pullback(g, w))


@given(integer_matrices(2, -3, 3))
def test_monomial_scaling_is_determinant(a):
    assert scaling_factor(monomial_map(a), standard_form(2)) == det(a)


@given(st.sampled_from([tau, cremona(2), monomial_map([[2, 1], [1, 1]]), monomial_map([[0, 1], [-1, 0]])]),
       st.sampled_from([tau, cremona(2), monomial_map([[1, 1], [0, 1]]), monomial_map([[1, 0], [3, -1]])]))
def test_scaling_multiplicative(f, g):
    w = standard_form(2)
    assert scaling_factor(compose(f, g), w) == scaling_factor(f, w) * scaling_factor(g, w)


@given(integer_matrices(2, -2, 2), st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_residue_commutes_with_pullback(block, col):
    # monomial map with last row e3 preserves {x3 = 0}; the block is the induced map
    a = [block[0] + [col[0]], block[1] + [col[1]], [0, 0, 1]]
    g = monomial_map(a)
    w = standard_form(3)
    x3 = Polynomial.variable(3, 2)
    lhs = residue(pullback(g, w), x3, 2)
    rhs = pullback(monomial_map(block), residue(w, x3, 2))
    assert lhs == rhs
