from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from birvol.errors import DimensionMismatchError, IndeterminateCompositionError, PoleError
from birvol.exact import Polynomial, RationalFunction, rf_substitute, variables
from birvol.ratmap import (
    RationalMap,
    cluster_tau,
    compose,
    cremona,
    eval_map,
    identity,
    is_dominant,
    is_identity,
    is_inverse_pair,
    jacobian_det,
    monomial_map,
    order,
    power,
)

from strategies import integer_matrices, maps, unimodular_2x2, within_limits

x, y = (RationalFunction.variable(2, i) for i in range(2))
tau = cluster_tau()


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_eval_examples():
    assert eval_map(tau, [1, 1]) == (1, 2)
    assert eval_map(cremona(2), [2, 4]) == (Fraction(1, 2), Fraction(1, 4))
    assert eval_map(tau, [3, -2]) == (-2, Fraction(-1, 3))


def test_eval_pole_names_coordinate():
    with pytest.raises(PoleError) as exc:
        eval_map(tau, [0, 1])
    assert exc.value.coordinate == 1
    assert "coordinate 2" in str(exc.value)


def test_tau_iterates():
    # frozen from an independent CAS
    want = {
        2: [(y + 1) / x, (x + y + 1) / (x * y)],
        3: [(x + y + 1) / (x * y), (x + 1) / y],
        4: [(x + 1) / y, x],
    }
    for k, coords in want.items():
        assert power(tau, k) == RationalMap(coords, 2)
    assert eval_map(power(tau, 2), [2, 5]) == (3, Fraction(4, 5))


def test_order_examples():
    assert order(tau) == 5
    assert order(identity(3)) == 1
    assert order(cremona(4)) == 2
    shift = RationalMap([x + 1, y], 2)
    assert order(shift) is None


def test_jacobian_examples():
    assert jacobian_det(identity(4)) == 1
    assert jacobian_det(cremona(2)) == 1 / (x * x * y * y)
    assert jacobian_det(monomial_map([[1, 1], [0, 1]])) == y
    assert jacobian_det(tau) == (y + 1) / (x * x)
    assert jacobian_det(monomial_map([[2, 1], [1, 1]])) == x * x * y


def test_jacobian_4x4():
    a, b, c, d = (RationalFunction.variable(4, i) for i in range(4))
    f = RationalMap([a * b, b + c * c, c * d, d - a], 4)
    assert jacobian_det(f) == 2 * a * c * c + b * d


def test_monomial_constructor():
    m = monomial_map([[1, -1], [0, 1]])
    assert m == RationalMap([x / y, y], 2)
    assert is_inverse_pair(m, monomial_map([[1, 1], [0, 1]]))


def test_non_dominant():
    f = RationalMap([x + y, 2 * x + 2 * y], 2)
    assert jacobian_det(f) == 0
    assert not is_dominant(f)


def test_compose_indeterminate():
    f = RationalMap([x, x], 2)
    g = RationalMap([1 / (x - y), y], 2)
    with pytest.raises(IndeterminateCompositionError):
        compose(f, g)


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        compose(identity(2), identity(3))


def test_compose_order_is_first_then():
    f = RationalMap([x + 1, y], 2)
    g = RationalMap([x * y, y], 2)
    assert compose(f, g) == RationalMap([(x + 1) * y, y], 2)
    assert f.then(g) == compose(f, g)


@given(maps(2), maps(2), maps(2))
def test_compose_associative(f, g, h):
    with within_limits():
        assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(maps(3), maps(3))
def test_chain_rule(f, g):
    with within_limits():
        lhs = jacobian_det(compose(f, g))
        rhs = rf_substitute(jacobian_det(g), f.coords) * jacobian_det(f)
        assert lhs == rhs


@given(unimodular_2x2(), unimodular_2x2())
def test_monomial_composition_is_matrix_product(a, b):
    with within_limits():
        assert compose(monomial_map(a), monomial_map(b)) == monomial_map(matmul(b, a))


@given(integer_matrices(2))
def test_monomial_jacobian_times_monomials(a):
    m = monomial_map(a)
    d = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    # J * x * y / (m1 * m2) = det A
    assert jacobian_det(m) * x * y / (m.coords[0] * m.coords[1]) == d


@given(st.sampled_from([tau, cremona(2), monomial_map([[0, 1], [-1, 0]]), monomial_map([[1, 1], [-1, 0]])]))
def test_order_contract(f):
    k = order(f)
    assert k is not None
    assert is_identity(power(f, k))
    assert not any(is_identity(power(f, j)) for j in range(1, k))
