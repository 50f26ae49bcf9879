from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from birvol.cypairs import (
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
from birvol.errors import StructuralError


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_toric(n):
    b = standard_toric(n)
    d = dual_complex(b)
    assert coregularity(b) == 0
    assert d.dimension == n - 1
    assert d.face_vector() == tuple(comb(n + 1, k + 1) for k in range(n))
    assert d.euler_characteristic() == 1 + (-1) ** (n - 1)


def test_empty_boundary():
    d = dual_complex(empty_boundary(3))
    assert d.dimension == -1 and d.face_vector() == ()
    assert coregularity(empty_boundary(3)) == 3


def test_cubic_pair_fixture():
    b = SncBoundary(3, ["S", "H", "E"], [(("S", "H"), 2), ("S", "E"), ("H", "E"), ("S", "H", "E")])
    assert coregularity(b) == 0
    assert dual_complex(b).face_vector() == (3, 4, 1)


def test_two_curves_without_triple_point():
    # S and H meeting in two curves, nothing deeper: a circle made of two edges
    b = SncBoundary(3, ["S", "H"], [(("S", "H"), 2)])
    d = dual_complex(b)
    assert d.face_vector() == (2, 2) and d.euler_characteristic() == 0
    assert coregularity(b) == 1


def test_fractional_components_dropped():
    b = SncBoundary(2, ["A", BoundaryComponent("B", Fraction(1, 2))], [("A", "B")])
    d = dual_complex(b)
    assert d.vertices == ("A",) and d.dimension == 0
    assert coregularity(b) == 1


def test_validation():
    with pytest.raises(StructuralError, match="downward closure"):
        SncBoundary(3, ["A", "B", "C"], [("A", "B", "C")])
    with pytest.raises(StructuralError):
        SncBoundary(1, ["A", "B"], [("A", "B")])
    with pytest.raises(StructuralError):
        SncBoundary(2, ["A", "A"], [])
    with pytest.raises(StructuralError):
        SncBoundary(2, ["A"], [(("A",), 2)])
    with pytest.raises(StructuralError):
        SncBoundary(2, ["A"], [("Z",)])
    with pytest.raises(StructuralError):
        BoundaryComponent("A", 2)


def test_product_square_and_clash():
    d = dual_complex(product_pair(standard_toric(1, "A"), standard_toric(1, "B")))
    assert d.face_vector() == (4, 4)
    with pytest.raises(StructuralError):
        product_pair(standard_toric(1), standard_toric(1))


def test_stabilize_labels():
    b = stabilize(standard_toric(1, "T"), 1)
    assert len(set(b.labels)) == 4


def test_coordinate_boundary_trace():
    b = coordinate_boundary(3, [0, 2])
    trace = b.chart_trace()
    assert [str(p) for p, _ in trace] == ["x1", "x3"]
    assert coregularity(b) == 1


@st.composite
def boundaries(draw):
    """Random downward-closed strata on up to four components."""
    from itertools import combinations

    n = draw(st.integers(1, 4))
    k = draw(st.integers(0, n + 1))
    labels = [f"C{i}" for i in range(k)]
    strata = {}
    for r in range(2, min(k, n) + 1):
        for s in combinations(range(k), r):
            subs_ok = all(frozenset(t) in strata or len(t) == 1 for t in combinations(s, r - 1))
            if subs_ok and draw(st.booleans()):
                strata[frozenset(s)] = draw(st.integers(1, 2))
    return SncBoundary(n, labels, strata)


@given(boundaries(), st.integers(1, 3))
def test_stabilize_preserves_coregularity(b, r):
    assert coregularity(stabilize(b, r)) == coregularity(b)


@given(boundaries(), boundaries())
def test_product_adds_coregularity(a, b):
    b = SncBoundary(b.ambient_dim, [BoundaryComponent("R" + c.label) for c in b.components], b.strata)
    assert coregularity(product_pair(a, b)) == coregularity(a) + coregularity(b)


@given(boundaries())
def test_coregularity_bounds(b):
    assert 0 <= coregularity(b) <= b.ambient_dim
