import pytest
from hypothesis import given, strategies as st

from birvol.errors import StructuralError, UndefinedIntersectionError, UnknownLabelError
from birvol.lattice import (
    HL_BASIS_CHANGE,
    HL_GRAM,
    BasisChange,
    IntersectionLattice,
    LatticeClass,
    builtin_hl_lattice,
    express,
    pair,
    transformed_gram,
    verify_gram_transform,
)

L, B, P = builtin_hl_lattice()


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def test_gram_diagonal():
    assert [HL_GRAM[i][i] for i in range(8)] == [1, -12, 1, 1, 1, 1, 1, 1]
    assert pair(L, L["LX2"], L["LX2"]) == 1
    assert pair(L, L["GammaL"], L["GammaL"]) == -12


def test_basis_change_is_isometry():
    assert transformed_gram(L, B) == HL_GRAM
    assert verify_gram_transform(L, B)


def test_basis_change_determinant():
    # frozen from an independent CAS: the change is unimodular
    assert _det([list(r) for r in HL_BASIS_CHANGE]) == -1


def test_plane_class_relations():
    plane = express(L, "LX2 - Q1 - Q2 - Q3")
    assert L["PiL"] == plane
    assert pair(L, L["MX2"], plane) == 1
    assert express(L, "MX2 - K1 - K2 - K3") == plane


def test_q_k_pairs():
    assert all(pair(L, L[f"Q{i}"], L[f"K{j}"]) == 1 for i in (1, 2, 3) for j in (1, 2, 3))


def test_k_rows():
    assert L["K1"] == LatticeClass((2, -1, 2, 1, 1, 1, 1, 1))
    for j in (1, 2, 3):
        assert express(L, f"2 LX2 - GammaL + F{j} + F1 + F2 + F3 + Q1 + Q2 + Q3") == L[f"K{j}"]


def test_perturbed_change_fails():
    rows = [list(r) for r in HL_BASIS_CHANGE]
    rows[2][0] += 1
    assert not verify_gram_transform(L, BasisChange.of(rows, B.labels))


def test_p_prime_table():
    for i in (1, 2, 3):
        assert P[f"E^3 E'{i}"] == -4
        assert P[f"L' E'{i}"] == 0
        assert P[f"E'{i}^4"] == -1
        assert P[f"E^2*E'{i}^2"] == 2
        assert P[f"E E'{i}^3"] == 0
    assert P["L'^3 E"] == 0
    assert P["E'1 E^3"] == P["E^3 E'1"]
    with pytest.raises(UndefinedIntersectionError):
        P["E^4"]
    with pytest.raises(UnknownLabelError):
        P["Z^4"]


def test_lattice_validation():
    with pytest.raises(StructuralError):
        IntersectionLattice(["a", "b"], [[1, 2], [3, 1]])
    with pytest.raises(StructuralError):
        IntersectionLattice(["a", "a"], [[1, 0], [0, 1]])
    with pytest.raises(UnknownLabelError):
        L["nope"]
    with pytest.raises(ValueError):
        express(L, "LX2 LX2")


vectors = st.lists(st.integers(-20, 20), min_size=8, max_size=8).map(lambda v: LatticeClass(tuple(v)))


@given(vectors, vectors, vectors, st.integers(-5, 5))
def test_pairing_bilinear_symmetric(u, v, w, k):
    assert pair(L, u, v) == pair(L, v, u)
    assert pair(L, u + v, w) == pair(L, u, w) + pair(L, v, w)
    assert pair(L, k * u, v) == k * pair(L, u, v)


@given(vectors)
def test_isometry_preserves_pairing(u):
    # write u in the new basis and compare self-intersections
    image = LatticeClass(tuple(sum(u.coords[i] * HL_BASIS_CHANGE[i][j] for i in range(8)) for j in range(8)))
    assert pair(L, image, image) == pair(L, u, u)


@given(st.lists(st.tuples(st.integers(-4, 4), st.sampled_from(list(L.named))), max_size=6))
def test_express_string_matches_pairs(terms):
    text = " ".join(f"{'-' if k < 0 else '+'} {abs(k)} {lab}" for k, lab in terms).lstrip("+ ")
    assert express(L, text) == express(L, terms)
