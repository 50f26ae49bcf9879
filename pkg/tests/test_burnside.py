import pytest
from hypothesis import given, strategies as st

from birvol.burnside import (
    ZERO,
    Axiom,
    BurnsideElement,
    ClassLabel,
    EquivalenceOracle,
    ResolutionData,
    c_invariant,
    check_zero_form_discipline,
    compose_ledger,
    embed,
    equal,
    forget,
    normalize,
    product_label,
    project,
)
from birvol.errors import LedgerError, OracleError
from birvol.scenario.ledgers import ledger_p3, ledger_p4, p3_generators, p4_generators

NAMES = ["A", "B", "C", "D", "E"]
labels = st.builds(lambda f, form: ClassLabel((f,), 2, form),
                   st.sampled_from(NAMES), st.sampled_from([None, ZERO]))
elements = st.lists(st.tuples(labels, st.integers(-3, 3)), max_size=6).map(BurnsideElement)
equivalences = st.lists(st.tuples(st.sampled_from(NAMES), st.sampled_from(NAMES)), max_size=3)
oracles = equivalences.map(lambda eqs: EquivalenceOracle.build(equivalent=eqs))


def lab(name, dim=2, form=ZERO):
    return ClassLabel.parse(name, dim, form)


@given(elements, elements, elements)
def test_group_laws(a, b, c):
    z = BurnsideElement.zero()
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + z == a
    assert a + (-a) == 0
    assert 3 * a == a + a + a


@given(elements, elements, oracles)
def test_normalize_is_homomorphism(a, b, o):
    assert normalize(a + b, o) == normalize(a, o) + normalize(b, o)
    assert normalize(normalize(a, o), o) == normalize(a, o)


@given(st.lists(labels, max_size=5), oracles, st.randoms(use_true_random=False))
def test_c_invariant_vanishes_on_shuffled_sides(ups, o, rnd):
    downs = list(ups)
    rnd.shuffle(downs)
    assert c_invariant(ResolutionData("r", tuple(ups), tuple(downs)), o) == 0


@given(st.lists(labels, max_size=4), st.lists(labels, max_size=4), oracles)
def test_inverse_negates(ups, downs, o):
    r = ResolutionData("r", tuple(ups), tuple(downs))
    assert c_invariant(r.inverse(), o) == -c_invariant(r, o)


@given(elements, elements, st.lists(labels, max_size=3), oracles)
def test_project_idempotent_homomorphism(a, b, gens, o):
    pa = project(a, gens, o)
    assert project(pa, gens, o) == pa
    assert project(a + b, gens, o) == pa + project(b, gens, o)


@given(elements)
def test_forget_after_embed(a):
    bare = forget(a)
    assert forget(embed(bare)) == bare


def test_equivalence_through_factors():
    o = EquivalenceOracle.build(equivalent=[("C", "Cjac")])
    assert o.equivalent(lab("C*P1"), lab("Cjac*P1"))
    assert o.equivalent(lab("P1*C"), lab("Cjac*P1"))
    assert not o.equivalent(lab("C*P1"), lab("C*P2"))
    assert equal(BurnsideElement.of(lab("C*P1")), BurnsideElement.of(lab("Cjac*P1")), o)
    assert o.classes() == [["C", "Cjac"]]


def test_contradiction_is_reported():
    with pytest.raises(OracleError):
        EquivalenceOracle([Axiom("~/", ("A",), ("B",)), Axiom("~", ("A",), ("B",))])
    with pytest.raises(OracleError):
        EquivalenceOracle.build(equivalent=[("A", "B"), ("B", "C")], inequivalent=[("A", "C")])
    with pytest.raises(OracleError):
        EquivalenceOracle([Axiom("~", ("A", "B"), ("C",))])
    base = EquivalenceOracle([Axiom("~/", ("A",), ("B",))])
    assert base.declare_equivalent("A", "B").equivalent(lab("A"), lab("B"))


def test_mixed_dimensions_rejected():
    with pytest.raises(LedgerError):
        BurnsideElement([(lab("A", 2), 1), (lab("B", 3), 1)])
    with pytest.raises(LedgerError):
        BurnsideElement.of(lab("A", 2)) + BurnsideElement.of(lab("B", 3))
    with pytest.raises(LedgerError):
        ResolutionData("r", (lab("A", 2),), (lab("B", 1),))


def test_nonzero_forms_must_pair():
    up, dn = lab("P2", 2, "w"), lab("F2", 2, "w'")
    o = EquivalenceOracle.build(equivalent=[("P2", "F2")])
    assert c_invariant(ResolutionData("t", (up,), (dn,), ((up, dn),)), o) == 0
    with pytest.raises(LedgerError):
        c_invariant(ResolutionData("t", (up,), (dn,)), o)
    with pytest.raises(LedgerError):
        c_invariant(ResolutionData("t", (up,), (dn,), ((up, dn),)))
    with pytest.raises(LedgerError):
        check_zero_form_discipline(BurnsideElement.of(up))
    with pytest.raises(LedgerError):
        compose_ledger([(2, BurnsideElement.of(lab("A")))])


def test_product_label_forms():
    a, b = lab("C", 1, None), lab("P1", 1, ZERO)
    assert product_label(a, b) == lab("C*P1", 2, ZERO)
    assert product_label(lab("C", 1, "w"), b).form == ZERO
    assert product_label(lab("C", 1, "u"), lab("D", 1, "v")).form == "u^v"


def test_ledger_p3_total():
    total = ledger_p3().total()
    expected = BurnsideElement.of(lab("C*P1")) - BurnsideElement.of(lab("Cjac*P1"))
    assert total == expected
    assert total != 0
    assert str(total) == "[C*P1, 0] - [Cjac*P1, 0]"


def test_ledger_p3_flip_vanishes():
    led = ledger_p3()
    flipped = led.oracle.declare_equivalent("C", "Cjac")
    assert project(led.total(flipped), p3_generators(), flipped) == 0
    assert project(led.total(), p3_generators(), led.oracle) != 0


def test_ledger_p4_projection_and_flip():
    led = ledger_p4()
    proj = project(led.total(), p4_generators(), led.oracle)
    expected = BurnsideElement.of(lab("SL*P1", 3)) - BurnsideElement.of(lab("SM*P1", 3))
    assert equal(proj, expected, led.oracle)
    assert proj != 0
    flipped = led.oracle.declare_equivalent("SL", "SM")
    assert project(led.total(flipped), p4_generators(), flipped) == 0


def test_ledger_p4_part_values():
    values = {name: e for name, _, e in ledger_p4().part_values()}
    assert values["eta4"] == 2 * BurnsideElement.of(lab("P3", 3))
    assert values["phi^-1"] == 0
