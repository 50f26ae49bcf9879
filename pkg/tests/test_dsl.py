from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from birvol.dsl import (
    DslSyntaxError,
    DslValidationError,
    parse,
    parse_expr,
    print_expr,
    print_program,
    run_program,
)
from birvol.dsl.ast import (
    Axiom,
    Bin,
    Binding,
    Call,
    CheckDef,
    Const,
    Entry,
    Group,
    ListLit,
    Name,
    Neg,
    Num,
    OracleBlock,
    OracleDef,
    Program,
    SetLit,
    Str,
)

TOUR = Path(__file__).resolve().parents[1] / "scenarios" / "tour.cbk"


def run(src, seed=42):
    return run_program(parse(src), seed=seed, source_name="t.cbk")


def test_precedence():
    assert parse_expr("a + b * c") == Bin("+", Name("a"), Bin("*", Name("b"), Name("c")))
    assert parse_expr("a^b^c") == Bin("^", Name("a"), Bin("^", Name("b"), Name("c")))
    assert parse_expr("-x^2") == Neg(Bin("^", Name("x"), Num(2)))
    assert parse_expr("f then g then h") == Bin("then", Bin("then", Name("f"), Name("g")), Name("h"))
    assert parse_expr("a - b - c") == Bin("-", Bin("-", Name("a"), Name("b")), Name("c"))


def test_statements():
    p = parse("map t : 2 -> 2 = [y, (y+1)/x];  # comment\ncheck order(t) == 5 under O;")
    b, c = p.statements
    assert b == Binding("map", "t", ListLit((Name("y"), Bin("/", Bin("+", Name("y"), Num(1)), Name("x")))), (2, 2))
    assert c == CheckDef(Call("order", (Name("t"),)), "==", Num(5), "O")
    assert b.span.line == 1 and c.span.line == 2


def test_oracle_syntax():
    (o,) = parse("oracle R = builtin(\"p3\") + { C ~/ Cjac; rat: {P2, F2}; A*B ~ C };").statements
    assert o == OracleDef("R", (
        Call("builtin", (Str("p3"),)),
        OracleBlock((Axiom("~/", ("C",), ("Cjac",)), Group("rat", ("P2", "F2")),
                     Axiom("~", ("A", "B"), ("C",)))),
    ))


def test_call_kwargs_and_entries():
    e = parse_expr("snc(dim=2, components=[S:1, H:1], strata=[{S,H}:2])")
    assert e.kwargs[0] == ("dim", Num(2))
    assert e.kwargs[2][1] == ListLit((Entry(SetLit((Name("S"), Name("H"))), Num(2)),))


@pytest.mark.parametrize("src,line,col,expected", [
    ("map t = [x;", 1, 11, "']'"),
    ("check f == ;", 1, 12, "expression"),
    ("check 1 1;", 1, 9, "'=='"),
    ("poly\n  then = x;", 2, 3, "identifier"),
    ("frob x = 1;", 1, 1, "'check'"),
    ("map t = [x]", 1, 12, "';'"),
    ("poly p = x $ y;", 1, 12, None),
])
def test_syntax_errors_carry_position(src, line, col, expected):
    with pytest.raises(DslSyntaxError) as ei:
        parse(src)
    assert (ei.value.span.line, ei.value.span.col) == (line, col)
    if expected:
        assert expected in ei.value.expected
    assert str(ei.value).startswith(f"{line}:{col}:")


@pytest.mark.parametrize("src", [
    "map bad = [ 1/0 ];",
    "check order(nope) == 5;",
    "poly p = x;\npoly p = y;",
    "poly x1 = 3;",
    "map m = cremona(2);\ncheck order(m) == 2 under Z;",
    "map m = frobnicate(2);",
    "class c = [A];",
])
def test_validation_errors(src):
    with pytest.raises(DslValidationError) as ei:
        run(src)
    assert ei.value.span is not None


def test_validation_before_checks():
    # no check runs when a later binding is invalid
    with pytest.raises(DslValidationError):
        run("check 1 == 1;\nmap bad = [1/0];")


def test_checks_report_failures_without_aborting():
    res = run("map s = cremona(2);\ncheck order(s) == 3;\ncheck order(s) == 2;\n")
    assert [r.passed for r in res] == [False, True]
    assert res[0].citation == "t.cbk:2"
    assert res[0].check == "order(s) == 3"
    assert res[0].diagnostic


def test_tour_file_passes():
    res = run_program(parse(TOUR.read_text()), source_name=TOUR.name)
    assert len(res) == 22
    assert all(r.passed for r in res), [r for r in res if not r.passed]


def test_tour_seed_independent():
    src = TOUR.read_text()
    assert [r.passed for r in run(src, 7)] == [r.passed for r in run(src, 42)]


def test_tour_round_trips():
    p = parse(TOUR.read_text())
    assert parse(print_program(p)) == p


# round-trip property over generated syntax trees

names = st.sampled_from(["a", "b", "x1", "tau", "w_2", "K'", "map", "check", "f3"])
leaves = st.one_of(
    st.integers(0, 10**6).map(Num),
    names.map(Name),
    st.text(st.characters(blacklist_characters="\n", blacklist_categories=("Cs",)), max_size=6).map(Str),
    st.sampled_from([True, False, None]).map(Const),
)


def _extend(children):
    item = st.one_of(children, st.builds(Entry, children, children))
    return st.one_of(
        st.builds(Neg, children),
        st.builds(Bin, st.sampled_from(["then", "+", "-", "*", "/", "^"]), children, children),
        st.builds(Call, names, st.lists(children, max_size=3).map(tuple),
                  st.lists(st.tuples(names, children), max_size=2).map(tuple)),
        st.lists(item, max_size=3).map(lambda xs: ListLit(tuple(xs))),
        st.lists(item, max_size=3).map(lambda xs: SetLit(tuple(xs))),
    )


exprs = st.recursive(leaves, _extend, max_leaves=12)
idents = st.sampled_from(["p", "q1", "tau", "O", "K'"])
factors = st.lists(idents, min_size=1, max_size=3).map(tuple)
oracle_items = st.one_of(
    st.builds(Axiom, st.sampled_from(["~", "~/"]), factors, factors),
    st.builds(Group, idents, st.lists(idents, min_size=1, max_size=3).map(tuple)),
)
oracle_terms = st.one_of(
    st.lists(oracle_items, max_size=3).map(lambda xs: OracleBlock(tuple(xs))),
    idents.map(Name),
    st.builds(Call, idents, st.lists(exprs, max_size=2).map(tuple), st.just(())),
)


@st.composite
def bindings(draw):
    kind = draw(st.sampled_from(["poly", "map", "form", "pair", "lattice", "class"]))
    dims = ()
    if kind == "map" and draw(st.booleans()):
        dims = (draw(st.integers(0, 9)), draw(st.integers(0, 9)))
    elif kind == "class" and draw(st.booleans()):
        dims = (draw(st.integers(0, 9)),)
    return Binding(kind, draw(idents), draw(exprs), dims)


statements = st.one_of(
    bindings(),
    st.builds(CheckDef, exprs, st.sampled_from(["==", "!="]), exprs, st.one_of(st.none(), idents)),
    st.builds(OracleDef, idents, st.lists(oracle_terms, min_size=1, max_size=3).map(tuple)),
)


@given(exprs)
def test_expr_round_trip(e):
    assert parse_expr(print_expr(e)) == e


@given(st.lists(statements, max_size=5))
def test_program_round_trip(stmts):
    p = Program(tuple(stmts))
    text = print_program(p)
    assert parse(text) == p
    assert print_program(parse(text)) == text
