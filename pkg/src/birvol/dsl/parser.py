"""LL(1) recursive-descent parser for scenario files (grammar in docs/dsl.md)."""

from __future__ import annotations

from .ast import (
    BINDING_KINDS,
    Axiom,
    Bin,
    Binding,
    Call,
    CheckDef,
    Const,
    Entry,
    Expr,
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
from .lexer import DslSyntaxError, Span, Token, tokenize

KEYWORDS = frozenset(BINDING_KINDS + ("oracle", "check"))
RESERVED = frozenset(("then", "under", "true", "false", "none"))
_CONSTS = {"true": True, "false": False, "none": None}


def _join(a: Span, b: Span) -> Span:
    return Span(a.line, a.col, b.end_line, b.end_col)


class Parser:
    def __init__(self, source: str):
        self.toks = tokenize(source)
        self.i = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _prev(self) -> Token:
        return self.toks[self.i - 1]

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_word(self, word: str) -> bool:
        return self.at("NAME", word)

    def fail(self, expected: tuple[str, ...]):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise DslSyntaxError(f"unexpected {found}", t.span, expected)

    def expect(self, kind: str, describe: str | None = None) -> Token:
        if not self.at(kind):
            self.fail((describe or repr(kind),))
        t = self.tok
        self.i += 1
        return t

    def expect_word(self, word: str) -> Token:
        if not self.at_word(word):
            self.fail((repr(word),))
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> Token:
        if not self.at("NAME") or self.tok.text in RESERVED:
            self.fail(("identifier",))
        t = self.tok
        self.i += 1
        return t

    def integer(self) -> int:
        return int(self.expect("INT", "integer").text)

    # statements

    def program(self) -> Program:
        stmts = []
        while not self.at("EOF"):
            stmts.append(self.statement())
        return Program(tuple(stmts))

    def statement(self):
        t = self.tok
        if t.kind != "NAME" or t.text not in KEYWORDS:
            self.fail(tuple(repr(k) for k in sorted(KEYWORDS)))
        self.i += 1
        if t.text == "check":
            return self.check(t)
        if t.text == "oracle":
            return self.oracle(t)
        name = self.ident().text
        dims: tuple[int, ...] = ()
        if t.text == "map" and self.at(":"):
            self.i += 1
            src = self.integer()
            self.expect("->", "'->'")
            dims = (src, self.integer())
        elif t.text == "class" and self.at(":"):
            self.i += 1
            dims = (self.integer(),)
        self.expect("=", "'='")
        value = self.expr()
        end = self.expect(";", "';'")
        return Binding(t.text, name, value, dims, _join(t.span, end.span))

    def check(self, start: Token) -> CheckDef:
        lhs = self.expr()
        if not (self.at("==") or self.at("!=")):
            self.fail(("'=='", "'!='"))
        op = self.tok.text
        self.i += 1
        rhs = self.expr()
        under = None
        if self.at_word("under"):
            self.i += 1
            under = self.ident().text
        end = self.expect(";", "';'")
        return CheckDef(lhs, op, rhs, under, _join(start.span, end.span))

    def oracle(self, start: Token) -> OracleDef:
        name = self.ident().text
        self.expect("=", "'='")
        terms = [self.oracle_term()]
        while self.at("+"):
            self.i += 1
            terms.append(self.oracle_term())
        end = self.expect(";", "';'")
        return OracleDef(name, tuple(terms), _join(start.span, end.span))

    def oracle_term(self):
        if self.at("{"):
            open_ = self.tok
            self.i += 1
            items = []
            while not self.at("}"):
                items.append(self.oracle_item())
                if self.at(";"):
                    self.i += 1
                elif not self.at("}"):
                    self.fail(("';'", "'}'"))
            close = self.expect("}", "'}'")
            return OracleBlock(tuple(items), _join(open_.span, close.span))
        if self.at("NAME"):
            t = self.ident()
            if self.at("("):
                return self.call_tail(t)
            return Name(t.text, t.span)
        self.fail(("'{'", "identifier"))

    def oracle_item(self):
        first = self.ident()
        if self.at(":"):
            self.i += 1
            self.expect("{", "'{'")
            members = [self.ident().text]
            while self.at(","):
                self.i += 1
                members.append(self.ident().text)
            close = self.expect("}", "'}'")
            return Group(first.text, tuple(members), _join(first.span, close.span))
        left = self.product_tail(first)
        if not (self.at("~") or self.at("~/")):
            self.fail(("'~'", "'~/'", "':'", "'*'"))
        kind = self.tok.text
        self.i += 1
        right = self.product_tail(self.ident())
        return Axiom(kind, left, right, _join(first.span, self._prev().span))

    def product_tail(self, first: Token) -> tuple[str, ...]:
        names = [first.text]
        while self.at("*"):
            self.i += 1
            names.append(self.ident().text)
        return tuple(names)

    # expressions

    def expr(self) -> Expr:
        left = self.sum()
        while self.at_word("then"):
            self.i += 1
            right = self.sum()
            left = Bin("then", left, right, _join(left.span, right.span))
        return left

    def sum(self) -> Expr:
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            right = self.term()
            left = Bin(op, left, right, _join(left.span, right.span))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok.text
            self.i += 1
            right = self.unary()
            left = Bin(op, left, right, _join(left.span, right.span))
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            t = self.tok
            self.i += 1
            operand = self.unary()
            return Neg(operand, _join(t.span, operand.span))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at("^"):
            self.i += 1
            exp = self.unary()
            return Bin("^", base, exp, _join(base.span, exp.span))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return Num(int(t.text), t.span)
        if t.kind == "STRING":
            self.i += 1
            return Str(t.text, t.span)
        if t.kind == "NAME":
            if t.text in _CONSTS:
                self.i += 1
                return Const(_CONSTS[t.text], t.span)
            name = self.ident()
            if self.at("("):
                return self.call_tail(name)
            return Name(name.text, name.span)
        if t.kind == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if t.kind in ("[", "{"):
            close = "]" if t.kind == "[" else "}"
            self.i += 1
            items = self.items(close)
            end = self.expect(close, repr(close))
            cls = ListLit if t.kind == "[" else SetLit
            return cls(tuple(items), _join(t.span, end.span))
        self.fail(("expression",))

    def items(self, close: str) -> list[Expr]:
        out: list[Expr] = []
        if self.at(close):
            return out
        while True:
            out.append(self.item())
            if not self.at(","):
                break
            self.i += 1
        return out

    def item(self) -> Expr:
        key = self.expr()
        if self.at(":"):
            self.i += 1
            value = self.expr()
            return Entry(key, value, _join(key.span, value.span))
        return key

    def call_tail(self, name: Token) -> Call:
        self.expect("(", "'('")
        args: list[Expr] = []
        kwargs: list[tuple[str, Expr]] = []
        if not self.at(")"):
            while True:
                if self.at("NAME") and self.toks[self.i + 1].kind == "=":
                    key = self.ident().text
                    self.i += 1
                    kwargs.append((key, self.expr()))
                else:
                    if kwargs:
                        self.fail(("keyword argument",))
                    args.append(self.expr())
                if not self.at(","):
                    break
                self.i += 1
        end = self.expect(")", "')'")
        return Call(name.text, tuple(args), tuple(kwargs), _join(name.span, end.span))


def parse(source: str) -> Program:
    """Parse a scenario file; syntax errors carry line, column and expected tokens."""
    return Parser(source).program()


def parse_expr(source: str) -> Expr:
    p = Parser(source)
    e = p.expr()
    p.expect("EOF", "end of input")
    return e
