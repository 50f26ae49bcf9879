"""Canonical pretty-printer; ``parse(print_program(p)) == p``."""

from __future__ import annotations

from .ast import (
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

# binding strength: then < sum < term < unary < power < atom
_LEVEL = {"then": 1, "+": 2, "-": 2, "*": 3, "/": 3}
_UNARY, _POWER, _ATOM = 4, 5, 6


def _level(e: Expr) -> int:
    if isinstance(e, Bin):
        return _POWER if e.op == "^" else _LEVEL[e.op]
    if isinstance(e, Neg):
        return _UNARY
    return _ATOM


def _wrap(e: Expr, min_level: int) -> str:
    s = print_expr(e)
    return f"({s})" if _level(e) < min_level else s


def _string(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def print_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Str):
        return _string(e.value)
    if isinstance(e, Const):
        return {True: "true", False: "false", None: "none"}[e.value]
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _UNARY)
    if isinstance(e, Bin):
        if e.op == "^":
            return f"{_wrap(e.left, _ATOM)}^{_wrap(e.right, _UNARY)}"
        lv = _LEVEL[e.op]
        sep = " then " if e.op == "then" else f" {e.op} "
        return _wrap(e.left, lv) + sep + _wrap(e.right, lv + 1)
    if isinstance(e, Call):
        parts = [print_expr(a) for a in e.args] + [f"{k}={print_expr(v)}" for k, v in e.kwargs]
        return f"{e.func}({', '.join(parts)})"
    if isinstance(e, Entry):
        return f"{print_expr(e.key)}:{print_expr(e.value)}"
    if isinstance(e, ListLit):
        return "[" + ", ".join(print_expr(i) for i in e.items) + "]"
    if isinstance(e, SetLit):
        return "{" + ", ".join(print_expr(i) for i in e.items) + "}"
    raise TypeError(f"not an expression: {e!r}")


def _oracle_item(it) -> str:
    if isinstance(it, Group):
        return f"{it.name}: {{{', '.join(it.members)}}}"
    assert isinstance(it, Axiom)
    return f"{'*'.join(it.left)} {it.kind} {'*'.join(it.right)}"


def _oracle_term(t) -> str:
    if isinstance(t, OracleBlock):
        if not t.items:
            return "{}"
        return "{ " + "; ".join(_oracle_item(i) for i in t.items) + "; }"
    return print_expr(t)


def print_statement(s) -> str:
    if isinstance(s, Binding):
        head = f"{s.kind} {s.name}"
        if s.dims:
            head += " : " + " -> ".join(str(d) for d in s.dims)
        return f"{head} = {print_expr(s.value)};"
    if isinstance(s, OracleDef):
        return f"oracle {s.name} = {' + '.join(_oracle_term(t) for t in s.terms)};"
    if isinstance(s, CheckDef):
        tail = f" under {s.under}" if s.under else ""
        return f"check {print_expr(s.lhs)} {s.op} {print_expr(s.rhs)}{tail};"
    raise TypeError(f"not a statement: {s!r}")


def print_program(p: Program) -> str:
    return "".join(print_statement(s) + "\n" for s in p.statements)
