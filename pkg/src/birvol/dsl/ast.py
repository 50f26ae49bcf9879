"""Syntax tree of scenario files.  Spans never take part in equality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .lexer import Span

_span = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: int
    span: Span | None = _span


@dataclass(frozen=True)
class Str:
    value: str
    span: Span | None = _span


@dataclass(frozen=True)
class Const:
    value: bool | None  # true, false, none
    span: Span | None = _span


@dataclass(frozen=True)
class Name:
    id: str
    span: Span | None = _span


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span | None = _span


@dataclass(frozen=True)
class Bin:
    op: str  # then + - * / ^
    left: "Expr"
    right: "Expr"
    span: Span | None = _span


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...] = ()
    kwargs: tuple[tuple[str, "Expr"], ...] = ()
    span: Span | None = _span


@dataclass(frozen=True)
class Entry:
    key: "Expr"
    value: "Expr"
    span: Span | None = _span


@dataclass(frozen=True)
class ListLit:
    items: tuple["Expr", ...] = ()
    span: Span | None = _span


@dataclass(frozen=True)
class SetLit:
    items: tuple["Expr", ...] = ()
    span: Span | None = _span


Expr = Union[Num, Str, Const, Name, Neg, Bin, Call, Entry, ListLit, SetLit]


# statements

BINDING_KINDS = ("poly", "map", "form", "pair", "lattice", "class")


@dataclass(frozen=True)
class Binding:
    kind: str
    name: str
    value: Expr
    dims: tuple[int, ...] = ()  # map: (src, dst); class: (dim,)
    span: Span | None = _span


@dataclass(frozen=True)
class Axiom:
    kind: str  # "~" or "~/"
    left: tuple[str, ...]
    right: tuple[str, ...]
    span: Span | None = _span


@dataclass(frozen=True)
class Group:
    name: str
    members: tuple[str, ...]
    span: Span | None = _span


@dataclass(frozen=True)
class OracleBlock:
    items: tuple[Union[Axiom, Group], ...] = ()
    span: Span | None = _span


@dataclass(frozen=True)
class OracleDef:
    name: str
    terms: tuple[Union[OracleBlock, Name, Call], ...]
    span: Span | None = _span


@dataclass(frozen=True)
class CheckDef:
    lhs: Expr
    op: str  # == or !=
    rhs: Expr
    under: str | None = None
    span: Span | None = _span


Statement = Union[Binding, OracleDef, CheckDef]


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...] = ()
