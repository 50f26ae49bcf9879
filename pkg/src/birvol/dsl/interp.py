"""Evaluation of scenario files.

Bindings are evaluated first, in order; any failure there (an unknown
name, a zero denominator, a malformed pair) is a validation error and no
check runs.  Checks are then evaluated one by one and never abort the run.
"""

from __future__ import annotations

import random
import re
import time
import traceback
from dataclasses import dataclass
from fractions import Fraction

from .. import burnside as bn
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
from ..errors import BirvolError
from ..exact import RationalFunction, rf_equal
from ..lattice import BUILTIN_LATTICES, HLFixture, LatticeClass, pair as lattice_pair, verify_gram_transform
from ..logform import (
    LogVolumeForm,
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
    identity,
    is_dominant,
    is_identity,
    is_inverse_pair,
    jacobian_det,
    monomial_map,
    order,
    power,
)
from ..scenario.core import CheckResult, derived_seed
from ..scenario.ledgers import ledger_p3, ledger_p4, p3_oracle, p4_oracle
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
from .lexer import Span
from .printer import print_expr

BUILTIN_ORACLES = {"p3": p3_oracle, "p4": p4_oracle}
BUILTIN_LEDGERS = {"p3": ledger_p3, "p4": ledger_p4}

_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}
_VAR = re.compile(r"x([1-8])$")


def variable_index(name: str) -> int | None:
    if name in _ALIASES:
        return _ALIASES[name]
    m = _VAR.match(name)
    return int(m.group(1)) - 1 if m else None


class DslValidationError(BirvolError):
    """A binding could not be evaluated, or a name does not resolve."""

    def __init__(self, message: str, span: Span | None = None):
        self.span = span
        self.bare = message
        super().__init__(f"{span.line}:{span.col}: {message}" if span else message)


class EvalError(BirvolError):
    def __init__(self, message: str, span: Span | None = None):
        self.span = span
        super().__init__(message)


# lazily evaluated bindings


@dataclass(frozen=True)
class PolyDef:
    expr: Expr


@dataclass(frozen=True)
class ClassDef:
    expr: Expr
    dim: int | None


@dataclass(frozen=True)
class Alg:
    """A polynomial-literal expression; its ring is fixed by the consumer."""

    expr: Expr


@dataclass(frozen=True)
class DivisorOf:
    form: LogVolumeForm


# function table: name -> argument positions that must name bindings

_FUNCTIONS: dict[str, tuple[int, ...]] = {
    "order": (0,), "isid": (0,), "inverse": (0, 1), "dominant": (0,), "jacobian": (0,),
    "eval": (0,), "scale": (0, 1), "pullback": (0, 1), "residue": (0,), "divisor": (0,),
    "logstd": (), "logform": (), "coreg": (0,), "dualdim": (0,), "euler": (0,), "faces": (0,),
    "pair": (0,), "gramtransform": (0,), "vec": (0,), "ptable": (0,), "project": (0,),
    "ledger": (), "cremona": (), "monomial": (), "tau": (), "identity": (), "power": (0,),
    "snc": (), "toric": (), "empty": (), "coordinate": (), "stabilize": (0,), "product": (0, 1),
    "builtin": (),
}


class Interpreter:
    def __init__(self, program: Program, *, source_name: str = "<dsl>"):
        self.program = program
        self.source_name = source_name
        self.env: dict[str, object] = {}
        self.kinds: dict[str, str] = {}

    # phase 1: bindings

    def bind_all(self) -> None:
        for st in self.program.statements:
            if isinstance(st, CheckDef):
                self._resolve_check(st)
                continue
            name = st.name
            if name in self.env:
                raise DslValidationError(f"{name} is already bound (single assignment)", st.span)
            if variable_index(name) is not None:
                raise DslValidationError(f"{name} is a variable name and cannot be bound", st.span)
            try:
                if isinstance(st, OracleDef):
                    value, kind = self._oracle(st), "oracle"
                else:
                    value, kind = self._binding(st), st.kind
            except DslValidationError:
                raise
            except (BirvolError, ValueError, ZeroDivisionError, TypeError, KeyError) as exc:
                span = getattr(exc, "span", None) or st.span
                raise DslValidationError(f"in binding {name}: {_msg(exc)}", span) from None
            self.env[name] = value
            self.kinds[name] = kind

    def _binding(self, st: Binding):
        e = st.value
        if st.kind == "poly":
            self._resolve(e)
            n = max(1, self.max_var(e))
            self.alg(e, n)  # validate
            return PolyDef(e)
        if st.kind == "map":
            return self._map_binding(st)
        if st.kind == "class":
            self._resolve_class(e)
            dim = st.dims[0] if st.dims else None
            cd = ClassDef(e, dim)
            self.burn(e, dim, None)  # validate under the empty oracle
            return cd
        self._resolve(e)
        v = self.value(e, None)
        want = {"form": LogVolumeForm, "pair": SncBoundary, "lattice": HLFixture}[st.kind]
        if not isinstance(v, want):
            raise EvalError(f"{st.kind} binding {st.name} evaluates to {_kind(v)}", st.span)
        return v

    def _map_binding(self, st: Binding) -> RationalMap:
        e = st.value
        if isinstance(e, ListLit):
            for it in e.items:
                self._resolve(it)
            n = st.dims[0] if st.dims else max(1, max((self.max_var(i) for i in e.items), default=1))
            m = RationalMap([self.alg(i, n) for i in e.items], n, st.name)
        else:
            self._resolve(e)
            m = self.value(e, None)
            if not isinstance(m, RationalMap):
                raise EvalError(f"map binding {st.name} evaluates to {_kind(m)}", st.span)
            m = m.named(st.name)
        if st.dims and (m.src_dim, m.dst_dim) != tuple(st.dims):
            raise EvalError(
                f"map {st.name} is declared {st.dims[0]} -> {st.dims[1]} "
                f"but is {m.src_dim} -> {m.dst_dim}", st.span)
        return m

    def _oracle(self, st: OracleDef) -> bn.EquivalenceOracle:
        o = bn.EquivalenceOracle()
        for t in st.terms:
            if isinstance(t, OracleBlock):
                for it in t.items:
                    o = _add_axiom(o, it, st.name)
            elif isinstance(t, Name):
                other = self.env.get(t.id)
                if self.kinds.get(t.id) != "oracle":
                    raise EvalError(f"{t.id} is not an oracle", t.span)
                o = bn.EquivalenceOracle(o.axioms + other.axioms)
            else:
                if t.func != "builtin" or len(t.args) != 1 or not isinstance(t.args[0], Str):
                    raise EvalError('oracle terms are {...}, a bound oracle or builtin("id")', t.span)
                key = t.args[0].value
                if key not in BUILTIN_ORACLES:
                    raise EvalError(f"unknown builtin oracle {key!r}", t.span)
                o = bn.EquivalenceOracle(o.axioms + BUILTIN_ORACLES[key]().axioms)
        return o

    # static name resolution

    def _resolve(self, e: Expr) -> None:
        """Names in value positions must be bound or be variables."""
        if isinstance(e, Name):
            if e.id not in self.env and variable_index(e.id) is None:
                raise DslValidationError(f"undefined name {e.id}", e.span)
        elif isinstance(e, Neg):
            self._resolve(e.operand)
        elif isinstance(e, Bin):
            self._resolve(e.left)
            self._resolve(e.right)
        elif isinstance(e, Call):
            if e.func not in _FUNCTIONS:
                raise DslValidationError(f"unknown function {e.func}", e.span)
            for i in _FUNCTIONS[e.func]:
                if i < len(e.args) and isinstance(e.args[i], Name):
                    self._resolve(e.args[i])

    def _resolve_class(self, e: Expr) -> None:
        if isinstance(e, Name) and e.id in self.env and self.kinds[e.id] != "class":
            raise DslValidationError(f"{e.id} is a {self.kinds[e.id]}, not a class", e.span)
        if isinstance(e, Bin):
            self._resolve_class(e.left)
            self._resolve_class(e.right)
        elif isinstance(e, Neg):
            self._resolve_class(e.operand)
        elif isinstance(e, Call):
            self._resolve(e)

    def _resolve_check(self, st: CheckDef) -> None:
        if st.under is not None and self.kinds.get(st.under) != "oracle":
            raise DslValidationError(f"undefined oracle {st.under}", st.span)
        for side in (st.lhs, st.rhs):
            if isinstance(side, (Name, Call)):
                self._resolve(side)

    # polynomial literals

    def max_var(self, e: Expr, _seen: frozenset = frozenset()) -> int:
        if isinstance(e, Name):
            i = variable_index(e.id)
            if i is not None and e.id not in self.env:
                return i + 1
            b = self.env.get(e.id)
            if isinstance(b, PolyDef) and e.id not in _seen:
                return self.max_var(b.expr, _seen | {e.id})
            return 0
        if isinstance(e, Neg):
            return self.max_var(e.operand, _seen)
        if isinstance(e, Bin):
            return max(self.max_var(e.left, _seen), self.max_var(e.right, _seen))
        return 0

    def alg(self, e: Expr, n: int) -> RationalFunction:
        if isinstance(e, Num):
            return RationalFunction.constant(n, e.value)
        if isinstance(e, Name):
            b = self.env.get(e.id)
            if isinstance(b, PolyDef):
                return self.alg(b.expr, n)
            if b is not None:
                raise EvalError(f"{e.id} is a {self.kinds[e.id]}, not a polynomial", e.span)
            i = variable_index(e.id)
            if i is None:
                raise EvalError(f"undefined name {e.id}", e.span)
            if i >= n:
                raise EvalError(f"{e.id} used in a chart with {n} variables", e.span)
            return RationalFunction.variable(n, i)
        if isinstance(e, Neg):
            return -self.alg(e.operand, n)
        if isinstance(e, Bin):
            if e.op == "^":
                k = self.integer(e.right)
                return self.alg(e.left, n) ** k
            a, b = self.alg(e.left, n), self.alg(e.right, n)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            if e.op == "/":
                return a / b
        raise EvalError(f"not a polynomial expression: {print_expr(e)}", getattr(e, "span", None))

    def integer(self, e: Expr) -> int:
        v = self.value(e, None)
        if isinstance(v, bool) or not isinstance(v, int):
            raise EvalError(f"integer expected, got {print_expr(e)}", getattr(e, "span", None))
        return v

    def to_rf(self, v, n: int) -> RationalFunction:
        if isinstance(v, Alg):
            return self.alg(v.expr, n)
        if isinstance(v, RationalFunction):
            if v.nvars != n:
                raise EvalError(f"function in {v.nvars} variables where {n} are expected")
            return v
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            return RationalFunction.constant(n, v)
        raise EvalError(f"polynomial expected, got {_kind(v)}")

    # generic values

    def value(self, e: Expr, oracle: bn.EquivalenceOracle | None):
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Const):
            return e.value
        if isinstance(e, Name):
            if e.id in self.env:
                b = self.env[e.id]
                if isinstance(b, PolyDef):
                    return Alg(e)
                if isinstance(b, ClassDef):
                    return self.burn(e, b.dim, oracle)
                return b
            if variable_index(e.id) is not None:
                return Alg(e)
            raise EvalError(f"undefined name {e.id}", e.span)
        if isinstance(e, Neg):
            v = self.value(e.operand, oracle)
            if isinstance(v, Alg):
                return Alg(e)
            return -v
        if isinstance(e, Bin):
            return self._binary(e, oracle)
        if isinstance(e, Call):
            return self.call(e, oracle)
        if isinstance(e, ListLit):
            return [self.value(i, oracle) for i in e.items]
        if isinstance(e, SetLit):
            return frozenset(self.value(i, oracle) for i in e.items)
        if isinstance(e, Entry):
            return (self.value(e.key, oracle), self.value(e.value, oracle))
        raise EvalError(f"cannot evaluate {e!r}")

    def _binary(self, e: Bin, oracle):
        a, b = self.value(e.left, oracle), self.value(e.right, oracle)
        if e.op == "then":
            if not (isinstance(a, RationalMap) and isinstance(b, RationalMap)):
                raise EvalError("'then' joins two maps", e.span)
            return compose(a, b)
        if isinstance(a, Alg) or isinstance(b, Alg):
            return Alg(e)
        if isinstance(a, bn.BurnsideElement) or isinstance(b, bn.BurnsideElement):
            return self.burn(e, _dim_of(a, b), oracle)
        if isinstance(a, LatticeClass) and isinstance(b, LatticeClass) and e.op in "+-":
            return a + b if e.op == "+" else a - b
        if isinstance(b, LatticeClass) and isinstance(a, int) and e.op == "*":
            return a * b
        if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
            n = a.nvars if isinstance(a, RationalFunction) else b.nvars
            a, b = self.to_rf(a, n), self.to_rf(b, n)
        elif isinstance(a, bool) or isinstance(b, bool) or not (
                isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction))):
            raise EvalError(f"operator {e.op} does not apply to {_kind(a)} and {_kind(b)}", e.span)
        if e.op == "+":
            r = a + b
        elif e.op == "-":
            r = a - b
        elif e.op == "*":
            r = a * b
        elif e.op == "/":
            if isinstance(b, (int, Fraction)) and b == 0:
                raise EvalError("division by zero", e.span)
            r = Fraction(a) / b if isinstance(a, int) and isinstance(b, int) else a / b
        else:
            if not isinstance(b, int):
                raise EvalError("exponent must be an integer", e.span)
            r = Fraction(a) ** b if isinstance(a, int) and b < 0 else a ** b
        if isinstance(r, Fraction) and r.denominator == 1:
            r = int(r)
        return r

    # Burnside expressions

    def burn(self, e: Expr, dim: int | None, oracle) -> bn.BurnsideElement:
        o = oracle or bn.DEFAULT_ORACLE
        return bn.normalize(self._burn(e, dim, oracle), o)

    def _burn(self, e: Expr, dim: int | None, oracle) -> bn.BurnsideElement:
        if isinstance(e, Num) and e.value == 0:
            return bn.BurnsideElement.zero()
        if isinstance(e, Name):
            b = self.env.get(e.id)
            if not isinstance(b, ClassDef):
                raise EvalError(f"{e.id} is not a class", e.span)
            return self._burn(b.expr, b.dim, oracle)
        if isinstance(e, ListLit):
            return bn.BurnsideElement.of(self.label(e, dim))
        if isinstance(e, Neg):
            return -self._burn(e.operand, dim, oracle)
        if isinstance(e, Bin) and e.op in "+-":
            a, b = self._burn(e.left, dim, oracle), self._burn(e.right, dim, oracle)
            return a + b if e.op == "+" else a - b
        if isinstance(e, Bin) and e.op == "*":
            if isinstance(e.left, Num):
                return self._burn(e.right, dim, oracle) * e.left.value
            if isinstance(e.right, Num):
                return self._burn(e.left, dim, oracle) * e.right.value
        if isinstance(e, Call) and e.func in ("ledger", "project"):
            return self.call(e, oracle)
        raise EvalError(f"not a class expression: {print_expr(e)}", getattr(e, "span", None))

    def label(self, e: Expr, dim: int | None) -> bn.ClassLabel:
        if isinstance(e, ListLit):
            if not 1 <= len(e.items) <= 2:
                raise EvalError("class labels are [X] or [X, form]", e.span)
            form = None
            if len(e.items) == 2:
                f = e.items[1]
                if isinstance(f, Num) and f.value == 0:
                    form = bn.ZERO
                elif isinstance(f, Name):
                    form = f.id
                else:
                    raise EvalError("a form tag is 0 or a name", e.span)
            return self.label(e.items[0], dim).with_form(form)
        if dim is None:
            raise EvalError("class literal needs a dimension (class name : dim = ...)",
                            getattr(e, "span", None))
        return bn.ClassLabel(_factors(e), dim)

    # functions

    def call(self, e: Call, oracle):
        f = e.func
        args, kw = e.args, dict(e.kwargs)
        v = lambda i: self.value(args[i], oracle)  # noqa: E731
        if f in ("logstd", "cremona", "identity", "toric", "empty", "coordinate"):
            _arity(e, 1)
            n = self.integer(args[0])
            return {"logstd": standard_form, "cremona": cremona, "identity": identity,
                    "toric": standard_toric, "empty": empty_boundary,
                    "coordinate": coordinate_boundary}[f](n)
        if f == "tau":
            _arity(e, 0)
            return cluster_tau()
        if f == "monomial":
            _arity(e, 1)
            rows = v(0)
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise EvalError("monomial expects an integer matrix [[..], ..]", e.span)
            return monomial_map(rows)
        if f == "power":
            _arity(e, 2)
            return power(self.typed(args[0], RationalMap, oracle), self.integer(args[1]))
        if f == "order":
            m = self.typed(args[0], RationalMap, oracle)
            return order(m, self.integer(args[1])) if len(args) > 1 else order(m)
        if f == "isid":
            _arity(e, 1)
            return is_identity(self.typed(args[0], RationalMap, oracle))
        if f == "inverse":
            _arity(e, 2)
            return is_inverse_pair(self.typed(args[0], RationalMap, oracle),
                                   self.typed(args[1], RationalMap, oracle))
        if f == "dominant":
            _arity(e, 1)
            return is_dominant(self.typed(args[0], RationalMap, oracle))
        if f == "jacobian":
            _arity(e, 1)
            return jacobian_det(self.typed(args[0], RationalMap, oracle))
        if f == "eval":
            _arity(e, 2)
            pt = v(1)
            if not isinstance(pt, list):
                raise EvalError("eval expects a point [a, b, ..]", e.span)
            return list(eval_map(self.typed(args[0], RationalMap, oracle), pt))
        if f == "scale":
            _arity(e, 2)
            return scaling_factor(self.typed(args[0], RationalMap, oracle),
                                  self.typed(args[1], LogVolumeForm, oracle))
        if f == "pullback":
            _arity(e, 2)
            return pullback(self.typed(args[0], RationalMap, oracle),
                            self.typed(args[1], LogVolumeForm, oracle))
        if f == "logform":
            _arity(e, 2)
            n = self.integer(args[1])
            return LogVolumeForm(self.to_rf(v(0), n), n)
        if f == "residue":
            _arity(e, 3)
            w = self.typed(args[0], LogVolumeForm, oracle)
            var = args[2]
            idx = variable_index(var.id) if isinstance(var, Name) else None
            if idx is None:
                raise EvalError("the residue variable must be one of x1..x8", getattr(var, "span", None))
            return residue(w, _as_poly(self.to_rf(v(1), w.nvars)), idx)
        if f == "divisor":
            _arity(e, 1)
            return DivisorOf(self.typed(args[0], LogVolumeForm, oracle))
        if f in ("coreg", "dualdim", "euler", "faces"):
            _arity(e, 1)
            b = self.typed(args[0], SncBoundary, oracle)
            if f == "coreg":
                return coregularity(b)
            d = dual_complex(b)
            return {"dualdim": d.dimension, "euler": d.euler_characteristic(),
                    "faces": list(d.face_vector())}[f]
        if f == "stabilize":
            _arity(e, 2)
            return stabilize(self.typed(args[0], SncBoundary, oracle), self.integer(args[1]))
        if f == "product":
            _arity(e, 2)
            return product_pair(self.typed(args[0], SncBoundary, oracle),
                                self.typed(args[1], SncBoundary, oracle))
        if f == "snc":
            return self._snc(e)
        if f == "builtin":
            _arity(e, 1)
            key = v(0)
            if key not in BUILTIN_LATTICES:
                raise EvalError(f"unknown builtin lattice {key!r}", e.span)
            return BUILTIN_LATTICES[key]()
        if f == "pair":
            _arity(e, 3)
            hl = self.typed(args[0], HLFixture, oracle)
            return lattice_pair(hl.lattice, self.lat(args[1], hl), self.lat(args[2], hl))
        if f == "vec":
            _arity(e, 2)
            return self.lat(args[1], self.typed(args[0], HLFixture, oracle))
        if f == "gramtransform":
            _arity(e, 1)
            hl = self.typed(args[0], HLFixture, oracle)
            return verify_gram_transform(hl.lattice, hl.change)
        if f == "ptable":
            _arity(e, 2)
            hl = self.typed(args[0], HLFixture, oracle)
            key = v(1)
            if not isinstance(key, str):
                raise EvalError('ptable expects a monomial string such as "E^3 E\'1"', e.span)
            return hl.p_prime[key]
        if f == "ledger":
            _arity(e, 1)
            key = v(0)
            if key not in BUILTIN_LEDGERS:
                raise EvalError(f"unknown builtin ledger {key!r}", e.span)
            led = BUILTIN_LEDGERS[key]()
            return led.total(oracle or led.oracle)
        if f == "project":
            _arity(e, 2)
            c = self.burn(args[0], None, oracle) if not isinstance(args[0], Call) else v(0)
            gens = args[1]
            if not isinstance(gens, (SetLit, ListLit)):
                raise EvalError("project expects a set of generators {A*P1, ..}", e.span)
            if c.dim is None:
                return bn.BurnsideElement.zero()
            labels = [self.label(g, c.dim) for g in gens.items]
            return bn.project(c, labels, oracle or bn.DEFAULT_ORACLE)
        raise EvalError(f"unknown function {f}", e.span)

    def typed(self, e: Expr, cls, oracle):
        x = self.value(e, oracle)
        if not isinstance(x, cls):
            want = {RationalMap: "a map", LogVolumeForm: "a form", SncBoundary: "a pair",
                    HLFixture: "a lattice"}[cls]
            raise EvalError(f"{print_expr(e)} is {_kind(x)}, expected {want}", getattr(e, "span", None))
        return x

    def lat(self, e: Expr, hl: HLFixture) -> LatticeClass:
        if isinstance(e, Name):
            return hl.lattice[e.id]
        if isinstance(e, Neg):
            return -self.lat(e.operand, hl)
        if isinstance(e, Bin) and e.op in "+-":
            a, b = self.lat(e.left, hl), self.lat(e.right, hl)
            return a + b if e.op == "+" else a - b
        if isinstance(e, Bin) and e.op == "*" and isinstance(e.left, Num):
            return e.left.value * self.lat(e.right, hl)
        raise EvalError(f"not a lattice expression: {print_expr(e)}", getattr(e, "span", None))

    def _snc(self, e: Call) -> SncBoundary:
        if e.args:
            raise EvalError("snc takes keyword arguments dim=, components=, strata=", e.span)
        kw = dict(e.kwargs)
        unknown = set(kw) - {"dim", "components", "strata"}
        if unknown or "dim" not in kw or "components" not in kw:
            raise EvalError("snc needs dim= and components= (and optionally strata=)", e.span)
        dim = self.integer(kw["dim"])
        comps_e = kw["components"]
        if not isinstance(comps_e, ListLit):
            raise EvalError("components= expects a list [S:1, H:1/2, ..]", e.span)
        comps = []
        for it in comps_e.items:
            key, coef = (it.key, self.value(it.value, None)) if isinstance(it, Entry) else (it, 1)
            if not isinstance(key, Name):
                raise EvalError("component names are identifiers", getattr(key, "span", None))
            comps.append(BoundaryComponent(key.id, coef))
        strata = []
        st_e = kw.get("strata", ListLit(()))
        if not isinstance(st_e, ListLit):
            raise EvalError("strata= expects a list [{S}, {S,H}:2, ..]", e.span)
        for it in st_e.items:
            key, count = (it.key, self.integer(it.value)) if isinstance(it, Entry) else (it, 1)
            if not isinstance(key, SetLit) or not all(isinstance(m, Name) for m in key.items):
                raise EvalError("a stratum is a set of component names {S, H}", getattr(key, "span", None))
            strata.append((tuple(m.id for m in key.items), count))
        return SncBoundary(dim, comps, strata)

    # phase 2: checks

    def run_checks(self, seed: int = 42, scenario: str | None = None) -> list[CheckResult]:
        scenario = scenario or self.source_name
        out = []
        checks = [s for s in self.program.statements if isinstance(s, CheckDef)]
        for i, st in enumerate(checks):
            rng = random.Random(derived_seed(seed, scenario, i))
            text = f"{print_expr(st.lhs)} {st.op} {print_expr(st.rhs)}"
            if st.under:
                text += f" under {st.under}"
            cite = f"{self.source_name}:{st.span.line}" if st.span else self.source_name
            t0 = time.perf_counter()
            try:
                ok, diag = self.check(st, rng)
            except Exception as exc:  # a failing check never aborts the run
                ok, diag = False, _msg(exc)
                if not isinstance(exc, BirvolError):
                    tb = traceback.extract_tb(exc.__traceback__)[-1]
                    diag += f" (at {tb.name}:{tb.lineno})"
            millis = (time.perf_counter() - t0) * 1000.0
            out.append(CheckResult(scenario, text, ok, cite, millis, diag))
        return out

    def check(self, st: CheckDef, rng: random.Random) -> tuple[bool, str]:
        oracle = self.env[st.under] if st.under else None
        lhs = self.value(st.lhs, oracle)
        if isinstance(lhs, bn.BurnsideElement) and not _is_zero_literal(st.rhs):
            rhs = self.burn(st.rhs, lhs.dim, oracle)
        else:
            rhs = self.value(st.rhs, oracle)
        same, shown = self.compare(lhs, rhs, oracle, rng)
        ok = same if st.op == "==" else not same
        if ok:
            return True, ""
        rel = "differ" if st.op == "==" else "are equal"
        return False, f"{shown[0]} and {shown[1]} {rel}"

    def compare(self, a, b, oracle, rng) -> tuple[bool, tuple[str, str]]:
        a, b = _swap(a, b)
        if isinstance(a, DivisorOf):
            if not isinstance(b, list):
                raise EvalError("divisor(...) compares with a list [x1:1, ..]")
            n = a.form.nvars
            boundary = []
            for item in b:
                key, coef = item if isinstance(item, tuple) else (item, 1)
                boundary.append((_as_poly(self.to_rf(key, n)), coef))
            rep = divisor_report(a.form, boundary)
            return rep.ok, (f"divisor({a.form})", rep.diagnostic or "declared boundary")
        if isinstance(a, bn.BurnsideElement):
            if isinstance(b, int) and not isinstance(b, bool) and b == 0:
                return a.is_zero(), (str(a), "0")
            if isinstance(b, bn.BurnsideElement):
                o = oracle or bn.DEFAULT_ORACLE
                return bn.equal(a, b, o), (str(bn.normalize(a, o)), str(bn.normalize(b, o)))
        if isinstance(a, LogVolumeForm) and isinstance(b, LogVolumeForm):
            return form_equal(a, b), (str(a), str(b))
        if isinstance(a, RationalMap) and isinstance(b, RationalMap):
            return a == b, (str(a), str(b))
        if isinstance(a, (RationalFunction, Alg)) or isinstance(b, (RationalFunction, Alg)):
            n = _ring(a, b, self)
            ra, rb = self.to_rf(a, n), self.to_rf(b, n)
            return rf_equal(ra, rb, rng=rng), (str(ra), str(rb))
        if isinstance(a, LatticeClass) and isinstance(b, LatticeClass):
            return a == b, (str(list(a.coords)), str(list(b.coords)))
        if isinstance(a, list) and isinstance(b, list):
            return a == b, (_show(a), _show(b))
        if isinstance(a, bool) or isinstance(b, bool) or a is None or b is None:
            return a is b, (_show(a), _show(b))
        if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
            return a == b, (_show(a), _show(b))
        raise EvalError(f"cannot compare {_kind(a)} with {_kind(b)}")


def _add_axiom(o: bn.EquivalenceOracle, it, where: str) -> bn.EquivalenceOracle:
    prov = f"declared in oracle {where}"
    if isinstance(it, Group):
        for m in it.members[1:]:
            o = o.declare_equivalent(it.members[0], m, it.name)
        return o
    assert isinstance(it, Axiom)
    if it.kind == "~":
        if len(it.left) != 1 or len(it.right) != 1:
            raise EvalError("equivalences are declared between single names", it.span)
        return o.declare_equivalent(it.left[0], it.right[0], prov)
    return o.extended(bn.Axiom("~/", it.left, it.right, prov))


def _factors(e: Expr) -> tuple[str, ...]:
    if isinstance(e, Name):
        return (e.id,)
    if isinstance(e, Bin) and e.op == "*":
        return _factors(e.left) + _factors(e.right)
    raise EvalError(f"class names are products of identifiers, got {print_expr(e)}",
                    getattr(e, "span", None))


def _is_zero_literal(e: Expr) -> bool:
    return isinstance(e, Num) and e.value == 0


def _swap(a, b):
    if isinstance(b, DivisorOf) or (isinstance(b, bn.BurnsideElement) and not isinstance(a, bn.BurnsideElement)):
        return b, a
    return a, b


def _ring(a, b, it: Interpreter) -> int:
    for x in (a, b):
        if isinstance(x, RationalFunction):
            return x.nvars
    return max(1, max(it.max_var(x.expr) for x in (a, b) if isinstance(x, Alg)))


def _dim_of(a, b) -> int | None:
    for x in (a, b):
        if isinstance(x, bn.BurnsideElement) and x.dim is not None:
            return x.dim
    return None


def _as_poly(rf: RationalFunction):
    if not rf.is_polynomial():
        raise EvalError(f"polynomial expected, got {rf}")
    c = rf.den.constant_value()
    return rf.num if c == 1 else rf.num.scale(Fraction(1) / c)


def _arity(e: Call, n: int) -> None:
    if len(e.args) != n or e.kwargs:
        raise EvalError(f"{e.func} takes {n} argument{'s' if n != 1 else ''}", e.span)


def _show(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


def _kind(v) -> str:
    names: dict[type, str] = {RationalMap: "a map", LogVolumeForm: "a form", SncBoundary: "a pair",
                              HLFixture: "a lattice", bn.BurnsideElement: "a class",
                              bn.EquivalenceOracle: "an oracle", LatticeClass: "a lattice class",
                              RationalFunction: "a rational function", Alg: "a polynomial",
                              DivisorOf: "a divisor", list: "a list", str: "a string"}
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "a boolean"
    if isinstance(v, (int, Fraction)):
        return "a number"
    return names.get(type(v), type(v).__name__)


def _msg(exc: Exception) -> str:
    s = str(exc)
    return f"{type(exc).__name__}: {s}" if s else type(exc).__name__

