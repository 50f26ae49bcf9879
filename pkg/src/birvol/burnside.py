"""Formal sums of birational classes modulo a declared equivalence oracle.

A class label is a product of named varieties (``C*P1``), a dimension, and
a form tag: ``None`` for a bare class, ``ZERO`` for a class carrying the
zero form, or a symbol for a nonzero form.  Which names stand for
(stably) birational varieties is never decided here; it is supplied by an
:class:`EquivalenceOracle`, one axiom at a time, each with a provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import LedgerError, OracleError

ZERO = "0"


@dataclass(frozen=True)
class ClassLabel:
    factors: tuple[str, ...]
    dim: int
    form: str | None = None

    def __post_init__(self):
        if not self.factors or any(not f for f in self.factors):
            raise ValueError("class labels need at least one named factor")
        if self.dim < 0:
            raise ValueError("class dimension must be non-negative")

    @classmethod
    def parse(cls, name: str, dim: int, form: str | None = None) -> ClassLabel:
        return cls(tuple(p.strip() for p in name.split("*")), dim, form)

    @property
    def name(self) -> str:
        return "*".join(self.factors)

    def sort_key(self) -> tuple:
        return (self.dim, self.factors, self.form is not None, self.form or "")

    def with_form(self, form: str | None) -> ClassLabel:
        return ClassLabel(self.factors, self.dim, form)

    def __str__(self) -> str:
        if self.form is None:
            return f"[{self.name}]"
        return f"[{self.name}, {self.form}]"


@dataclass(frozen=True)
class Axiom:
    kind: str  # "~" or "~/"
    left: tuple[str, ...]
    right: tuple[str, ...]
    provenance: str = ""


class EquivalenceOracle:
    """Partition of variety names, generated by declared equivalences.

    Factors of a product label are canonicalised one by one, so declaring
    ``C ~ Cjac`` also identifies ``C*P1`` with ``Cjac*P1``.  Declared
    inequivalences are checked for consistency and raise ``OracleError``
    when the equivalences contradict them.
    """

    __slots__ = ("axioms", "_parent")

    def __init__(self, axioms: Iterable[Axiom] = ()):
        self.axioms: tuple[Axiom, ...] = tuple(axioms)
        parent: dict[str, str] = {}

        def find(a: str) -> str:
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for ax in self.axioms:
            if ax.kind == "~":
                if len(ax.left) != 1 or len(ax.right) != 1:
                    raise OracleError("equivalences are declared between single names")
                ra, rb = find(ax.left[0]), find(ax.right[0])
                if ra != rb:
                    lo, hi = sorted((ra, rb))
                    parent[hi] = lo
            elif ax.kind != "~/":
                raise OracleError(f"unknown axiom kind {ax.kind!r}")
        self._parent = {k: find(k) for k in list(parent)}
        for ax in self.axioms:
            if ax.kind == "~/" and self.canonical_factors(ax.left) == self.canonical_factors(ax.right):
                raise OracleError(
                    f"axioms contradict: {'*'.join(ax.left)} ~/ {'*'.join(ax.right)} "
                    "is declared but the equivalences identify them"
                )

    @classmethod
    def build(cls, equivalent: Iterable[tuple[str, str]] = (),
              inequivalent: Iterable[tuple[str, str]] = (),
              groups: Mapping[str, Iterable[str]] | None = None,
              provenance: str = "") -> EquivalenceOracle:
        axioms = [Axiom("~", (a,), (b,), provenance) for a, b in equivalent]
        for gname, members in (groups or {}).items():
            members = list(members)
            axioms += [Axiom("~", (members[0],), (m,), gname) for m in members[1:]]
        axioms += [Axiom("~/", _split(a), _split(b), provenance) for a, b in inequivalent]
        return cls(axioms)

    def extended(self, *axioms: Axiom) -> EquivalenceOracle:
        return EquivalenceOracle(self.axioms + tuple(axioms))

    def declare_equivalent(self, a: str, b: str, provenance: str = "") -> EquivalenceOracle:
        """A copy with a ~ b added and any axiom a ~/ b (or b ~/ a) dropped."""
        keep = tuple(ax for ax in self.axioms
                     if not (ax.kind == "~/" and {ax.left, ax.right} == {_split(a), _split(b)}))
        return EquivalenceOracle(keep + (Axiom("~", (a,), (b,), provenance),))

    def canonical_name(self, name: str) -> str:
        return self._parent.get(name, name)

    def canonical_factors(self, factors: Sequence[str]) -> tuple[str, ...]:
        return tuple(sorted(self.canonical_name(f) for f in factors))

    def canonical(self, label: ClassLabel) -> ClassLabel:
        return ClassLabel(self.canonical_factors(label.factors), label.dim, label.form)

    def equivalent(self, a: ClassLabel, b: ClassLabel, *, ignore_form: bool = False) -> bool:
        if ignore_form:
            a, b = a.with_form(None), b.with_form(None)
        return self.canonical(a) == self.canonical(b)

    def classes(self) -> list[list[str]]:
        out: dict[str, list[str]] = {}
        for k, v in self._parent.items():
            out.setdefault(v, []).append(k)
        return sorted(sorted(v) for v in out.values())


def _split(name: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in name.split("*"))


DEFAULT_ORACLE = EquivalenceOracle()


class BurnsideElement:
    """Finite Z-combination of class labels of one dimension.

    Terms are stored raw; :func:`normalize` merges them along an oracle.
    ``==`` compares normalised terms under the default (singleton) oracle.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ClassLabel, int] | Iterable[tuple[ClassLabel, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ClassLabel, int] = {}
        for lab, k in items:
            acc[lab] = acc.get(lab, 0) + int(k)
        acc = {lab: k for lab, k in acc.items() if k}
        dims = {lab.dim for lab in acc}
        if len(dims) > 1:
            raise LedgerError(f"mixed dimensions {sorted(dims)} in one Burnside element")
        self.terms = dict(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def of(cls, label: ClassLabel, k: int = 1) -> BurnsideElement:
        return cls({label: k})

    @classmethod
    def zero(cls) -> BurnsideElement:
        return cls()

    @property
    def dim(self) -> int | None:
        return next(iter(self.terms)).dim if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_dim(self, other: BurnsideElement) -> None:
        if self.dim is not None and other.dim is not None and self.dim != other.dim:
            raise LedgerError(f"cannot add classes of dimension {self.dim} and {other.dim}")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check_dim(other)
        return BurnsideElement(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement({lab: -k for lab, k in self.terms.items()})

    def __mul__(self, k: int) -> BurnsideElement:
        return BurnsideElement({lab: k * v for lab, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (lab, k) in enumerate(self.terms.items()):
            a = abs(k)
            body = str(lab) if a == 1 else f"{a}{lab}"
            if i == 0:
                out.append(f"-{body}" if k < 0 else body)
            else:
                out.append(f" - {body}" if k < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"BurnsideElement({self})"


def normalize(e: BurnsideElement, o: EquivalenceOracle = DEFAULT_ORACLE) -> BurnsideElement:
    """Merge labels along ``o`` and drop zero multiplicities."""
    return BurnsideElement([(o.canonical(lab), k) for lab, k in e.terms.items()])


def equal(a: BurnsideElement, b: BurnsideElement, o: EquivalenceOracle = DEFAULT_ORACLE) -> bool:
    return normalize(a - b, o).is_zero()


@dataclass(frozen=True)
class ResolutionData:
    """Exceptional divisors on the two sides of a resolution of a map.

    ``pairs`` lists (up, down) labels with nonzero forms that cancel each
    other; every nonzero-form label must occur in exactly one such pair.
    """

    name: str
    up: tuple[ClassLabel, ...] = ()
    down: tuple[ClassLabel, ...] = ()
    pairs: tuple[tuple[ClassLabel, ClassLabel], ...] = ()
    provenance: str = ""

    def __post_init__(self):
        dims = {lab.dim for lab in self.up + self.down}
        if len(dims) > 1:
            raise LedgerError(f"resolution data {self.name} mixes dimensions {sorted(dims)}")

    def inverse(self, name: str | None = None) -> ResolutionData:
        return ResolutionData(name or f"{self.name}^-1", self.down, self.up,
                              tuple((b, a) for a, b in self.pairs), self.provenance)


def _is_nonzero_form(lab: ClassLabel) -> bool:
    return lab.form is not None and lab.form != ZERO


def c_invariant(r: ResolutionData, o: EquivalenceOracle = DEFAULT_ORACLE) -> BurnsideElement:
    """Sum of up-exceptional classes minus down-exceptional classes.

    Nonzero-form classes are removed through the declared cancelling pairs;
    a missing or non-equivalent partner is a ``LedgerError``.
    """
    up = list(r.up)
    down = list(r.down)
    for a, b in r.pairs:
        if not (_is_nonzero_form(a) and _is_nonzero_form(b)):
            raise LedgerError(f"{r.name}: cancelling pairs must carry nonzero forms ({a}, {b})")
        if not o.equivalent(a, b, ignore_form=True):
            raise LedgerError(f"{r.name}: {a} and {b} are paired but not equivalent under the oracle")
        try:
            up.remove(a)
            down.remove(b)
        except ValueError:
            raise LedgerError(f"{r.name}: paired classes {a}, {b} are not exceptional on both sides") from None
    stray = [lab for lab in up + down if _is_nonzero_form(lab)]
    if stray:
        raise LedgerError(
            f"{r.name}: nonzero-form classes without a cancelling partner: "
            + ", ".join(str(s) for s in stray)
        )
    e = BurnsideElement([(lab, 1) for lab in up] + [(lab, -1) for lab in down])
    return normalize(e, o)


def check_zero_form_discipline(e: BurnsideElement) -> None:
    stray = [lab for lab in e.terms if _is_nonzero_form(lab)]
    if stray:
        raise LedgerError(
            "ledger contains unpaired nonzero-form classes: " + ", ".join(str(s) for s in stray)
        )


def compose_ledger(parts: Iterable[tuple[int, BurnsideElement]],
                   o: EquivalenceOracle = DEFAULT_ORACLE, *, strict: bool = True) -> BurnsideElement:
    """Signed sum of invariants of the factors of a composite map."""
    total = BurnsideElement()
    for sign, e in parts:
        if sign not in (1, -1):
            raise LedgerError(f"ledger signs must be +1 or -1, got {sign}")
        total = total + (e if sign > 0 else -e)
    total = normalize(total, o)
    if strict:
        check_zero_form_discipline(total)
    return total


def project(e: BurnsideElement, generators: Iterable[ClassLabel],
            o: EquivalenceOracle = DEFAULT_ORACLE) -> BurnsideElement:
    """Keep the terms lying in the oracle classes of ``generators``.

    A generator without a form tag matches every tag.
    """
    gens = [o.canonical(g) for g in generators]
    exact = {g for g in gens if g.form is not None}
    loose = {g.with_form(None) for g in gens if g.form is None}
    n = normalize(e, o)
    keep = [(lab, k) for lab, k in n.terms.items()
            if lab in exact or lab.with_form(None) in loose]
    return BurnsideElement(keep)


def forget(e: BurnsideElement) -> BurnsideElement:
    """Drop form tags: [X, w] -> [X]."""
    return BurnsideElement([(lab.with_form(None), k) for lab, k in e.terms.items()])


def embed(e: BurnsideElement) -> BurnsideElement:
    """Attach the zero form: [X] -> [X, 0]."""
    return BurnsideElement([(lab.with_form(ZERO), k) for lab, k in e.terms.items()])


def product_label(a: ClassLabel, b: ClassLabel) -> ClassLabel:
    """Labelled product class; forms are only tracked when one side is bare."""
    if a.form is not None and b.form is not None:
        form = ZERO if ZERO in (a.form, b.form) else f"{a.form}^{b.form}"
    else:
        form = a.form if b.form is None else b.form
    return ClassLabel(a.factors + b.factors, a.dim + b.dim, form)


@dataclass(frozen=True)
class LedgerPart:
    sign: int
    data: ResolutionData
    note: str = ""


@dataclass(frozen=True)
class Ledger:
    """A composite map's invariant assembled from its factors."""

    name: str
    parts: tuple[LedgerPart, ...]
    oracle: EquivalenceOracle = field(default=DEFAULT_ORACLE)

    def part_values(self, o: EquivalenceOracle | None = None) -> list[tuple[str, int, BurnsideElement]]:
        o = o or self.oracle
        return [(p.data.name, p.sign, c_invariant(p.data, o)) for p in self.parts]

    def total(self, o: EquivalenceOracle | None = None) -> BurnsideElement:
        o = o or self.oracle
        return compose_ledger([(p.sign, c_invariant(p.data, o)) for p in self.parts], o)
