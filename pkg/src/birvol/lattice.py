"""Integer lattices with a symmetric pairing, and printed intersection tables.

The built-in ``hl`` fixture is the algebraic middle cohomology of a
fourfold with the two bases related by an 8x8 integer matrix, together with
a table of intersection numbers on an auxiliary blowup that mixes products
of two, three and four divisor classes.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, StructuralError, UndefinedIntersectionError, UnknownLabelError


@dataclass(frozen=True)
class LatticeClass:
    coords: tuple[int, ...]

    def __add__(self, other: LatticeClass) -> LatticeClass:
        _same_rank(self, other)
        return LatticeClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeClass) -> LatticeClass:
        _same_rank(self, other)
        return LatticeClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeClass:
        return LatticeClass(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> LatticeClass:
        return LatticeClass(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def _same_rank(u: LatticeClass, v: LatticeClass) -> None:
    if len(u.coords) != len(v.coords):
        raise DimensionMismatchError(f"classes of rank {len(u.coords)} and {len(v.coords)}")


@dataclass(frozen=True)
class BasisChange:
    """Rows are new basis vectors written in the old basis."""

    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise StructuralError("basis change must be a square matrix")
        if self.labels and len(self.labels) != n:
            raise StructuralError("one label per new basis vector expected")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], labels: Iterable[str] = ()) -> BasisChange:
        return cls(tuple(tuple(int(a) for a in r) for r in rows), tuple(labels))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def row(self, i: int) -> LatticeClass:
        return LatticeClass(self.matrix[i])


class IntersectionLattice:
    """Free Z-module with basis ``basis_labels`` and symmetric Gram matrix."""

    __slots__ = ("rank", "basis_labels", "gram", "named")

    def __init__(self, basis_labels: Sequence[str], gram: Sequence[Sequence[int]],
                 named: Mapping[str, LatticeClass] | None = None):
        labels = tuple(basis_labels)
        g = tuple(tuple(int(a) for a in r) for r in gram)
        n = len(labels)
        if len(set(labels)) != n:
            raise StructuralError("basis labels must be distinct")
        if len(g) != n or any(len(r) != n for r in g):
            raise StructuralError(f"Gram matrix must be {n}x{n}")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise StructuralError("Gram matrix is not symmetric")
        self.rank = n
        self.basis_labels = labels
        self.gram = g
        classes = {lab: self.basis_vector(i) for i, lab in enumerate(labels)}
        for k, v in (named or {}).items():
            if len(v.coords) != n:
                raise DimensionMismatchError(f"named class {k} has the wrong rank")
            if k in classes and classes[k] != v:
                raise StructuralError(f"class name {k} redefined")
            classes[k] = v
        self.named = classes

    def basis_vector(self, i: int) -> LatticeClass:
        return LatticeClass(tuple(int(j == i) for j in range(self.rank)))

    def __getitem__(self, label: str) -> LatticeClass:
        try:
            return self.named[label]
        except KeyError:
            raise UnknownLabelError(f"unknown lattice class {label!r}") from None

    def with_basis_change(self, change: BasisChange) -> IntersectionLattice:
        """Register the rows of ``change`` as named classes."""
        if change.rank != self.rank:
            raise DimensionMismatchError("basis change rank does not match the lattice")
        extra = dict(self.named)
        for i, lab in enumerate(change.labels):
            extra[lab] = change.row(i)
        return IntersectionLattice(self.basis_labels, self.gram, extra)


def pair(L: IntersectionLattice, u: LatticeClass, v: LatticeClass) -> int:
    if len(u.coords) != L.rank or len(v.coords) != L.rank:
        raise DimensionMismatchError(f"classes must have rank {L.rank}")
    g = L.gram
    return sum(u.coords[i] * g[i][j] * v.coords[j]
               for i in range(L.rank) if u.coords[i]
               for j in range(L.rank) if v.coords[j])


def transformed_gram(L: IntersectionLattice, B: BasisChange) -> tuple[tuple[int, ...], ...]:
    rows = [B.row(i) for i in range(B.rank)]
    return tuple(tuple(pair(L, a, b) for b in rows) for a in rows)


def verify_gram_transform(L: IntersectionLattice, B: BasisChange) -> bool:
    """True iff B * gram * B^T equals gram."""
    if B.rank != L.rank:
        raise DimensionMismatchError("basis change rank does not match the lattice")
    return transformed_gram(L, B) == L.gram


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*([A-Za-z_][\w']*)\s*")


def express(L: IntersectionLattice, expr: str | Iterable[tuple[int, str]]) -> LatticeClass:
    """Coordinates of an integer combination of named classes.

    ``expr`` is either a list of (coefficient, label) pairs or a string such
    as ``"2 LX2 - GammaL + F1"``.
    """
    if isinstance(expr, str):
        expr = _parse_combination(expr)
    acc = [0] * L.rank
    for k, lab in expr:
        v = L[lab]
        for i, a in enumerate(v.coords):
            acc[i] += k * a
    return LatticeClass(tuple(acc))


def _parse_combination(text: str) -> list[tuple[int, str]]:
    out = []
    pos = 0
    text = text.strip()
    if not text:
        return out
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (out and not m.group(1)):
            raise ValueError(f"cannot parse class combination at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        out.append((sign * k, m.group(3)))
        pos = m.end()
    return out


class IntersectionTable:
    """Opaque table of intersection numbers keyed by monomials in divisor labels.

    Only printed entries are known; anything else is undefined rather than
    zero.  Monomials are normalised to sorted (label, exponent) tuples.
    """

    __slots__ = ("labels", "_values")

    def __init__(self, labels: Sequence[str], entries: Mapping[str, int]):
        self.labels = tuple(labels)
        self._values = {self.key(m): int(v) for m, v in entries.items()}

    def key(self, monomial: str | Mapping[str, int]) -> tuple[tuple[str, int], ...]:
        if isinstance(monomial, str):
            counts = Counter()
            for tok in monomial.replace("*", " ").split():
                name, _, e = tok.partition("^")
                counts[name] += int(e) if e else 1
        else:
            counts = Counter(dict(monomial))
        for name in counts:
            if name not in self.labels:
                raise UnknownLabelError(f"unknown divisor class {name!r}")
        return tuple(sorted((k, v) for k, v in counts.items() if v))

    def __getitem__(self, monomial) -> int:
        k = self.key(monomial)
        try:
            return self._values[k]
        except KeyError:
            pretty = " ".join(f"{a}^{e}" if e > 1 else a for a, e in k)
            raise UndefinedIntersectionError(f"intersection number {pretty} is not in the table") from None

    def __contains__(self, monomial) -> bool:
        return self.key(monomial) in self._values

    def __len__(self) -> int:
        return len(self._values)


HL_OLD_BASIS = ("LX2", "GammaL", "F1", "F2", "F3", "Q1", "Q2", "Q3")
HL_NEW_BASIS = ("MX2", "GammaM", "G1", "G2", "G3", "K1", "K2", "K3")
HL_GRAM = tuple(tuple(d if i == j else 0 for j in range(8)) for i, d in
                enumerate((1, -12, 1, 1, 1, 1, 1, 1)))
HL_BASIS_CHANGE = (
    (7, -3, 4, 4, 4, 2, 2, 2),
    (36, -17, 24, 24, 24, 12, 12, 12),
    (4, -2, 3, 3, 3, 2, 1, 1),
    (4, -2, 3, 3, 3, 1, 2, 1),
    (4, -2, 3, 3, 3, 1, 1, 2),
    (2, -1, 2, 1, 1, 1, 1, 1),
    (2, -1, 1, 2, 1, 1, 1, 1),
    (2, -1, 1, 1, 2, 1, 1, 1),
)


def _p_prime_table() -> IntersectionTable:
    entries: dict[str, int] = {"L'^3 E": 0}
    for i in (1, 2, 3):
        e = f"E'{i}"
        entries[f"L' {e}"] = 0
        entries[f"E^3 {e}"] = -4
        entries[f"E^2 {e}^2"] = 2
        entries[f"E {e}^3"] = 0
        entries[f"{e}^4"] = -1
    return IntersectionTable(("L'", "E", "E'1", "E'2", "E'3"), entries)


@dataclass(frozen=True)
class HLFixture:
    lattice: IntersectionLattice
    change: BasisChange
    p_prime: IntersectionTable

    def __iter__(self):
        return iter((self.lattice, self.change, self.p_prime))


def builtin_hl_lattice() -> HLFixture:
    base = IntersectionLattice(HL_OLD_BASIS, HL_GRAM)
    change = BasisChange.of(HL_BASIS_CHANGE, HL_NEW_BASIS)
    lat = base.with_basis_change(change)
    plane = express(lat, "LX2 - Q1 - Q2 - Q3")
    lat = IntersectionLattice(lat.basis_labels, lat.gram, {**lat.named, "PiL": plane})
    return HLFixture(lat, change, _p_prime_table())


BUILTIN_LATTICES = {"hl": builtin_hl_lattice}
