"""Combinatorics of declared snc boundaries: dual complexes and coregularity.

Strata are declared, never computed from equations, except for boundaries
made of coordinate hyperplanes where every intersection is a coordinate
subspace and hence irreducible and nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import StructuralError
from .exact import Polynomial


@dataclass(frozen=True)
class BoundaryComponent:
    label: str
    coefficient: int = 1
    polynomial: Polynomial | None = None

    def __post_init__(self):
        if not self.label:
            raise StructuralError("boundary components need a nonempty label")
        if self.coefficient > 1:
            raise StructuralError(
                f"component {self.label} has coefficient {self.coefficient} > 1"
            )


class SncBoundary:
    """A boundary with its stratification: index subset -> number of irreducible components.

    Singletons are filled in with count 1 when not declared, since each
    component is irreducible.
    """

    __slots__ = ("ambient_dim", "components", "strata")

    def __init__(self, ambient_dim: int, components: Sequence[BoundaryComponent | str],
                 strata: Mapping[Iterable, int] | Iterable = ()):
        if ambient_dim < 0:
            raise StructuralError("ambient dimension must be non-negative")
        comps = tuple(c if isinstance(c, BoundaryComponent) else BoundaryComponent(c)
                      for c in components)
        labels = [c.label for c in comps]
        if len(set(labels)) != len(labels):
            raise StructuralError(f"duplicate component labels in {labels}")
        index = {lab: i for i, lab in enumerate(labels)}
        items = strata.items() if isinstance(strata, Mapping) else strata
        table: dict[frozenset[int], int] = {}
        for entry in items:
            if isinstance(entry, tuple) and len(entry) == 2 and isinstance(entry[1], int) \
                    and not isinstance(entry[0], (int, str)):
                subset, count = entry
            else:
                subset, count = entry, 1
            key = frozenset(_resolve(s, index) for s in subset)
            if not key:
                raise StructuralError("strata must be nonempty subsets of components")
            if count < 1:
                raise StructuralError(f"stratum {_names(key, labels)} has count {count} < 1")
            if key in table and table[key] != count:
                raise StructuralError(f"stratum {_names(key, labels)} declared twice")
            table[key] = count
        for i in range(len(comps)):
            table.setdefault(frozenset([i]), 1)
        for key, count in table.items():
            if len(key) == 1 and count != 1:
                raise StructuralError(f"component {_names(key, labels)} must be irreducible")
            if len(key) > ambient_dim:
                raise StructuralError(
                    f"stratum {_names(key, labels)} meets {len(key)} components in dimension {ambient_dim}"
                )
            for r in range(1, len(key)):
                for sub in combinations(sorted(key), r):
                    if frozenset(sub) not in table:
                        raise StructuralError(
                            f"downward closure fails: {_names(key, labels)} is a stratum "
                            f"but {_names(frozenset(sub), labels)} is not"
                        )
        self.ambient_dim = ambient_dim
        self.components = comps
        self.strata = dict(sorted(table.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def chart_trace(self) -> list[tuple[Polynomial, int]]:
        """Components with a defining polynomial, as (polynomial, coefficient) pairs."""
        return [(c.polynomial, c.coefficient) for c in self.components if c.polynomial is not None]

    def __repr__(self) -> str:
        labels = self.labels
        strata = ", ".join(
            _names(k, labels) + (f":{v}" if v != 1 else "") for k, v in self.strata.items()
        )
        return f"SncBoundary(dim={self.ambient_dim}, strata=[{strata}])"


def _resolve(s, index: dict[str, int]) -> int:
    if isinstance(s, str) and s in index:
        return index[s]
    if isinstance(s, int) and not isinstance(s, bool) and 0 <= s < len(index):
        return s
    raise StructuralError(f"stratum references unknown component {s!r}")


def _names(key: frozenset[int], labels: Sequence[str]) -> str:
    return "{" + ",".join(labels[i] for i in sorted(key)) + "}"


@dataclass(frozen=True)
class DualComplex:
    vertices: tuple[str, ...]
    faces: tuple[tuple[frozenset[str], int], ...]
    dimension: int

    def face_vector(self) -> tuple[int, ...]:
        """(f_0, f_1, ...): number of k-dimensional cells, counted with multiplicity."""
        f = [0] * (self.dimension + 1)
        for s, m in self.faces:
            f[len(s) - 1] += m
        return tuple(f)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.face_vector()))


def dual_complex(b: SncBoundary) -> DualComplex:
    """Cells index strata of the coefficient-one part of the boundary."""
    labels = b.labels
    keep = {i for i, c in enumerate(b.components) if c.coefficient == 1}
    faces = tuple(
        (frozenset(labels[i] for i in key), count)
        for key, count in b.strata.items()
        if key <= keep
    )
    dim = max((len(s) - 1 for s, _ in faces), default=-1)
    assert dim <= b.ambient_dim - 1
    return DualComplex(tuple(labels[i] for i in sorted(keep)), faces, dim)


def coregularity(b: SncBoundary) -> int:
    return b.ambient_dim - dual_complex(b).dimension - 1


def empty_boundary(ambient_dim: int) -> SncBoundary:
    return SncBoundary(ambient_dim, [], {})


def standard_toric(n: int, prefix: str = "D") -> SncBoundary:
    """(P^n, sum of the n+1 coordinate hyperplanes): every proper subset is a stratum."""
    if n < 1:
        raise StructuralError("projective space of dimension at least 1 expected")
    labels = [f"{prefix}{i}" for i in range(n + 1)]
    strata = {frozenset(s): 1 for r in range(1, n + 1) for s in combinations(range(n + 1), r)}
    return SncBoundary(n, labels, strata)


def coordinate_boundary(n: int, indices: Sequence[int] | None = None) -> SncBoundary:
    """Chart trace of coordinate hyperplanes {x_i = 0}; all intersections are strata."""
    indices = list(range(n)) if indices is None else list(indices)
    comps = [BoundaryComponent(f"x{i + 1}", 1, Polynomial.variable(n, i)) for i in indices]
    strata = {frozenset(s): 1 for r in range(1, len(comps) + 1)
              for s in combinations(range(len(comps)), r)}
    return SncBoundary(n, comps, strata)


def product_pair(a: SncBoundary, b: SncBoundary) -> SncBoundary:
    """(X x Y, pr1^* D_X + pr2^* D_Y); its dual complex is the join."""
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise StructuralError(f"component labels {sorted(clash)} occur in both factors")
    off = len(a.components)
    strata: dict[frozenset[int], int] = dict(a.strata)
    shifted = {frozenset(i + off for i in k): v for k, v in b.strata.items()}
    strata.update(shifted)
    for ka, va in a.strata.items():
        for kb, vb in shifted.items():
            strata[ka | kb] = va * vb
    return SncBoundary(a.ambient_dim + b.ambient_dim, a.components + b.components, strata)


def stabilize(b: SncBoundary, r: int) -> SncBoundary:
    """The stabilisation (X, D) -> (X x P^r, pr1^* D + pr2^* Delta_r)."""
    if r < 1:
        raise StructuralError("stabilisation needs r >= 1")
    prefix = "T"
    while any(lab.startswith(prefix) for lab in b.labels):
        prefix += "'"
    return product_pair(b, standard_toric(r, prefix))
