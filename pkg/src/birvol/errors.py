"""Exception hierarchy shared by all birvol modules."""

from __future__ import annotations


class BirvolError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(BirvolError, ValueError):
    """Operands live in ambient spaces of different dimension."""


class LimitError(BirvolError, ValueError):
    """A desk-scale limit (variable count, total degree) was exceeded."""


class ZeroDenominatorError(BirvolError, ZeroDivisionError):
    """A rational function was built or divided by the zero polynomial."""


class IndeterminateCompositionError(BirvolError):
    """Substitution produced an identically vanishing denominator."""

    def __init__(self, message: str, coordinate: int | None = None):
        super().__init__(message)
        self.coordinate = coordinate


class PoleError(BirvolError):
    """A rational function or map was evaluated on its polar locus."""

    def __init__(self, message: str, coordinate: int | None = None):
        super().__init__(message)
        self.coordinate = coordinate


class NonDominantMapError(BirvolError):
    """Pullback requested along a map with vanishing Jacobian determinant."""


class ResidueError(BirvolError):
    """Residue requested along a factor that is unsupported or not a simple pole."""


class StructuralError(BirvolError, ValueError):
    """Declared combinatorial data violates its invariants."""


class UnknownLabelError(BirvolError, KeyError):
    """A class label could not be resolved."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class UndefinedIntersectionError(BirvolError, KeyError):
    """An intersection number absent from a declared table was queried."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class LedgerError(BirvolError, ValueError):
    """A Burnside ledger violates its bookkeeping discipline."""


class OracleError(BirvolError, ValueError):
    """Contradictory or malformed equivalence declarations."""
