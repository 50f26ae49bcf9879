"""Packed monomial keys.

A monomial in at most eight variables is stored as one non-negative integer::

    bits 56..63   total degree
    bits 49..55   exponent of x1   (variable index 0)
    bits 42..48   exponent of x2
    ...
    bits  0..6    exponent of x8   (variable index 7)

Because the total degree occupies the top bits and variable 0 the next
field, comparing keys as integers is exactly graded lexicographic order
with variable 0 highest.  Multiplying monomials is adding keys, which never
carries between fields while the product degree stays within
:data:`MAX_DEGREE`.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import LimitError

MAX_VARS = 8
MAX_DEGREE = 64
FIELD_BITS = 7
FIELD_MASK = (1 << FIELD_BITS) - 1
DEG_SHIFT = 56
SHIFTS = tuple(FIELD_BITS * (MAX_VARS - 1 - i) for i in range(MAX_VARS))
# adding VAR_UNIT[i] to a key multiplies the monomial by x_{i}
VAR_UNIT = tuple((1 << DEG_SHIFT) | (1 << s) for s in SHIFTS)


def pack(exponents: Sequence[int]) -> int:
    if len(exponents) > MAX_VARS:
        raise LimitError(f"at most {MAX_VARS} variables are supported, got {len(exponents)}")
    deg = 0
    key = 0
    for i, e in enumerate(exponents):
        if e < 0:
            raise ValueError(f"negative exponent {e} in monomial")
        deg += e
        key |= e << SHIFTS[i]
    if deg > MAX_DEGREE:
        raise LimitError(f"total degree {deg} exceeds the limit {MAX_DEGREE}")
    return key | (deg << DEG_SHIFT)


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> SHIFTS[i]) & FIELD_MASK for i in range(nvars))


def degree(key: int) -> int:
    return key >> DEG_SHIFT


def exponent(key: int, var: int) -> int:
    return (key >> SHIFTS[var]) & FIELD_MASK


def divides(small: int, big: int) -> bool:
    """True when the monomial ``small`` divides the monomial ``big``."""
    for s in SHIFTS:
        if (small >> s) & FIELD_MASK > (big >> s) & FIELD_MASK:
            return False
    return True


def fieldwise_min(a: int, b: int) -> int:
    key = 0
    deg = 0
    for s in SHIFTS:
        e = min((a >> s) & FIELD_MASK, (b >> s) & FIELD_MASK)
        deg += e
        key |= e << s
    return key | (deg << DEG_SHIFT)
