"""Pure-Python term kernels.

Every kernel works on plain dicts mapping packed monomial keys (see
:mod:`birvol.exact.monomial`) to exact coefficients (``int`` or
``Fraction``).  Results never contain zero coefficients and integral
``Fraction`` values are demoted to ``int`` so that dict equality is
structural equality.  The compiled module ``_kernels`` implements the same
functions with the same semantics.
"""

from __future__ import annotations

from fractions import Fraction

from .monomial import DEG_SHIFT, FIELD_MASK, SHIFTS

BACKEND = "python"


def _demote(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def clean(terms: dict) -> dict:
    return {k: _demote(c) for k, c in terms.items() if c}


def mul_terms(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            v = get(k)
            out[k] = ca * cb if v is None else v + ca * cb
    return {k: _demote(c) for k, c in out.items() if c}


def add_terms(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    get = out.get
    for k, c in b.items():
        v = get(k, 0) + c if sign > 0 else get(k, 0) - c
        if v:
            out[k] = _demote(v)
        else:
            out.pop(k, None)
    return out


def scale_terms(a: dict, c) -> dict:
    if not c:
        return {}
    return {k: _demote(v * c) for k, v in a.items()}


def shift_terms(a: dict, key: int) -> dict:
    """Multiply every term by the monomial ``key``."""
    return {k + key: v for k, v in a.items()}


def deriv_terms(a: dict, var: int) -> dict:
    s = SHIFTS[var]
    unit = (1 << DEG_SHIFT) | (1 << s)
    out = {}
    for k, c in a.items():
        e = (k >> s) & FIELD_MASK
        if e:
            out[k - unit] = c * e
    return out


def eval_terms(a: dict, point, nvars: int):
    """Evaluate at ``point`` (a sequence of exact numbers of length ``nvars``)."""
    pows: list[list] = [[1, p] for p in point[:nvars]]
    total = 0
    for k, c in a.items():
        v = c
        for i in range(nvars):
            e = (k >> SHIFTS[i]) & FIELD_MASK
            if e:
                row = pows[i]
                while len(row) <= e:
                    row.append(row[-1] * row[1])
                v = v * row[e]
        total += v
    return _demote(total) if isinstance(total, Fraction) else total


def _fields_ge(big: int, small: int) -> bool:
    for s in SHIFTS:
        if (big >> s) & FIELD_MASK < (small >> s) & FIELD_MASK:
            return False
    return True


def _exact_div(x, y):
    if type(x) is int and type(y) is int:
        q, r = divmod(x, y)
        if not r:
            return q
    return _demote(Fraction(x) / y)


def divide_exact(a: dict, b: dict):
    """Quotient ``a / b`` when ``b`` divides ``a`` exactly, else ``None``.

    Leading-term division in graded lex order: if ``b`` divides ``a`` then
    the leading monomial of ``b`` divides the leading monomial of every
    intermediate remainder, so the first failure proves non-divisibility.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_b = max(b)
    cb = b[lead_b]
    rest = [(k, c) for k, c in b.items() if k != lead_b]
    r = dict(a)
    q: dict = {}
    while r:
        lr = max(r)
        if lr < lead_b or not _fields_ge(lr, lead_b):
            return None
        d = lr - lead_b
        c = _exact_div(r.pop(lr), cb)
        q[d] = c
        get = r.get
        for kb, cbb in rest:
            k = kb + d
            v = get(k, 0) - c * cbb
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return {k: _demote(v) for k, v in q.items()}
