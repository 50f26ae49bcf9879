# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels; same contract as ``_kernels_py``."""

from fractions import Fraction

BACKEND = "cython"

cdef int NSLOTS = 8
cdef unsigned long long FMASK = 127
cdef int DSHIFT = 56
cdef int SH[8]
SH[:] = [49, 42, 35, 28, 21, 14, 7, 0]

cdef object _FR = Fraction


cdef inline object _demote(object c):
    if type(c) is _FR and c.denominator == 1:
        return c.numerator
    return c


def clean(dict terms):
    return {k: _demote(c) for k, c in terms.items() if c}


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef unsigned long long ka, kb
    cdef object ca, cb, v, k
    cdef list la, lb
    if len(a) < len(b):
        a, b = b, a
    la = list(a.items())
    lb = list(b.items())
    for kb_o, cb in lb:
        kb = kb_o
        for ka_o, ca in la:
            ka = ka_o
            k = ka + kb
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: _demote(c) for k, c in out.items() if c}


def add_terms(dict a, dict b, int sign=1):
    cdef dict out = dict(a)
    cdef object v, k, c
    for k, c in b.items():
        if sign > 0:
            v = out.get(k, 0) + c
        else:
            v = out.get(k, 0) - c
        if v:
            out[k] = _demote(v)
        else:
            out.pop(k, None)
    return out


def scale_terms(dict a, object c):
    if not c:
        return {}
    return {k: _demote(v * c) for k, v in a.items()}


def shift_terms(dict a, unsigned long long key):
    cdef unsigned long long k
    return {<unsigned long long>k_o + key: v for k_o, v in a.items()}


def deriv_terms(dict a, int var):
    cdef int s = SH[var]
    cdef unsigned long long unit = (1ULL << DSHIFT) | (1ULL << s)
    cdef unsigned long long k, e
    cdef dict out = {}
    for k_o, c in a.items():
        k = k_o
        e = (k >> s) & FMASK
        if e:
            out[k - unit] = c * e
    return out


def eval_terms(dict a, object point, int nvars):
    cdef list pows = [[1, p] for p in list(point)[:nvars]]
    cdef object total = 0
    cdef object v
    cdef unsigned long long k, e
    cdef int i
    cdef list row
    for k_o, c in a.items():
        k = k_o
        v = c
        for i in range(nvars):
            e = (k >> SH[i]) & FMASK
            if e:
                row = pows[i]
                while len(row) <= e:
                    row.append(row[len(row) - 1] * row[1])
                v = v * row[e]
        total += v
    if isinstance(total, _FR):
        return _demote(total)
    return total


cdef inline bint _fields_ge(unsigned long long big, unsigned long long small):
    cdef int i
    for i in range(NSLOTS):
        if ((big >> SH[i]) & FMASK) < ((small >> SH[i]) & FMASK):
            return False
    return True


cdef object _exact_div(object x, object y):
    if type(x) is int and type(y) is int:
        q, r = divmod(x, y)
        if not r:
            return q
    return _demote(_FR(x) / y)


def divide_exact(dict a, dict b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef unsigned long long lead_b = max(b)
    cdef object cb = b[lead_b]
    cdef list rest = [(k, c) for k, c in b.items() if k != lead_b]
    cdef dict r = dict(a)
    cdef dict q = {}
    cdef unsigned long long lr, d, kb
    cdef object c, v, k
    while r:
        lr = max(r)
        if lr < lead_b or not _fields_ge(lr, lead_b):
            return None
        d = lr - lead_b
        c = _exact_div(r.pop(lr), cb)
        q[d] = c
        for kb_o, cbb in rest:
            kb = kb_o
            k = kb + d
            v = r.get(k, 0) - c * cbb
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return {k: _demote(v) for k, v in q.items()}
