# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: outward-rounded endpoint arithmetic and point series.

Operation order matches ``_pykernels`` exactly; build with FP contraction
disabled so results stay bit-identical to the pure-Python path.
"""

from libc.math cimport nextafter, sqrt, INFINITY

cdef int MAX_TERMS = 25

cdef double TERM_FLOOR = 2.0 ** -60

SIN, COS, SINC, THETA_MINUS_SIN, SIN_MINUS_THETA_COS, ONE_MINUS_COS = range(6)


cdef inline double _down(double x) nogil:
    return nextafter(x, -INFINITY)


cdef inline double _up(double x) nogil:
    return nextafter(x, INFINITY)


cdef inline double _min4(double a, double b, double c, double d) nogil:
    cdef double m = a
    if b < m:
        m = b
    if c < m:
        m = c
    if d < m:
        m = d
    return m


cdef inline double _max4(double a, double b, double c, double d) nogil:
    cdef double m = a
    if b > m:
        m = b
    if c > m:
        m = c
    if d > m:
        m = d
    return m


def down(double x):
    return _down(x)


def up(double x):
    return _up(x)


def add(double alo, double ahi, double blo, double bhi):
    return _down(alo + blo), _up(ahi + bhi)


def sub(double alo, double ahi, double blo, double bhi):
    return _down(alo - bhi), _up(ahi - blo)


def mul(double alo, double ahi, double blo, double bhi):
    cdef double p1 = alo * blo, p2 = alo * bhi, p3 = ahi * blo, p4 = ahi * bhi
    return _down(_min4(p1, p2, p3, p4)), _up(_max4(p1, p2, p3, p4))


def div(double alo, double ahi, double blo, double bhi):
    cdef double q1 = alo / blo, q2 = alo / bhi, q3 = ahi / blo, q4 = ahi / bhi
    return _down(_min4(q1, q2, q3, q4)), _up(_max4(q1, q2, q3, q4))


def sqrt_out(double alo, double ahi):
    cdef double lo = sqrt(alo)
    if lo > 0.0:
        lo = _down(lo)
    else:
        lo = 0.0
    return lo, _up(sqrt(ahi))


cdef inline double _divisor(int kind, int j) nogil:
    if kind == 0 or kind == 2:
        return <double>((2 * j) * (2 * j + 1))
    if kind == 1:
        return <double>((2 * j - 1) * (2 * j))
    if kind == 5:
        return <double>((2 * j + 1) * (2 * j + 2))
    if kind == 3:
        return <double>((2 * j + 2) * (2 * j + 3))
    return <double>(2 * j * (2 * j + 3))


def series(int kind, double x):
    """Enclose an alternating series at the point ``x >= 0``.

    Returns ``(lo, hi, terms_used, remainder)``.
    """
    cdef double x2lo = _down(x * x), x2hi = _up(x * x)
    cdef double tlo, thi, x3lo, x3hi, slo, shi, nlo, nhi, d
    cdef int used = 1, sign = -1
    if x2lo < 0.0:
        x2lo = 0.0
    if kind == 0:
        tlo = x
        thi = x
    elif kind == 1 or kind == 2:
        tlo = 1.0
        thi = 1.0
    else:
        # leading term recomputed from x exactly as the Python twin does
        x2lo = _down(x * x)
        x2hi = _up(x * x)
        if kind == 5:
            tlo = _down(x2lo / 2.0)
            thi = _up(x2hi / 2.0)
        else:
            x3lo = _down(x2lo * x)
            x3hi = _up(x2hi * x)
            if kind == 3:
                tlo = _down(x3lo / 6.0)
                thi = _up(x3hi / 6.0)
            else:
                tlo = _down(x3lo / 3.0)
                thi = _up(x3hi / 3.0)
        if x2lo < 0.0:
            x2lo = 0.0
    slo = _down(tlo)
    shi = _up(thi)
    while True:
        d = _divisor(kind, used)
        nlo = _down(_down(tlo * x2lo) / d)
        nhi = _up(_up(thi * x2hi) / d)
        if nlo < 0.0:
            nlo = 0.0
        if nhi < TERM_FLOOR or used >= MAX_TERMS:
            break
        if sign < 0:
            slo = _down(slo - nhi)
            shi = _up(shi - nlo)
        else:
            slo = _down(slo + nlo)
            shi = _up(shi + nhi)
        tlo = nlo
        thi = nhi
        used += 1
        sign = -sign
    if x2hi > _divisor(kind, used + 1):
        raise ArithmeticError("series terms not decreasing at truncation point")
    return _down(slo - nhi), _up(shi + nhi), used, nhi
