"""Pure-Python kernels: outward-rounded endpoint arithmetic and point series.

Mirrors ``_ckernels.pyx`` operation for operation so that both backends
produce bit-identical endpoints.
"""

from math import inf, nextafter, sqrt

SIN, COS, SINC, THETA_MINUS_SIN, SIN_MINUS_THETA_COS, ONE_MINUS_COS = range(6)

MAX_TERMS = 25
TERM_FLOOR = 2.0 ** -60


def down(x):
    return nextafter(x, -inf)


def up(x):
    return nextafter(x, inf)


def add(alo, ahi, blo, bhi):
    return down(alo + blo), up(ahi + bhi)


def sub(alo, ahi, blo, bhi):
    return down(alo - bhi), up(ahi - blo)


def mul(alo, ahi, blo, bhi):
    p1 = alo * blo
    p2 = alo * bhi
    p3 = ahi * blo
    p4 = ahi * bhi
    return down(min(p1, p2, p3, p4)), up(max(p1, p2, p3, p4))


def div(alo, ahi, blo, bhi):
    # caller guarantees 0 not in [blo, bhi]
    q1 = alo / blo
    q2 = alo / bhi
    q3 = ahi / blo
    q4 = ahi / bhi
    return down(min(q1, q2, q3, q4)), up(max(q1, q2, q3, q4))


def sqrt_out(alo, ahi):
    # caller guarantees alo >= 0
    lo = sqrt(alo)
    lo = down(lo) if lo > 0.0 else 0.0
    return lo, up(sqrt(ahi))


def _first_term(kind, x):
    """Enclosure of the leading term and its index offset for ``kind``."""
    if kind == SIN:
        return x, x, 1
    if kind == COS or kind == SINC:
        return 1.0, 1.0, 1
    x2lo, x2hi = down(x * x), up(x * x)
    if kind == ONE_MINUS_COS:
        return down(x2lo / 2.0), up(x2hi / 2.0), 1
    x3lo, x3hi = down(x2lo * x), up(x2hi * x)
    if kind == THETA_MINUS_SIN:
        return down(x3lo / 6.0), up(x3hi / 6.0), 1
    # SIN_MINUS_THETA_COS: x^3/3 - x^5/30 + ..., general term 2k x^(2k+1)/(2k+1)!
    return down(x3lo / 3.0), up(x3hi / 3.0), 1


def _divisor(kind, j):
    """Ratio denominator: term_j = term_{j-1} * x^2 / divisor(j), j >= 1."""
    if kind == SIN or kind == SINC:
        return float((2 * j) * (2 * j + 1))
    if kind == COS:
        return float((2 * j - 1) * (2 * j))
    if kind == ONE_MINUS_COS:
        return float((2 * j + 1) * (2 * j + 2))
    if kind == THETA_MINUS_SIN:
        return float((2 * j + 2) * (2 * j + 3))
    return float(2 * j * (2 * j + 3))


def series(kind, x):
    """Enclose an alternating series at the point ``x >= 0``.

    Returns ``(lo, hi, terms_used, remainder)``. Every term is carried as an
    outward-rounded enclosure, and the first omitted term's upper bound is
    folded in as ``[-T, +T]``.
    """
    x2lo = down(x * x)
    x2hi = up(x * x)
    if x2lo < 0.0:
        x2lo = 0.0
    tlo, thi, _ = _first_term(kind, x)
    slo, shi = down(tlo), up(thi)
    used = 1
    sign = -1
    while True:
        d = _divisor(kind, used)
        nlo = down(down(tlo * x2lo) / d)
        nhi = up(up(thi * x2hi) / d)
        if nlo < 0.0:
            nlo = 0.0
        if nhi < TERM_FLOOR or used >= MAX_TERMS:
            break
        if sign < 0:
            slo, shi = down(slo - nhi), up(shi - nlo)
        else:
            slo, shi = down(slo + nlo), up(shi + nhi)
        tlo, thi = nlo, nhi
        used += 1
        sign = -sign
    # alternating bound needs nonincreasing magnitudes past the cut
    if x2hi > _divisor(kind, used + 1):
        raise ArithmeticError("series terms not decreasing at truncation point")
    return down(slo - nhi), up(shi + nhi), used, nhi
