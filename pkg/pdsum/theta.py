"""
pdsum Theta Module
Borwein cubic theta functions by exact lattice sums over the hexagonal form

    a(q) = sum q^(m^2+mn+n^2)
    b(q) = sum w^(m-n) q^(m^2+mn+n^2),   w a primitive cube root of unity
    c(q) = sum q^(m^2+mn+n^2+m+n)

Each sum runs over a box |m|, |n| <= B; after summing, every pair on the box's
boundary shell is checked to lie above the truncation order.
"""

import logging
from math import isqrt
from typing import Callable, List, Tuple

from pdsum.exceptions import LatticeBoundError
from pdsum.series import Series, at_power, eta

logger = logging.getLogger(__name__)

QuadraticForm = Callable[[int, int], int]


def _norm(m: int, n: int) -> int:
    return m * m + m * n + n * n


def _shifted_norm(m: int, n: int) -> int:
    return m * m + m * n + n * n + m + n


def _check_shell(form: QuadraticForm, bound: int, order: int, name: str):
    """Every pair with max(|m|, |n|) == bound must exceed the order"""
    for m in range(-bound, bound + 1):
        for n in (-bound, bound):
            if form(m, n) <= order or form(n, m) <= order:
                raise LatticeBoundError(
                    f"{name}: boundary pair ({m}, {n}) has value <= {order}; enumeration box {bound} is too small"
                )


def _lattice_counts(form: QuadraticForm, bound: int, order: int, classes: int = 1) -> List[List[int]]:
    """counts[j][k]: pairs in the box with form value k and (m - n) = j mod classes"""
    counts = [[0] * (order + 1) for _ in range(classes)]
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            value = form(m, n)
            if value <= order:
                counts[(m - n) % classes][value] += 1
    return counts


def a_series(order: int) -> Series:
    """a(q) to q^order; coefficient k counts pairs with m^2+mn+n^2 = k"""
    bound = isqrt(2 * order) + 2
    counts = _lattice_counts(_norm, bound, order)[0]
    _check_shell(_norm, bound, order, "a(q)")
    logger.debug("a(q) lattice sum to q^%d over box %d", order, bound)
    return Series(tuple(counts), order)


def b_series(order: int) -> Series:
    """
    b(q) to q^order as a rational-integer series.

    With A_j(k) the number of pairs of norm k and m - n = j mod 3, the
    coefficient is A_0 + A_1 w + A_2 w^2; swapping m and n gives A_1 = A_2,
    and w + w^2 = -1 leaves A_0 - A_1.
    """
    bound = isqrt(2 * order) + 2
    a0, a1, a2 = _lattice_counts(_norm, bound, order, classes=3)
    _check_shell(_norm, bound, order, "b(q)")
    for k, (left, right) in enumerate(zip(a1, a2)):
        if left != right:
            raise LatticeBoundError(f"b(q): residue classes 1 and 2 disagree at q^{k} ({left} vs {right})")
    return Series(tuple(x - y for x, y in zip(a0, a1)), order)


def c_series(order: int) -> Series:
    """c(q) to q^order; coefficient k counts pairs with m^2+mn+n^2+m+n = k"""
    bound = isqrt(2 * order) + 3
    counts = _lattice_counts(_shifted_norm, bound, order)[0]
    _check_shell(_shifted_norm, bound, order, "c(q)")
    logger.debug("c(q) lattice sum to q^%d over box %d", order, bound)
    return Series(tuple(counts), order)


def c_product(order: int) -> Series:
    """c(q) = 3 (q^3;q^3)^3 / (q;q)"""
    return 3 * eta(order, (3, 3, 3), (1, 1, -1))


# -- 2-dissection identities ------------------------------------------------

def a_dissection(order: int) -> Tuple[Series, Series]:
    """a(q) against a(q^4) + 6q (q^4;q^4)^2 (q^12;q^12)^2 / ((q^2;q^2)(q^6;q^6))"""
    rhs = at_power(a_series, 4, order) + 6 * eta(order, (4, 4, 2), (12, 12, 2), (2, 2, -1), (6, 6, -1)).mul_q(1)
    return a_series(order), rhs


def c_dissection(order: int) -> Tuple[Series, Series]:
    """c(q) against q c(q^4) + 3 (q^4;q^4)^3 (q^6;q^6)^2 / ((q^2;q^2)^2 (q^12;q^12))"""
    rhs = at_power(c_series, 4, order).mul_q(1) + 3 * eta(order, (4, 4, 3), (6, 6, 2), (2, 2, -2), (12, 12, -1))
    return c_series(order), rhs


def a_c_relation(order: int) -> Tuple[Series, Series]:
    """c(q) (a(q) - a(q^2)) against 2q c(q^2)^2; cleared of the division by c(q)"""
    c = c_series(order)
    lhs = c * (a_series(order) - at_power(a_series, 2, order))
    c2 = at_power(c_series, 2, order)
    return lhs, (2 * (c2 * c2)).mul_q(1)

