"""
pdsum Eisenstein Module
Series with coefficients in Z[w] (w a primitive cube root of unity) and series
whose coefficients are Laurent polynomials in an auxiliary variable z
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from pdsum.exceptions import SeriesError
from pdsum.series import Series

logger = logging.getLogger(__name__)

ZETA_TEXT = "ζ"


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w with 1 + w + w^2 = 0"""
    a: int = 0
    b: int = 0

    @classmethod
    def zeta_power(cls, k: int) -> "EisensteinInt":
        """w^k; w^2 = -1 - w"""
        return (cls(1, 0), cls(0, 1), cls(-1, -1))[k % 3]

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other: Union["EisensteinInt", int]) -> "EisensteinInt":
        if isinstance(other, int):
            return EisensteinInt(self.a + other, self.b)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other: Union["EisensteinInt", int]) -> "EisensteinInt":
        return self + (-other)

    def __mul__(self, other: Union["EisensteinInt", int]) -> "EisensteinInt":
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        if not isinstance(other, EisensteinInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        unit = ZETA_TEXT if abs(self.b) == 1 else f"{abs(self.b)}{ZETA_TEXT}"
        if self.a == 0:
            return unit if self.b > 0 else f"-{unit}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {unit}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)


@dataclass(frozen=True)
class EisensteinSeries:
    """Truncated power series in q with EisensteinInt coefficients, known to q^order"""
    coeffs: Tuple[EisensteinInt, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(f"series of order {self.order} needs {self.order + 1} coefficients")

    @classmethod
    def from_series(cls, s: Series) -> "EisensteinSeries":
        return cls(tuple(EisensteinInt(c, 0) for c in s.coeffs), s.order)

    @classmethod
    def one(cls, order: int) -> "EisensteinSeries":
        return cls((ONE,) + (ZERO,) * order, order)

    @property
    def trunc_order(self) -> int:
        return self.order

    def __getitem__(self, index: int) -> EisensteinInt:
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_rational(self) -> bool:
        """True when every coefficient has zero w-component"""
        return all(c.is_rational() for c in self.coeffs)

    def rational_part(self) -> Series:
        if not self.is_rational():
            raise SeriesError("series has a nonzero w-component")
        return Series(tuple(c.a for c in self.coeffs), self.order)

    def first_mismatch(self, other: "EisensteinSeries") -> Optional[int]:
        _require_same_order(self, other)
        for n, (x, y) in enumerate(zip(self.coeffs, other.coeffs)):
            if x != y:
                return n
        return None

    def __add__(self, other: "EisensteinSeries") -> "EisensteinSeries":
        _require_same_order(self, other)
        return EisensteinSeries(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self) -> "EisensteinSeries":
        return EisensteinSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "EisensteinSeries") -> "EisensteinSeries":
        return self + (-other)

    def __mul__(self, other: Union["EisensteinSeries", Series]) -> "EisensteinSeries":
        if isinstance(other, Series):
            other = EisensteinSeries.from_series(other)
        if not isinstance(other, EisensteinSeries):
            return NotImplemented
        _require_same_order(self, other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j in range(n - i + 1):
                y = other.coeffs[j]
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return EisensteinSeries(tuple(out), n)

    def invert(self) -> "EisensteinSeries":
        """Inverse of a series with constant term 1"""
        if self.coeffs[0] != ONE:
            raise SeriesError(f"only series with constant term 1 are invertible, got {self.coeffs[0]}")
        terms = [(k, c) for k, c in enumerate(self.coeffs) if k and not c.is_zero()]
        out = [ZERO] * (self.order + 1)
        out[0] = ONE
        for n in range(1, self.order + 1):
            acc = ZERO
            for k, c in terms:
                if k > n:
                    break
                acc = acc + c * out[n - k]
            out[n] = -acc
        return EisensteinSeries(tuple(out), self.order)

    def __str__(self) -> str:
        terms = [f"({c})q^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(terms + [f"O(q^{self.order + 1})"])


def _require_same_order(s: EisensteinSeries, t: EisensteinSeries):
    if s.order != t.order:
        raise SeriesError(f"truncation orders differ: {s.order} vs {t.order}")


def twisted_pochhammer(c: EisensteinInt, a: int, b: int, order: int, inverse: bool = False) -> EisensteinSeries:
    """
    prod_{j>=0} (1 - c q^(a+jb)) over Z[w], or its inverse.

    Multiplying by a factor 1 - c q^k runs in place with descending indices;
    dividing by it runs ascending, which sums the geometric series.
    """
    if a < 1 or b < 1:
        raise SeriesError(f"offset and step must be positive, got {a} and {b}")
    out = [ONE] + [ZERO] * order
    k = a
    while k <= order:
        if inverse:
            for n in range(k, order + 1):
                out[n] = out[n] + c * out[n - k]
        else:
            for n in range(order, k - 1, -1):
                out[n] = out[n] - c * out[n - k]
        k += b
    return EisensteinSeries(tuple(out), order)


@dataclass(frozen=True)
class LaurentZSeries:
    """
    Series in q whose coefficient at q^n is a Laurent polynomial in z.

    terms[n] holds sorted (z-exponent, coefficient) pairs with nonzero
    coefficients; exponents at q^n lie within -n..n.
    """
    terms: Tuple[Tuple[Tuple[int, int], ...], ...]
    order: int

    def __post_init__(self):
        if len(self.terms) != self.order + 1:
            raise SeriesError(f"series of order {self.order} needs {self.order + 1} coefficients")
        for n, row in enumerate(self.terms):
            for exponent, _ in row:
                if abs(exponent) > n:
                    raise SeriesError(f"z-exponent {exponent} at q^{n} is outside -{n}..{n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, int]], order: int) -> "LaurentZSeries":
        frozen = tuple(tuple(sorted((e, c) for e, c in row.items() if c)) for row in rows)
        return cls(frozen, order)

    def coefficient(self, n: int) -> Dict[int, int]:
        """z-exponent -> coefficient at q^n"""
        return dict(self.terms[n])

    def total(self, n: int) -> int:
        """Value at z = 1"""
        return sum(c for _, c in self.terms[n])

    def mod_classes(self, n: int, modulus: int = 3) -> Tuple[int, ...]:
        """Coefficient sums at q^n grouped by z-exponent mod modulus"""
        classes = [0] * modulus
        for exponent, c in self.terms[n]:
            classes[exponent % modulus] += c
        return tuple(classes)

    def specialize_at_zeta(self) -> EisensteinSeries:
        """Substitute z = w, so z^m becomes w^(m mod 3)"""
        out = []
        for row in self.terms:
            value = ZERO
            for exponent, c in row:
                value = value + EisensteinInt.zeta_power(exponent) * c
            out.append(value)
        return EisensteinSeries(tuple(out), self.order)


def z_rows(base: Series) -> List[Dict[int, int]]:
    """Embed a q-series as rows with every coefficient at z^0"""
    return [({0: c} if c else {}) for c in base.coeffs]


def divide_z_factors(rows: List[Dict[int, int]], z_step: int, q_offset: int, q_step: int) -> List[Dict[int, int]]:
    """
    Divide rows in place by prod_{j>=0} (1 - z^z_step q^(q_offset + j q_step)).

    Each factor is a geometric series, so the update runs with ascending q-index.
    """
    order = len(rows) - 1
    k = q_offset
    while k <= order:
        for n in range(k, order + 1):
            source = rows[n - k]
            if not source:
                continue
            target = rows[n]
            for exponent, c in source.items():
                shifted = exponent + z_step
                target[shifted] = target.get(shifted, 0) + c
        k += q_step
    return rows
