"""
pdsum Series Module
Exact truncated power series in q with arbitrary-precision integer coefficients

A Series of order N holds the coefficients of q^0 .. q^N and stands for the
class of all power series agreeing with it modulo q^(N+1). Every operation
is exact: coefficient n of a result depends only on input coefficients at
indices <= n, and binary operations require equal orders.
"""

import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from pdsum.exceptions import EtaSpecError, SeriesError

logger = logging.getLogger(__name__)


def _check_order(order: int):
    if not isinstance(order, int) or order < 0:
        raise SeriesError(f"truncation order must be a non-negative integer, got {order!r}")


@dataclass(frozen=True)
class Series:
    """
    Truncated power series sum c_n q^n, known exactly for 0 <= n <= order.

    Instances are immutable values; all arithmetic returns fresh Series.
    """
    coeffs: Tuple[int, ...]
    order: int

    def __post_init__(self):
        _check_order(self.order)
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    # -- construction ----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> "Series":
        """Build a series from leading coefficients, zero-padding or truncating to the order"""
        _check_order(order)
        values = list(coeffs)[:order + 1]
        for value in values:
            if not isinstance(value, int):
                raise SeriesError(f"coefficients must be integers, got {value!r}")
        values.extend([0] * (order + 1 - len(values)))
        return cls(tuple(values), order)

    @classmethod
    def from_terms(cls, terms: Dict[int, int], order: int) -> "Series":
        """Build a series from an exponent -> coefficient map; exponents above the order are dropped"""
        _check_order(order)
        values = [0] * (order + 1)
        for exponent, coeff in terms.items():
            if exponent < 0:
                raise SeriesError(f"negative exponent {exponent} in a power series")
            if exponent <= order:
                values[exponent] += int(coeff)
        return cls(tuple(values), order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        _check_order(order)
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "Series":
        """The series coeff * q^exponent (zero if the exponent exceeds the order)"""
        return cls.from_terms({exponent: coeff}, order)

    # -- access ----------------------------------------------------------

    @property
    def trunc_order(self) -> int:
        return self.order

    def __getitem__(self, index: int) -> int:
        if not 0 <= index <= self.order:
            raise IndexError(f"coefficient q^{index} is outside the known range 0..{self.order}")
        return self.coeffs[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        """(exponent, coefficient) pairs with nonzero coefficient"""
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def first_mismatch(self, other: "Series") -> Optional[int]:
        """Smallest index where the two series differ, or None if they agree"""
        _require_same_order(self, other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    # -- truncation and shifts -------------------------------------------

    def truncate(self, order: int) -> "Series":
        """Forget coefficients above the given order (which may not exceed the current one)"""
        _check_order(order)
        if order > self.order:
            raise SeriesError(f"cannot raise truncation order {self.order} to {order}")
        return Series(self.coeffs[:order + 1], order)

    def shift(self, k: int) -> "Series":
        """Multiply by q^k; the result is known to order + k"""
        if k < 0:
            raise SeriesError(f"shift amount must be non-negative, got {k}")
        return Series((0,) * k + self.coeffs, self.order + k)

    def unshift(self, k: int) -> "Series":
        """Divide by q^k; the first k coefficients must vanish"""
        if k < 0 or k > self.order:
            raise SeriesError(f"cannot divide a series of order {self.order} by q^{k}")
        if any(self.coeffs[:k]):
            raise SeriesError(f"series is not divisible by q^{k}")
        return Series(self.coeffs[k:], self.order - k)

    def mul_q(self, k: int) -> "Series":
        """Multiply by q^k keeping the current order"""
        if k < 0:
            raise SeriesError(f"shift amount must be non-negative, got {k}")
        if k > self.order:
            return Series.zero(self.order)
        return Series((0,) * k + self.coeffs[:self.order + 1 - k], self.order)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            other = Series.monomial(0, self.order, other)
        if not isinstance(other, Series):
            return NotImplemented
        _require_same_order(self, other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            other = Series.monomial(0, self.order, other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Series":
        return (-self) + other

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return Series(tuple(other * c for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other: int) -> "Series":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return invert(self) ** (-exponent)
        result = Series.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def invert(self) -> "Series":
        return invert(self)

    def __str__(self) -> str:
        return format_series(self)


def _require_same_order(s: Series, t: Series):
    if s.order != t.order:
        raise SeriesError(f"truncation orders differ: {s.order} vs {t.order}")


def format_series(s: Series, variable: str = "q", max_terms: Optional[int] = None) -> str:
    """Render as '1 - q - q^2 + q^5 + O(q^8)'"""
    pieces = []
    terms = s.nonzero_terms()
    if max_terms is not None:
        terms = terms[:max_terms]
    for n, c in terms:
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if n == 0:
            body = str(magnitude)
        else:
            power = variable if n == 1 else f"{variable}^{n}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        pieces.append((sign, body))
    text = ""
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            text = body if sign == "+" else f"-{body}"
        else:
            text += f" {sign} {body}"
    tail = f"O({variable}^{s.order + 1})"
    return f"{text} + {tail}" if text else tail


# -- core operations ------------------------------------------------------

def mul(s: Series, t: Series) -> Series:
    """Cauchy product truncated at the common order"""
    _require_same_order(s, t)
    n = s.order
    if sum(1 for c in s.coeffs if c) > sum(1 for c in t.coeffs if c):
        s, t = t, s
    out = [0] * (n + 1)
    other = t.coeffs
    for i, a in enumerate(s.coeffs):
        if not a:
            continue
        for j in range(n - i + 1):
            b = other[j]
            if b:
                out[i + j] += a * b
    return Series(tuple(out), n)


def invert(s: Series) -> Series:
    """
    Multiplicative inverse of a series with constant term 1.

    Uses the forward recurrence t_0 = 1, t_n = -sum_{k=1..n} s_k t_{n-k},
    visiting only the nonzero coefficients of s.
    """
    if s.coeffs[0] != 1:
        raise SeriesError(f"only series with constant term 1 are invertible over the integers, got {s.coeffs[0]}")
    terms = [(k, c) for k, c in enumerate(s.coeffs) if k and c]
    out = [0] * (s.order + 1)
    out[0] = 1
    for n in range(1, s.order + 1):
        acc = 0
        for k, c in terms:
            if k > n:
                break
            acc += c * out[n - k]
        out[n] = -acc
    return Series(tuple(out), s.order)


def _validate_offset_step(a: int, b: int):
    if not isinstance(a, int) or a < 1:
        raise SeriesError(f"offset must be a positive integer, got {a!r}")
    if not isinstance(b, int) or b < 1:
        raise SeriesError(f"step must be a positive integer, got {b!r}")


def pochhammer(a: int, b: int, order: int) -> Series:
    """
    (q^a; q^b)_inf = prod_{j>=0} (1 - q^(a+jb)) truncated at q^order.

    Factors with a + jb > order contribute 1, so the product is finite.
    """
    _validate_offset_step(a, b)
    _check_order(order)
    out = [0] * (order + 1)
    out[0] = 1
    k = a
    while k <= order:
        for n in range(order, k - 1, -1):
            out[n] -= out[n - k]
        k += b
    return Series(tuple(out), order)


def neg_pochhammer(a: int, b: int, order: int) -> Series:
    """(-q^a; q^b)_inf = prod_{j>=0} (1 + q^(a+jb)) truncated at q^order"""
    _validate_offset_step(a, b)
    _check_order(order)
    out = [0] * (order + 1)
    out[0] = 1
    k = a
    while k <= order:
        for n in range(order, k - 1, -1):
            out[n] += out[n - k]
        k += b
    return Series(tuple(out), order)


def binomial_power(step: int, exponent: int, order: int) -> Series:
    """
    (1 - q^step)^exponent for any integer exponent, via the binomial series.

    The coefficient of q^(step*k) is (-1)^k * C(exponent, k) with the
    generalized binomial coefficient, which is an integer for integer exponents.
    """
    if step < 1:
        raise SeriesError(f"step must be a positive integer, got {step}")
    _check_order(order)
    out = [0] * (order + 1)
    binom = 1
    k = 0
    while step * k <= order:
        out[step * k] = -binom if k & 1 else binom
        k += 1
        binom = binom * (exponent - k + 1) // k
        if binom == 0:
            break
    return Series(tuple(out), order)


def dissect(s: Series, m: int, r: int) -> Series:
    """
    The r-th component of the m-dissection: coefficient n is s[m*n + r].

    The result has order floor((N - r) / m).
    """
    if m < 1:
        raise SeriesError(f"dissection modulus must be positive, got {m}")
    if not 0 <= r < m:
        raise SeriesError(f"residue {r} is outside 0..{m - 1}")
    if r > s.order:
        raise SeriesError(f"residue {r} exceeds the series order {s.order}")
    return Series(s.coeffs[r::m], (s.order - r) // m)


def inflate(s: Series, k: int, order: Optional[int] = None) -> Series:
    """
    Substitute q -> q^k.

    The result is exact up to k*N + k - 1; by default it is truncated at k*N.
    """
    if k < 1:
        raise SeriesError(f"inflation factor must be positive, got {k}")
    limit = k * s.order + k - 1
    if order is None:
        order = k * s.order
    _check_order(order)
    if order > limit:
        raise SeriesError(f"inflating order {s.order} by {k} is exact only up to q^{limit}, not q^{order}")
    out = [0] * (order + 1)
    for n, c in enumerate(s.coeffs):
        if k * n > order:
            break
        out[k * n] = c
    return Series(tuple(out), order)


def at_power(build: Callable[[int], Series], k: int, order: int) -> Series:
    """f(q^k) to q^order, where build(n) expands f to q^n"""
    return inflate(build(order // k), k, order=order)


def sieve(s: Series, m: int, r: int) -> Series:
    """The terms of s whose exponent is congruent to r mod m, at the same order"""
    if m < 1 or not 0 <= r < m:
        raise SeriesError(f"invalid residue class {r} mod {m}")
    return Series(tuple(c if n % m == r else 0 for n, c in enumerate(s.coeffs)), s.order)


# -- eta quotients --------------------------------------------------------

@dataclass(frozen=True)
class EtaFactor:
    """One factor (q^offset; q^step)_inf ^ exponent"""
    offset: int
    step: int
    exponent: int

    def __post_init__(self):
        for name in ("offset", "step"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise EtaSpecError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.exponent, int):
            raise EtaSpecError(f"exponent must be an integer, got {self.exponent!r}")

    def __str__(self) -> str:
        return f"({self.offset}:{self.step})^{self.exponent}"


_FACTOR_RE = re.compile(r"^\(\s*(\d+)\s*:\s*(\d+)\s*\)(?:\s*\^\s*([+-]?\d+))?$")


@dataclass(frozen=True)
class EtaQuotientSpec:
    """
    A finite product of q-shifted factorials prod (q^a; q^b)_inf ^ e.

    Every factor has constant term 1, so negative exponents are well defined
    over the integers. Canonical text form: '(6:6)^1*(1:1)^-1'.
    """
    factors: Tuple[EtaFactor, ...] = ()

    @classmethod
    def of(cls, *triples: Tuple[int, int, int]) -> "EtaQuotientSpec":
        """Build from (offset, step, exponent) triples"""
        return cls(tuple(EtaFactor(a, b, e) for a, b, e in triples))

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse the canonical text form; '1' denotes the empty product"""
        stripped = text.strip()
        if not stripped:
            raise EtaSpecError("empty eta-quotient text")
        if stripped == "1":
            return cls(())
        factors = []
        for token in stripped.split("*"):
            match = _FACTOR_RE.match(token.strip())
            if not match:
                raise EtaSpecError(f"cannot parse eta-quotient factor {token.strip()!r}; expected '(a:b)^e'")
            a, b, e = match.groups()
            factors.append(EtaFactor(int(a), int(b), int(e) if e is not None else 1))
        return cls(tuple(factors))

    def inverse(self) -> "EtaQuotientSpec":
        return EtaQuotientSpec(tuple(EtaFactor(f.offset, f.step, -f.exponent) for f in self.factors))

    def build(self, order: int) -> Series:
        return eta_quotient(self, order)

    def __str__(self) -> str:
        return "*".join(str(f) for f in self.factors) if self.factors else "1"


def eta_quotient(spec: Union[EtaQuotientSpec, Sequence[EtaFactor]], order: int) -> Series:
    """
    Exact expansion of prod (q^a; q^b)_inf ^ e to q^order.

    Negative exponents invert the base product first, then raise to |e|.
    """
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(tuple(spec))
    _check_order(order)
    result = Series.one(order)
    for factor in spec.factors:
        if factor.exponent == 0:
            continue
        base = pochhammer(factor.offset, factor.step, order)
        if factor.exponent < 0:
            base = invert(base)
        result = mul(result, base ** abs(factor.exponent))
    logger.debug("Expanded eta quotient %s to q^%d", spec, order)
    return result


def eta(order: int, *triples: Tuple[int, int, int]) -> Series:
    """Shorthand: eta(N, (6, 6, 1), (1, 1, -1)) expands (q^6;q^6)/(q;q) to q^N"""
    return eta_quotient(EtaQuotientSpec.of(*triples), order)
