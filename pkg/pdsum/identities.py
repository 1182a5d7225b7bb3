"""
pdsum Identities Module
Registry of q-series identities for PD(n), coefficient-wise verification,
exponent extraction and congruence checks

Each registered identity carries one or more forms (label, lhs, rhs); a form
builds both sides to a common order and compares them exactly. Identities
whose natural statement divides by a series with constant term 3 are stated
cross-multiplied so every coefficient stays an integer.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, partial
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from pdsum.config import Settings
from pdsum.eisenstein import (
    EisensteinInt,
    EisensteinSeries,
    LaurentZSeries,
    divide_z_factors,
    twisted_pochhammer,
    z_rows,
)
from pdsum.exceptions import SeriesError, UnknownIdentityError
from pdsum.partitions import pd_counts
from pdsum.series import (
    EtaQuotientSpec,
    Series,
    at_power,
    binomial_power,
    dissect,
    eta,
    neg_pochhammer,
    pochhammer,
    sieve,
)
from pdsum.theta import a_c_relation, a_dissection, a_series, c_dissection, c_product, c_series

logger = logging.getLogger(__name__)

AnySeries = Union[Series, EisensteinSeries]
Builder = Callable[[int], AnySeries]

PD_SPEC = EtaQuotientSpec.of((6, 6, 1), (1, 1, -1), (2, 2, -1), (3, 3, -1))


class VerificationStatus(Enum):
    """Outcome of verifying one identity"""
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class IdentityForm:
    """One displayed form of an identity: two builders compared to a common order"""
    label: str
    lhs: Builder
    rhs: Builder


@dataclass(frozen=True)
class IdentityCase:
    """
    A registered identity.

    default_order None means the configured product order (PD_ORDER);
    oracle cases use the oracle order (PD_ORACLE_ORDER) instead.
    """
    name: str
    forms: Tuple[IdentityForm, ...]
    description: str
    default_order: Optional[int] = None
    oracle: bool = False

    def resolve_order(self, settings: Optional[Settings] = None) -> int:
        settings = settings or Settings()
        if self.oracle:
            return settings.oracle_order
        if self.default_order is not None:
            return self.default_order
        return settings.order


@dataclass
class VerificationReport:
    """Result of verify(); first_mismatch is None when every form agrees"""
    name: str
    order: int
    status: VerificationStatus
    forms: Tuple[str, ...]
    first_mismatch: Optional[Dict[str, Any]] = None
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is VerificationStatus.PASS

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization"""
        return {
            'name': self.name,
            'order': self.order,
            'status': self.status.value,
            'forms': list(self.forms),
            'first_mismatch': self.first_mismatch,
            'elapsed_ms': self.elapsed_ms,
        }


@dataclass(frozen=True)
class CongruenceReport:
    """Divisibility of the coefficients of q^(m*n + r) by a fixed divisor"""
    modulus: int
    residue: int
    divisor: int
    order: int
    checked: int
    first_violation: Optional[int] = None
    value: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.first_violation is None

    def to_dict(self) -> dict:
        return {
            'modulus': self.modulus,
            'residue': self.residue,
            'divisor': self.divisor,
            'order': self.order,
            'checked': self.checked,
            'passed': self.passed,
            'first_violation': self.first_violation,
            'value': self.value,
        }


@dataclass(frozen=True)
class ExponentRow:
    n: int
    exponent: int
    expected: Optional[int]
    ok: bool

    def to_dict(self) -> dict:
        return {'n': self.n, 'exponent': self.exponent, 'expected': self.expected, 'ok': self.ok}


@dataclass(frozen=True)
class ExponentReport:
    """
    Exponents e(n) with sum PD(3n) q^n = prod (1 - q^n)^(-e(n)).

    Odd n are expected to follow 5, 2, 5 for n = 1, 3, 5 mod 6; even n are
    expected to equal the exponents of F at n / 2.
    """
    order: int
    rows: Tuple[ExponentRow, ...]
    reconstruction_ok: bool

    @property
    def passed(self) -> bool:
        return self.reconstruction_ok and all(row.ok for row in self.rows)

    def to_dict(self) -> dict:
        return {
            'order': self.order,
            'passed': self.passed,
            'reconstruction_ok': self.reconstruction_ok,
            'exponents': [row.to_dict() for row in self.rows],
        }


# -- shared building blocks ------------------------------------------------

@lru_cache(maxsize=16)
def pd_series(order: int) -> Series:
    """sum PD(n) q^n from (q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3))"""
    return PD_SPEC.build(order)


def pd_oracle(order: int) -> Series:
    """sum PD(n) q^n counted directly from multiplicities"""
    return Series.from_coeffs(pd_counts(order), order)


def pd_component(order: int, r: int) -> Series:
    """sum PD(3n + r) q^n to q^order"""
    return dissect(pd_series(3 * order + r), 3, r)


@lru_cache(maxsize=16)
def cubic_x(order: int) -> Series:
    """x(q) = (q;q^2) / (q^3;q^6)^3, the cubic continued fraction without its q^(1/3)"""
    return eta(order, (1, 2, 1), (3, 6, -3))


def x_bracket(order: int) -> Series:
    """1/x^2(q) - 2q x(q)"""
    x = cubic_x(order)
    inverse = x.invert()
    return inverse * inverse - (2 * x).mul_q(1)


def f_of_x(order: int) -> Series:
    """F as a series in its own variable; F(q^2) is the bracket of the PD(3n) formula"""
    first = eta(order, (2, 2, 6), (3, 3, 4), (1, 1, -10), (6, 6, -2))
    second = eta(order, (6, 6, 6), (1, 1, -6), (2, 2, -2))
    return first + (3 * second).mul_q(1)


def f_of_q2(order: int) -> Series:
    """F(q^2) written directly as eta quotients in q"""
    first = eta(order, (4, 4, 6), (6, 6, 4), (2, 2, -10), (12, 12, -2))
    second = eta(order, (12, 12, 6), (2, 2, -6), (4, 4, -2))
    return first + (3 * second).mul_q(2)


def odd_prefactor(order: int) -> Series:
    """1 / ((q;q^6)^5 (q^3;q^6)^2 (q^5;q^6)^5)"""
    return eta(order, (1, 6, -5), (3, 6, -2), (5, 6, -5))


def chan_pieces(order: int) -> Tuple[Series, Series, Series]:
    """
    The three brace terms with x = x(q^3):
    1/x^2 - 2q^3 x,  q (1/x + 4q^3 x^2),  3q^2
    """
    x3 = at_power(cubic_x, 3, order)
    inverse = x3.invert()
    first = inverse * inverse - (2 * x3).mul_q(3)
    second = (inverse + (4 * (x3 * x3)).mul_q(3)).mul_q(1)
    third = Series.monomial(2, order, 3)
    return first, second, third


def chan_prefactor(order: int) -> Series:
    """(q^9;q^9)^3 (q^18;q^18)^3 / ((q^3;q^3)^5 (q^6;q^6)^3)"""
    return eta(order, (9, 9, 3), (18, 18, 3), (3, 3, -5), (6, 6, -3))


def triangular_series(order: int) -> Series:
    """sum_{n>=0} q^(n(n+1)/2)"""
    terms = {}
    n = 0
    while n * (n + 1) // 2 <= order:
        terms[n * (n + 1) // 2] = 1
        n += 1
    return Series.from_terms(terms, order)


def triangular_residues(limit: int) -> set:
    """Residues of n(n+1)/2 mod 3 for 0 <= n <= limit"""
    return {(n * (n + 1) // 2) % 3 for n in range(limit + 1)}


def three_q_over_c(order: int) -> Series:
    """3q / c(q) = q (q;q) / (q^3;q^3)^3"""
    return eta(order, (1, 1, 1), (3, 3, -3)).mul_q(1)


def c_cubed_inverse(order: int) -> Series:
    """27 / c(q)^3"""
    return eta(order, (1, 1, 3), (3, 3, -9))


def c_squared_inverse(order: int) -> Series:
    """9 / c(q)^2"""
    return eta(order, (1, 1, 2), (3, 3, -6))


def _eta_term(*triples: Tuple[int, int, int], coeff: int = 1, shift: int = 0) -> Builder:
    def build(order: int) -> Series:
        return (coeff * eta(order, *triples)).mul_q(shift)
    return build


def _zero(order: int) -> Series:
    return Series.zero(order)


# -- rank generating functions ---------------------------------------------

def rank_gf_bivariate(order: int) -> LaurentZSeries:
    """
    sum N_d(m; n) z^m q^n to q^order.

    1 / ((zq^2;q^2) (q;q^2) (z^-1 q^2;q^2) (q^3;q^6)): even parts of alpha
    carry z, even parts of beta carry z^-1, odd parts carry nothing.
    """
    rows = z_rows(eta(order, (1, 2, -1), (3, 6, -1)))
    divide_z_factors(rows, 1, 2, 2)
    divide_z_factors(rows, -1, 2, 2)
    logger.debug("Built bivariate rank series to q^%d", order)
    return LaurentZSeries.from_rows(rows, order)


def rank_gf_at_one(order: int) -> Series:
    """The bivariate rank series at z = 1"""
    bivariate = rank_gf_bivariate(order)
    return Series.from_coeffs((bivariate.total(n) for n in range(order + 1)), order)


def rank_gf_at_zeta(order: int) -> EisensteinSeries:
    """The rank generating function at z = w, built from its four product families over Z[w]"""
    zeta = EisensteinInt.zeta_power(1)
    base = EisensteinSeries.from_series(eta(order, (1, 2, -1), (3, 6, -1)))
    base = base * twisted_pochhammer(zeta, 2, 2, order, inverse=True)
    return base * twisted_pochhammer(zeta * zeta, 2, 2, order, inverse=True)


def rational_zeta_form(order: int) -> Series:
    """(q^2;q^2) / (q;q^2) * (-q^3;q^3) / (q^6;q^6), which carries no w"""
    return eta(order, (2, 2, 1), (1, 2, -1), (6, 6, -1)) * neg_pochhammer(3, 3, order)


def _zeta_middle_form(order: int) -> EisensteinSeries:
    """(-q^3;q^3) / ((q;q^2) (wq^2;q^2) (w^-1 q^2;q^2))"""
    zeta = EisensteinInt.zeta_power(1)
    base = EisensteinSeries.from_series(neg_pochhammer(3, 3, order) * eta(order, (1, 2, -1)))
    base = base * twisted_pochhammer(zeta, 2, 2, order, inverse=True)
    return base * twisted_pochhammer(zeta * zeta, 2, 2, order, inverse=True)


def _gauss_form(order: int) -> Series:
    return neg_pochhammer(3, 3, order) * eta(order, (6, 6, -1)) * triangular_series(order)


# -- exponent extraction and congruences -----------------------------------

def extract_exponents(f: Series, order: Optional[int] = None) -> Tuple[int, ...]:
    """
    Exponents e(1..N) with f = prod (1 - q^n)^(-e(n)) to q^N.

    Peeling: e(n) is the coefficient of q^n in the running quotient G, then
    G <- G (1 - q^n)^e(n), which clears q^n. Index 0 of the result is 0.
    """
    if f.coeffs[0] != 1:
        raise SeriesError(f"exponent extraction needs constant term 1, got {f.coeffs[0]}")
    if order is not None:
        f = f.truncate(order)
    n_max = f.order
    exponents = [0] * (n_max + 1)
    g = f
    for n in range(1, n_max + 1):
        e = g[n]
        if e:
            exponents[n] = e
            g = g * binomial_power(n, e, n_max)
    return tuple(exponents)


def reconstruct(exponents: Sequence[int], order: int) -> Series:
    """prod_{n>=1} (1 - q^n)^(-e(n)) to q^order; exponents[0] is ignored"""
    result = Series.one(order)
    for n in range(1, min(len(exponents) - 1, order) + 1):
        if exponents[n]:
            result = result * binomial_power(n, -exponents[n], order)
    return result


def expected_odd_exponent(n: int) -> Optional[int]:
    """5 for n = 1, 5 mod 6; 2 for n = 3 mod 6; None for even n"""
    return {1: 5, 3: 2, 5: 5}.get(n % 6)


def exponent_report(order: int) -> ExponentReport:
    """Extract e(1..order) for sum PD(3n) q^n and check the odd pattern and the even exponents of F"""
    if order < 1:
        raise SeriesError(f"exponent order must be at least 1, got {order}")
    f = pd_component(order, 0)
    exponents = extract_exponents(f)
    f_exponents = extract_exponents(f_of_x(order // 2))
    rows = []
    for n in range(1, order + 1):
        expected = expected_odd_exponent(n) if n % 2 else f_exponents[n // 2]
        rows.append(ExponentRow(n, exponents[n], expected, exponents[n] == expected))
    reconstruction_ok = reconstruct(exponents, order) == f
    bad = [row.n for row in rows if not row.ok]
    if bad:
        logger.warning("Exponent pattern fails at n=%s", bad[:5])
    return ExponentReport(order, tuple(rows), reconstruction_ok)


def congruence_check(s: Series, m: int, r: int, divisor: int) -> CongruenceReport:
    """Check divisor | coefficient of q^(m*n + r) for every m*n + r <= s.order"""
    if m < 1 or not 0 <= r < m:
        raise SeriesError(f"invalid residue class {r} mod {m}")
    if divisor < 2:
        raise SeriesError(f"divisor must be at least 2, got {divisor}")
    checked = 0
    for exponent in range(r, s.order + 1, m):
        checked += 1
        if s[exponent] % divisor:
            logger.warning("Congruence fails at q^%d: %d is not divisible by %d", exponent, s[exponent], divisor)
            return CongruenceReport(m, r, divisor, s.order, checked, exponent, s[exponent])
    return CongruenceReport(m, r, divisor, s.order, checked)


# -- the registry ----------------------------------------------------------

REGISTRY: Dict[str, IdentityCase] = {}


def register(name: str, description: str, *forms: IdentityForm,
             default_order: Optional[int] = None, oracle: bool = False):
    REGISTRY[name] = IdentityCase(name, tuple(forms), description, default_order, oracle)


def _pair(build: Callable[[int], Tuple[Series, Series]], side: int) -> Builder:
    return lambda order: build(order)[side]


def _form_from_pair(label: str, build: Callable[[int], Tuple[Series, Series]]) -> IdentityForm:
    return IdentityForm(label, _pair(build, 0), _pair(build, 1))


PD_3N2_FACTOR = ((3, 6, 3), (6, 6, 6), (1, 2, -5), (2, 2, -8))

register(
    "thm1.1", "sum PD(n) q^n = (q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3)), against direct counting",
    IdentityForm("oracle", pd_oracle, pd_series),
    oracle=True,
)

register(
    "thm1.3", "sum PD(3n+2) q^n = 3 (q^3;q^6)^3 (q^6;q^6)^6 / ((q;q^2)^5 (q^2;q^2)^8)",
    IdentityForm("product", lambda n: pd_component(n, 2), _eta_term(*PD_3N2_FACTOR, coeff=3)),
)

register(
    "thm1.5", "sum PD(3n) q^n = F(q^2) / ((q;q^6)^5 (q^3;q^6)^2 (q^5;q^6)^5)",
    IdentityForm("product", lambda n: pd_component(n, 0), lambda n: odd_prefactor(n) * f_of_q2(n)),
)

register(
    "eq1.5", "the bracket of the PD(3n) product is a series in q^2 equal to F(q^2)",
    IdentityForm("bracket", lambda n: pd_component(n, 0) * odd_prefactor(n).invert(), lambda n: at_power(f_of_x, 2, n)),
    IdentityForm("f-in-q2", f_of_q2, lambda n: at_power(f_of_x, 2, n)),
)

register(
    "thm1.6", "sum PD(3n+1) q^n = P (4q (q;q^2)^2 / (q^3;q^6)^6 + (q^3;q^6)^3 / (q;q^2))",
    IdentityForm(
        "product",
        lambda n: pd_component(n, 1),
        lambda n: eta(n, *PD_3N2_FACTOR) * (
            _eta_term((1, 2, 2), (3, 6, -6), coeff=4, shift=1)(n) + eta(n, (3, 6, 3), (1, 2, -1))
        ),
    ),
)

register(
    "thm2.1", "1 / ((q;q)(q^2;q^2)) as a prefactor times the x(q^3) brace",
    IdentityForm(
        "direct",
        _eta_term((1, 1, -1), (2, 2, -1)),
        lambda n: eta(n, (9, 9, 3), (18, 18, 3), (3, 3, -4), (6, 6, -4)) * sum(chan_pieces(n), Series.zero(n)),
    ),
)

register(
    "eq2.2", "sum PD(n) q^n as the brace times (q^9;q^9)^3 (q^18;q^18)^3 / ((q^3;q^3)^5 (q^6;q^6)^3)",
    IdentityForm("direct", pd_series, lambda n: chan_prefactor(n) * sum(chan_pieces(n), Series.zero(n))),
)

register(
    "eq2.3", "sum PD(3n) q^(3n) from the first brace term",
    IdentityForm("sieved", lambda n: sieve(pd_series(n), 3, 0), lambda n: chan_prefactor(n) * chan_pieces(n)[0]),
)

register(
    "eq2.4", "sum PD(3n+1) q^(3n+1) from the second brace term",
    IdentityForm("sieved", lambda n: sieve(pd_series(n), 3, 1), lambda n: chan_prefactor(n) * chan_pieces(n)[1]),
)

register(
    "eq2.5", "sum PD(3n+2) q^(3n+2) = 3q^2 times the prefactor",
    IdentityForm("sieved", lambda n: sieve(pd_series(n), 3, 2), lambda n: chan_prefactor(n) * chan_pieces(n)[2]),
)

_CF_EVEN = ((2, 2, 2), (12, 12, 6), (4, 4, -2), (6, 6, -6))
_CF_REST = ((4, 4, 6), (2, 2, -2), (6, 6, -2), (12, 12, -2))


def _cf_rhs(order: int) -> Series:
    return (3 * eta(order, *_CF_EVEN)).mul_q(2) + eta(order, *_CF_REST)


def _cf_cross_lhs(order: int) -> Series:
    x = cubic_x(order)
    return Series.one(order) - (2 * (x * x * x)).mul_q(1)


register(
    "thm2.2", "1/x^2(q) - 2q x(q) as two eta quotients",
    IdentityForm("direct", x_bracket, _cf_rhs),
    IdentityForm("cross-multiplied", _cf_cross_lhs, lambda n: cubic_x(n) * cubic_x(n) * _cf_rhs(n)),
)

register(
    "eq2.6", "c(q) = 3 (q^3;q^3)^3 / (q;q), lattice sum against product",
    IdentityForm("product", c_series, c_product),
)

register("eq2.7", "2-dissection of a(q)", _form_from_pair("dissection", a_dissection))
register("eq2.8", "2-dissection of c(q)", _form_from_pair("dissection", c_dissection))
register("eq2.9", "c(q) (a(q) - a(q^2)) = 2q c(q^2)^2", _form_from_pair("cross-multiplied", a_c_relation))


def _x_inverse_squared(order: int) -> Series:
    inverse = cubic_x(order).invert()
    return inverse * inverse


register(
    "eq2.11", "1/x^2(q) through eta quotients and c(q)^2",
    IdentityForm("product", _x_inverse_squared, _eta_term((3, 6, 6), (1, 2, -2))),
    IdentityForm("eta", _x_inverse_squared, _eta_term((2, 2, 2), (6, 6, -6), (3, 3, 6), (1, 1, -2))),
    IdentityForm(
        "c-cross-multiplied",
        lambda n: 9 * eta(n, (6, 6, 6)) * _x_inverse_squared(n),
        lambda n: eta(n, (2, 2, 2)) * c_series(n) * c_series(n),
    ),
)

register(
    "eq2.12", "2q x(q) through eta quotients and 1/c(q)",
    IdentityForm("eta", cubic_x, _eta_term((6, 6, 3), (2, 2, -1), (1, 1, 1), (3, 3, -3))),
    IdentityForm(
        "c-cross-multiplied",
        lambda n: (2 * c_series(n) * eta(n, (2, 2, 1)) * cubic_x(n)).mul_q(1),
        _eta_term((6, 6, 3), coeff=6, shift=1),
    ),
)


def _c_squared(order: int) -> Series:
    c = c_series(order)
    return c * c


def _c4(order: int) -> Series:
    return at_power(c_series, 4, order)


register(
    "eq2.13", "2-dissections of c(q)^2 and 1/x^2(q)",
    IdentityForm(
        "c-squared-even",
        lambda n: sieve(_c_squared(n), 2, 0),
        lambda n: (_c4(n) * _c4(n)).mul_q(2) + 9 * eta(n, (4, 4, 6), (6, 6, 4), (2, 2, -4), (12, 12, -2)),
    ),
    IdentityForm(
        "c-squared-odd",
        lambda n: sieve(_c_squared(n), 2, 1),
        lambda n: (6 * _c4(n) * eta(n, (4, 4, 3), (6, 6, 2), (2, 2, -2), (12, 12, -1))).mul_q(1),
    ),
    IdentityForm(
        "even",
        lambda n: sieve(_x_inverse_squared(n), 2, 0),
        lambda n: eta(n, *_CF_EVEN).mul_q(2) + eta(n, *_CF_REST),
    ),
    IdentityForm(
        "odd",
        lambda n: sieve(_x_inverse_squared(n), 2, 1),
        _eta_term((4, 4, 2), (12, 12, 2), (6, 6, -4), coeff=2, shift=1),
    ),
)

_A_ODD = ((4, 4, 2), (12, 12, 2), (2, 2, -1), (6, 6, -1))


def _two_c2_times_3q_over_c(order: int) -> Series:
    c2 = at_power(c_series, 2, order)
    return 2 * c2 * c2 * three_q_over_c(order)


register(
    "eq2.14", "q/c(q) = (a(q) - a(q^2)) / (2 c(q^2)^2), scaled by 3 and cross-multiplied",
    IdentityForm(
        "cross-multiplied",
        _two_c2_times_3q_over_c,
        lambda n: 3 * (a_series(n) - at_power(a_series, 2, n)),
    ),
)

register(
    "eq2.15", "2-dissection of q/c(q) after substituting the dissection of a(q)",
    IdentityForm(
        "substituted",
        _two_c2_times_3q_over_c,
        lambda n: 3 * (at_power(a_series, 4, n) + (6 * eta(n, *_A_ODD)).mul_q(1) - at_power(a_series, 2, n)),
    ),
    IdentityForm(
        "even",
        lambda n: 9 * sieve(three_q_over_c(n), 2, 0),
        lambda n: -(_c4(n) * _c4(n) * at_power(c_cubed_inverse, 2, n)).mul_q(2),
    ),
    IdentityForm(
        "odd",
        lambda n: sieve(three_q_over_c(n), 2, 1),
        lambda n: (eta(n, *_A_ODD) * at_power(c_squared_inverse, 2, n)).mul_q(1),
    ),
)


def _two_q_x(order: int) -> Series:
    return (2 * cubic_x(order)).mul_q(1)


register(
    "eq2.16", "2-dissection of 2q x(q)",
    IdentityForm("even", lambda n: sieve(_two_q_x(n), 2, 0), _eta_term(*_CF_EVEN, coeff=-2, shift=2)),
    IdentityForm("odd", lambda n: sieve(_two_q_x(n), 2, 1), _eta_term((4, 4, 2), (12, 12, 2), (6, 6, -4), coeff=2, shift=1)),
)

register(
    "eq2.17", "three equivalent forms of sum PD(3n) q^n in terms of x(q)",
    IdentityForm(
        "eta",
        lambda n: pd_component(n, 0),
        lambda n: eta(n, (3, 3, 3), (6, 6, 3), (1, 1, -5), (2, 2, -3)) * x_bracket(n),
    ),
    IdentityForm(
        "odd-step",
        lambda n: pd_component(n, 0),
        lambda n: eta(n, *PD_3N2_FACTOR) * x_bracket(n),
    ),
    IdentityForm(
        "mod-six",
        lambda n: pd_component(n, 0),
        lambda n: eta(n, (1, 6, -5), (3, 6, -2), (5, 6, -5), (6, 6, 6), (2, 2, -8)) * x_bracket(n),
    ),
)

register(
    "gauss", "(q^2;q^2) / (q;q^2) = sum q^(n(n+1)/2)",
    IdentityForm("triangular", _eta_term((2, 2, 1), (1, 2, -1)), triangular_series),
)

register(
    "eq3.3", "bivariate rank series at z = w against the w-specialized products",
    IdentityForm("at-zeta", lambda n: rank_gf_bivariate(n).specialize_at_zeta(), rank_gf_at_zeta),
    IdentityForm("at-one", rank_gf_at_one, pd_series),
    default_order=100,
)

register(
    "eq3.4", "the rank series at z = w simplifies to a w-free product",
    IdentityForm("middle", rank_gf_at_zeta, _zeta_middle_form),
    IdentityForm("simplified", rank_gf_at_zeta, lambda n: EisensteinSeries.from_series(rational_zeta_form(n))),
)

register(
    "eq3.5", "(-q^3;q^3) / (q^6;q^6) * sum q^(n(n+1)/2) has no q^(3n+2) terms",
    IdentityForm("gauss-form", rational_zeta_form, _gauss_form),
    IdentityForm("vanishing", lambda n: sieve(_gauss_form(n), 3, 2), _zero),
)


def _cube_roots_lhs(order: int) -> EisensteinSeries:
    zeta = EisensteinInt.zeta_power(1)
    product = twisted_pochhammer(zeta, 2, 2, order) * twisted_pochhammer(zeta * zeta, 2, 2, order)
    return product * pochhammer(2, 2, order)


register(
    "cube-roots", "(wq^2;q^2)(w^2q^2;q^2)(q^2;q^2) = (q^6;q^6)",
    IdentityForm("product", _cube_roots_lhs, lambda n: EisensteinSeries.from_series(pochhammer(6, 6, n))),
)


# -- verification ----------------------------------------------------------

def list_identities() -> List[IdentityCase]:
    return list(REGISTRY.values())


def get_identity(name: str) -> IdentityCase:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownIdentityError(name) from None


def _plain(value: Any) -> Any:
    return value if isinstance(value, int) else str(value)


def verify(name: str, order: Optional[int] = None, timing: bool = False,
           settings: Optional[Settings] = None) -> VerificationReport:
    """
    Compare both sides of every form of an identity to q^order.

    Args:
        name: Registry key, e.g. 'thm1.3'
        order: Truncation order (default: the identity's configured order)
        timing: Record elapsed_ms in the report
        settings: Source of the configured orders
    """
    case = get_identity(name)
    if order is None:
        order = case.resolve_order(settings)
    if order < 0:
        raise SeriesError(f"order must be non-negative, got {order}")
    logger.info("Verifying %s to q^%d", name, order)
    start = time.perf_counter()
    mismatch = None
    for form in case.forms:
        lhs = form.lhs(order)
        rhs = form.rhs(order)
        index = lhs.first_mismatch(rhs)
        if index is not None:
            mismatch = {'n': index, 'lhs': _plain(lhs[index]), 'rhs': _plain(rhs[index]), 'form': form.label}
            logger.warning("%s form %s differs at q^%d", name, form.label, index)
            break
    elapsed = round((time.perf_counter() - start) * 1000.0, 3) if timing else None
    status = VerificationStatus.FAIL if mismatch else VerificationStatus.PASS
    logger.info("%s: %s", name, status.value)
    return VerificationReport(name, order, status, tuple(f.label for f in case.forms), mismatch, elapsed)


def verify_many(names: Sequence[str], order: Optional[int] = None, jobs: int = 1, timing: bool = False,
                settings: Optional[Settings] = None) -> List[VerificationReport]:
    """Verify several identities; results come back in the order requested"""
    for name in names:
        get_identity(name)
    run = partial(verify, order=order, timing=timing, settings=settings)
    if jobs <= 1 or len(names) <= 1:
        return [run(name) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, names))
