import pytest

from pdsum.eisenstein import (
    ONE,
    ZERO,
    EisensteinInt,
    EisensteinSeries,
    LaurentZSeries,
    divide_z_factors,
    twisted_pochhammer,
    z_rows,
)
from pdsum.exceptions import SeriesError
from pdsum.series import Series, pochhammer

ZETA = EisensteinInt.zeta_power(1)


def test_cube_root_of_unity_arithmetic():
    assert ZETA * ZETA == EisensteinInt(-1, -1)
    assert ZETA * ZETA * ZETA == ONE
    assert ONE + ZETA + ZETA * ZETA == ZERO
    assert EisensteinInt.zeta_power(-1) == ZETA * ZETA
    assert 2 * ZETA == EisensteinInt(0, 2)
    assert (ZETA + 3).is_rational() is False


@pytest.mark.parametrize("value, text", [
    (EisensteinInt(1, -2), "1 - 2ζ"),
    (EisensteinInt(0, 1), "ζ"),
    (EisensteinInt(0, -1), "-ζ"),
    (EisensteinInt(4, 0), "4"),
    (EisensteinInt(-1, 3), "-1 + 3ζ"),
])
def test_text_form(value, text):
    assert str(value) == text


def test_twisted_pochhammer_inverse():
    for c in (ONE, ZETA, ZETA * ZETA):
        product = twisted_pochhammer(c, 2, 2, 30) * twisted_pochhammer(c, 2, 2, 30, inverse=True)
        assert product == EisensteinSeries.one(30)


def test_twisted_pochhammer_at_one_is_rational():
    assert twisted_pochhammer(ONE, 1, 2, 25).rational_part() == pochhammer(1, 2, 25)


def test_series_invert_and_rational_part():
    s = twisted_pochhammer(ZETA, 1, 1, 20)
    assert s * s.invert() == EisensteinSeries.one(20)
    assert not s.is_rational()
    with pytest.raises(SeriesError):
        s.rational_part()


def test_mixed_product_with_integer_series():
    s = EisensteinSeries.one(5) * Series.from_coeffs([1, 2], 5)
    assert s.rational_part() == Series.from_coeffs([1, 2], 5)


def test_order_mismatch():
    with pytest.raises(SeriesError):
        EisensteinSeries.one(3) + EisensteinSeries.one(4)


def test_divide_z_factors_geometric_series():
    # 1 / (1 - z q)(1 - z q^2)... counts partitions by number of parts
    rows = divide_z_factors(z_rows(Series.one(5)), 1, 1, 1)
    series = LaurentZSeries.from_rows(rows, 5)
    assert series.coefficient(4) == {1: 1, 2: 2, 3: 1, 4: 1}
    assert series.total(5) == 7
    assert series.mod_classes(5) == (2, 2, 3)


def test_laurent_rejects_wide_exponents():
    with pytest.raises(SeriesError):
        LaurentZSeries(((), ((2, 1),)), 1)


def test_specialize_at_zeta():
    series = LaurentZSeries.from_rows([{0: 1}, {1: 1, -1: 1}, {2: 1, 0: 1, -2: 1}], 2)
    special = series.specialize_at_zeta()
    assert special[0] == ONE
    assert special[1] == ZETA + ZETA * ZETA
    assert special[2] == ZERO
