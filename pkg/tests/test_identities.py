import random

import pytest

from pdsum import identities
from pdsum.bijections import rank_counts
from pdsum.config import Settings
from pdsum.exceptions import SeriesError, UnknownIdentityError
from pdsum.identities import (
    IdentityCase,
    IdentityForm,
    VerificationStatus,
    congruence_check,
    exponent_report,
    extract_exponents,
    f_of_x,
    get_identity,
    list_identities,
    pd_component,
    pd_series,
    rank_gf_at_zeta,
    rank_gf_bivariate,
    rational_zeta_form,
    reconstruct,
    triangular_residues,
    verify,
    verify_many,
)
from pdsum.series import Series, eta
from tests.data import F_EXPONENTS, PD_3N2_VALUES, PD_3N_EXPONENTS, PD_VALUES, RANK_CLASSES

ALL_NAMES = [case.name for case in list_identities()]


def test_registry_contents():
    expected = {
        "thm1.1", "thm1.3", "thm1.5", "eq1.5", "thm1.6", "thm2.1", "eq2.2", "eq2.3", "eq2.4", "eq2.5",
        "thm2.2", "eq2.6", "eq2.7", "eq2.8", "eq2.9", "eq2.11", "eq2.12", "eq2.13", "eq2.14", "eq2.15",
        "eq2.16", "eq2.17", "gauss", "eq3.3", "eq3.4", "eq3.5", "cube-roots",
    }
    assert set(ALL_NAMES) == expected
    assert all(case.forms for case in list_identities())


@pytest.mark.parametrize("name", ALL_NAMES)
@pytest.mark.parametrize("order", [0, 1, 40])
def test_identity_holds_at_low_order(name, order):
    report = verify(name, order=order)
    assert report.first_mismatch is None
    assert report.status is VerificationStatus.PASS
    assert report.order == order


@pytest.mark.slow
@pytest.mark.parametrize("name", ALL_NAMES)
def test_identity_holds_at_default_order(name):
    assert verify(name).passed


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError) as excinfo:
        get_identity("thm9.9")
    assert isinstance(excinfo.value, KeyError)
    assert str(excinfo.value) == "unknown identity: 'thm9.9'"
    with pytest.raises(UnknownIdentityError):
        verify_many(["thm1.3", "nope"], order=5)


def test_failing_identity_reports_first_mismatch(monkeypatch):
    broken = IdentityCase(
        "broken",
        (
            IdentityForm("fine", pd_series, pd_series),
            IdentityForm("shifted", pd_series, lambda n: pd_series(n) + Series.monomial(3, n)),
        ),
        "PD against PD plus q^3",
    )
    monkeypatch.setitem(identities.REGISTRY, "broken", broken)
    report = verify("broken", order=10)
    assert report.status is VerificationStatus.FAIL
    assert not report.passed
    assert report.first_mismatch == {'n': 3, 'lhs': 5, 'rhs': 6, 'form': 'shifted'}
    assert report.to_dict()['status'] == "fail"


def test_timing_is_opt_in():
    assert verify("gauss", order=10).elapsed_ms is None
    assert verify("gauss", order=10, timing=True).elapsed_ms >= 0


def test_resolve_order():
    settings = Settings(order=50, oracle_order=20)
    assert get_identity("thm1.1").resolve_order(settings) == 20
    assert get_identity("thm1.3").resolve_order(settings) == 50
    assert get_identity("eq3.3").resolve_order(settings) == 100
    assert verify("thm1.1", settings=settings).order == 20


def test_verify_many_keeps_request_order():
    names = ["gauss", "thm1.3", "eq2.6"]
    reports = verify_many(names, order=20, jobs=2)
    assert [r.name for r in reports] == names
    assert all(r.passed for r in reports)


def test_pd_series_values():
    assert list(pd_series(10).coeffs) == PD_VALUES
    assert list(pd_component(6, 2).coeffs) == PD_3N2_VALUES


def test_extract_exponents_of_pd_3n():
    assert extract_exponents(pd_component(6, 0)) == (0,) + PD_3N_EXPONENTS
    assert extract_exponents(f_of_x(4)) == (0,) + F_EXPONENTS


def test_extract_exponents_needs_unit_constant():
    with pytest.raises(SeriesError):
        extract_exponents(Series.from_coeffs([3, 1], 4))


def test_reconstruct_inverts_extraction():
    f = eta(40, (2, 2, 3), (5, 5, -2))
    assert reconstruct(extract_exponents(f), 40) == f
    assert extract_exponents(f, order=10) == extract_exponents(f.truncate(10))


def test_exponent_report():
    report = exponent_report(60)
    assert report.passed
    assert report.reconstruction_ok
    assert [row.exponent for row in report.rows[:6]] == list(PD_3N_EXPONENTS)
    assert report.rows[0].expected == 5
    assert report.rows[1].expected == F_EXPONENTS[0]
    assert report.to_dict()['exponents'][2] == {'n': 3, 'exponent': 2, 'expected': 2, 'ok': True}


@pytest.mark.slow
def test_exponent_pattern_to_185():
    report = exponent_report(186)
    assert report.passed


def test_exponent_report_rejects_zero_order():
    with pytest.raises(SeriesError):
        exponent_report(0)


def test_congruence_sweep_to_999():
    report = congruence_check(pd_series(999), 3, 2, 3)
    assert report.passed
    assert report.checked == 333
    assert report.first_violation is None


def test_congruence_violation():
    report = congruence_check(pd_series(30), 3, 1, 3)
    assert not report.passed
    assert report.first_violation == 1
    assert report.value == 1
    assert report.checked == 1


def test_congruence_rejects_bad_class():
    with pytest.raises(SeriesError):
        congruence_check(pd_series(10), 3, 3, 3)
    with pytest.raises(SeriesError):
        congruence_check(pd_series(10), 3, 2, 1)


def test_bivariate_rank_series_matches_enumeration():
    bivariate = rank_gf_bivariate(12)
    for n in range(13):
        counts = rank_counts(n)
        assert bivariate.coefficient(n) == dict(counts.by_rank)
        assert bivariate.total(n) == counts.total


def test_bivariate_rank_classes():
    bivariate = rank_gf_bivariate(101)
    for n in range(2, 102, 3):
        classes = bivariate.mod_classes(n)
        assert classes[0] == classes[1] == classes[2]
        if n in RANK_CLASSES:
            assert classes == RANK_CLASSES[n]


def test_rank_series_at_zeta_is_rational_and_sparse():
    at_zeta = rank_gf_at_zeta(150)
    assert at_zeta.is_rational()
    rational = at_zeta.rational_part()
    assert rational == rational_zeta_form(150)
    assert all(rational[n] == 0 for n in range(2, 151, 3))
    assert rank_gf_bivariate(60).specialize_at_zeta() == rank_gf_at_zeta(60)


def test_triangular_residues():
    assert triangular_residues(100) == {0, 1}


def test_extract_exponents_of_geometric_series():
    assert extract_exponents(Series.from_coeffs([1] * 9, 8)) == (0, 1, 0, 0, 0, 0, 0, 0, 0)


@pytest.mark.parametrize("seed", range(5))
def test_extraction_inverts_reconstruction(seed):
    rng = random.Random(seed)
    order = rng.randint(10, 50)
    exponents = (0,) + tuple(rng.randint(-5, 5) for _ in range(order))
    assert extract_exponents(reconstruct(exponents, order)) == exponents


def test_triangular_residues_to_ten_thousand():
    assert triangular_residues(10 ** 4) == {0, 1}


def test_congruence_trivial_cases():
    assert congruence_check(Series.zero(50), 4, 1, 7).passed
    report = congruence_check(pd_series(30), 3, 0, 3)
    assert report.first_violation == 0
    assert report.value == 1


@pytest.mark.slow
def test_bivariate_rank_series_matches_enumeration_to_25():
    bivariate = rank_gf_bivariate(25)
    for n in range(13, 26):
        assert bivariate.coefficient(n) == dict(rank_counts(n).by_rank)
