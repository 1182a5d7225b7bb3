"""End-to-end checks at the orders and weights the project commits to"""

import pytest

from pdsum.identities import pd_oracle, pd_series, verify
from pdsum.partitions import gen_designated, pd_count, pd_count_by_enumeration

PRODUCT_SUITE = [
    "thm1.3", "thm1.5", "eq1.5", "thm1.6", "thm2.1", "eq2.2", "eq2.3", "eq2.4", "eq2.5", "thm2.2",
    "eq2.6", "eq2.7", "eq2.8", "eq2.9", "eq2.11", "eq2.12", "eq2.13", "eq2.16", "gauss", "eq3.5",
]


@pytest.mark.parametrize("n, expected", [(4, 10), (5, 15)])
def test_pd_by_three_routes(n, expected):
    assert pd_series(n)[n] == expected
    assert pd_count(n) == expected
    assert sum(1 for _ in gen_designated(n)) == expected


def test_eta_quotient_matches_counting_to_60():
    assert pd_series(60) == pd_oracle(60)


@pytest.mark.slow
def test_eta_quotient_matches_enumeration_to_35():
    series = pd_series(35)
    for n in range(36):
        assert sum(1 for _ in gen_designated(n)) == series[n]
        assert pd_count_by_enumeration(n) == series[n]


@pytest.mark.slow
@pytest.mark.parametrize("name", PRODUCT_SUITE)
def test_product_suite_to_300(name):
    report = verify(name, order=300)
    assert report.passed, report.first_mismatch


def test_oracle_identity_at_default_order():
    assert verify("thm1.1").order == 60
    assert verify("thm1.1").passed
