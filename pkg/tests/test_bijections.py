import pytest

from pdsum.bijections import (
    CSV_HEADER,
    PartitionPair,
    delta,
    delta_inv,
    pd_rank,
    phi,
    phi_inv,
    rank_counts,
    rank_table,
)
from pdsum.exceptions import BijectionError
from pdsum.partitions import (
    DesignatedPartition,
    Partition,
    gen_designated,
    gen_partitions,
    not_pm1_mod6,
    pd_count,
    pd_pair_count,
)
from tests.data import RANK_CLASSES, RANK_TABLE_5


@pytest.mark.parametrize("gamma, beta", [
    ("1+1", "2"),
    ("1+1+1", "3"),
    ("1+1+1+1+1", "3+2"),
    ("3+3", "3+3"),
    ("3+3+3", "9"),
    ("2+2+2+2+2", "6+4"),
])
def test_phi_examples(gamma, beta):
    assert str(phi(Partition.parse(gamma))) == beta
    assert str(phi_inv(Partition.parse(beta))) == gamma


def test_phi_needs_repeated_parts():
    with pytest.raises(BijectionError):
        phi(Partition.parse("2+2+1"))


def test_phi_inv_rejects_parts_congruent_to_pm1():
    with pytest.raises(BijectionError):
        phi_inv(Partition.parse("5"))


def test_pair_rejects_bad_beta():
    with pytest.raises(BijectionError):
        PartitionPair(Partition.parse("2"), Partition.parse("7"))


@pytest.mark.parametrize("n", range(0, 21))
def test_phi_round_trip(n):
    for gamma in gen_partitions(n, min_mult=2):
        beta = phi(gamma)
        assert beta.weight == n
        assert all(not_pm1_mod6(size) for size in beta.sizes)
        assert phi_inv(beta) == gamma
    for beta in gen_partitions(n, not_pm1_mod6):
        assert phi(phi_inv(beta)) == beta


@pytest.mark.parametrize("n", range(0, 13))
def test_delta_round_trip(n):
    pairs = set()
    for lam in gen_designated(n):
        pair = delta(lam)
        assert pair.weight == n
        assert delta_inv(pair) == lam
        pairs.add(pair)
    assert len(pairs) == pd_pair_count(n)


def test_rank_table_for_five():
    assert [record.to_row() for record in rank_table(5)] == RANK_TABLE_5
    assert CSV_HEADER == ("lambda", "alpha", "beta", "rank", "rank_mod3")


def test_pair_text_form():
    record = rank_table(5)[13]
    assert str(record.pair) == "(1, 2+2)"
    assert record.to_dict() == {'lambda': "1+1+1+1'+1", 'alpha': "1", 'beta': "2+2", 'rank': -2, 'rank_mod3': 1}


def test_pd_rank():
    assert pd_rank(DesignatedPartition.parse("2'+2+1'")) == 2
    assert pd_rank(DesignatedPartition.parse("1+1+1+1'+1")) == -2


def test_rank_counts_for_five():
    counts = rank_counts(5)
    assert counts.by_rank == ((-2, 1), (-1, 4), (0, 5), (1, 4), (2, 1))
    assert counts.mod3 == (5, 5, 5)
    assert counts.total == 15
    assert counts.is_equidistributed()
    assert counts.to_dict()['by_rank'] == {"-2": 1, "-1": 4, "0": 5, "1": 4, "2": 1}


def test_rank_counts_other_residues_are_not_equal():
    assert rank_counts(0).mod3 == (1, 0, 0)
    assert not rank_counts(4).is_equidistributed()


@pytest.mark.parametrize("n", [2, 5, 8, 11, 14])
def test_rank_equidistribution(n):
    assert rank_counts(n).mod3 == RANK_CLASSES[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [17, 20, 23, 26, 29, 32, 35])
def test_rank_equidistribution_exhaustive(n):
    assert rank_counts(n).mod3 == RANK_CLASSES[n]


@pytest.mark.slow
def test_round_trips_at_acceptance_weights():
    for n in range(21, 31):
        for gamma in gen_partitions(n, min_mult=2):
            assert phi_inv(phi(gamma)) == gamma
    for n in range(13, 26):
        for lam in gen_designated(n):
            assert delta_inv(delta(lam)) == lam


@pytest.mark.parametrize("n", range(13))
def test_rank_counts_total_pd(n):
    counts = rank_counts(n)
    assert counts.total == sum(counts.mod3) == pd_count(n)


@pytest.mark.slow
def test_phi_inverse_round_trip_to_30():
    for n in range(31):
        for beta in gen_partitions(n, not_pm1_mod6):
            assert phi(phi_inv(beta)) == beta


@pytest.mark.slow
def test_delta_inverse_round_trip_to_25():
    betas = [list(gen_partitions(k, not_pm1_mod6)) for k in range(26)]
    for weight in range(26):
        seen = 0
        for k in range(weight + 1):
            for alpha in gen_partitions(weight - k):
                for beta in betas[k]:
                    pair = PartitionPair(alpha, beta)
                    assert delta(delta_inv(pair)) == pair
                    seen += 1
        assert seen == pd_count(weight)


@pytest.mark.parametrize("n", [0, 5, 8, 11])
def test_rank_counts_from_table_records(n):
    assert rank_counts(n, rank_table(n)) == rank_counts(n)
