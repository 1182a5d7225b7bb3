"""
pdsum Bijections Module
MacMahon's bijection phi, the designated-summands bijection delta, and the pd-rank

phi maps partitions with no part appearing exactly once onto partitions
into parts not congruent to +-1 mod 6. delta splits a designated partition
into a pair (alpha, beta): alpha is unrestricted, beta = phi(gamma) where
gamma collects the blocks whose designated copy is not the first one.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from pdsum.exceptions import BijectionError
from pdsum.partitions import DesignatedPartition, Partition, gen_designated, not_pm1_mod6

logger = logging.getLogger(__name__)

CSV_HEADER = ("lambda", "alpha", "beta", "rank", "rank_mod3")


@dataclass(frozen=True)
class PartitionPair:
    """(alpha, beta) with beta into parts not congruent to +-1 mod 6"""
    alpha: Partition
    beta: Partition

    def __post_init__(self):
        bad = [size for size in self.beta.sizes if not not_pm1_mod6(size)]
        if bad:
            raise BijectionError(f"beta contains part {bad[0]}, which is congruent to +-1 mod 6")

    @property
    def weight(self) -> int:
        return self.alpha.weight + self.beta.weight

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


@dataclass(frozen=True)
class RankRecord:
    """One row of a rank table"""
    lam: DesignatedPartition
    pair: PartitionPair
    rank: int
    rank_mod3: int

    def to_row(self) -> Tuple[str, str, str, int, int]:
        return (str(self.lam), str(self.pair.alpha), str(self.pair.beta), self.rank, self.rank_mod3)

    def to_dict(self) -> dict:
        return {
            'lambda': str(self.lam),
            'alpha': str(self.pair.alpha),
            'beta': str(self.pair.beta),
            'rank': self.rank,
            'rank_mod3': self.rank_mod3,
        }


@dataclass(frozen=True)
class RankCounts:
    """Distribution of the pd-rank over the designated partitions of n"""
    n: int
    by_rank: Tuple[Tuple[int, int], ...]
    mod3: Tuple[int, int, int]

    @property
    def total(self) -> int:
        return sum(count for _, count in self.by_rank)

    def is_equidistributed(self) -> bool:
        return self.mod3[0] == self.mod3[1] == self.mod3[2]

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'by_rank': {str(rank): count for rank, count in self.by_rank},
            'mod3': list(self.mod3),
            'total': self.total,
        }


def _split_multiplicity(size: int, mult: int) -> Tuple[int, int]:
    """m = s + t with s in {0, 3} and t even; needs m >= 2"""
    if mult < 2:
        raise BijectionError(f"part {size} appears exactly once; phi needs every multiplicity >= 2")
    return (0, mult) if mult % 2 == 0 else (3, mult - 3)


def phi(gamma: Partition) -> Partition:
    """
    MacMahon's bijection on a partition with every multiplicity >= 2.

    For each size j with multiplicity m = s + t: s = 3 contributes one part 3j;
    the even part t contributes t/2 parts 2j when j is not a multiple of 3,
    and t parts j otherwise.
    """
    out: Counter = Counter()
    for size, mult in gamma.items:
        s, t = _split_multiplicity(size, mult)
        if s:
            out[3 * size] += s // 3
        if t:
            if size % 3:
                out[2 * size] += t // 2
            else:
                out[size] += t
    return Partition.from_multiplicities(out)


def phi_inv(beta: Partition) -> Partition:
    """
    Inverse of phi.

    A part c divisible by 3 with odd multiplicity carries the s-triple of c/3;
    the remaining even count returns to c itself. Parts c = 2j with j not a
    multiple of 3 double back into 2b copies of j.
    """
    out: Counter = Counter()
    for size, mult in beta.items:
        if not not_pm1_mod6(size):
            raise BijectionError(f"part {size} is congruent to +-1 mod 6 and has no preimage under phi")
        if size % 3 == 0:
            if mult % 2:
                out[size // 3] += 3
                mult -= 1
            if mult:
                out[size] += mult
        else:
            out[size // 2] += 2 * mult
    return Partition.from_multiplicities(out)


def delta(lam: DesignatedPartition) -> PartitionPair:
    """
    Split a designated partition into (alpha, beta).

    A block of m copies of t designated at index i goes wholly to alpha when
    i = 1; otherwise i copies go to gamma and m - i to alpha. beta = phi(gamma).
    """
    alpha: Dict[int, int] = {}
    gamma: Dict[int, int] = {}
    for (size, mult), (_, index) in zip(lam.base.items, lam.designated):
        if index == 1:
            alpha[size] = mult
        else:
            gamma[size] = index
            if mult > index:
                alpha[size] = mult - index
    return PartitionPair(Partition.from_multiplicities(alpha), phi(Partition.from_multiplicities(gamma)))


def delta_inv(pair: PartitionPair) -> DesignatedPartition:
    """
    Rebuild the designated partition from (alpha, beta).

    With gamma = phi_inv(beta), size t gets i + j copies (i from gamma, j from
    alpha), designated at index i when i >= 2 and at index 1 otherwise.
    """
    gamma = phi_inv(pair.beta).multiplicities
    alpha = pair.alpha.multiplicities
    mults: Dict[int, int] = {}
    designated: Dict[int, int] = {}
    for size in set(gamma) | set(alpha):
        i = gamma.get(size, 0)
        j = alpha.get(size, 0)
        if i == 1:
            raise BijectionError(f"phi_inv produced a single copy of {size}")
        mults[size] = i + j
        designated[size] = i if i >= 2 else 1
    return DesignatedPartition.from_maps(mults, designated)


def pd_rank(lam: DesignatedPartition) -> int:
    """Even parts of alpha minus even parts of beta, where (alpha, beta) = delta(lam)"""
    pair = delta(lam)
    return pair.alpha.even_length() - pair.beta.even_length()


def rank_record(lam: DesignatedPartition) -> RankRecord:
    pair = delta(lam)
    rank = pair.alpha.even_length() - pair.beta.even_length()
    return RankRecord(lam, pair, rank, rank % 3)


def iter_rank_records(n: int) -> Iterator[RankRecord]:
    for lam in gen_designated(n):
        yield rank_record(lam)


def rank_table(n: int) -> List[RankRecord]:
    """Every designated partition of n with its pair and pd-rank, in canonical order"""
    return list(iter_rank_records(n))


def rank_counts(n: int, records: Optional[Iterable[RankRecord]] = None) -> RankCounts:
    """
    Exhaustive pd-rank distribution of weight n and its classes mod 3.

    Pass the records of rank_table(n) to tally them instead of enumerating again.
    """
    if records is None:
        records = iter_rank_records(n)
    by_rank: Counter = Counter(record.rank for record in records)
    mod3 = [0, 0, 0]
    for rank, count in by_rank.items():
        mod3[rank % 3] += count
    logger.debug("pd-rank classes for n=%d: %s", n, mod3)
    return RankCounts(n, tuple(sorted(by_rank.items())), (mod3[0], mod3[1], mod3[2]))
