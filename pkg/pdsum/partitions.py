"""
pdsum Partitions Module
Exact enumeration of partitions and partitions with designated summands

A partition is stored as a size -> multiplicity map. A designated partition
additionally records, for each occurring size, which copy (1-based) is
marked. Enumeration is streaming and follows one canonical order: part
lists in weakly decreasing form, largest list first (reverse lexicographic),
with designation choices varying fastest on the smallest size and counting
upwards from 1.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from pdsum.exceptions import PartitionError

logger = logging.getLogger(__name__)

EMPTY_TEXT = "∅"

PartFilter = Callable[[int], bool]


def all_sizes(size: int) -> bool:
    return True


def not_pm1_mod6(size: int) -> bool:
    """Sizes allowed in beta: size mod 6 in {0, 2, 3, 4}"""
    return size % 6 not in (1, 5)


@dataclass(frozen=True)
class Partition:
    """
    A partition as (size, multiplicity) pairs, sizes strictly decreasing.

    Use Partition.from_multiplicities or Partition.from_parts rather than the
    raw constructor; both normalise the ordering.
    """
    items: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = None
        for size, mult in self.items:
            if not isinstance(size, int) or size < 1:
                raise PartitionError(f"part sizes must be positive integers, got {size!r}")
            if not isinstance(mult, int) or mult < 1:
                raise PartitionError(f"multiplicity of {size} must be a positive integer, got {mult!r}")
            if previous is not None and size >= previous:
                raise PartitionError("sizes must be listed in strictly decreasing order")
            previous = size

    @classmethod
    def from_multiplicities(cls, mults: Mapping[int, int]) -> "Partition":
        """Build from a size -> multiplicity map; zero multiplicities are dropped"""
        for size, mult in mults.items():
            if mult < 0:
                raise PartitionError(f"negative multiplicity {mult} for size {size}")
        return cls(tuple(sorted(((s, m) for s, m in mults.items() if m), reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        counts: Dict[int, int] = {}
        for part in parts:
            counts[part] = counts.get(part, 0) + 1
        return cls.from_multiplicities(counts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '3+1+1' (any order, spaces allowed) or '∅' / '' for the empty partition"""
        stripped = text.strip()
        if stripped in ("", EMPTY_TEXT):
            return cls(())
        parts = []
        for token in stripped.split("+"):
            token = token.strip()
            if not token.isdigit():
                raise PartitionError(f"cannot parse part {token!r} in {text!r}")
            parts.append(int(token))
        return cls.from_parts(parts)

    @property
    def multiplicities(self) -> Dict[int, int]:
        return dict(self.items)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(size for size, _ in self.items)

    def multiplicity(self, size: int) -> int:
        for s, m in self.items:
            if s == size:
                return m
        return 0

    @property
    def weight(self) -> int:
        return sum(size * mult for size, mult in self.items)

    @property
    def length(self) -> int:
        return sum(mult for _, mult in self.items)

    def even_length(self) -> int:
        """Number of even parts, counted with multiplicity"""
        return sum(mult for size, mult in self.items if size % 2 == 0)

    def parts(self) -> List[int]:
        """Parts in weakly decreasing order"""
        return [size for size, mult in self.items for _ in range(mult)]

    def is_empty(self) -> bool:
        return not self.items

    def __str__(self) -> str:
        parts = self.parts()
        return "+".join(str(p) for p in parts) if parts else EMPTY_TEXT


@dataclass(frozen=True)
class DesignatedPartition:
    """
    A partition with exactly one designated copy among the parts of each size.

    designated holds (size, index) pairs aligned with base.items; index is the
    1-based position of the designated copy within its block of equal parts.
    """
    base: Partition
    designated: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if len(self.designated) != len(self.base.items):
            raise PartitionError("exactly one designation is required per occurring size")
        for (size, mult), (dsize, index) in zip(self.base.items, self.designated):
            if size != dsize:
                raise PartitionError(f"designation for size {dsize} does not match size {size}")
            if not 1 <= index <= mult:
                raise PartitionError(f"designated index {index} for size {size} is outside 1..{mult}")

    @classmethod
    def from_maps(cls, mults: Mapping[int, int], designated: Mapping[int, int]) -> "DesignatedPartition":
        base = Partition.from_multiplicities(mults)
        if set(designated) != set(base.sizes):
            raise PartitionError("designation keys must equal the set of occurring sizes")
        return cls(base, tuple((size, designated[size]) for size in base.sizes))

    @classmethod
    def parse(cls, text: str) -> "DesignatedPartition":
        """Parse the apostrophe form, e.g. "2'+1+1'"; parts must be weakly decreasing"""
        stripped = text.strip()
        if stripped in ("", EMPTY_TEXT):
            return cls(Partition(()), ())
        mults: Dict[int, int] = {}
        designated: Dict[int, int] = {}
        previous = None
        for token in stripped.split("+"):
            match = re.fullmatch(r"\s*(\d+)\s*('?)\s*", token)
            if not match:
                raise PartitionError(f"cannot parse designated part {token!r} in {text!r}")
            size = int(match.group(1))
            if size < 1:
                raise PartitionError(f"part sizes must be positive, got {size}")
            if previous is not None and size > previous:
                raise PartitionError(f"parts must be weakly decreasing in {text!r}")
            previous = size
            mults[size] = mults.get(size, 0) + 1
            if match.group(2):
                if size in designated:
                    raise PartitionError(f"size {size} is designated more than once in {text!r}")
                designated[size] = mults[size]
        missing = sorted(set(mults) - set(designated), reverse=True)
        if missing:
            raise PartitionError(f"no designated part of size {missing[0]} in {text!r}")
        return cls.from_maps(mults, designated)

    @property
    def weight(self) -> int:
        return self.base.weight

    def designated_index(self, size: int) -> int:
        for s, index in self.designated:
            if s == size:
                return index
        raise PartitionError(f"size {size} does not occur")

    def __str__(self) -> str:
        if not self.base.items:
            return EMPTY_TEXT
        pieces = []
        for (size, mult), (_, index) in zip(self.base.items, self.designated):
            for copy in range(1, mult + 1):
                pieces.append(f"{size}'" if copy == index else str(size))
        return "+".join(pieces)


# -- enumeration -----------------------------------------------------------

def gen_partitions(n: int, part_filter: Optional[PartFilter] = None, min_mult: int = 0) -> Iterator[Partition]:
    """
    Stream every partition of n whose sizes pass part_filter and whose
    multiplicities are all >= min_mult (0 or 1 means unrestricted).

    Args:
        n: Weight to partition
        part_filter: Predicate on part size (default: every size allowed)
        min_mult: Lower bound on every multiplicity
    """
    if n < 0:
        raise PartitionError(f"weight must be non-negative, got {n}")
    allowed = part_filter or all_sizes
    lowest = max(min_mult, 1)

    def walk(remaining: int, max_size: int) -> Iterator[List[Tuple[int, int]]]:
        if remaining == 0:
            yield []
            return
        for size in range(min(remaining, max_size), 0, -1):
            if not allowed(size):
                continue
            for mult in range(remaining // size, lowest - 1, -1):
                for rest in walk(remaining - size * mult, size - 1):
                    yield [(size, mult)] + rest

    for items in walk(n, n):
        yield Partition(tuple(items))


def gen_designated(n: int) -> Iterator[DesignatedPartition]:
    """Stream every partition of n with designated summands, in canonical order"""
    for partition in gen_partitions(n):
        choices = [range(1, mult + 1) for _, mult in partition.items]
        for indices in itertools.product(*choices):
            yield DesignatedPartition(partition, tuple(zip(partition.sizes, indices)))


def count_partitions(n: int, part_filter: Optional[PartFilter] = None, min_mult: int = 0) -> int:
    return sum(1 for _ in gen_partitions(n, part_filter, min_mult))


def pd_counts(n: int) -> List[int]:
    """
    PD(0..n): the sum over partitions of the product of the multiplicities.

    Accumulated size by size: a size k with multiplicity m multiplies the
    running weight table by m at offset k*m.
    """
    if n < 0:
        raise PartitionError(f"weight must be non-negative, got {n}")
    table = [1] + [0] * n
    for size in range(1, n + 1):
        updated = list(table)
        for weight in range(size, n + 1):
            acc = 0
            for mult in range(1, weight // size + 1):
                acc += mult * table[weight - size * mult]
            updated[weight] += acc
        table = updated
    return table


def pd_count(n: int) -> int:
    """PD(n), the number of partitions of n with designated summands"""
    return pd_counts(n)[n]


def pd_count_by_enumeration(n: int) -> int:
    """PD(n) by summing the product of multiplicities over every partition of n"""
    total = 0
    for partition in gen_partitions(n):
        product = 1
        for _, mult in partition.items:
            product *= mult
        total += product
    return total


def pd_pair_count(n: int) -> int:
    """
    Number of pairs (alpha, beta) with |alpha| + |beta| = n, alpha unrestricted
    and beta into parts not congruent to +-1 mod 6.
    """
    return pd_pair_counts(n)[n]


def pd_pair_counts(n: int) -> List[int]:
    """Pair counts for every weight 0..n, convolving enumerated p(k) and p_B(k)"""
    if n < 0:
        raise PartitionError(f"weight must be non-negative, got {n}")
    p = [count_partitions(k) for k in range(n + 1)]
    p_beta = [count_partitions(k, not_pm1_mod6) for k in range(n + 1)]
    return [sum(p[k] * p_beta[w - k] for k in range(w + 1)) for w in range(n + 1)]
