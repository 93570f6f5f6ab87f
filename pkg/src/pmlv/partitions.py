"""Integer partitions and the handful of combinatorial maps the decomposition needs."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .errors import CapacityError

__all__ = [
    "Partition",
    "Composition",
    "partitions",
    "enumerate_partitions",
    "z_mu",
    "scale",
    "strip_ones",
    "is_vertical_strip",
    "unique_even_mu",
    "distinct_permutations",
    "multiset_permutations",
    "MAX_PARTITION_WEIGHT",
    "MAX_PERMUTATION_LENGTH",
]

MAX_PARTITION_WEIGHT = 60
MAX_PERMUTATION_LENGTH = 10

# Ordered multiplicity vector r = (r_1, ..., r_l); sorting it gives a partition.
Composition = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: Dict[int, int]) -> "Partition":
        parts: List[int] = []
        for i in sorted(mult, reverse=True):
            parts.extend([i] * mult[i])
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    @property
    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self.parts)

    def padded(self, n: int) -> Tuple[int, ...]:
        return self.parts + (0,) * max(0, n - len(self.parts))

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def partitions(k: int, max_k: int = MAX_PARTITION_WEIGHT) -> List[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > max_k:
        raise CapacityError(f"partitions of {k} exceed the guard k <= {max_k}")
    out: List[Partition] = []

    def rec(remaining: int, largest: int, acc: List[int]):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(k, k, [])
    return out


enumerate_partitions = partitions


def z_mu(mu: Partition) -> Fraction:
    """prod_i i^{m_i} m_i!"""
    z = 1
    for i, m in mu.multiplicities().items():
        z *= i**m * math.factorial(m)
    return Fraction(z)


def scale(mu: Partition, q: int) -> Partition:
    if q < 1:
        raise ValueError("scale factor must be >= 1")
    return Partition(tuple(q * p for p in mu.parts))


def strip_ones(mu: Partition) -> Partition:
    return Partition(tuple(p for p in mu.parts if p > 1))


def is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    """True iff lam_i - mu_i is 0 or 1 for every i (shorter partition zero-padded)."""
    n = max(len(lam), len(mu))
    return all(a - b in (0, 1) for a, b in zip(lam.padded(n), mu.padded(n)))


def unique_even_mu(lam: Partition) -> Partition:
    """The unique mu |- |lam| with mu_{>1} even and lam / mu_{>1} a vertical strip.

    mu = 1^{m1+m3+m5+...} 2^{m2+m3} 4^{m4+m5} 6^{m6+m7} ...
    """
    m = lam.multiplicities()
    top = max(m, default=0)
    mult = {1: sum(m.get(i, 0) for i in range(1, top + 1, 2))}
    for e in range(2, top + 1, 2):
        mult[e] = m.get(e, 0) + m.get(e + 1, 0)
    mu = Partition.from_multiplicities({i: c for i, c in mult.items() if c})
    core = strip_ones(mu)
    assert mu.weight == lam.weight
    assert core.is_even and is_vertical_strip(lam, core), (lam, mu)
    return mu


def multiset_permutations(items: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Distinct orderings of a multiset of integers, lexicographically decreasing."""
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    n = len(items)
    out: List[Tuple[int, ...]] = []
    acc: List[int] = []

    def rec():
        if len(acc) == n:
            out.append(tuple(acc))
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                acc.append(key)
                rec()
                acc.pop()
                counts[key] += 1

    rec()
    return out


def distinct_permutations(
    lam: Partition, max_length: int = MAX_PERMUTATION_LENGTH
) -> List[Composition]:
    """Every distinct ordering of the parts of ``lam``; count is len! / prod m_i!."""
    if len(lam) > max_length:
        raise CapacityError(f"{len(lam)} parts exceed the permutation guard {max_length}")
    return multiset_permutations(lam.parts)
