"""Input description of S^{(N,M)}_k(n_1, ..., n_k) plus the small weight functions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..errors import DivergentSeriesError

__all__ = ["LValueSpec", "epsilon", "epsilon_chain", "nu", "nu_tilde"]


@dataclass(frozen=True)
class LValueSpec:
    """Sum over 1 <= i_1 <= ... <= i_k of eps^{(N)} w_M^{i_1+...+i_k} / (i_1^{n_1} ... i_k^{n_k}).

    ``weights[0]`` goes with the smallest index i_1.  Harmonic-type input
    (a weight 1 with M = 1) is rejected here rather than at evaluation time.
    """

    N: int
    M: int
    weights: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.N < 1 or self.M < 1:
            raise ValueError("N and M must be positive")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive: {self.weights}")
        if self.M == 1 and 1 in self.weights:
            raise DivergentSeriesError(f"weight 1 with M = 1 diverges: {self.weights}")

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def convergence(self) -> str:
        """'absolute' or 'conditional' (some weight 1, saved by the root of unity)."""
        if not self.weights or min(self.weights) >= 2:
            return "absolute"
        return "conditional"

    @classmethod
    def uniform(cls, N: int, M: int, n: int, k: int) -> "LValueSpec":
        return cls(N, M, (n,) * k)


def epsilon(N: int, i: int, j: int) -> int:
    """0 when i = j is not a multiple of N, else 1."""
    return 0 if i == j and i % N else 1


def epsilon_chain(N: int, indices) -> int:
    return int(all(epsilon(N, a, b) for a, b in zip(indices, indices[1:])))


def nu(x: int) -> Fraction:
    """2^{1-x} - 1"""
    return Fraction(2) ** (1 - x) - 1


def nu_tilde(x: int) -> Fraction:
    """2^{x-1} - 1"""
    return Fraction(2) ** (x - 1) - 1
