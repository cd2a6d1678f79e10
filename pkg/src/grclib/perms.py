"""Permutations of [n] = {1, ..., n} and their action on vectors.

The vector action is fixed once for the whole package:

    sigma(v) = (v_sigma(1), v_sigma(2), ..., v_sigma(n))

and ``as_matrix`` returns the matrix M with v . M = sigma(v) for row
vectors, i.e. M[i][j] = 1 iff i = sigma(j).  Under this convention

    as_matrix(compose(s, t)) = as_matrix(t) @ as_matrix(s)

where compose(s, t)(i) = s(t(i)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field
from .matrices import Matrix

__all__ = ["Permutation"]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # images[i-1] = sigma(i), 1-based values

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("image sequence is not a bijection on [n]")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def cyclic_shift(cls, n: int) -> "Permutation":
        """The n-cycle (1, 2, ..., n): i -> i+1, n -> 1."""
        return cls(tuple(i % n + 1 for i in range(1, n + 1)))

    @classmethod
    def extended_shift(cls, n: int) -> "Permutation":
        """(1, 2, ..., n)(n+1): cyclic on the first n symbols, fixes n+1."""
        return cls(tuple(i % n + 1 for i in range(1, n + 1)) + (n + 1,))

    @classmethod
    def block_shift(cls, n: int, blocks: int) -> "Permutation":
        """(1..n)(n+1..2n)...: `blocks` disjoint n-cycles."""
        images = []
        for b in range(blocks):
            images.extend(b * n + (i % n + 1) for i in range(1, n + 1))
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                images[a - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    # -- basics ---------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """sigma(v) with sigma(v)_j = v_sigma(j)."""
        if len(v) != self.size:
            raise ValueError("vector length does not match permutation size")
        return tuple(v[s - 1] for s in self.images)

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition: compose(s, t)(i) = s(t(i))."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.size + 1)))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        out = Permutation.identity(self.size)
        base = self
        while n:
            if n & 1:
                out = out.compose(base)
            base = base.compose(base)
            n >>= 1
        return out

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, s in enumerate(self.images, start=1):
            images[s - 1] = i
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(s == i for i, s in enumerate(self.images, start=1))

    # -- cycle structure --------------------------------------------------------

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[tuple[int, int], ...]:
        """Sorted (length, count) pairs, e.g. (1,3)(2)(4,5) -> ((1,1),(2,2))."""
        counts: dict[int, int] = {}
        for cyc in self.cycles():
            counts[len(cyc)] = counts.get(len(cyc), 0) + 1
        return tuple(sorted(counts.items()))

    def max_cycle_length(self) -> int:
        return max(len(c) for c in self.cycles())

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def as_matrix(self, field: Field) -> Matrix:
        """Matrix M with v . M = sigma(v): M[i][j] = 1 iff i = sigma(j)."""
        n = self.size
        data = [0] * (n * n)
        for j in range(1, n + 1):
            data[(self(j) - 1) * n + (j - 1)] = 1
        return Matrix(field, n, n, tuple(data))

    def __str__(self) -> str:
        return "".join(
            "(" + ",".join(map(str, c)) + ")" for c in self.cycles()
        )
