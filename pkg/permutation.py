from __future__ import annotations
from math import lcm
from typing import Iterable, Sequence
from exceptions import DomainMismatch


class Permutation():
    """
    Permutation

    A bijection of {0..domain_size-1} stored in image form. Permutations act on the right, as in p^(gh) = (p^g)^h,
    so `g * h` applies g first and then h.

    Attributes:
    - images (tuple[int, ...]): images[i] is the image of i.

    Methods:
    - identity(n: int) -> Permutation: The identity on n points.
    - from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation: Build from disjoint cycles.
    - inverse() -> Permutation: The inverse permutation.
    - power(k: int) -> Permutation: The k-th power, k may be negative.
    - order() -> int: The order of the permutation.
    - conjugate(h: Permutation) -> Permutation: h^-1 * self * h.
    - cycles() -> list[tuple[int, ...]]: Non-trivial cycles, each starting at its smallest point.
    - fixed_points() -> list[int]: Points mapped to themselves.
    - is_identity() -> bool: True for the identity.

    """
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]) -> None:
        self.images: tuple[int, ...] = tuple(images)

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        for cycle in cycles:
            for i, p in enumerate(cycle):
                images[p] = cycle[(i + 1) % len(cycle)]
        if sorted(images) != list(range(n)):
            raise DomainMismatch("cycles are not disjoint", cycles=[list(c) for c in cycles])
        return Permutation(images)

    @property
    def domain_size(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.images) != len(self.images):
            raise DomainMismatch("permutations on different domains",
                                 left=len(self.images), right=len(other.images))
        return Permutation(map(other.images.__getitem__, self.images))

    def inverse(self) -> Permutation:
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(images)

    def power(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self.images))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def conjugate(self, h: Permutation) -> Permutation:
        return h.inverse() * self * h

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        result = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cycle.append(p)
                seen[p] = True
                p = self.images[p]
            result.append(tuple(cycle))
        return result

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def to_json(self) -> list[int]:
        return list(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
