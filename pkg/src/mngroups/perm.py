"""Permutations of {0, ..., degree-1}.

Composition follows the "rightmost acts first" convention everywhere in the
package: ``(p * q)(i) == p(q(i))``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DegreeMismatchError


def compose(p: tuple, q: tuple) -> tuple:
    """Raw composition of image tuples, ``q`` applied first."""
    return tuple([p[x] for x in q])


def invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity_tuple(degree: int) -> tuple:
    return tuple(range(degree))


class Permutation:
    """An immutable bijection of ``range(degree)``.

    >>> p = Permutation.from_cycles([[0, 1]], 3)
    >>> q = Permutation.from_cycles([[1, 2]], 3)
    >>> (p * q).images
    (1, 2, 0)
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        # skips validation; images must already be a bijection
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(identity_tuple(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycle data")
                seen.add(x)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(
                f"cannot compose permutations of degree {self.degree} and {other.degree}"
            )
        return Permutation._trusted(compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._trusted(invert(self.images))

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = identity_tuple(self.degree)
        acc = base.images
        while n:
            if n & 1:
                result = compose(result, acc)
            acc = compose(acc, acc)
            n >>= 1
        return Permutation._trusted(result)

    def conjugate(self, s: "Permutation") -> "Permutation":
        """Return ``s^-1 * self * s``."""
        return s.inverse() * self * s

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)}, degree={self.degree})"
