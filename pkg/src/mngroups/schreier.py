"""Deterministic Schreier-Sims on raw image tuples.

Builds a base and strong generating set so that order and membership can be
answered for groups far beyond the enumeration cap (level quotients of tree
groups).  Transversals are extended in place, never rebuilt, so Schreier
generators that already sifted stay valid and are not re-tested.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .perm import compose, identity_tuple, invert


class StabChain:
    __slots__ = ("degree", "base", "gens", "trans", "tinv", "_id")

    def __init__(self, generators: Sequence[tuple], degree: int):
        self.degree = degree
        self._id = identity_tuple(degree)
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        self.tinv: list[dict[int, tuple]] = []
        gens = []
        for g in generators:
            if g != self._id and g not in gens:
                gens.append(g)
        if gens:
            self._build(gens)

    # construction

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.gens.append([])
        self.trans.append({point: self._id})
        self.tinv.append({point: self._id})

    def _extend_orbit(self, level: int) -> None:
        trans = self.trans[level]
        tinv = self.tinv[level]
        gens = self.gens[level]
        points = list(trans)
        k = 0
        while k < len(points):
            beta = points[k]
            u = trans[beta]
            for x in gens:
                gamma = x[beta]
                if gamma not in trans:
                    v = compose(x, u)
                    trans[gamma] = v
                    tinv[gamma] = invert(v)
                    points.append(gamma)
            k += 1

    def _moved_point(self, g: tuple) -> int:
        for i, x in enumerate(g):
            if x != i:
                return i
        raise ValueError("identity has no moved point")

    def _build(self, gens: list[tuple]) -> None:
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._new_level(self._moved_point(g))
        for level, b in enumerate(self.base):
            fixed = self.base[:level]
            self.gens[level] = [g for g in gens if all(g[p] == p for p in fixed)]
            self._extend_orbit(level)
        tested: list[set] = [set() for _ in self.base]

        i = len(self.base) - 1
        while i >= 0:
            jumped = False
            trans = self.trans[i]
            tinv = self.tinv[i]
            for beta in list(trans):
                u = trans[beta]
                for xi, x in enumerate(self.gens[i]):
                    if (beta, xi) in tested[i]:
                        continue
                    tested[i].add((beta, xi))
                    h = compose(tinv[x[beta]], compose(x, u))
                    if h == self._id:
                        continue
                    y, j = self._strip(h, i + 1)
                    if j == len(self.base) and y == self._id:
                        continue
                    if j == len(self.base):
                        self._new_level(self._moved_point(y))
                        tested.append(set())
                    for level in range(i + 1, j + 1):
                        self.gens[level].append(y)
                        self._extend_orbit(level)
                    i = j
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1

    # queries

    def _strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            v = self.tinv[level].get(beta)
            if v is None:
                return g, level
            g = compose(v, g)
        return g, len(self.base)

    def contains(self, g: tuple) -> bool:
        if len(g) != self.degree:
            return False
        h, j = self._strip(g)
        return j == len(self.base) and h == self._id

    def order(self) -> int:
        n = 1
        for t in self.trans:
            n *= len(t)
        return n

    def strong_generators(self) -> list[tuple]:
        out: list[tuple] = []
        for level in self.gens:
            for g in level:
                if g not in out:
                    out.append(g)
        return out

    def iter_elements(self) -> Iterator[tuple]:
        """Every element exactly once, as ``u_0 * u_1 * ... * u_{k-1}``."""

        def rec(level: int, prefix: tuple) -> Iterator[tuple]:
            if level == len(self.base):
                yield prefix
                return
            for u in self.trans[level].values():
                yield from rec(level + 1, compose(prefix, u))

        yield from rec(0, self._id)
