"""Permutation groups, subgroups and homomorphisms.

A :class:`PermGroup` answers order and membership through a stabilizer
chain.  Groups small enough to enumerate additionally get an
:class:`ElementTable`, which indexes the elements in sorted order and lets
subgroups be handled as integer bitmasks over those indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import itemgetter
from typing import Callable, Iterable, Optional, Sequence

from .errors import CapExceededError, DegreeMismatchError, NotInGroupError
from .perm import Permutation, compose, identity_tuple, invert
from .schreier import StabChain


@dataclass
class Caps:
    """Size limits; every cap violation raises :class:`CapExceededError`."""

    enumeration: int = 200_000
    lattice: int = 2_000
    quotient_degree: int = 50_000
    tuple_space: int = 2_000_000


CAPS = Caps()


def mask_from_indices(indices: Iterable[int], size: int) -> int:
    buf = bytearray((size >> 3) + 1)
    for x in indices:
        buf[x >> 3] |= 1 << (x & 7)
    return int.from_bytes(buf, "little")


def indices_from_mask(mask: int) -> list[int]:
    out = []
    base = 0
    for byte in mask.to_bytes((mask.bit_length() >> 3) + 1, "little"):
        while byte:
            low = byte & -byte
            out.append(base + low.bit_length() - 1)
            byte ^= low
        base += 8
    return out


class ElementTable:
    """Indexed element list of an enumerable group.

    Index 0 is always the identity (elements are sorted by image tuple).
    Right-multiplication columns are computed on demand and cached.
    """

    def __init__(self, tuples: Sequence[tuple], generators: Sequence[tuple]):
        self.tuples = sorted(tuples)
        self.size = len(self.tuples)
        self.index = {t: i for i, t in enumerate(self.tuples)}
        self.inv = [self.index[invert(t)] for t in self.tuples]
        self.gens = [self.index[g] for g in generators]
        self.full = (1 << self.size) - 1
        self._cols: dict[int, list[int]] = {}
        self._perms: Optional[list[Permutation]] = None

    @property
    def perms(self) -> list[Permutation]:
        if self._perms is None:
            self._perms = [Permutation._trusted(t) for t in self.tuples]
        return self._perms

    def col(self, b: int) -> list[int]:
        """``col(b)[a]`` is the index of ``a * b``."""
        c = self._cols.get(b)
        if c is None:
            tb = self.tuples[b]
            index = self.index
            c = [index[compose(ta, tb)] for ta in self.tuples]
            self._cols[b] = c
        return c

    def mul(self, a: int, b: int) -> int:
        c = self._cols.get(b)
        if c is not None:
            return c[a]
        return self.index[compose(self.tuples[a], self.tuples[b])]

    def conj(self, x: int, s: int) -> int:
        """Index of ``s^-1 * x * s``."""
        return self.mul(self.mul(self.inv[s], x), s)

    def order_of(self, x: int) -> int:
        n, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def join(self, elems: list[int], gens: list[int], new: Sequence[int]) -> list[int]:
        """Elements of ``<H, new>`` where ``H`` has element list ``elems``.

        Dimino-style: the result is a union of right cosets ``H t``, closed
        under right multiplication by all generators.
        """
        member = set(elems)
        out = list(elems)
        coset = itemgetter(*elems) if len(elems) > 1 else (lambda c: (c[0],))
        all_gens = list(gens) + [x for x in new]
        reps = [0]
        i = 0
        while i < len(reps):
            r = reps[i]
            for s in all_gens:
                t = self.col(s)[r]
                if t not in member:
                    block = coset(self.col(t))
                    member.update(block)
                    out.extend(block)
                    reps.append(t)
            i += 1
        return out

    def closure(self, gens: Sequence[int]) -> list[int]:
        return self.join([0], [], [g for g in gens if g != 0])

    def normal_closure(self, seeds: Sequence[int], conjugators: Sequence[int]) -> tuple[list[int], list[int]]:
        """Element list and generators of the normal closure of ``seeds``."""
        gens: list[int] = []
        elems = [0]
        member = {0}
        pending = [s for s in seeds]
        while pending:
            x = pending.pop(0)
            if x in member:
                continue
            elems = self.join(elems, gens, [x])
            gens.append(x)
            member = set(elems)
            for s in conjugators:
                c = self.conj(x, s)
                if c not in member:
                    pending.append(c)
        return elems, gens

    def generators_of(self, mask: int) -> list[int]:
        """A greedy generating set of the subgroup with element mask ``mask``."""
        gens: list[int] = []
        elems = [0]
        cur = 1
        for x in indices_from_mask(mask):
            if not (cur >> x) & 1:
                elems = self.join(elems, gens, [x])
                gens.append(x)
                cur = mask_from_indices(elems, self.size)
        return gens

    def mask(self, elems: Iterable[int]) -> int:
        return mask_from_indices(elems, self.size)


class PermGroup:
    """A finitely generated permutation group of a given degree.

    Order, membership and the element table are computed lazily and cached;
    the object is otherwise immutable.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: Optional[int] = None,
        name: Optional[str] = None,
    ):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required when no generators are given")
            degree = generators[0].degree
        if degree < 1:
            raise ValueError("degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator {g} has degree {g.degree}, expected {degree}"
                )
        if not generators:
            generators = [Permutation.identity(degree)]
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.name = name
        self._chain: Optional[StabChain] = None
        self._table: Optional[ElementTable] = None
        self._cache: dict = {}

    # basic structure

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain([g.images for g in self.generators], self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(
                f"permutation of degree {p.degree} tested against group of degree {self.degree}"
            )
        if self._table is not None:
            return p.images in self._table.index
        return self.chain.contains(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gens = [g.images for g in self.generators]
        return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def table(self, cap: Optional[int] = None) -> ElementTable:
        if self._table is None:
            cap = CAPS.enumeration if cap is None else cap
            n = self.order()
            if n > cap:
                raise CapExceededError("enumeration", n, cap, self.label)
            self._table = ElementTable(
                list(self.chain.iter_elements()), [g.images for g in self.generators]
            )
        return self._table

    def elements(self, cap: Optional[int] = None) -> frozenset:
        return frozenset(self.table(cap).perms)

    def check_lattice_cap(self, cap: Optional[int] = None) -> None:
        cap = CAPS.lattice if cap is None else cap
        n = self.order()
        if n > cap:
            raise CapExceededError("lattice", n, cap, self.label)

    @property
    def label(self) -> str:
        return self.name or f"group of degree {self.degree}"

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(<{gens}>, degree={self.degree}, name={self.name!r})"


class Subgroup:
    """Subgroup of ``parent`` generated by ``generators``.

    Equality is equality of element sets.  When the parent has an element
    table the subgroup carries a bitmask over the parent's element indices.
    """

    def __init__(
        self,
        parent: PermGroup,
        generators: Sequence[Permutation],
        _mask: Optional[int] = None,
    ):
        self.parent = parent
        self.generators: tuple[Permutation, ...] = tuple(
            g for g in generators if not g.is_identity()
        )
        self._mask = _mask
        self._group: Optional[PermGroup] = None

    @classmethod
    def from_indices(cls, parent: PermGroup, gens: Sequence[int], elems: Iterable[int]) -> "Subgroup":
        tab = parent.table()
        mask = elems if isinstance(elems, int) else tab.mask(elems)
        return cls(parent, [tab.perms[g] for g in gens], _mask=mask)

    def as_group(self, name: Optional[str] = None) -> PermGroup:
        if self._group is None or name is not None:
            g = PermGroup(self.generators, degree=self.parent.degree, name=name)
            if name is not None:
                return g
            self._group = g
        return self._group

    @property
    def mask(self) -> int:
        if self._mask is None:
            tab = self.parent.table()
            gens = [tab.index[g.images] for g in self.generators]
            self._mask = tab.mask(tab.closure(gens))
        return self._mask

    def indices(self) -> list[int]:
        return indices_from_mask(self.mask)

    def _has_mask(self) -> bool:
        return self._mask is not None or self.parent._table is not None

    def order(self) -> int:
        if self._mask is not None:
            return self._mask.bit_count()
        return self.as_group().order()

    @property
    def elements(self) -> frozenset:
        if self._has_mask():
            perms = self.parent.table().perms
            return frozenset(perms[i] for i in self.indices())
        return self.as_group().elements()

    def contains(self, p: Permutation) -> bool:
        if self._has_mask():
            i = self.parent.table().index.get(p.images)
            return i is not None and bool((self.mask >> i) & 1)
        return self.as_group().contains(p)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def is_trivial(self) -> bool:
        return not self.generators

    def issubset(self, other: "Subgroup") -> bool:
        if self._has_mask() and other._has_mask() and self.parent is other.parent:
            return self.mask & ~other.mask == 0
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other: "Subgroup") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        if self.parent.degree != other.parent.degree:
            return False
        if self._has_mask() and other._has_mask() and self.parent is other.parent:
            return self.mask == other.mask
        return self.order() == other.order() and self.issubset(other)

    def __hash__(self) -> int:
        return hash(self.order())

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"Subgroup(<{gens}>, order={self.order()})"


class Homomorphism:
    """Map from ``domain`` to ``codomain`` fixed by the images of the domain
    generators (one image per generator, in order)."""

    def __init__(
        self,
        domain: PermGroup,
        codomain: PermGroup,
        generator_images: Sequence[Permutation],
        evaluate: Optional[Callable[[Permutation], Permutation]] = None,
    ):
        if len(generator_images) != len(domain.generators):
            raise ValueError("need exactly one image per domain generator")
        self.domain = domain
        self.codomain = codomain
        self.generator_images = tuple(generator_images)
        self._evaluate = evaluate
        self._images: Optional[dict] = None

    def _image_table(self) -> dict:
        # walk the Cayley graph; raises if two words give different images
        if self._images is None:
            tab = self.domain.table()
            ident = identity_tuple(self.codomain.degree)
            images: dict[int, tuple] = {0: ident}
            frontier = [0]
            gen_pairs = list(zip(tab.gens, (g.images for g in self.generator_images)))
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in gen_pairs:
                        y = tab.mul(x, g)
                        img = compose(images[x], gi)
                        old = images.get(y)
                        if old is None:
                            images[y] = img
                            nxt.append(y)
                        elif old != img:
                            raise ValueError("generator images do not define a homomorphism")
                frontier = nxt
            self._images = images
        return self._images

    def is_well_defined(self) -> bool:
        try:
            self._image_table()
        except ValueError:
            return False
        return True

    def __call__(self, p: Permutation) -> Permutation:
        if self._evaluate is not None:
            return self._evaluate(p)
        tab = self.domain.table()
        i = tab.index.get(p.images)
        if i is None:
            raise NotInGroupError(f"{p} is not in the domain")
        return Permutation._trusted(self._image_table()[i])
