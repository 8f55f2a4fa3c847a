"""Andrews-Curtis moves on n-tuples of elements of a finite group.

The moves on ``(g_1, ..., g_n)`` are

* RightMultiply(i, j, +-1): g_i -> g_i g_j^{+-1}
* LeftMultiply(i, j, +-1):  g_i -> g_j^{+-1} g_i
* Invert(j):                g_j -> g_j^{-1}
* Conjugate(j, s):          g_j -> s^{-1} g_j s, with s from a designated
  generating sequence of the ambient group (its generators by default).

Inverse conjugations are not primitive moves; they are reached by
repeating the conjugation ``order(s) - 1`` times.  Tuple-space searches
work on element indices of the group's element table; a state is the exact
ordered tuple of indices.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import core
from .errors import CapExceededError, MNError
from .group import CAPS, PermGroup
from .perm import Permutation


class MoveKind(str, enum.Enum):
    RIGHT_MULTIPLY = "RightMultiply"
    LEFT_MULTIPLY = "LeftMultiply"
    INVERT = "Invert"
    CONJUGATE = "Conjugate"


class TupleFilter(str, enum.Enum):
    ALL = "all"
    NORMALLY_GENERATING = "normally-generating"
    GENERATING = "generating"


@dataclass(frozen=True)
class ACMove:
    kind: MoveKind
    i: int = 0
    j: int = 0
    sign: int = 1
    conjugator_index: int = 0


@dataclass(frozen=True)
class GroupTuple:
    entries: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class ACClassReport:
    group_label: str
    tuple_length: int
    normally_generating_count: int
    ac_class_count: int
    abelianized_class_count: int
    refinement_ok: bool
    bijective: bool
    group_in_mn: Optional[bool] = None


def all_moves(n: int, num_conjugators: int) -> list[ACMove]:
    """Every primitive move on n-tuples, in a fixed order."""
    moves = []
    for kind in (MoveKind.RIGHT_MULTIPLY, MoveKind.LEFT_MULTIPLY):
        for i in range(n):
            for j in range(n):
                if i != j:
                    for sign in (1, -1):
                        moves.append(ACMove(kind, i, j, sign))
    moves += [ACMove(MoveKind.INVERT, j=j) for j in range(n)]
    moves += [
        ACMove(MoveKind.CONJUGATE, j=j, conjugator_index=s)
        for j in range(n)
        for s in range(num_conjugators)
    ]
    return moves


def _validate(m: ACMove, n: int, num_conjugators: int) -> None:
    if m.kind in (MoveKind.RIGHT_MULTIPLY, MoveKind.LEFT_MULTIPLY):
        if not (0 <= m.i < n and 0 <= m.j < n):
            raise MNError(f"move indices ({m.i}, {m.j}) out of range for a {n}-tuple")
        if m.i == m.j:
            raise MNError("multiply moves need i != j")
        if m.sign not in (1, -1):
            raise MNError("sign must be +1 or -1")
    elif not 0 <= m.j < n:
        raise MNError(f"move index {m.j} out of range for a {n}-tuple")
    if m.kind is MoveKind.CONJUGATE and not 0 <= m.conjugator_index < num_conjugators:
        raise MNError(f"conjugator index {m.conjugator_index} out of range")


def apply_move(
    G: PermGroup,
    t: GroupTuple,
    m: ACMove,
    conjugators: Optional[Sequence[Permutation]] = None,
) -> GroupTuple:
    conjugators = list(G.generators if conjugators is None else conjugators)
    _validate(m, len(t), len(conjugators))
    g = list(t.entries)
    if m.kind is MoveKind.RIGHT_MULTIPLY:
        g[m.i] = g[m.i] * g[m.j] ** m.sign
    elif m.kind is MoveKind.LEFT_MULTIPLY:
        g[m.i] = g[m.j] ** m.sign * g[m.i]
    elif m.kind is MoveKind.INVERT:
        g[m.j] = g[m.j].inverse()
    else:
        g[m.j] = g[m.j].conjugate(conjugators[m.conjugator_index])
    return GroupTuple(tuple(g))


def inverse_moves(
    G: PermGroup, m: ACMove, conjugators: Optional[Sequence[Permutation]] = None
) -> list[ACMove]:
    """A sequence of primitive moves undoing ``m``."""
    if m.kind in (MoveKind.RIGHT_MULTIPLY, MoveKind.LEFT_MULTIPLY):
        return [ACMove(m.kind, m.i, m.j, -m.sign)]
    if m.kind is MoveKind.INVERT:
        return [m]
    conjugators = list(G.generators if conjugators is None else conjugators)
    return [m] * (conjugators[m.conjugator_index].order() - 1)


def neighbors(
    G: PermGroup, t: GroupTuple, conjugators: Optional[Sequence[Permutation]] = None
) -> list[GroupTuple]:
    """All tuples one move away, duplicates included."""
    conjugators = list(G.generators if conjugators is None else conjugators)
    return [apply_move(G, t, m, conjugators) for m in all_moves(len(t), len(conjugators))]


class ACEngine:
    """Move dynamics over the element table of ``G``.

    With ``abelian=True`` the engine drops the moves that are trivial or
    redundant in an abelian group (conjugations, and left multiplications,
    which coincide with right ones).
    """

    def __init__(
        self,
        G: PermGroup,
        conjugators: Optional[Sequence[Permutation]] = None,
        abelian: bool = False,
        cap: Optional[int] = None,
    ):
        self.G = G
        self.tab = G.table()
        self.cap = CAPS.tuple_space if cap is None else cap
        self.conjugators = list(G.generators if conjugators is None else conjugators)
        tab = self.tab
        size = tab.size
        self.cols = [tab.col(b) for b in range(size)]
        self.inv = tab.inv
        if abelian and not G.is_abelian():
            raise MNError(f"{G.label} is not abelian")
        self.abelian = abelian
        self.conj_maps = []
        if not abelian:
            for s in self.conjugators:
                si = tab.index[s.images]
                self.conj_maps.append([tab.conj(x, si) for x in range(size)])
        self._pred_cache: dict[tuple[TupleFilter, frozenset], bool] = {}

    def check_cap(self, n: int) -> None:
        states = self.tab.size ** n
        if states > self.cap:
            raise CapExceededError("tuple_space", states, self.cap, f"{self.G.label}, n={n}")

    def encode(self, t: GroupTuple) -> tuple[int, ...]:
        return tuple(self.tab.index[g.images] for g in t.entries)

    def decode(self, state: tuple[int, ...]) -> GroupTuple:
        perms = self.tab.perms
        return GroupTuple(tuple(perms[x] for x in state))

    def successors(self, state: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        n = len(state)
        cols, inv = self.cols, self.inv
        kinds = (0,) if self.abelian else (0, 1)
        for i in range(n):
            gi = state[i]
            for j in range(n):
                if i == j:
                    continue
                gj = state[j]
                for h in (gj, inv[gj]):
                    for kind in kinds:
                        new = cols[h][gi] if kind == 0 else cols[gi][h]
                        yield state[:i] + (new,) + state[i + 1:]
        for j in range(n):
            yield state[:j] + (inv[state[j]],) + state[j + 1:]
        for cm in self.conj_maps:
            for j in range(n):
                yield state[:j] + (cm[state[j]],) + state[j + 1:]

    def orbit(self, state: tuple[int, ...]) -> set[tuple[int, ...]]:
        self.check_cap(len(state))
        seen = {state}
        frontier = [state]
        while frontier:
            nxt = []
            for s in frontier:
                for u in self.successors(s):
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen

    def predicate(self, state: tuple[int, ...], flt: TupleFilter) -> bool:
        if flt is TupleFilter.ALL:
            return True
        key = (flt, frozenset(state))
        hit = self._pred_cache.get(key)
        if hit is None:
            tab = self.tab
            seeds = [x for x in key[1] if x != 0]
            if flt is TupleFilter.NORMALLY_GENERATING:
                elems, _ = tab.normal_closure(seeds, tab.gens)
            else:
                elems = tab.closure(seeds)
            hit = len(elems) == tab.size
            self._pred_cache[key] = hit
        return hit

    def classes(self, n: int, flt: TupleFilter = TupleFilter.ALL) -> list[list[tuple[int, ...]]]:
        """Partition of the filtered n-tuples into move orbits, each class
        sorted, classes ordered by their smallest member."""
        if n < 1:
            raise MNError("tuple length must be at least 1")
        flt = TupleFilter(flt)
        self.check_cap(n)
        assigned: set[tuple[int, ...]] = set()
        out = []
        for state in itertools.product(range(self.tab.size), repeat=n):
            if state in assigned or not self.predicate(state, flt):
                continue
            orb = self.orbit(state)
            assigned |= orb
            out.append(sorted(s for s in orb if self.predicate(s, flt)))
        return out


def ac_orbit(
    G: PermGroup,
    t: GroupTuple,
    cap: Optional[int] = None,
    conjugators: Optional[Sequence[Permutation]] = None,
) -> set[GroupTuple]:
    eng = ACEngine(G, conjugators, cap=cap)
    return {eng.decode(s) for s in eng.orbit(eng.encode(t))}


def ac_classes(
    G: PermGroup,
    n: int,
    filter: TupleFilter | str = TupleFilter.ALL,
    conjugators: Optional[Sequence[Permutation]] = None,
    cap: Optional[int] = None,
) -> list[list[GroupTuple]]:
    eng = ACEngine(G, conjugators, cap=cap)
    return [[eng.decode(s) for s in cls] for cls in eng.classes(n, TupleFilter(filter))]


def generalized_ac_check(G: PermGroup, n: int, cap: Optional[int] = None) -> ACClassReport:
    """Compare AC classes of normally generating n-tuples of ``G`` with those
    of their images in the abelianization."""
    from .mn import is_in_mn_direct

    eng = ACEngine(G, cap=cap)
    eng.check_cap(n)
    in_mn: Optional[bool] = None
    if G.order() <= CAPS.lattice:
        in_mn = is_in_mn_direct(G)
        if not in_mn:
            warnings.warn(f"{G.label} is not in MN; computing anyway", stacklevel=2)

    ab, pi = core.abelianization(G)
    ab_eng = ACEngine(ab, conjugators=pi.generator_images, abelian=True, cap=cap)
    ab_eng.check_cap(n)

    g_classes = eng.classes(n, TupleFilter.NORMALLY_GENERATING)
    a_classes = ab_eng.classes(n, TupleFilter.NORMALLY_GENERATING)
    a_class_of = {s: k for k, cls in enumerate(a_classes) for s in cls}

    to_ab = [ab_eng.tab.index[pi(p).images] for p in eng.tab.perms]
    refinement_ok = True
    image_classes = []
    for cls in g_classes:
        targets = {a_class_of.get(tuple(to_ab[x] for x in s)) for s in cls}
        if len(targets) != 1 or None in targets:
            refinement_ok = False
        image_classes.append(min(targets, key=lambda v: -1 if v is None else v))
    bijective = (
        refinement_ok
        and len(set(image_classes)) == len(image_classes)
        and set(image_classes) == set(range(len(a_classes)))
    )
    return ACClassReport(
        group_label=G.label,
        tuple_length=n,
        normally_generating_count=sum(len(c) for c in g_classes),
        ac_class_count=len(g_classes),
        abelianized_class_count=len(a_classes),
        refinement_ok=refinement_ok,
        bijective=bijective,
        group_in_mn=in_mn,
    )
