"""Deciding whether all maximal subgroups of a finite group are normal.

Besides the direct check, :func:`theorem1_report` evaluates four equivalent
formulations side by side (all maximal subgroups normal; every quotient
again has that property; every quotient nilpotent; commutator subgroup
inside the Frattini subgroup) so that their agreement can be tested.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import core
from .builtins import dihedral, dihedral_reflections, symmetric
from .errors import MNError
from .group import PermGroup, Subgroup
from .perm import Permutation

EXHAUSTIVE_NORMAL_LIMIT = 64


class NotAPGroupError(MNError, ValueError):
    pass


class Verdict(str, enum.Enum):
    NORMALLY_GENERATES_BUT_NOT_GENERATES = "NormallyGeneratesButNotGenerates"
    GENERATES = "Generates"
    NEITHER_GENERATES = "NeitherGenerates"


@dataclass
class WitnessReport:
    group_label: str
    group_order: int
    witness_set: frozenset
    generated_order: int
    normal_closure_order: int
    verdict: Verdict
    search_bound: Optional[int] = None


@dataclass
class TheoremOneWitnesses:
    non_normal_maximal: Optional[Subgroup] = None
    non_mn_quotient_by: Optional[Subgroup] = None
    non_nilpotent_quotient_by: Optional[Subgroup] = None
    commutator_outside_frattini: Optional[Permutation] = None

    def empty(self) -> bool:
        return all(
            v is None
            for v in (
                self.non_normal_maximal,
                self.non_mn_quotient_by,
                self.non_nilpotent_quotient_by,
                self.commutator_outside_frattini,
            )
        )


@dataclass
class TheoremOneReport:
    group_label: str
    group_order: int
    cond1_all_maximal_normal: bool
    cond2_quotients_in_mn: bool
    cond3_maximal_finite_index_and_finite_quotients_nilpotent: bool
    cond4_commutator_in_frattini: bool
    cond2_exhaustive: bool
    normal_subgroups_checked: int
    witnesses: Optional[TheoremOneWitnesses] = field(default=None)

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.cond1_all_maximal_normal,
            self.cond2_quotients_in_mn,
            self.cond3_maximal_finite_index_and_finite_quotients_nilpotent,
            self.cond4_commutator_in_frattini,
        )

    @property
    def all_agree(self) -> bool:
        return len(set(self.conditions)) == 1


def is_in_mn_direct(G: PermGroup) -> bool:
    """True iff every maximal subgroup of ``G`` is normal.

    The trivial group has no maximal subgroups and is accepted vacuously.
    """
    if G.is_trivial():
        return True
    return all(core.is_normal(G, M) for M in core.maximal_subgroups(G))


def generates(G: PermGroup, S: Iterable[Permutation]) -> bool:
    return core.generates(G, S)


def normally_generates(G: PermGroup, S: Iterable[Permutation]) -> bool:
    return core.normally_generates(G, S)


def _dedupe(subgroups: Iterable[Subgroup]) -> list[Subgroup]:
    seen: dict[int, Subgroup] = {}
    for H in subgroups:
        seen.setdefault(H.mask, H)
    return sorted(seen.values(), key=lambda H: (H.order(), H.indices()))


def sampled_normal_subgroups(G: PermGroup) -> list[Subgroup]:
    """Trivial, center, commutator and Frattini subgroups plus the normal
    cores of all maximal subgroups."""
    sample = [core.trivial_subgroup(G), core.center(G), core.commutator_subgroup(G), core.frattini(G)]
    if not G.is_trivial():
        sample += [core.normal_core(G, M) for M in core.maximal_subgroups(G)]
    return _dedupe(sample)


def theorem1_report(G: PermGroup, exhaustive_limit: int = EXHAUSTIVE_NORMAL_LIMIT) -> TheoremOneReport:
    G.check_lattice_cap()
    n = G.order()
    w = TheoremOneWitnesses()

    maximal = [] if G.is_trivial() else core.maximal_subgroups(G)
    for M in maximal:
        if not core.is_normal(G, M):
            w.non_normal_maximal = M
            break
    cond1 = w.non_normal_maximal is None

    exhaustive = n <= exhaustive_limit
    normals = core.normal_subgroups(G) if exhaustive else sampled_normal_subgroups(G)
    cond2 = True
    quotients_nilpotent = True
    for N in normals:
        Q, _ = core.quotient(G, N)
        if cond2 and not is_in_mn_direct(Q):
            cond2 = False
            w.non_mn_quotient_by = N
        if quotients_nilpotent and not core.is_nilpotent(Q):
            quotients_nilpotent = False
            w.non_nilpotent_quotient_by = N
    # maximal subgroups of a finite group always have finite index
    cond3 = quotients_nilpotent and all(n % M.order() == 0 for M in maximal)

    comm = core.commutator_subgroup(G)
    phi = core.frattini(G)
    outside = comm.mask & ~phi.mask
    if outside:
        x = (outside & -outside).bit_length() - 1
        w.commutator_outside_frattini = G.table().perms[x]
    cond4 = outside == 0

    return TheoremOneReport(
        group_label=G.label,
        group_order=n,
        cond1_all_maximal_normal=cond1,
        cond2_quotients_in_mn=cond2,
        cond3_maximal_finite_index_and_finite_quotients_nilpotent=cond3,
        cond4_commutator_in_frattini=cond4,
        cond2_exhaustive=exhaustive,
        normal_subgroups_checked=len(normals),
        witnesses=None if w.empty() else w,
    )


def _verdict(group_order: int, generated: int, closure: int) -> Verdict:
    if generated == group_order:
        return Verdict.GENERATES
    if closure == group_order:
        return Verdict.NORMALLY_GENERATES_BUT_NOT_GENERATES
    return Verdict.NEITHER_GENERATES


def witness_report(G: PermGroup, S: Iterable[Permutation], search_bound: Optional[int] = None) -> WitnessReport:
    S = frozenset(S)
    n = G.order()
    gen = core.subgroup_generated(G, S).order()
    ncl = core.normal_closure(G, S).order()
    return WitnessReport(G.label, n, S, gen, ncl, _verdict(n, gen, ncl), search_bound)


def proposition_obs_search(
    G: PermGroup, max_subset_size: Optional[int] = 3
) -> Optional[WitnessReport]:
    """Smallest subset of size <= ``max_subset_size`` that normally generates
    ``G`` without generating it, or None.  ``max_subset_size=None`` removes
    the bound.

    Whether a subset S qualifies depends only on <S>, so the search walks
    the subgroups generated by at most k elements, breadth first, instead of
    the subsets themselves; the first hit has the fewest elements.
    """
    if G.is_trivial():
        return None
    tab = G.table()
    n = tab.size

    cyclic: dict[frozenset, int] = {}
    for x in range(1, n):
        cyclic.setdefault(frozenset(tab.closure([x])), x)
    cyclic_gens = sorted(cyclic.values())

    seen: set[frozenset] = {frozenset([0])}
    frontier: list[tuple[list[int], list[int]]] = [([], [0])]
    depth = 0
    while frontier and (max_subset_size is None or depth < max_subset_size):
        depth += 1
        nxt = []
        for gens, elems in frontier:
            hset = set(elems)
            for x in cyclic_gens:
                if x in hset:
                    continue
                kel = tab.join(elems, gens, [x])
                key = frozenset(kel)
                if key in seen:
                    continue
                seen.add(key)
                kgens = gens + [x]
                if len(kel) < n:
                    closure, _ = tab.normal_closure(kgens, tab.gens)
                    if len(closure) == n:
                        S = frozenset(tab.perms[i] for i in kgens)
                        return WitnessReport(
                            G.label, n, S, len(kel), n,
                            Verdict.NORMALLY_GENERATES_BUT_NOT_GENERATES, max_subset_size,
                        )
                nxt.append((kgens, kel))
        frontier = nxt
    return None


class WitnessKind(str, enum.Enum):
    FREE_GROUP_RANK2_IN_QUOTIENT = "FreeGroupRank2InQuotient"
    FREE_PRODUCT_Z2Z2_IN_DIHEDRAL = "FreeProductZ2Z2InDihedral"


def conjugation_witness(x: Permutation, y: Permutation) -> tuple[Permutation, Permutation]:
    """Images of the words y^-1 x y and x^-1 y x."""
    return x.conjugate(y), y.conjugate(x)


def free_product_witness(
    kind: WitnessKind | str,
    *,
    target: Optional[PermGroup] = None,
    x: Optional[Permutation] = None,
    y: Optional[Permutation] = None,
    m: Optional[int] = None,
) -> WitnessReport:
    """Evaluate the conjugated generator pair in a finite image.

    ``FreeGroupRank2InQuotient`` needs ``target`` with images ``x`` and
    ``y`` of the two free generators.  ``FreeProductZ2Z2InDihedral`` needs
    ``m >= 3`` and uses two reflections of the dihedral group of order 2m
    as the images of the two order-2 free factors.
    """
    kind = WitnessKind(kind)
    if kind is WitnessKind.FREE_PRODUCT_Z2Z2_IN_DIHEDRAL:
        if m is None or m < 3:
            raise MNError("the dihedral witness needs m >= 3")
        target = dihedral(m)
        x, y = dihedral_reflections(m)
    else:
        if target is None or x is None or y is None:
            raise MNError("the free-group witness needs a target group and images x, y")
        for g in (x, y):
            if not target.contains(g):
                raise MNError(f"{g} is not an element of {target.label}")
    return witness_report(target, conjugation_witness(x, y))


def s3_witness() -> WitnessReport:
    """Free-group witness in S3 with x -> (1 2), y -> (1 3) (1-indexed)."""
    S3 = symmetric(3)
    x = Permutation.from_cycles([[0, 1]], 3)
    y = Permutation.from_cycles([[0, 2]], 3)
    return free_product_witness(WitnessKind.FREE_GROUP_RANK2_IN_QUOTIENT, target=S3, x=x, y=y)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_subgroup_criterion_check(G: PermGroup, p: int) -> bool:
    """For every subgroup H of index at most p^2: H in MN implies G in MN."""
    n = G.order()
    if not _is_power_of(n, p):
        raise NotAPGroupError(f"{G.label} has order {n}, not a power of {p}")
    g_in_mn = is_in_mn_direct(G)
    for H in core.all_subgroups(G):
        if n // H.order() > p * p:
            continue
        if is_in_mn_direct(H.as_group()) and not g_in_mn:
            return False
    return True
