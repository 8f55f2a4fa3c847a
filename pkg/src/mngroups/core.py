"""Subgroup-level operations on permutation groups.

Every function takes the ambient :class:`PermGroup` first.  Groups whose
order is within the lattice cap are handled through their element table;
larger groups fall back to stabilizer-chain membership where the operation
allows it (generated subgroups, normal closures, quotients, commutator
series).
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import (
    CapExceededError,
    DegreeMismatchError,
    NotInGroupError,
    NotNormalError,
    TrivialGroupError,
)
from .group import CAPS, Homomorphism, PermGroup, Subgroup, indices_from_mask
from .perm import Permutation, compose, identity_tuple, invert
from .schreier import StabChain


def permutation_compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: the result maps ``i`` to ``p(q(i))``."""
    return p * q


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def elements(G: PermGroup, cap: Optional[int] = None) -> frozenset:
    return G.elements(cap)


def _use_table(G: PermGroup) -> bool:
    return G._table is not None or G.order() <= CAPS.lattice


def _check_members(G: PermGroup, S: Iterable[Permutation]) -> list[Permutation]:
    S = sorted(set(S))
    for s in S:
        if s.degree != G.degree:
            raise DegreeMismatchError(f"{s} has degree {s.degree}, group has degree {G.degree}")
        if not G.contains(s):
            raise NotInGroupError(f"{s} is not an element of {G.label}")
    return S


def _check_subgroup(G: PermGroup, H: Subgroup) -> None:
    if H.parent is G:
        return
    if H.parent.degree != G.degree or not all(G.contains(h) for h in H.generators):
        raise NotInGroupError(f"{H!r} is not a subgroup of {G.label}")


def whole(G: PermGroup) -> Subgroup:
    if _use_table(G):
        return Subgroup(G, G.generators, _mask=G.table().full)
    return Subgroup(G, G.generators)


def trivial_subgroup(G: PermGroup) -> Subgroup:
    return Subgroup(G, [], _mask=1 if G._table is not None else None)


def subgroup_generated(G: PermGroup, S: Iterable[Permutation]) -> Subgroup:
    """``<S>`` as a subgroup of ``G``; ``<{}>`` is the trivial subgroup."""
    S = _check_members(G, S)
    if _use_table(G):
        tab = G.table()
        idx = [tab.index[s.images] for s in S]
        return Subgroup(G, S, _mask=tab.mask(tab.closure(idx)))
    return Subgroup(G, S)


def normal_closure(G: PermGroup, S: Iterable[Permutation]) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``S``.

    ``S`` is closed under conjugation by the generators of ``G`` while the
    subgroup it generates is grown.
    """
    S = _check_members(G, S)
    if _use_table(G):
        tab = G.table()
        elems, gens = tab.normal_closure([tab.index[s.images] for s in S], tab.gens)
        return Subgroup.from_indices(G, gens, elems)
    conj = [(g.images, invert(g.images)) for g in G.generators]
    ident = identity_tuple(G.degree)
    gens: list[tuple] = []
    chain = StabChain([], G.degree)
    pending = [s.images for s in S]
    while pending:
        x = pending.pop(0)
        if x == ident or chain.contains(x):
            continue
        gens.append(x)
        chain = StabChain(gens, G.degree)
        for g, ginv in conj:
            c = compose(ginv, compose(x, g))
            if not chain.contains(c):
                pending.append(c)
    H = Subgroup(G, [Permutation._trusted(x) for x in gens])
    H._group = PermGroup(H.generators, degree=G.degree)
    H._group._chain = chain
    return H


def is_normal(G: PermGroup, H: Subgroup) -> bool:
    _check_subgroup(G, H)
    for g in G.generators:
        ginv = g.inverse()
        for h in H.generators:
            if not H.contains(ginv * h * g):
                return False
    return True


def conjugate_subgroup(G: PermGroup, H: Subgroup, g: Permutation) -> Subgroup:
    """``g^-1 H g``."""
    ginv = g.inverse()
    gens = [ginv * h * g for h in H.generators]
    if H._has_mask():
        tab = G.table()
        gi, gg = tab.index[ginv.images], tab.index[g.images]
        elems = [tab.mul(tab.mul(gi, h), gg) for h in H.indices()]
        return Subgroup(G, gens, _mask=tab.mask(elems))
    return Subgroup(G, gens)


def normal_core(G: PermGroup, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of ``G`` inside ``H``.

    Repeatedly intersects with conjugates by the generators of ``G`` until
    the subgroup is invariant; this equals the intersection of all
    conjugates of ``H``.
    """
    _check_subgroup(G, H)
    tab = G.table()
    mask = H.mask
    while True:
        new = mask
        for g in tab.gens:
            gi = tab.inv[g]
            conj = tab.mask(tab.mul(tab.mul(gi, x), g) for x in indices_from_mask(new))
            new &= conj
        if new == mask:
            break
        mask = new
    return Subgroup.from_indices(G, tab.generators_of(mask), mask)


def _is_prime_power(n: int) -> bool:
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def all_subgroups(G: PermGroup) -> list[Subgroup]:
    """Every subgroup of ``G`` once, sorted by (order, element indices).

    Cyclic extension: starting from the trivial subgroup, join every known
    subgroup with every cyclic subgroup it does not contain.  Every subgroup
    is reached because it is generated by finitely many cyclic subgroups.
    """
    cached = G._cache.get("lattice")
    if cached is not None:
        return cached
    G.check_lattice_cap()
    tab = G.table()

    # subgroups are generated by elements of prime-power order, so only
    # those cyclic subgroups are needed as extension steps
    cyclics: dict[int, int] = {}
    for x in range(1, tab.size):
        elems = tab.closure([x])
        if _is_prime_power(len(elems)):
            cyclics.setdefault(tab.mask(elems), x)
    cyclic_gens = [x for m, x in sorted(cyclics.items(), key=lambda kv: (kv[0].bit_count(), kv[1]))]

    found: dict[frozenset, list[int]] = {frozenset([0]): []}
    queue = [(frozenset([0]), [0])]
    k = 0
    while k < len(queue):
        hset, helems = queue[k]
        hgens = found[hset]
        k += 1
        for x in cyclic_gens:
            if x in hset:
                continue
            elems = tab.join(helems, hgens, [x])
            key = frozenset(elems)
            if key not in found:
                found[key] = hgens + [x]
                queue.append((key, elems))

    subs = [Subgroup.from_indices(G, gens, elems) for elems, gens in found.items()]
    subs.sort(key=lambda H: (H.order(), H.indices()))
    G._cache["lattice"] = subs
    return subs


def maximal_subgroups(G: PermGroup) -> list[Subgroup]:
    """Proper subgroups that are maximal under inclusion."""
    cached = G._cache.get("maximal")
    if cached is not None:
        return cached
    if G.is_trivial():
        raise TrivialGroupError("the trivial group has no proper subgroups")
    subs = all_subgroups(G)
    full = G.table().full
    maximal: list[Subgroup] = []
    # descending order: H is maximal iff it lies in no maximal subgroup found so far
    for H in reversed(subs):
        m = H.mask
        if m == full:
            continue
        if not any(m & ~M.mask == 0 for M in maximal):
            maximal.append(H)
    maximal.sort(key=lambda H: (H.order(), H.indices()))
    G._cache["maximal"] = maximal
    return maximal


def frattini(G: PermGroup) -> Subgroup:
    """Intersection of all maximal subgroups; trivial for the trivial group."""
    if G.is_trivial():
        return whole(G)
    tab = G.table()
    mask = tab.full
    for M in maximal_subgroups(G):
        mask &= M.mask
    return Subgroup.from_indices(G, tab.generators_of(mask), mask)


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """``x^-1 y^-1 x y``."""
    return x.inverse() * y.inverse() * x * y


def commutator_subgroup(G: PermGroup) -> Subgroup:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def commutator_of(G: PermGroup, H: Subgroup) -> Subgroup:
    """``[G, H]`` for ``H`` normal in ``G``."""
    comms = [commutator(g, h) for g in G.generators for h in H.generators]
    return normal_closure(G, comms)


def lower_central_series(G: PermGroup) -> list[Subgroup]:
    """``[G, [G, G], [G, [G, G]], ...]`` up to the first repeated term."""
    series = [whole(G)]
    while True:
        nxt = commutator_of(G, series[-1])
        if nxt.order() == series[-1].order():
            return series
        series.append(nxt)


def nilpotency_class(G: PermGroup) -> Optional[int]:
    """Number of strict steps of the lower central series, or None."""
    series = lower_central_series(G)
    if series[-1].order() != 1:
        return None
    return len(series) - 1


def is_nilpotent(G: PermGroup) -> bool:
    return nilpotency_class(G) is not None


def center(G: PermGroup) -> Subgroup:
    tab = G.table()
    gens = tab.gens
    central = [x for x in range(tab.size) if all(tab.mul(x, g) == tab.mul(g, x) for g in gens)]
    mask = tab.mask(central)
    return Subgroup.from_indices(G, tab.generators_of(mask), mask)


def quotient(G: PermGroup, N: Subgroup, name: Optional[str] = None) -> tuple[PermGroup, Homomorphism]:
    """``G/N`` acting on the left cosets of ``N`` by left multiplication."""
    _check_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormalError(f"{N!r} is not normal in {G.label}")
    index = G.order() // N.order()
    if index > CAPS.quotient_degree:
        raise CapExceededError("quotient_degree", index, CAPS.quotient_degree, G.label)
    name = name or f"{G.label} / N"

    if _use_table(G):
        tab = G.table()
        nel = N.indices()
        label = [-1] * tab.size
        reps: list[int] = []

        def add_coset(r: int) -> None:
            j = len(reps)
            reps.append(r)
            tr = tab.tuples[r]
            for h in nel:
                label[tab.index[compose(tr, tab.tuples[h])]] = j

        add_coset(0)
        i = 0
        while i < len(reps):
            r = reps[i]
            for x in tab.gens:
                t = tab.mul(x, r)
                if label[t] < 0:
                    add_coset(t)
            i += 1

        def coset_action(p: Permutation) -> Permutation:
            x = tab.index.get(p.images)
            if x is None:
                raise NotInGroupError(f"{p} is not in {G.label}")
            return Permutation._trusted(tuple(label[tab.mul(x, r)] for r in reps))

    else:
        chain = N.as_group().chain
        reps_t: list[tuple] = [identity_tuple(G.degree)]
        reps_inv: list[tuple] = [identity_tuple(G.degree)]

        def find(t: tuple) -> int:
            for j, rinv in enumerate(reps_inv):
                if chain.contains(compose(rinv, t)):
                    return j
            return -1

        i = 0
        while i < len(reps_t):
            for g in G.generators:
                t = compose(g.images, reps_t[i])
                if find(t) < 0:
                    reps_t.append(t)
                    reps_inv.append(invert(t))
            i += 1

        def coset_action(p: Permutation) -> Permutation:
            return Permutation._trusted(tuple(find(compose(p.images, r)) for r in reps_t))

    images = [coset_action(g) for g in G.generators]
    Q = PermGroup(images, degree=index, name=name)
    return Q, Homomorphism(G, Q, images, evaluate=coset_action)


def abelianization(G: PermGroup) -> tuple[PermGroup, Homomorphism]:
    return quotient(G, commutator_subgroup(G), name=f"{G.label} abelianized")


def product_element(p1: Permutation, p2: Permutation) -> Permutation:
    """``(p1, p2)`` acting on the disjoint union of the two point sets."""
    shift = p1.degree
    return Permutation._trusted(p1.images + tuple(x + shift for x in p2.images))


def direct_product(G1: PermGroup, G2: PermGroup, name: Optional[str] = None) -> PermGroup:
    e1, e2 = G1.identity, G2.identity
    gens = [product_element(g, e2) for g in G1.generators if not g.is_identity()]
    gens += [product_element(e1, g) for g in G2.generators if not g.is_identity()]
    return PermGroup(gens, degree=G1.degree + G2.degree, name=name or f"{G1.label} x {G2.label}")


def generates(G: PermGroup, S: Iterable[Permutation]) -> bool:
    return subgroup_generated(G, S).order() == G.order()


def normally_generates(G: PermGroup, S: Iterable[Permutation]) -> bool:
    return normal_closure(G, S).order() == G.order()


def normal_subgroups(G: PermGroup) -> list[Subgroup]:
    return [H for H in all_subgroups(G) if is_normal(G, H)]
