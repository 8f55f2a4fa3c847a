import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mngroups import core
from mngroups.builtins import (
    cyclic, dihedral, dihedral_reflections, heisenberg, klein, quaternion, symmetric,
)
from mngroups.errors import CapExceededError, NotInGroupError, NotNormalError, TrivialGroupError
from mngroups.group import PermGroup
from mngroups.perm import Permutation


def P(*cycles, degree=3):
    return Permutation.from_cycles([list(c) for c in cycles], degree)


S3 = symmetric(3)
Q8 = quaternion()


def brute_elements(G):
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        frontier = [x * g for x in frontier for g in G.generators if x * g not in seen]
        seen.update(frontier)
    return seen


def brute_subgroups(G):
    """All subgroups as element sets, by closing every subset of size <= 2.

    Enough for the small groups used here, all of which are 2-generated.
    """
    elems = sorted(G.elements())
    out = set()
    for k in (0, 1, 2):
        for S in itertools.combinations(elems, k):
            out.add(frozenset(core.subgroup_generated(G, S).elements))
    return out


def test_group_order_examples():
    assert PermGroup([Permutation.identity(1)]).order() == 1
    assert PermGroup([P((0, 1)), P((0, 1, 2))]).order() == 6
    assert core.group_order(S3) == len(S3.table().tuples)


def test_contains_examples():
    C3 = PermGroup([P((0, 1, 2))])
    assert core.contains(C3, C3.identity)
    assert not core.contains(C3, P((0, 1)))
    assert core.contains(S3, P((0, 2)))


def test_elements_examples():
    assert PermGroup([Permutation.identity(1)]).elements() == {Permutation.identity(1)}
    V = PermGroup([P((0, 1), (2, 3), degree=4), P((0, 2), (1, 3), degree=4)])
    assert len(V.elements()) == 4
    assert len(dihedral(9).elements()) == 18
    assert V.elements() == brute_elements(V)


def test_enumeration_cap():
    with pytest.raises(CapExceededError) as exc:
        symmetric(6).table(cap=100)
    assert exc.value.cap_name == "enumeration"
    assert exc.value.to_dict()["size"] == "720"


def test_subgroup_generated_examples():
    assert core.subgroup_generated(S3, []).is_trivial()
    assert core.subgroup_generated(S3, [P((1, 2))]).order() == 2
    D18 = dihedral(9)
    a, b = dihedral_reflections(9)
    assert core.subgroup_generated(D18, [b * a * b, a * b * a]).order() == 6


def test_subgroup_rejects_foreign_elements():
    C3 = PermGroup([P((0, 1, 2))])
    with pytest.raises(NotInGroupError):
        core.subgroup_generated(C3, [P((0, 1))])


def test_normal_closure_examples():
    assert core.normal_closure(S3, []).is_trivial()
    assert core.normal_closure(S3, [P((1, 2))]).order() == 6
    D18 = dihedral(9)
    a, b = dihedral_reflections(9)
    assert core.normal_closure(D18, [b * a * b, a * b * a]).order() == 18


def test_normal_closure_without_table():
    # large enough that the stabilizer-chain path is taken
    G = symmetric(6)
    assert not G._table
    N = core.normal_closure(G, [P((0, 1, 2), degree=6)])
    assert N.order() == 360


def test_is_normal_examples():
    assert core.is_normal(S3, core.trivial_subgroup(S3))
    assert not core.is_normal(S3, core.subgroup_generated(S3, [P((1, 2))]))
    assert core.is_normal(S3, core.subgroup_generated(S3, [P((0, 1, 2))]))


def test_normal_core_examples():
    assert core.normal_core(S3, core.whole(S3)) == core.whole(S3)
    assert core.normal_core(S3, core.subgroup_generated(S3, [P((1, 2))])).is_trivial()
    A3 = core.subgroup_generated(S3, [P((0, 1, 2))])
    assert core.normal_core(S3, A3) == A3


@pytest.mark.parametrize("G", [S3, Q8, dihedral(4), dihedral(6), symmetric(4), heisenberg(2)], ids=str)
def test_normal_core_is_intersection_of_conjugates(G):
    for H in core.all_subgroups(G):
        inter = set(H.elements)
        for g in G.elements():
            inter &= core.conjugate_subgroup(G, H, g).elements
        assert core.normal_core(G, H).elements == inter


def test_all_subgroups_examples():
    assert len(core.all_subgroups(PermGroup([Permutation.identity(1)]))) == 1
    assert [H.order() for H in core.all_subgroups(cyclic(4))] == [1, 2, 4]
    assert sorted(H.order() for H in core.all_subgroups(S3)) == [1, 2, 2, 2, 3, 6]


@pytest.mark.parametrize(
    "G,count",
    [(symmetric(4), 30), (Q8, 6), (dihedral(4), 10), (klein(), 5), (heisenberg(3), 19), (symmetric(5), 156)],
    ids=str,
)
def test_lattice_sizes(G, count):
    assert len(core.all_subgroups(G)) == count


@pytest.mark.parametrize("G", [S3, Q8, dihedral(4), dihedral(6), cyclic(12), heisenberg(2)], ids=str)
def test_lattice_against_brute_force(G):
    assert {frozenset(H.elements) for H in core.all_subgroups(G)} == brute_subgroups(G)


def test_maximal_subgroups_examples():
    assert [H.order() for H in core.maximal_subgroups(cyclic(7))] == [1]
    assert sorted(H.order() for H in core.maximal_subgroups(S3)) == [2, 2, 2, 3]
    assert [H.order() for H in core.maximal_subgroups(Q8)] == [4, 4, 4]
    with pytest.raises(TrivialGroupError):
        core.maximal_subgroups(cyclic(1))


@pytest.mark.parametrize("G", [S3, Q8, symmetric(4), dihedral(6), heisenberg(2)], ids=str)
def test_maximal_by_definition(G):
    subs = core.all_subgroups(G)
    n = G.order()
    expected = {
        frozenset(H.elements)
        for H in subs
        if H.order() < n and not any(H.order() < K.order() < n and H <= K for K in subs)
    }
    assert {frozenset(M.elements) for M in core.maximal_subgroups(G)} == expected


def test_frattini_examples():
    assert core.frattini(S3).is_trivial()
    phi = core.frattini(Q8)
    assert phi.order() == 2 and phi.elements == core.center(Q8).elements
    assert core.frattini(cyclic(4)).order() == 2
    assert core.frattini(cyclic(1)).order() == 1


def test_commutator_examples():
    assert core.commutator_subgroup(cyclic(6)).is_trivial()
    assert core.commutator_subgroup(S3).order() == 3
    assert core.commutator_subgroup(Q8).order() == 2
    x, y = P((0, 1)), P((1, 2))
    assert core.commutator(x, y) == x.inverse() * y.inverse() * x * y


def test_lower_central_series_examples():
    C6 = cyclic(6)
    assert [H.order() for H in core.lower_central_series(C6)] == [6, 1]
    assert [H.order() for H in core.lower_central_series(S3)] == [6, 3]
    assert [H.order() for H in core.lower_central_series(dihedral(4))] == [8, 2, 1]


def test_nilpotency_examples():
    assert core.is_nilpotent(cyclic(6)) and core.nilpotency_class(cyclic(6)) <= 1
    assert not core.is_nilpotent(S3) and core.nilpotency_class(S3) is None
    assert core.nilpotency_class(Q8) == 2
    assert core.nilpotency_class(cyclic(1)) == 0


def test_quotient_examples():
    Q, pi = core.quotient(S3, core.whole(S3))
    assert Q.order() == 1
    A3 = core.subgroup_generated(S3, [P((0, 1, 2))])
    Q, pi = core.quotient(S3, A3)
    assert Q.order() == 2
    Q, pi = core.quotient(Q8, core.center(Q8))
    assert Q.order() == 4 and Q.is_abelian()
    assert all((g * g).is_identity() for g in Q.elements())


def test_quotient_requires_normal():
    with pytest.raises(NotNormalError):
        core.quotient(S3, core.subgroup_generated(S3, [P((1, 2))]))


@pytest.mark.parametrize("G", [S3, Q8, symmetric(4), dihedral(6), heisenberg(3)], ids=str)
def test_quotient_map_is_homomorphism(G):
    for N in core.normal_subgroups(G):
        Q, pi = core.quotient(G, N)
        assert Q.order() * N.order() == G.order()
        elems = sorted(G.elements())[:12]
        for x, y in itertools.product(elems, repeat=2):
            assert pi(x * y) == pi(x) * pi(y)
        kernel = {g for g in G.elements() if pi(g).is_identity()}
        assert kernel == N.elements


def test_quotient_without_table():
    G = symmetric(6)
    A6 = core.commutator_subgroup(G)
    assert A6.order() == 360
    Q, pi = core.quotient(G, A6)
    assert Q.order() == 2
    assert not pi(P((0, 1), degree=6)).is_identity()


def test_abelianization_examples():
    assert core.abelianization(cyclic(6))[0].order() == 6
    assert core.abelianization(S3)[0].order() == 2
    Ab, _ = core.abelianization(Q8)
    assert Ab.order() == 4 and Ab.is_abelian()


def test_direct_product_examples():
    G = core.direct_product(S3, cyclic(1))
    assert G.order() == 6
    V = core.direct_product(cyclic(2), cyclic(2))
    assert V.order() == 4 and all((g * g).is_identity() for g in V.elements())
    QS = core.direct_product(Q8, S3)
    assert QS.order() == 48 and not core.is_nilpotent(QS)
    assert QS.degree == Q8.degree + S3.degree


def test_center_brute_force():
    for G in (S3, Q8, dihedral(4), heisenberg(3)):
        elems = G.elements()
        Z = {z for z in elems if all(z * g == g * z for g in elems)}
        assert core.center(G).elements == Z


small_groups = st.sampled_from([S3, Q8, dihedral(4), dihedral(5), cyclic(12), heisenberg(2), klein()])


@settings(max_examples=60, deadline=None)
@given(small_groups, st.data())
def test_normal_closure_is_smallest_normal(G, data):
    elems = sorted(G.elements())
    S = data.draw(st.lists(st.sampled_from(elems), max_size=3))
    N = core.normal_closure(G, S)
    assert core.is_normal(G, N)
    assert set(S) <= N.elements
    for K in core.normal_subgroups(G):
        if set(S) <= K.elements:
            assert N <= K


def test_catalog_structural_invariants(catalog):
    for spec, G in catalog:
        if G.order() > 200:
            continue
        assert G.order() == G.table().size
        series = core.lower_central_series(G)
        for upper, lower in zip(series, series[1:]):
            assert core.is_normal(G, lower) and lower <= upper and lower.order() < upper.order()
        if G.is_trivial():
            continue
        for M in core.maximal_subgroups(G):
            K = core.normal_core(G, M)
            Q, _ = core.quotient(G, K)
            assert G.order() % Q.order() == 0
            if core.is_normal(G, M):
                index = G.order() // M.order()
                assert core._is_prime_power(index) and all(index % k for k in range(2, index))


@settings(max_examples=40, deadline=None)
@given(small_groups, st.data())
def test_normal_closure_contains_generated(G, data):
    S = data.draw(st.lists(st.sampled_from(sorted(G.elements())), max_size=3))
    H = core.subgroup_generated(G, S)
    N = core.normal_closure(G, S)
    assert H <= N
    if core.is_normal(G, H):
        assert H == N


def test_shared_group_across_threads():
    from concurrent.futures import ThreadPoolExecutor

    from mngroups import mn

    G = core.direct_product(symmetric(4), cyclic(2))
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda _: (mn.is_in_mn_direct(G), core.frattini(G).order(),
                                           len(core.all_subgroups(G))), range(8)))
    assert len(set(results)) == 1
