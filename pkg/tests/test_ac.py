import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mngroups import core
from mngroups.ac import (
    ACEngine, ACMove, GroupTuple, MoveKind, TupleFilter, ac_classes, ac_orbit, all_moves,
    apply_move, generalized_ac_check, inverse_moves, neighbors,
)
from mngroups.builtins import cyclic, dihedral, elementary_abelian, heisenberg, quaternion, symmetric
from mngroups.errors import CapExceededError, MNError
from mngroups.perm import Permutation

S3 = symmetric(3)
Q8 = quaternion()


def P(*cycles, degree=3):
    return Permutation.from_cycles([list(c) for c in cycles], degree)


def test_apply_move_examples():
    e, g, h = S3.identity, P((0, 1)), P((0, 1, 2))
    assert apply_move(S3, GroupTuple((e, g)), ACMove(MoveKind.INVERT, j=0)) == GroupTuple((e, g))
    assert apply_move(S3, GroupTuple((g, h)), ACMove(MoveKind.RIGHT_MULTIPLY, 0, 1, 1)) == GroupTuple((g * h, h))
    assert apply_move(S3, GroupTuple((g, h)), ACMove(MoveKind.LEFT_MULTIPLY, 0, 1, -1)) == GroupTuple((h.inverse() * g, h))
    t = apply_move(S3, GroupTuple((P((0, 1, 2)),)), ACMove(MoveKind.CONJUGATE, j=0), conjugators=[P((0, 1))])
    assert t == GroupTuple((P((0, 2, 1)),))


@pytest.mark.parametrize("move", [
    ACMove(MoveKind.RIGHT_MULTIPLY, 0, 0, 1),
    ACMove(MoveKind.LEFT_MULTIPLY, 0, 2, 1),
    ACMove(MoveKind.RIGHT_MULTIPLY, 0, 1, 2),
    ACMove(MoveKind.INVERT, j=5),
    ACMove(MoveKind.CONJUGATE, j=0, conjugator_index=7),
])
def test_apply_move_validation(move):
    with pytest.raises(MNError):
        apply_move(S3, GroupTuple((S3.identity, S3.identity)), move)


def test_neighbor_counts():
    g = Q8.generators[0]
    assert len(neighbors(Q8, GroupTuple((g,)))) == 1 + len(Q8.generators)
    assert len(neighbors(Q8, GroupTuple((g, g)))) == 14
    e = GroupTuple((Q8.identity, Q8.identity))
    assert set(neighbors(Q8, e)) == {e}
    n, k = 3, 2
    assert len(all_moves(n, k)) == 4 * n * (n - 1) + n + n * k


def test_orbit_examples():
    assert ac_orbit(S3, GroupTuple((S3.identity,))) == {GroupTuple((S3.identity,))}
    C2 = cyclic(2)
    x = C2.generators[0]
    assert ac_orbit(C2, GroupTuple((x,))) == {GroupTuple((x,))}
    orb = ac_orbit(S3, GroupTuple((P((0, 1)),)))
    assert len(orb) == 3
    assert all(t.entries[0].order() == 2 for t in orb)


def test_class_examples():
    C2 = cyclic(2)
    assert len(ac_classes(C2, 1, TupleFilter.ALL)) == 2
    C3 = cyclic(3)
    classes = ac_classes(C3, 1, "normally-generating")
    assert len(classes) == 1 and len(classes[0]) == 2
    r = generalized_ac_check(Q8, 2)
    assert len(ac_classes(Q8, 2, "normally-generating")) == r.abelianized_class_count


@pytest.mark.parametrize("G", [cyclic(6), S3, Q8, dihedral(4)], ids=str)
@pytest.mark.parametrize("n", [1, 2])
def test_classes_partition_filter(G, n):
    eng = ACEngine(G)
    for flt in TupleFilter:
        classes = eng.classes(n, flt)
        members = [s for c in classes for s in c]
        assert len(members) == len(set(members))
        expected = {s for s in itertools.product(range(G.order()), repeat=n) if eng.predicate(s, flt)}
        assert set(members) == expected
        # filters are constant on whole orbits
        for c in classes:
            assert eng.orbit(c[0]) & expected == set(c)
            assert len({eng.predicate(s, TupleFilter.NORMALLY_GENERATING) for s in eng.orbit(c[0])}) == 1


def test_generating_filter_equals_normally_generating_in_mn():
    for G in (Q8, dihedral(4), cyclic(6)):
        eng = ACEngine(G)
        assert eng.classes(2, "generating") == eng.classes(2, "normally-generating")
    eng = ACEngine(S3)
    assert eng.classes(1, "generating") == []
    assert len(eng.classes(1, "normally-generating")) == 1


@pytest.mark.parametrize("G", [cyclic(6), elementary_abelian(2, 3), cyclic(12), core.direct_product(cyclic(2), cyclic(4))], ids=str)
@pytest.mark.parametrize("n", [1, 2])
def test_abelian_specialization_matches_general(G, n):
    general = ACEngine(G).classes(n, "normally-generating")
    special = ACEngine(G, abelian=True).classes(n, "normally-generating")
    assert general == special


def test_abelian_specialization_rejects_nonabelian():
    with pytest.raises(MNError):
        ACEngine(S3, abelian=True)


def test_generalized_ac_check_examples():
    for G in (cyclic(6), Q8, heisenberg(3)):
        r = generalized_ac_check(G, 2)
        assert r.refinement_ok and r.bijective and r.group_in_mn
    r = generalized_ac_check(heisenberg(3), 2)
    assert r.normally_generating_count == 432


def test_generalized_ac_check_warns_outside_mn():
    with pytest.warns(UserWarning):
        r = generalized_ac_check(S3, 1)
    assert r.group_in_mn is False


def test_tuple_space_cap():
    with pytest.raises(CapExceededError) as exc:
        ACEngine(Q8, cap=100).classes(3)
    assert exc.value.cap_name == "tuple_space"
    assert exc.value.size == 512


small = st.sampled_from([cyclic(6), S3, Q8, dihedral(5)])


@settings(max_examples=80, deadline=None)
@given(small, st.data())
def test_moves_invertible_and_preserve_normal_closure(G, data):
    elems = sorted(G.elements())
    n = data.draw(st.integers(1, 3))
    t = GroupTuple(tuple(data.draw(st.sampled_from(elems)) for _ in range(n)))
    m = data.draw(st.sampled_from(all_moves(n, len(G.generators))))
    u = apply_move(G, t, m)
    for m2 in inverse_moves(G, m):
        u = apply_move(G, u, m2)
    assert u == t
    assert core.normal_closure(G, apply_move(G, t, m).entries) == core.normal_closure(G, t.entries)


def test_generating_set_independence_q8():
    i, j = Q8.generators
    k = i * j
    base = {frozenset(c) for c in ACEngine(Q8).classes(2)}
    for alt in ([j, k], [i, k], sorted(Q8.elements())):
        assert {frozenset(c) for c in ACEngine(Q8, alt).classes(2)} == base
