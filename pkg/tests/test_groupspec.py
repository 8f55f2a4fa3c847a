import pytest
from hypothesis import given, strategies as st

from mngroups.builtins import CATALOG
from mngroups.errors import GroupSpecError, MNError
from mngroups.groupspec import format_group_spec, parse_cycles, parse_group_spec
from mngroups.perm import Permutation


def test_examples():
    assert parse_group_spec("group perm degree=1\ngen ()").order() == 1
    assert parse_group_spec("group perm degree=3\ngen (0 1)\ngen (0 1 2)").order() == 6
    D18 = parse_group_spec("builtin dihedral 9")
    assert D18.order() == 18 and D18.label == "D18"


def test_semicolons_and_comments():
    text = "# the symmetric group\ngroup perm degree=3 name=S3 ; gen (0 1) # swap\n gen (0 1 2)"
    G = parse_group_spec(text)
    assert G.order() == 6 and G.label == "S3"
    assert [str(g) for g in G.generators] == ["(0 1)", "(0 1 2)"]


def test_one_indexed():
    G = parse_group_spec("group perm degree=3; gen (1 2); gen (1 2 3)", one_indexed=True)
    assert G.generators[0] == Permutation.from_cycles([[0, 1]], 3)
    with pytest.raises(GroupSpecError):
        parse_group_spec("group perm degree=3; gen (0 1)", one_indexed=True)


def test_products_nest():
    G = parse_group_spec("product (product (builtin cyclic 2) (builtin cyclic 3)) (builtin q8)")
    assert G.order() == 48 and G.degree == 13


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("group perm degree=3\ngen (0 1)(1 2)", 2, 5),
        ("group perm degree=3\ngen (0 3)", 2, 5),
        ("group perm degree=3\ngen (0 1", 2, 5),
        ("gen (0 1)", 1, 1),
        ("group perm degree=x", 1, 1),
        ("group perm degree=2\nfrobnicate", 2, 1),
        ("group perm degree=2", 1, 1),
    ],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec(text)
    assert exc.value.line == line
    assert exc.value.column >= column


def test_unknown_builtin():
    with pytest.raises(MNError):
        parse_group_spec("builtin monster")
    with pytest.raises(MNError):
        parse_group_spec("builtin cyclic")


def test_parse_cycles():
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(0 1)(2 3)", 4).images == (1, 0, 3, 2)
    assert parse_cycles("(1,2,3)", 3, one_indexed=True).images == (1, 2, 0)


@pytest.mark.parametrize("spec", CATALOG[::5])
def test_catalog_round_trip(spec):
    G = parse_group_spec(spec)
    H = parse_group_spec(format_group_spec(G))
    assert H.degree == G.degree
    assert H.generators == G.generators


@given(st.integers(1, 9).flatmap(
    lambda n: st.lists(st.permutations(range(n)).map(Permutation), min_size=1, max_size=4)
))
def test_round_trip_property(gens):
    from mngroups.group import PermGroup

    G = PermGroup(gens, name="G")
    H = parse_group_spec(format_group_spec(G))
    assert H.degree == G.degree
    assert H.generators == G.generators
    assert H.label == "G"
