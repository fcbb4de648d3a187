import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure, commutator_closure, compose
from schmidtcheck import corpus as C
from schmidtcheck.errors import CapExceeded, DegreeMismatch, MalformedCycle, PointOutOfRange, RepeatedPoint
from schmidtcheck.groups import (
    Permutation,
    Subgroup,
    derived_series,
    derived_subgroup,
    generate_group,
    parse_permutation,
)
from schmidtcheck.lattice import is_normal


def test_parse_identity():
    assert parse_permutation("()", 3) == Permutation.identity(3)


def test_parse_three_cycle():
    assert parse_permutation("(1 2 3)", 3).images == (1, 2, 0)


def test_parse_disjoint_cycles_and_commas():
    p = parse_permutation(" (1,2)(3 5 4) ", 5)
    assert p.images == (1, 0, 4, 2, 3)


@pytest.mark.parametrize(
    "text, degree, err",
    [
        ("(1 2)(1 3)", 3, RepeatedPoint),
        ("(1 2", 3, MalformedCycle),
        ("1 2)", 3, MalformedCycle),
        ("(1 x)", 3, MalformedCycle),
        ("((1 2))", 3, MalformedCycle),
        ("(1 4)", 3, PointOutOfRange),
        ("(0 1)", 3, PointOutOfRange),
        ("", 3, MalformedCycle),
    ],
)
def test_parse_errors(text, degree, err):
    with pytest.raises(err):
        parse_permutation(text, degree)


@given(st.permutations(range(7)))
def test_cycle_string_round_trip(images):
    p = Permutation(tuple(images))
    assert parse_permutation(p.to_cycle_string(), 7) == p
    assert p.compose(p.inverse()).is_identity()


def test_generate_cyclic():
    g = generate_group([parse_permutation("(1 2 3)", 3)])
    assert g.order == 3


def test_generate_s3_matches_brute_closure():
    gens = [parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)]
    g = generate_group(gens)
    assert g.order == 6
    assert {p.images for p in g.elements} == closure([x.images for x in gens], 3)


def test_quaternion_regular_representation_has_order_8(q8):
    u = C.quaternion_units()
    assert q8.order == 8
    assert {p.images for p in q8.elements} == {p.images for p in u.values()}
    assert q8.order == len(closure([u["i"].images, u["j"].images], 8))


def test_identity_first_and_lexicographic(s3):
    assert s3.elements[0].is_identity()
    assert list(s3.elements) == sorted(s3.elements)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        generate_group([Permutation((1, 0)), Permutation((1, 2, 0))])


def test_cap_exceeded_reports_cap():
    with pytest.raises(CapExceeded) as info:
        generate_group(C.symmetric(5).generators, cap=100)
    assert info.value.cap == 100


def _check_table(g, pairs):
    for i, j in pairs:
        assert g.elements[g.mul_table[i][j]].images == compose(g.elements[i].images, g.elements[j].images)


def test_mul_table_consistent_on_corpus(full_corpus):
    rng = random.Random(0)
    for e in full_corpus:
        g = e.group
        n = g.order
        if n <= 64:
            pairs = [(i, j) for i in range(n) for j in range(n)]
        else:
            pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(10_000)]
        _check_table(g, pairs)


def test_closure_idempotent_and_lagrange(full_corpus):
    for e in full_corpus:
        g = e.group
        again = generate_group(list(g.elements))
        assert again.elements == g.elements
        assert math.factorial(g.degree) % g.order == 0


def test_derived_subgroup_examples(s3, q8):
    c6 = C.cyclic(6)
    assert derived_subgroup(c6.whole).is_trivial()
    assert derived_subgroup(s3.whole).order == 3
    d = derived_subgroup(q8.whole)
    assert d.order == 2
    center = [x for x in range(8) if all(q8.mul(x, y) == q8.mul(y, x) for y in range(8))]
    assert sorted(d.members) == center


def test_derived_subgroup_against_raw_commutators(full_corpus):
    for e in full_corpus:
        g = e.group
        if g.order > 60:
            continue
        raw = [p.images for p in g.elements]
        expected = commutator_closure(raw, raw, g.degree)
        assert {g.elements[i].images for i in derived_subgroup(g.whole).members} == expected


def test_derived_series_is_strictly_decreasing_and_normal(full_corpus):
    for e in full_corpus:
        series = derived_series(e.group.whole)
        for a, b in zip(series, series[1:]):
            assert b < a
            assert is_normal(b, a)


def test_s4_derived_series_orders():
    assert [h.order for h in derived_series(C.symmetric(4).whole)] == [24, 12, 4, 1]


def test_subgroup_generators_generate(full_corpus):
    for e in full_corpus[:20]:
        for h in e.lattice:
            assert e.group.subgroup(h.generators).bits == h.bits


def test_as_group_preserves_order_of_elements(sl23):
    g, lat = sl23
    for h in lat:
        hg = h.as_group()
        assert [p for p in hg.elements] == [g.elements[i] for i in h.members]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(6)), min_size=1, max_size=3))
def test_random_groups_close_like_brute_force(gens):
    perms = [Permutation(tuple(p)) for p in gens]
    g = generate_group(perms)
    assert {p.images for p in g.elements} == closure([p.images for p in perms], 6)
    assert Subgroup(g, (1 << g.order) - 1).is_closed()
