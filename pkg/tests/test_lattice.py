import random

import pytest

from oracles import is_normal as raw_is_normal
from oracles import maximal_by_inclusion, subgroups_by_generators
from schmidtcheck import corpus as C
from schmidtcheck.errors import CapExceeded, MixedParents, NotContained
from schmidtcheck.lattice import all_subgroups, is_normal, join, maximal_members, meet


def as_sets(group, subs):
    return {frozenset(group.elements[i].images for i in h.members) for h in subs}


@pytest.mark.parametrize("make, count", [(lambda: C.cyclic(4), 3), (lambda: C.symmetric(3), 6), (C.quaternion, 6)])
def test_subgroup_counts(make, count):
    assert len(all_subgroups(make())) == count


def test_s3_subgroup_orders(s3):
    assert [h.order for h in all_subgroups(s3)] == [1, 2, 2, 2, 3, 6]


def test_q8_subgroup_orders(q8):
    assert [h.order for h in all_subgroups(q8)] == [1, 2, 4, 4, 4, 8]


def test_lattice_matches_generator_oracle(small_corpus):
    for e in small_corpus:
        g = e.group
        raw = [p.images for p in g.elements]
        expected = subgroups_by_generators(raw, g.degree, 4)
        assert as_sets(g, e.lattice) == expected, e.name


def test_lattice_invariants(full_corpus):
    for e in full_corpus:
        g, lat = e.group, e.lattice
        bits = [h.bits for h in lat]
        assert len(set(bits)) == len(bits)
        assert lat[0].is_trivial() and lat[len(lat) - 1].is_whole()
        for h in lat:
            assert h.is_closed()
            assert g.order % h.order == 0


def test_containment_matrix_is_inclusion(s3):
    lat = all_subgroups(s3)
    for a, h in enumerate(lat):
        for b, k in enumerate(lat):
            assert lat.contains(a, b) == (set(h.members) <= set(k.members))


def test_lattice_cap():
    with pytest.raises(CapExceeded):
        all_subgroups(C.symmetric(4), cap=20)


def test_maximal_members_examples(s3):
    c4 = all_subgroups(C.cyclic(4))
    assert [h.order for h in maximal_members(list(c4))] == [2]
    lat = all_subgroups(s3)
    assert [h.order for h in maximal_members(list(lat))] == [2, 2, 2, 3]
    assert maximal_members([s3.trivial, s3.whole]) == [s3.trivial]


def test_maximal_members_antichain_and_oracle(full_corpus):
    for e in full_corpus:
        lat = e.lattice
        maxes = maximal_members(list(lat))
        for a in maxes:
            for b in maxes:
                assert a == b or not a <= b
        sets = {frozenset(h.members): h for h in lat}
        oracle = maximal_by_inclusion(list(sets), frozenset(range(e.group.order)))
        assert {frozenset(h.members) for h in maxes} == set(oracle)


def test_mixed_parents(s3, q8):
    with pytest.raises(MixedParents):
        maximal_members([s3.trivial, q8.trivial])
    with pytest.raises(MixedParents):
        join(s3.trivial, q8.whole)


def test_join_meet_examples(s3):
    lat = all_subgroups(s3)
    twos = lat.of_order(2)
    for h in lat:
        assert join(h, s3.trivial) == h
        assert meet(h, s3.whole) == h
    assert join(twos[0], twos[1]) == s3.whole
    assert meet(twos[0], twos[1]).is_trivial()


def test_absorption_laws(full_corpus):
    rng = random.Random(7)
    for e in full_corpus:
        subs = list(e.lattice)
        for _ in range(100):
            h, k = rng.choice(subs), rng.choice(subs)
            assert join(h, meet(h, k)) == h
            assert meet(h, join(h, k)) == h
            assert meet(h, k).is_closed() and join(h, k).is_closed()
            assert h <= join(h, k) and meet(h, k) <= k


def test_is_normal_examples(q8, s3):
    qlat = all_subgroups(q8)
    assert is_normal(qlat.of_order(2)[0], q8.whole)
    slat = all_subgroups(s3)
    assert not is_normal(slat.of_order(2)[0], s3.whole)
    assert is_normal(slat.of_order(3)[0], s3.whole)


def test_is_normal_requires_containment(s3):
    slat = all_subgroups(s3)
    with pytest.raises(NotContained):
        is_normal(slat.of_order(3)[0], slat.of_order(2)[0])


def test_is_normal_against_raw_conjugation(full_corpus):
    for e in full_corpus:
        g = e.group
        if g.order > 60:
            continue
        raw_whole = [p.images for p in g.elements]
        for h in e.lattice:
            raw_h = frozenset(g.elements[i].images for i in h.members)
            assert is_normal(h, g.whole) == raw_is_normal(raw_h, raw_whole)
