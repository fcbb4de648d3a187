import pytest

from schmidtcheck import corpus as C
from schmidtcheck.action import maximal_invariant_subgroups, trivial_action
from schmidtcheck.errors import PrimeDoesNotDivide
from schmidtcheck.lattice import all_subgroups
from schmidtcheck.structure import is_nilpotent
from schmidtcheck.theorem import (
    Case,
    check_corollary,
    check_minimal_non_nilpotent,
    check_remark_examples,
    check_solvability_implication,
    check_theorem_A,
    check_unique_invariant_maximal_example,
    classify,
    cross_validate,
    hypothesis_holds,
    replay_witnesses,
)


def _triv(group):
    return group, all_subgroups(group), trivial_action(group)


def test_hypothesis_examples(s3):
    g, lat, act = _triv(s3)
    v = hypothesis_holds(g, lat, act, 2)
    assert v.holds and not v.vacuous
    assert sorted(h.order for h in v.relevant) == [2, 2, 2]
    g, lat, act = _triv(C.alternating(5))
    v = hypothesis_holds(g, lat, act, 5)
    assert not v.holds
    assert len(v.offending) == 6 and {h.order for h in v.offending} == {10}


def test_vacuous_hypothesis():
    # Q8 under the order-3 rotation: the only maximal invariant subgroup has
    # order 2, so for p = 2 it is relevant and nilpotent
    g, act = C.quaternion_with_order3_action()
    v = hypothesis_holds(g, all_subgroups(g), act, 2)
    assert v.holds and [h.order for h in v.relevant] == [2]
    g, lat, act = _triv(C.cyclic(7))
    v = hypothesis_holds(g, lat, act, 7)
    assert v.holds and v.vacuous


def test_prime_must_divide(s3):
    g, lat, act = _triv(s3)
    with pytest.raises(PrimeDoesNotDivide):
        hypothesis_holds(g, lat, act, 5)
    with pytest.raises(PrimeDoesNotDivide):
        classify(g, lat, act, 6)


def test_abelian_is_case_one():
    g, lat, act = _triv(C.cyclic(6))
    for p in (2, 3):
        r = classify(g, lat, act, p)
        assert r.case is Case.NILPOTENT and r.matched
        assert replay_witnesses(g, lat, act, p, r) is None


def test_sl23_cases(sl23):
    g, lat = sl23
    act = trivial_action(g)
    r3 = classify(g, lat, act, 3)
    assert r3.case is Case.Q_NORMAL_P
    w = r3.witnesses
    assert w["Q"].order == 8 and w["P"].order == 3
    assert w["P0"].is_trivial()
    # Q0 is the centre of the quaternion Sylow 2-subgroup (and of G)
    centre = [x for x in w["Q"].members if all(g.mul(x, y) == g.mul(y, x) for y in w["Q"].members)]
    assert sorted(w["Q0"].members) == centre and w["Q0"].order == 2
    assert replay_witnesses(g, lat, act, 3, r3) is None
    r2 = classify(g, lat, act, 2)
    assert r2.case is Case.P_NORMAL_Q
    assert replay_witnesses(g, lat, act, 2, r2) is None


def test_c5_sl23_case_four(c5_sl23):
    g, lat = c5_sl23
    act = trivial_action(g)
    r = classify(g, lat, act, 5)
    assert r.case is Case.P_TIMES_QR
    assert r.primes == {"p": 5, "q": 2, "r": 3}
    qr = r.witnesses["QR"]
    assert qr.order == 24
    non_nil = [m for m in maximal_invariant_subgroups(g, act, lat) if not is_nilpotent(m)]
    assert non_nil == [qr]
    assert replay_witnesses(g, lat, act, 5, r) is None
    for p in (2, 3):
        assert classify(g, lat, act, p).case is Case.NONE
        assert not hypothesis_holds(g, lat, act, p).holds


def test_replay_detects_tampered_witnesses(sl23):
    g, lat = sl23
    act = trivial_action(g)
    r = classify(g, lat, act, 3)
    r.witnesses["Q0"] = g.trivial
    assert replay_witnesses(g, lat, act, 3, r) is not None


def test_literal_uniqueness_reading_breaks_equivalence():
    # reading the uniqueness clause as "unique among nilpotent maximal
    # invariant subgroups" matches C3 x S3 although the hypothesis fails
    e = C.build_entry("C3xS3")
    for p in e.primes():
        assert not hypothesis_holds(e.group, e.lattice, e.action, p).holds
        assert classify(e.group, e.lattice, e.action, p).case is Case.NONE
        assert classify(e.group, e.lattice, e.action, p, uniqueness="nilpotent").case is not Case.NONE


def test_cross_validation_over_corpus(full_corpus):
    for e in full_corpus:
        for p in e.primes():
            cv = cross_validate(e.group, e.lattice, e.action, p)
            assert cv.consistent, (e.key, p, cv.case.refutations)
            if cv.case.matched:
                assert replay_witnesses(e.group, e.lattice, e.action, p, cv.case) is None
                assert cv.case.case in cv.case.matching


def test_action_changes_the_answer():
    e = C.build_entry("C2^4:C3+A5")
    plain = C.build_entry("C2^4:C3")
    assert not hypothesis_holds(plain.group, plain.lattice, plain.action, 2).holds
    assert hypothesis_holds(e.group, e.lattice, e.action, 2).holds
    assert classify(e.group, e.lattice, e.action, 2).matched


def test_satellite_checks_over_corpus(full_corpus):
    for e in full_corpus:
        r = check_theorem_A(e.group, e.lattice, e.action)
        assert r.passed, (e.key, r.detail)
        for p in e.primes():
            for chk in (check_solvability_implication, check_corollary, check_minimal_non_nilpotent):
                r = chk(e.group, e.lattice, e.action, p)
                assert r.passed, (e.key, p, r.name, r.detail)


def test_theorem_A_premise_is_exercised(full_corpus):
    premises = [check_theorem_A(e.group, e.lattice, e.action).premise for e in full_corpus]
    assert sum(premises) >= 5


def test_remark_examples():
    assert check_unique_invariant_maximal_example().passed
    results = check_remark_examples()
    assert all(r.passed for r in results)
    assert any(r.premise for r in results[1:])


def test_classification_is_deterministic(sl23):
    g, lat = sl23
    act = trivial_action(g)
    a = classify(g, lat, act, 3)
    b = classify(g, all_subgroups(g), act, 3)
    assert a.case == b.case
    assert {k: v.bits for k, v in a.witnesses.items()} == {k: v.bits for k, v in b.witnesses.items()}
