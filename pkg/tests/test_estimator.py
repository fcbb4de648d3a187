import numpy as np
import pytest
from sklearn.base import clone

from schmidtcheck import corpus as C
from schmidtcheck.errors import MixedTargets, PrimeDoesNotDivide
from schmidtcheck.estimator import CaseClassifier, HypothesisClassifier
from schmidtcheck.validation import Triple, check_sample, check_samples


@pytest.fixture(scope="module")
def triples(full_corpus):
    return [Triple(e.group, e.action, p) for e in full_corpus if e.group.order <= 60 for p in e.primes()]


def test_params_round_trip():
    est = HypothesisClassifier(prime=3, method="direct")
    params = est.get_params()
    assert params == {"prime": 3, "uniqueness": "all", "lattice_cap": 512, "method": "direct"}
    other = clone(est)
    assert other.get_params() == params and other is not est
    est.set_params(uniqueness="nilpotent")
    assert est.uniqueness == "nilpotent"


def test_invalid_params_rejected(s3):
    with pytest.raises(ValueError):
        CaseClassifier(prime=2, uniqueness="some").fit([s3])
    with pytest.raises(ValueError):
        HypothesisClassifier(prime=2, method="guess").fit([s3])
    with pytest.raises(ValueError):
        CaseClassifier(prime=2, lattice_cap=0).fit([s3])


def test_predict_before_fit(s3):
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        CaseClassifier(prime=2).predict([s3])


def test_sample_forms(s3, q8_acted):
    g, act, _ = q8_acted
    assert check_sample(s3, 3).prime == 3
    assert check_sample((g, act), 2).action is act
    assert check_sample((g, act, 2)).prime == 2
    assert check_sample(C.build_entry("S3"), 2).group.order == 6
    with pytest.raises(ValueError):
        check_sample(s3)
    with pytest.raises(PrimeDoesNotDivide):
        check_sample(s3, 5)
    with pytest.raises(MixedTargets):
        check_sample((s3, act, 2))
    with pytest.raises(TypeError):
        check_sample("S3", 2)
    with pytest.raises(TypeError):
        check_samples(s3)


def test_case_predictions(sl23, c5_sl23):
    est = CaseClassifier().fit([(sl23[0], None, 3), (c5_sl23[0], None, 5)])
    assert list(est.predict([(sl23[0], None, 3), (sl23[0], None, 2), (c5_sl23[0], None, 5)])) == [2, 3, 4]
    assert list(est.classes_) == [0, 1, 2, 3, 4]
    assert est.n_samples_fit_ == 2


def test_two_routes_agree(triples):
    direct = HypothesisClassifier(method="direct").fit(triples)
    y = direct.predict(triples)
    assert y.dtype == bool and y.any() and not y.all()
    est = HypothesisClassifier().fit(triples)
    assert est.score(triples, y) == 1.0
    assert est.cross_validate(triples).all()


def test_case_and_hypothesis_are_compatible(triples):
    cases = CaseClassifier().fit(triples).predict(triples)
    holds = HypothesisClassifier().fit(triples).predict(triples)
    assert np.array_equal(cases != 0, holds)
