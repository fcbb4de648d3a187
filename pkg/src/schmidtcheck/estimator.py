"""Estimator-style wrappers so the deciders compose with scikit-learn tooling.

Samples are ``(group, action, prime)`` triples (see
:func:`schmidtcheck.validation.check_sample` for the shorthand forms).
Nothing is learned from data: ``fit`` validates parameters and caches the
subgroup lattices of the groups it has seen.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .lattice import DEFAULT_LATTICE_CAP, all_subgroups
from .theorem import Case, classify, cross_validate, hypothesis_holds
from .validation import check_samples

_READINGS = ("all", "nilpotent")


class _TheoremEstimator(ClassifierMixin, BaseEstimator):
    def __init__(self, prime=None, uniqueness="all", lattice_cap=DEFAULT_LATTICE_CAP):
        self.prime = prime
        self.uniqueness = uniqueness
        self.lattice_cap = lattice_cap

    def _validate_params(self):
        if self.uniqueness not in _READINGS:
            raise ValueError(f"uniqueness must be one of {_READINGS}, got {self.uniqueness!r}")
        if not isinstance(self.lattice_cap, int) or self.lattice_cap < 1:
            raise ValueError(f"lattice_cap must be a positive integer, got {self.lattice_cap!r}")

    def _lattice(self, group):
        cache = getattr(self, "lattices_", None)
        if cache is None:
            cache = self.lattices_ = {}
        lat = cache.get(id(group))
        if lat is None or lat.group is not group:
            lat = cache[id(group)] = all_subgroups(group, cap=self.lattice_cap)
        return lat

    def fit(self, X, y=None):
        self._validate_params()
        self.lattices_ = {}
        triples = check_samples(X, self.prime)
        for t in triples:
            self._lattice(t.group)
        self.n_samples_fit_ = len(triples)
        self.classes_ = self._classes()
        return self

    def _triples(self, X):
        check_is_fitted(self, "classes_")
        return check_samples(X, self.prime)


class CaseClassifier(_TheoremEstimator):
    """Predict which structural case (1-4, or 0 for none) describes each sample."""

    def _classes(self):
        return np.array([int(c) for c in Case])

    def predict(self, X):
        return np.array([int(self.report(t).case) for t in self._triples(X)], dtype=int)

    def report(self, triple):
        g, a, p = triple
        return classify(g, self._lattice(g), a, p, self.uniqueness)

    def reports(self, X):
        return [self.report(t) for t in self._triples(X)]


class HypothesisClassifier(_TheoremEstimator):
    """Predict whether every maximal A-invariant subgroup of order divisible by p is nilpotent.

    ``method="classify"`` answers through the structural classifier,
    ``method="direct"`` by scanning maximal invariant subgroups.  Scoring
    one against labels produced by the other measures their agreement.
    """

    def __init__(self, prime=None, uniqueness="all", lattice_cap=DEFAULT_LATTICE_CAP, method="classify"):
        super().__init__(prime=prime, uniqueness=uniqueness, lattice_cap=lattice_cap)
        self.method = method

    def _validate_params(self):
        super()._validate_params()
        if self.method not in ("classify", "direct"):
            raise ValueError(f"method must be 'classify' or 'direct', got {self.method!r}")

    def _classes(self):
        return np.array([False, True])

    def predict(self, X):
        out = []
        for g, a, p in self._triples(X):
            lat = self._lattice(g)
            if self.method == "direct":
                out.append(hypothesis_holds(g, lat, a, p).holds)
            else:
                out.append(classify(g, lat, a, p, self.uniqueness).matched)
        return np.array(out, dtype=bool)

    def cross_validate(self, X):
        """Per-sample agreement of the two routes."""
        return np.array(
            [cross_validate(g, self._lattice(g), a, p, self.uniqueness).consistent for g, a, p in self._triples(X)],
            dtype=bool,
        )
