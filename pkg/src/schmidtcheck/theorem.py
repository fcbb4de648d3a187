"""Deciders for "every maximal A-invariant subgroup of order divisible by p is nilpotent".

Two independent routes answer the question for a triple ``(G, A, p)``:

* :func:`hypothesis_holds` scans the maximal A-invariant subgroups directly;
* :func:`classify` looks for one of the four structural shapes below and
  returns explicit witness subgroups.

  1. ``G`` is nilpotent.
  2. ``G = Q x| P`` with ``Q`` a normal Sylow ``q``-subgroup (``q != p``),
     ``P`` an A-invariant Sylow ``p``-subgroup with a unique maximal
     A-invariant subgroup ``P0`` and ``[Q, P0] = 1``, and an A-invariant
     ``Q0 < Q``, normal in ``G``, such that ``Q0 x P`` is nilpotent and is
     the only maximal A-invariant subgroup of ``G`` containing ``P``.
  3. The same shape with the roles swapped: ``G = P x| Q`` with ``P``
     normal.
  4. ``G = P x (Q x| R)`` with ``P``, ``Q`` normal Sylow subgroups for
     distinct primes ``p``, ``q``, ``R`` an A-invariant Sylow ``r``-subgroup,
     shape 2 holding inside ``Q x| R`` (with ``R`` in the role of ``P``), and
     ``Q x| R`` the only non-nilpotent maximal A-invariant subgroup of ``G``.

:func:`cross_validate` compares the two answers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .action import (
    CoprimeAction,
    is_invariant,
    maximal_invariant_subgroups,
    restrict_action,
)
from .errors import PrimeDoesNotDivide
from .groups import PermGroup, Subgroup, factorize, sylow_order
from .lattice import LatticeIndex, is_normal, meet
from .structure import (
    ProductKind,
    centralizes,
    internal_product_kind,
    invariant_sylows,
    is_cyclic,
    is_nilpotent,
    is_p_nilpotent,
    is_solvable,
    normal_sylow,
    product_subgroup,
)


class EngineError(AssertionError):
    """A fact guaranteed by theory failed to hold; signals a bug in the engine."""


class Case(enum.IntEnum):
    NONE = 0
    NILPOTENT = 1
    Q_NORMAL_P = 2
    P_NORMAL_Q = 3
    P_TIMES_QR = 4

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Case.NONE: "none",
    Case.NILPOTENT: "(1) G nilpotent",
    Case.Q_NORMAL_P: "(2) G = Q x| P",
    Case.P_NORMAL_Q: "(3) G = P x| Q",
    Case.P_TIMES_QR: "(4) G = P x (Q x| R)",
}


def _check_prime(group: PermGroup, prm: int) -> None:
    if prm < 2 or group.order % prm or len(factorize(prm)) != 1 or factorize(prm)[0][1] != 1:
        raise PrimeDoesNotDivide(prm, group.order)


@dataclass
class HypothesisVerdict:
    holds: bool
    offending: list[Subgroup]
    vacuous: bool
    # maximal A-invariant subgroups whose order is divisible by p
    relevant: list[Subgroup] = field(default_factory=list)


def hypothesis_holds(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int) -> HypothesisVerdict:
    """Check directly that every relevant maximal A-invariant subgroup is nilpotent."""
    _check_prime(group, prm)
    maxes = maximal_invariant_subgroups(group, act, lat)
    relevant = [m for m in maxes if m.order % prm == 0]
    offending = [m for m in relevant if not is_nilpotent(m)]
    return HypothesisVerdict(holds=not offending, offending=offending, vacuous=not relevant, relevant=relevant)


@dataclass
class CaseReport:
    case: Case
    witnesses: dict[str, Subgroup]
    # first failed condition for every case that was tried and did not match
    refutations: dict[int, str]
    # every case whose conditions hold (the report names the first)
    matching: list[Case] = field(default_factory=list)
    primes: dict[str, int] = field(default_factory=dict)

    @property
    def case_tag(self) -> Case:
        return self.case

    @property
    def matched(self) -> bool:
        return self.case is not Case.NONE


def _sylow_prime(group_order: int, h: Subgroup) -> int | None:
    """The prime ``r`` for which ``h`` has Sylow order, if any."""
    f = factorize(h.order)
    if len(f) != 1:
        return None
    r = f[0][0]
    return r if sylow_order(group_order, r) == h.order else None


def split_failure(
    group: PermGroup,
    lat: LatticeIndex,
    act: CoprimeAction,
    n: Subgroup,
    h: Subgroup,
    n0: Subgroup,
    h0: Subgroup,
    names: tuple[str, str] = ("Q", "P"),
    uniqueness: str = "all",
) -> str | None:
    """First failed condition of the split shape ``G = N x| H``, or ``None``.

    Checks: ``N`` is a normal Sylow subgroup (and A-invariant), ``H`` an
    A-invariant Sylow subgroup for a different prime, ``G = N x| H``;
    ``N0 < N`` is A-invariant and normal in ``G``; ``N0 x H`` is a nilpotent
    maximal A-invariant subgroup and the only one containing ``H``;
    ``H0`` is the unique maximal A-invariant subgroup of ``H``;
    ``[N, H0] = 1``.

    With ``uniqueness="nilpotent"`` the uniqueness of ``N0 x H`` is only
    required among the *nilpotent* maximal A-invariant subgroups containing
    ``H``.  That weaker reading admits groups such as ``C3 x S3`` (p = 2),
    where ``1 x S3`` is a non-nilpotent maximal subgroup of even order.
    """
    nn, hn = names
    whole = group.whole
    qn, ph = _sylow_prime(group.order, n), _sylow_prime(group.order, h)
    if qn is None:
        return f"{nn} is not a Sylow subgroup"
    if ph is None:
        return f"{hn} is not a Sylow subgroup"
    if qn == ph:
        return f"{nn} and {hn} belong to the same prime"
    if not is_normal(n, whole):
        return f"{nn} is not normal"
    if not is_invariant(n, act):
        raise EngineError(f"normal Sylow subgroup {nn} is not A-invariant")
    if not is_invariant(h, act):
        return f"{hn} is not A-invariant"
    kind = internal_product_kind(n, h)
    if kind not in (ProductKind.SEMIDIRECT_X_NORMAL, ProductKind.DIRECT):
        return f"G is not {nn} x| {hn}"
    if not n0.issubset(n) or n0.order == n.order:
        return f"{nn}0 is not a proper subgroup of {nn}"
    if not is_invariant(n0, act):
        return f"{nn}0 is not A-invariant"
    if not is_normal(n0, whole):
        return f"{nn}0 is not normal in G"
    if not centralizes(n0, h):
        return f"{nn}0 x {hn} is not a direct product"
    m = product_subgroup(n0, h)
    if m.order != n0.order * h.order:
        raise EngineError("commuting subgroups of coprime order do not multiply")
    maxes = maximal_invariant_subgroups(group, act, lat)
    if m not in maxes:
        return f"{nn}0 x {hn} is not a maximal A-invariant subgroup"
    if not is_nilpotent(m):
        raise EngineError(f"{nn}0 x {hn} is a direct product of p-groups but not nilpotent")
    over_h = _maximal_over(maxes, h, uniqueness)
    if over_h != [m]:
        kind = "nilpotent maximal" if uniqueness == "nilpotent" else "maximal"
        return f"{nn}0 x {hn} is not the unique {kind} A-invariant subgroup containing {hn} ({len(over_h)} found)"
    if not h0.issubset(h):
        return f"{hn}0 is not inside {hn}"
    inner = restrict_action(act, h).maximal_invariant_subgroups()
    if inner != [h0]:
        return f"{hn} does not have {hn}0 as its unique maximal A-invariant subgroup ({len(inner)} maximal)"
    if not centralizes(n, h0):
        return f"[{nn}, {hn}0] != 1"
    return None


def _maximal_over(maxes, h, uniqueness):
    if uniqueness not in ("all", "nilpotent"):
        raise ValueError(f"unknown uniqueness reading {uniqueness!r}")
    over = [x for x in maxes if h.issubset(x)]
    if uniqueness == "nilpotent":
        over = [x for x in over if is_nilpotent(x)]
    return over


def _split_search(group, lat, act, n, h, names, uniqueness):
    """Derive ``N0`` and ``H0`` for a fixed ``(N, H)`` and test the split shape."""
    nn, hn = names
    maxes = maximal_invariant_subgroups(group, act, lat)
    nil_over_h = [x for x in maxes if h.issubset(x) and is_nilpotent(x)]
    if not nil_over_h:
        return None, f"no nilpotent maximal A-invariant subgroup contains {hn}"
    n0 = meet(nil_over_h[0], n)
    inner = restrict_action(act, h).maximal_invariant_subgroups()
    if len(inner) != 1:
        return None, f"{hn} has {len(inner)} maximal A-invariant subgroups"
    h0 = inner[0]
    failure = split_failure(group, lat, act, n, h, n0, h0, names, uniqueness)
    if failure:
        return None, failure
    return {nn: n, hn: h, f"{nn}0": n0, f"{hn}0": h0}, None


def _case_split(group, lat, act, prm, normal_prime_is_p, uniqueness):
    primes = [r for r, _ in factorize(group.order)]
    if len(primes) != 2:
        return None, f"|G| has {len(primes)} prime divisors, not 2"
    other = primes[0] if primes[1] == prm else primes[1]
    if normal_prime_is_p:
        normal_prime, comp_prime, names = prm, other, ("P", "Q")
    else:
        normal_prime, comp_prime, names = other, prm, ("Q", "P")
    n = normal_sylow(group, lat, normal_prime)
    if n is None:
        return None, f"Sylow {normal_prime}-subgroup is not normal"
    candidates = invariant_sylows(group, lat, act, comp_prime)
    if not candidates:
        raise EngineError(f"no A-invariant Sylow {comp_prime}-subgroup under a coprime action")
    first_failure = None
    for h in candidates:
        found, failure = _split_search(group, lat, act, n, h, names, uniqueness)
        if found:
            return found, None
        first_failure = first_failure or failure
    return None, first_failure


def case4_failure(group, lat, act, prm, w: dict[str, Subgroup], uniqueness: str = "all") -> str | None:
    """First failed condition of shape 4 for the witnesses ``P, Q, R, Q0, R0, QR``."""
    p, q, r = w["P"], w["Q"], w["R"]
    whole = group.whole
    primes = [_sylow_prime(group.order, x) for x in (p, q, r)]
    if None in primes:
        return "P, Q, R are not all Sylow subgroups"
    if len(set(primes)) != 3:
        return "p, q, r are not distinct primes"
    if primes[0] != prm:
        return "P is not a Sylow p-subgroup"
    if p.order * q.order * r.order != group.order:
        return "|G| != |P||Q||R|"
    if not is_normal(p, whole):
        return "P is not normal"
    if not is_normal(q, whole):
        return "Q is not normal"
    for name, x in (("P", p), ("Q", q)):
        if not is_invariant(x, act):
            raise EngineError(f"normal Sylow subgroup {name} is not A-invariant")
    if not is_invariant(r, act):
        return "R is not A-invariant"
    k = product_subgroup(q, r)
    if k.order != q.order * r.order:
        raise EngineError("Q R is not a subgroup although Q is normal")
    if "QR" in w and w["QR"] != k:
        return "stored Q x| R does not match Q R"
    if not is_invariant(k, act):
        return "Q x| R is not A-invariant"
    if internal_product_kind(p, k) is not ProductKind.DIRECT:
        return "G is not P x (Q x| R)"
    maxes = maximal_invariant_subgroups(group, act, lat)
    non_nil = [x for x in maxes if not is_nilpotent(x)]
    if non_nil != [k]:
        return f"Q x| R is not the unique non-nilpotent maximal A-invariant subgroup ({len(non_nil)} non-nilpotent maximal)"
    ra = restrict_action(act, k)
    inner = split_failure(
        ra.group, ra.lattice, ra.action,
        ra.lower(q), ra.lower(r), ra.lower(w["Q0"]), ra.lower(w["R0"]),
        names=("Q", "R"), uniqueness=uniqueness,
    )
    if inner:
        return f"inside Q x| R: {inner}"
    return None


def _case4(group, lat, act, prm, uniqueness):
    primes = [r for r, _ in factorize(group.order)]
    if len(primes) != 3:
        return None, f"|G| has {len(primes)} prime divisors, not 3"
    p = normal_sylow(group, lat, prm)
    if p is None:
        return None, "Sylow p-subgroup is not normal"
    others = [x for x in primes if x != prm]
    first_failure = None
    for qp, rp in (others, others[::-1]):
        q = normal_sylow(group, lat, qp)
        if q is None:
            first_failure = first_failure or f"Sylow {qp}-subgroup is not normal"
            continue
        rs = invariant_sylows(group, lat, act, rp)
        if not rs:
            raise EngineError(f"no A-invariant Sylow {rp}-subgroup under a coprime action")
        for r in rs:
            k = product_subgroup(q, r)
            if not is_invariant(k, act) or internal_product_kind(p, k) is not ProductKind.DIRECT:
                first_failure = first_failure or "G is not P x (Q x| R)"
                continue
            ra = restrict_action(act, k)
            found, failure = _split_search(ra.group, ra.lattice, ra.action, ra.lower(q), ra.lower(r), ("Q", "R"), uniqueness)
            if not found:
                first_failure = first_failure or f"inside Q x| R: {failure}"
                continue
            w = {"P": p, "Q": q, "R": r, "Q0": ra.lift(found["Q0"]), "R0": ra.lift(found["R0"]), "QR": k}
            failure = case4_failure(group, lat, act, prm, w, uniqueness)
            if failure is None:
                return w, None
            first_failure = first_failure or failure
    return None, first_failure


def _case1(group, lat, act, prm, uniqueness):
    if is_nilpotent(group.whole):
        return {}, None
    return None, "G is not nilpotent"


def _case2(group, lat, act, prm, uniqueness):
    return _case_split(group, lat, act, prm, False, uniqueness)


def _case3(group, lat, act, prm, uniqueness):
    return _case_split(group, lat, act, prm, True, uniqueness)


_CASES = ((Case.NILPOTENT, _case1), (Case.Q_NORMAL_P, _case2), (Case.P_NORMAL_Q, _case3), (Case.P_TIMES_QR, _case4))


def _witness_primes(witnesses):
    out = {}
    for name, h in witnesses.items():
        if len(name) == 1:
            f = factorize(h.order)
            out[name.lower()] = f[0][0] if f else 1
    return out


def classify(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int, uniqueness: str = "all") -> CaseReport:
    """Find the first of the four shapes that holds, with canonical witnesses.

    ``uniqueness`` selects how "the unique nilpotent maximal A-invariant
    subgroup containing P" is read; see :func:`split_failure`.
    """
    _check_prime(group, prm)
    chosen: tuple[Case, dict] | None = None
    refutations = {}
    matching = []
    for case, test in _CASES:
        witnesses, failure = test(group, lat, act, prm, uniqueness)
        if witnesses is None:
            refutations[int(case)] = failure
            continue
        matching.append(case)
        if chosen is None:
            chosen = (case, witnesses)
    if chosen is None:
        return CaseReport(Case.NONE, {}, refutations, matching)
    case, witnesses = chosen
    return CaseReport(case, witnesses, refutations, matching, _witness_primes(witnesses))


def replay_witnesses(
    group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int, report: CaseReport, uniqueness: str = "all"
) -> str | None:
    """Re-check every condition of the reported case against its stored witnesses."""
    w = report.witnesses
    if report.case is Case.NONE:
        return None
    if report.case is Case.NILPOTENT:
        return None if is_nilpotent(group.whole) else "G is not nilpotent"
    if report.case is Case.Q_NORMAL_P:
        if _sylow_prime(group.order, w["P"]) != prm:
            return "P is not a Sylow p-subgroup"
        return split_failure(group, lat, act, w["Q"], w["P"], w["Q0"], w["P0"], ("Q", "P"), uniqueness)
    if report.case is Case.P_NORMAL_Q:
        if _sylow_prime(group.order, w["P"]) != prm:
            return "P is not a Sylow p-subgroup"
        return split_failure(group, lat, act, w["P"], w["Q"], w["P0"], w["Q0"], ("P", "Q"), uniqueness)
    return case4_failure(group, lat, act, prm, w, uniqueness)


@dataclass
class CrossValidation:
    hypothesis: HypothesisVerdict
    case: CaseReport
    consistent: bool


def cross_validate(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int, uniqueness: str = "all") -> CrossValidation:
    verdict = hypothesis_holds(group, lat, act, prm)
    report = classify(group, lat, act, prm, uniqueness)
    return CrossValidation(verdict, report, verdict.holds == report.matched)


@dataclass
class CheckResult:
    name: str
    passed: bool
    premise: bool
    detail: str = ""


def check_theorem_A(group: PermGroup, lat: LatticeIndex, act: CoprimeAction) -> CheckResult:
    """If all maximal A-invariant subgroups are nilpotent but G is not, G is
    solvable of order ``p^a q^b`` with a normal A-invariant Sylow subgroup."""
    maxes = maximal_invariant_subgroups(group, act, lat)
    premise = all(is_nilpotent(m) for m in maxes) and not is_nilpotent(group.whole)
    if not premise:
        return CheckResult("theorem_A", True, False, "premise false")
    if not is_solvable(group):
        return CheckResult("theorem_A", False, True, "G is not solvable")
    primes = [p for p, _ in factorize(group.order)]
    if len(primes) != 2:
        return CheckResult("theorem_A", False, True, f"|G| has {len(primes)} prime divisors")
    for p in primes:
        s = normal_sylow(group, lat, p)
        if s is not None and is_invariant(s, act):
            return CheckResult("theorem_A", True, True, f"normal A-invariant Sylow {p}-subgroup")
    return CheckResult("theorem_A", False, True, "no normal A-invariant Sylow subgroup")


def check_solvability_implication(group, lat, act, prm, verdict: HypothesisVerdict | None = None) -> CheckResult:
    """The hypothesis forces G to be solvable."""
    verdict = verdict or hypothesis_holds(group, lat, act, prm)
    if not verdict.holds:
        return CheckResult("solvability", True, False, "hypothesis fails")
    if is_solvable(group):
        return CheckResult("solvability", True, True, "solvable")
    return CheckResult("solvability", False, True, "hypothesis holds but G is not solvable")


def check_corollary(group, lat, act, prm, verdict=None, report=None) -> CheckResult:
    """Non-p-nilpotent with the hypothesis exactly when the classifier reports shape 3."""
    verdict = verdict or hypothesis_holds(group, lat, act, prm)
    report = report or classify(group, lat, act, prm)
    left = (not is_p_nilpotent(group, lat, prm)) and verdict.holds
    right = report.case is Case.P_NORMAL_Q
    return CheckResult("corollary", left == right, left, f"left={left} right={right}")


def check_minimal_non_nilpotent(group, lat, act, prm, report=None) -> CheckResult:
    """For the trivial action: G is a Schmidt group exactly when the classifier
    reports shape 2 or 3 with a cyclic non-normal Sylow subgroup."""
    if not act.is_trivial():
        return CheckResult("schmidt", True, False, "nontrivial action")
    report = report or classify(group, lat, act, prm)
    maxes = maximal_invariant_subgroups(group, act, lat)
    left = all(is_nilpotent(m) for m in maxes) and not is_nilpotent(group.whole)
    if report.case is Case.Q_NORMAL_P:
        right = is_cyclic(report.witnesses["P"])
    elif report.case is Case.P_NORMAL_Q:
        right = is_cyclic(report.witnesses["Q"])
    else:
        right = False
    return CheckResult("schmidt", left == right, left, f"left={left} right={right}")


def check_unique_invariant_maximal_example() -> CheckResult:
    """Q8 under an automorphism of order 3 has one maximal invariant subgroup,
    of order 2, although Q8 is not cyclic."""
    from .corpus import quaternion_with_order3_action
    from .lattice import all_subgroups

    group, act = quaternion_with_order3_action()
    lat = all_subgroups(group)
    maxes = maximal_invariant_subgroups(group, act, lat)
    orders = [m.order for m in maxes]
    non_cyclic = max(group.element_orders) < group.order
    ok = orders == [2] and non_cyclic and act.order == 3
    return CheckResult("q8_unique_maximal", ok, True, f"maximal invariant orders {orders}, non-cyclic={non_cyclic}")


def check_remark_examples() -> list[CheckResult]:
    """Run the Q8 fixture and the Schmidt-group equivalence over the trivial-action corpus."""
    from .corpus import build_corpus

    results = [check_unique_invariant_maximal_example()]
    for entry in build_corpus():
        if not entry.action.is_trivial():
            continue
        for prm in entry.primes():
            r = check_minimal_non_nilpotent(entry.group, entry.lattice, entry.action, prm)
            r.name = f"schmidt[{entry.name}, p={prm}]"
            results.append(r)
    return results
