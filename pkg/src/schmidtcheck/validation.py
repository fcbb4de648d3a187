"""Input checks shared by the estimator API and the command line."""
from __future__ import annotations

from typing import Any, NamedTuple

from .action import CoprimeAction, trivial_action
from .errors import MixedTargets, PrimeDoesNotDivide
from .groups import PermGroup, is_prime


class Triple(NamedTuple):
    group: PermGroup
    action: CoprimeAction
    prime: int


def check_group(group: Any) -> PermGroup:
    if not isinstance(group, PermGroup):
        raise TypeError(f"expected a PermGroup, got {type(group).__name__}")
    return group


def check_action(action: CoprimeAction | None, group: PermGroup) -> CoprimeAction:
    if action is None:
        return trivial_action(group)
    if not isinstance(action, CoprimeAction):
        raise TypeError(f"expected a CoprimeAction, got {type(action).__name__}")
    if action.target is not group:
        raise MixedTargets("the action does not act on the given group")
    return action


def check_prime(prime: int, group: PermGroup) -> int:
    if not isinstance(prime, int) or not is_prime(prime) or group.order % prime:
        raise PrimeDoesNotDivide(prime, group.order)
    return prime


def check_sample(sample: Any, prime: int | None = None) -> Triple:
    """Normalize one sample to a :class:`Triple`.

    Accepted forms: ``group``, ``(group, action)``, ``(group, action, prime)``
    or any object with ``group`` and ``action`` attributes (a corpus entry).
    A prime inside the sample wins over ``prime``.
    """
    action = None
    if isinstance(sample, PermGroup):
        group = sample
    elif hasattr(sample, "group") and hasattr(sample, "action"):
        group, action = sample.group, sample.action
        prime = getattr(sample, "prime", prime)
    elif isinstance(sample, tuple) and len(sample) in (2, 3):
        group, action = sample[0], sample[1]
        if len(sample) == 3:
            prime = sample[2]
    else:
        raise TypeError(f"cannot interpret {type(sample).__name__} as a (group, action, prime) sample")
    group = check_group(group)
    action = check_action(action, group)
    if prime is None:
        raise ValueError("no prime given: set it on the estimator or pass (group, action, prime)")
    return Triple(group, action, check_prime(prime, group))


def check_samples(X, prime: int | None = None) -> list[Triple]:
    if isinstance(X, (PermGroup, str, bytes)):
        raise TypeError("expected a sequence of samples, not a single sample")
    return [check_sample(s, prime) for s in X]
