"""Sylow subgroups, nilpotency, solvability and internal products."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .action import CoprimeAction, is_invariant
from .errors import MixedParents, PrimeDoesNotDivide
from .groups import (
    PermGroup,
    Subgroup,
    closure_bits,
    commutator_subgroup,
    derived_series,
    factorize,
    sylow_order,
)
from .lattice import LatticeIndex, is_normal, meet


@dataclass(frozen=True)
class PrimeFactorization:
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> PrimeFactorization:
        return cls(tuple(factorize(n)))

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _require_prime(order: int, prm: int) -> None:
    if prm < 2 or order % prm:
        raise PrimeDoesNotDivide(prm, order)


def sylow_subgroups(group: PermGroup, lat: LatticeIndex, prm: int) -> list[Subgroup]:
    """All Sylow ``prm``-subgroups, in lattice order."""
    _require_prime(group.order, prm)
    return lat.of_order(sylow_order(group.order, prm))


def invariant_sylow(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int) -> Subgroup | None:
    """The first A-invariant Sylow ``prm``-subgroup, or ``None``."""
    for s in sylow_subgroups(group, lat, prm):
        if is_invariant(s, act):
            return s
    return None


def invariant_sylows(group: PermGroup, lat: LatticeIndex, act: CoprimeAction, prm: int) -> list[Subgroup]:
    return [s for s in sylow_subgroups(group, lat, prm) if is_invariant(s, act)]


def normal_sylow(group: PermGroup, lat: LatticeIndex, prm: int) -> Subgroup | None:
    """The Sylow ``prm``-subgroup if it is normal (equivalently unique), else ``None``."""
    found = sylow_subgroups(group, lat, prm)
    return found[0] if len(found) == 1 else None


def p_elements(h: Subgroup, prm: int) -> int:
    """Bitset of the elements of ``h`` whose order is a power of ``prm``."""
    orders = h.parent.element_orders
    bits = 0
    for x in h.members:
        n = orders[x]
        while n % prm == 0:
            n //= prm
        if n == 1:
            bits |= 1 << x
    return bits


def has_normal_sylow(h: Subgroup, prm: int) -> bool:
    """Whether the Sylow ``prm``-subgroups of ``h`` are normal in ``h``.

    A Sylow subgroup is normal exactly when it is the only one, which
    happens exactly when the ``prm``-elements of ``h`` number ``prm^a``.
    """
    return p_elements(h, prm).bit_count() == sylow_order(h.order, prm)


def is_nilpotent(h: Subgroup) -> bool:
    """Every Sylow subgroup of ``h`` is normal in ``h``."""
    return all(has_normal_sylow(h, p) for p, _ in factorize(h.order))


def lower_central_series(h: Subgroup) -> list[Subgroup]:
    """``H = g1 >= g2 >= ...`` with ``g(k+1) = [g(k), H]``, until it stabilizes."""
    series = [h]
    while True:
        nxt = commutator_subgroup(series[-1], h)
        if nxt.bits == series[-1].bits:
            return series
        series.append(nxt)


def is_nilpotent_lcs(h: Subgroup) -> bool:
    return lower_central_series(h)[-1].is_trivial()


def is_p_nilpotent(group: PermGroup, lat: LatticeIndex, prm: int) -> bool:
    """Whether the group has a normal ``prm``-complement."""
    _require_prime(group.order, prm)
    target = group.order // sylow_order(group.order, prm)
    whole = group.whole
    return any(is_normal(h, whole) for h in lat.of_order(target))


def normal_p_complement(group: PermGroup, lat: LatticeIndex, prm: int) -> Subgroup | None:
    _require_prime(group.order, prm)
    target = group.order // sylow_order(group.order, prm)
    whole = group.whole
    for h in lat.of_order(target):
        if is_normal(h, whole):
            return h
    return None


def is_solvable(group: PermGroup | Subgroup) -> bool:
    """The derived series reaches the trivial subgroup."""
    h = group.whole if isinstance(group, PermGroup) else group
    return derived_series(h)[-1].is_trivial()


def centralizes(x: Subgroup, y: Subgroup) -> bool:
    """``[X, Y] = 1``."""
    if x.parent is not y.parent:
        raise MixedParents("subgroups belong to different groups")
    t = x.parent.mul_table
    return all(t[a][b] == t[b][a] for a in x.generators for b in y.generators)


class ProductKind(enum.Enum):
    DIRECT = "direct"
    SEMIDIRECT_X_NORMAL = "semidirect_X_normal"
    SEMIDIRECT_Y_NORMAL = "semidirect_Y_normal"
    NOT_PRODUCT = "not_product"


def internal_product_kind(x: Subgroup, y: Subgroup) -> ProductKind:
    """How the parent group factors as ``X Y`` (if at all)."""
    if x.parent is not y.parent:
        raise MixedParents("subgroups belong to different groups")
    group = x.parent
    if not meet(x, y).is_trivial() or x.order * y.order != group.order:
        return ProductKind.NOT_PRODUCT
    whole = group.whole
    xn, yn = is_normal(x, whole), is_normal(y, whole)
    if xn and yn:
        return ProductKind.DIRECT
    if xn:
        return ProductKind.SEMIDIRECT_X_NORMAL
    if yn:
        return ProductKind.SEMIDIRECT_Y_NORMAL
    return ProductKind.NOT_PRODUCT


def product_subgroup(x: Subgroup, y: Subgroup) -> Subgroup:
    """The subgroup generated by ``X`` and ``Y``."""
    if x.parent is not y.parent:
        raise MixedParents("subgroups belong to different groups")
    return Subgroup(x.parent, closure_bits(x.parent, x.generators + y.generators))


def is_cyclic(h: Subgroup) -> bool:
    orders = h.parent.element_orders
    return any(orders[x] == h.order for x in h.members)
