"""Subgroup lattice enumeration and lattice queries."""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapExceeded, MixedParents, NotContained
from .groups import PermGroup, Subgroup, closure_bits, is_prime_power, iter_bits

DEFAULT_LATTICE_CAP = 512
_MATRIX_LIMIT = 4096


class LatticeIndex:
    """Every subgroup of a group, sorted by ``(order, bitset)``."""

    def __init__(self, group: PermGroup, subgroups: Sequence[Subgroup]):
        self.group = group
        self.subgroups: tuple[Subgroup, ...] = tuple(sorted(subgroups, key=Subgroup.sort_key))
        self._position = {h.bits: k for k, h in enumerate(self.subgroups)}

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, k: int) -> Subgroup:
        return self.subgroups[k]

    def position(self, h: Subgroup) -> int:
        return self._position[h.bits]

    def find(self, bits: int) -> Subgroup:
        return self.subgroups[self._position[bits]]

    @cached_property
    def containment(self) -> list[list[bool]] | None:
        """``containment[a][b]`` is true when subgroup ``a`` lies inside subgroup ``b``.

        ``None`` for very large lattices; use :meth:`contains` instead.
        """
        if len(self.subgroups) > _MATRIX_LIMIT:
            return None
        bits = [h.bits for h in self.subgroups]
        return [[a & ~b == 0 for b in bits] for a in bits]

    def contains(self, a: int, b: int) -> bool:
        """Whether ``subgroups[a]`` is contained in ``subgroups[b]``."""
        m = self.containment
        if m is not None:
            return m[a][b]
        return self.subgroups[a].bits & ~self.subgroups[b].bits == 0

    def of_order(self, n: int) -> list[Subgroup]:
        return [h for h in self.subgroups if h.order == n]

    def inside(self, h: Subgroup) -> list[Subgroup]:
        """Subgroups contained in ``h``."""
        return [k for k in self.subgroups if k.bits & ~h.bits == 0]

    def containing(self, h: Subgroup) -> list[Subgroup]:
        return [k for k in self.subgroups if h.bits & ~k.bits == 0]


def cyclic_bits(group: PermGroup, x: int) -> int:
    return closure_bits(group, [x])


def all_subgroups(group: PermGroup, cap: int = DEFAULT_LATTICE_CAP) -> LatticeIndex:
    """Enumerate the whole subgroup lattice by cyclic extension.

    Every subgroup is generated by its elements of prime-power order, so
    starting from the cyclic subgroups of prime-power order and repeatedly
    joining a known subgroup with one more such cyclic subgroup reaches
    every subgroup.
    """
    if group.order > cap:
        raise CapExceeded(cap, group.order, what="elements (lattice)")
    orders = group.element_orders
    # one generator per cyclic subgroup of prime-power order
    cyclic: dict[int, int] = {}
    for x in range(1, group.order):
        if is_prime_power(orders[x]):
            cyclic.setdefault(cyclic_bits(group, x), x)
    seeds = sorted(cyclic.items())

    known: dict[int, tuple[int, ...]] = {1: ()}
    frontier = [1]
    for bits, x in seeds:
        if bits not in known:
            known[bits] = (x,)
            frontier.append(bits)
    while frontier:
        nxt = []
        for bits in frontier:
            gens = known[bits]
            for cbits, x in seeds:
                if cbits & ~bits == 0:
                    continue
                joined = closure_bits(group, list(gens) + [x], bits)
                if joined not in known:
                    known[joined] = gens + (x,)
                    nxt.append(joined)
        frontier = nxt
    subs = [Subgroup(group, bits, generators=gens or None) for bits, gens in known.items()]
    return LatticeIndex(group, subs)


def _check_parents(items: Iterable[Subgroup]) -> None:
    parents = {id(h.parent) for h in items}
    if len(parents) > 1:
        raise MixedParents("candidates belong to different groups")


def maximal_members(candidates: Sequence[Subgroup]) -> list[Subgroup]:
    """Proper candidates that are not strictly inside another proper candidate."""
    _check_parents(candidates)
    proper = sorted({h.bits: h for h in candidates if not h.is_whole()}.values(), key=Subgroup.sort_key)
    out = []
    for k, h in enumerate(proper):
        if not any(h.bits & ~other.bits == 0 for other in proper[k + 1:] if other.order > h.order):
            out.append(h)
    return out


def join(h: Subgroup, k: Subgroup) -> Subgroup:
    """The subgroup generated by ``h`` and ``k``."""
    _check_parents((h, k))
    if k.bits & ~h.bits == 0:
        return h
    if h.bits & ~k.bits == 0:
        return k
    return Subgroup(h.parent, closure_bits(h.parent, h.generators + k.generators, h.bits))


def meet(h: Subgroup, k: Subgroup) -> Subgroup:
    _check_parents((h, k))
    return Subgroup(h.parent, h.bits & k.bits)


def conjugate_bits(group: PermGroup, h: Subgroup, g: int) -> int:
    """Bitset of ``g H g^-1``."""
    out = 0
    for x in h.members:
        out |= 1 << group.conjugate(g, x)
    return out


def is_normal(h: Subgroup, k: Subgroup) -> bool:
    """Whether ``h`` is normal in ``k`` (``h`` must lie inside ``k``)."""
    _check_parents((h, k))
    if h.bits & ~k.bits:
        raise NotContained("the first subgroup is not contained in the second")
    if 2 * h.order == k.order or h.order == k.order or h.order == 1:
        return True
    group = h.parent
    return all(conjugate_bits(group, h, g) == h.bits for g in k.generators)


def normalizer(h: Subgroup, k: Subgroup | None = None) -> Subgroup:
    """Elements of ``k`` (default: the whole group) normalizing ``h``."""
    group = h.parent
    k = k or group.whole
    bits = 0
    for g in k.members:
        if conjugate_bits(group, h, g) == h.bits:
            bits |= 1 << g
    return Subgroup(group, bits)


__all__ = [
    "DEFAULT_LATTICE_CAP",
    "LatticeIndex",
    "all_subgroups",
    "conjugate_bits",
    "is_normal",
    "iter_bits",
    "join",
    "maximal_members",
    "meet",
    "normalizer",
]
