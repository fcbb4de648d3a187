"""Coprime actions by automorphisms and A-invariant subgroups."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import (
    ImageNotInGroup,
    MixedTargets,
    NotAHomomorphism,
    NotBijective,
    NotCoprime,
    NotInvariant,
)
from .groups import PermGroup, Permutation, Subgroup
from .lattice import LatticeIndex, all_subgroups, maximal_members


@dataclass(frozen=True)
class Automorphism:
    """An automorphism of ``target`` given as a permutation of element indices."""

    target: PermGroup
    elt_map: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.elt_map[i]

    def image_bits(self, h: Subgroup) -> int:
        out = 0
        for x in h.members:
            out |= 1 << self.elt_map[x]
        return out

    def compose(self, other: Automorphism) -> Automorphism:
        """``self o other``."""
        mine = self.elt_map
        return Automorphism(self.target, tuple(mine[i] for i in other.elt_map))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.elt_map))

    def order(self) -> int:
        k, cur = 1, self
        while not cur.is_identity():
            cur = cur.compose(self)
            k += 1
        return k

    def respects_multiplication(self, pairs=None) -> bool:
        t, f = self.target.mul_table, self.elt_map
        n = self.target.order
        if pairs is None:
            pairs = ((i, j) for i in range(n) for j in range(n))
        return all(f[t[i][j]] == t[f[i]][f[j]] for i, j in pairs)


def identity_automorphism(group: PermGroup) -> Automorphism:
    return Automorphism(group, tuple(range(group.order)))


def build_automorphism(group: PermGroup, gen_images: Sequence[tuple[int, Permutation]]) -> Automorphism:
    """Extend images of the group's generators to a validated automorphism.

    ``gen_images`` pairs a 0-based generator position with the image of
    that generator.  Every element is reached along the breadth-first words
    recorded when the group was generated, so ``f(x g) = f(x) f(g)``
    defines the map; it is then checked on all pairs.
    """
    images = {}
    for k, perm in gen_images:
        if not 0 <= k < len(group.generators):
            raise ImageNotInGroup(f"group has no generator number {k + 1}")
        if perm not in group:
            raise ImageNotInGroup(f"image {perm} of generator {k + 1} is not in the group")
        images[k] = group.index_of(perm)
    missing = [k + 1 for k in range(len(group.generators)) if k not in images]
    if missing:
        raise ImageNotInGroup(f"no image given for generator(s) {missing}")

    t = group.mul_table
    f = [-1] * group.order
    f[0] = 0
    for child, parent, k in group.schreier:
        f[child] = t[f[parent]][images[k]]
    # the generators themselves must land where they were sent
    for k, g in enumerate(group.gen_indices):
        if f[g] != images[k]:
            raise NotAHomomorphism(f"generator {k + 1} is forced to a different image by the relations")
    if len(set(f)) != group.order:
        raise NotBijective("the extended map is not injective")
    aut = Automorphism(group, tuple(f))
    if not aut.respects_multiplication():
        raise NotAHomomorphism("the extended map does not respect multiplication")
    return aut


class CoprimeAction:
    """The group of automorphisms generated by ``generators``, of order coprime to |G|."""

    def __init__(self, target: PermGroup, generators: Sequence[Automorphism] = ()):
        for a in generators:
            if a.target is not target:
                raise MixedTargets("automorphisms act on different groups")
        self.target = target
        self.generators: tuple[Automorphism, ...] = tuple(a for a in generators if not a.is_identity())
        self.elements: tuple[Automorphism, ...] = _closure(target, self.generators)
        g = math.gcd(self.order, target.order)
        if g != 1:
            raise NotCoprime(self.order, target.order, g)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"<CoprimeAction order={self.order} on {self.target!r}>"

    def is_invariant(self, h: Subgroup) -> bool:
        return is_invariant(h, self)


def _closure(group: PermGroup, gens: Sequence[Automorphism]) -> tuple[Automorphism, ...]:
    ident = identity_automorphism(group)
    seen = {ident.elt_map: ident}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = a.compose(g)
            if b.elt_map not in seen:
                seen[b.elt_map] = b
                queue.append(b)
    return tuple(seen[k] for k in sorted(seen))


def build_action(auts: Sequence[Automorphism], target: PermGroup | None = None) -> CoprimeAction:
    """Close ``auts`` into an action; the empty list gives the trivial action on ``target``."""
    targets = {id(a.target) for a in auts}
    if len(targets) > 1:
        raise MixedTargets("automorphisms act on different groups")
    if auts:
        if target is not None and auts[0].target is not target:
            raise MixedTargets("automorphisms do not act on the given group")
        target = auts[0].target
    if target is None:
        raise ValueError("an empty action needs an explicit target group")
    return CoprimeAction(target, auts)


def trivial_action(group: PermGroup) -> CoprimeAction:
    return CoprimeAction(group, ())


def is_invariant(h: Subgroup, act: CoprimeAction) -> bool:
    """Whether every automorphism of ``act`` maps ``h`` onto itself.

    Checking the generating automorphisms is enough.
    """
    if h.parent is not act.target:
        raise MixedTargets("subgroup and action live on different groups")
    return all(a.image_bits(h) == h.bits for a in act.generators)


def is_invariant_exhaustive(h: Subgroup, act: CoprimeAction) -> bool:
    """Same as :func:`is_invariant`, but checks every element of the action."""
    if h.parent is not act.target:
        raise MixedTargets("subgroup and action live on different groups")
    return all(a.image_bits(h) == h.bits for a in act.elements)


def invariant_subgroups(lat: LatticeIndex, act: CoprimeAction) -> list[Subgroup]:
    return [h for h in lat if is_invariant(h, act)]


def maximal_invariant_subgroups(group: PermGroup, act: CoprimeAction, lat: LatticeIndex) -> list[Subgroup]:
    """Maximal proper A-invariant subgroups, in ``(order, bitset)`` order."""
    if act.target is not group or lat.group is not group:
        raise MixedTargets("lattice, action and group do not match")
    return maximal_members(invariant_subgroups(lat, act))


def lattice_orbits(lat: LatticeIndex, act: CoprimeAction) -> list[list[Subgroup]]:
    """Orbits of the action on the subgroup lattice."""
    done: set[int] = set()
    orbits = []
    for h in lat:
        if h.bits in done:
            continue
        orbit = {h.bits}
        queue = [h.bits]
        while queue:
            bits = queue.pop()
            sub = lat.find(bits)
            for a in act.generators:
                img = a.image_bits(sub)
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
        done |= orbit
        orbits.append([lat.find(b) for b in sorted(orbit)])
    return orbits


class RestrictedAction:
    """An action restricted to an invariant subgroup, viewed as its own group.

    ``group`` is ``H`` as a standalone :class:`PermGroup`; ``action`` is the
    induced :class:`CoprimeAction` on it.  ``lift``/``lower`` translate
    subgroups between the two index spaces.
    """

    def __init__(self, act: CoprimeAction, h: Subgroup):
        self.source = act
        self.subgroup = h
        self.group = h.as_group()
        self.embedding: tuple[int, ...] = h.members
        back = {x: k for k, x in enumerate(self.embedding)}
        auts = []
        for a in act.generators:
            auts.append(Automorphism(self.group, tuple(back[a.elt_map[x]] for x in self.embedding)))
        self.action = CoprimeAction(self.group, auts)
        self._back = back

    @cached_property
    def lattice(self) -> LatticeIndex:
        return all_subgroups(self.group, cap=max(self.group.order, 1))

    def lift(self, k: Subgroup) -> Subgroup:
        """A subgroup of the restricted group as a subgroup of the original parent."""
        bits = 0
        for i in k.members:
            bits |= 1 << self.embedding[i]
        return Subgroup(self.subgroup.parent, bits)

    def lower(self, k: Subgroup) -> Subgroup:
        """A subgroup of the original parent lying in ``H`` as a subgroup of ``H``-as-group."""
        bits = 0
        for x in k.members:
            if x not in self._back:
                raise ValueError("subgroup is not contained in the restricted subgroup")
            bits |= 1 << self._back[x]
        return Subgroup(self.group, bits)

    def maximal_invariant_subgroups(self) -> list[Subgroup]:
        """Maximal invariant subgroups of ``H`` under the induced action, lifted back."""
        inner = maximal_invariant_subgroups(self.group, self.action, self.lattice)
        return sorted((self.lift(k) for k in inner), key=Subgroup.sort_key)


def restrict_action(act: CoprimeAction, h: Subgroup) -> RestrictedAction:
    """Restrict ``act`` to the A-invariant subgroup ``h``."""
    if h.parent is not act.target:
        raise MixedTargets("subgroup and action live on different groups")
    if not is_invariant(h, act):
        raise NotInvariant("the subgroup is not invariant under the action")
    return RestrictedAction(act, h)
