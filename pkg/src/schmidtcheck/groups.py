"""Permutations, permutation groups and their subgroups.

A :class:`PermGroup` is fully enumerated: its elements are sorted
lexicographically by image tuple and every group operation afterwards works
on element indices through the multiplication table.  Subgroups are bitsets
(plain ``int``) over those indices.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DegreeMismatch,
    MalformedCycle,
    MixedParents,
    PointOutOfRange,
    RepeatedPoint,
)

DEFAULT_ELEMENT_CAP = 2000


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., degree - 1}``; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if not images:
            raise ValueError("a permutation needs a positive degree")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a bijection of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first, then ``self``."""
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        mine = self.images
        return Permutation(tuple(mine[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def to_cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.to_cycle_string()


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``.

    Commas are accepted as separators inside a cycle.  ``"()"`` is the
    identity.  Every point may appear at most once in the whole string.
    """
    if degree < 1:
        raise PointOutOfRange(f"degree must be positive, got {degree}")
    text = text.strip()
    if not text:
        raise MalformedCycle("empty permutation text")
    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    current: list[int] | None = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        tok = m.group(1)
        if tok == "(":
            if current is not None:
                raise MalformedCycle(f"nested '(' in {text!r}")
            current = []
        elif tok == ")":
            if current is None:
                raise MalformedCycle(f"unbalanced ')' in {text!r}")
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        else:
            if current is None:
                raise MalformedCycle(f"point {tok!r} outside a cycle in {text!r}")
            for piece in filter(None, tok.split(",")):
                if not piece.isdigit():
                    raise MalformedCycle(f"non-numeric token {piece!r} in {text!r}")
                point = int(piece)
                if point < 1 or point > degree:
                    raise PointOutOfRange(f"point {point} outside 1..{degree}")
                if point in used:
                    raise RepeatedPoint(f"point {point} appears twice in {text!r}")
                used.add(point)
                current.append(point - 1)
    if pos < len(text.rstrip()) or current is not None:
        raise MalformedCycle(f"unbalanced '(' in {text!r}")
    return Permutation(tuple(images))


class PermGroup:
    """A finite permutation group with all elements enumerated.

    Build instances with :func:`generate_group`.  Instances are treated as
    immutable once constructed.
    """

    def __init__(self, degree, generators, elements, mul_table, gen_indices, schreier, name=None):
        self.degree: int = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.mul_table: list[list[int]] = mul_table
        # index of each generator in ``elements``
        self.gen_indices: tuple[int, ...] = tuple(gen_indices)
        # (parent, generator position) with elements[i] = elements[parent] o gen;
        # listed in breadth-first order starting at the identity
        self.schreier: tuple[tuple[int, int, int], ...] = tuple(schreier)
        self.name = name
        self.identity_index = 0
        self._index = {p.images: i for i, p in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PermGroup{label} order={self.order} degree={self.degree}>"

    def index_of(self, perm: Permutation) -> int:
        """Element index of ``perm``; raises ``KeyError`` if it is not in the group."""
        return self._index[perm.images]

    def __contains__(self, perm: Permutation) -> bool:
        return perm.images in self._index

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    @cached_property
    def inverse(self) -> list[int]:
        inv = [0] * self.order
        for i, row in enumerate(self.mul_table):
            inv[i] = row.index(0)
        return inv

    @cached_property
    def element_orders(self) -> list[int]:
        orders = []
        for i in range(self.order):
            k, x = 1, i
            while x != 0:
                x = self.mul_table[x][i]
                k += 1
            orders.append(k)
        return orders

    def commutator(self, i: int, j: int) -> int:
        """Index of ``x^-1 y^-1 x y`` for ``x = elements[i]``, ``y = elements[j]``."""
        t, inv = self.mul_table, self.inverse
        return t[t[inv[i]][inv[j]]][t[i][j]]

    def conjugate(self, g: int, x: int) -> int:
        """Index of ``g x g^-1``."""
        t = self.mul_table
        return t[t[g][x]][self.inverse[g]]

    def is_abelian(self) -> bool:
        t = self.mul_table
        gens = self.gen_indices
        return all(t[a][b] == t[b][a] for a in gens for b in gens)

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, (1 << self.order) - 1)

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    def subgroup(self, gens: Iterable[int | Permutation]) -> Subgroup:
        """The subgroup generated by element indices or permutations."""
        idx = [g if isinstance(g, int) else self.index_of(g) for g in gens]
        return Subgroup(self, closure_bits(self, idx), generators=tuple(dict.fromkeys(idx)))


def generate_group(gens: Sequence[Permutation], cap: int = DEFAULT_ELEMENT_CAP, name: str | None = None) -> PermGroup:
    """Close ``gens`` under composition and return the enumerated group."""
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")

    ident = tuple(range(degree))
    found = {ident: 0}
    perms = [ident]
    tree = [(-1, -1)]
    queue = deque([0])
    gen_images = [g.images for g in gens]
    while queue:
        x = perms[queue.popleft()]
        xi = found[x]
        for k, g in enumerate(gen_images):
            y = tuple(x[i] for i in g)  # x o g
            if y not in found:
                if len(perms) >= cap:
                    raise CapExceeded(cap, len(perms) + 1)
                found[y] = len(perms)
                perms.append(y)
                tree.append((xi, k))
                queue.append(found[y])

    # canonical order: lexicographic on images (identity sorts first)
    order = sorted(range(len(perms)), key=lambda i: perms[i])
    new_index = [0] * len(perms)
    for new, old in enumerate(order):
        new_index[old] = new
    elements = [perms[old] for old in order]
    index = {p: i for i, p in enumerate(elements)}

    n = len(elements)
    mul_table = []
    for a in elements:
        row = [index[tuple(a[i] for i in b)] for b in elements]
        mul_table.append(row)

    # breadth-first order is preserved so words can be replayed in sequence
    schreier = []
    for old in range(1, len(perms)):
        parent, k = tree[old]
        schreier.append((new_index[old], new_index[parent], k))
    gen_indices = [index[g] for g in gen_images]
    group = PermGroup(
        degree,
        [Permutation(g) for g in gen_images],
        [Permutation(p) for p in elements],
        mul_table,
        gen_indices,
        schreier,
        name=name,
    )
    assert group.order == n
    return group


def closure_bits(group: PermGroup, gens: Iterable[int], start: int = 1) -> int:
    """Bitset of the subgroup generated by ``gens`` and the subgroup ``start``.

    ``start`` must already be the bitset of a subgroup (the identity by
    default).  In a finite group closure under right multiplication by the
    generators is enough.
    """
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    bits = start
    frontier = list(iter_bits(start))
    table = group.mul_table
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for g in gens:
                y = row[g]
                if not (bits >> y) & 1:
                    bits |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return bits


def iter_bits(bits: int):
    """Yield the positions of set bits in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class Subgroup:
    """A subgroup of a :class:`PermGroup`, stored as a bitset of element indices."""

    __slots__ = ("parent", "bits", "_members", "_gens", "__weakref__")

    def __init__(self, parent: PermGroup, bits: int, generators: tuple[int, ...] | None = None):
        self.parent = parent
        self.bits = bits
        self._members = None
        self._gens = generators

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(iter_bits(self.bits))
        return self._members

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.order

    def __contains__(self, index: int) -> bool:
        return bool((self.bits >> index) & 1)

    def __iter__(self):
        return iter(self.members)

    @property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in canonical element order."""
        if self._gens is None:
            gens: list[int] = []
            have = 1
            for x in self.members:
                if not (have >> x) & 1:
                    gens.append(x)
                    have = closure_bits(self.parent, gens, have)
                    if have == self.bits:
                        break
            self._gens = tuple(gens)
        return self._gens

    def is_trivial(self) -> bool:
        return self.bits == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def issubset(self, other: Subgroup) -> bool:
        _same_parent(self, other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: Subgroup) -> bool:
        return self.issubset(other)

    def __lt__(self, other: Subgroup) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def sort_key(self) -> tuple[int, int]:
        return (self.order, self.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((id(self.parent), self.bits))

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"

    def permutations(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in self.members]

    def generator_strings(self) -> list[str]:
        return [self.parent.elements[i].to_cycle_string() for i in self.generators]

    def is_closed(self) -> bool:
        """Direct check of the subgroup axioms on the stored bitset."""
        if not self.bits & 1:
            return False
        table = self.parent.mul_table
        mem = self.members
        return all((self.bits >> table[i][j]) & 1 for i in mem for j in mem)

    def as_group(self) -> PermGroup:
        """This subgroup as a standalone :class:`PermGroup`.

        Because both element lists are lexicographically sorted, the ``k``-th
        element of the result is ``parent.elements[members[k]]``.
        """
        perms = [self.parent.elements[i] for i in self.generators] or [Permutation.identity(self.parent.degree)]
        return generate_group(perms, cap=max(self.order, 1))


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent:
        raise MixedParents("subgroups belong to different groups")


def commutator_subgroup(x: Subgroup, y: Subgroup) -> Subgroup:
    """``[X, Y]``: the subgroup generated by all commutators of ``X`` with ``Y``."""
    _same_parent(x, y)
    group = x.parent
    comms = {group.commutator(a, b) for a in x.members for b in y.members}
    return Subgroup(group, closure_bits(group, sorted(comms)))


def derived_subgroup(h: Subgroup) -> Subgroup:
    """The commutator subgroup ``H' = [H, H]``."""
    return commutator_subgroup(h, h)


def derived_series(h: Subgroup) -> list[Subgroup]:
    """``H, H', H'', ...`` up to and including the first repeated term's predecessor."""
    series = [h]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.bits == series[-1].bits:
            return series
        series.append(nxt)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ``[(prime, exponent), ...]`` with increasing primes."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def sylow_order(n: int, p: int) -> int:
    """The largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n)) == 1


def lagrange_ok(group: PermGroup) -> bool:
    return math.factorial(group.degree) % group.order == 0
