"""Built-in group constructors and the census corpus.

Every group is built from explicit permutation generators; nothing is
fetched from an external catalog.  Automorphisms for the nontrivial actions
are given as images of the generators, the same way an ``.aut`` file
specifies them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .action import CoprimeAction, build_action, build_automorphism, trivial_action
from .groups import PermGroup, Permutation, generate_group, prime_divisors
from .lattice import LatticeIndex, all_subgroups


def perm(images) -> Permutation:
    return Permutation(tuple(images))


def cycle(n: int, points=None) -> Permutation:
    """The cycle through ``points`` (default ``0..n-1``) on ``n`` points."""
    points = list(range(n)) if points is None else list(points)
    images = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return perm(images)


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return generate_group([Permutation.identity(1)], name="C1")
    return generate_group([cycle(n)], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular ``n``-gon, order ``2n`` (``n >= 3``)."""
    rot = cycle(n)
    refl = perm([(-i) % n for i in range(n)])
    return generate_group([rot, refl], name=f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 3:
        return generate_group([cycle(max(n, 2))] if n == 2 else [Permutation.identity(1)], name=f"S{n}")
    return generate_group([cycle(n, [0, 1]), cycle(n)], name=f"S{n}")


def alternating(n: int) -> PermGroup:
    gens = [cycle(n, [0, 1, k]) for k in range(2, n)]
    return generate_group(gens, name=f"A{n}")


def regular_representation(elements, mul) -> list[Permutation]:
    """Right-multiplication permutations ``x -> x*g`` for every element ``g``."""
    index = {e: i for i, e in enumerate(elements)}
    return [perm(index[mul(x, g)] for x in elements) for g in elements]


def _dicyclic_elements(m: int):
    """Elements ``(i, j)`` standing for ``a^i b^j`` in ``<a, b | a^2m, b^2 = a^m, b a b^-1 = a^-1>``."""
    elements = [(i, j) for j in range(2) for i in range(2 * m)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        if j1 == 0:
            return ((i1 + i2) % (2 * m), j2)
        # b a^i2 = a^-i2 b
        i = (i1 - i2) % (2 * m)
        if j2 == 0:
            return (i, 1)
        return ((i + m) % (2 * m), 0)

    return elements, mul


def dicyclic(m: int) -> PermGroup:
    """Dicyclic group of order ``4m``; generalized quaternion when ``m`` is a power of 2."""
    elements, mul = _dicyclic_elements(m)
    reg = regular_representation(elements, mul)
    a, b = reg[elements.index((1, 0))], reg[elements.index((0, 1))]
    name = "Q8" if m == 2 else (f"Q{4 * m}" if m & (m - 1) == 0 else f"Dic{4 * m}")
    return generate_group([a, b], name=name)


# quaternion units as (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k
_QUAT = [(s, a) for a in range(4) for s in (1, -1)]
_QTABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _qmul(x, y):
    s, a = _QTABLE[(x[1], y[1])]
    return (x[0] * y[0] * s, a)


def quaternion_units() -> dict[str, Permutation]:
    """Right-regular permutations of the eight quaternion units, keyed by name."""
    reg = regular_representation(_QUAT, _qmul)
    names = {(1, 0): "1", (-1, 0): "-1", (1, 1): "i", (-1, 1): "-i",
             (1, 2): "j", (-1, 2): "-j", (1, 3): "k", (-1, 3): "-k"}
    return {names[u]: reg[n] for n, u in enumerate(_QUAT)}


def quaternion() -> PermGroup:
    u = quaternion_units()
    return generate_group([u["i"], u["j"]], name="Q8")


def quaternion_with_order3_action() -> tuple[PermGroup, CoprimeAction]:
    """Q8 with the automorphism ``i -> j -> k -> i`` generating an action of order 3."""
    u = quaternion_units()
    group = quaternion()
    aut = build_automorphism(group, [(0, u["j"]), (1, u["k"])])
    return group, build_action([aut])


def direct_product(*groups: PermGroup, name: str | None = None) -> PermGroup:
    """Direct product acting on the disjoint union of the point sets."""
    total = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for x in g.generators:
            images = list(range(total))
            for i, v in enumerate(x.images):
                images[offset + i] = offset + v
            gens.append(perm(images))
        offset += g.degree
    name = name or " x ".join(g.name or "?" for g in groups)
    return generate_group(gens, name=name)


def lift_automorphism_generators(product: PermGroup, factors, images_per_factor):
    """Images of ``product``'s generators for an automorphism acting factorwise.

    ``images_per_factor[i]`` lists images of factor ``i``'s generators, or is
    ``None`` to leave that factor fixed.
    """
    out = []
    offsets = list(itertools.accumulate([0] + [f.degree for f in factors]))
    k = 0
    for fi, f in enumerate(factors):
        imgs = images_per_factor[fi]
        for gi, g in enumerate(f.generators):
            src = imgs[gi] if imgs is not None else g
            images = list(range(product.degree))
            for i, v in enumerate(src.images):
                images[offsets[fi] + i] = offsets[fi] + v
            out.append((k, perm(images)))
            k += 1
    return out


# finite fields


class GF2k:
    """Arithmetic in GF(2^k) with elements encoded as bit vectors."""

    def __init__(self, k: int, modulus: int):
        self.k = k
        self.size = 1 << k
        self.modulus = modulus

    def mul(self, a: int, b: int) -> int:
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & self.size:
                a ^= self.modulus
        return out

    def power(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out


GF8 = GF2k(3, 0b1011)  # x^3 + x + 1
GF16 = GF2k(4, 0b10011)  # x^4 + x + 1


def _affine_gf2k(field: GF2k, mult: int) -> list[Permutation]:
    """Translations by a basis together with ``x -> mult * x`` on the field's points."""
    gens = [perm(x ^ (1 << b) for x in range(field.size)) for b in range(field.k)]
    gens.append(perm(field.mul(mult, x) for x in range(field.size)))
    return gens


def frobenius_56() -> PermGroup:
    """``C2^3 x| C7``: affine maps ``x -> a x + b`` of GF(8)."""
    return generate_group(_affine_gf2k(GF8, 0b010), name="C2^3:C7")


def frobenius_56_with_order3_action() -> tuple[PermGroup, CoprimeAction]:
    """Conjugation by the field automorphism ``x -> x^2`` (order 3)."""
    group = frobenius_56()
    frob = perm(GF8.mul(x, x) for x in range(8))
    return group, _conjugation_action(group, frob)


def frobenius_48() -> PermGroup:
    """``C2^4 x| C3``: translations of GF(16) and multiplication by a cube root of unity."""
    omega = GF16.power(0b10, 5)
    return generate_group(_affine_gf2k(GF16, omega), name="C2^4:C3")


def frobenius_48_with_order5_action() -> tuple[PermGroup, CoprimeAction]:
    """Conjugation by multiplication with a fifth root of unity.

    The five GF(4)-lines of GF(16) are permuted cyclically, so none of the
    non-nilpotent ``C2^2 x| C3`` maximal subgroups stays invariant.
    """
    group = frobenius_48()
    zeta = GF16.power(0b10, 3)
    m = perm(GF16.mul(zeta, x) for x in range(16))
    return group, _conjugation_action(group, m)


def _conjugation_action(group: PermGroup, g: Permutation) -> CoprimeAction:
    ginv = g.inverse()
    images = [(k, g.compose(x).compose(ginv)) for k, x in enumerate(group.generators)]
    return build_action([build_automorphism(group, images)])


def frobenius_21() -> PermGroup:
    """``C7 x| C3``: maps ``x -> a x + b`` of GF(7) with ``a`` in {1, 2, 4}."""
    t = perm((x + 1) % 7 for x in range(7))
    m = perm((2 * x) % 7 for x in range(7))
    return generate_group([t, m], name="C7:C3")


def frobenius_21_with_order2_action() -> tuple[PermGroup, CoprimeAction]:
    """Conjugation by ``x -> -x``: inverts the ``C7`` and fixes ``x -> 2x``."""
    group = frobenius_21()
    neg = perm((-x) % 7 for x in range(7))
    return group, _conjugation_action(group, neg)


def frobenius_20() -> PermGroup:
    t = perm((x + 1) % 5 for x in range(5))
    m = perm((2 * x) % 5 for x in range(5))
    return generate_group([t, m], name="C5:C4")


def _nonzero_vectors_f3():
    return [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]


def _matrix_perm(mat) -> Permutation:
    vecs = _nonzero_vectors_f3()
    index = {v: i for i, v in enumerate(vecs)}
    (a, b), (c, d) = mat
    return perm(index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs)


def sl23() -> PermGroup:
    """SL(2, 3) acting on the eight nonzero vectors of GF(3)^2 (order 24)."""
    return generate_group([_matrix_perm(((1, 1), (0, 1))), _matrix_perm(((1, 0), (1, 1)))], name="SL(2,3)")


def gl23() -> PermGroup:
    return generate_group(
        [_matrix_perm(((1, 1), (0, 1))), _matrix_perm(((1, 0), (1, 1))), _matrix_perm(((2, 0), (0, 1)))],
        name="GL(2,3)",
    )


def elementary_abelian_2(k: int) -> PermGroup:
    gens = [cycle(2 * k, [2 * i, 2 * i + 1]) for i in range(k)]
    return generate_group(gens, name=f"C2^{k}")


def klein_with_order3_action() -> tuple[PermGroup, CoprimeAction]:
    group = elementary_abelian_2(2)
    x, y = group.generators
    aut = build_automorphism(group, [(0, y), (1, x.compose(y))])
    return group, build_action([aut])


def c2cubed_with_order7_action() -> tuple[PermGroup, CoprimeAction]:
    """``C2^3`` with the Singer cycle ``e1 -> e2 -> e3 -> e1 + e2``."""
    group = elementary_abelian_2(3)
    e1, e2, e3 = group.generators
    aut = build_automorphism(group, [(0, e2), (1, e3), (2, e1.compose(e2))])
    return group, build_action([aut])


def cyclic_with_power_action(n: int, k: int) -> tuple[PermGroup, CoprimeAction]:
    """``Cn`` with the automorphism ``x -> x^k``."""
    group = cyclic(n)
    g = group.generators[0]
    img = g
    for _ in range(k - 1):
        img = img.compose(g)
    return group, build_action([build_automorphism(group, [(0, img)])])


def c5_times_frobenius_21_with_order2_action() -> tuple[PermGroup, CoprimeAction]:
    c5, f21 = cyclic(5), frobenius_21()
    group = direct_product(c5, f21, name="C5 x C7:C3")
    neg = perm((-x) % 7 for x in range(7))
    ninv = neg.inverse()
    f21_imgs = [neg.compose(x).compose(ninv) for x in f21.generators]
    images = lift_automorphism_generators(group, [c5, f21], [None, f21_imgs])
    return group, build_action([build_automorphism(group, images)])


def klein_times_c5_with_order3_action() -> tuple[PermGroup, CoprimeAction]:
    v4, c5 = elementary_abelian_2(2), cyclic(5)
    group = direct_product(v4, c5, name="C2^2 x C5")
    x, y = v4.generators
    images = lift_automorphism_generators(group, [v4, c5], [[y, x.compose(y)], None])
    return group, build_action([build_automorphism(group, images)])


# corpus


@dataclass
class CorpusEntry:
    """One ``(G, A)`` pair of the census; primes are all divisors of ``|G|``."""

    name: str
    group: PermGroup
    action: CoprimeAction
    action_name: str = "trivial"

    @cached_property
    def lattice(self) -> LatticeIndex:
        return all_subgroups(self.group)

    def primes(self) -> list[int]:
        return prime_divisors(self.group.order)

    @property
    def key(self) -> str:
        return f"{self.name} / {self.action_name}"


def _trivial(name: str, build: Callable[[], PermGroup]):
    def make():
        g = build()
        return CorpusEntry(name, g, trivial_action(g))
    return make


def _acted(name: str, action_name: str, build):
    def make():
        g, act = build()
        return CorpusEntry(name, g, act, action_name)
    return make


# name, order, constructor; order lets a census skip groups without building them
CORPUS: list[tuple[str, int, Callable[[], CorpusEntry]]] = [
    ("C2", 2, _trivial("C2", lambda: cyclic(2))),
    ("C3", 3, _trivial("C3", lambda: cyclic(3))),
    ("C4", 4, _trivial("C4", lambda: cyclic(4))),
    ("C2^2", 4, _trivial("C2^2", lambda: elementary_abelian_2(2))),
    ("C2^2+A3", 4, _acted("C2^2", "order 3", klein_with_order3_action)),
    ("S3", 6, _trivial("S3", lambda: symmetric(3))),
    ("C6", 6, _trivial("C6", lambda: cyclic(6))),
    ("C7+A3", 7, _acted("C7", "x->x^2 (order 3)", lambda: cyclic_with_power_action(7, 2))),
    ("C8", 8, _trivial("C8", lambda: cyclic(8))),
    ("D8", 8, _trivial("D8", lambda: dihedral(4))),
    ("Q8", 8, _trivial("Q8", quaternion)),
    ("Q8+A3", 8, _acted("Q8", "i->j->k (order 3)", quaternion_with_order3_action)),
    ("C2^3+A7", 8, _acted("C2^3", "Singer cycle (order 7)", c2cubed_with_order7_action)),
    ("D10", 10, _trivial("D10", lambda: dihedral(5))),
    ("A4", 12, _trivial("A4", lambda: alternating(4))),
    ("D12", 12, _trivial("D12", lambda: dihedral(6))),
    ("Dic12", 12, _trivial("Dic12", lambda: dicyclic(3))),
    ("D14", 14, _trivial("D14", lambda: dihedral(7))),
    ("Q16", 16, _trivial("Q16", lambda: dicyclic(4))),
    ("C3xS3", 18, _trivial("C3 x S3", lambda: direct_product(cyclic(3), symmetric(3)))),
    ("C2^2xC5+A3", 20, _acted("C2^2 x C5", "order 3 on C2^2", klein_times_c5_with_order3_action)),
    ("C5:C4", 20, _trivial("C5:C4", frobenius_20)),
    ("C7:C3", 21, _trivial("C7:C3", frobenius_21)),
    ("C7:C3+A2", 21, _acted("C7:C3", "x->-x (order 2)", frobenius_21_with_order2_action)),
    ("S4", 24, _trivial("S4", lambda: symmetric(4))),
    ("SL(2,3)", 24, _trivial("SL(2,3)", sl23)),
    ("C2xA4", 24, _trivial("C2 x A4", lambda: direct_product(cyclic(2), alternating(4)))),
    ("C5xS3", 30, _trivial("C5 x S3", lambda: direct_product(cyclic(5), symmetric(3)))),
    ("S3xS3", 36, _trivial("S3 x S3", lambda: direct_product(symmetric(3), symmetric(3)))),
    ("C2^4:C3", 48, _trivial("C2^4:C3", frobenius_48)),
    ("C2^4:C3+A5", 48, _acted("C2^4:C3", "x->zeta x (order 5)", frobenius_48_with_order5_action)),
    ("GL(2,3)", 48, _trivial("GL(2,3)", gl23)),
    ("C2^3:C7", 56, _trivial("C2^3:C7", frobenius_56)),
    ("C2^3:C7+A3", 56, _acted("C2^3:C7", "x->x^2 (order 3)", frobenius_56_with_order3_action)),
    ("A5", 60, _trivial("A5", lambda: alternating(5))),
    ("C5xC7:C3+A2", 105, _acted("C5 x C7:C3", "x->-x on C7:C3 (order 2)", c5_times_frobenius_21_with_order2_action)),
    ("C5xSL(2,3)", 120, _trivial("C5 x SL(2,3)", lambda: direct_product(cyclic(5), sl23()))),
    ("S5", 120, _trivial("S5", lambda: symmetric(5))),
    ("C3xC2^3:C7", 168, _trivial("C3 x C2^3:C7", lambda: direct_product(cyclic(3), frobenius_56()))),
]


def corpus_names() -> list[str]:
    return [name for name, _, _ in CORPUS]


def build_entry(name: str) -> CorpusEntry:
    for key, _, make in CORPUS:
        if key == name:
            return make()
    raise KeyError(name)


def build_corpus(max_order: int = 192) -> list[CorpusEntry]:
    return [make() for _, order, make in CORPUS if order <= max_order]
