"""Brute-force reference computations on raw image tuples.

Nothing here touches multiplication tables, bitsets or the lattice code;
these are the independent routes the engine is checked against.
"""
from itertools import product


def compose(a, b):
    """a o b on image tuples: apply b first."""
    return tuple(a[i] for i in b)


def inverse(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def identity(n):
    return tuple(range(n))


def closure(gens, degree):
    """Repeatedly multiply everything by everything until nothing new appears."""
    elems = {identity(degree)} | set(gens)
    while True:
        new = {compose(a, b) for a in elems for b in elems} - elems
        if not new:
            return frozenset(elems)
        elems |= new


def subgroups_by_generators(elements, degree, max_gens):
    """All subgroups generated by at most ``max_gens`` elements."""
    elements = list(elements)
    layer = {closure([], degree)}
    found = set(layer)
    for _ in range(max_gens):
        nxt = set()
        for h in layer:
            for g in elements:
                if g not in h:
                    k = closure(list(h) + [g], degree) if len(h) < 4 else closure(_gens_of(h, degree) + [g], degree)
                    nxt.add(k)
        nxt -= found
        found |= nxt
        layer = nxt
        if not layer:
            break
    return found


def _gens_of(h, degree):
    gens = []
    have = closure([], degree)
    for x in sorted(h):
        if x not in have:
            gens.append(x)
            have = closure(gens, degree)
    return gens


def commutator(x, y):
    return compose(compose(inverse(x), inverse(y)), compose(x, y))


def commutator_closure(xs, ys, degree):
    return closure([commutator(x, y) for x, y in product(xs, ys)], degree)


def is_normal(h, k):
    return all(frozenset(compose(compose(g, x), inverse(g)) for x in h) == h for g in k)


def element_order(x):
    n, cur = 1, x
    while cur != identity(len(x)):
        cur = compose(cur, x)
        n += 1
    return n


def maximal_by_inclusion(family, whole):
    proper = [h for h in family if h != whole]
    return [h for h in proper if not any(h < k for k in proper)]
