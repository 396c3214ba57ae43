"""Brute-force reference implementations, written without the engine's shortcuts.

Everything here works on plain tuples and Python sets so that agreement
with the engine is meaningful.
"""

import itertools
import math

import numpy as np


# rings


def ring_elements(moduli):
    return list(itertools.product(*(range(n) for n in moduli)))


def radd(a, b, moduli):
    return tuple((x + y) % n for x, y, n in zip(a, b, moduli))


def rmul(a, b, moduli):
    return tuple((x * y) % n for x, y, n in zip(a, b, moduli))


def ideal_closure(seed, moduli):
    """Smallest ideal containing ``seed``: close under addition and multiplication by the ring."""
    elems = ring_elements(moduli)
    out = {tuple(0 for _ in moduli)} | set(seed)
    frontier = list(out)
    while frontier:
        new = set()
        for x in frontier:
            for r in elems:
                new.add(rmul(r, x, moduli))
            for y in list(out):
                new.add(radd(x, y, moduli))
        new -= out
        out |= new
        frontier = list(new)
    return frozenset(out)


def ideal_set(I):
    """Element set of an engine ideal, rebuilt from its divisors by closure."""
    gen = tuple(d % n for d, n in zip(I.divisors, I.ring.moduli))
    seeds = []
    for c in range(len(gen)):
        e = [0] * len(gen)
        e[c] = gen[c]
        seeds.append(tuple(e))
    return ideal_closure(seeds, I.ring.moduli)


def all_ideals(moduli):
    """Every ideal, found by closing principal ideals under pairwise sums."""
    found = {ideal_closure([x], moduli) for x in ring_elements(moduli)}
    while True:
        sums = {ideal_closure(a | b, moduli) for a in found for b in found}
        if sums <= found:
            return found
        found |= sums


def set_sum(A, B, moduli):
    return ideal_closure(A | B, moduli)


def set_product(A, B, moduli):
    return ideal_closure({rmul(a, b, moduli) for a in A for b in B}, moduli)


def set_quotient(A, B, moduli):
    return frozenset(r for r in ring_elements(moduli) if all(rmul(r, b, moduli) in A for b in B))


def set_prime(A, moduli, weakly=False):
    zero = tuple(0 for _ in moduli)
    for a in ring_elements(moduli):
        for b in ring_elements(moduli):
            ab = rmul(a, b, moduli)
            if weakly and ab == zero:
                continue
            if ab in A and a not in A and b not in A:
                return False
    return True


# modules


def module_elements(M):
    return list(itertools.product(*(range(d) for d in M.orders)))


def madd(a, b, M):
    return tuple((x + y) % d for x, y, d in zip(a, b, M.orders))


def mact(r, m, M):
    """Scalar ``r`` (ring residues) acting on ``m`` through the action map."""
    return tuple((r[c] * x) % d for x, d, c in zip(m, M.orders, M.action))


def is_submodule_set(S, M, ring_elems):
    if tuple(0 for _ in M.orders) not in S:
        return False
    for a in S:
        for b in S:
            if madd(a, b, M) not in S:
                return False
        for r in ring_elems:
            if mact(r, a, M) not in S:
                return False
    return True


def brute_lattice(M):
    """All submodules by filtering every subset that contains 0."""
    elems = module_elements(M)
    zero = elems[0]
    rest = elems[1:]
    ring_elems = ring_elements(M.ring.moduli)
    found = []
    for mask in range(1 << len(rest)):
        S = {zero} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
        if is_submodule_set(S, M, ring_elems):
            found.append(frozenset(S))
    return found


def closure_span(M, gens):
    ring_elems = ring_elements(M.ring.moduli)
    out = {tuple(0 for _ in M.orders)}
    frontier = set(gens)
    while frontier:
        out |= frontier
        new = set()
        for a in frontier:
            for r in ring_elems:
                new.add(mact(r, a, M))
            for b in out:
                new.add(madd(a, b, M))
        frontier = new - out
    return frozenset(out)


def residual_set(N_set, K_set, M):
    return frozenset(r for r in ring_elements(M.ring.moduli) if all(mact(r, k, M) in N_set for k in K_set))


def prime_set(N_set, M, weakly=False):
    ring_elems = ring_elements(M.ring.moduli)
    elems = module_elements(M)
    zero = elems[0]
    for r in ring_elems:
        rM_in = all(mact(r, m, M) in N_set for m in elems)
        for m in elems:
            rm = mact(r, m, M)
            if weakly and rm == zero:
                continue
            if rm in N_set and m not in N_set and not rM_in:
                return False
    return True


# endomorphisms


def generator_image_endos(M):
    """Endomorphisms found by trying every assignment of generator images and filtering.

    The candidate ``f(x) = sum_j x_j v_j`` is computed on representatives
    ``0 <= x_j < d_j``; it is kept iff it is additive and commutes with every
    scalar, tested on all pairs.
    """
    elems = np.array(module_elements(M), dtype=np.int64)          # (n, k)
    orders = np.array(M.orders, dtype=np.int64)
    n, k = elems.shape
    strides = np.array([math.prod(M.orders[j + 1:]) for j in range(k)], dtype=np.int64)
    idx_of = lambda coords: (coords % orders) @ strides
    sums = idx_of(elems[:, None, :] + elems[None, :, :])          # (n, n)
    ring_elems = np.array(ring_elements(M.ring.moduli), dtype=np.int64)
    scal = ring_elems[:, np.array(M.action)]                      # (|R|, k)
    acts = idx_of(scal[:, None, :] * elems[None, :, :])          # (|R|, n)
    kept = []
    for combo in itertools.product(range(n), repeat=k):
        V = elems[list(combo)]                                     # row j = image of generator j
        images = idx_of(elems @ V)                                 # (n,)
        if not np.array_equal(images[sums], idx_of(elems[images][:, None, :] + elems[images][None, :, :])):
            continue
        if not np.array_equal(images[acts], idx_of(scal[:, None, :] * elems[images][None, :, :])):
            continue
        kept.append(tuple(images.tolist()))
    return set(kept)


def all_function_endos(M):
    """Endomorphisms by filtering every function ``M -> M`` (tiny modules only)."""
    elems = module_elements(M)
    ring_elems = ring_elements(M.ring.moduli)
    pos = {e: i for i, e in enumerate(elems)}
    kept = set()
    for images in itertools.product(range(len(elems)), repeat=len(elems)):
        f = lambda m: elems[images[pos[m]]]
        if all(f(madd(a, b, M)) == madd(f(a), f(b), M) for a in elems for b in elems) and all(
            f(mact(r, a, M)) == mact(r, f(a), M) for r in ring_elems for a in elems
        ):
            kept.add(images)
    return kept


def s_prime_set(N_set, M, endo_maps, weakly=False):
    """S-prime (or S-weakly prime) by scanning every map and element.

    ``endo_maps`` holds each endomorphism as the tuple of image indices.
    """
    elems = module_elements(M)
    zero = elems[0]
    for fmap in endo_maps:
        img = [elems[i] for i in fmap]
        image_in = all(y in N_set for y in img)
        for m, y in zip(elems, img):
            if weakly and y == zero:
                continue
            if y in N_set and m not in N_set and not image_in:
                return False
    return True
