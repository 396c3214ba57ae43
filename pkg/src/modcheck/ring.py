"""Finite commutative rings ``Z_{n_1} x ... x Z_{n_k}`` and their ideals.

Ring elements are handled in two forms: residue tuples at the public
surface, and integer indices (mixed radix, first component most
significant) inside vectorized code.  Index order coincides with the
lexicographic order of residue tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from . import bounds
from .errors import BoundExceeded, ModcheckError, PredicateError, RingMismatch


def mixed_radix_coords(orders):
    """All coordinate tuples of ``Z_{o_1} x ... x Z_{o_k}`` in index order, as an int array."""
    orders = tuple(orders)
    if not orders:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices(orders, dtype=np.int64).reshape(len(orders), -1)
    return np.ascontiguousarray(grids.T)


def mixed_radix_strides(orders):
    strides = []
    acc = 1
    for o in reversed(tuple(orders)):
        strides.append(acc)
        acc *= o
    return np.array(strides[::-1], dtype=np.int64)


@dataclass(frozen=True)
class FiniteRing:
    """The ring ``Z_{n_1} x ... x Z_{n_k}`` with componentwise arithmetic."""

    moduli: tuple

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        if not moduli:
            raise ModcheckError("a ring needs at least one component")
        if any(n < 1 for n in moduli):
            raise ModcheckError(f"component moduli must be >= 1, got {moduli}")
        object.__setattr__(self, "moduli", moduli)
        if self.order > bounds.MAX_RING_ORDER:
            raise BoundExceeded(f"ring order {self.order} exceeds MAX_RING_ORDER={bounds.MAX_RING_ORDER}")

    @property
    def order(self):
        return math.prod(self.moduli)

    @property
    def ncomponents(self):
        return len(self.moduli)

    def __str__(self):
        return " x ".join(f"Z{n}" for n in self.moduli)

    @cached_property
    def coords(self):
        return mixed_radix_coords(self.moduli)

    @cached_property
    def strides(self):
        return mixed_radix_strides(self.moduli)

    def index(self, residues):
        residues = tuple(residues)
        if len(residues) != self.ncomponents:
            raise ModcheckError(f"expected {self.ncomponents} residues, got {residues}")
        return int(sum((r % n) * s for r, n, s in zip(residues, self.moduli, self.strides)))

    def element(self, i):
        return tuple(int(c) for c in self.coords[i])

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    @property
    def zero(self):
        return (0,) * self.ncomponents

    @property
    def one(self):
        return tuple(1 % n for n in self.moduli)

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def mul(self, a, b):
        return tuple((x * y) % n for x, y, n in zip(a, b, self.moduli))

    @cached_property
    def mul_table(self):
        """``mul_table[a, b]`` is the index of the product of elements ``a`` and ``b``."""
        c = self.coords
        prod = (c[:, None, :] * c[None, :, :]) % np.array(self.moduli)
        return prod @ self.strides

    def is_local(self):
        """True iff the ring has exactly one maximal ideal (i.e. ``Z_{p^k}``)."""
        if self.ncomponents != 1:
            # a product of two non-zero rings has two maximal ideals
            return sum(n > 1 for n in self.moduli) == 1 and _is_prime_power(max(self.moduli))
        return _is_prime_power(self.moduli[0])


def _is_prime_power(n):
    if n < 2:
        return False
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class Ideal:
    """The ideal ``d_1 Z_{n_1} x ... x d_k Z_{n_k}``.

    Divisors are canonicalized to ``gcd(d_i, n_i)``, so the zero ideal of a
    component is stored as ``n_i`` and the unit ideal as 1.
    """

    ring: FiniteRing
    divisors: tuple

    def __post_init__(self):
        divisors = tuple(int(d) for d in self.divisors)
        if len(divisors) != self.ring.ncomponents:
            raise ModcheckError(f"ideal over {self.ring} needs {self.ring.ncomponents} divisors, got {divisors}")
        canon = tuple(math.gcd(d, n) for d, n in zip(divisors, self.ring.moduli))
        object.__setattr__(self, "divisors", canon)

    @classmethod
    def zero(cls, ring):
        return cls(ring, ring.moduli)

    @classmethod
    def unit(cls, ring):
        return cls(ring, (1,) * ring.ncomponents)

    @classmethod
    def from_mask(cls, ring, mask):
        """Recover the canonical ideal whose element set is ``mask``; raise if the set is not an ideal."""
        mask = np.asarray(mask, dtype=bool)
        members = ring.coords[mask]
        if len(members) == 0:
            raise ModcheckError("empty set is not an ideal")
        divisors = tuple(
            reduce(math.gcd, members[:, c].tolist(), n) for c, n in enumerate(ring.moduli)
        )
        ideal = cls(ring, divisors)
        if not np.array_equal(ideal.mask, mask):
            raise ModcheckError(f"element set is not an ideal of {ring}")
        return ideal

    @cached_property
    def mask(self):
        return np.all(self.ring.coords % np.array(self.divisors) == 0, axis=1)

    @property
    def order(self):
        return math.prod(n // d for n, d in zip(self.ring.moduli, self.divisors))

    def elements(self):
        return [self.ring.element(i) for i in np.flatnonzero(self.mask)]

    def __contains__(self, residues):
        return all(r % d == 0 for r, d in zip(residues, self.divisors))

    def __le__(self, other):
        _same_ring(self, other)
        return all(a % b == 0 for a, b in zip(self.divisors, other.divisors))

    def __lt__(self, other):
        return self <= other and self != other

    def is_zero(self):
        return self.divisors == self.ring.moduli

    def is_proper(self):
        return self.order < self.ring.order

    def __str__(self):
        parts = []
        for d, n in zip(self.divisors, self.ring.moduli):
            parts.append("0" if d == n else ("R" if d == 1 else f"{d}Z{n}"))
        return "(" + " x ".join(parts) + ")"


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatch(f"ideals over different rings: {I.ring} vs {J.ring}")


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, tuple(math.gcd(a, b) for a, b in zip(I.divisors, J.divisors)))


def ideal_product(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, tuple((a * b) % n for a, b, n in zip(I.divisors, J.divisors, I.ring.moduli)))


def ideal_intersection(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, tuple(math.lcm(a, b) for a, b in zip(I.divisors, J.divisors)))


def ideal_quotient(I, J):
    """``(I : J) = {r : rJ ⊆ I}``."""
    _same_ring(I, J)
    return Ideal(I.ring, tuple(a // math.gcd(a, b) for a, b in zip(I.divisors, J.divisors)))


def ideal_power(I, k):
    out = Ideal.unit(I.ring)
    for _ in range(k):
        out = ideal_product(out, I)
    return out


def enumerate_ideals(ring):
    """All ideals of ``ring`` in lexicographic divisor order."""
    if ring.order > bounds.MAX_RING_ORDER:
        raise BoundExceeded(f"ring order {ring.order} exceeds MAX_RING_ORDER={bounds.MAX_RING_ORDER}")
    per_component = [[d for d in range(1, n + 1) if n % d == 0] for n in ring.moduli]
    return [Ideal(ring, ds) for ds in itertools.product(*per_component)]


def _require_proper(I):
    if not I.is_proper():
        raise PredicateError(f"{I} is not a proper ideal")


def prime_ideal_witness(I, weakly=False):
    """A pair ``(a, b)`` violating (weak) primality of ``I``, or None."""
    _require_proper(I)
    ring = I.ring
    prod_in = I.mask[ring.mul_table]
    if weakly:
        prod_in &= ring.mul_table != 0
    bad = prod_in & ~I.mask[:, None] & ~I.mask[None, :]
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    a, b = hits[0]
    return ring.element(a), ring.element(b)


def is_prime_ideal(I):
    return prime_ideal_witness(I) is None


def is_weakly_prime_ideal(I):
    return prime_ideal_witness(I, weakly=True) is None
