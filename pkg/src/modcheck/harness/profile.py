"""Per-module caches of predicate verdicts, shared by the verifiers.

Many verifiers ask the same questions of the same ``(M, N)`` pairs; a
profile answers each one once.  Every cached value comes straight from the
public predicates, so a verifier reading a profile sees exactly what a
direct call would return.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

from ..endo import enumerate_endomorphisms, is_fully_invariant
from ..module import (
    is_cyclic,
    is_faithful,
    is_prime_submodule,
    is_weakly_prime_submodule,
    maximal_submodules,
    prime_submodules,
    residual,
    submodule_lattice,
)
from ..mult import is_multiplication
from ..predicates import S_PRIME_CRITERIA, S_WEAKLY_CRITERIA, s_prime_via_submodules, s_weakly_via_submodules
from ..products import product_family


class Profile:
    """Lazy verdict tables for the proper submodules of one module under one family."""

    def __init__(self, module, family):
        self.module = module
        self.family = family
        self._cache = {}

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    @cached_property
    def lattice(self):
        return submodule_lattice(self.module)

    @cached_property
    def proper(self):
        return self.lattice.proper()

    def s_prime(self, N, criterion="definition"):
        return self._memo(("sp", criterion, N.bits), lambda: S_PRIME_CRITERIA[criterion](N, self.family))

    def s_weakly(self, N, criterion="definition"):
        return self._memo(("sw", criterion, N.bits), lambda: S_WEAKLY_CRITERIA[criterion](N, self.family))

    def s_prime_cyclic(self, N):
        return self._memo(("spc", N.bits), lambda: s_prime_via_submodules(N, self.family, cyclic_only=True))

    def s_weakly_cyclic(self, N):
        return self._memo(("swc", N.bits), lambda: s_weakly_via_submodules(N, self.family, cyclic_only=True))

    def prime(self, N):
        return self._memo(("p", N.bits), lambda: is_prime_submodule(N))

    def weakly(self, N):
        return self._memo(("wp", N.bits), lambda: is_weakly_prime_submodule(N))

    def fully_invariant(self, N):
        return self._memo(("fi", N.bits), lambda: is_fully_invariant(N, self.family))

    def residual(self, N):
        return self._memo(("res", N.bits), lambda: residual(N))

    def qualifies(self, N):
        """Fully invariant, S-weakly prime and not S-prime: the shared hypothesis of several statements."""
        return self.fully_invariant(N) and bool(self.s_weakly(N)) and not self.s_prime(N)

    @cached_property
    def cyclic(self):
        return is_cyclic(self.module)

    @cached_property
    def faithful(self):
        return is_faithful(self.module)

    @cached_property
    def multiplication(self):
        return is_multiplication(self.module)

    @cached_property
    def primes(self):
        return prime_submodules(self.module)

    @cached_property
    def maximal(self):
        return maximal_submodules(self.module)


@lru_cache(maxsize=None)
def get_profile(M):
    """Profile of ``M`` under its full endomorphism family."""
    return Profile(M, enumerate_endomorphisms(M))


@lru_cache(maxsize=None)
def get_product_profile(P):
    """Profile of a product's combined module under ``S_1 x S_2``."""
    F = product_family(P, enumerate_endomorphisms(P.left), enumerate_endomorphisms(P.right))
    return Profile(P.combined, F)


def clear_profiles():
    get_profile.cache_clear()
    get_product_profile.cache_clear()
