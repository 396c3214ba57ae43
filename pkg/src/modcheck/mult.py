"""Multiplication modules: detection, the submodule product, power radicals and ideal containment."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotMultiplication, RingMismatch
from .module import FinModule, Submodule, annihilator, ideal_times, residual, span, submodule_lattice
from .ring import enumerate_ideals, ideal_power, ideal_product, ideal_sum


@dataclass(frozen=True)
class MultStructure:
    """A multiplication module with every submodule presented as ``(N :_R M)·M``."""

    module: FinModule
    presentation: dict

    def ideal_of(self, N):
        if N.parent != self.module:
            raise RingMismatch("submodule of a different module")
        return self.presentation[N.bits]


def multiplication_failure(M):
    """A lattice member ``N`` with ``(N:M)M ≠ N``, or None."""
    for N in submodule_lattice(M):
        if ideal_times(residual(N), M).bits != N.bits:
            return N
    return None


@lru_cache(maxsize=None)
def _structure(M):
    presentation = {}
    for N in submodule_lattice(M):
        I = residual(N)
        if ideal_times(I, M).bits != N.bits:
            return None
        presentation[N.bits] = I
    return MultStructure(M, presentation)


def is_multiplication(M):
    return _structure(M) is not None


def multiplication_structure(M):
    ms = _structure(M)
    if ms is None:
        N = multiplication_failure(M)
        raise NotMultiplication(f"{M} is not a multiplication module: (N:M)M != N for N = {N}")
    return ms


def _as_structure(ms):
    return multiplication_structure(ms) if isinstance(ms, FinModule) else ms


def submodule_product(ms, N, K):
    """``NK = (N:M)(K:M)M``."""
    ms = _as_structure(ms)
    return ideal_times(ideal_product(ms.ideal_of(N), ms.ideal_of(K)), ms.module)


def element_product(ms, m, m2):
    """``m·m'``, the product of the cyclic submodules ``Rm`` and ``Rm'``."""
    ms = _as_structure(ms)
    M = ms.module
    return submodule_product(ms, span(M, [m]), span(M, [m2]))


def submodule_power(ms, N, k):
    """``N^k`` for ``k ≥ 1``."""
    ms = _as_structure(ms)
    return ideal_times(ideal_power(ms.ideal_of(N), k), ms.module)


def presentations(ms, N):
    """Every ideal ``I`` with ``IM = N``."""
    ms = _as_structure(ms)
    M = ms.module
    return [I for I in enumerate_ideals(M.ring) if ideal_times(I, M).bits == N.bits]


def radical_via_powers(ms, N):
    """``{m : m^k ⊆ N for some k ≥ 1}``, checked to be a submodule.

    ``k`` runs up to ``|M|``: the powers of ``Rm`` form a descending chain.
    """
    ms = _as_structure(ms)
    M = ms.module
    members = []
    for m in range(M.order):
        I = ms.ideal_of(span(M, [m]))
        power = I
        for _ in range(M.order):
            P = ideal_times(power, M)
            if P <= N:
                members.append(M.element(m))
                break
            nxt = ideal_product(power, I)
            if ideal_times(nxt, M).bits == P.bits:
                break
            power = nxt
    return Submodule.from_elements(M, members)


def check_lemma_fg(M, I, J):
    """Both sides of ``IM ⊆ JM  ⟺  I ⊆ J + Ann(M)``, evaluated independently."""
    multiplication_structure(M)
    lhs = ideal_times(I, M) <= ideal_times(J, M)
    rhs = I <= ideal_sum(J, annihilator(M))
    return lhs, rhs
