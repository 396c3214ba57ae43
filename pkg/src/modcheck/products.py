"""Direct products ``M_1 x M_2`` and the restricted endomorphism family ``S_1 x S_2``.

Combined coordinates are the left factor's coordinates followed by the
right's, so the combined index of ``(m_1, m_2)`` is ``i_1·|M_2| + i_2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .endo import EndoFamily, endomorphism_count, enumerate_endomorphisms
from .errors import BoundExceeded, ModcheckError, PredicateError, RingMismatch
from .module import FinModule, Submodule, bits_from_bool, submodule_lattice
from .predicates import is_S_weakly_prime
from .ring import FiniteRing
from . import bounds

SHARED = "shared-ring"
DECOMPOSABLE = "decomposable-ring"


@dataclass(frozen=True)
class ProductModule:
    left: FinModule
    right: FinModule
    combined: FinModule
    mode: str

    def pair(self, i):
        """``(i_1, i_2)`` for a combined element index."""
        return divmod(int(i), self.right.order)

    def join(self, i1, i2):
        return int(i1) * self.right.order + int(i2)

    def __str__(self):
        return f"({self.left}) x ({self.right})"


def product_module(M1, M2, mode=SHARED):
    if mode == SHARED:
        if M1.ring != M2.ring:
            raise RingMismatch(f"shared-ring product needs one ring, got {M1.ring} and {M2.ring}")
        combined = FinModule(M1.ring, M1.orders + M2.orders, M1.action + M2.action)
    elif mode == DECOMPOSABLE:
        ring = FiniteRing(M1.ring.moduli + M2.ring.moduli)
        shift = M1.ring.ncomponents
        combined = FinModule(ring, M1.orders + M2.orders, M1.action + tuple(c + shift for c in M2.action))
    else:
        raise ModcheckError(f"unknown product mode {mode!r}")
    return ProductModule(M1, M2, combined, mode)


def embed(P, N1, N2=None):
    """``N_1 x N_2`` inside the combined module (``N_2`` defaults to all of ``M_2``)."""
    if N1.parent != P.left or (N2 is not None and N2.parent != P.right):
        raise RingMismatch("factor submodules do not belong to the product's factors")
    if N2 is None:
        N2 = P.right.full_submodule()
    mask = np.outer(N1.mask, N2.mask).ravel()
    gens = tuple(P.join(g, 0) for g in N1.gens) + tuple(P.join(0, g) for g in N2.gens)
    return Submodule(P.combined, bits_from_bool(mask), gens)


def embed_N1xM2(P, N1):
    return embed(P, N1)


def embed_N1xN2(P, N1, N2):
    return embed(P, N1, N2)


def split(P, N):
    """``(π_1(N), π_2(N))`` and whether ``N`` equals their product."""
    idx = N.indices
    i1, i2 = np.divmod(idx, P.right.order)
    m1 = np.zeros(P.left.order, dtype=bool)
    m1[i1] = True
    m2 = np.zeros(P.right.order, dtype=bool)
    m2[i2] = True
    N1 = Submodule(P.left, bits_from_bool(m1))
    N2 = Submodule(P.right, bits_from_bool(m2))
    return N1, N2, embed(P, N1, N2).bits == N.bits


def product_family(P, F1, F2):
    """Block-diagonal family ``{f_1 x f_2}``, members ordered with ``f_1`` major."""
    if F1.parent != P.left or F2.parent != P.right:
        raise RingMismatch("families do not belong to the product's factors")
    size = len(F1) * len(F2)
    if size > bounds.MAX_ENDO_FAMILY:
        raise BoundExceeded(f"product family has {size} members, above MAX_ENDO_FAMILY={bounds.MAX_ENDO_FAMILY}")
    k1, k2 = P.left.rank, P.right.rank
    mats = np.zeros((len(F1), len(F2), k1 + k2, k1 + k2), dtype=np.int64)
    mats[:, :, :k1, :k1] = F1.matrices[:, None]
    mats[:, :, k1:, k1:] = F2.matrices[None, :]
    mats = mats.reshape(size, k1 + k2, k1 + k2)
    _validate_matrices(P.combined, mats)
    return EndoFamily(P.combined, mats, "product-restricted")


def _validate_matrices(M, mats):
    """Every stacked matrix satisfies the well-definedness and component constraints of ``M``."""
    d = np.array(M.orders, dtype=np.int64)
    same = np.equal.outer(np.array(M.action), np.array(M.action))
    if (mats[:, ~same] != 0).any():
        raise ModcheckError("product family member mixes ring components")
    if ((mats * d[None, None, :]) % d[None, :, None] != 0).any():
        raise ModcheckError("product family member is not well defined")
    if ((mats < 0) | (mats >= d[None, :, None])).any():
        raise ModcheckError("product family entry out of range")


def full_family_matches(P, F1, F2):
    """Whether ``|S_1 x S_2| = |End(M_1 x M_2)|``."""
    return len(F1) * len(F2) == endomorphism_count(P.combined)


def thekart_condition2(P, N1, F1=None, F2=None):
    """``N_1`` is ``S_1``-weakly prime, and whenever ``f_1(m_1) = 0``, ``m_1 ∉ N_1`` and
    ``f_1(M_1) ⊄ N_1``, every ``f_2(m_2)`` vanishes."""
    if not N1.is_proper():
        raise PredicateError("N_1 must be proper")
    F1 = F1 if F1 is not None else enumerate_endomorphisms(P.left)
    F2 = F2 if F2 is not None else enumerate_endomorphisms(P.right)
    if not is_S_weakly_prime(N1, F1).value:
        return False
    maps1 = F1.maps
    image_in = N1.mask[maps1].all(axis=1)
    trigger = (maps1 == 0) & ~N1.mask[None, :] & ~image_in[:, None]
    if not trigger.any():
        return True
    return not (F2.maps != 0).any()


def decomposable_lattice_splits(P):
    """True iff every submodule of the combined module is ``N_1 x N_2``."""
    return all(split(P, N)[2] for N in submodule_lattice(P.combined))
