"""S-prime and S-weakly prime submodules, by definition and by each known characterization.

Every routine here is a separate evaluation path over the same family of
endomorphisms, so any disagreement between two of them is a genuine
finding rather than an artifact of shared code.  All routines vectorize
over the family: ``family.maps`` holds ``f(m)`` for every member ``f`` and
element ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .endo import Endomorphism, enumerate_endomorphisms
from .endo import image as endo_image
from .errors import PredicateError, RingMismatch
from .module import FinModule, Submodule, bits_from_bool, element_residual, residual, submodule_lattice
from .ring import Ideal

_CHUNK = 8192


@dataclass(frozen=True)
class Witness:
    """Data showing a criterion fails: an endomorphism plus an element or a submodule."""

    endo: Endomorphism
    element: Optional[tuple] = None
    submodule: Optional[Submodule] = None
    note: str = ""


@dataclass(frozen=True)
class PredicateVerdict:
    value: bool
    criterion: str
    witness: Optional[Witness] = None
    extra: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.value


def _setup(N, family):
    if not N.is_proper():
        raise PredicateError(f"submodule {N} of {N.parent} is not proper")
    if family is None:
        family = enumerate_endomorphisms(N.parent)
    if family.parent != N.parent:
        raise RingMismatch("endomorphism family and submodule have different parents")
    return family


def _chunks(family):
    maps = family.maps
    for lo in range(0, len(maps), _CHUNK):
        yield lo, maps[lo:lo + _CHUNK]


def _element_witness(family, f, m, note=""):
    return Witness(family[int(f)], family.parent.element(int(m)), note=note)


# definition


def _definition(N, family, weakly):
    inN = N.mask
    for lo, maps in _chunks(family):
        hit = inN[maps]
        image_in = hit.all(axis=1)
        bad = hit & ~inN[None, :] & ~image_in[:, None]
        if weakly:
            bad &= maps != 0
        found = np.argwhere(bad)
        if len(found):
            f, m = found[0]
            return _element_witness(family, lo + f, m)
    return None


def is_S_prime(N, family=None):
    """``f(m) ∈ N`` implies ``m ∈ N`` or ``f(M) ⊆ N``, for all ``f`` in the family."""
    family = _setup(N, family)
    w = _definition(N, family, weakly=False)
    return PredicateVerdict(w is None, "definition", w)


def is_S_weakly_prime(N, family=None):
    """As :func:`is_S_prime`, with the hypothesis restricted to ``f(m) ≠ 0``."""
    family = _setup(N, family)
    w = _definition(N, family, weakly=True)
    return PredicateVerdict(w is None, "definition", w)


# residual ideals


def _pack_rows(bool_rows):
    """Pack a ``(..., n)`` bool array into ``(..., W)`` uint64 words."""
    n = bool_rows.shape[-1]
    words = max(1, (n + 63) // 64)
    pad = words * 64 - n
    if pad:
        widths = [(0, 0)] * (bool_rows.ndim - 1) + [(0, pad)]
        bool_rows = np.pad(bool_rows, widths)
    packed = np.ascontiguousarray(np.packbits(bool_rows, axis=-1, bitorder="little"))
    return packed.view("<u8")


def colon_codes(N):
    """Per element ``y``: packed ring mask of ``(N :_R y)`` and of ``(0 :_R y)``."""
    act_t = N.parent.act.T
    return _pack_rows(N.mask[act_t]), _pack_rows(act_t == 0)


def _residual_scan(N, family, weakly):
    colon, ann = colon_codes(N)
    outside = ~N.mask
    cond2_mismatch = 0
    witness = None
    for lo, maps in _chunks(family):
        A = colon[maps]                                    # (N : f(x))
        B = np.bitwise_and.reduce(A, axis=1)[:, None, :]   # (N : f(M))
        eq_b = (A == B).all(axis=-1)
        if weakly:
            C = ann[maps]                                  # (0 : f(x))
            eq_c = (A == C).all(axis=-1)
            cond3 = eq_b | eq_c
            cond2 = (A == (B | C)).all(axis=-1)
            cond2_mismatch += int(np.count_nonzero((cond2 != cond3) & outside[None, :]))
            bad = ~cond3 & outside[None, :]
        else:
            bad = ~eq_b & outside[None, :]
        found = np.argwhere(bad)
        if witness is None and len(found):
            f, x = found[0]
            witness = _element_witness(family, lo + f, x, "residual mismatch")
            if not weakly:
                break
    return witness, cond2_mismatch


def s_prime_via_residual(N, family=None):
    """``(N : f(x)) = (N : f(M))`` for every family member and every ``x ∉ N``.

    Matches the definition only when the family is closed under ``f ↦ r·f``,
    as ``End(M)`` and ``S1 x S2`` are. For ``{0, id}`` on ``Z6`` the zero
    submodule is S-prime but fails this test.
    """
    family = _setup(N, family)
    w, _ = _residual_scan(N, family, weakly=False)
    return PredicateVerdict(w is None, "residual", w)


def s_weakly_via_residual(N, family=None):
    """``(N : f(x))`` equals ``(N : f(M))`` or ``(0 : f(x))`` for every member and ``x ∉ N``.

    The union form ``(N : f(x)) = (N : f(M)) ∪ (0 : f(x))`` is evaluated on the
    same pairs; ``extra["union_mismatches"]`` counts pairs where the two forms
    disagree. Like the S-prime form, this assumes the family is closed under
    ``f ↦ r·f``.
    """
    family = _setup(N, family)
    w, mismatches = _residual_scan(N, family, weakly=True)
    return PredicateVerdict(w is None, "residual", w, {"union_mismatches": mismatches})


def the1_conditions(N, family=None):
    """Truth values of the union form and the disjunction form over all members and ``x ∉ N``."""
    family = _setup(N, family)
    colon, ann = colon_codes(N)
    outside = ~N.mask
    union_ok = disj_ok = True
    for _, maps in _chunks(family):
        A = colon[maps]
        B = np.bitwise_and.reduce(A, axis=1)[:, None, :]
        C = ann[maps]
        union_ok &= bool(((A == (B | C)).all(axis=-1) | ~outside[None, :]).all())
        disj_ok &= bool((((A == B).all(axis=-1) | (A == C).all(axis=-1)) | ~outside[None, :]).all())
    return union_ok, disj_ok


# preimages


def s_prime_via_preimage(N, family=None):
    """``f^{-1}(N) = M`` or ``f^{-1}(N) ⊆ N`` for every family member."""
    family = _setup(N, family)
    for lo, maps in _chunks(family):
        pre = N.mask[maps]
        whole = pre.all(axis=1)
        inside = ~(pre & ~N.mask[None, :]).any(axis=1)
        bad = np.flatnonzero(~(whole | inside))
        if len(bad):
            return PredicateVerdict(False, "preimage", Witness(family[lo + int(bad[0])], note="preimage neither M nor inside N"))
    return PredicateVerdict(True, "preimage")


# submodule-quantified forms


def _bits64(bool_rows):
    """``(F, n)`` bool rows with ``n ≤ 64`` packed into one uint64 per row."""
    return _pack_rows(bool_rows)[..., 0]


def _submodule_scan(N, family, weakly, members):
    M = N.parent
    if M.order > 64:
        raise PredicateError("submodule-quantified criteria need a module of order <= 64")
    kbits = np.array([K.bits for K in members], dtype=np.uint64)
    k_inside = np.array([K <= N for K in members], dtype=bool)
    for lo, maps in _chunks(family):
        into_n = _bits64(N.mask[maps])                  # m with f(m) ∈ N
        hyp = (kbits[None, :] & ~into_n[:, None]) == 0  # f(K) ⊆ N
        if weakly:
            kernel = _bits64(maps == 0)
            hyp &= (kbits[None, :] & ~kernel[:, None]) != 0  # f(K) ≠ 0
        image_in = N.mask[maps].all(axis=1)
        bad = hyp & ~k_inside[None, :] & ~image_in[:, None]
        found = np.argwhere(bad)
        if len(found):
            f, k = found[0]
            note = "0 != f(K) inside N" if weakly else "f(K) inside N"
            return Witness(family[lo + int(f)], submodule=members[int(k)], note=note)
    return None


def _cyclic_members(M):
    seen = {}
    for m in range(M.order):
        idx = np.unique(M.act[:, m])
        mask = np.zeros(M.order, dtype=bool)
        mask[idx] = True
        b = bits_from_bool(mask)
        seen.setdefault(b, Submodule(M, b, (m,) if m else ()))
    return list(seen.values())


def s_prime_via_submodules(N, family=None, cyclic_only=False):
    """``f(K) ⊆ N`` implies ``K ⊆ N`` or ``f(M) ⊆ N``, over every submodule ``K`` (or every ``Rm``)."""
    family = _setup(N, family)
    members = _cyclic_members(N.parent) if cyclic_only else list(submodule_lattice(N.parent))
    w = _submodule_scan(N, family, False, members)
    return PredicateVerdict(w is None, "cyclic-submodule" if cyclic_only else "submodule", w)


def s_weakly_via_submodules(N, family=None, cyclic_only=False):
    """``0 ≠ f(K) ⊆ N`` implies ``K ⊆ N`` or ``f(M) ⊆ N``."""
    family = _setup(N, family)
    members = _cyclic_members(N.parent) if cyclic_only else list(submodule_lattice(N.parent))
    w = _submodule_scan(N, family, True, members)
    return PredicateVerdict(w is None, "cyclic-submodule" if cyclic_only else "submodule", w)


S_PRIME_CRITERIA = {
    "definition": is_S_prime,
    "residual": s_prime_via_residual,
    "preimage": s_prime_via_preimage,
    "submodule": s_prime_via_submodules,
}

S_WEAKLY_CRITERIA = {
    "definition": is_S_weakly_prime,
    "residual": s_weakly_via_residual,
    "submodule": s_weakly_via_submodules,
}


# ideals, viewed as submodules of the regular module


def ideal_as_submodule(I):
    M = FinModule.regular(I.ring)
    # ring and regular-module indices coincide
    return Submodule(M, bits_from_bool(I.mask))


def submodule_as_ideal(N):
    M = N.parent
    if M != FinModule.regular(M.ring):
        raise RingMismatch("only submodules of the regular module are ideals")
    return Ideal.from_mask(M.ring, N.mask)


def is_S_prime_ideal(I):
    if not I.is_proper():
        raise PredicateError(f"{I} is not a proper ideal")
    return is_S_prime(ideal_as_submodule(I))


def is_S_weakly_prime_ideal(I):
    if not I.is_proper():
        raise PredicateError(f"{I} is not a proper ideal")
    return is_S_weakly_prime(ideal_as_submodule(I))


# replay


def replay(verdict, N):
    """Re-check a failing verdict's witness against the raw definition of its criterion.

    Returns True when the witness really demonstrates a violation.
    """
    w = verdict.witness
    if verdict.value or w is None:
        return False
    f, M = w.endo, N.parent
    fmap = f.map
    image_in = bool(N.mask[fmap].all())
    if verdict.criterion in ("submodule", "cyclic-submodule"):
        K = w.submodule
        fk = fmap[K.indices]
        weakly_ok = bool((fk != 0).any())
        return bool(N.mask[fk].all()) and not K <= N and not image_in and (weakly_ok or not w.note.startswith("0 !="))
    if verdict.criterion == "preimage":
        pre = N.mask[fmap]
        return not pre.all() and bool((pre & ~N.mask).any())
    m = M.index(w.element)
    if verdict.criterion == "definition":
        return bool(N.mask[fmap[m]]) and not N.mask[m] and not image_in
    # residual: compare the ideals directly
    y = int(fmap[m])
    lhs = element_residual(N, y)
    rhs = residual(N, endo_image(f))
    ann = element_residual(N.parent.zero_submodule(), y)
    if verdict.extra.get("union_mismatches") is not None:
        return not N.mask[m] and lhs != rhs and lhs != ann
    return not N.mask[m] and lhs != rhs
