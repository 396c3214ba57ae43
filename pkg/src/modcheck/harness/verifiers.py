"""One verifier per statement, swept over a deterministic corpus.

A verifier walks every corpus instance in a fixed order, counts the ones
whose hypotheses fail (``vacuous``), and records a failure for every
instance where the hypotheses hold but the conclusion does not.  Searches
for separating examples or converses record findings instead; a finding
never fails a run.
"""

from __future__ import annotations

import time
from functools import lru_cache

import numpy as np

from ..endo import image_bits, onto_members
from ..errors import ModcheckError
from ..module import FinModule, Submodule, annihilator, ideal_times, radical, span
from ..mult import check_lemma_fg, multiplication_structure, presentations, radical_via_powers, submodule_product
from ..predicates import ideal_as_submodule, replay
from ..products import decomposable_lattice_splits, embed, product_family, thekart_condition2
from ..ring import enumerate_ideals, ideal_product, is_weakly_prime_ideal
from .corpus import CorpusConfig, generate_corpus
from .profile import get_product_profile, get_profile
from .report import TheoremReport, record

PRODUCT_THEOREMS = ("prokart", "thekart", "pro1in2", "pro2in2")
DECOMPOSABLE_THEOREMS = ("theD1", "theD2")


@lru_cache(maxsize=8)
def corpus_for(cfg):
    return generate_corpus(cfg)


def _verdict_record(M, criterion, N, verdict, detail=""):
    w = verdict.witness
    if w is None:
        return record(M, criterion, N, detail=detail)
    if w.submodule is not None:
        detail = (detail + "; " if detail else "") + f"K = {w.submodule}"
    return record(M, criterion, N, w.endo, w.element, detail)


def _proper_pairs(modules):
    for M in modules:
        prof = get_profile(M)
        for N in prof.proper:
            yield M, prof, N


def _ideal_profile(ring):
    return get_profile(FinModule.regular(ring))


def _s_prime_ideal(I):
    return _ideal_profile(I.ring).s_prime(ideal_as_submodule(I))


def _s_weakly_ideal(I):
    return _ideal_profile(I.ring).s_weakly(ideal_as_submodule(I))


def _images(prof, N, members=None):
    """Distinct images ``f(N)`` over the family (or the given member indices), each with a first member index."""
    bits = image_bits(prof.family, N)
    order = range(len(bits)) if members is None else members
    seen = {}
    for i in order:
        seen.setdefault(bits[int(i)], int(i))
    return {b: (Submodule(prof.module, b), i) for b, i in seen.items()}


def _zero_product(ms, A, B):
    return submodule_product(ms, A, B).is_zero()


# element and criterion level


def v_pro1(cfg, rep):
    """S-weakly prime implies weakly prime, together with the rest of the implication chain."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        sp, sw, p, wp = prof.s_prime(N), prof.s_weakly(N), prof.prime(N), prof.weakly(N)
        if not sw:
            rep.vacuous += 1
        if sw and not wp:
            rep.fail(record(M, "s-weakly=>weakly", N, detail="S-weakly prime but not weakly prime"))
        if sp and not p:
            rep.fail(record(M, "s-prime=>prime", N, detail="S-prime but not prime"))
        if sp and not sw:
            rep.fail(_verdict_record(M, "s-prime=>s-weakly", N, sw, "S-prime but not S-weakly prime"))
        if p and not wp:
            rep.fail(record(M, "prime=>weakly", N, detail="prime but not weakly prime"))


def v_exa1(cfg, rep):
    """Search every module for the two separations; each hit is replayed against the definition."""
    rep.kind = "search"
    rep.record_cap = None
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        rep.checked += 1
        found = set()
        for N in prof.proper:
            if "a" not in found and prof.weakly(N) and not prof.s_weakly(N):
                found.add("a")
                _emit_separation(rep, M, N, prof.s_weakly(N), "weakly-not-s-weakly")
            if "b" not in found and prof.s_weakly(N) and not prof.s_prime(N):
                found.add("b")
                _emit_separation(rep, M, N, prof.s_prime(N), "s-weakly-not-s-prime")
            if len(found) == 2:
                break
        if not found:
            rep.vacuous += 1


def _emit_separation(rep, M, N, verdict, kind):
    if replay(verdict, N):
        rep.find(_verdict_record(M, kind, N, verdict))
    else:
        rep.fail(_verdict_record(M, kind, N, verdict, "witness does not replay"))


def _equivalence(cfg, rep, lhs, rhs, name):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        a, b = lhs(prof, N), rhs(prof, N)
        if bool(a) != bool(b):
            loser = b if a else a
            rep.fail(_verdict_record(M, name, N, loser, f"definition={bool(a)} {name}={bool(b)}"))
            continue
        for v in (a, b):
            if not v and not replay(v, N):
                rep.fail(_verdict_record(M, v.criterion, N, v, "witness does not replay"))


def v_pro4(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_prime(N), lambda p, N: p.s_prime(N, "submodule"), "submodule")


def v_pro4_cor(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_prime(N), lambda p, N: p.s_prime_cyclic(N), "cyclic-submodule")


def v_pro_babei(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_prime(N), lambda p, N: p.s_prime(N, "preimage"), "preimage")


def v_theS(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_prime(N), lambda p, N: p.s_prime(N, "residual"), "residual")


def v_pro5(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_weakly(N), lambda p, N: p.s_weakly(N, "submodule"), "submodule")


def v_pro5_cor(cfg, rep):
    _equivalence(cfg, rep, lambda p, N: p.s_weakly(N), lambda p, N: p.s_weakly_cyclic(N), "cyclic-submodule")


def v_the1(cfg, rep):
    """Definition against the disjunction form, plus union form against disjunction form on every pair."""
    _equivalence(cfg, rep, lambda p, N: p.s_weakly(N), lambda p, N: p.s_weakly(N, "residual"), "residual")
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        v = prof.s_weakly(N, "residual")
        mism = v.extra.get("union_mismatches", 0)
        if mism:
            rep.fail(record(M, "union-vs-disjunction", N, detail=f"{mism} (f, x) pairs where the union and disjunction forms differ"))


def v_zero_cor(cfg, rep):
    """The zero submodule is S-prime exactly when every nonzero member is one-to-one."""
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        N = M.zero_submodule()
        if not N.is_proper():
            continue
        rep.checked += 1
        maps = prof.family.maps
        nonzero = (maps != 0).any(axis=1)
        injective = (maps == 0).sum(axis=1) == 1
        bad = np.flatnonzero(nonzero & ~injective)
        all_injective = len(bad) == 0
        v = prof.s_prime(N)
        if bool(v) != all_injective:
            f = prof.family[int(bad[0])] if len(bad) else None
            rep.fail(record(M, "zero-injective", N, f, detail=f"S-prime={bool(v)} nonzero-injective={all_injective}"))


# cyclic and multiplication modules


def v_pro2(cfg, rep):
    """Faithful cyclic: weakly prime submodule gives a weakly prime residual.  Also searches
    arbitrary modules for S-weakly prime submodules whose residual is not an S-weakly prime ideal."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        I = prof.residual(N)
        if prof.s_weakly(N) and not _s_weakly_ideal(I):
            rep.find(record(M, "s-weakly-residual-not-s-weakly", N, detail=f"(N:M) = {I}"))
        if not (prof.faithful and prof.cyclic and prof.weakly(N)):
            rep.vacuous += 1
            continue
        if not is_weakly_prime_ideal(I):
            rep.fail(record(M, "weakly-residual", N, detail=f"(N:M) = {I} is not weakly prime"))


def v_pro3(cfg, rep):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not prof.cyclic:
            rep.vacuous += 1
            continue
        wp, sw = prof.weakly(N), prof.s_weakly(N)
        if wp != bool(sw):
            rep.fail(_verdict_record(M, "cyclic-weakly", N, sw, f"weakly={wp} S-weakly={bool(sw)}"))


def v_COR1(cfg, rep):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not (prof.faithful and prof.cyclic and prof.s_weakly(N)):
            rep.vacuous += 1
            continue
        I = prof.residual(N)
        v = _s_weakly_ideal(I)
        if not v:
            rep.fail(record(M, "s-weakly-residual", N, v.witness.endo if v.witness else None,
                            detail=f"(N:M) = {I} is not an S-weakly prime ideal"))


def v_lemma_fg(cfg, rep):
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        ideals = enumerate_ideals(M.ring)
        for I in ideals:
            for J in ideals:
                rep.checked += 1
                if not prof.multiplication:
                    rep.vacuous += 1
                    continue
                lhs, rhs = check_lemma_fg(M, I, J)
                if lhs != rhs:
                    rep.fail(record(M, "ideal-containment", detail=f"I={I} J={J}: IM<=JM is {lhs}, I<=J+Ann(M) is {rhs}"))


def v_the_mult1(cfg, rep):
    """Three-way equivalence on multiplication modules; the power radical is checked alongside."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not prof.multiplication:
            rep.vacuous += 1
            continue
        ms = multiplication_structure(M)
        ann = annihilator(M)
        c1 = bool(prof.s_prime(N))
        c2 = bool(_s_prime_ideal(prof.residual(N)))
        c3 = any(I.is_proper() and ann <= I and _s_prime_ideal(I) for I in presentations(ms, N))
        if not c1 == c2 == c3:
            rep.fail(record(M, "three-way", N, detail=f"S-prime={c1} residual-S-prime-ideal={c2} presented-by-S-prime-ideal={c3}"))
        rv, rp = radical_via_powers(ms, N), radical(N)
        if rv.bits != rp.bits:
            rep.fail(record(M, "radical-via-powers", N, detail=f"powers give {rv}, primes give {rp}"))


def v_the_mult2(cfg, rep):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not (prof.cyclic and prof.faithful):
            rep.vacuous += 1
            continue
        ms = multiplication_structure(M)
        c1 = bool(prof.s_weakly(N))
        c2 = bool(_s_weakly_ideal(prof.residual(N)))
        c3 = any(I.is_proper() and _s_weakly_ideal(I) for I in presentations(ms, N))
        if not c1 == c2 == c3:
            rep.fail(record(M, "three-way", N, detail=f"S-weakly={c1} residual-S-weakly-ideal={c2} presented-by-S-weakly-ideal={c3}"))


# fully invariant submodules


def v_the3(cfg, rep):
    """``I f(N) = 0`` for every ideal ``I ⊆ (N:M)`` and every member ``f``."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not prof.qualifies(N):
            rep.vacuous += 1
            continue
        res = prof.residual(N)
        ideals = [I for I in enumerate_ideals(M.ring) if I <= res]
        for fN, i in _images(prof, N).values():
            bad = next((I for I in ideals if not ideal_times(I, fN).is_zero()), None)
            if bad is not None:
                rep.fail(record(M, "ideal-kills-image", N, prof.family[i], detail=f"I = {bad}: I f(N) = {ideal_times(bad, fN)}"))
                break


def v_cor_n2(cfg, rep):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not (prof.multiplication and prof.qualifies(N)):
            rep.vacuous += 1
            continue
        ms = multiplication_structure(M)
        for fN, i in _images(prof, N).values():
            if not _zero_product(ms, fN, fN):
                rep.fail(record(M, "image-square", N, prof.family[i], detail=f"f(N)^2 = {submodule_product(ms, fN, fN)}"))
                break


def _qualified(prof):
    return [N for N in prof.proper if prof.qualifies(N)]


def v_sqrt_cor(cfg, rep):
    """``f(N)f(K) ⊆ √0`` for qualified ``N, K``."""
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        quals = _qualified(prof) if prof.multiplication else []
        rep.checked += len(prof.proper) ** 2
        rep.vacuous += len(prof.proper) ** 2 - len(quals) ** 2
        if not quals:
            continue
        ms = multiplication_structure(M)
        nil = radical(M.zero_submodule())
        imgs = {N.bits: image_bits(prof.family, N) for N in quals}
        for N in quals:
            for K in quals:
                pairs = {}
                for i, (a, b) in enumerate(zip(imgs[N.bits], imgs[K.bits])):
                    pairs.setdefault((a, b), i)
                for (a, b), i in pairs.items():
                    prod = submodule_product(ms, Submodule(M, a), Submodule(M, b))
                    if not prod <= nil:
                        rep.fail(record(M, "image-product-in-nilradical", N, prof.family[i], detail=f"K = {K}: f(N)f(K) = {prod}, sqrt(0) = {nil}"))
                        break


def v_lemma_atani(cfg, rep):
    """The three annihilation clauses, each checked on every pair of submodules."""
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        L = list(prof.lattice)
        rep.checked += len(L) ** 2
        if not prof.multiplication:
            rep.vacuous += len(L) ** 2
            continue
        ms = multiplication_structure(M)
        cyc = {m: ms.ideal_of(span(M, [m])) for m in range(M.order)}
        for N in L:
            for K in L:
                nk_zero = _zero_product(ms, N, K)
                h1 = all(ideal_times(cyc[int(a)], K).is_zero() for a in N.indices)
                h2 = all(ideal_times(cyc[int(b)], N).is_zero() for b in K.indices)
                h3 = all(ideal_times(ideal_product(cyc[int(a)], cyc[int(b)]), M).is_zero() for a in N.indices for b in K.indices)
                if not (h1 or h2 or h3):
                    rep.vacuous += 1
                for clause, hyp in (("aK=0", h1), ("Nb=0", h2), ("ab=0", h3)):
                    if hyp and not nk_zero:
                        rep.fail(record(M, clause, N, detail=f"K = {K}: NK = {submodule_product(ms, N, K)}"))


def _fg_faithful_mult(prof):
    return prof.faithful and prof.multiplication


def v_the4(cfg, rep):
    """``f(N)f(√0) = 0`` for every onto member ``f``."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        if not (_fg_faithful_mult(prof) and prof.qualifies(N)):
            rep.vacuous += 1
            continue
        ms = multiplication_structure(M)
        onto = onto_members(prof.family)
        nil = radical(M.zero_submodule())
        bn, bz = image_bits(prof.family, N), image_bits(prof.family, nil)
        for i in onto:
            prod = submodule_product(ms, Submodule(M, bn[i]), Submodule(M, bz[i]))
            if not prod.is_zero():
                rep.fail(record(M, "onto-image-product", N, prof.family[int(i)], detail=f"f(N)f(sqrt 0) = {prod}"))
                break


def v_the4_cor(cfg, rep):
    """``f(N)f(K) = 0`` for onto ``f`` when ``N, K`` are fully invariant, S-weakly prime and not prime."""
    for M in corpus_for(cfg).modules:
        prof = get_profile(M)
        pool = []
        if _fg_faithful_mult(prof):
            pool = [N for N in prof.proper if prof.fully_invariant(N) and prof.s_weakly(N) and not prof.prime(N)]
        rep.checked += len(prof.proper) ** 2
        rep.vacuous += len(prof.proper) ** 2 - len(pool) ** 2
        if not pool:
            continue
        ms = multiplication_structure(M)
        onto = onto_members(prof.family)
        imgs = {N.bits: image_bits(prof.family, N) for N in pool}
        for N in pool:
            for K in pool:
                for i in onto:
                    prod = submodule_product(ms, Submodule(M, imgs[N.bits][i]), Submodule(M, imgs[K.bits][i]))
                    if not prod.is_zero():
                        rep.fail(record(M, "onto-image-product", N, prof.family[int(i)], detail=f"K = {K}: f(N)f(K) = {prod}"))
                        break


def _unique_max_all_primes_max(prof):
    if len(prof.maximal) != 1:
        return None
    K = prof.maximal[0]
    maxbits = {X.bits for X in prof.maximal}
    if any(P.bits not in maxbits for P in prof.primes):
        return None
    return K


def _cor0_conclusion(rep, M, prof, N, K, criterion):
    ms = multiplication_structure(M)
    if N.bits == K.bits:
        return
    onto = onto_members(prof.family)
    bn, bk = image_bits(prof.family, N), image_bits(prof.family, K)
    for i in onto:
        prod = submodule_product(ms, Submodule(M, bn[i]), Submodule(M, bk[i]))
        if not prod.is_zero():
            rep.fail(record(M, criterion, N, prof.family[int(i)], detail=f"N != K = {K} and f(N)f(K) = {prod}"))
            return


def v_cor0(cfg, rep):
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        K = _unique_max_all_primes_max(prof) if _fg_faithful_mult(prof) else None
        if K is None or not (prof.fully_invariant(N) and prof.s_weakly(N)):
            rep.vacuous += 1
            continue
        _cor0_conclusion(rep, M, prof, N, K, "maximal-or-annihilating")


def v_local_cor(cfg, rep):
    """Faithful modules over the local rings ``Z_{p^k}``; cyclicity is re-derived before the conclusion."""
    for M, prof, N in _proper_pairs(corpus_for(cfg).modules):
        rep.checked += 1
        K = _unique_max_all_primes_max(prof) if (M.ring.is_local() and prof.faithful) else None
        if K is None or not (prof.fully_invariant(N) and prof.s_weakly(N)):
            rep.vacuous += 1
            continue
        if not prof.cyclic:
            rep.fail(record(M, "cyclic", N, detail="local-ring module with a unique maximal submodule is not cyclic"))
            continue
        _cor0_conclusion(rep, M, prof, N, K, "maximal-or-annihilating")


# products


def _product_pairs(cfg):
    return corpus_for(cfg).shared_pairs


def v_prokart(cfg, rep):
    for P in _product_pairs(cfg):
        pp, p1 = get_product_profile(P), get_profile(P.left)
        for N1 in p1.proper:
            rep.checked += 1
            N = embed(P, N1)
            a, b = pp.s_prime(N), p1.s_prime(N1)
            if bool(a) != bool(b):
                rep.fail(_verdict_record(P.combined, "N1xM2-s-prime", N, a if not a else b, f"N1xM2={bool(a)} N1={bool(b)}; N1 = {N1}"))


def v_thekart(cfg, rep):
    for P in _product_pairs(cfg):
        pp, p1, p2 = get_product_profile(P), get_profile(P.left), get_profile(P.right)
        for N1 in p1.proper:
            rep.checked += 1
            N = embed(P, N1)
            a = pp.s_weakly(N)
            b = thekart_condition2(P, N1, p1.family, p2.family)
            if bool(a) != b:
                rep.fail(_verdict_record(P.combined, "N1xM2-s-weakly", N, a, f"N1xM2={bool(a)} condition={b}; N1 = {N1}"))


def _component_implication(rep, P, pp, p1, p2, strong, label):
    for N1 in p1.proper:
        for N2 in p2.proper:
            rep.checked += 1
            N = embed(P, N1, N2)
            if strong:
                whole, c1, c2 = pp.s_prime(N), p1.s_prime(N1), p2.s_prime(N2)
            else:
                whole, c1, c2 = pp.s_weakly(N), p1.s_weakly(N1), p2.s_weakly(N2)
            if not whole:
                rep.vacuous += 1
                if c1 and c2:
                    rep.find(_verdict_record(P.combined, f"converse-{label}", N, whole,
                                             f"both components {label} but N1xN2 is not"))
                continue
            if not (c1 and c2):
                rep.fail(record(P.combined, f"components-{label}", N, detail=f"N1 {label}={bool(c1)} N2 {label}={bool(c2)}"))


def v_pro1in2(cfg, rep):
    for P in _product_pairs(cfg):
        _component_implication(rep, P, get_product_profile(P), get_profile(P.left), get_profile(P.right), True, "s-prime")


def v_pro2in2(cfg, rep):
    for P in _product_pairs(cfg):
        _component_implication(rep, P, get_product_profile(P), get_profile(P.left), get_profile(P.right), False, "s-weakly")


def _sorted_matrices(F):
    k = F.parent.rank
    flat = F.matrices.reshape(len(F), k * k)
    return flat[np.lexsort(flat.T[::-1])]


def v_theD1(cfg, rep):
    """Over ``R_1 x R_2``: the product family is all of End, every submodule splits, and the three conditions agree."""
    for P in corpus_for(cfg).decomposable_pairs:
        pc, p1 = get_profile(P.combined), get_profile(P.left)
        F12 = product_family(P, p1.family, get_profile(P.right).family)
        if len(F12) != len(pc.family) or not np.array_equal(_sorted_matrices(F12), _sorted_matrices(pc.family)):
            rep.fail(record(P.combined, "product-family-is-full", detail=f"|S1 x S2| = {len(F12)}, |End(M)| = {len(pc.family)}"))
        if not decomposable_lattice_splits(P):
            rep.fail(record(P.combined, "lattice-splits", detail="a submodule is not of the form N1 x N2"))
        for N1 in p1.proper:
            rep.checked += 1
            N = embed(P, N1)
            c1, c2, c3 = bool(p1.s_prime(N1)), bool(pc.s_prime(N)), bool(pc.s_weakly(N))
            if not c1 == c2 == c3:
                rep.fail(record(P.combined, "three-way", N, detail=f"N1 S1-prime={c1} N S-prime={c2} N S-weakly={c3}; N1 = {N1}"))


def v_theD2(cfg, rep):
    for P in corpus_for(cfg).decomposable_pairs:
        pc, p1, p2 = get_profile(P.combined), get_profile(P.left), get_profile(P.right)
        _component_implication(rep, P, pc, p1, p2, True, "s-prime")
        _component_implication(rep, P, pc, p1, p2, False, "s-weakly")


VERIFIERS = {
    "pro1": v_pro1,
    "exa1": v_exa1,
    "pro4": v_pro4,
    "pro4-cor": v_pro4_cor,
    "pro-babei": v_pro_babei,
    "zero-cor": v_zero_cor,
    "the1": v_the1,
    "pro5": v_pro5,
    "pro5-cor": v_pro5_cor,
    "theS": v_theS,
    "pro2": v_pro2,
    "pro3": v_pro3,
    "COR1": v_COR1,
    "lemma-fg": v_lemma_fg,
    "the-mult1": v_the_mult1,
    "the-mult2": v_the_mult2,
    "the3": v_the3,
    "cor-n2": v_cor_n2,
    "sqrt-cor": v_sqrt_cor,
    "lemma-atani": v_lemma_atani,
    "the4": v_the4,
    "the4-cor": v_the4_cor,
    "cor0": v_cor0,
    "local-cor": v_local_cor,
    "prokart": v_prokart,
    "thekart": v_thekart,
    "pro1in2": v_pro1in2,
    "pro2in2": v_pro2in2,
    "theD1": v_theD1,
    "theD2": v_theD2,
}

THEOREM_IDS = tuple(VERIFIERS)


def _skip_reason(theorem_id, cfg):
    if theorem_id in PRODUCT_THEOREMS and not cfg.include_products:
        return "shared-ring products disabled"
    if theorem_id in DECOMPOSABLE_THEOREMS and not cfg.include_decomposable:
        return "decomposable products disabled"
    return None


def verify_theorem(theorem_id, cfg=None):
    if theorem_id not in VERIFIERS:
        raise ModcheckError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    cfg = cfg or CorpusConfig()
    rep = TheoremReport(theorem_id)
    reason = _skip_reason(theorem_id, cfg)
    if reason:
        rep.skipped, rep.skip_reason = True, reason
        return rep
    start = time.perf_counter()
    VERIFIERS[theorem_id](cfg, rep)
    rep.wall_time = time.perf_counter() - start
    return rep


def verify_all(cfg=None):
    cfg = cfg or CorpusConfig()
    return [verify_theorem(t, cfg) for t in THEOREM_IDS]
