import itertools

import pytest

from modcheck.endo import Endomorphism, EndoFamily, enumerate_endomorphisms
from modcheck.errors import ModcheckError, PredicateError, RingMismatch
from modcheck.module import FinModule, span, submodule_lattice
from modcheck.predicates import is_S_prime, is_S_weakly_prime
from modcheck.products import (
    DECOMPOSABLE,
    decomposable_lattice_splits,
    embed,
    embed_N1xM2,
    full_family_matches,
    product_family,
    product_module,
    split,
    thekart_condition2,
)
from modcheck.ring import FiniteRing


def families(P):
    return enumerate_endomorphisms(P.left), enumerate_endomorphisms(P.right)


def sorted_matrices(fam):
    return sorted(tuple(m.ravel().tolist()) for m in fam.matrices)


SMALL = [FinModule.over(n, *o) for n, o in [(2, (2,)), (3, (3,)), (4, (2,)), (4, (4,)), (2, (2, 2)), (6, (6,)), (6, (2,))]]
SHARED_PAIRS = [product_module(a, b) for a, b in itertools.product(SMALL, repeat=2) if a.ring == b.ring]
DECOMP_PAIRS = [
    product_module(FinModule.over(a, a), FinModule.over(b, b), DECOMPOSABLE) for a, b in [(2, 3), (2, 2), (4, 2), (3, 4), (4, 4)]
] + [product_module(FinModule.over(2, 2, 2), FinModule.over(3, 3), DECOMPOSABLE)]


class TestConstruction:
    def test_examples(self):
        Z2 = FinModule.over(2, 2)
        P = product_module(Z2, Z2)
        assert P.combined == FinModule.over(2, 2, 2) and P.combined.order == 4
        D = product_module(Z2, FinModule.over(3, 3), DECOMPOSABLE)
        assert D.combined.ring == FiniteRing((2, 3)) and D.combined.action == (0, 1)
        Z0 = FinModule.over(4, 1)
        P = product_module(Z0, FinModule.over(4, 4))
        assert P.combined.order == 4 and len(submodule_lattice(P.combined)) == 3

    def test_errors(self):
        with pytest.raises(RingMismatch):
            product_module(FinModule.over(2, 2), FinModule.over(4, 2))
        with pytest.raises(ModcheckError):
            product_module(FinModule.over(2, 2), FinModule.over(2, 2), "tensor")

    def test_embed_examples(self):
        M1, M2 = FinModule.over(4, 4), FinModule.over(4, 2)
        P = product_module(M1, M2)
        E = embed(P, M1.zero_submodule(), M2.full_submodule())
        assert set(E.elements()) == {(0, 0), (0, 1)}
        E = embed_N1xM2(P, span(M1, [(2,)]))
        assert E.order == 4 and E.is_proper()
        assert not embed(P, M1.full_submodule(), M2.full_submodule()).is_proper()
        with pytest.raises(PredicateError):
            is_S_prime(embed(P, M1.full_submodule(), M2.full_submodule()))

    @pytest.mark.parametrize("P", SHARED_PAIRS + DECOMP_PAIRS, ids=str)
    def test_embed_split_roundtrip(self, P):
        for N1 in submodule_lattice(P.left):
            for N2 in submodule_lattice(P.right):
                E = embed(P, N1, N2)
                want = {a + b for a in N1.elements() for b in N2.elements()}
                assert set(E.elements()) == want
                a, b, ok = split(P, E)
                assert ok and a.bits == N1.bits and b.bits == N2.bits


class TestFamily:
    def test_count_example(self):
        P = product_module(FinModule.over(4, 4), FinModule.over(4, 2))
        F1, F2 = families(P)
        assert (len(F1), len(F2)) == (4, 2)
        assert len(product_family(P, F1, F2)) == 8

    def test_identity_times_identity(self):
        P = product_module(FinModule.over(4, 4), FinModule.over(4, 2))
        F1 = EndoFamily.singleton(Endomorphism.identity(P.left))
        F2 = EndoFamily.singleton(Endomorphism.identity(P.right))
        (f,) = list(product_family(P, F1, F2))
        assert f.matrix == Endomorphism.identity(P.combined).matrix

    @pytest.mark.parametrize("P", SHARED_PAIRS + DECOMP_PAIRS, ids=str)
    def test_acts_componentwise(self, P):
        F1, F2 = families(P)
        fam = product_family(P, F1, F2)
        t = 0
        for a in range(len(F1)):
            for b in range(len(F2)):
                want = [P.join(F1.maps[a, i1], F2.maps[b, i2]) for i1 in range(P.left.order) for i2 in range(P.right.order)]
                assert fam.maps[t].tolist() == want
                t += 1

    @pytest.mark.parametrize("P", DECOMP_PAIRS, ids=str)
    def test_decomposable_family_is_full(self, P):
        F1, F2 = families(P)
        assert full_family_matches(P, F1, F2)
        assert sorted_matrices(product_family(P, F1, F2)) == sorted_matrices(enumerate_endomorphisms(P.combined))
        assert decomposable_lattice_splits(P)

    def test_shared_family_is_smaller(self):
        P = product_module(FinModule.over(2, 2), FinModule.over(2, 2))
        F1, F2 = families(P)
        assert not full_family_matches(P, F1, F2)
        assert not decomposable_lattice_splits(P)

    def test_mismatched_families(self):
        P = product_module(FinModule.over(4, 4), FinModule.over(4, 2))
        F1, F2 = families(P)
        with pytest.raises(RingMismatch):
            product_family(P, F2, F1)


class TestComponents:
    @pytest.mark.parametrize("P", SHARED_PAIRS + DECOMP_PAIRS, ids=str)
    def test_product_prime_implies_components(self, P):
        F1, F2 = families(P)
        fam = product_family(P, F1, F2)
        for N1 in submodule_lattice(P.left).proper():
            for N2 in submodule_lattice(P.right).proper():
                N = embed(P, N1, N2)
                if is_S_prime(N, fam):
                    assert is_S_prime(N1, F1) and is_S_prime(N2, F2)
                if is_S_weakly_prime(N, fam):
                    assert is_S_weakly_prime(N1, F1) and is_S_weakly_prime(N2, F2)

    @pytest.mark.parametrize("P", SHARED_PAIRS + DECOMP_PAIRS, ids=str)
    def test_condition2_matches_weakly_prime_of_N1xM2(self, P):
        F1, F2 = families(P)
        fam = product_family(P, F1, F2)
        for N1 in submodule_lattice(P.left).proper():
            assert thekart_condition2(P, N1, F1, F2) == is_S_weakly_prime(embed_N1xM2(P, N1), fam).value

    def test_condition2_trivial_right_factor(self):
        P = product_module(FinModule.over(4, 4), FinModule.over(4, 1))
        N1 = P.left.zero_submodule()
        assert thekart_condition2(P, N1) == is_S_weakly_prime(N1).value
        with pytest.raises(PredicateError):
            thekart_condition2(P, P.left.full_submodule())
