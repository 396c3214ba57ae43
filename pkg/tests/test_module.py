import pytest

import oracles
from modcheck import bounds
from modcheck.errors import BoundExceeded, ModcheckError, PredicateError
from modcheck.harness.corpus import CorpusConfig, base_modules
from modcheck.module import (
    FinModule,
    Submodule,
    annihilator,
    cyclic_generator,
    generating_set,
    is_cyclic,
    is_faithful,
    is_prime_submodule,
    is_weakly_prime_submodule,
    maximal_submodules,
    prime_submodule_witness,
    radical,
    residual,
    span,
    submodule_lattice,
)
from modcheck.ring import FiniteRing, Ideal


def small_modules(max_order=16):
    mods, _ = base_modules(CorpusConfig(max_module_order=max_order))
    mods = list(mods)
    mods.append(FinModule(FiniteRing((2, 3)), (2, 3)))
    mods.append(FinModule(FiniteRing((2, 4)), (2, 2, 4), (0, 1, 1)))
    mods.append(FinModule(FiniteRing((1,)), (1,)))
    return mods


def elems(N):
    return frozenset(N.elements())


class TestSpan:
    def test_examples(self):
        M = FinModule.over(4, 4, 2)
        assert elems(span(M, [(2, 0)])) == {(0, 0), (2, 0)}
        assert span(M, []).is_zero()
        Z4 = FinModule.over(4, 4)
        assert not span(Z4, [(1,)]).is_proper()

    def test_out_of_range(self):
        M = FinModule.over(4, 4, 2)
        with pytest.raises(ModcheckError):
            span(M, [(0, 2)])
        with pytest.raises(ModcheckError):
            span(M, [99])

    @pytest.mark.parametrize("M", small_modules(12), ids=str)
    def test_matches_closure(self, M):
        for m in M.elements():
            assert elems(span(M, [m])) == oracles.closure_span(M, [m])


class TestLattice:
    def test_examples(self):
        assert len(submodule_lattice(FinModule.over(4, 4))) == 3
        assert len(submodule_lattice(FinModule.over(2, 2, 2))) == 5
        assert len(submodule_lattice(FinModule(FiniteRing((1,)), (1,)))) == 1

    @pytest.mark.parametrize("M", small_modules(16), ids=str)
    def test_matches_subset_oracle(self, M):
        lat = submodule_lattice(M)
        got = [elems(N) for N in lat]
        assert len(set(got)) == len(got)
        assert set(got) == set(oracles.brute_lattice(M))
        zero_and_full = {N.order for N in lat if N.is_zero() or not N.is_proper()}
        assert zero_and_full == {1, M.order}

    @pytest.mark.parametrize("M", small_modules(16), ids=str)
    def test_containment_and_generators(self, M):
        lat = submodule_lattice(M)
        C = lat.containment
        for i, A in enumerate(lat):
            assert elems(span(M, generating_set(A))) == elems(A)
            for j, B in enumerate(lat):
                assert bool(C[i, j]) == (elems(A) <= elems(B))

    def test_bound(self, monkeypatch):
        monkeypatch.setattr(bounds, "MAX_LATTICE_ORDER", 8)
        with pytest.raises(BoundExceeded):
            submodule_lattice.__wrapped__(FinModule.over(16, 16))

    def test_from_elements_rejects_non_submodule(self):
        M = FinModule.over(4, 4)
        with pytest.raises(ModcheckError):
            Submodule.from_elements(M, [(0,), (1,)])
        with pytest.raises(ModcheckError):
            Submodule.from_elements(M, [(2,)])


class TestResidual:
    def test_examples(self):
        Z4 = FinModule.over(4, 4)
        assert residual(span(Z4, [(2,)])) == Ideal(Z4.ring, (2,))
        assert residual(Z4.full_submodule()) == Ideal.unit(Z4.ring)
        Z2 = FinModule.over(4, 2)
        assert residual(Z2.zero_submodule()) == Ideal(Z2.ring, (2,))

    def test_annihilator_and_faithful(self):
        assert annihilator(FinModule.over(4, 4)).is_zero() and is_faithful(FinModule.over(4, 4))
        assert annihilator(FinModule.over(4, 2)) == Ideal(FiniteRing((4,)), (2,))
        assert not is_faithful(FinModule.over(4, 2))
        assert is_faithful(FinModule.over(4, 4, 2))

    @pytest.mark.parametrize("M", small_modules(16), ids=str)
    def test_matches_scan(self, M):
        full = frozenset(M.elements())
        for N in submodule_lattice(M):
            assert oracles.ideal_set(residual(N)) == oracles.residual_set(elems(N), full, M)


class TestPrimality:
    def test_examples(self):
        M = FinModule.over(3, 3, 3)
        assert is_prime_submodule(span(M, [(0, 1)]))
        Z8 = FinModule.over(8, 8)
        N = span(Z8, [(4,)])
        assert not is_prime_submodule(N)
        r, m = prime_submodule_witness(N)
        assert (r[0] * m[0]) % 8 in (0, 4) and m[0] % 4
        assert not is_weakly_prime_submodule(N)
        assert is_prime_submodule(span(FinModule.over(4, 4), [(2,)]))

    def test_zero_always_weakly_prime(self):
        for M in small_modules(16):
            if M.order > 1:
                assert is_weakly_prime_submodule(M.zero_submodule())

    def test_improper_is_error(self):
        M = FinModule.over(4, 4)
        with pytest.raises(PredicateError):
            is_prime_submodule(M.full_submodule())
        with pytest.raises(PredicateError):
            is_weakly_prime_submodule(M.full_submodule())

    @pytest.mark.parametrize("M", small_modules(16), ids=str)
    def test_matches_definition_scan(self, M):
        for N in submodule_lattice(M).proper():
            p, w = is_prime_submodule(N), is_weakly_prime_submodule(N)
            assert p == oracles.prime_set(elems(N), M)
            assert w == oracles.prime_set(elems(N), M, weakly=True)
            assert w or not p


class TestStructure:
    def test_radical_examples(self):
        Z8 = FinModule.over(8, 8)
        assert elems(radical(span(Z8, [(4,)]))) == elems(span(Z8, [(2,)]))
        Z4 = FinModule.over(4, 4)
        assert elems(radical(Z4.zero_submodule())) == elems(span(Z4, [(2,)]))
        P = span(Z4, [(2,)])
        assert radical(P).bits == P.bits

    def test_radical_without_primes_is_whole_module(self):
        # over Z_1 nothing is proper, so the zero module has no primes
        M = FinModule(FiniteRing((1,)), (1,))
        assert not radical(M.zero_submodule()).is_proper()

    def test_cyclic_and_maximal(self):
        M = FinModule.over(6, 2, 3)
        assert is_cyclic(M) and M.element(cyclic_generator(M)) == (1, 1)
        assert not is_cyclic(FinModule.over(2, 2, 2))
        Z4 = FinModule.over(4, 4)
        assert is_cyclic(Z4)
        (K,) = maximal_submodules(Z4)
        assert elems(K) == {(0,), (2,)}

    def test_str_and_action(self):
        assert str(FinModule.over(4, 4, 2)) == "Z4 x Z2 over Z4"
        M = FinModule(FiniteRing((2, 3)), (3, 2), (1, 0))
        assert str(M) == "Z3@2 x Z2@1 over Z2 x Z3"
        with pytest.raises(ModcheckError):
            FinModule.over(4, 3)

    def test_module_bound(self, monkeypatch):
        monkeypatch.setattr(bounds, "MAX_MODULE_ORDER", 16)
        with pytest.raises(BoundExceeded):
            FinModule.over(8, 8, 8)
