"""Finite modules ``Z_{d_1} x ... x Z_{d_k}`` over a :class:`FiniteRing`, their submodules and lattices.

A module element is an index into the mixed-radix enumeration of its
coordinate tuples; index order is lexicographic coordinate order, so a
sorted index set is the canonical form of a submodule.  Submodules store
that set as a Python int bitset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import bounds
from .errors import BoundExceeded, ModcheckError, PredicateError, RingMismatch
from .ring import FiniteRing, Ideal, mixed_radix_coords, mixed_radix_strides


def default_action(orders, moduli):
    """Assign factors to ring components: the first component (not before the previous factor's) whose modulus the order divides.

    Returns None when some factor fits nowhere.
    """
    action = []
    c = 0
    for d in orders:
        while c < len(moduli) and moduli[c] % d != 0:
            c += 1
        if c == len(moduli):
            return None
        action.append(c)
    return tuple(action)


def bits_from_bool(arr):
    arr = np.asarray(arr, dtype=bool)
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def bool_from_bits(bits, n):
    nbytes = max(1, (n + 7) // 8)
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


@dataclass(frozen=True)
class FinModule:
    """``Z_{d_1} x ... x Z_{d_k}`` where factor ``j`` is acted on by ring component ``action[j]``."""

    ring: FiniteRing
    orders: tuple
    action: tuple = None

    def __post_init__(self):
        orders = tuple(int(d) for d in self.orders)
        if any(d < 1 for d in orders):
            raise ModcheckError(f"cyclic orders must be >= 1, got {orders}")
        action = self.action
        if action is None:
            action = default_action(orders, self.ring.moduli)
            if action is None:
                bad = next((d for d in orders if all(n % d for n in self.ring.moduli)), None)
                if bad is None:
                    raise ModcheckError(
                        f"factors {orders} cannot be assigned to components of {self.ring} in order; "
                        "reorder them or give the action explicitly"
                    )
                raise ModcheckError(f"Z{bad} is not a module over {self.ring}: {bad} divides no component modulus")
        action = tuple(int(c) for c in action)
        if len(action) != len(orders):
            raise ModcheckError("action map must assign one ring component per factor")
        for d, c in zip(orders, action):
            if not 0 <= c < self.ring.ncomponents:
                raise ModcheckError(f"ring component {c} does not exist in {self.ring}")
            n = self.ring.moduli[c]
            if n % d != 0:
                raise ModcheckError(f"Z{d} is not a module over Z{n}: {d} does not divide {n}")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "action", action)
        if self.order > bounds.MAX_MODULE_ORDER:
            raise BoundExceeded(f"module order {self.order} exceeds MAX_MODULE_ORDER={bounds.MAX_MODULE_ORDER}")

    @classmethod
    def over(cls, n, *orders):
        """``Z_{orders[0]} x ... over Z_n``."""
        return cls(FiniteRing((n,)), orders)

    @classmethod
    def regular(cls, ring):
        """The ring as a module over itself."""
        return cls(ring, ring.moduli, tuple(range(ring.ncomponents)))

    @property
    def order(self):
        return math.prod(self.orders)

    @property
    def rank(self):
        return len(self.orders)

    def __str__(self):
        factors = []
        default = default_action(self.orders, self.ring.moduli)
        for j, d in enumerate(self.orders):
            tag = f"Z{d}"
            if default != self.action:
                tag += f"@{self.action[j] + 1}"
            factors.append(tag)
        lhs = " x ".join(factors) if factors else "Z1"
        return f"{lhs} over {self.ring}"

    # element plumbing

    @cached_property
    def coords(self):
        return mixed_radix_coords(self.orders)

    @cached_property
    def strides(self):
        return mixed_radix_strides(self.orders)

    @cached_property
    def _mods(self):
        return np.array(self.orders, dtype=np.int64)

    def encode(self, coords):
        """Index of coordinate tuple(s); the last axis holds coordinates (already reduced)."""
        return np.asarray(coords, dtype=np.int64) @ self.strides

    def index(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ModcheckError(f"element {coords} has {len(coords)} coordinates, module has {self.rank}")
        for c, d in zip(coords, self.orders):
            if not 0 <= c < d:
                raise ModcheckError(f"element {coords} out of range for {self}")
        return int(self.encode(coords)) if self.rank else 0

    def element(self, i):
        return tuple(int(c) for c in self.coords[i])

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    def add_idx(self, a, b):
        """Elementwise sum of index arrays (broadcasting)."""
        a = np.asarray(a)
        b = np.asarray(b)
        return ((self.coords[a] + self.coords[b]) % self._mods) @ self.strides

    def neg_idx(self, a):
        return ((-self.coords[np.asarray(a)]) % self._mods) @ self.strides

    @cached_property
    def act(self):
        """``act[r, m]``: index of ``r·m`` for ring index ``r`` and element index ``m``."""
        scal = self.ring.coords[:, list(self.action)] if self.rank else np.zeros((self.ring.order, 0), dtype=np.int64)
        prod = (scal[:, None, :] * self.coords[None, :, :]) % self._mods
        return prod @ self.strides

    # convenience constructors for submodules

    def zero_submodule(self):
        return Submodule(self, 1, ())

    def full_submodule(self):
        gens = tuple(self.index(tuple(int(i == j) % d for i, d in enumerate(self.orders))) for j in range(self.rank))
        return Submodule(self, (1 << self.order) - 1, tuple(g for g in gens if g != 0))


@dataclass(frozen=True)
class Submodule:
    """A submodule, identified by the bitset of its element indices.

    ``gens`` is a generating sequence of element indices (not part of identity).
    """

    parent: FinModule
    bits: int
    gens: tuple = field(default=(), compare=False)

    @classmethod
    def from_elements(cls, parent, elements):
        """Build from explicit coordinate tuples, checking closure."""
        idx = sorted({parent.index(e) for e in elements})
        mask = np.zeros(parent.order, dtype=bool)
        mask[idx] = True
        if not mask[0]:
            raise ModcheckError("a submodule must contain 0")
        arr = np.array(idx)
        if not mask[parent.add_idx(arr[:, None], arr[None, :])].all():
            raise ModcheckError("element set is not closed under addition")
        if not mask[parent.act[:, arr]].all():
            raise ModcheckError("element set is not closed under the ring action")
        return cls(parent, bits_from_bool(mask), tuple(idx))

    @cached_property
    def mask(self):
        return bool_from_bits(self.bits, self.parent.order)

    @cached_property
    def indices(self):
        return np.flatnonzero(self.mask)

    @property
    def order(self):
        return self.bits.bit_count()

    def elements(self):
        return [self.parent.element(i) for i in self.indices]

    def generators(self):
        return [self.parent.element(i) for i in self.gens]

    def __contains__(self, elem):
        i = elem if isinstance(elem, (int, np.integer)) else self.parent.index(elem)
        return bool((self.bits >> int(i)) & 1)

    def __le__(self, other):
        _same_parent(self, other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __and__(self, other):
        _same_parent(self, other)
        return Submodule(self.parent, self.bits & other.bits)

    def __add__(self, other):
        _same_parent(self, other)
        return submodule_sum(self, other)

    def is_proper(self):
        return self.order < self.parent.order

    def is_zero(self):
        return self.bits == 1

    def __str__(self):
        if self.is_zero():
            return "0"
        if not self.is_proper():
            return "full"
        gens = ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators())
        return "span {" + gens + "}"


def _same_parent(a, b):
    if a.parent != b.parent:
        raise RingMismatch("submodules of different modules")


def _require_proper(N):
    if not N.is_proper():
        raise PredicateError(f"submodule {N} of {N.parent} is not proper")


def _from_indices(parent, idx, gens):
    mask = np.zeros(parent.order, dtype=bool)
    mask[np.asarray(idx, dtype=np.int64)] = True
    return Submodule(parent, bits_from_bool(mask), tuple(gens))


def cyclic_indices(M, m):
    """Sorted indices of ``Rm``."""
    return np.unique(M.act[:, m])


def span(M, gens):
    """Smallest submodule containing ``gens`` (coordinate tuples or element indices)."""
    idx = [g if isinstance(g, (int, np.integer)) else M.index(g) for g in gens]
    for g in idx:
        if not 0 <= g < M.order:
            raise ModcheckError(f"element index {g} out of range for {M}")
    current = np.array([0], dtype=np.int64)
    kept = []
    for g in idx:
        if g in current:
            continue
        current = np.unique(M.add_idx(current[:, None], cyclic_indices(M, g)[None, :]))
        kept.append(int(g))
    return _from_indices(M, current, kept)


def submodule_sum(N, K):
    M = N.parent
    idx = np.unique(M.add_idx(N.indices[:, None], K.indices[None, :]))
    gens = tuple(dict.fromkeys(N.gens + K.gens))
    return _from_indices(M, idx, gens)


def image_under_scalars(ideal_gens_idx, N):
    """``I·N`` for an ideal given by generating ring indices."""
    M = N.parent
    pieces = np.unique(M.act[np.ix_(np.asarray(ideal_gens_idx), N.indices)])
    return span(M, [int(x) for x in pieces])


def ideal_times(I, N):
    """The submodule ``I·N`` (``N`` a submodule, or a module meaning the whole module)."""
    if isinstance(N, FinModule):
        N = N.full_submodule()
    M = N.parent
    if I.ring != M.ring:
        raise RingMismatch(f"ideal over {I.ring} acting on module over {M.ring}")
    gens = []
    for c, d in enumerate(I.divisors):
        res = [0] * M.ring.ncomponents
        res[c] = d
        gens.append(M.ring.index(res))
    return image_under_scalars(gens, N)


@dataclass(frozen=True)
class SubmoduleLattice:
    parent: FinModule
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    @cached_property
    def containment(self):
        """``containment[i, j]`` iff member i ⊆ member j."""
        bits = [m.bits for m in self.members]
        return np.array([[a & ~b == 0 for b in bits] for a in bits], dtype=bool)

    def proper(self):
        return [N for N in self.members if N.is_proper()]

    def find(self, N):
        for i, K in enumerate(self.members):
            if K.bits == N.bits:
                return i
        raise KeyError(N)


def _check_lattice_bound(M):
    if M.order > bounds.MAX_LATTICE_ORDER:
        raise BoundExceeded(f"module order {M.order} exceeds MAX_LATTICE_ORDER={bounds.MAX_LATTICE_ORDER}")


@lru_cache(maxsize=None)
def submodule_lattice(M):
    """Every submodule of ``M`` exactly once, sorted by (order, element indices).

    Cyclic spans are closed under sums with cyclic spans, breadth first, so
    each member's generator list is as short as any cyclic decomposition.
    """
    _check_lattice_bound(M)
    cyclic = {}
    for m in range(M.order):
        idx = cyclic_indices(M, m)
        key = bits_from_bool(np.isin(np.arange(M.order), idx))
        if key not in cyclic:
            cyclic[key] = Submodule(M, key, (m,) if m else ())
    found = dict(cyclic)
    frontier = list(cyclic.values())
    atoms = [c for c in cyclic.values() if not c.is_zero()]
    while frontier:
        nxt = []
        for N in frontier:
            for C in atoms:
                if C.bits & ~N.bits == 0:
                    continue
                S = submodule_sum(N, C)
                if S.bits not in found:
                    found[S.bits] = S
                    nxt.append(S)
        frontier = nxt
    members = sorted(found.values(), key=lambda S: (S.order, tuple(S.indices)))
    return SubmoduleLattice(M, tuple(members))


def residual(N, K=None):
    """``(N :_R K) = {r : rK ⊆ N}``; ``K`` defaults to the whole module."""
    M = N.parent
    if K is None:
        k_idx = np.arange(M.order)
    elif isinstance(K, FinModule):
        if K != M:
            raise RingMismatch(f"{N} is not a submodule of {K}")
        k_idx = np.arange(M.order)
    else:
        _same_parent(N, K)
        k_idx = K.indices
    mask = N.mask[M.act[:, k_idx]].all(axis=1)
    return Ideal.from_mask(M.ring, mask)


def element_residual(N, m):
    """``(N :_R m) = {r : rm ∈ N}``."""
    M = N.parent
    i = m if isinstance(m, (int, np.integer)) else M.index(m)
    return Ideal.from_mask(M.ring, N.mask[M.act[:, i]])


def annihilator(M):
    if isinstance(M, Submodule):
        return residual(M.parent.zero_submodule(), M)
    return residual(M.zero_submodule(), M)


def is_faithful(M):
    return annihilator(M).is_zero()


def prime_submodule_witness(N, weakly=False):
    """``(r, m)`` violating (weak) primality of ``N``, as (ring residues, coords); None if prime."""
    _require_proper(N)
    M = N.parent
    act = M.act
    in_n = N.mask[act]
    res = in_n.all(axis=1)
    bad = in_n & ~N.mask[None, :] & ~res[:, None]
    if weakly:
        bad &= act != 0
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    r, m = hits[0]
    return M.ring.element(r), M.element(m)


def is_prime_submodule(N):
    return prime_submodule_witness(N) is None


def is_weakly_prime_submodule(N):
    return prime_submodule_witness(N, weakly=True) is None


def prime_submodules(M):
    return [N for N in submodule_lattice(M).proper() if is_prime_submodule(N)]


def radical(N):
    """Intersection of the prime submodules containing ``N``; the whole module if there are none."""
    M = N.parent
    bits = (1 << M.order) - 1
    for P in prime_submodules(M):
        if N <= P:
            bits &= P.bits
    if bits == (1 << M.order) - 1:
        return M.full_submodule()
    return _lattice_member(M, bits)


def _lattice_member(M, bits):
    for S in submodule_lattice(M):
        if S.bits == bits:
            return S
    raise ModcheckError("bitset is not a submodule")


def cyclic_generator(M):
    """Index of some ``m`` with ``Rm = M``, or None."""
    for m in range(M.order):
        if len(cyclic_indices(M, m)) == M.order:
            return m
    return None


def is_cyclic(M):
    return cyclic_generator(M) is not None


def maximal_submodules(M):
    proper = submodule_lattice(M).proper()
    return [N for N in proper if not any(N < K for K in proper)]


def generating_set(N):
    """A generating sequence for ``N``: its stored one, or a greedy one built in index order."""
    if N.gens or N.is_zero():
        return list(N.gens)
    M = N.parent
    gens = []
    current = M.zero_submodule()
    for i in N.indices:
        if int(i) in current:
            continue
        gens.append(int(i))
        current = span(M, gens)
        if current.bits == N.bits:
            break
    return gens
