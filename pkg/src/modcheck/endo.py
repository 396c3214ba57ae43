"""Endomorphisms of finite modules in matrix form, and exhaustive endomorphism families.

Entry ``a[i][j]`` of a matrix is coordinate ``i`` of the image of the
``j``-th standard generator.  It must satisfy ``a[i][j]·d_j ≡ 0 (mod d_i)``
so the image of an order-``d_j`` generator has order dividing ``d_j``, and it
must vanish when factors ``i`` and ``j`` are acted on by different ring
components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import bounds
from .errors import BoundExceeded, ModcheckError, RingMismatch
from .module import FinModule, _from_indices, bits_from_bool, span
from .ring import mixed_radix_coords

_CHUNK = 8192


def entry_step(M, i, j):
    """Spacing of admissible values for entry ``(i, j)``; 0 means the entry is forced to zero."""
    if M.action[i] != M.action[j]:
        return 0
    di, dj = M.orders[i], M.orders[j]
    return di // math.gcd(di, dj)


def endomorphism_count(M):
    """``prod gcd(d_i, d_j)`` over factor pairs sharing a ring component."""
    k = M.rank
    return math.prod(
        math.gcd(M.orders[i], M.orders[j]) for i in range(k) for j in range(k) if M.action[i] == M.action[j]
    )


def _maps_from_matrices(M, mats):
    """Image index of every element under each matrix in ``mats`` (shape ``(F, k, k)``)."""
    F = len(mats)
    out = np.empty((F, M.order), dtype=np.int32 if M.order < 2**31 else np.int64)
    if M.rank == 0:
        out[:] = 0
        return out
    mods = np.array(M.orders, dtype=np.int64)
    for lo in range(0, F, _CHUNK):
        block = mats[lo:lo + _CHUNK]
        img = np.einsum("mj,fij->fmi", M.coords, block) % mods
        out[lo:lo + _CHUNK] = img @ M.strides
    return out


def validate_matrix(M, matrix):
    """Raise with the violated constraint named; return the matrix as a tuple of tuples."""
    k = M.rank
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    if len(rows) != k or any(len(r) != k for r in rows):
        raise ModcheckError(f"endomorphism of {M} needs a {k}x{k} matrix")
    for i in range(k):
        for j in range(k):
            a = rows[i][j]
            di, dj = M.orders[i], M.orders[j]
            if not 0 <= a < di:
                raise ModcheckError(f"entry ({i + 1},{j + 1})={a} must lie in [0, {di})")
            step = entry_step(M, i, j)
            if step == 0 and a != 0:
                raise ModcheckError(
                    f"entry ({i + 1},{j + 1})={a} must be 0: factors {i + 1} and {j + 1} sit over different ring components"
                )
            if step and a % step:
                raise ModcheckError(
                    f"entry ({i + 1},{j + 1})={a} must be a multiple of {step} = {di}/gcd({di},{dj}) "
                    f"(image of an order-{dj} generator in Z{di})"
                )
    return rows


@dataclass(frozen=True)
class Endomorphism:
    parent: FinModule
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", validate_matrix(self.parent, self.matrix))

    @classmethod
    def identity(cls, M):
        return cls(M, tuple(tuple(int(i == j) % M.orders[i] for j in range(M.rank)) for i in range(M.rank)))

    @classmethod
    def zero(cls, M):
        return cls(M, tuple((0,) * M.rank for _ in range(M.rank)))

    @classmethod
    def scalar(cls, M, r):
        """Multiplication by the ring element ``r`` (residue tuple or int for one-component rings)."""
        if isinstance(r, int):
            r = (r,) * M.ring.ncomponents
        return cls(M, tuple(
            tuple((r[M.action[i]] % M.orders[i]) if i == j else 0 for j in range(M.rank)) for i in range(M.rank)
        ))

    @cached_property
    def map(self):
        return _maps_from_matrices(self.parent, np.array([self.matrix], dtype=np.int64).reshape(1, self.parent.rank, self.parent.rank))[0]

    def __call__(self, m):
        return apply(self, m)

    def __str__(self):
        return "matrix [" + "; ".join(" ".join(map(str, row)) for row in self.matrix) + "]"


@dataclass(frozen=True, eq=False)
class EndoFamily:
    """A finite family of endomorphisms, stored as stacked matrices and element maps.

    ``kind`` is ``"full"``, ``"product-restricted"`` or ``"singleton"``.
    """

    parent: FinModule
    matrices: np.ndarray
    kind: str = "full"

    def __len__(self):
        return len(self.matrices)

    def __getitem__(self, i):
        return Endomorphism(self.parent, self.matrices[i].tolist())

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @cached_property
    def maps(self):
        """``maps[f, m]``: index of ``f(m)``."""
        return _maps_from_matrices(self.parent, self.matrices)

    @classmethod
    def singleton(cls, f):
        k = f.parent.rank
        return cls(f.parent, np.array(f.matrix, dtype=np.int64).reshape(1, k, k), "singleton")

    def index_of(self, f):
        target = np.array(f.matrix, dtype=np.int64)
        hits = np.flatnonzero((self.matrices == target).all(axis=(1, 2)))
        return int(hits[0]) if len(hits) else None


@lru_cache(maxsize=None)
def enumerate_endomorphisms(M):
    """``End(M)``: every valid matrix exactly once, entries iterated row-major, lexicographically."""
    count = endomorphism_count(M)
    if count > bounds.MAX_ENDO_FAMILY:
        raise BoundExceeded(f"End({M}) has {count} members, above MAX_ENDO_FAMILY={bounds.MAX_ENDO_FAMILY}")
    k = M.rank
    choices, steps = [], []
    for i in range(k):
        for j in range(k):
            step = entry_step(M, i, j)
            choices.append(math.gcd(M.orders[i], M.orders[j]) if step else 1)
            steps.append(step)
    grid = mixed_radix_coords(choices) * np.array(steps, dtype=np.int64)
    return EndoFamily(M, grid.reshape(-1, k, k), "full")


def _check(f, M):
    if f.parent != M:
        raise RingMismatch("endomorphism and module/submodule have different parents")


def apply(f, m):
    M = f.parent
    i = m if isinstance(m, (int, np.integer)) else M.index(m)
    return M.element(int(f.map[i]))


def image(f):
    return _from_indices(f.parent, np.unique(f.map), _basis_images(f))


def _basis_images(f):
    M = f.parent
    gens = []
    for j in range(M.rank):
        col = tuple(f.matrix[i][j] for i in range(M.rank))
        g = M.index(col)
        if g:
            gens.append(g)
    return tuple(gens)


def kernel(f):
    return span(f.parent, [int(i) for i in np.flatnonzero(f.map == 0)])


def preimage(f, N):
    """``f^{-1}(N)``; asserted to be a submodule."""
    _check(f, N.parent)
    idx = np.flatnonzero(N.mask[f.map])
    S = span(f.parent, [int(i) for i in idx])
    if S.order != len(idx):
        raise ModcheckError("preimage is not a submodule")
    return S


def image_of_submodule(f, N):
    """``f(N)``, computed as the span of the images of the elements of ``N``."""
    _check(f, N.parent)
    return span(f.parent, [int(i) for i in np.unique(f.map[N.indices])])


def is_onto(f):
    return len(np.unique(f.map)) == f.parent.order


def is_one_to_one(f):
    return int(np.count_nonzero(f.map == 0)) == 1


def compose(f, g):
    """``f ∘ g``."""
    if f.parent != g.parent:
        raise RingMismatch("cannot compose endomorphisms of different modules")
    M = f.parent
    k = M.rank
    rows = [[sum(f.matrix[i][t] * g.matrix[t][j] for t in range(k)) % M.orders[i] for j in range(k)] for i in range(k)]
    return Endomorphism(M, rows)


def fully_invariant_witness(N, family):
    """Index of a family member moving ``N`` outside itself, or None."""
    _check_family(N, family)
    ok = N.mask[family.maps[:, N.indices]].all(axis=1)
    bad = np.flatnonzero(~ok)
    return int(bad[0]) if len(bad) else None


def is_fully_invariant(N, family=None):
    if family is None:
        family = enumerate_endomorphisms(N.parent)
    return fully_invariant_witness(N, family) is None


def _check_family(N, family):
    if family.parent != N.parent:
        raise RingMismatch("endomorphism family and submodule have different parents")


def image_bits(family, N):
    """Bitset of ``f(N)`` for every family member, as Python ints (duplicates preserved)."""
    M = family.parent
    imgs = family.maps[:, N.indices]
    masks = np.zeros((len(family), M.order), dtype=bool)
    rows = np.repeat(np.arange(len(family)), imgs.shape[1])
    masks[rows, imgs.ravel()] = True
    return [bits_from_bool(m) for m in masks]


def onto_members(family):
    """Indices of surjective members."""
    M = family.parent
    counts = np.array([len(np.unique(row)) for row in family.maps]) if M.order > 64 else _distinct_counts(family.maps, M.order)
    return np.flatnonzero(counts == M.order)


def _distinct_counts(maps, n):
    seen = np.zeros((len(maps), n), dtype=bool)
    seen[np.repeat(np.arange(len(maps)), maps.shape[1]), maps.ravel()] = True
    return seen.sum(axis=1)
