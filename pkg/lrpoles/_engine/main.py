"""Embeddings as nilpotent operators with an invariant subspace over F_p.

The ambient N_beta has basis b_(i,j), block i, power j, ordered block by
block and power ascending; T b_(i,j) = b_(i,j+1) and T b_(i,beta_i - 1) = 0.
Every tableau here is recomputed from ranks, never from the combinatorics.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from .._combinatorics import (CyclicType, HeightSequence, Partition, PoleDecomposition, Tableau,
                              conjugate, gaps, validate_lr)
from .field import _ints, field, key, matrix, rank, row_basis


@dataclass(frozen=True)
class ModuleSpace:
    p: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if any(b <= 0 for b in self.blocks):
            raise ValueError(f"block sizes must be positive: {self.blocks}")

    @property
    def beta(self) -> Partition:
        return Partition(sorted(self.blocks, reverse=True))

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    @property
    def field(self):
        return field(self.p)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.cumsum((0, *self.blocks))[:-1])

    def index(self, block: int, power: int) -> int:
        if not 0 <= power < self.blocks[block]:
            raise ValueError(f"b_({block},{power}) is not a basis vector")
        return self.offsets[block] + power

    def zero(self):
        return self.field.Zeros(self.dim)

    def vector(self, terms: dict) -> "np.ndarray":
        """{(block, power): coefficient} -> vector; powers past the block vanish."""
        v = self.zero()
        for (block, power), coeff in terms.items():
            if power < self.blocks[block]:
                v[self.index(block, power)] += self.field(coeff % self.p)
        return v

    def apply(self, v, k: int = 1):
        """T^k on a vector, or on every row of a matrix."""
        out = self.field.Zeros(v.shape)
        for o, b in zip(self.offsets, self.blocks):
            if k < b:
                out[..., o + k:o + b] = v[..., o:o + b - k]
        return out

    @cached_property
    def powers(self) -> np.ndarray:
        """Power j of each basis vector b_(i,j)."""
        return np.concatenate([np.arange(b) for b in self.blocks]) if self.blocks else np.zeros(0, int)

    @cached_property
    def sizes(self) -> np.ndarray:
        """Size of the block of each basis vector."""
        return np.repeat(self.blocks, self.blocks) if self.blocks else np.zeros(0, int)

    @lru_cache(maxsize=None)
    def power(self, k: int):
        """The matrix of T^k acting on column vectors. Shared, do not modify."""
        return self.apply(self.field.Identity(self.dim), k).T

    @lru_cache(maxsize=None)
    def kernel(self, k: int):
        """Rows spanning ker T^k. Shared, do not modify."""
        return matrix(self.field, [self.field.Identity(self.dim)[self.powers >= self.sizes - k]], self.dim)

    def span(self, rows):
        return row_basis(matrix(self.field, rows, self.dim))

    def closure(self, rows):
        """Smallest T-invariant subspace containing `rows`."""
        out = []
        for v in rows:
            while v.any():
                out.append(v)
                v = self.apply(v)
        return self.span(out)


@dataclass(frozen=True)
class EmbeddingInstance:
    ambient: ModuleSpace
    generators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        p, dim = self.ambient.p, self.ambient.dim
        gens = tuple(tuple(int(x) % p for x in np.asarray(g).tolist()) for g in self.generators)
        if any(len(g) != dim for g in gens):
            raise ValueError(f"generators must have {dim} coordinates")
        object.__setattr__(self, "generators", gens)

    @property
    def p(self) -> int:
        return self.ambient.p

    def vectors(self) -> list:
        GF = self.ambient.field
        return [GF(list(g)) if g else GF.Zeros(0) for g in self.generators]

    def submodule(self):
        return self.ambient.closure(self.vectors())

    def to_dict(self):
        return {"p": self.p, "beta": list(self.ambient.blocks),
                "generators": [list(g) for g in self.generators]}


def partition_of_operator(m: ModuleSpace, sub=None) -> Partition:
    """Jordan type of T on N_beta / sub, from ranks of T^k modulo sub."""
    U = m.span([]) if sub is None else row_basis(matrix(m.field, [sub], m.dim))
    base = rank(U)
    if rank(matrix(m.field, [U, m.apply(U)], m.dim)) > base:
        raise ValueError("subspace is not T-invariant")

    def quotient_rank(k):
        # T^k B is a coordinate subspace, so U + T^k B has the rank of U on the
        # remaining coordinates plus dim T^k B
        low = m.powers < k
        return int(m.dim - low.sum()) + rank(U[:, low]) - base

    dual, k, prev = [], 1, quotient_rank(0)
    while prev:
        cur = quotient_rank(k)
        dual.append(prev - cur)
        prev, k = cur, k + 1
    return conjugate(Partition(dual))


def tableau_of_embedding(e: EmbeddingInstance) -> Tableau:
    """[type B/A, type B/TA, ..., type B]; stops at the least r with T^r A = 0."""
    m = e.ambient
    level = e.submodule()
    chain = [partition_of_operator(m, level)]
    while level.shape[0]:
        level = row_basis(m.apply(level))
        chain.append(partition_of_operator(m, level))
    return validate_lr(chain)


def height_sequence_of(m: ModuleSpace, v) -> HeightSequence:
    """(h(T^i v))_i with h(x) = max{k : x in T^k B}, finite part only."""
    heights = []
    while v.any():
        # T^k B is spanned by the b_(i,j) with j >= k
        heights.append(int(m.powers[_ints(v) != 0].min()))
        v = m.apply(v)
    return HeightSequence(heights)


def endo_submodule(m: ModuleSpace, v):
    """End(B) v as the sum over gaps of T^l B meet ker T^k, where
    l = m_i - i and k = i + 1 for each gap i of the height sequence of v."""
    h = height_sequence_of(m, v)
    rows = []
    for i in gaps(h):
        shift, depth = h[i] - i, i + 1
        rows.append(m.apply(m.kernel(shift + depth), shift))
    return m.span(rows)


def endo_orbit(m: ModuleSpace, v):
    """End(B) v by brute force over the maps b_(i,0) -> T^t b_(k,0) with
    beta_k - beta_i <= t < beta_k."""
    coords, rows = _ints(v), []
    for i, bi in enumerate(m.blocks):
        coeffs = coords[m.offsets[i]:m.offsets[i] + bi]
        for k, bk in enumerate(m.blocks):
            for t in range(max(0, bk - bi), bk):
                image = np.zeros(m.dim, dtype=np.int64)
                start, n = m.offsets[k] + t, min(bi, bk - t)
                image[start:start + n] = coeffs[:n]
                rows.append(image)
    return m.span(rows)


def count_endo_orbits(beta, p: int) -> int:
    """Number of distinct End(B) v over every v in N_beta over F_p."""
    m = ModuleSpace(p, tuple(Partition(beta)))
    GF = m.field
    seen = {key(endo_orbit(m, GF(list(coords)))) if coords else key(m.span([]))
            for coords in product(range(p), repeat=m.dim)}
    return len(seen)


# ---- Realization ----

def realize_pole(c: CyclicType, p: int) -> EmbeddingInstance:
    """N_(ambient) with generator sum_j T^shift_j b_(block_j, 0)."""
    terms = c.generator_terms()
    m = ModuleSpace(p, tuple(b for b, _ in terms) + tuple(c.free_blocks()))
    if not terms:
        return EmbeddingInstance(m)
    return EmbeddingInstance(m, (m.vector({(i, s): 1 for i, (_, s) in enumerate(terms)}),))


def realize_decomposition(d: PoleDecomposition, p: int) -> EmbeddingInstance:
    return direct_sum(*(realize_pole(CyclicType(h), p) for h in d.poles),
                      realize_pole(CyclicType((), d.empty), p), p=p)


def direct_sum(*parts: EmbeddingInstance, p: int | None = None) -> EmbeddingInstance:
    """Block-diagonal sum; generators are padded with zeros outside their block."""
    primes = {e.p for e in parts} | ({p} if p else set())
    if len(primes) > 1:
        raise ValueError(f"prime mismatch: {sorted(primes)}")
    prime = primes.pop() if primes else p
    if prime is None:
        raise ValueError("direct sum of nothing needs a prime")
    m = ModuleSpace(prime, tuple(b for e in parts for b in e.ambient.blocks))
    gens, before = [], 0
    for e in parts:
        after = m.dim - before - e.ambient.dim
        gens += [(0,) * before + g + (0,) * after for g in e.generators]
        before += e.ambient.dim
    return EmbeddingInstance(m, tuple(gens))
