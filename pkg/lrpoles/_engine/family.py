"""The four extended poles of a box move, the pullback Q and the
one-parameter family Q(mu) degenerating the source tableau to the target.

Notation of a move: the source G holds C(e,f)_n and C(e',f')_n', the target
H holds C(e',f')_n and C(e,f)_n'. P, P' are the poles of G carrying those
columns, P~, P'~ the poles of H carrying the moved ones, and `common` is the
rest of both pole decompositions.
"""
from dataclasses import dataclass
from typing import NamedTuple

from .._combinatorics import (CyclicType, HeightSequence, Partition, PoleDecomposition, Tableau,
                              extended_pole_split)
from .field import _get_prime, matrix, rank
from .main import (EmbeddingInstance, ModuleSpace, direct_sum, partition_of_operator,
                   realize_decomposition, realize_pole, tableau_of_embedding)


class InvalidContext(ValueError):
    pass


class CertificateFailure(RuntimeError):
    def __init__(self, message, edge=None, mu=None):
        super().__init__(message)
        self.edge = edge
        self.mu = mu


@dataclass(frozen=True)
class BoxMoveContext:
    source: Tableau
    target: Tableau
    n: int
    n_prime: int
    e: int
    f: int
    e_prime: int
    f_prime: int
    pole: HeightSequence
    pole_prime: HeightSequence
    pole_tilde: HeightSequence
    pole_tilde_prime: HeightSequence
    common: PoleDecomposition = PoleDecomposition(())

    def __post_init__(self):
        for name in ("pole", "pole_prime", "pole_tilde", "pole_tilde_prime"):
            object.__setattr__(self, name, HeightSequence(getattr(self, name)))
        n, n2, e, f, e2, f2 = self.n, self.n_prime, self.e, self.f, self.e_prime, self.f_prime
        if not (n > n2 and e < e2 and f < f2 and f - e == f2 - e2 and e >= 1):
            raise InvalidContext(f"no box move pattern C({e},{f})_{n}, C({e2},{f2})_{n2}")
        d = n - n2
        for h, first, last, top in ((self.pole, e, f, n), (self.pole_prime, e2, f2, n2),
                                    (self.pole_tilde, e, f, n2), (self.pole_tilde_prime, e2, f2, n)):
            if not _carries(h, first, last, top):
                raise InvalidContext(f"pole {h} does not carry C({first},{last})_{top}")
        if _shift(self.pole, e, f, -d) != self.pole_tilde:
            raise InvalidContext("P~ differs from P outside the moved column")
        if _shift(self.pole_prime, e2, f2, d) != self.pole_tilde_prime:
            raise InvalidContext("P'~ differs from P' outside the moved column")

    @property
    def data(self) -> tuple[int, ...]:
        return self.n, self.n_prime, self.e, self.f, self.e_prime, self.f_prime

    def to_dict(self):
        return {"n": self.n, "n_prime": self.n_prime, "e": self.e, "f": self.f,
                "e_prime": self.e_prime, "f_prime": self.f_prime,
                "P": list(self.pole), "P_prime": list(self.pole_prime),
                "P_tilde": list(self.pole_tilde), "P_tilde_prime": list(self.pole_tilde_prime),
                "common": self.common.to_dict()}


def _carries(h, first: int, last: int, top: int) -> bool:
    """Entries first..last of the pole sit at the bottom of a column of height `top`."""
    return len(h) >= last and all(h[x - 1] == top - last + x - 1 for x in range(first, last + 1))


def _shift(h, first: int, last: int, by: int) -> tuple[int, ...]:
    return tuple(m + by if first - 1 <= i <= last - 1 else m for i, m in enumerate(h))


class ExtendedPoles(NamedTuple):
    R: CyclicType
    R_prime: CyclicType
    R_tilde: CyclicType
    R_tilde_prime: CyclicType

    @property
    def source_padding(self) -> Partition:
        return Partition(sorted((*self.R.padding, *self.R_prime.padding), reverse=True))

    @property
    def target_padding(self) -> Partition:
        return Partition(sorted((*self.R_tilde.padding, *self.R_tilde_prime.padding), reverse=True))


def _extend(h: HeightSequence, u: int, when: bool) -> CyclicType:
    return extended_pole_split(h, u) if when else CyclicType(h)


def build_extended_poles(ctx: BoxMoveContext) -> ExtendedPoles:
    """R, R', R~, R'~: each pole absorbs an empty column of height m_u + 1
    exactly when its non-gap u would otherwise split the moved column off."""
    P, P2, Pt, Pt2 = ctx.pole, ctx.pole_prime, ctx.pole_tilde, ctx.pole_tilde_prime
    e, f, e2, f2 = ctx.e, ctx.f, ctx.e_prime, ctx.f_prime

    def follows(h, i):
        return 0 <= i and i + 1 < len(h) and h[i + 1] == h[i] + 1

    return ExtendedPoles(
        _extend(P, f - 1, follows(P, f - 1)),
        _extend(P2, e2 - 2, e2 >= 2 and follows(P2, e2 - 2)),
        _extend(Pt, e - 2, e >= 2 and follows(Pt, e - 2)),
        _extend(Pt2, f2 - 1, follows(Pt2, f2 - 1)),
    )


# ---- The pullback and the family ----

class _Layout(NamedTuple):
    ambient: ModuleSpace
    a: dict          # generator of R on B, {(block, power): coeff}
    c: dict          # generator of R' on D
    u: int           # block n of B
    v: int           # block n' of D


def _layout(ctx: BoxMoveContext, p: int) -> _Layout:
    ext = build_extended_poles(ctx)
    left, right = ext.R.generator_terms(), ext.R_prime.generator_terms()
    try:
        u = left.index((ctx.n, ctx.n - ctx.f))
        v = right.index((ctx.n_prime, ctx.n_prime - ctx.f_prime))
    except ValueError:
        raise InvalidContext("R or R' does not carry the generator term of its moved column") from None
    blocks = ([b for b, _ in left] + list(ext.R.free_blocks())
              + [b for b, _ in right] + list(ext.R_prime.free_blocks()))
    k = len(left) + len(ext.R.free_blocks())
    return _Layout(ModuleSpace(p, tuple(blocks)),
                   {(i, s): 1 for i, (_, s) in enumerate(left)},
                   {(k + j, s): 1 for j, (_, s) in enumerate(right)},
                   u, k + v)


def _add(p: int, *terms: dict) -> dict:
    out = {}
    for t in terms:
        for basis, coeff in t.items():
            out[basis] = (out.get(basis, 0) + coeff) % p
    return {b: c for b, c in out.items() if c}


def build_q(ctx: BoxMoveContext, p: int | None = None) -> EmbeddingInstance:
    """Q = ((r, s) in B + D) with r = (a, T^(n'-f) d_n') and s = (0, c)."""
    p = _get_prime(p)
    lay = _layout(ctx, p)
    m = lay.ambient
    r = _add(p, lay.a, {(lay.v, ctx.n_prime - ctx.f): 1})
    return EmbeddingInstance(m, (m.vector(r), m.vector(lay.c)))


def build_q_mu(ctx: BoxMoveContext, mu: int, p: int | None = None) -> EmbeddingInstance:
    """Q(mu) = ((x, y) in B + D) with
    x = (a - T^l_u b_n, T^(n'-f) d_n') and
    y = (T^(k_v+n-n') b_n, c + (mu-1) T^k_v d_n'),  l_u = n-f, k_v = n'-f'."""
    p = _get_prime(p)
    lay = _layout(ctx, p)
    m = lay.ambient
    k_v = ctx.n_prime - ctx.f_prime
    x = _add(p, lay.a, {(lay.u, ctx.n - ctx.f): -1}, {(lay.v, ctx.n_prime - ctx.f): 1})
    y = _add(p, {(lay.u, k_v + ctx.n - ctx.n_prime): 1}, lay.c, {(lay.v, k_v): mu - 1})
    return EmbeddingInstance(m, (m.vector(x), m.vector(y)))


# ---- Certificates ----

def _inclusion(small: CyclicType, big: CyclicType, moved: tuple[int, int], p: int):
    """Matrix of the map R_small -> R_big sending block `moved[0]` to
    block `moved[1]` at the bottom, all other blocks onto equal ones."""
    src, tgt = realize_pole(small, p), realize_pole(big, p)
    sb, tb = src.ambient.blocks, tgt.ambient.blocks
    targets = [moved[1] if b == moved[0] else b for b in sb]
    if sorted(targets) != sorted(tb) or len(set(tb)) != len(tb):
        raise InvalidContext(f"blocks {sb} and {tb} differ by more than the moved block")
    pairs = [(i, tb.index(want)) for i, want in enumerate(targets)]
    GF = src.ambient.field
    M = GF.Zeros((tgt.ambient.dim, src.ambient.dim))
    for i, k in pairs:
        off = tb[k] - sb[i]
        for j in range(sb[i]):
            M[tgt.ambient.index(k, j + off), src.ambient.index(i, j)] = 1
    return src, tgt, M


def _check_mono(src: EmbeddingInstance, tgt: EmbeddingInstance, M, name: str) -> Partition:
    s, t = src.ambient, tgt.ambient
    (a,), (b,) = src.vectors(), tgt.vectors()
    if not ((M @ a) == b).all():
        raise CertificateFailure(f"{name} does not send generator to generator")
    if not ((M @ s.power(1)) == (t.power(1) @ M)).all():
        raise CertificateFailure(f"{name} is not T-linear")
    if rank(M) != s.dim:
        raise CertificateFailure(f"{name} is not injective")
    return partition_of_operator(t, matrix(t.field, [M.T], t.dim))


def verify_monomorphisms(ctx: BoxMoveContext, p: int | None = None) -> tuple[Partition, Partition]:
    """The inclusions R~ -> R and R' -> R'~; returns both cokernel types."""
    p = _get_prime(p)
    ext = build_extended_poles(ctx)
    moved = (ctx.n_prime, ctx.n)
    first = _check_mono(*_inclusion(ext.R_tilde, ext.R, moved, p), "R~ -> R")
    second = _check_mono(*_inclusion(ext.R_prime, ext.R_tilde_prime, moved, p), "R' -> R'~")
    return first, second


class Certificate(NamedTuple):
    prime: int
    q: Tableau
    family: tuple[Tableau, ...]     # tableau of S + Q(mu), mu = 0..p-1

    def to_dict(self):
        return {"prime": self.prime, "q": self.q.to_dict(),
                "family": [t.to_dict() for t in self.family]}


def certify_move(ctx: BoxMoveContext, p: int | None = None, edge=None) -> Certificate:
    """Recompute every tableau of the degeneration from ranks over F_p."""
    p = _get_prime(p)
    ext = build_extended_poles(ctx)
    common = realize_decomposition(ctx.common, p)

    def fail(message, mu=None):
        return CertificateFailure(message, edge=edge, mu=mu)

    sums = (realize_pole(ext.R, p), realize_pole(ext.R_prime, p))
    if tableau_of_embedding(direct_sum(common, *sums)) != ctx.source:
        raise fail("S + R + R' does not have the source tableau")
    tilde = direct_sum(common, realize_pole(ext.R_tilde, p), realize_pole(ext.R_tilde_prime, p))
    if tableau_of_embedding(tilde) != ctx.target:
        raise fail("S + R~ + R'~ does not have the target tableau")

    expected = Partition((ctx.n - ctx.n_prime,))
    if verify_monomorphisms(ctx, p) != (expected, expected):
        raise fail(f"cokernels of the inclusions are not E{tuple(expected)}")

    q = tableau_of_embedding(build_q(ctx, p))
    if q != tableau_of_embedding(direct_sum(*sums)):
        raise fail("Q and R + R' have different tableaux")

    family = []
    for mu in range(p):
        t = tableau_of_embedding(direct_sum(common, build_q_mu(ctx, mu, p)))
        if t != (ctx.source if mu else ctx.target):
            raise fail(f"S + Q({mu}) has tableau {t}", mu=mu)
        family.append(t)
    return Certificate(p, q, tuple(family))
