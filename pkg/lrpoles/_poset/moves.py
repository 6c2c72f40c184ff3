"""Increasing box moves between unions of columns, their pole contexts,
and the dominance order on tableaux of one shape."""
from collections import Counter
from dataclasses import dataclass, replace

from .._combinatorics import (Column, HeightSequence, PoleDecomposition, ShapeMismatch, Tableau,
                              column_decompositions, conjugate, dominance_leq, multiset_difference,
                              multiset_union, pole_decompositions)
from .._engine import BoxMoveContext, InvalidContext, build_extended_poles
from .._engine.family import _carries, _shift


@dataclass(frozen=True)
class BoxMove:
    """G = common + C(e,f)_n + C(e',f')_n'  ->  H = common + C(e',f')_n + C(e,f)_n'."""
    source: Tableau
    target: Tableau
    n: int
    n_prime: int
    e: int
    f: int
    e_prime: int
    f_prime: int
    common: tuple[Column, ...] = ()

    @property
    def data(self) -> tuple[int, ...]:
        return self.n, self.n_prime, self.e, self.f, self.e_prime, self.f_prime

    @property
    def source_cols(self) -> tuple[Column, Column]:
        return Column(self.n, self.e, self.f), Column(self.n_prime, self.e_prime, self.f_prime)

    @property
    def target_cols(self) -> tuple[Column, Column]:
        return Column(self.n, self.e_prime, self.f_prime), Column(self.n_prime, self.e, self.f)

    def to_dict(self):
        return {"data": list(self.data),
                "source_cols": [str(c) for c in self.source_cols],
                "target_cols": [str(c) for c in self.target_cols],
                "common": [str(c) for c in self.common]}


def _same_shape(g: Tableau, h: Tableau):
    if g.outer != h.outer or g.inner != h.inner or g.content != h.content:
        raise ShapeMismatch(f"{g} and {h} differ in shape or content")


def _as_move(g: Tableau, h: Tableau, out: Counter, into: Counter) -> BoxMove | None:
    if sum(out.values()) != 2 or sum(into.values()) != 2:
        return None
    a, b = sorted(out.elements(), key=lambda c: (c.first, -c.height))
    if not (a.height > b.height and a.first < b.first and a.last < b.last
            and a.last - a.first == b.last - b.first):
        return None
    if sorted(into.elements()) != sorted([Column(a.height, b.first, b.last),
                                          Column(b.height, a.first, a.last)]):
        return None
    return BoxMove(g, h, a.height, b.height, a.first, a.last, b.first, b.last)


def box_move_witnesses(g: Tableau, h: Tableau) -> list[BoxMove]:
    """Every pair of column decompositions exchanging exactly two columns
    the increasing way, in canonical order."""
    found = []
    for dg in column_decompositions(g):
        cg = Counter(dg)
        for dh in column_decompositions(h):
            ch = Counter(dh)
            move = _as_move(g, h, cg - ch, ch - cg)
            if move is not None:
                move = replace(move, common=tuple(sorted((cg & ch).elements())))
                if move not in found:
                    found.append(move)
    return found


def is_increasing_box_move(g: Tableau, h: Tableau) -> BoxMove | None:
    _same_shape(g, h)
    if g == h:
        return None
    return next(iter(box_move_witnesses(g, h)), None)


def box_move_successors(g: Tableau, universe) -> list[BoxMove]:
    out = []
    for h in universe:
        if (move := is_increasing_box_move(g, h)) is not None:
            out.append(move)
    return out


def dominance_leq_tableaux(g: Tableau, h: Tableau) -> bool:
    """Level by level on the row lengths of the chains."""
    _same_shape(g, h)
    depth = max(g.levels, h.levels)
    return all(dominance_leq(conjugate(g.level(e)), conjugate(h.level(e))) for e in range(depth + 1))


# ---- Pole contexts ----

def _contexts(move: BoxMove, sources, targets):
    n, n2, e, f, e2, f2 = move.data
    d = n - n2
    for D in sources:
        poles = list(D.poles)
        for i, P in enumerate(poles):
            if not _carries(P, e, f, n):
                continue
            for j, P2 in enumerate(poles):
                if j == i or not _carries(P2, e2, f2, n2):
                    continue
                rest = tuple(h for k, h in enumerate(poles) if k not in (i, j))
                try:
                    ctx = BoxMoveContext(move.source, move.target, *move.data, P, P2,
                                         HeightSequence(_shift(P, e, f, -d)),
                                         HeightSequence(_shift(P2, e2, f2, d)))
                    ext = build_extended_poles(ctx)
                    empty = multiset_difference(D.empty, ext.source_padding)
                except ValueError:
                    continue
                tilde = PoleDecomposition(rest + (ctx.pole_tilde, ctx.pole_tilde_prime),
                                          multiset_union(empty, ext.target_padding))
                if tilde in targets:
                    yield replace(ctx, common=PoleDecomposition(rest, empty))


def box_move_context(move: BoxMove) -> BoxMoveContext:
    """Poles P, P' of the source and P~, P'~ of the target around the moved
    columns, with a common summand shared by both decompositions."""
    sources, targets = pole_decompositions(move.source), pole_decompositions(move.target)
    tried = [move] + [w for w in box_move_witnesses(move.source, move.target) if w.data != move.data]
    seen = set()
    for w in tried:
        if w.data in seen:
            continue
        seen.add(w.data)
        ctx = next(_contexts(w, sources, targets), None)
        if ctx is not None:
            return ctx
    raise InvalidContext(f"no simultaneous pole decomposition for {move.source} -> {move.target}")
