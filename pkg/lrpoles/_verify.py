"""Exhaustive desk-scale sweeps cross-checking the combinatorics against the
operator engine. Each suite reports one Outcome per property."""
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import NamedTuple

from ._combinatorics import (Column, CyclicType, HeightSequence, Partition, PoleDecomposition,
                             SkewShape, Tableau, canonical_invariant, column_decompositions,
                             count_endo_submodules, cyclic_of_tableau, decomposition_of,
                             enumerate_lr, enumerate_partial_maps, enumerate_single_entry_tableaux,
                             extended_pole_split, gaps, is_horizontal_strip, is_rook_strip,
                             is_union_of_columns, multiset_difference, pair_from_decomposition,
                             partitions, partitions_up_to, pole_data, satisfies_ebp,
                             sub_partitions, tableau_of_cyclic, tableau_union, union_of, validate_lr)
from ._engine import (BoxMoveContext, CertificateFailure, InvalidContext, build_extended_poles,
                      ModuleSpace, build_q, build_q_mu, certify_move, direct_sum, endo_orbit,
                      endo_submodule, height_sequence_of, realize_decomposition, realize_pole, tableau_of_embedding)
from ._engine.field import key
from ._poset import (EdgeKind, box_move_context, build_boundary_poset, dominance_leq_tableaux,
                     is_increasing_box_move)
from .logs import log

INTRO_SHAPE = ((3, 2), (5, 4, 3, 2, 1), (4, 3, 2, 1))
FIELD_PRIMES = (2, 3, 5)


class Outcome(NamedTuple):
    suite: str
    property: str
    passed: bool
    checked: int
    counterexample: dict | None = None

    def to_dict(self):
        out = {"suite": self.suite, "property": self.property, "passed": self.passed,
               "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


SUITES = {}


def suite(name: str, max_size: int):
    def register(fn):
        SUITES[name] = (fn, max_size)
        return fn
    return register


def run(name: str, p: int, max_size: int | None = None, workers: int = 8) -> list[Outcome]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, default = SUITES[name]
    size = default if max_size is None else max_size
    log("info", event="suite", suite=name, prime=p, max_size=size)
    return fn(name, size, p, workers)


def _sweep(name: str, cases, check, workers: int) -> list[Outcome]:
    cases = list(cases)
    with ThreadPoolExecutor(workers) as pool:
        results = list(pool.map(check, cases))
    checked, failures = {}, {}
    for result in results:
        for prop, bad in result.items():
            checked[prop] = checked.get(prop, 0) + 1
            if bad is not None:
                log("error", suite=name, property=prop, counterexample=bad)
                failures.setdefault(prop, bad)
    log("debug", suite=name, cases=len(cases))
    if not checked:
        return [Outcome(name, "cases", True, 0)]
    return [Outcome(name, prop, prop not in failures, n, failures.get(prop))
            for prop, n in checked.items()]


def _fail(ok: bool, **details):
    return None if ok else details


# ---- Universes ----

def _shapes(max_size: int):
    """Every (alpha, beta, gamma) with |beta| <= max_size."""
    for beta in partitions_up_to(max_size):
        for gamma in sub_partitions(beta):
            for alpha in partitions(beta.weight - gamma.weight):
                yield alpha, beta, gamma


def _tableaux(max_size: int) -> list[Tableau]:
    return [t for shape in _shapes(max_size) for t in enumerate_lr(*shape)]


def _pole_sequences(max_size: int):
    for k in range(1, max_size + 1):
        for c in combinations(range(max_size), k):
            yield HeightSequence(c)


def _moves(max_size: int, workers: int) -> list:
    shapes = list(_shapes(max_size))
    if Partition(INTRO_SHAPE[1]).weight > max_size:
        shapes.append(tuple(Partition(x) for x in INTRO_SHAPE))

    def moves_of(shape):
        tabs = enumerate_lr(*shape)
        return [m for g in tabs for h in tabs
                if g != h and (m := is_increasing_box_move(g, h)) is not None]

    with ThreadPoolExecutor(workers) as pool:
        return [m for found in pool.map(moves_of, shapes) for m in found]


def _move_case(move) -> dict:
    return {"source": move.source.to_dict(), "target": move.target.to_dict(),
            "data": list(move.data)}


# ---- Pole calculus ----

@suite("pole-roundtrip", 8)
def _pole_roundtrip(name, size, p, workers):
    def check(h):
        e = realize_pole(CyclicType(h), p)
        got = height_sequence_of(e.ambient, e.vectors()[0])
        ambient = list(e.ambient.beta)
        missing = [h[i] + 1 for i in gaps(h) if h[i] + 1 not in ambient]
        return {"pole bijection": _fail(got == h, pole=list(h), got=list(got)),
                "gap blocks": _fail(not missing, pole=list(h), missing=missing)}
    return _sweep(name, _pole_sequences(size), check, workers)


@suite("pole-tableau", 8)
def _pole_tableau(name, size, p, workers):
    def check(h):
        c = CyclicType(h)
        want = tableau_of_cyclic(c)
        got = tableau_of_embedding(realize_pole(c, p))
        out = {"pole tableau": _fail(got == want, pole=list(h), got=got.to_dict(), want=want.to_dict()),
               "cyclic round trip": _fail(cyclic_of_tableau(want) == c, pole=list(h))}
        for u in range(len(h)):
            if u in gaps(h):
                continue
            split = extended_pole_split(h, u)
            union = tableau_union(want, Column(h[u] + 1).tableau)
            ok = tableau_of_cyclic(split) == union == tableau_of_embedding(realize_pole(split, p))
            out["extended pole split"] = _fail(ok, pole=list(h), nongap=u)
        return out
    return _sweep(name, _pole_sequences(size), check, workers)


@suite("endo-count", 8)
def _endo_count(name, size, p, workers):
    def check(beta):
        m = ModuleSpace(p, tuple(beta))
        GF = m.field
        orbits, mismatch = set(), None
        for coords in product(range(p), repeat=m.dim):
            v = GF(list(coords)) if coords else m.zero()
            orbit = key(endo_orbit(m, v))
            orbits.add(orbit)
            if mismatch is None and v.any() and orbit != key(endo_submodule(m, v)):
                mismatch = list(coords)
        formula = count_endo_submodules(beta)
        single = len(enumerate_single_entry_tableaux(beta))
        return {"endo count": _fail(formula == single == len(orbits), beta=list(beta),
                                    formula=formula, tableaux=single, orbits=len(orbits)),
                "endo formula": _fail(mismatch is None, beta=list(beta), vector=mismatch)}
    return _sweep(name, partitions_up_to(size), check, workers)


# ---- Partial maps and columns ----

@lru_cache(maxsize=None)
def _sums_of_poles(beta: Partition, boxes: int) -> tuple[PoleDecomposition, ...]:
    """Every multiset of poles with `boxes` entries in total whose ambients
    fit into beta, the leftover blocks empty."""
    top = beta[0] if beta else 0
    candidates = [h for k in range(1, boxes + 1) for h in map(HeightSequence, combinations(range(top), k))]
    found = []

    def pick(start, left, rest, chosen):
        if left == 0:
            found.append(PoleDecomposition(tuple(chosen), rest))
            return
        for k in range(start, len(candidates)):
            h = candidates[k]
            if len(h) > left:
                continue
            try:
                smaller = multiset_difference(rest, pole_data(h).beta)
            except ValueError:
                continue
            pick(k, left - len(h), smaller, chosen + [h])

    pick(0, boxes, beta, [])
    return tuple(found)


def _realizes(d: PoleDecomposition, t: Tableau) -> bool:
    try:
        return pair_from_decomposition(d)[0] == t
    except ValueError:
        return False


@suite("classification", 8)
def _classification(name, size, p, workers):
    def check(t):
        maps = enumerate_partial_maps(t)
        ebp = [g for g in maps if satisfies_ebp(g)]
        bad_trip = None
        for g in ebp:
            t2, g2 = pair_from_decomposition(decomposition_of(g))
            if t2 != t or canonical_invariant(g2) != canonical_invariant(g):
                bad_trip = bad_trip or {"tableau": t.to_dict(), "map": g.to_list()}
        classes = {canonical_invariant(g) for g in ebp}
        sums = [d for d in _sums_of_poles(t.outer, len(t.boxes())) if _realizes(d, t)]
        flags = defaultdict(set)
        for g in maps:
            flags[canonical_invariant(g)].add(satisfies_ebp(g))
        return {"classification round trip": bad_trip,
                "class count": _fail(len(classes) == len(sums), tableau=t.to_dict(),
                                     classes=len(classes), sums=[str(d) for d in sums]),
                "ebp invariance": _fail(all(len(f) == 1 for f in flags.values()), tableau=t.to_dict())}
    return _sweep(name, _tableaux(size), check, workers)


@suite("union-columns", 8)
def _union_columns(name, size, p, workers):
    def check(t):
        cols = is_union_of_columns(t)
        has_ebp = any(satisfies_ebp(g) for g in enumerate_partial_maps(t))
        decs = column_decompositions(t)
        out = {"union iff ebp": _fail((cols is not None) == has_ebp == bool(decs), tableau=t.to_dict()),
               "witness union": _fail(cols is None or (union_of(cols) == t and cols in decs),
                                      tableau=t.to_dict(), columns=[str(c) for c in cols or ()])}
        if is_horizontal_strip(t.shape):
            out["horizontal strips"] = _fail(cols is not None, tableau=t.to_dict())
        return out
    return _sweep(name, _tableaux(size), check, workers)


@suite("invariant-soundness", 6)
def _invariant_soundness(name, size, p, workers):
    def check(t):
        cells = defaultdict(list)
        for b in t.boxes():
            cells[t.entry(b), b[0]].append(b)
        groups = list(cells.values())
        relabelings = [{b: c for group, perm in zip(groups, perms) for b, c in zip(group, perm)}
                       for perms in product(*(permutations(g) for g in groups))]

        def conjugates(g):
            out = set()
            for pi in relabelings:
                back = {c: b for b, c in pi.items()}
                out.add(frozenset((b, back[g(pi[b])]) for b, _ in g.assignment))
            return out

        maps = enumerate_partial_maps(t)
        orbit = {g: conjugates(g) for g in maps}
        bad = next(((g, h) for g in maps for h in maps
                    if (frozenset(h.assignment) in orbit[g]) != (canonical_invariant(g) == canonical_invariant(h))),
                   None)
        return {"invariant soundness": _fail(bad is None, tableau=t.to_dict(),
                                             maps=[m.to_list() for m in bad or ()])}
    return _sweep(name, _tableaux(size), check, workers)


# ---- Box moves and the family Q(mu) ----

def _context(move, out: dict) -> BoxMoveContext | None:
    try:
        ctx = box_move_context(move)
    except InvalidContext as e:
        out["simultaneous decomposition"] = {**_move_case(move), "reason": str(e)}
        return None
    out["simultaneous decomposition"] = None
    return ctx


@suite("same-tableau", 12)
def _same_tableau(name, size, p, workers):
    def check(move):
        out = {"box implies dominance": _fail(dominance_leq_tableaux(move.source, move.target),
                                              **_move_case(move))}
        ctx = _context(move, out)
        if ctx is None:
            return out
        ext = build_extended_poles(ctx)
        common = realize_decomposition(ctx.common, p)
        r, r2 = realize_pole(ext.R, p), realize_pole(ext.R_prime, p)
        t, t2 = realize_pole(ext.R_tilde, p), realize_pole(ext.R_tilde_prime, p)
        out["source summands"] = _fail(tableau_of_embedding(direct_sum(common, r, r2)) == move.source,
                                       **_move_case(move))
        out["target summands"] = _fail(tableau_of_embedding(direct_sum(common, t, t2)) == move.target,
                                       **_move_case(move))
        q = tableau_of_embedding(build_q(ctx, p))
        out["same tableau"] = _fail(q == tableau_of_embedding(direct_sum(r, r2)),
                                    **_move_case(move), q=q.to_dict())
        return out
    return _sweep(name, _moves(size, workers), check, workers)


def _worked_example(p: int) -> dict | None:
    """Q(mu) for the move between the second and third tableaux of the
    five-tableau family (columns C(1,1)_3, C(2,2)_2)."""
    g = validate_lr([(4, 3, 2, 1), (4, 3, 3, 1, 1), (5, 3, 3, 2, 1), (5, 4, 3, 2, 1)])
    h = validate_lr([(4, 3, 2, 1), (4, 3, 2, 2, 1), (5, 3, 3, 2, 1), (5, 4, 3, 2, 1)])
    ctx = BoxMoveContext(g, h, 3, 2, 1, 1, 2, 2, (2, 4), (0, 1, 3), (1, 4), (0, 2, 3))
    for mu in range(p):
        q = build_q_mu(ctx, mu, p)
        m = q.ambient
        x = m.vector({(0, 3): 1, (3, 1): 1})
        y = m.vector({(1, 1): 1, (3, 0): mu, (2, 1): 1, (4, 0): 1})
        got = q.vectors()
        if m.blocks != (5, 3, 4, 2, 1) or not ((got[0] == x).all() and (got[1] == y).all()):
            return {"mu": mu, "blocks": list(m.blocks), "generators": [list(g) for g in q.generators]}
    try:
        certify_move(ctx, p)
    except CertificateFailure as e:
        return {"mu": e.mu, "reason": str(e)}
    return None


@suite("box-family", 12)
def _box_family(name, size, p, workers):
    def check(move):
        out = {}
        ctx = _context(move, out)
        if ctx is None:
            return out
        try:
            certify_move(ctx, p)
            out["degeneration"] = None
        except CertificateFailure as e:
            out["degeneration"] = {**_move_case(move), "mu": e.mu, "reason": str(e)}
        return out
    outcomes = _sweep(name, _moves(size, workers), check, workers)
    bad = _worked_example(p)
    return outcomes + [Outcome(name, "worked example", bad is None, 1, bad)]


@suite("field-stability", 12)
def _field_stability(name, size, p, workers):
    primes = tuple(sorted({*FIELD_PRIMES, p}))

    def outcome(ctx, q):
        common = realize_decomposition(ctx.common, q)
        return (tableau_of_embedding(build_q(ctx, q)),
                tuple(tableau_of_embedding(direct_sum(common, build_q_mu(ctx, mu, q))) for mu in (0, 1)))

    def check(move):
        out = {}
        ctx = _context(move, out)
        if ctx is None:
            return out
        seen = {q: outcome(ctx, q) for q in primes}
        out["field stability"] = _fail(len(set(seen.values())) == 1, **_move_case(move),
                                       primes=list(primes))
        return out
    return _sweep(name, _moves(size, workers), check, workers)


@suite("rook-strip", 8)
def _rook_strip(name, size, p, workers):
    shapes = [s for s in _shapes(size) if is_rook_strip(SkewShape(s[1], s[2]))]

    def check(shape):
        poset = build_boundary_poset(*shape, workers=1)
        box = {(e.source, e.target) for e in poset.edges if e.kind is EdgeKind.BOX_MOVE}
        dominance = set(poset.dominance())
        closure = set(poset.box_closure().edges)
        case = {"shape": [list(x) for x in shape]}
        return {"box implies dominance": _fail(box <= dominance, **case),
                "closure equals dominance": _fail(closure == dominance, **case)}
    return _sweep(name, shapes, check, workers)
