"""Partial maps on LR-tableaux, jumps, the empty box property, and the
passage between (tableau, map) pairs and direct sums of poles."""
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .columns import Column
from .partition import Partition, multiset_difference
from .poles import CyclicType, HeightSequence, tableau_of_cyclic
from .tableau import Box, Tableau, tableau_union


@dataclass(frozen=True)
class PartialMap:
    """Sends every box with entry e > 1 to a box with entry e-1 in a
    strictly higher row, one-to-one."""
    tableau: Tableau
    assignment: tuple[tuple[Box, Box], ...]

    def __post_init__(self):
        pairs = tuple(sorted((tuple(a), tuple(b)) for a, b in dict(self.assignment).items()))
        object.__setattr__(self, "assignment", pairs)
        t = self.tableau
        sources = {b for b in t.boxes() if t.entry(b) > 1}
        if {a for a, _ in pairs} != sources:
            raise ValueError("a partial map is defined exactly on the boxes with entry > 1")
        if len({b for _, b in pairs}) != len(pairs):
            raise ValueError("a partial map is one-to-one")
        for a, b in pairs:
            if t.entry(b) != t.entry(a) - 1 or b[0] >= a[0]:
                raise ValueError(f"{a} -> {b} must go one entry down and strictly up")

    def __call__(self, box: Box) -> Box | None:
        return dict(self.assignment).get(tuple(box))

    def orbits(self) -> list[list[Box]]:
        """Maximal chains b_1 <- b_2 <- ... <- b_f, listed from entry 1 up."""
        forward = dict(self.assignment)
        images = set(forward.values())
        out = []
        for top in self.tableau.boxes():
            if top in images:
                continue
            chain = [top]
            while chain[-1] in forward:
                chain.append(forward[chain[-1]])
            out.append(chain[::-1])
        return out

    def to_list(self):
        return [{"from": list(a), "to": list(b)} for a, b in self.assignment]


@dataclass(frozen=True)
class PoleDecomposition:
    poles: tuple[HeightSequence, ...]
    empty: Partition = Partition()

    def __post_init__(self):
        poles = tuple(sorted(HeightSequence(h) for h in self.poles))
        if any(not h for h in poles):
            raise ValueError("empty height sequence")
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "empty", Partition(self.empty))

    def to_dict(self):
        return {"poles": [list(h) for h in self.poles], "empty": list(self.empty)}

    def __str__(self):
        terms = [f"P({h})" for h in self.poles] + [f"E({k})" for k in self.empty]
        return " + ".join(terms) or "0"


@lru_cache(maxsize=4096)
def enumerate_partial_maps(t: Tableau) -> tuple[PartialMap, ...]:
    """All partial maps, in lexicographic order of their target vectors."""
    order = {b: (t.entry(b), *b) for b in t.boxes()}
    sources = [b for b in t.boxes() if t.entry(b) > 1]
    targets = {b: sorted((c for c in t.boxes() if t.entry(c) == t.entry(b) - 1 and c[0] < b[0]),
                         key=order.get)
               for b in sources}
    found, chosen, used = [], {}, set()

    def assign(k):
        if k == len(sources):
            found.append(PartialMap(t, tuple(chosen.items())))
            return
        b = sources[k]
        for c in targets[b]:
            if c in used:
                continue
            chosen[b] = c
            used.add(c)
            assign(k + 1)
            used.discard(c)
            del chosen[b]

    assign(0)
    return tuple(found)


def jumps(g: PartialMap) -> tuple[int, ...]:
    """Rows of the entry-1 boxes and of the boxes sent more than one row up."""
    t = g.tableau
    rows = [b[0] for b in t.boxes() if t.entry(b) == 1]
    rows += [a[0] for a, b in g.assignment if b[0] < a[0] - 1]
    return tuple(sorted(rows))


def satisfies_ebp(g: PartialMap) -> bool:
    """For every row r, at least as many columns with exactly r-1 empty
    boxes as jumps in row r."""
    t = g.tableau
    empties = Counter(t.inner.height(c) for c in range(1, len(t.outer) + 1))
    return all(empties[r - 1] >= n for r, n in Counter(jumps(g)).items())


def canonical_invariant(g: PartialMap) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Multiset of (lowest entry, rows) over the orbits of g."""
    t = g.tableau
    return tuple(sorted((t.entry(orbit[0]), tuple(b[0] for b in orbit)) for orbit in g.orbits()))


def equivalent(g: PartialMap, h: PartialMap) -> bool:
    if g.tableau != h.tableau:
        raise ValueError("maps live on different tableaux")
    return canonical_invariant(g) == canonical_invariant(h)


def decomposition_of(g: PartialMap) -> PoleDecomposition:
    if not satisfies_ebp(g):
        raise ValueError("EBP required: the map lacks columns of empty boxes for its jumps")
    poles = [HeightSequence(r - 1 for r in rows) for _, rows in canonical_invariant(g)]
    consumed = [r - 1 for r in jumps(g) if r >= 2]
    return PoleDecomposition(tuple(poles), multiset_difference(g.tableau.inner, consumed))


def pole_decompositions(t: Tableau) -> list[PoleDecomposition]:
    """Distinct decompositions of the EBP maps on `t`, in map order."""
    out = []
    for g in enumerate_partial_maps(t):
        if satisfies_ebp(g) and (d := decomposition_of(g)) not in out:
            out.append(d)
    return out


def pair_from_decomposition(d: PoleDecomposition) -> tuple[Tableau, PartialMap]:
    parts = [tableau_of_cyclic(CyclicType(h)) for h in d.poles]
    parts += [Column(k).tableau for k in d.empty]
    t = tableau_union(*parts) if parts else Tableau.empty(())
    pools = defaultdict(list)
    for b in sorted(t.boxes(), key=lambda b: b[1]):
        pools[t.entry(b), b[0]].append(b)
    mapping = {}
    for h in d.poles:
        boxes = [pools[e, m + 1].pop(0) for e, m in enumerate(h, 1)]
        mapping.update(zip(boxes[1:], boxes))
    return t, PartialMap(t, tuple(mapping.items()))
