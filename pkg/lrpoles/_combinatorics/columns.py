"""Column tableaux C(e,f)_n and decompositions of a tableau into columns.

A union of columns is determined by its cells (entry, row) and by the
multiset of empty-box counts of its columns, so a decomposition is a cut of
the entry boxes into strings x@r, x+1@r+1, ..., f@r+f-x plus empty columns
making up the rest of the inner shape.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .partition import Partition, multiset_difference
from .tableau import Tableau, enumerate_lr, tableau_union


@dataclass(frozen=True, order=True)
class Column:
    """One column of `height` boxes whose lowest boxes carry first..last."""
    height: int
    first: int = 1
    last: int = 0

    def __post_init__(self):
        if self.height < 1 or self.first < 1:
            raise ValueError(f"invalid column {self}")
        if self.last < self.first and (self.first, self.last) != (1, 0):
            raise ValueError(f"invalid column {self}")
        if self.height < self.last - self.first + 1:
            raise ValueError(f"invalid column {self}: height below {self.last - self.first + 1}")

    @property
    def is_empty(self) -> bool:
        return self.last < self.first

    @property
    def empty_boxes(self) -> int:
        return self.height - (self.last - self.first + 1)

    @property
    def tableau(self) -> Tableau:
        return column_tableau(self.first, self.last, self.height)

    def __str__(self):
        return f"C({self.first},{self.last})_{self.height}"


def column_tableau(e: int, f: int, n: int) -> Tableau:
    """Chain [(n-f+e-1)] * e + [(n-f+e), ..., (n)]."""
    if e < 1 or n < 1 or f < e - 1 or (f == e - 1 and e != 1) or n < f - e + 1:
        raise ValueError(f"invalid column C({e},{f})_{n}")
    base = n - f + e - 1
    return Tableau(tuple((base,) for _ in range(e)) + tuple((base + k,) for k in range(1, f - e + 2)))


def _strings(t: Tableau):
    """Every cut of the entry boxes into strings, as sorted tuples of
    (first, last, first_row)."""
    cells = t.cells()
    top = max((e for e, _ in cells), default=0)

    def level(e, open_, closed):
        # open_ holds (first, first_row) of strings whose last box has entry e-1
        if e > top:
            yield tuple(sorted(closed + [(x, e - 1, row) for x, row in open_]))
            return
        per_cell = []
        for r in sorted(r for x, r in cells if x == e):
            pool = sorted(s for s in open_ if s[1] + e - 1 - s[0] == r - 1)
            picks = {p for k in range(min(cells[e, r], len(pool)) + 1)
                     for p in combinations(pool, k)}
            per_cell.append([(r, p) for p in sorted(picks)])
        for choice in product(*per_cell):
            used = Counter(s for _, p in choice for s in p)
            ended = [(x, e - 1, row) for x, row in (Counter(open_) - used).elements()]
            nxt = [s for _, p in choice for s in p]
            nxt += [(e, r) for r, p in choice for _ in range(cells[e, r] - len(p))]
            yield from level(e + 1, nxt, closed + ended)

    yield from level(1, [], [])


@lru_cache(maxsize=4096)
def column_decompositions(t: Tableau) -> tuple[tuple[Column, ...], ...]:
    """Every multiset of columns, empty ones included, whose union is `t`."""
    found = set()
    for strings in _strings(t):
        cols = [Column(first_row + last - first, first, last) for first, last, first_row in strings]
        needed = Counter(c.empty_boxes for c in cols if c.empty_boxes)
        if needed - Counter(t.inner):
            continue
        rest = multiset_difference(t.inner, needed.elements())
        found.add(tuple(sorted(cols + [Column(k) for k in rest])))
    return tuple(sorted(found))


def union_of(columns) -> Tableau:
    return tableau_union(*(c.tableau for c in columns)) if columns else Tableau.empty(())


def is_union_of_columns(t: Tableau) -> tuple[Column, ...] | None:
    """The columns read off the first map on `t` with the empty box
    property, or None when there is no such map."""
    from .partial_map import decomposition_of, enumerate_partial_maps, satisfies_ebp
    from .poles import pole_columns

    for g in enumerate_partial_maps(t):
        if satisfies_ebp(g):
            d = decomposition_of(g)
            cols = [c for h in d.poles for c in pole_columns(h)]
            return tuple(sorted(cols + [Column(k) for k in d.empty]))
    return None


def sums_of_cyclics_exist(alpha, beta, gamma) -> bool:
    """Whether some direct sum of cyclic embeddings has this shape and content."""
    return any(is_union_of_columns(t) is not None
               for t in enumerate_lr(Partition(alpha), Partition(beta), Partition(gamma)))
