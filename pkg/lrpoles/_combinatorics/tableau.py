"""LR-tableaux as chains of partitions.

A tableau is the chain gamma(0) <= gamma(1) <= ... <= gamma(r) of column
heights; the boxes of gamma(e) \\ gamma(e-1) carry the entry e. The chain is
the value; the entry grid, content and reading word are views on it.
Column tableaux C(e,f)_n with e > 1 are legal chains but not LR, so
`Tableau` only enforces nesting and `validate_lr` certifies the rest.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .partition import Partition, SkewShape, conjugate, contains, multiset_union

Box = tuple[int, int]


class Violation(str, Enum):
    NESTED = "NESTED_VIOLATION"
    ROW = "ROW_VIOLATION"
    COLUMN = "COLUMN_VIOLATION"
    LATTICE = "LATTICE_VIOLATION"


class LRViolation(ValueError):
    def __init__(self, kind: Violation, box: Box | None, message: str):
        super().__init__(message)
        self.kind = kind
        self.box = box

    def to_dict(self):
        return {"violation": self.kind.value, "box": list(self.box) if self.box else None,
                "message": str(self)}


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    chain: tuple[Partition, ...]

    def __post_init__(self):
        levels = []
        for e, level in enumerate(self.chain):
            try:
                levels.append(Partition(level))
            except ValueError:
                raise LRViolation(Violation.NESTED, None,
                                  f"level {e} is not a partition: {tuple(level)}") from None
        if not levels:
            raise ValueError("a tableau needs at least one level")
        for e in range(1, len(levels)):
            low, high = levels[e - 1], levels[e]
            for c in range(1, len(low) + 1):
                if low.height(c) > high.height(c):
                    raise LRViolation(Violation.NESTED, (high.height(c) + 1, c),
                                      f"level {e - 1} is not contained in level {e} at column {c}")
        while len(levels) > 1 and levels[-1] == levels[-2]:
            levels.pop()
        object.__setattr__(self, "chain", tuple(levels))

    @classmethod
    def empty(cls, outer) -> "Tableau":
        return cls((Partition(outer),))

    @classmethod
    def from_entries(cls, inner, entries: dict) -> "Tableau":
        """Chain of the tableau with inner shape `inner` and entry boxes
        `{(row, col): entry}`."""
        inner = Partition(inner)
        r = max(entries.values(), default=0)
        width = max([len(inner), *(c for _, c in entries)])
        levels = []
        for e in range(r + 1):
            levels.append([inner.height(c) + sum(1 for (_, col), x in entries.items()
                                                  if col == c and x <= e)
                           for c in range(1, width + 1)])
        return cls(tuple(levels))

    # ---- Views ----

    @property
    def inner(self) -> Partition:
        return self.chain[0]

    @property
    def outer(self) -> Partition:
        return self.chain[-1]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def levels(self) -> int:
        """Loewy length r of the submodule."""
        return len(self.chain) - 1

    def level(self, e: int) -> Partition:
        return self.chain[min(e, self.levels)]

    @property
    def content_conjugate(self) -> tuple[int, ...]:
        """alpha'_e = |gamma(e)| - |gamma(e-1)|, e = 1..r."""
        return tuple(self.chain[e].weight - self.chain[e - 1].weight for e in range(1, len(self.chain)))

    @property
    def content(self) -> Partition:
        return conjugate(Partition(self.content_conjugate))

    def column(self, col: int) -> list[tuple[int, int]]:
        """(row, entry) for the entry boxes of column `col`, top to bottom."""
        out = []
        for e in range(1, len(self.chain)):
            for row in range(self.chain[e - 1].height(col) + 1, self.chain[e].height(col) + 1):
                out.append((row, e))
        return out

    def boxes(self) -> list[Box]:
        """Entry boxes ordered by (entry, row, col)."""
        found = [(e, row, c) for c in range(1, len(self.outer) + 1) for row, e in self.column(c)]
        return [(row, c) for _, row, c in sorted(found)]

    def entry(self, box: Box) -> int | None:
        row, col = box
        if not 1 <= row <= self.outer.height(col):
            raise ValueError(f"box {box} is outside the diagram")
        for e, level in enumerate(self.chain):
            if level.height(col) >= row:
                return e or None

    def cells(self) -> Counter:
        """Number of boxes per (entry, row)."""
        return Counter((self.entry(b), b[0]) for b in self.boxes())

    def grid(self) -> list[list[int]]:
        """Picture rows, top to bottom; 0 marks an empty box."""
        rows = conjugate(self.outer)
        return [[self.entry((r, c)) or 0 for c in range(1, rows[r - 1] + 1)]
                for r in range(1, len(rows) + 1)]

    def reading_word(self) -> tuple[int, ...]:
        """Entries row by row from the top, right to left within a row."""
        return tuple(x for row in self.grid() for x in reversed(row) if x)

    def to_dict(self):
        return {"chain": [list(level) for level in self.chain]}

    def __str__(self):
        return "/".join("".join(str(x) if x else "." for x in row) for row in self.grid())


# ---- Validation ----

def validate_lr(candidate) -> Tableau:
    """Certify the LR conditions; raise the first violation with a witness box."""
    t = candidate if isinstance(candidate, Tableau) else Tableau(tuple(candidate))
    for e in range(1, len(t.chain)):
        low, high = t.chain[e - 1], t.chain[e]
        for c in range(1, len(high) + 1):
            if high.height(c) - low.height(c) >= 2:
                raise LRViolation(Violation.COLUMN, (low.height(c) + 2, c),
                                  f"entry {e} occurs twice in column {c}")
    counts = Counter()
    for c in range(len(t.outer), 0, -1):
        for row, e in t.column(c):
            counts[e] += 1
            if e > 1 and counts[e] > counts[e - 1]:
                raise LRViolation(Violation.LATTICE, (row, c),
                                  f"more entries {e} than {e - 1} from column {c} rightwards")
    return t


def validate_grid(rows) -> Tableau:
    """Certify an entry grid (picture rows, 0 = empty) and return its chain."""
    rows = [[int(x) for x in row] for row in rows]
    if not rows:
        return Tableau.empty(())
    if any(len(a) < len(b) for a, b in zip(rows, rows[1:])) or any(not row for row in rows):
        raise ValueError("grid rows must be non-empty with weakly decreasing lengths")
    for r, row in enumerate(rows, 1):
        for c in range(1, len(row)):
            if row[c] < row[c - 1]:
                raise LRViolation(Violation.ROW, (r, c + 1), f"row {r} decreases at column {c + 1}")
    for r in range(1, len(rows)):
        for c, below in enumerate(rows[r], 1):
            above = rows[r - 1][c - 1]
            if (below == 0 and above != 0) or (below != 0 and below <= above):
                raise LRViolation(Violation.COLUMN, (r + 1, c),
                                  f"column {c} does not increase strictly at row {r + 1}")
    inner = Partition(sum(1 for row in rows if len(row) >= c and row[c - 1] == 0)
                      for c in range(1, len(rows[0]) + 1))
    entries = {(r, c): x for r, row in enumerate(rows, 1) for c, x in enumerate(row, 1) if x}
    return validate_lr(Tableau.from_entries(inner, entries))


def tableau_union(*tableaux: Tableau) -> Tableau:
    """Row-wise union: levelwise multiset union with tails padded."""
    depth = max((t.levels for t in tableaux), default=0)
    chain = [multiset_union(*(t.level(e) for t in tableaux)) for e in range(depth + 1)]
    try:
        return validate_lr(chain)
    except LRViolation as e:
        raise LRViolation(e.kind, e.box, f"union is not LR: {e}") from None


# ---- Enumeration ----

def enumerate_lr(alpha, beta, gamma) -> list[Tableau]:
    """All LR-tableaux of shape beta \\ gamma and content alpha, sorted by
    reading word."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not contains(beta, gamma) or beta.weight != alpha.weight + gamma.weight:
        raise ShapeMismatch(f"no shape {tuple(beta)} \\ {tuple(gamma)} with content {tuple(alpha)}")
    want = conjugate(alpha)
    cells = [(row, c) for c in range(len(beta), 0, -1)
             for row in range(gamma.height(c) + 1, beta.height(c) + 1)]
    filling, counts, found = {}, [0] * (len(want) + 2), []

    def place(k):
        if k == len(cells):
            found.append(Tableau.from_entries(gamma, filling))
            return
        row, c = cells[k]
        low = filling.get((row - 1, c), 0) + 1
        high = filling.get((row, c + 1), len(want))
        for e in range(low, high + 1):
            if counts[e] == want[e - 1] or (e > 1 and counts[e] >= counts[e - 1]):
                continue
            filling[row, c] = e
            counts[e] += 1
            place(k + 1)
            counts[e] -= 1
            del filling[row, c]

    place(0)
    return sorted(found, key=Tableau.reading_word)
