"""Partitions as lists of column heights, plus the orders and skew shapes
built on them. A box is (row, col), 1-based, rows counted from the top;
column c of a partition holds rows 1..p[c-1]."""
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate, chain, zip_longest


class Partition(tuple):
    """Weakly decreasing positive integers. Trailing zeros are dropped, so
    structural equality is partition equality."""

    def __new__(cls, parts=()):
        if isinstance(parts, cls):
            return parts
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def height(self, col: int) -> int:
        """Height of column `col` (1-based); 0 past the end."""
        return self[col - 1] if 0 < col <= len(self) else 0

    def __repr__(self):
        return f"Partition({tuple(self)})"


def conjugate(p) -> Partition:
    p = Partition(p)
    top = p[0] if p else 0
    return Partition(sum(1 for x in p if x >= r) for r in range(1, top + 1))


def dominance_leq(a, b) -> bool:
    """Prefix-sum order. Partitions of different weight are never comparable."""
    a, b = Partition(a), Partition(b)
    if a.weight != b.weight:
        return False
    pairs = zip_longest(accumulate(a), accumulate(b), fillvalue=a.weight)
    return all(x <= y for x, y in pairs)


def multiset_union(*parts) -> Partition:
    return Partition(sorted(chain.from_iterable(Partition(p) for p in parts), reverse=True))


def multiset_difference(a, b) -> Partition:
    """Parts of `a` with one copy of each part of `b` removed."""
    left = Counter(Partition(a))
    b = sorted((int(x) for x in b), reverse=True)
    left.subtract(b)
    if any(n < 0 for n in left.values()):
        raise ValueError(f"{tuple(b)} is not a sub-multiset of {tuple(Partition(a))}")
    return Partition(sorted(left.elements(), reverse=True))


def contains(outer, inner) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def boxes(self) -> list[tuple[int, int]]:
        return [(row, col)
                for col in range(1, len(self.outer) + 1)
                for row in range(self.inner.height(col) + 1, self.outer.height(col) + 1)]

    def to_dict(self):
        return {"outer": list(self.outer), "inner": list(self.inner)}


def is_horizontal_strip(s: SkewShape) -> bool:
    """At most one box in every column."""
    return all(s.outer.height(c) - s.inner.height(c) <= 1 for c in range(1, len(s.outer) + 1))


def is_vertical_strip(s: SkewShape) -> bool:
    """At most one box in every row."""
    return is_horizontal_strip(SkewShape(conjugate(s.outer), conjugate(s.inner)))


def is_rook_strip(s: SkewShape) -> bool:
    return is_horizontal_strip(s) and is_vertical_strip(s)


# ---- Generation ----

def partitions(n: int, largest: int | None = None):
    """All partitions of n, largest part first, in reverse lexicographic order."""
    largest = n if largest is None else min(n, largest)
    if n == 0:
        yield Partition()
        return
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first, *rest))


def partitions_up_to(n: int):
    for k in range(n + 1):
        yield from partitions(k)


def sub_partitions(p):
    """Every partition contained in `p`, larger weight first within each length."""
    p = Partition(p)

    def fill(col, cap):
        if col > len(p):
            yield ()
            return
        for h in range(min(cap, p.height(col)), -1, -1):
            if h == 0:
                yield ()
                continue
            for rest in fill(col + 1, h):
                yield (h, *rest)

    for parts in fill(1, p.height(1)):
        yield Partition(parts)


def parse_partition(text: str) -> Partition:
    """'5,4,3' -> (5, 4, 3); the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(x) for x in text.split(","))
