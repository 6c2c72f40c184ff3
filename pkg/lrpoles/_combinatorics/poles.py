"""Height sequences, poles P((m_i)) and extended poles P((m_i) v m_u).

A pole with heights m_0 < m_1 < ... lives in N_beta with one Jordan block
per gap; its generator is sum_j T^shift_j b_(beta_j). An extended pole keeps
one non-gap in the generator and is isomorphic to P((m_i)) + E_(m_u + 1).
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

from .columns import Column
from .partition import Partition, multiset_difference, multiset_union, sub_partitions
from .tableau import Tableau, enumerate_lr, tableau_union


class HeightSequence(tuple):
    """Finite part of a height sequence; () is the zero submodule."""

    def __new__(cls, heights=()):
        if isinstance(heights, cls):
            return heights
        heights = tuple(int(m) for m in heights)
        if any(m < 0 for m in heights) or any(a >= b for a, b in zip(heights, heights[1:])):
            raise ValueError(f"not a strictly increasing sequence in N_0: {heights}")
        return super().__new__(cls, heights)

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def gaps(h) -> tuple[int, ...]:
    """Indices l with l last or m[l+1] > m[l] + 1."""
    h = HeightSequence(h)
    return tuple(i for i in range(len(h)) if i == len(h) - 1 or h[i + 1] > h[i] + 1)


class PoleData(NamedTuple):
    beta: Partition
    shifts: tuple[int, ...]
    gaps: tuple[int, ...]     # descending, aligned with beta


def pole_data(h) -> PoleData:
    h = HeightSequence(h)
    if not h:
        raise ValueError("empty height sequence")
    idx = tuple(sorted(gaps(h), reverse=True))
    return PoleData(Partition(h[i] + 1 for i in idx), tuple(h[i] - i for i in idx), idx)


def pole_columns(h) -> list[Column]:
    """The columns C(i_(j+1)+2, i_j+1)_(beta_j), one per gap."""
    h = HeightSequence(h)
    if not h:
        return []
    idx = pole_data(h).gaps
    below = (*idx[1:], -1)
    return [Column(h[i] + 1, nxt + 2, i + 1) for i, nxt in zip(idx, below)]


@dataclass(frozen=True)
class CyclicType:
    """P(pole) + (0 in N_padding). With `nongap` set, the padding part
    m[nongap]+1 is carried by the generator instead (an extended pole)."""
    pole: HeightSequence
    padding: Partition = Partition()
    nongap: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "pole", HeightSequence(self.pole))
        object.__setattr__(self, "padding", Partition(self.padding))
        u = self.nongap
        if u is not None:
            if not 0 <= u < len(self.pole) or u in gaps(self.pole):
                raise ValueError(f"index {u} is not a non-gap of {self.pole}")
            if self.pole[u] + 1 not in self.padding:
                raise ValueError(f"padding {tuple(self.padding)} lacks the block {self.pole[u] + 1}")

    @property
    def ambient(self) -> Partition:
        beta = pole_data(self.pole).beta if self.pole else Partition()
        return multiset_union(beta, self.padding)

    def generator_terms(self) -> list[tuple[int, int]]:
        """(block, shift) pairs of the generator, blocks descending."""
        idx = set(gaps(self.pole)) | ({self.nongap} if self.nongap is not None else set())
        return [(self.pole[i] + 1, self.pole[i] - i) for i in sorted(idx, reverse=True)]

    def free_blocks(self) -> Partition:
        """Ambient blocks the generator does not touch."""
        if self.nongap is None:
            return self.padding
        return multiset_difference(self.padding, [self.pole[self.nongap] + 1])

    def to_dict(self):
        out = {"pole": list(self.pole), "padding": list(self.padding)}
        if self.nongap is not None:
            out["nongap"] = self.nongap
        return out

    def __str__(self):
        if self.nongap is not None:
            return f"P(({','.join(map(str, self.pole))})v{self.pole[self.nongap]})"
        text = f"P({self.pole})"
        return text + "".join(f"+E({k})" for k in self.padding)


def tableau_of_cyclic(c: CyclicType) -> Tableau:
    """Entry e sits in row m[e-1]+1; the pole's columns are disjoint in entries."""
    columns = pole_columns(c.pole) + [Column(k) for k in c.padding]
    if not columns:
        return Tableau.empty(())
    return tableau_union(*(col.tableau for col in columns))


def cyclic_of_tableau(t: Tableau) -> CyclicType:
    """Inverse of `tableau_of_cyclic` on tableaux with every entry at most once."""
    boxes = t.boxes()
    entries = [t.entry(b) for b in boxes]
    if entries != list(range(1, len(entries) + 1)):
        raise ValueError("each entry must occur exactly once")
    pole = HeightSequence(row - 1 for row, _ in boxes)
    beta = pole_data(pole).beta if pole else Partition()
    c = CyclicType(pole, multiset_difference(t.outer, beta))
    if tableau_of_cyclic(c) != t:
        raise ValueError("not the tableau of a cyclic embedding")
    return c


def extended_pole_split(h, u: int) -> CyclicType:
    h = HeightSequence(h)
    if not 0 <= u < len(h) or u in gaps(h):
        raise ValueError(f"index {u} is not a non-gap of {h}")
    return CyclicType(h, Partition((h[u] + 1,)), nongap=u)


def count_endo_submodules(beta) -> int:
    beta = Partition(beta)
    return math.prod(1 + beta.height(i) - beta.height(i + 1) for i in range(1, len(beta) + 1))


def enumerate_single_entry_tableaux(beta) -> list[Tableau]:
    """LR-tableaux of outer shape beta in which every entry occurs at most once."""
    beta = Partition(beta)
    found = []
    for r in range(beta.height(1) + 1):
        for gamma in sub_partitions(beta):
            if gamma.weight == beta.weight - r:
                found += enumerate_lr(Partition((r,)), beta, gamma)
    return found
