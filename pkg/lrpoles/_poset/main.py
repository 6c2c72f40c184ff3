"""Boundary posets: the LR-tableaux of one shape and content, ordered by
increasing box moves (each one a boundary relation, witnessed by Q(mu))
and compared against the dominance order."""
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import NamedTuple

import networkx as nx

from .._combinatorics import Tableau, enumerate_lr
from .._engine import Certificate, InvalidContext, certify_move
from .._engine.field import _get_prime
from ..logs import log
from .moves import BoxMove, box_move_context, dominance_leq_tableaux, is_increasing_box_move

DEFAULT_WORKERS = 8


def _get_workers(workers=None) -> int:
    import lrpoles
    return int(workers or lrpoles.workers or os.getenv("LRPOLES_WORKERS") or DEFAULT_WORKERS)


class EdgeKind(str, Enum):
    BOX_MOVE = "BOX_MOVE"
    DOMINANCE_ONLY = "DOMINANCE_ONLY"


class Edge(NamedTuple):
    source: int
    target: int
    kind: EdgeKind
    certificate: Certificate | None = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None

    def to_dict(self):
        out = {"from": self.source, "to": self.target, "kind": self.kind.value,
               "certified": self.certified}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out


@dataclass(frozen=True)
class TableauPoset:
    nodes: tuple[Tableau, ...]
    edges: tuple[Edge, ...] = ()

    def graph(self, *kinds: EdgeKind) -> nx.DiGraph:
        kinds = kinds or tuple(EdgeKind)
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from((e.source, e.target) for e in self.edges if e.kind in kinds)
        return g

    def box_closure(self) -> nx.DiGraph:
        return nx.transitive_closure_dag(self.graph(EdgeKind.BOX_MOVE))

    def dominance(self) -> list[tuple[int, int]]:
        """Strict dominance pairs (i, j), node i below node j."""
        return [(i, j) for i, j in permutations(range(len(self.nodes)), 2)
                if dominance_leq_tableaux(self.nodes[i], self.nodes[j])]

    def hasse_edges(self) -> list[Edge]:
        """Covers of the order generated by all edges; each keeps its own kind."""
        by_pair = {(e.source, e.target): e for e in self.edges}
        reduced = nx.transitive_reduction(self.graph())
        return [by_pair[pair] for pair in sorted(reduced.edges)]

    def to_dict(self):
        return {"nodes": [t.to_dict() for t in self.nodes],
                "edges": [e.to_dict() for e in self.edges]}


def _certify(item: tuple[int, int, BoxMove], p: int) -> Certificate | None:
    i, j, move = item
    try:
        ctx = box_move_context(move)
    except InvalidContext as e:
        log("warning", event="uncertified", edge=[i, j], reason=str(e))
        return None
    cert = certify_move(ctx, p, edge=(i, j))
    log("debug", event="certified", edge=[i, j], prime=p, data=list(ctx.data))
    return cert


def build_boundary_poset(alpha, beta, gamma, verify: bool = False, p: int | None = None,
                         workers: int | None = None) -> TableauPoset:
    nodes = tuple(enumerate_lr(alpha, beta, gamma))
    moves = []
    for i, g in enumerate(nodes):
        for j, h in enumerate(nodes):
            if i != j and (move := is_increasing_box_move(g, h)) is not None:
                moves.append((i, j, move))

    poset = TableauPoset(nodes, tuple(Edge(i, j, EdgeKind.BOX_MOVE) for i, j, _ in moves))
    if not nx.is_directed_acyclic_graph(poset.graph()):
        raise ValueError("the box relation has a cycle")

    certificates = [None] * len(moves)
    if verify:
        p = _get_prime(p)
        with ThreadPoolExecutor(_get_workers(workers)) as pool:
            certificates = list(pool.map(lambda item: _certify(item, p), moves))

    closure = poset.box_closure()
    edges = [Edge(i, j, EdgeKind.BOX_MOVE, c) for (i, j, _), c in zip(moves, certificates)]
    edges += [Edge(i, j, EdgeKind.DOMINANCE_ONLY) for i, j in poset.dominance()
              if not closure.has_edge(i, j)]
    edges.sort(key=lambda e: (e.source, e.target))
    log("info", event="poset", nodes=len(nodes), box_moves=len(moves),
        dominance_only=len(edges) - len(moves))
    return TableauPoset(nodes, tuple(edges))


def emit_hasse_dot(poset: TableauPoset) -> str:
    """Nodes labelled by their entry grids ('.' = empty box), smallest at the
    bottom; dominance-only covers are dashed."""
    lines = ["digraph {", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for i, t in enumerate(poset.nodes):
        label = "\\n".join("".join(str(x) if x else "." for x in row) for row in t.grid())
        lines.append(f'  {i} [label="{label}"];')
    for edge in poset.hasse_edges():
        style = "" if edge.kind is EdgeKind.BOX_MOVE else " [style=dashed]"
        lines.append(f"  {edge.source} -> {edge.target}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
