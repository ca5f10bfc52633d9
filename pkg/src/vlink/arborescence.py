"""Directed multigraphs: graph matrix, rooted-tree counts, Eulerian circuits.

``count_rooted_trees`` is the matrix-tree theorem (principal minor of the
in-degree Laplacian, with optional Laurent edge weights).  The enumeration
functions are brute-force oracles for it and for the BEST formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Sequence

import networkx as nx

from .laurent import ONE, ZERO, LaurentPoly
from .linalg import BoundExceeded, bareiss_det

__all__ = [
    "Digraph", "Arborescence", "GraphError", "graph_matrix", "count_rooted_trees",
    "enumerate_arborescences", "count_eulerian_circuits", "has_articulation_vertex",
    "alexander_via_trees", "read_edge_list",
]

ARBORESCENCE_EDGE_BOUND = 24
EULER_EDGE_BOUND = 16


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """``n`` vertices ``0..n-1``; ``edges`` are ``(src, dst, valuation)`` triples.
    Parallel edges are repeated entries."""

    n: int
    edges: tuple

    def __init__(self, n: int, edges: Sequence):
        norm = []
        for e in edges:
            src, dst = int(e[0]), int(e[1])
            val = LaurentPoly.coerce(e[2]) if len(e) > 2 else ONE
            if not (0 <= src < n and 0 <= dst < n):
                raise GraphError(f"edge {src}->{dst} out of range for {n} vertices")
            norm.append((src, dst, val))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    def count(self, i: int, j: int) -> int:
        """a_ij, the number of edges i -> j."""
        return sum(1 for s, d, _ in self.edges if s == i and d == j)

    def outdegree(self, i: int) -> int:
        return sum(1 for s, _, _ in self.edges if s == i)

    def indegree(self, i: int) -> int:
        return sum(1 for _, d, _ in self.edges if d == i)

    def has_loops(self) -> bool:
        return any(s == d for s, d, _ in self.edges)

    def unweighted(self) -> "Digraph":
        return Digraph(self.n, [(s, d) for s, d, _ in self.edges])


@dataclass(frozen=True)
class Arborescence:
    root: int
    edges: tuple  # indices into Digraph.edges

    def weight(self, G: Digraph) -> LaurentPoly:
        w = ONE
        for e in self.edges:
            w = w * G.edges[e][2]
        return w


def graph_matrix(G: Digraph) -> list[list[LaurentPoly]]:
    """H with ``H[i][j] = -sum f(i->j)`` off the diagonal and ``H[j][j] = sum f(* -> j)``."""
    if G.has_loops():
        raise GraphError("graph has loops")
    H = [[ZERO] * G.n for _ in range(G.n)]
    for s, d, f in G.edges:
        H[s][d] = H[s][d] - f
        H[d][d] = H[d][d] + f
    return H


def count_rooted_trees(G: Digraph, root: int = 0) -> LaurentPoly:
    """Principal minor ``H_rr``: the (weighted) number of arborescences rooted at ``root``."""
    H = graph_matrix(G)
    keep = [i for i in range(G.n) if i != root]
    sub = [[H[i][j] for j in keep] for i in keep]
    return bareiss_det(sub, one=ONE)


def enumerate_arborescences(G: Digraph, root: int = 0) -> list[Arborescence]:
    """Every spanning out-tree rooted at ``root`` (each other vertex picks one in-edge)."""
    if len(G.edges) > ARBORESCENCE_EDGE_BOUND:
        raise BoundExceeded(f"{len(G.edges)} edges exceeds oracle bound {ARBORESCENCE_EDGE_BOUND}")
    others = [v for v in range(G.n) if v != root]
    choices = []
    for v in others:
        ins = [k for k, (s, d, _) in enumerate(G.edges) if d == v and s != v]
        if not ins:
            return []
        choices.append(ins)
    out = []
    for pick in product(*choices):
        parent = {v: G.edges[e][0] for v, e in zip(others, pick)}
        ok = True
        for v in others:
            seen = set()
            u = v
            while u != root:
                if u in seen:
                    ok = False
                    break
                seen.add(u)
                u = parent[u]
            if not ok:
                break
        if ok:
            out.append(Arborescence(root, tuple(sorted(pick))))
    return out


def _check_eulerian(G: Digraph):
    for v in range(G.n):
        if G.outdegree(v) != G.indegree(v):
            raise GraphError(f"vertex {v} is unbalanced")
        if G.outdegree(v) == 0:
            raise GraphError(f"vertex {v} is isolated")
    und = nx.MultiGraph()
    und.add_nodes_from(range(G.n))
    und.add_edges_from((s, d) for s, d, _ in G.edges)
    if G.n == 0 or not nx.is_connected(und):
        raise GraphError("graph is not connected")


def count_eulerian_circuits(G: Digraph, mode: str = "best") -> int:
    """Number of Eulerian circuits, counted as cyclic edge sequences.

    ``mode="best"`` uses ``t(G) * prod (outdeg(v) - 1)!``; ``mode="enumerate"``
    walks every circuit starting with edge 0.
    """
    _check_eulerian(G)
    if mode == "best":
        trees = count_rooted_trees(G.unweighted(), 0)
        t = trees.coefficient(0)
        out = t
        for v in range(G.n):
            out *= factorial(G.outdegree(v) - 1)
        return out
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    m = len(G.edges)
    if m > EULER_EDGE_BOUND:
        raise BoundExceeded(f"{m} edges exceeds oracle bound {EULER_EDGE_BOUND}")
    out_edges: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for k, (s, _, _) in enumerate(G.edges):
        out_edges[s].append(k)
    used = [False] * m
    used[0] = True
    start = G.edges[0][0]

    def walk(v: int, depth: int) -> int:
        if depth == m:
            return 1 if v == start else 0
        total = 0
        for k in out_edges[v]:
            if not used[k]:
                used[k] = True
                total += walk(G.edges[k][1], depth + 1)
                used[k] = False
        return total

    return walk(G.edges[0][1], 1)


def has_articulation_vertex(G: Digraph) -> bool:
    und = nx.Graph()
    und.add_nodes_from(range(G.n))
    und.add_edges_from((s, d) for s, d, _ in G.edges if s != d)
    return any(True for _ in nx.articulation_points(und))


def alexander_via_trees(D) -> LaurentPoly:
    """Alexander polynomial as the weighted rooted-tree count of the valuated
    source-sink graph of an alternating, almost classical diagram."""
    from .numbering import NumberingError, numbering, source_sink_graph

    if D.n == 0:
        return ONE
    if numbering(D, 0) is None:
        raise NumberingError("diagram has no Alexander numbering")
    G = source_sink_graph(D, valuated=True)
    return count_rooted_trees(G, 0).canonical()


def read_edge_list(text: str) -> Digraph:
    """Parse lines ``src dst [valuation]`` (0-based vertices).  A valuation is a
    signed monomial such as ``1``, ``-t`` or ``2t^-1``; it defaults to 1."""
    edges = []
    n = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'src dst [valuation]'")
        s, d = int(parts[0]), int(parts[1])
        val = _parse_monomial(parts[2]) if len(parts) == 3 else ONE
        edges.append((s, d, val))
        n = max(n, s + 1, d + 1)
    return Digraph(n, edges)


def _parse_monomial(text: str) -> LaurentPoly:
    s = text.replace(" ", "")
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:]
    elif s.startswith("+"):
        s = s[1:]
    if "t" not in s:
        return LaurentPoly.constant(sign * int(s))
    coeff_s, _, exp_s = s.partition("t")
    coeff = int(coeff_s.rstrip("*")) if coeff_s.rstrip("*") else 1
    exp = int(exp_s.lstrip("^").strip("()")) if exp_s else 1
    return LaurentPoly({exp: sign * coeff})
