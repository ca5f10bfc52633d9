"""Virtual linking numbers, Cheng colorability, Alexander numberings and the
source-sink graph of a checkerboard colorable diagram.

Arcs here are *short* arcs: arc ``(c, i)`` runs from the endpoint at slot
``i`` of circle ``c`` to the next endpoint.  A chordless circle is a single
arc ``(c, 0)``.  At a chord of sign ``e`` the local rules read::

    over_out  = over_in - e
    under_in  = over_out
    under_out = over_in

(mod ``p`` for a mod ``p`` numbering).  Every rule is a difference
constraint, so solvability is decided exactly by propagating potentials.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arborescence import Digraph
from .gauss import GaussDiagram, is_alternating
from .laurent import ONE, LaurentPoly

__all__ = [
    "ArcLabeling", "NumberingError", "vlk", "vlk_table", "is_cheng_colorable",
    "numbering", "is_checkerboard_colorable", "is_almost_classical_diagram",
    "source_sink_graph", "arc_of", "local_rules_hold",
]


class NumberingError(ValueError):
    pass


@dataclass(frozen=True)
class ArcLabeling:
    values: dict = field(hash=False)
    modulus: int = 0

    def to_json(self) -> dict:
        return {f"{c}:{i}": v for (c, i), v in sorted(self.values.items())}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def vlk(D: GaussDiagram, over: Iterable[int], under: Iterable[int]) -> int:
    """Sum of signs of chords with tail on a circle in ``over`` and head on one in ``under``."""
    J, K = set(over), set(under)
    if not J or not K:
        raise ValueError("circle sets must be nonempty")
    if J & K:
        raise ValueError("circle sets must be disjoint")
    return sum(ch.sign for ch in D.chords.values()
               if ch.tail.circle in J and ch.head.circle in K)


def _default_partition(D: GaussDiagram) -> list[list[int]]:
    return [[i] for i in range(D.k)]


def vlk_table(D: GaussDiagram, partition: Sequence[Sequence[int]] | None = None) -> dict:
    """``{(i, j): vlk(K_i, K_j)}`` over ordered pairs of distinct link components."""
    parts = partition or _default_partition(D)
    return {(i, j): vlk(D, parts[i], parts[j])
            for i in range(len(parts)) for j in range(len(parts)) if i != j}


def is_cheng_colorable(D: GaussDiagram, partition: Sequence[Sequence[int]] | None = None) -> bool:
    """vlk(K_i, L - K_i) == vlk(L - K_i, K_i) for every component K_i."""
    parts = partition or _default_partition(D)
    if len(parts) < 2:
        return True
    everything = {c for p in parts for c in p}
    for p in parts:
        rest = everything - set(p)
        if vlk(D, p, rest) != vlk(D, rest, p):
            return False
    return True


def arc_of(D: GaussDiagram, circle: int, position: int) -> tuple[int, int]:
    """The short arc leaving slot ``position`` on ``circle``."""
    L = len(D.circles[circle])
    return (circle, position % L if L else 0)


def _chord_arcs(D: GaussDiagram, ch):
    t, h = ch.tail, ch.head
    over_in = arc_of(D, t.circle, t.position - 1)
    over_out = arc_of(D, t.circle, t.position)
    under_in = arc_of(D, h.circle, h.position - 1)
    under_out = arc_of(D, h.circle, h.position)
    return over_in, over_out, under_in, under_out


def _constraints(D: GaussDiagram):
    """Difference constraints ``x[a] - x[b] = c`` as ``(a, b, c)``."""
    out = []
    for ch in D.chords.values():
        oi, oo, ui, uo = _chord_arcs(D, ch)
        out.append((oo, oi, -ch.sign))
        out.append((ui, oo, 0))
        out.append((uo, oi, 0))
    return out


def _all_arcs(D: GaussDiagram):
    return [(c, i) for c, circ in enumerate(D.circles) for i in range(max(len(circ), 1))]


def numbering(D: GaussDiagram, modulus: int = 0) -> ArcLabeling | None:
    """An Alexander numbering over Z (``modulus=0``) or Z/p, or ``None``."""
    if modulus and not _is_prime(modulus):
        raise NumberingError(f"modulus {modulus} is not prime")
    adj: dict = {a: [] for a in _all_arcs(D)}
    for a, b, c in _constraints(D):
        adj[a].append((b, -c))
        adj[b].append((a, c))

    def norm(v):
        return v % modulus if modulus else v

    values: dict = {}
    for root in adj:
        if root in values:
            continue
        values[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, d in adj[u]:
                want = norm(values[u] + d)
                if v not in values:
                    values[v] = want
                    queue.append(v)
                elif values[v] != want:
                    return None
    return ArcLabeling(values, modulus)


def local_rules_hold(D: GaussDiagram, labeling: ArcLabeling) -> bool:
    p = labeling.modulus
    x = labeling.values
    for a, b, c in _constraints(D):
        diff = x[a] - x[b] - c
        if (diff % p if p else diff) != 0:
            return False
    return True


def is_checkerboard_colorable(D: GaussDiagram) -> bool:
    return numbering(D, 2) is not None


def is_almost_classical_diagram(D: GaussDiagram) -> bool:
    return numbering(D, 0) is not None


def source_sink_graph(D: GaussDiagram, valuated: bool = False) -> Digraph:
    """Crossing graph of ``D`` with the source-sink orientation.

    Vertices are chords in label order; every short arc is an edge.  Edges are
    oriented by the mod 2 numbering, normalized so the over-strand edges leave
    the first vertex of each component; for alternating diagrams every edge
    then runs from the chord of its ``O`` end to the chord of its ``U`` end.

    With ``valuated=True`` (alternating, loop-free diagrams only) each edge
    carries ``1`` or ``-t`` according to whether it is the incoming or the
    outgoing under-arc at its target crossing; the roles swap at negative
    crossings.
    """
    lab = numbering(D, 2)
    if lab is None:
        raise NumberingError("diagram is not checkerboard colorable")
    if valuated:
        if not is_alternating(D):
            raise NumberingError("valuated source-sink graph needs an alternating diagram")
        if D.n == 0:
            raise NumberingError("valuated source-sink graph needs at least one crossing")
    labels = D.labels
    index = {lab_: i for i, lab_ in enumerate(labels)}
    parity = dict(lab.values)

    # flip parity per constraint component so over-edges leave its first chord
    comp_of = _arc_components(D)
    flip: dict[int, int] = {}
    for ch in D.chords.values():
        comp = comp_of[arc_of(D, ch.tail.circle, ch.tail.position)]
        if comp not in flip:
            over_in = arc_of(D, ch.tail.circle, ch.tail.position - 1)
            # over_in forward with parity 0 means the over edges point in
            flip[comp] = 1 if parity[over_in] == 0 else 0
    for a in parity:
        parity[a] = (parity[a] + flip.get(comp_of[a], 0)) % 2

    edges = []
    for c, circ in enumerate(D.circles):
        L = len(circ)
        for i in range(L):
            start, end = circ[i], circ[(i + 1) % L]
            forward = parity[(c, i)] == 0
            src_tok, dst_tok = (start, end) if forward else (end, start)
            src, dst = index[src_tok.label], index[dst_tok.label]
            val = ONE
            if valuated:
                if dst_tok.kind != "U":
                    raise NumberingError("edge does not end at an under-crossing")
                # the arc after slot i is incoming at `end`, outgoing at `start`
                incoming = dst_tok == end
                positive = dst_tok.sign > 0
                val = ONE if incoming == positive else LaurentPoly({1: -1})
                if src == dst:
                    raise NumberingError("loop in crossing graph (kink); graph must be loop-free")
            edges.append((src, dst, val))
    return Digraph(len(labels), edges)


def _arc_components(D: GaussDiagram) -> dict:
    adj: dict = {a: [] for a in _all_arcs(D)}
    for a, b, _ in _constraints(D):
        adj[a].append(b)
        adj[b].append(a)
    comp: dict = {}
    k = 0
    for root in adj:
        if root in comp:
            continue
        comp[root] = k
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp[v] = k
                    stack.append(v)
        k += 1
    return comp
