"""Reidemeister moves and the forbidden move F1 on Gauss diagrams, and a
bounded bidirectional search for virtual or welded equivalence.

Sites are plain tuples so that move records serialize to JSON:

``R1_insert``  ``(circle, gap, order, sign)`` with ``order`` in ``"OU"``/``"UO"``
``R1_delete``  ``(label,)``
``R2_insert``  ``(tail_circle, tail_gap, head_circle, head_gap, a_tail_first,
               a_head_first, heads_before)``; the new chord ``a`` is positive and
               ``b`` negative; ``heads_before`` only matters when both pairs go in
               the same gap
``R2_delete``  ``(label_a, label_b)``
``R3``         ``(a, b, c)`` where ``a`` runs top to middle, ``b`` top to bottom and
               ``c`` middle to bottom
``F1``         ``(circle, position)``: swap the tails at ``position`` and ``position + 1``
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .gauss import GaussDiagram, Token, canonical_code

__all__ = [
    "MoveKind", "MoveInstance", "SearchVerdict", "MoveError", "R3_PATTERNS",
    "enumerate_moves", "apply_move", "inverse_move", "replay", "equivalent_bounded",
    "VIRTUAL_MOVES", "WELDED_MOVES",
]


class MoveError(ValueError):
    pass


class MoveKind(str, Enum):
    R1_INSERT = "R1_insert"
    R1_DELETE = "R1_delete"
    R2_INSERT = "R2_insert"
    R2_DELETE = "R2_delete"
    R3 = "R3"
    F1 = "F1"

    @property
    def inverse(self) -> "MoveKind":
        return _INVERSE[self]


_INVERSE = {
    MoveKind.R1_INSERT: MoveKind.R1_DELETE,
    MoveKind.R1_DELETE: MoveKind.R1_INSERT,
    MoveKind.R2_INSERT: MoveKind.R2_DELETE,
    MoveKind.R2_DELETE: MoveKind.R2_INSERT,
    MoveKind.R3: MoveKind.R3,
    MoveKind.F1: MoveKind.F1,
}

VIRTUAL_MOVES = frozenset(MoveKind) - {MoveKind.F1}
WELDED_MOVES = frozenset(MoveKind)


@dataclass(frozen=True)
class MoveInstance:
    kind: MoveKind
    site: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "site": list(self.site)}

    @classmethod
    def from_json(cls, obj: dict) -> "MoveInstance":
        return cls(MoveKind(obj["kind"]), tuple(obj["site"]))


@dataclass(frozen=True)
class SearchVerdict:
    status: str  # "equivalent" or "not_found"
    path: list | None
    explored: int
    bound_hit: bool
    codes: list = field(default_factory=list, compare=False)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "path": None if self.path is None else [m.to_json() for m in self.path],
            "explored": self.explored,
            "bound_hit": self.bound_hit,
        }


# Sign and order patterns of the three chords of a realizable triangle.
# Entries: (sign a, sign b, sign c, first on top, first on middle, first on bottom).
# Closed under reversing all three orders, which is exactly what an R3 move does.
R3_PATTERNS = frozenset({
    (-1, -1, -1, "a", "a", "b"), (-1, -1, -1, "b", "c", "c"),
    (-1, -1, 1, "a", "c", "c"), (-1, -1, 1, "b", "a", "b"),
    (-1, 1, -1, "a", "c", "b"), (-1, 1, -1, "b", "a", "c"),
    (-1, 1, 1, "a", "a", "c"), (-1, 1, 1, "b", "c", "b"),
    (1, -1, -1, "a", "a", "c"), (1, -1, -1, "b", "c", "b"),
    (1, -1, 1, "a", "c", "b"), (1, -1, 1, "b", "a", "c"),
    (1, 1, -1, "a", "c", "c"), (1, 1, -1, "b", "a", "b"),
    (1, 1, 1, "a", "a", "b"), (1, 1, 1, "b", "c", "c"),
})


# ---------------------------------------------------------------- helpers

def _positions(D: GaussDiagram) -> dict:
    """``(label, kind) -> (circle, position)``."""
    return {(t.label, t.kind): (c, i) for c, circ in enumerate(D.circles) for i, t in enumerate(circ)}


def _follows(D: GaussDiagram, p, q) -> bool:
    """Slot ``q`` comes immediately after slot ``p`` on the same circle."""
    if p[0] != q[0]:
        return False
    L = len(D.circles[p[0]])
    return L >= 2 and (p[1] + 1) % L == q[1]


def _adjacent(D: GaussDiagram, p, q) -> bool:
    return _follows(D, p, q) or _follows(D, q, p)


def _build(circles) -> GaussDiagram:
    return GaussDiagram(tuple(tuple(c) for c in circles))


def _gap_list(D: GaussDiagram):
    return [(c, g) for c, circ in enumerate(D.circles) for g in range(max(len(circ), 1))]


def _insert(circles: list, c: int, g: int, toks: list):
    circles[c] = circles[c][:g] + list(toks) + circles[c][g:]


# ------------------------------------------------------------ application

def apply_move(D: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    """Apply ``m`` to ``D``; raises :class:`MoveError` if it does not apply."""
    kind, s = m.kind, m.site
    circles = [list(c) for c in D.circles]
    pos = _positions(D)
    if kind is MoveKind.R1_INSERT:
        c, g, order, sign = s
        _check_gap(D, c, g)
        lab = D.max_label() + 1
        o, u = Token(lab, "O", sign), Token(lab, "U", sign)
        _insert(circles, c, g, [o, u] if order == "OU" else [u, o])
        return _build(circles)
    if kind is MoveKind.R1_DELETE:
        (lab,) = s
        if (lab, "O") not in pos or not _adjacent(D, pos[(lab, "O")], pos[(lab, "U")]):
            raise MoveError(f"chord {lab} is not an isolated kink")
        return _build([[t for t in c if t.label != lab] for c in circles])
    if kind is MoveKind.R2_INSERT:
        tc, tg, hc, hg, a_tail_first, a_head_first, heads_before = s
        _check_gap(D, tc, tg)
        _check_gap(D, hc, hg)
        a = D.max_label() + 1
        b = a + 1
        tails = [Token(a, "O", 1), Token(b, "O", -1)]
        heads = [Token(a, "U", 1), Token(b, "U", -1)]
        if not a_tail_first:
            tails.reverse()
        if not a_head_first:
            heads.reverse()
        if (tc, tg) == (hc, hg):
            _insert(circles, tc, tg, heads + tails if heads_before else tails + heads)
        elif tc == hc and tg > hg:
            _insert(circles, tc, tg, tails)
            _insert(circles, hc, hg, heads)
        else:
            _insert(circles, hc, hg, heads)
            _insert(circles, tc, tg, tails)
        return _build(circles)
    if kind is MoveKind.R2_DELETE:
        a, b = s
        if not _is_r2_pair(D, pos, a, b):
            raise MoveError(f"chords {a}, {b} do not form a bigon")
        return _build([[t for t in c if t.label not in (a, b)] for c in circles])
    if kind is MoveKind.R3:
        a, b, c_ = s
        if _r3_pattern(D, pos, a, b, c_) is None:
            raise MoveError(f"chords {a}, {b}, {c_} do not form an R3 triangle")
        for p, q in ((pos[(a, "O")], pos[(b, "O")]),
                     (pos[(a, "U")], pos[(c_, "O")]),
                     (pos[(b, "U")], pos[(c_, "U")])):
            circles[p[0]][p[1]], circles[q[0]][q[1]] = circles[q[0]][q[1]], circles[p[0]][p[1]]
        return _build(circles)
    if kind is MoveKind.F1:
        c, i = s
        if not 0 <= c < D.k:
            raise MoveError(f"no circle {c}")
        circ = circles[c]
        L = len(circ)
        if L < 3 or not 0 <= i < L:
            raise MoveError("F1 needs two adjacent tails on a circle with at least 3 endpoints")
        j = (i + 1) % L
        if circ[i].kind != "O" or circ[j].kind != "O":
            raise MoveError(f"slots {i}, {j} on circle {c} are not both tails")
        circ[i], circ[j] = circ[j], circ[i]
        return _build(circles)
    raise MoveError(f"unknown move kind {kind!r}")


def _check_gap(D: GaussDiagram, c: int, g: int):
    if not 0 <= c < D.k or not 0 <= g < max(len(D.circles[c]), 1):
        raise MoveError(f"invalid gap ({c}, {g})")


def _is_r2_pair(D, pos, a, b) -> bool:
    if a == b or (a, "O") not in pos or (b, "O") not in pos:
        return False
    chords = D.chords
    if chords[a].sign == chords[b].sign:
        return False
    return (_adjacent(D, pos[(a, "O")], pos[(b, "O")])
            and _adjacent(D, pos[(a, "U")], pos[(b, "U")]))


def _first(D, p, q, x, y) -> set:
    """Readings of which of two adjacent slots comes first."""
    out = set()
    if _follows(D, p, q):
        out.add(x)
    if _follows(D, q, p):
        out.add(y)
    return out


def _r3_pattern(D, pos, a, b, c):
    if len({a, b, c}) != 3 or any((x, "O") not in pos for x in (a, b, c)):
        return None
    fT = _first(D, pos[(a, "O")], pos[(b, "O")], "a", "b")
    fM = _first(D, pos[(a, "U")], pos[(c, "O")], "a", "c")
    fB = _first(D, pos[(b, "U")], pos[(c, "U")], "b", "c")
    if not (fT and fM and fB):
        return None
    sg = D.chords
    signs = (sg[a].sign, sg[b].sign, sg[c].sign)
    for t in sorted(fT):
        for m in sorted(fM):
            for bt in sorted(fB):
                pat = signs + (t, m, bt)
                if pat in R3_PATTERNS:
                    return pat
    return None


# ------------------------------------------------------------ enumeration

def enumerate_moves(D: GaussDiagram, allowed: Iterable[MoveKind], max_n: int) -> list:
    """Every single move of an allowed kind, as ``(MoveInstance, result)`` pairs,
    keeping only results with at most ``max_n`` chords."""
    allowed = set(allowed)
    out = []
    n = D.n
    pos = _positions(D)
    labels = D.labels

    def add(kind, site):
        m = MoveInstance(kind, site)
        out.append((m, apply_move(D, m)))

    if MoveKind.R1_DELETE in allowed:
        for lab in labels:
            if _adjacent(D, pos[(lab, "O")], pos[(lab, "U")]):
                add(MoveKind.R1_DELETE, (lab,))
    if MoveKind.R2_DELETE in allowed:
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if _is_r2_pair(D, pos, a, b):
                    add(MoveKind.R2_DELETE, (a, b))
    if MoveKind.R3 in allowed:
        for a in labels:
            for b in labels:
                if b == a or not _adjacent(D, pos[(a, "O")], pos[(b, "O")]):
                    continue
                for c in labels:
                    if c in (a, b):
                        continue
                    if _r3_pattern(D, pos, a, b, c) is not None:
                        add(MoveKind.R3, (a, b, c))
    if MoveKind.F1 in allowed:
        for ci, circ in enumerate(D.circles):
            L = len(circ)
            if L < 3:
                continue
            for i in range(L):
                if circ[i].kind == "O" and circ[(i + 1) % L].kind == "O":
                    add(MoveKind.F1, (ci, i))
    gaps = _gap_list(D)
    if MoveKind.R1_INSERT in allowed and n + 1 <= max_n:
        for c, g in gaps:
            for order in ("OU", "UO"):
                for sign in (1, -1):
                    add(MoveKind.R1_INSERT, (c, g, order, sign))
    if MoveKind.R2_INSERT in allowed and n + 2 <= max_n:
        for tc, tg in gaps:
            for hc, hg in gaps:
                same = (tc, tg) == (hc, hg)
                for atf in (True, False):
                    for ahf in (True, False):
                        for hb in ((False, True) if same else (False,)):
                            add(MoveKind.R2_INSERT, (tc, tg, hc, hg, atf, ahf, hb))
    return out


def inverse_move(D: GaussDiagram, m: MoveInstance) -> MoveInstance:
    """A move that takes ``apply_move(D, m)`` back to a diagram with the
    canonical code of ``D``."""
    E = apply_move(D, m)
    if m.kind is MoveKind.R1_INSERT:
        return MoveInstance(MoveKind.R1_DELETE, (D.max_label() + 1,))
    if m.kind is MoveKind.R2_INSERT:
        a = D.max_label() + 1
        return MoveInstance(MoveKind.R2_DELETE, (a, a + 1))
    if m.kind in (MoveKind.R3, MoveKind.F1):
        return m
    target = canonical_code(D)
    for cand, res in enumerate_moves(E, {m.kind.inverse}, D.n):
        if canonical_code(res) == target:
            return cand
    raise MoveError("no inverse found")  # pragma: no cover


def replay(D: GaussDiagram, path: Iterable[MoveInstance]) -> GaussDiagram:
    for m in path:
        D = apply_move(D, m)
    return D


# ---------------------------------------------------------------- search

def _closed(allowed) -> frozenset:
    kinds = set(allowed)
    return frozenset(kinds | {k.inverse for k in kinds})


def equivalent_bounded(D1: GaussDiagram, D2: GaussDiagram, allowed: Iterable[MoveKind],
                       max_n: int, node_budget: int) -> SearchVerdict:
    """Bidirectional breadth-first search for a move sequence from ``D1`` to ``D2``.

    States are deduplicated by canonical code.  The allowed set is closed under
    inverses (an insertion kind brings its deletion and vice versa).  The chord
    bound is widened one step at a time from ``max(n(D1), n(D2))`` up to
    ``max_n``, all rounds sharing ``node_budget``.  ``not_found`` with
    ``bound_hit=False`` means the bounded space was exhausted.
    """
    if node_budget <= 0 or max_n < 0:
        raise ValueError("budgets must be positive")
    kinds = _closed(allowed)
    c1, c2 = canonical_code(D1), canonical_code(D2)
    if c1 == c2:
        return SearchVerdict("equivalent", [], 1, False, [c1])
    swapped = c2 < c1
    src, dst = (D2, D1) if swapped else (D1, D2)
    start_n = max(D1.n, D2.n)
    if start_n > max_n:
        return SearchVerdict("not_found", None, 0, False)
    explored = 0
    bound_hit = False
    for cap in range(start_n, max_n + 1):
        chain, used, hit = _bidirectional(src, dst, kinds, cap, node_budget - explored)
        explored += used
        if chain is not None:
            if swapped:
                chain = chain[::-1]
            path = _concretize(D1, chain, kinds, cap)
            return SearchVerdict("equivalent", path, explored, False, chain)
        if hit:
            bound_hit = True
            break
    return SearchVerdict("not_found", None, explored, bound_hit)


def _bidirectional(src, dst, kinds, cap, budget):
    """Returns ``(code chain or None, states stored, budget exhausted)``."""
    cs, cd = canonical_code(src), canonical_code(dst)
    parents = [{cs: None}, {cd: None}]
    frontiers = [[(cs, src)], [(cd, dst)]]
    # backward expansion applies inverse kinds, which the closed set already holds
    used = 2
    if budget < 2:
        return None, 0, True
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        for code, D in sorted(frontiers[side], key=lambda x: x[0]):
            for _, E in enumerate_moves(D, kinds, cap):
                ce = canonical_code(E)
                if ce in mine:
                    continue
                mine[ce] = code
                used += 1
                if ce in other:
                    fwd = _trace(parents[0], ce)[::-1]
                    bwd = _trace(parents[1], ce)[1:]
                    return fwd + bwd, used, False
                if used >= budget:
                    return None, used, True
                nxt.append((ce, E))
        frontiers[side] = nxt
    return None, used, False


def _trace(parents, code):
    out = []
    while code is not None:
        out.append(code)
        code = parents[code]
    return out


def _concretize(start: GaussDiagram, chain, kinds, cap) -> list:
    path = []
    D = start
    for target in chain[1:]:
        for m, E in enumerate_moves(D, kinds, cap):
            if canonical_code(E) == target:
                path.append(m)
                D = E
                break
        else:  # pragma: no cover
            raise MoveError(f"lost the path at {target}")
    return path
