"""Independent reference computations used by the tests.

Nothing here imports the algorithmic parts of ``vlink``; only the diagram
container and the Laurent polynomial type are shared.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from vlink.gauss import GaussDiagram, Token
from vlink.laurent import LaurentPoly

# KnotInfo PD codes with their tabulated values (variable t, Jones in t).
KNOTINFO = {
    "3_1": {
        "pd": [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]],
        "jones": {1: 1, 3: 1, 4: -1},
        "alexander": {0: 1, 1: -1, 2: 1},
        "determinant": 3,
    },
    "4_1": {
        "pd": [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
        "jones": {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1},
        "alexander": {0: 1, 1: -3, 2: 1},
        "determinant": 5,
    },
    "5_2": {
        "pd": [[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]],
        "jones": {1: 1, 2: -1, 3: 2, 4: -1, 5: 1, 6: -1},
        "alexander": {0: 2, 1: -3, 2: 2},
        "determinant": 7,
    },
    "8_20": {
        "pd": [[1, 7, 2, 6], [4, 13, 5, 14], [5, 9, 6, 8], [7, 3, 8, 2],
               [10, 15, 11, 16], [12, 9, 13, 10], [14, 3, 15, 4], [16, 11, 1, 12]],
        "jones": {-5: -1, -4: 1, -3: -1, -2: 2, -1: -1, 0: 2, 1: -1},
        "alexander": {0: 1, 1: -2, 2: 3, 3: -2, 4: 1},
        "determinant": 9,
    },
}


def pd_to_gauss(pd) -> str:
    """Gauss code of a single-component PD code.

    The crossing ``[a, b, c, d]`` has its under strand entering on ``a``; it is
    positive when the over strand runs ``d -> b``.
    """
    m = 2 * len(pd)
    events = []
    for x, (a, b, c, d) in enumerate(pd, 1):
        positive = b == d % m + 1
        s = "+" if positive else "-"
        events.append((a, "U", x, s))
        events.append((d if positive else b, "O", x, s))
    events.sort()
    return "".join(f"{k}{x}{s}" for _, k, x, s in events)


# ------------------------------------------------------------------ arcs

def short_arcs(D: GaussDiagram):
    """Arc ``(c, i)`` runs from slot ``i`` to slot ``i+1`` of circle ``c``."""
    return [(c, i) for c, circ in enumerate(D.circles) for i in range(len(circ))]


def chord_ends(D: GaussDiagram, label: int):
    """``(over_in, over_out, under_in, under_out, sign)`` short arcs at a chord."""
    out = {}
    for c, circ in enumerate(D.circles):
        L = len(circ)
        for i, t in enumerate(circ):
            if t.label == label:
                out[t.kind] = ((c, (i - 1) % L), (c, i), t.sign)
    (oi, oo, s), (ui, uo, _) = out["O"], out["U"]
    return oi, oo, ui, uo, s


def index_criterion(D: GaussDiagram) -> bool:
    """A one-circle diagram is Alexander numberable iff every chord has index 0.

    The index of a chord is the signed count of chords with exactly one end
    on the arc from its tail to its head.
    """
    assert D.k == 1
    circ = D.circles[0]
    N = len(circ)
    pos = {(t.label, t.kind): i for i, t in enumerate(circ)}
    sign = {t.label: t.sign for t in circ}
    for a in sign:
        t, h = pos[(a, "O")], pos[(a, "U")]
        inside = lambda x: 0 < (x - t) % N < (h - t) % N
        idx = 0
        for b in sign:
            if b == a:
                continue
            tb, hb = inside(pos[(b, "O")]), inside(pos[(b, "U")])
            if hb and not tb:
                idx += sign[b]
            elif tb and not hb:
                idx -= sign[b]
        if idx:
            return False
    return True


def checkerboard_bruteforce(D: GaussDiagram) -> bool:
    """Search all 0/1 labelings of the short arcs for a mod 2 numbering."""
    arcs = short_arcs(D)
    ends = [chord_ends(D, lab) for lab in D.labels]
    for bits in itertools.product((0, 1), repeat=len(arcs)):
        v = dict(zip(arcs, bits))
        if all(v[oo] != v[oi] and v[ui] == v[oo] and v[uo] == v[oi] for oi, oo, ui, uo, _ in ends):
            return True
    return False


# --------------------------------------------------------------- colorings

def long_arc_classes(D: GaussDiagram):
    """Union of short arcs through over-crossings; returns ``arc -> class``."""
    arcs = short_arcs(D)
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for lab in D.labels:
        oi, oo, *_ = chord_ends(D, lab)
        parent[find(oi)] = find(oo)
    roots = sorted({find(a) for a in arcs})
    return {a: roots.index(find(a)) for a in arcs}, len(roots)


def fox_colorings_mod_p(D: GaussDiagram, p: int) -> int:
    """Number of assignments ``long arcs -> Z/p`` with ``2v = l + r`` at every chord."""
    cls, m = long_arc_classes(D)
    rels = []
    for lab in D.labels:
        oi, _, ui, uo, _ = chord_ends(D, lab)
        rels.append((cls[oi], cls[ui], cls[uo]))
    free = sum(1 for c in D.circles if not c)  # chordless circles are unconstrained
    count = 0
    for vals in itertools.product(range(p), repeat=m):
        if all((2 * vals[v] - vals[l] - vals[r]) % p == 0 for v, l, r in rels):
            count += 1
    return count * p ** free


def has_nontrivial_coloring(D: GaussDiagram, p: int) -> bool:
    # the p constant colorings are always there
    return fox_colorings_mod_p(D, p) > p


def laplace_det(M) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            sub = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * laplace_det(sub)
    return total


def fraction_det(M) -> int:
    """Gaussian elimination over the rationals."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            for k in range(c, n):
                A[r][k] -= f * A[c][k]
    assert det.denominator == 1
    return int(det)


# ----------------------------------------------------------------- bracket

def bracket_by_walking(D: GaussDiagram) -> LaurentPoly:
    """State sum with loops counted by walking the smoothed curves.

    Each short arc is a node; at a chord the smoothing tells which arc is
    entered after leaving another.  Loops are the orbits of that walk.
    """
    labels = D.labels
    ends = {lab: chord_ends(D, lab) for lab in labels}
    empty = sum(1 for c in D.circles if not c)
    arcs = short_arcs(D)
    total = {}
    for state in itertools.product((True, False), repeat=len(labels)):
        nxt = {}  # (arc, "start"|"end") -> the arc end it is joined to
        a_minus_b = 0
        for lab, use_a in zip(labels, state):
            oi, oo, ui, uo, s = ends[lab]
            oriented = use_a == (s > 0)
            a_minus_b += 1 if use_a else -1
            if oriented:
                pairs = [(oi, "end", uo, "start"), (ui, "end", oo, "start")]
            else:
                pairs = [(oi, "end", ui, "end"), (oo, "start", uo, "start")]
            for x, xe, y, ye in pairs:
                nxt[(x, xe)] = (y, ye)
                nxt[(y, ye)] = (x, xe)
        seen = set()
        loops = empty
        for a in arcs:
            if a in seen:
                continue
            loops += 1
            here = (a, "end")
            while True:
                seen.add(here[0])
                arc, side = nxt[here]
                if (arc, side) == (a, "start"):
                    break
                here = (arc, "end" if side == "start" else "start")  # run along the arc
        total[(a_minus_b, loops)] = total.get((a_minus_b, loops), 0) + 1
    d = LaurentPoly({2: -1, -2: -1})
    out = LaurentPoly({})
    for (e, loops), c in total.items():
        out = out + LaurentPoly({e: c}) * d ** (loops - 1)
    return out


# ------------------------------------------------------------------- graphs

def arborescences_by_subsets(n: int, edges, root: int = 0) -> LaurentPoly:
    """Weighted count over all (n-1)-subsets of edges forming an out-tree at root."""
    total = LaurentPoly({})
    for sub in itertools.combinations(range(len(edges)), n - 1):
        indeg = [0] * n
        for k in sub:
            indeg[edges[k][1]] += 1
        if indeg[root] or any(indeg[v] != 1 for v in range(n) if v != root):
            continue
        reach = {root}
        grew = True
        while grew:
            grew = False
            for k in sub:
                s, d = edges[k][0], edges[k][1]
                if s in reach and d not in reach:
                    reach.add(d)
                    grew = True
        if len(reach) == n:
            w = LaurentPoly({0: 1})
            for k in sub:
                w = w * (edges[k][2] if len(edges[k]) > 2 else LaurentPoly({0: 1}))
            total = total + w
    return total


def eulerian_circuits_by_dfs(n: int, edges) -> int:
    """Circuits as cyclic edge sequences: count those starting with edge 0."""
    if not edges:
        return 0
    used = [False] * len(edges)
    out_of = [[k for k, e in enumerate(edges) if e[0] == v] for v in range(n)]
    start = edges[0][0]

    def go(v, left):
        if left == 0:
            return 1 if v == start else 0
        total = 0
        for k in out_of[v]:
            if not used[k]:
                used[k] = True
                total += go(edges[k][1], left - 1)
                used[k] = False
        return total

    used[0] = True
    return go(edges[0][1], len(edges) - 1)


def best_formula(n: int, edges, trees_at_root0: int) -> int:
    prod = 1
    for v in range(n):
        prod *= math.factorial(sum(1 for e in edges if e[0] == v) - 1)
    return trees_at_root0 * prod


# ---------------------------------------------------------------- R3 shapes

def geometric_r3_patterns(samples: int = 20000, seed: int = 1) -> set:
    """Sign/order patterns of three random straight lines with random heights.

    ``T``, ``M``, ``B`` are the top, middle and bottom lines; chord ``a`` is the
    crossing T/M, ``b`` is T/B and ``c`` is M/B.  A crossing is positive when
    the under direction is a counterclockwise turn from the over direction.
    """
    rng = random.Random(seed)

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    pats = set()
    for _ in range(samples):
        lines = []
        for _ in range(3):
            th = rng.uniform(0, 2 * math.pi)
            lines.append(((rng.uniform(-1, 1), rng.uniform(-1, 1)), (math.cos(th), math.sin(th))))
        par = {}
        ok = True
        for i, j in itertools.combinations(range(3), 2):
            (oi, di), (oj, dj) = lines[i], lines[j]
            den = cross(di, dj)
            if abs(den) < 1e-3:
                ok = False
                break
            w = (oj[0] - oi[0], oj[1] - oi[1])
            par[(i, j)] = cross(w, dj) / den
            par[(j, i)] = cross(w, di) / den
        if not ok:
            continue
        T, M, B = rng.sample(range(3), 3)
        d = lambda k: lines[k][1]
        ea = 1 if cross(d(T), d(M)) > 0 else -1
        eb = 1 if cross(d(T), d(B)) > 0 else -1
        ec = 1 if cross(d(M), d(B)) > 0 else -1
        fT = "a" if par[(T, M)] < par[(T, B)] else "b"
        fM = "a" if par[(M, T)] < par[(M, B)] else "c"
        fB = "b" if par[(B, T)] < par[(B, M)] else "c"
        pats.add((ea, eb, ec, fT, fM, fB))
    return pats


def embed_r3(rng: random.Random, pattern, extra: int) -> GaussDiagram:
    """A one-circle diagram containing the R3 triangle ``pattern`` on chords
    1, 2, 3 plus ``extra`` random chords, blocks shuffled."""
    ea, eb, ec, fT, fM, fB = pattern
    T = [Token(1, "O", ea), Token(2, "O", eb)]
    if fT == "b":
        T.reverse()
    M = [Token(1, "U", ea), Token(3, "O", ec)]
    if fM == "c":
        M.reverse()
    B = [Token(2, "U", eb), Token(3, "U", ec)]
    if fB == "c":
        B.reverse()
    blocks = [T, M, B]
    for lab in range(4, 4 + extra):
        s = rng.choice((1, -1))
        blocks += [[Token(lab, "O", s)], [Token(lab, "U", s)]]
    rng.shuffle(blocks)
    return GaussDiagram((tuple(t for bl in blocks for t in bl),))
