"""Long arcs, Wirtinger presentation, Fox Jacobian, coloring matrix,
determinant and Alexander polynomial of a Gauss diagram.

Convention at a chord with over arc ``v``, incoming under arc ``l`` and
outgoing under arc ``r``: the relation is ``x_l x_v^e x_r^-1 x_v^-e`` with
``e`` the chord sign, so the abelianized Fox row is
``(l: 1, r: -t^e, v: t^e - 1)``.  Specializing at ``t = -1`` gives the
negative of the coloring-matrix row.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gauss import GaussDiagram, is_visibly_split
from .laurent import ONE, ZERO, LaurentPoly
from .linalg import bareiss_det, determinantal_divisor, laurent_minor_gcd, minor
from .numbering import NumberingError, numbering

__all__ = [
    "LongArcStructure", "WirtingerPresentation", "long_arcs", "wirtinger",
    "fox_jacobian", "coloring_matrix", "determinant", "coloring_divisor",
    "elementary_ideal_gcd", "alexander_polynomial", "eval_at_minus_one",
    "is_alternating_poly", "mod_p_labeling", "mod_p_labeling_bruteforce",
    "PreconditionError",
]


class PreconditionError(ValueError):
    """The diagram does not satisfy what the requested invariant needs."""


@dataclass(frozen=True)
class LongArcStructure:
    """``arcs[k]`` lists the slots ``(circle, position)`` covered by arc ``k``
    (starting just after a head, or the whole circle if it has no head).
    ``incidence[label] = (over, incoming_under, outgoing_under)``."""

    arcs: tuple
    incidence: dict
    slot_arc: dict

    @property
    def m(self) -> int:
        return len(self.arcs)


def long_arcs(D: GaussDiagram) -> LongArcStructure:
    arcs = []
    slot_arc = {}
    for c, circ in enumerate(D.circles):
        L = len(circ)
        heads = [i for i, t in enumerate(circ) if t.kind == "U"]
        if not heads:
            arcs.append(tuple((c, i) for i in range(L)))
            for i in range(L):
                slot_arc[(c, i)] = len(arcs) - 1
            if L == 0:
                slot_arc[(c, 0)] = len(arcs) - 1
            continue
        for h_idx, h in enumerate(heads):
            nxt = heads[(h_idx + 1) % len(heads)]
            span = (nxt - h) % L or L
            slots = tuple((c, (h + s) % L) for s in range(1, span))
            arcs.append(slots)
            # slot h belongs to the outgoing arc for over/under bookkeeping
            slot_arc[(c, h, "out")] = len(arcs) - 1
            for sl in slots:
                slot_arc[sl] = len(arcs) - 1
    incidence = {}
    for lab, ch in D.chords.items():
        t, h = ch.tail, ch.head
        over = slot_arc[(t.circle, t.position)]
        outgoing = slot_arc[(h.circle, h.position, "out")]
        heads = [i for i, tok in enumerate(D.circles[h.circle]) if tok.kind == "U"]
        prev_head = heads[(heads.index(h.position) - 1) % len(heads)]
        incoming = slot_arc[(h.circle, prev_head, "out")]
        incidence[lab] = (over, incoming, outgoing)
    return LongArcStructure(tuple(arcs), incidence, slot_arc)


@dataclass(frozen=True)
class WirtingerPresentation:
    """Generators ``0..m-1``; each relation is a word of ``(generator, ±1)`` letters."""

    m: int
    relations: tuple
    labels: tuple


def wirtinger(D: GaussDiagram) -> WirtingerPresentation:
    la = long_arcs(D)
    rels = []
    for lab, ch in D.chords.items():
        v, l, r = la.incidence[lab]
        e = ch.sign
        rels.append(((l, 1), (v, e), (r, -1), (v, -e)))
    return WirtingerPresentation(la.m, tuple(rels), tuple(D.labels))


def _t_power(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


def fox_jacobian(P: WirtingerPresentation) -> list[list[LaurentPoly]]:
    """Abelianized Fox derivatives: entry ``(i, j)`` is d r_i / d x_j at x_* = t."""
    rows = []
    for word in P.relations:
        row = [ZERO] * P.m
        prefix = 0  # exponent of t for the abelianized prefix word
        for gen, e in word:
            if e == 1:
                row[gen] = row[gen] + _t_power(prefix)
            else:
                row[gen] = row[gen] - _t_power(prefix - 1)
            prefix += e
        rows.append(row)
    return rows


def coloring_matrix(D: GaussDiagram) -> list[list[int]]:
    """n x m integer matrix: 2 on the over arc, -1 on each under arc (summed when they coincide)."""
    la = long_arcs(D)
    B = []
    for lab in D.labels:
        v, l, r = la.incidence[lab]
        row = [0] * la.m
        row[v] += 2
        row[l] -= 1
        row[r] -= 1
        B.append(row)
    return B


def coloring_divisor(D: GaussDiagram) -> int:
    """gcd of the (m-1)-minors of the coloring matrix, defined for every diagram.

    This is the order of the torsion of the reduced coloring module (0 when
    it is infinite) and does not depend on the diagram chosen for a welded link.
    """
    B = coloring_matrix(D)
    m = long_arcs(D).m
    return determinantal_divisor(B, m - 1, ncols=m)


def determinant(D: GaussDiagram) -> int:
    """Link determinant of a checkerboard colorable diagram."""
    if numbering(D, 2) is None:
        raise PreconditionError("determinant needs a checkerboard colorable diagram")
    if D.n == 0:
        return 1 if D.k == 1 else 0
    if is_visibly_split(D):
        return 0
    B = coloring_matrix(D)
    m = len(B[0])
    if m == D.n:
        return abs(minor(B, [D.n - 1], [0]))
    return determinantal_divisor(B, m - 1, ncols=m)


def elementary_ideal_gcd(D: GaussDiagram, k: int) -> LaurentPoly:
    """Generator of the smallest principal ideal containing E_k (canonical form)."""
    if D.n == 0:
        raise PreconditionError("elementary ideals need at least one crossing")
    J = fox_jacobian(wirtinger(D))
    m = len(J[0])
    if not 1 <= k <= m:
        raise ValueError(f"k={k} out of range 1..{m}")
    return laurent_minor_gcd(J, m - k, m).canonical()


def alexander_polynomial(D: GaussDiagram, mode: str = "gcd") -> LaurentPoly:
    """Alexander polynomial in canonical form.

    ``mode="almost_classical"`` takes the single minor (drop last row and last
    column) and requires an Alexander numbering; ``mode="gcd"`` takes the gcd
    of all first-order minors.
    """
    if mode not in ("almost_classical", "gcd"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "almost_classical" and numbering(D, 0) is None:
        raise PreconditionError("diagram is not Alexander numberable")
    if D.n == 0:
        return ONE if D.k == 1 else ZERO
    if mode == "gcd":
        return elementary_ideal_gcd(D, 1)
    J = fox_jacobian(wirtinger(D))
    m = len(J[0])
    if m != D.n:
        return elementary_ideal_gcd(D, 1)
    n = D.n
    sub = [row[: n - 1] for row in J[: n - 1]]
    return bareiss_det(sub, one=ONE).canonical()


def eval_at_minus_one(p: LaurentPoly) -> int:
    return abs(p(-1))


def is_alternating_poly(p: LaurentPoly) -> bool:
    return p.is_alternating()


def _labeling_ok(D, la, labels, p):
    for lab in D.labels:
        v, l, r = la.incidence[lab]
        if (2 * labels[v] - labels[l] - labels[r]) % p:
            return False
    return len(set(labels)) >= 2


def mod_p_labeling(D: GaussDiagram, p: int) -> list[int] | None:
    """Long-arc labels in 0..p-1 with ``2x - y - z = 0 (mod p)`` at every
    crossing and at least two distinct labels, or ``None``."""
    from .numbering import _is_prime

    if not _is_prime(p):
        raise NumberingError(f"{p} is not prime")
    la = long_arcs(D)
    B = coloring_matrix(D)
    m = la.m
    if m < 2:
        return None
    # kernel of B mod p with x_0 = 0; any nonzero kernel vector gives a labeling
    vec = _nullvector_mod_p([row[1:] for row in B], m - 1, p)
    if vec is None:
        return None
    labels = [0] + vec
    assert _labeling_ok(D, la, labels, p)
    return labels


def _nullvector_mod_p(rows, ncols, p):
    a = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = [0] * ncols
    x[f] = 1
    for i, c in enumerate(pivots):
        x[c] = (-a[i][f]) % p
    return x


def mod_p_labeling_bruteforce(D: GaussDiagram, p: int) -> list[int] | None:
    """Exhaustive search over all p^m long-arc labelings (oracle for small diagrams)."""
    la = long_arcs(D)
    for labels in product(range(p), repeat=la.m):
        if _labeling_ok(D, la, list(labels), p):
            return list(labels)
    return None
