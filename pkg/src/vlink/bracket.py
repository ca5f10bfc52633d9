"""Kauffman bracket state sum and normalized Jones polynomial.

At a chord with tail slot ``P`` and head slot ``Q`` the four short-arc ends
are ``in_P, out_P, in_Q, out_Q``.  The oriented smoothing joins ``in_P`` to
``out_Q`` and ``in_Q`` to ``out_P``; the other smoothing joins the two
incoming ends and the two outgoing ends.  The A-smoothing is the oriented one
at a positive chord and the other one at a negative chord.

The Jones polynomial is returned in ``q = t^(1/4)``, so ``A = q^-1``.
"""

from __future__ import annotations

from .gauss import GaussDiagram
from .laurent import LaurentPoly
from .linalg import BoundExceeded
from .numbering import _chord_arcs

__all__ = ["bracket_state_sum", "jones_polynomial", "jones_in_t", "STATE_BOUND"]

STATE_BOUND = 20


def _loops(nodes: int, joins) -> int:
    parent = list(range(nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = nodes
    for a, b in joins:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def bracket_state_sum(D: GaussDiagram) -> LaurentPoly:
    """``<D>`` in the variable ``A``, normalized so a chordless circle gives 1."""
    n = D.n
    if n > STATE_BOUND:
        raise BoundExceeded(f"{n} chords exceeds the state bound {STATE_BOUND}")
    arcs = [(c, i) for c, circ in enumerate(D.circles) for i in range(max(len(circ), 1))]
    index = {a: k for k, a in enumerate(arcs)}
    pairs = []  # (oriented joins, unoriented joins, sign) per chord
    for ch in D.chords.values():
        oi, oo, ui, uo = (index[a] for a in _chord_arcs(D, ch))
        pairs.append((((oi, uo), (ui, oo)), ((oi, ui), (oo, uo)), ch.sign))
    d = LaurentPoly({2: -1, -2: -1})
    # collect A-exponent and loop count, then expand once per distinct loop count
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        joins = []
        a_minus_b = 0
        for k, (orient, unorient, sign) in enumerate(pairs):
            use_a = not (state >> k) & 1
            a_minus_b += 1 if use_a else -1
            oriented = use_a == (sign > 0)
            joins.extend(orient if oriented else unorient)
        loops = _loops(len(arcs), joins)
        key = (a_minus_b, loops)
        tally[key] = tally.get(key, 0) + 1
    total = LaurentPoly({})
    dpow: dict[int, LaurentPoly] = {}
    for (e, loops), mult in sorted(tally.items()):
        if loops - 1 not in dpow:
            dpow[loops - 1] = d ** (loops - 1)
        total = total + LaurentPoly({e: mult}) * dpow[loops - 1]
    return total


def jones_polynomial(D: GaussDiagram) -> LaurentPoly:
    """``V(D)`` as a Laurent polynomial in ``q = t^(1/4)``."""
    br = bracket_state_sum(D)
    w = D.writhe
    norm = LaurentPoly({-3 * w: (-1) ** (w % 2)})
    in_a = norm * br
    return LaurentPoly({-e: c for e, c in in_a.terms.items()})


def jones_in_t(V: LaurentPoly) -> LaurentPoly | None:
    """Re-express a q-polynomial in ``t`` when all exponents are multiples of 4."""
    if any(e % 4 for e in V.terms):
        return None
    return LaurentPoly({e // 4: c for e, c in V.terms.items()})
