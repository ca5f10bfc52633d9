"""Gauss diagrams of virtual links.

A diagram is a list of oriented circles; each circle is a cyclic sequence of
tokens ``O<label><sign>`` (over-crossing, the arrow tail) and
``U<label><sign>`` (under-crossing, the arrow head).  Every label occurs
exactly twice, once as ``O`` and once as ``U``, with the same sign.

Text grammar::

    diagram := circle (';' circle)*
    circle  := '*' | token+
    token   := ('O' | 'U') uint ('+' | '-')

Whitespace and commas between tokens are ignored.  A chordless circle is
written ``*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "ChordSign", "Token", "Endpoint", "Chord", "GaussDiagram", "DiagramStats",
    "GaussCodeError", "parse_gauss_code", "serialize", "canonical_code", "stats",
    "is_alternating", "is_visibly_split", "oriented_smoothing", "find_nugatory",
    "reduce", "delete_chord", "connected_sum", "is_semi_alternating", "gaps",
]


class GaussCodeError(ValueError):
    """Malformed Gauss code; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ChordSign(Enum):
    POSITIVE = 1
    NEGATIVE = -1

    @property
    def symbol(self) -> str:
        return "+" if self is ChordSign.POSITIVE else "-"


class Token(NamedTuple):
    label: int
    kind: str  # "O" (tail, over) or "U" (head, under)
    sign: int  # +1 or -1

    def __str__(self):
        return f"{self.kind}{self.label}{'+' if self.sign > 0 else '-'}"

    @property
    def is_tail(self) -> bool:
        return self.kind == "O"


class Endpoint(NamedTuple):
    circle: int
    position: int
    kind: str  # "tail" or "head"


class Chord(NamedTuple):
    label: int
    tail: Endpoint
    head: Endpoint
    sign: int

    @property
    def is_self(self) -> bool:
        return self.tail.circle == self.head.circle


class DiagramStats(NamedTuple):
    n: int
    k: int
    writhe: int
    components: list


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable Gauss diagram.  Construct with :func:`parse_gauss_code` or
    :meth:`from_circles`; the constructor validates the chord structure."""

    circles: tuple

    def __post_init__(self):
        circles = tuple(tuple(Token(*t) for t in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        if not circles:
            raise GaussCodeError("a diagram needs at least one circle")
        seen: dict[int, list[Token]] = {}
        for c in circles:
            for t in c:
                if t.kind not in ("O", "U") or t.sign not in (1, -1) or t.label < 1:
                    raise GaussCodeError(f"bad token {t!r}")
                seen.setdefault(t.label, []).append(t)
        for label, toks in seen.items():
            if len(toks) != 2:
                raise GaussCodeError(f"label {label} appears {len(toks)} times, expected 2")
            if toks[0].kind == toks[1].kind:
                raise GaussCodeError(f"label {label} has two {toks[0].kind} occurrences")
            if toks[0].sign != toks[1].sign:
                raise GaussCodeError(f"sign mismatch on label {label}")

    @classmethod
    def from_circles(cls, circles: Iterable[Iterable]) -> "GaussDiagram":
        return cls(tuple(tuple(Token(*t) for t in c) for c in circles))

    # derived structure
    @cached_property
    def chords(self) -> dict[int, Chord]:
        tails, heads, signs = {}, {}, {}
        for ci, c in enumerate(self.circles):
            for pi, t in enumerate(c):
                if t.kind == "O":
                    tails[t.label] = Endpoint(ci, pi, "tail")
                else:
                    heads[t.label] = Endpoint(ci, pi, "head")
                signs[t.label] = t.sign
        return {lab: Chord(lab, tails[lab], heads[lab], signs[lab]) for lab in sorted(signs)}

    @property
    def labels(self) -> list[int]:
        return list(self.chords)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @property
    def k(self) -> int:
        return len(self.circles)

    @property
    def writhe(self) -> int:
        return sum(ch.sign for ch in self.chords.values())

    def max_label(self) -> int:
        return max(self.chords, default=0)

    def __str__(self):
        return serialize(self)


_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse the text grammar into a validated :class:`GaussDiagram`."""
    circles: list[list[Token]] = []
    current: list[Token] = []
    star = False
    pos = 0
    n = len(text)
    while True:
        while pos < n and (text[pos].isspace() or text[pos] == ","):
            pos += 1
        if pos >= n or text[pos] == ";":
            if not current and not star:
                raise GaussCodeError("empty circle", pos)
            circles.append(current)
            current, star = [], False
            if pos >= n:
                break
            pos += 1
            continue
        if text[pos] == "*":
            if current or star:
                raise GaussCodeError("'*' must stand alone in its circle", pos)
            star = True
            pos += 1
            continue
        if star:
            raise GaussCodeError("'*' must stand alone in its circle", pos)
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise GaussCodeError(f"unexpected character {text[pos]!r}", pos)
        current.append(Token(int(m.group(2)), m.group(1), 1 if m.group(3) == "+" else -1))
        pos = m.end()
    return GaussDiagram(tuple(tuple(c) for c in circles))


def serialize(D: GaussDiagram) -> str:
    return ";".join("".join(map(str, c)) if c else "*" for c in D.circles)


def _rotations(circle: Sequence[Token]):
    L = len(circle)
    if L == 0:
        yield ()
        return
    for r in range(L):
        yield tuple(circle[r:]) + tuple(circle[:r])


def _encode(seq: Sequence[Token], relabel: dict[int, int]) -> str:
    if not seq:
        return "*"
    out = []
    for t in seq:
        lab = relabel.get(t.label)
        if lab is None:
            lab = relabel[t.label] = len(relabel) + 1
        out.append(f"{t.kind}{lab}{'+' if t.sign > 0 else '-'}")
    return "".join(out)


def canonical_code(D: GaussDiagram) -> str:
    """Lexicographically least serialization over circle rotations, circle
    orderings and first-traversal relabelings.  Equal codes mean isomorphic
    diagrams."""
    circles = D.circles
    if len(circles) == 1:
        best = None
        for rot in _rotations(circles[0]):
            s = _encode(rot, {})
            if best is None or s < best:
                best = s
        return best
    best: list[str | None] = [None]

    def extend(prefix: str, relabel: dict[int, int], remaining: tuple[int, ...]):
        if not remaining:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        options = []
        for idx in remaining:
            for rot in _rotations(circles[idx]):
                rl = dict(relabel)
                s = prefix + (";" if prefix else "") + _encode(rot, rl)
                options.append((s, idx, rl))
        options.sort(key=lambda o: o[0])
        for s, idx, rl in options:
            b = best[0]
            if b is not None and s > b[: len(s)] and not b.startswith(s):
                break
            extend(s, rl, tuple(i for i in remaining if i != idx))

    extend("", {}, tuple(range(len(circles))))
    return best[0]


def _components(D: GaussDiagram) -> list[list[int]]:
    parent = list(range(D.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ch in D.chords.values():
        a, b = find(ch.tail.circle), find(ch.head.circle)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(D.k):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def stats(D: GaussDiagram) -> DiagramStats:
    return DiagramStats(D.n, D.k, D.writhe, _components(D))


def is_alternating(D: GaussDiagram) -> bool:
    """Heads and tails alternate around every circle.  A circle with a single
    endpoint is not alternating; a chordless circle is."""
    for c in D.circles:
        L = len(c)
        if L == 0:
            continue
        if L % 2:
            return False
        if any(c[i].kind == c[(i + 1) % L].kind for i in range(L)):
            return False
    return True


def is_visibly_split(D: GaussDiagram) -> bool:
    return len(_components(D)) >= 2


def oriented_smoothing(D: GaussDiagram, label: int) -> GaussDiagram:
    """Remove a chord and reconnect the strands following the orientation."""
    ch = D.chords.get(label)
    if ch is None:
        raise KeyError(f"unknown chord label {label}")
    circles = [list(c) for c in D.circles]
    a, i = ch.tail.circle, ch.tail.position
    b, j = ch.head.circle, ch.head.position
    if a == b:
        c = circles[a]
        i, j = min(i, j), max(i, j)
        outer = c[j + 1:] + c[:i]
        inner = c[i + 1:j]
        new = circles[:a] + [outer, inner] + circles[a + 1:]
    else:
        ca, cb = circles[a], circles[b]
        merged = ca[i + 1:] + ca[:i] + cb[j + 1:] + cb[:j]
        lo, hi = min(a, b), max(a, b)
        new = [merged if idx == lo else c for idx, c in enumerate(circles) if idx != hi]
    return GaussDiagram(tuple(tuple(c) for c in new))


def delete_chord(D: GaussDiagram, label: int) -> GaussDiagram:
    if label not in D.chords:
        raise KeyError(f"unknown chord label {label}")
    return GaussDiagram(tuple(tuple(t for t in c if t.label != label) for c in D.circles))


def find_nugatory(D: GaussDiagram) -> list[int]:
    """Self-chords whose oriented smoothing disconnects their component."""
    base = len(_components(D))
    out = []
    for lab, ch in D.chords.items():
        if not ch.is_self:
            continue
        if len(_components(oriented_smoothing(D, lab))) > base:
            out.append(lab)
    return out


def reduce(D: GaussDiagram) -> GaussDiagram:
    """Delete nugatory chords one at a time, lowest label first, until none remain."""
    while True:
        nug = find_nugatory(D)
        if not nug:
            return D
        D = delete_chord(D, nug[0])


def gaps(D: GaussDiagram) -> list[tuple[int, int]]:
    """All insertion points ``(circle, gap)``; gap ``g`` sits just before position ``g``."""
    return [(ci, g) for ci, c in enumerate(D.circles) for g in range(max(len(c), 1))]


def _check_gap(D: GaussDiagram, p) -> tuple[int, int]:
    ci, g = p
    if not 0 <= ci < D.k:
        raise ValueError(f"no circle {ci}")
    L = len(D.circles[ci])
    if not 0 <= g <= max(L - 1, 0) and not (g == L):
        raise ValueError(f"invalid gap {g} on circle {ci}")
    return ci, g % L if L else 0


def connected_sum(D1: GaussDiagram, p1, D2: GaussDiagram, p2) -> GaussDiagram:
    """Splice the circle of ``D2`` at gap ``p2`` into the circle of ``D1`` at gap ``p1``.

    Labels of ``D2`` are shifted by the largest label of ``D1``.
    """
    a, g1 = _check_gap(D1, p1)
    b, g2 = _check_gap(D2, p2)
    shift = D1.max_label()
    c2 = [[Token(t.label + shift, t.kind, t.sign) for t in c] for c in D2.circles]
    A = list(D1.circles[a])
    B = c2[b]
    spliced = A[:g1] + B[g2:] + B[:g2] + A[g1:]
    circles = [spliced if i == a else list(c) for i, c in enumerate(D1.circles)]
    circles += [c for i, c in enumerate(c2) if i != b]
    return GaussDiagram(tuple(tuple(c) for c in circles))


def _prime_cuts(D: GaussDiagram):
    """Yield ``(D1, D2)`` with ``D = D1 # D2`` along a single circle, both summands nontrivial."""
    comps = _components(D)
    circle_comp = {ci: k for k, comp in enumerate(comps) for ci in comp}
    for ci, c in enumerate(D.circles):
        L = len(c)
        if L < 4:
            continue
        others = [i for i in comps[circle_comp[ci]] if i != ci]
        for start in range(L):
            for length in range(2, L - 1):
                inside = [c[(start + s) % L] for s in range(length)]
                outside = [c[(start + length + s) % L] for s in range(L - length)]
                in_labels = {t.label for t in inside}
                out_labels = {t.label for t in outside}
                if in_labels & out_labels:
                    continue
                # attach the remaining circles of the component to one side
                side_of: dict[int, int] = {}
                ok = True
                changed = True
                labs = [in_labels, out_labels]
                while changed and ok:
                    changed = False
                    for oc in others:
                        ol = {t.label for t in D.circles[oc]}
                        hit = [s for s in (0, 1) if ol & labs[s]]
                        if len(hit) == 2:
                            ok = False
                            break
                        if hit and oc not in side_of:
                            side_of[oc] = hit[0]
                            labs[hit[0]] = labs[hit[0]] | ol
                            changed = True
                if not ok:
                    continue
                parts = []
                for s, seq in ((0, inside), (1, outside)):
                    extra = [D.circles[oc] for oc in others if side_of.get(oc) == s]
                    parts.append(GaussDiagram(tuple([tuple(seq)] + [tuple(e) for e in extra])))
                yield parts[0], parts[1]


def is_semi_alternating(D: GaussDiagram, _memo=None) -> bool:
    """True if ``D`` is alternating or a connected sum of alternating diagrams."""
    if _memo is None:
        _memo = {}
    if is_alternating(D):
        return True
    key = canonical_code(D)
    if key in _memo:
        return _memo[key]
    _memo[key] = False
    comps = _components(D)
    if len(comps) > 1:
        result = all(is_semi_alternating(_restrict(D, comp), _memo) for comp in comps)
    else:
        result = any(is_semi_alternating(a, _memo) and is_semi_alternating(b, _memo)
                     for a, b in _prime_cuts(D))
    _memo[key] = result
    return result


def _restrict(D: GaussDiagram, circles: Iterable[int]) -> GaussDiagram:
    return GaussDiagram(tuple(D.circles[i] for i in circles))
