"""4.106 and 4.107 are welded equivalent but not related by virtual moves.

The virtual search exhausts the 6-chord space; allowing the forbidden move F1
finds a short path, which is replayed here step by step.
"""

from vlink import canonical_code, equivalent_bounded, serialize
from vlink.fixtures import fixture
from vlink.moves import VIRTUAL_MOVES, WELDED_MOVES, apply_move

A, B = fixture("4.106"), fixture("4.107")

v = equivalent_bounded(A, B, VIRTUAL_MOVES, 6, 1_000_000)
print(f"virtual: {v.status} after {v.explored} states (budget hit: {v.bound_hit})")

w = equivalent_bounded(A, B, WELDED_MOVES, 6, 1_000_000)
print(f"welded:  {w.status} after {w.explored} states, {len(w.path)} moves\n")

D = A
print(f"   start  {serialize(D)}")
for m in w.path:
    D = apply_move(D, m)
    print(f"{m.kind.value:>9}  {serialize(D)}")
assert canonical_code(D) == canonical_code(B)
