"""The Alexander polynomial of an alternating almost classical knot, read off
from rooted trees in its source-sink graph, next to the Fox-calculus value."""

from vlink import (
    alexander_polynomial, alexander_via_trees, count_eulerian_circuits, count_rooted_trees,
    enumerate_arborescences, source_sink_graph,
)
from vlink.fixtures import fixture

for name in ("trefoil", "figure-eight", "5_2"):
    D = fixture(name)
    G = source_sink_graph(D, valuated=True)
    trees = enumerate_arborescences(G, 0)
    print(f"{name}: {G.n} vertices, {len(G.edges)} edges, {len(trees)} rooted trees")
    for a in trees[:4]:
        print("   ", a.weight(G))
    if len(trees) > 4:
        print("    ...")
    print("  via trees:", alexander_via_trees(D))
    print("  via Fox:  ", alexander_polynomial(D, "almost_classical"))
    U = G.unweighted()
    print("  Eulerian circuits:", count_eulerian_circuits(U), " trees at 0:", count_rooted_trees(U, 0))
    print()
