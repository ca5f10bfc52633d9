"""Walk through the bundled fixtures and print their main invariants.

Run with ``python demos/invariants_tour.py``.
"""

from vlink import (
    alexander_polynomial, coloring_divisor, determinant, is_checkerboard_colorable,
    is_cheng_colorable, jones_polynomial, vlk_table,
)
from vlink.fixtures import load_fixtures
from vlink.numbering import is_almost_classical_diagram


def row(name, D):
    det = determinant(D) if is_checkerboard_colorable(D) else "-"
    mode = "almost_classical" if is_almost_classical_diagram(D) else "gcd"
    delta = alexander_polynomial(D, mode)
    V = jones_polynomial(D).format("t", 4)
    return f"{name:<18} n={D.n:<2} det={det!s:<3} div={coloring_divisor(D):<3} cheng={is_cheng_colorable(D)!s:<5}  Δ={delta}  V={V}"


def main():
    for name, rec in load_fixtures().items():
        print(row(name, rec.diagram))

    hopf = load_fixtures()["virtual-hopf"].diagram
    print("\nvirtual Hopf link linking numbers:", vlk_table(hopf))


if __name__ == "__main__":
    main()
