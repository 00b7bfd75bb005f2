"""First homology computed three independent ways.

The abelianization of a presented group is the cokernel of its exponent
matrix, computed exactly via Smith normal form. For a cyclic
presentation the relation matrix is circulant, so the order of the
abelianization is also a resultant of two integer polynomials. This
script runs all three routes over a small parameter grid and shows they
never disagree.
"""

from seifknot import (
    circulant_order,
    first_homology,
    seifert_cyclic_presentation,
    seifert_parameter_grid,
    standard_seifert_presentation,
)


def main() -> None:
    header = f"{'(n,p,q,l)':<14} {'cyclic route':<18} {'geometric route':<18} resultant"
    print(header)
    print("-" * len(header))
    for n, p, q, l in seifert_parameter_grid(4, 5, 2):
        cyclic = first_homology(seifert_cyclic_presentation(n, p, q, l))
        standard = first_homology(standard_seifert_presentation(n, p, q, l))
        row = seifert_cyclic_presentation(n, p, q, l).relation_matrix()[0]
        order = circulant_order(row)
        resultant_text = "infinite" if order == 0 else str(order)
        agree = cyclic == standard and (cyclic.order() or 0) == order
        flag = "" if agree else "  <-- DISAGREE"
        print(
            f"({n},{p},{q},{l})".ljust(14)
            + f"{cyclic!s:<18} {standard!s:<18} {resultant_text}{flag}"
        )
    print()
    print("Smith normal form on either presentation and the resultant of the")
    print("circulant row polynomial all report the same abelian group order.")


if __name__ == "__main__":
    main()
