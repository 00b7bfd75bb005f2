"""One abelian invariant reached from three unrelated directions.

A built-in two-relator knot group presentation has an Alexander
polynomial computed by Fox calculus. Its value at -1 (the knot
determinant) must equal the order of the first homology of the double
branched cover, which this package computes separately by Smith normal
form and by a resultant. The script also counts homomorphisms into
small symmetric groups from both presentations of that cover's group,
a non-abelian invariant that is blind to presentation choice.
"""

from seifknot import (
    alexander_polynomial,
    circulant_order,
    count_homomorphisms,
    example_knot_presentation,
    first_homology,
    fox_derivative,
    seifert_cyclic_presentation,
    standard_seifert_presentation,
    symmetric_group,
)

COVER_PARAMS = (2, 3, 2, 2)


def main() -> None:
    pres = example_knot_presentation()
    print(f"knot group presentation: {pres}")
    for gen in range(1, pres.num_generators + 1):
        name = pres.generators[gen - 1]
        print(f"  d r1 / d {name} = {fox_derivative(pres.relators[0], gen)}")
    delta = alexander_polynomial(pres)
    determinant = abs(delta(-1))
    print(f"Alexander polynomial  {delta}")
    print(f"determinant |Delta(-1)| = {determinant}")
    print()

    cyclic = seifert_cyclic_presentation(*COVER_PARAMS)
    h1 = first_homology(cyclic)
    row = cyclic.relation_matrix()[0]
    print(f"double branched cover parameters {COVER_PARAMS}")
    print(f"  H1 by Smith normal form {h1} (order {h1.order()})")
    print(f"  order by resultant      {circulant_order(row)}")
    print(f"  all three agree: {determinant == h1.order() == circulant_order(row)}")
    print()

    standard = standard_seifert_presentation(*COVER_PARAMS)
    for m in (3, 4):
        elements = symmetric_group(m)
        a = count_homomorphisms(cyclic, elements)
        b = count_homomorphisms(standard, elements)
        print(f"homomorphisms into S{m}: cyclic {a}, geometric {b}, equal {a == b}")


if __name__ == "__main__":
    main()
