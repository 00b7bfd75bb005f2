import random

import pytest

from seifknot.homology import (
    AbelianGroup,
    bareiss_determinant,
    circulant_order,
    cokernel,
    first_homology,
    resultant,
    smith_normal_form,
    verify_snf_certificate,
)
from seifknot.presentations import (
    seifert_cyclic_presentation,
    standard_seifert_presentation,
)


def test_bareiss_determinant():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[1, 2], [3, 4]]) == -2
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_smith_normal_form_pinned():
    mat = [[4, 1], [1, 4]]
    d, u, v = smith_normal_form(mat)
    assert d == [[1, 0], [0, 15]]
    assert verify_snf_certificate(mat, d, u, v)


def test_smith_normal_form_rectangular():
    mat = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = smith_normal_form(mat)
    assert [d[i][i] for i in range(3)] == [2, 2, 156]
    assert verify_snf_certificate(mat, d, u, v)
    wide = [[1, 2, 3], [4, 5, 6]]
    d, u, v = smith_normal_form(wide)
    assert [d[i][i] for i in range(2)] == [1, 3]
    assert verify_snf_certificate(wide, d, u, v)


def test_snf_certificate_rejects_tampering():
    mat = [[4, 1], [1, 4]]
    d, u, v = smith_normal_form(mat)
    assert not verify_snf_certificate(mat, [[1, 0], [0, 14]], u, v)
    assert not verify_snf_certificate(mat, [[15, 0], [0, 1]], u, v)


def test_snf_random_certificates():
    rng = random.Random(11)
    for _ in range(150):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d, u, v = smith_normal_form(mat)
        assert verify_snf_certificate(mat, d, u, v)


def test_abelian_group_strings_and_orders():
    assert str(AbelianGroup(0, ())) == "0"
    assert str(AbelianGroup(2, ())) == "Z^2"
    assert str(AbelianGroup(1, (2,))) == "Z + Z/2"
    assert str(AbelianGroup(0, (3, 15))) == "Z/3 + Z/15"
    assert AbelianGroup(0, (3, 15)).order() == 45
    assert AbelianGroup(1, ()).order() is None
    assert AbelianGroup(0, ()).order() == 1
    assert AbelianGroup(0, ()).is_trivial


def test_abelian_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(0, (3, 4))  # not a divisibility chain
    with pytest.raises(ValueError):
        AbelianGroup(-1, ())
    with pytest.raises(ValueError):
        AbelianGroup(0, (0,))


def test_cokernel():
    assert cokernel([[2, 0], [0, 3]], 2) == AbelianGroup(0, (6,))
    assert cokernel([], 2) == AbelianGroup(2, ())
    assert cokernel([[0, 0]], 2) == AbelianGroup(2, ())
    assert cokernel([[1, 0], [0, 1]], 2) == AbelianGroup(0, ())
    assert cokernel([[2, 0]], 2) == AbelianGroup(1, (2,))


def test_first_homology_pinned():
    assert str(first_homology(seifert_cyclic_presentation(3, 2, 1, 1))) == "Z/2 + Z/2"
    assert str(first_homology(seifert_cyclic_presentation(2, 3, 2, 2))) == "Z/15"
    assert (
        str(first_homology(seifert_cyclic_presentation(4, 3, 2, 1)))
        == "Z/3 + Z/3 + Z/15"
    )


def test_first_homology_route_independence():
    for params in [(2, 3, 2, 2), (3, 2, 1, 1), (3, 5, 2, 1), (4, 3, 2, 1)]:
        cyclic = first_homology(seifert_cyclic_presentation(*params))
        standard = first_homology(standard_seifert_presentation(*params))
        assert cyclic == standard


def test_resultant_pinned():
    assert resultant([1, 0, 1], [-1, 0, 1]) == 4  # res(x^2+1, x^2-1)
    assert resultant([-1, 1], [1, 1]) == 2  # res(x-1, x+1)
    assert resultant([-1, 1], [-1, 0, 1]) == 0  # shared root at 1


def test_resultant_swap_sign():
    f = [3, 1, 2]
    g = [-1, 4, 0, 1]
    assert resultant(f, g) == (-1) ** (2 * 3) * resultant(g, f)
    h = [5, 1]
    assert resultant(h, f) == (-1) ** (1 * 2) * resultant(f, h)


def test_circulant_order():
    assert circulant_order([4, 1]) == 15
    assert circulant_order([1, 1, -1]) == 4
    assert circulant_order([1, -1]) == 0  # singular: infinite quotient
    assert circulant_order([2]) == 2


def test_circulant_order_matches_cokernel():
    for row in [[4, 1], [1, 1, -1], [3, 0, 1, 1], [2, -1, 0, -1]]:
        n = len(row)
        mat = [[row[(j - i) % n] for j in range(n)] for i in range(n)]
        group = cokernel(mat, n)
        order = group.order()
        assert circulant_order(row) == (0 if order is None else order)
