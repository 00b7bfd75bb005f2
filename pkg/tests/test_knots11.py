import pytest

from seifknot.homology import first_homology
from seifknot.knots11 import (
    CoveredKnot,
    KnotParams,
    UnsupportedTwist,
    band_swap,
    coincident_seifert_params,
    knot_from_seifert,
    lens_closed_form,
    lens_name,
    normalize_lens,
    reduce_to_lens,
    swap,
)
from seifknot.presentations import seifert_cyclic_presentation


def test_normalize_lens_pinned():
    assert normalize_lens(1, 5) == (1, 0)
    assert normalize_lens(0, 1) == (0, 1)
    assert normalize_lens(0, -1) == (0, 1)
    assert normalize_lens(5, 4) == (5, 1)
    assert normalize_lens(7, 3) == (7, 2)  # 3 * 5 = 1 mod 7
    assert normalize_lens(7, 2) == (7, 2)
    assert normalize_lens(-7, 3) == (7, 2)
    assert normalize_lens(5, 7) == (5, 2)


def test_normalize_lens_rejects_non_coprime():
    with pytest.raises(ValueError):
        normalize_lens(4, 2)
    with pytest.raises(ValueError):
        normalize_lens(0, 2)
    with pytest.raises(ValueError):
        normalize_lens(0, 0)


def test_lens_name():
    assert lens_name((1, 0)) == "S^3"
    assert lens_name((0, 1)) == "S^2 x S^1"
    assert lens_name((7, 2)) == "L(7,2)"


def test_knot_params_validation():
    with pytest.raises(ValueError):
        KnotParams(-1, 0, 2, 0)
    with pytest.raises(ValueError):
        KnotParams(0, 0, 0, 1)
    k = KnotParams(1, 2, 3, 11)
    assert k.period == 7
    assert k.twist == 4
    assert str(k) == "K(1,2,3,11)"


def test_swap_and_band_swap():
    k = KnotParams(1, 2, 3, 4)
    assert swap(swap(k)) == KnotParams(1, 2, 3, k.twist)
    flat = KnotParams(2, 0, 3, 4)
    assert band_swap(flat) == KnotParams(2, 3, 0, 4)
    assert band_swap(band_swap(flat)) == flat
    with pytest.raises(ValueError):
        band_swap(k)  # needs an empty band


def test_reduction_pinned_traces():
    lens, trace = reduce_to_lens(KnotParams(2, 1, 3, 2))
    assert lens == (4, 1)
    assert [label for label, _ in trace] == ["III", "III"]

    lens, trace = reduce_to_lens(KnotParams(1, 2, 3, 4))
    assert lens == (1, 0)
    assert [label for label, _ in trace] == ["swap", "IV", "IV", "swap0", "I"]

    lens, trace = reduce_to_lens(KnotParams(2, 0, 5, 2))
    assert lens == (5, 2)
    assert trace == []

    lens, trace = reduce_to_lens(KnotParams(5, 0, 2, 5))
    assert lens == (2, 1)
    assert [label for label, _ in trace] == ["I", "I"]


def test_reduction_terminal_spheres():
    lens, _ = reduce_to_lens(KnotParams(1, 0, 0, 1))
    assert lens_name(lens) == "S^2 x S^1"
    lens, _ = reduce_to_lens(KnotParams(0, 1, 0, 0))
    assert lens == (1, 0)


def test_unsupported_twist():
    with pytest.raises(UnsupportedTwist):
        reduce_to_lens(KnotParams(1, 1, 1, 0))
    with pytest.raises(UnsupportedTwist):
        lens_closed_form(KnotParams(1, 1, 1, 0))
    # crossed residue needs outer strands
    with pytest.raises(UnsupportedTwist):
        reduce_to_lens(KnotParams(0, 1, 1, 1))


def test_non_coprime_is_rejected_not_unsupported():
    k = KnotParams(1, 3, 1, 1)  # aligned form would be L(4, 4)
    with pytest.raises(ValueError) as closed_err:
        lens_closed_form(k)
    assert not isinstance(closed_err.value, UnsupportedTwist)
    with pytest.raises(ValueError) as engine_err:
        reduce_to_lens(k)
    assert not isinstance(engine_err.value, UnsupportedTwist)


def test_closed_form_matches_engine():
    checked = 0
    for a in range(7):
        for b in range(7):
            for c in range(7):
                if a + b + c == 0:
                    continue
                m = 2 * a + b + c
                residues = {a % m, (a + b + c) % m}
                if a > 0:
                    residues.add((a + c) % m)
                for r in residues:
                    k = KnotParams(a, b, c, r)
                    try:
                        closed = lens_closed_form(k)
                    except UnsupportedTwist:
                        raise
                    except ValueError:
                        continue
                    lens, trace = reduce_to_lens(k)
                    assert lens == closed, k
                    assert len(trace) <= a + b + c + 2, k
                    checked += 1
    assert checked > 300


def test_knot_from_seifert_pinned():
    cover = knot_from_seifert(3, 2, 1, 1)
    assert cover == CoveredKnot(KnotParams(1, 1, 0, 1), (1, 0), 3, 0)
    cover = knot_from_seifert(2, 3, 2, 2)
    assert cover == CoveredKnot(KnotParams(1, 1, 4, 1), (5, 2), 2, 1)
    cover = knot_from_seifert(3, 5, 2, 1)
    assert cover.knot == KnotParams(2, 2, 1, 3)
    assert cover.ambient == (1, 0)


def test_knot_from_seifert_reduces_to_ambient():
    for params in [(2, 3, 2, 2), (3, 2, 1, 1), (3, 5, 2, 1), (4, 3, 2, 1), (5, 7, 3, 2)]:
        cover = knot_from_seifert(*params)
        lens, _ = reduce_to_lens(cover.knot)
        assert lens == cover.ambient
        assert lens_closed_form(cover.knot) == cover.ambient


def test_coincident_parameters():
    first, second = coincident_seifert_params(3, 2)
    assert first == (3, 2, 1, 1)
    assert second == (2, 2, 1, 2)
    k1 = knot_from_seifert(*first)
    k2 = knot_from_seifert(*second)
    assert k1.knot == KnotParams(1, 1, 0, 1)
    assert k2.knot == KnotParams(1, 2, 0, 1)
    assert k1.ambient == (1, 0)
    assert k2.ambient == (2, 1)
    h1 = first_homology(seifert_cyclic_presentation(*first))
    h2 = first_homology(seifert_cyclic_presentation(*second))
    assert h1 == h2


def test_coincident_parameters_validation():
    with pytest.raises(ValueError):
        coincident_seifert_params(2, 2)
    with pytest.raises(ValueError):
        coincident_seifert_params(3, 1)
