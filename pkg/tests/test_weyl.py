"""Permutations, inversion sets, triangular and Kempf elements."""

import pytest

from fflv.roots import Root, all_positive_roots
from fflv.weyl import (
    Permutation,
    RootSubset,
    all_permutations,
    inversion_roots,
    is_kempf,
    is_triangular_element,
    is_triangular_subset,
    kempf_complement,
    kempf_factorization,
    parse_permutation,
    permutation_from_segments,
    reduced_word,
)


def test_permutation_basics():
    w = Permutation.from_oneline((3, 1, 4, 2))
    assert w(1) == 3 and w(4) == 2
    assert w.n == 3
    assert w.length() == 3
    assert (w * w.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation.from_oneline((1, 1, 2))


def test_word_composition_convention():
    """Words multiply left to right: s1*s3*s2 sends 2 to 4."""
    w = Permutation.from_word((1, 3, 2), 3)
    assert w.images == (2, 4, 1, 3)
    u = Permutation.from_word((2, 3, 1), 3)
    assert u.images == (3, 1, 4, 2)
    assert u == w.inverse()


def test_longest_element():
    w0 = Permutation.longest(3)
    assert w0.images == (4, 3, 2, 1)
    assert w0.length() == 6
    assert inversion_roots(w0).members == set(all_positive_roots(3))


def test_parse_permutation_both_grammars():
    assert parse_permutation("s2 s3 s1", 3).images == (3, 1, 4, 2)
    assert parse_permutation("3 1 4 2", 3).images == (3, 1, 4, 2)
    assert parse_permutation("", 3).is_identity()
    with pytest.raises(ValueError):
        parse_permutation("s1 2", 3)
    with pytest.raises(ValueError):
        parse_permutation("2 1", 3)


def test_inversion_roots_match_length():
    for w in all_permutations(3):
        assert len(inversion_roots(w).members) == w.length()


def test_inversion_roots_example():
    w = Permutation.from_oneline((3, 1, 4, 2))
    assert inversion_roots(w).members == {Root(1, 1), Root(3, 3), Root(1, 3)}


def test_triangular_census_s4():
    """Exactly two elements of the 24 fail the triangular condition."""
    bad = [w.images for w in all_permutations(3) if not is_triangular_element(w)]
    assert bad == [(2, 4, 1, 3), (4, 2, 3, 1)]


def test_triangular_subset_examples():
    assert is_triangular_subset(RootSubset.of(2, [Root(1, 1), Root(2, 2), Root(1, 2)]))
    assert not is_triangular_subset(RootSubset.of(2, [Root(1, 1), Root(2, 2)]))
    assert is_triangular_subset(RootSubset.of(3, [Root(1, 1), Root(3, 3), Root(1, 3)]))
    assert is_triangular_subset(RootSubset.full(4))
    assert is_triangular_subset(RootSubset.of(3, []))


def test_element_subset_triangularity_agree_s4():
    for w in all_permutations(3):
        assert is_triangular_element(w) == is_triangular_subset(inversion_roots(w))


def test_kempf_counts():
    """Weakly increasing segment tops: 5, 14, 42 (the Catalan numbers)."""
    assert sum(is_kempf(w) for w in all_permutations(2)) == 5
    assert sum(is_kempf(w) for w in all_permutations(3)) == 14
    assert sum(is_kempf(w) for w in all_permutations(4)) == 42


def test_kempf_implies_triangular_s5():
    for w in all_permutations(4):
        if is_kempf(w):
            assert is_triangular_element(w)


def test_kempf_examples():
    assert is_kempf(Permutation.longest(3))
    assert is_kempf(Permutation.identity(3))
    assert not is_kempf(Permutation.from_oneline((3, 1, 4, 2)))


def test_factorization_round_trip():
    """Segment tops rebuild the permutation, Kempf or not."""
    for n in (2, 3, 4):
        for w in all_permutations(n):
            ells = kempf_factorization(w)
            assert len(ells) == n
            assert all(i - 1 <= ell <= n for i, ell in enumerate(ells, start=1))
            assert permutation_from_segments(ells) == w


def test_factorization_tops_weakly_increasing_iff_kempf():
    for w in all_permutations(3):
        ells = kempf_factorization(w)
        increasing = all(ells[i] <= ells[i + 1] for i in range(len(ells) - 1))
        assert increasing == is_kempf(w)


def test_kempf_complement_is_true_complement():
    """The complement always agrees with the rebuilt element's inversions."""
    for n in (2, 3, 4):
        for w in all_permutations(n):
            if not is_kempf(w):
                continue
            ells = kempf_factorization(w)
            comp = kempf_complement(n, ells)
            expected = set(all_positive_roots(n)) - inversion_roots(w).members
            assert comp.members == expected
            assert len(comp.members) + w.length() == len(all_positive_roots(n))


def test_kempf_complement_with_empty_segment():
    """Tops (0,2,3): the empty first segment pushes a tall root into the
    complement that no left-justified block pattern would contain."""
    comp = kempf_complement(3, (0, 2, 3))
    assert Root(1, 3) in comp.members
    w = permutation_from_segments((0, 2, 3))
    assert comp.members == set(all_positive_roots(3)) - inversion_roots(w).members


def test_kempf_complement_all_segments_nontrivial():
    """Tops (1,3,4,4) have every segment nonempty yet the complement still
    reaches above the blocks."""
    comp = kempf_complement(4, (1, 3, 4, 4))
    w = permutation_from_segments((1, 3, 4, 4))
    assert w.images == (2, 4, 5, 3, 1)
    assert Root(1, 3) in comp.members
    assert len(comp.members) == 10 - w.length()


def test_kempf_complement_validation():
    with pytest.raises(ValueError):
        kempf_complement(3, (2, 1, 3))
    with pytest.raises(ValueError):
        kempf_complement(3, (0, 1))
    with pytest.raises(ValueError):
        permutation_from_segments((5, 1, 2))


def test_reduced_word_properties():
    for w in all_permutations(3):
        word = reduced_word(w)
        assert len(word) == w.length()
        assert Permutation.from_word(word, 3) == w


def test_reduced_word_is_lex_smallest():
    assert reduced_word(Permutation.from_oneline((2, 4, 1, 3))) == (1, 3, 2)
    assert reduced_word(Permutation.longest(2)) == (1, 2, 1)
