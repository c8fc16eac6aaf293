"""Cartan matrices, root enumeration, Weyl elements, bipartite matrices."""

import pytest

from clusterlab.cartan_roots import (
    CartanError,
    all_finite_types,
    almost_positive,
    b_of_a,
    cartan_of_type,
    identity_element,
    positive_roots,
    reduced_words,
    simple_reflection,
    symmetrizer,
    weyl_element,
)
from clusterlab.seed import find_skew_symmetrizer


# -- classification data ----------------------------------------------------------


def test_a2_matrix():
    assert cartan_of_type("A", 2).rows == ((2, -1), (-1, 2))


def test_g2_matrix():
    assert cartan_of_type("G", 2).rows == ((2, -1), (-3, 2))


def test_b2_matrix():
    assert cartan_of_type("B", 2).rows == ((2, -1), (-2, 2))


def test_f4_matrix():
    assert cartan_of_type("F", 4).rows == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    )


def test_invalid_types_rejected():
    with pytest.raises(CartanError):
        cartan_of_type("E", 9)
    with pytest.raises(CartanError):
        cartan_of_type("G", 3)
    with pytest.raises(CartanError):
        cartan_of_type("Z", 2)


def test_canonical_type_list():
    assert [A.type_name() for A in all_finite_types(2)] == ["A2", "B2", "G2"]
    assert [A.type_name() for A in all_finite_types(3)] == ["A3", "B3", "C3"]
    assert "D4" in [A.type_name() for A in all_finite_types(4)]


def test_symmetrizer_of_b2():
    assert symmetrizer(cartan_of_type("B", 2).rows) == (2, 1)


# -- positive roots ----------------------------------------------------------------


@pytest.mark.parametrize(
    "family,n,count",
    [
        ("A", 1, 1),
        ("A", 2, 3),
        ("A", 3, 6),
        ("A", 4, 10),
        ("B", 2, 4),
        ("B", 3, 9),
        ("C", 3, 9),
        ("D", 4, 12),
        ("G", 2, 6),
    ],
)
def test_positive_root_counts(family, n, count):
    # classical counts: n(n+1)/2 for A, n^2 for B/C, n(n-1) for D
    assert len(positive_roots(cartan_of_type(family, n))) == count


def test_a2_positive_roots_explicit():
    assert positive_roots(cartan_of_type("A", 2)) == [(0, 1), (1, 0), (1, 1)]


def test_b2_positive_roots_explicit():
    assert positive_roots(cartan_of_type("B", 2)) == [(0, 1), (1, 0), (1, 1), (1, 2)]


def test_almost_positive_counts():
    assert len(almost_positive(cartan_of_type("A", 1))) == 2
    assert len(almost_positive(cartan_of_type("A", 2))) == 5
    assert len(almost_positive(cartan_of_type("A", 3))) == 9


def test_almost_positive_contains_negative_simple():
    roots = almost_positive(cartan_of_type("A", 2))
    assert (-1, 0) in roots and (0, -1) in roots


# -- Weyl elements -----------------------------------------------------------------


def test_empty_word_is_identity():
    A = cartan_of_type("A", 2)
    w = weyl_element(A, [])
    assert w.is_identity() and w.length == 0


def test_simple_reflection_is_involution():
    for family, n in (("A", 3), ("B", 2), ("G", 2)):
        A = cartan_of_type(family, n)
        for i in range(n):
            s = simple_reflection(A, i)
            assert (s * s).is_identity()


def test_longest_element_length_a2():
    A = cartan_of_type("A", 2)
    assert weyl_element(A, [0, 1, 0]).length == 3


def test_longest_element_length_a3():
    A = cartan_of_type("A", 3)
    # standard reduced word for the order-reversing permutation of S4
    assert weyl_element(A, [0, 1, 0, 2, 1, 0]).length == 6 == len(positive_roots(A))


def test_squared_letter_not_reduced():
    A = cartan_of_type("A", 2)
    w = weyl_element(A, [0, 0])
    assert w.is_identity() and w.length == 0 != 2


def test_reduced_words_of_longest_element():
    A = cartan_of_type("A", 2)
    w0 = weyl_element(A, [0, 1, 0])
    assert sorted(reduced_words(A, w0)) == [(0, 1, 0), (1, 0, 1)]


def test_identity_has_one_reduced_word():
    A = cartan_of_type("A", 2)
    assert reduced_words(A, identity_element(A)) == [()]


# -- bipartite exchange matrices ------------------------------------------------------


def test_b_of_a_a2():
    assert b_of_a(cartan_of_type("A", 2)) == ((0, -1), (1, 0))


def test_b_of_a_a1():
    assert b_of_a(cartan_of_type("A", 1)) == ((0,),)


def test_b_of_a_negation_also_skew_symmetrizable():
    rows = b_of_a(cartan_of_type("B", 3))
    neg = tuple(tuple(-x for x in row) for row in rows)
    assert find_skew_symmetrizer(neg)[0] is not None


def test_b_of_a_shares_symmetrizer_with_a():
    for family, n in (("B", 2), ("G", 2), ("F", 4), ("B", 3)):
        A = cartan_of_type(family, n)
        d, witness = find_skew_symmetrizer(b_of_a(A))
        assert witness is None
        assert d == symmetrizer(A.rows)
