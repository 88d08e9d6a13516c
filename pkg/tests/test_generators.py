from math import comb

import pytest

from ginv.errors import ArityMismatch, CoordinateOutOfRange
from ginv.tables.element import Brick, TableElement, compose, equal, inverse
from ginv.tables.generators import (
    alpha_element,
    alpha_permutation,
    alpha_word,
    baker,
    baker_from_generators,
    gen_s,
    gen_tau,
    permutation_element,
    permutation_parity,
    tau_tilde,
    transposition,
)


def index_map(element: TableElement, indices) -> dict[int, int]:
    return {j: element.image(Brick.full(element.n, j)).index for j in indices}


@pytest.mark.parametrize("k", range(2, 8))
def test_tau_tilde_parity(k):
    arity = (k, 2)
    element = tau_tilde(2, 1, arity)
    mapping = index_map(element, range(1, k + 4))
    assert mapping[2] == k + 2
    assert permutation_parity(mapping) == k % 2


def test_permutation_parity():
    assert permutation_parity({1: 2, 2: 1}) == 1
    assert permutation_parity({1: 2, 2: 3, 3: 1}) == 0
    assert permutation_parity({}) == 0


@pytest.mark.parametrize("k,k2,parity", [(2, 2, "odd"), (3, 5, "even"), (5, 3, "even"), (5, 5, "even"), (3, 3, "odd")])
def test_alpha_parity_examples(k, k2, parity):
    assert alpha_word(1, 1, 2, (k, k2)).parity == parity


@pytest.mark.parametrize("k", range(2, 8))
@pytest.mark.parametrize("k2", range(2, 8))
def test_alpha_word_realises_grid_transpose(k, k2):
    arity = (k, k2)
    alpha = alpha_word(2, 1, 2, arity)
    assert alpha.parity == ("odd" if comb(k, 2) * comb(k2, 2) % 2 else "even")
    assert permutation_parity(alpha.mapping) == (1 if alpha.parity == "odd" else 0)
    if k * k2 <= 30:
        element = alpha_element(2, 1, 2, arity)
        assert index_map(element, alpha.mapping) == alpha.mapping


@pytest.mark.parametrize("l", range(2, 12))
def test_alpha_parity_for_equal_arities(l):
    odd = l % 4 in (2, 3)
    assert (alpha_word(1, 1, 2, (l, l)).parity == "odd") == odd


def test_alpha_permutation_shape():
    mapping = alpha_permutation(1, 1, 2, (2, 3))
    assert sorted(mapping) == sorted(mapping.values()) == list(range(1, 7))
    assert mapping[1 + 1 * 2 + 0] == 1 + 0 * 3 + 1


def test_alpha_needs_distinct_coordinates():
    with pytest.raises(ValueError):
        alpha_word(1, 2, 2, (3, 3))


def test_baker_moves_leading_letter():
    b = baker(1, 2, (2, 2))
    assert b([(1,), (0, 1)], 1) == (((0, 1), (1,)), 1)
    assert b([(1,), (1, 0, 0)], 1) == (((1, 1), (0, 0)), 1)
    assert b([(1,), (1,)], 2) == (((1,), (1,)), 2)


@pytest.mark.parametrize("k", [2, 3, 7])
def test_baker_composition(k):
    arity = (k, k, k)
    assert equal(compose(baker(1, 2, arity), baker(2, 3, arity)), baker(1, 3, arity))
    assert equal(compose(baker(1, 2, arity), baker(2, 1, arity)), TableElement.identity(arity))
    assert equal(inverse(baker(2, 3, arity)), baker(3, 2, arity))


@pytest.mark.parametrize("arity,d,d2", [((2, 2), 1, 2), ((3, 3, 5), 2, 1), ((4, 2, 4), 3, 1)])
def test_baker_from_generators(arity, d, d2):
    assert equal(baker(d, d2, arity), baker_from_generators(d, d2, arity))
    assert baker(d, d2, arity, index=3).is_well_formed()


def test_baker_rejects_unequal_arities():
    with pytest.raises(ArityMismatch):
        baker(1, 2, (2, 3))
    with pytest.raises(ArityMismatch):
        baker_from_generators(1, 2, (3, 5))
    with pytest.raises(ValueError):
        baker(1, 1, (2, 2))


def test_coordinate_out_of_range():
    with pytest.raises(CoordinateOutOfRange):
        gen_s(1, 3, (2, 2))
    with pytest.raises(CoordinateOutOfRange):
        gen_s(1, 0, (2, 2))
    with pytest.raises(CoordinateOutOfRange):
        baker(1, 3, (2, 2))


def test_invalid_indices_and_arities():
    with pytest.raises(ValueError):
        gen_tau(0, (2,))
    with pytest.raises(ValueError):
        gen_s(1, 1, (1, 2))
    with pytest.raises(ValueError):
        permutation_element({1: 2}, (2,))


def test_transposition_exchanges_leading_letters():
    arity = (3, 2)
    swap = transposition(1, arity)
    assert swap([(0, 2), (1,)], 1) == (((1, 2), (1,)), 1)
    assert swap([(2, 0), (1,)], 1) == (((2, 0), (1,)), 1)
    assert equal(compose(swap, swap), TableElement.identity(arity))
