import pytest
from pydantic import ValidationError as PydanticValidationError

from ginv.abelian.automorphisms import aut_orbit_equivalent
from ginv.abelian.groups import FgGroup
from ginv.errors import NegativeEntry, NotSquare, PermutationMatrix, Reducible
from ginv.sft import (
    higman_thompson_matrix,
    invariants,
    is_primitive,
    nv_factors,
    sft_abelianization,
    support_graph,
    validate,
)
from tests.oracles import random_sft


def test_validate_accepts_full_shift():
    assert validate([[2]]).to_rows() == [[2]]


def test_validated_matrix_is_a_frozen_model():
    a = validate([[1, 1], [1, 0]])
    assert a.model_dump(mode="json") == {"rows": [[1, 1], [1, 0]]}
    assert a == validate([[1, 1], [1, 0]])
    assert hash(a) == hash(validate([[1, 1], [1, 0]]))
    assert a.size == 2
    assert a.a.to_rows() == [[1, 1], [1, 0]]
    with pytest.raises(PydanticValidationError):
        a.rows = ((2,),)


@pytest.mark.parametrize("rows,error,condition", [
    ([[0, 1], [1, 0]], PermutationMatrix, "permutation-matrix"),
    ([[1]], PermutationMatrix, "permutation-matrix"),
    ([[1, 1], [0, 1]], Reducible, "reducible"),
    ([[0]], Reducible, "reducible"),
    ([[1, -1], [1, 1]], NegativeEntry, "negative-entry"),
    ([[1, 2]], NotSquare, "not-square"),
    ([], NotSquare, "not-square"),
])
def test_validate_rejects(rows, error, condition):
    with pytest.raises(error) as e:
        validate(rows)
    assert e.value.condition == condition


def test_validation_error_names_factor():
    with pytest.raises(PermutationMatrix) as e:
        validate([[0, 1], [1, 0]], factor=2)
    assert e.value.factor == 2
    assert "factor 2" in str(e.value)


def test_support_graph():
    graph = support_graph(validate([[1, 1], [1, 0]]).a)
    assert set(graph.edges) == {(0, 0), (0, 1), (1, 0)}


@pytest.mark.parametrize("k", range(2, 8))
@pytest.mark.parametrize("r", range(1, 5))
def test_higman_thompson_invariants(k, r):
    inv = invariants(higman_thompson_matrix(k, r))
    assert inv.bf == FgGroup.cyclic(k - 1)
    assert inv.determinant == 1 - k
    assert inv.k1.is_trivial
    if k > 2:
        assert aut_orbit_equivalent(inv.bf, inv.unit, inv.bf.element([r]))


def test_higman_thompson_shape():
    assert higman_thompson_matrix(3, 3).to_rows() == [[0, 0, 3], [1, 0, 0], [0, 1, 0]]
    assert [a.to_rows() for a in nv_factors(2, 3, 2)] == [[[0, 3], [1, 0]], [[3]]]
    with pytest.raises(ValueError):
        higman_thompson_matrix(1, 1)


def test_invariants_of_two():
    inv = invariants(validate([[2]]))
    assert inv.bf.is_trivial
    assert inv.k1.is_trivial
    assert inv.det_sign == -1


def test_invariants_with_free_h1():
    inv = invariants(validate([[2, 1], [1, 2]]))
    assert inv.bf == FgGroup.free(1)
    assert inv.k1 == FgGroup.free(1)
    assert inv.det_sign == 0
    assert inv.h1_basis[0] in {(1, -1), (-1, 1)}


def test_homology_fields(rng):
    for _ in range(50):
        inv = invariants(random_sft(rng))
        assert inv.homology.top_degree <= 1
        assert inv.homology[2].is_trivial
        assert inv.k0 == inv.homology[0]
        assert inv.k1 == inv.homology[1]
        assert not inv.k1.torsion
        assert inv.bf.is_finite == (inv.det_sign != 0)
        if inv.det_sign:
            assert inv.bf.order == abs(inv.determinant)


def test_relabelling_invariance(rng):
    for _ in range(30):
        a = random_sft(rng)
        perm = list(range(a.size))
        rng.shuffle(perm)
        b = validate(a.a.permuted(perm))
        ia, ib = invariants(a), invariants(b)
        assert ia.bf == ib.bf
        assert ia.determinant == ib.determinant
        assert ia.homology.same_groups(ib.homology)
        assert aut_orbit_equivalent(ia.bf, ia.unit, ib.unit)


@pytest.mark.parametrize("rows,expected", [
    ([[3]], True),
    ([[1, 1], [1, 0]], True),
    ([[0, 2], [1, 0]], False),
    ([[0, 1], [2, 0]], False),
    ([[1, 1, 0], [0, 0, 1], [1, 0, 0]], True),
    ([[0, 1, 0], [0, 0, 1], [2, 0, 0]], False),
])
def test_is_primitive(rows, expected):
    assert is_primitive(validate(rows)) is expected


@pytest.mark.parametrize("rows,expected", [
    ([[2]], FgGroup.trivial()),
    ([[3]], FgGroup.cyclic(2)),
    ([[4]], FgGroup.trivial()),
    ([[2, 1], [1, 2]], FgGroup(free_rank=1, torsion=(2,))),
])
def test_sft_abelianization(rows, expected):
    assert sft_abelianization(validate(rows)) == expected
