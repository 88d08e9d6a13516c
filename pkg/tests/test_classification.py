from math import gcd

import pytest

from ginv.abelian.groups import GroupHom
from ginv.classification import ClassificationVerdict, product_isomorphic, sft_isomorphic, sft_morita
from ginv.errors import BoundExceeded
from ginv.sft import higman_thompson_matrix, invariants, nv_factors, validate
from tests.oracles import random_sft


def test_single_factor_examples():
    assert sft_isomorphic(higman_thompson_matrix(2, 1), higman_thompson_matrix(2, 2)).isomorphic
    verdict = sft_isomorphic(validate([[2]]), validate([[3]]))
    assert not verdict.isomorphic
    assert verdict.witness is None
    assert "Bowen-Franks" in verdict.reason


def test_identity_witness(rng):
    for _ in range(20):
        a = random_sft(rng)
        verdict = sft_isomorphic(a, a)
        assert verdict.isomorphic
        assert verdict.witness.is_identity


def test_unit_class_separates():
    verdict = sft_isomorphic(higman_thompson_matrix(4, 1), higman_thompson_matrix(4, 3))
    assert not verdict.isomorphic
    assert verdict.passed_filters == ("bowen-franks", "det-sign")


def test_sign_separates():
    # Trivial Bowen-Franks groups with det(id - A) equal to -1 and +1.
    spliced = validate([[1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 1, 1], [0, 0, 1, 1]])
    assert invariants(spliced).determinant == 1
    verdict = sft_isomorphic(validate([[2]]), spliced)
    assert not verdict.isomorphic
    assert verdict.passed_filters == ("bowen-franks",)
    assert not sft_morita(validate([[2]]), spliced)


@pytest.mark.parametrize("k", range(2, 7))
@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("r2", range(1, 5))
def test_morita_ignores_unit(k, r, r2):
    assert sft_morita(higman_thompson_matrix(k, r), higman_thompson_matrix(k, r2))


def test_morita_examples():
    assert not sft_morita(validate([[2]]), validate([[3]]))
    a = validate([[1, 1], [1, 1]])
    assert sft_morita(a, a)


def test_isomorphic_implies_morita(rng):
    for _ in range(30):
        a, b = random_sft(rng, 2, 2), random_sft(rng, 2, 2)
        if sft_isomorphic(a, b).isomorphic:
            assert sft_morita(a, b)
        assert sft_isomorphic(a, b).isomorphic == sft_isomorphic(b, a).isomorphic
        assert product_isomorphic([a], [b]).isomorphic == sft_isomorphic(a, b).isomorphic


def test_verdict_requires_witness_iff_isomorphic():
    with pytest.raises(ValueError):
        ClassificationVerdict(isomorphic=True)


def test_identical_lists():
    factors = [validate([[3]]), validate([[2, 1], [1, 2]]), higman_thompson_matrix(5, 2)]
    verdict = product_isomorphic(factors, factors)
    assert verdict.isomorphic
    assert verdict.witness.is_identity


def test_factor_count():
    verdict = product_isomorphic([validate([[3]])], [validate([[3]]), validate([[3]])])
    assert not verdict.isomorphic
    assert verdict.passed_filters == ()


def test_unit_tensor_separates():
    verdict = product_isomorphic(nv_factors(2, 4, 1), nv_factors(2, 4, 3))
    assert not verdict.isomorphic
    assert "determinant" in verdict.passed_filters


def test_bound_exceeded_reports_passed_filters(caplog):
    with pytest.raises(BoundExceeded) as e:
        product_isomorphic(nv_factors(2, 4, 1), nv_factors(2, 4, 3), tuple_bound=1)
    assert e.value.bound == "tuple-bound"
    assert e.value.passed_filters == ("factor-count", "bowen-franks", "determinant")
    assert "bowen-franks, determinant" in caplog.text


def test_permuted_factors():
    left = [higman_thompson_matrix(3, 2), validate([[4]]), validate([[2, 1], [1, 2]])]
    right = [validate([[2, 1], [1, 2]]), higman_thompson_matrix(3, 1), validate([[4]])]
    verdict = product_isomorphic(left, right)
    assert verdict.isomorphic
    assert sorted(verdict.witness.permutation) == [0, 1, 2]
    assert all(isinstance(h, GroupHom) and h.is_isomorphism() for h in verdict.witness.homs)


def test_free_factors():
    a = validate([[2, 1], [1, 2]])
    b = validate([[1, 2], [2, 1]])
    assert product_isomorphic([a, a], [a, a]).isomorphic
    assert product_isomorphic([a, b], [b, a]).isomorphic == product_isomorphic([a, b], [a, b]).isomorphic


def nv_cases():
    return [(n, k, r) for n in range(1, 4) for k in range(2, 7) for r in range(1, 5)]


@pytest.mark.parametrize("n,k,r", [(1, 2, 1), (1, 2, 2), (2, 3, 2), (2, 5, 2), (2, 5, 4), (3, 5, 4)])
def test_higman_thompson_pairs(n, k, r):
    for r2 in range(1, 5):
        expected = gcd(k - 1, r) == gcd(k - 1, r2)
        assert product_isomorphic(nv_factors(n, k, r), nv_factors(n, k, r2)).isomorphic == expected


@pytest.mark.slow
def test_higman_thompson_grid():
    cases = nv_cases()
    factors = {case: nv_factors(*case) for case in cases}
    for n, k, r in cases:
        for n2, k2, r2 in cases:
            expected = n == n2 and k == k2 and gcd(k - 1, r) == gcd(k2 - 1, r2)
            assert product_isomorphic(factors[n, k, r], factors[n2, k2, r2]).isomorphic == expected
