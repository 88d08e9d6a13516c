from itertools import product

import pytest
from sympy import totient

from ginv.abelian.automorphisms import (
    TorsionOrbit,
    aut_orbit_equivalent,
    endomorphism_count,
    enumerate_automorphisms,
    find_automorphism,
    is_automorphism,
    orbit,
)
from ginv.abelian.groups import FgGroup
from ginv.errors import BoundExceeded
from tests.oracles import apply_images, brute_force_automorphisms, elements, finite_groups, ulm_invariant


def count(t):
    return sum(1 for _ in enumerate_automorphisms(t))


@pytest.mark.parametrize("t,expected", [
    (FgGroup.trivial(), 1),
    (FgGroup.cyclic(4), 2),
    (FgGroup(torsion=(2, 2)), 6),
    (FgGroup(torsion=(2, 4)), 8),
    (FgGroup(torsion=(3, 3)), 48),
])
def test_automorphism_counts(t, expected):
    assert count(t) == expected


@pytest.mark.parametrize("n", range(2, 30))
def test_cyclic_count_is_totient(n):
    assert count(FgGroup.cyclic(n)) == totient(n)


def test_enumeration_yields_isomorphisms():
    t = FgGroup(torsion=(2, 4))
    homs = list(enumerate_automorphisms(t))
    assert len(set(tuple(x.coords for x in phi.images) for phi in homs)) == len(homs)
    assert all(phi.is_isomorphism() for phi in homs)


def test_enumeration_bounds():
    with pytest.raises(BoundExceeded) as e:
        list(enumerate_automorphisms(FgGroup.cyclic(16), aut_bound=10))
    assert e.value.bound == "aut-bound"
    with pytest.raises(BoundExceeded) as e:
        list(enumerate_automorphisms(FgGroup(torsion=(2, 2, 2, 2)), tuple_bound=1000))
    assert e.value.size == 2 ** 16


def test_endomorphism_count():
    assert endomorphism_count(FgGroup(torsion=(2, 4))) == 2 * 2 * 2 * 4


def test_is_automorphism():
    t = FgGroup(torsion=(2, 4))
    assert is_automorphism(t, ((1, 0), (1, 1)))
    assert not is_automorphism(t, ((1, 0), (0, 2)))


def test_cyclic_examples():
    z4 = FgGroup.cyclic(4)
    assert aut_orbit_equivalent(z4, z4.element([1]), z4.element([3]))
    assert not aut_orbit_equivalent(z4, z4.element([1]), z4.element([2]))
    assert aut_orbit_equivalent(z4, z4.zero(), z4.zero())


def test_integer_examples():
    z = FgGroup.free(1)
    assert aut_orbit_equivalent(z, z.element([2]), z.element([-2]))
    assert not aut_orbit_equivalent(z, z.element([1]), z.element([2]))
    assert aut_orbit_equivalent(z, z.zero(), z.zero())


def test_mixed_examples():
    g = FgGroup(free_rank=1, torsion=(2,))
    assert aut_orbit_equivalent(g, g.element([1, 0]), g.element([1, 1]))
    assert aut_orbit_equivalent(g, g.element([1, 0]), g.element([-1, 1]))
    assert not aut_orbit_equivalent(g, g.element([2, 0]), g.element([2, 1]))
    assert not aut_orbit_equivalent(g, g.element([0, 1]), g.element([1, 0]))


def assert_witness(g, a, b):
    phi = find_automorphism(g, a, b)
    assert phi is not None
    assert phi(a) == b
    assert phi.is_isomorphism()


def test_mixed_witnesses():
    g = FgGroup(free_rank=2, torsion=(2, 4))
    assert_witness(g, g.element([2, 4, 1, 1]), g.element([6, -2, 1, 3]))
    assert_witness(g, g.element([3, 0, 0, 1]), g.element([0, 3, 1, 0]))
    assert_witness(g, g.element([0, 0, 1, 2]), g.element([0, 0, 1, 0]))
    assert find_automorphism(g, g.element([2, 0, 0, 1]), g.element([2, 0, 0, 2])) is None


def test_identity_witness():
    g = FgGroup(free_rank=1, torsion=(6,))
    a = g.element([4, 5])
    phi = find_automorphism(g, a, a)
    assert phi.images == tuple(g.generators())


def test_mixed_against_small_automorphisms():
    # Automorphisms of Z + Z/4: f -> +-f, t -> h(f) + u t with u a unit.
    g = FgGroup(free_rank=1, torsion=(4,))
    points = [(f, t) for f in range(-4, 5) for t in range(4)]
    for a, b in product(points, repeat=2):
        reachable = any(
            (s * a[0], (h * a[0] + u * a[1]) % 4) == b
            for s in (1, -1) for h in range(4) for u in (1, 3)
        )
        assert aut_orbit_equivalent(g, g.element(a), g.element(b)) == reachable


def oracle_groups(max_order, limit):
    return [t for t in finite_groups(max_order) if t.order ** len(t.torsion) <= limit]


@pytest.mark.parametrize("t", oracle_groups(32, 2000), ids=str)
def test_orbits_match_brute_force(t):
    automorphisms = brute_force_automorphisms(t)
    assert len(automorphisms) == count(t)
    for a in elements(t):
        expected = {apply_images(t, images, a) for images in automorphisms}
        assert set(TorsionOrbit(t, a)) == expected


@pytest.mark.slow
def test_orbits_of_all_small_groups():
    for t in finite_groups(200):
        if endomorphism_count(t) > 50_000:
            continue
        automorphisms = [tuple(x.torsion_coords for x in phi.images) for phi in enumerate_automorphisms(t)]
        seen = set()
        for a in elements(t):
            if a in seen:
                continue
            members = set(TorsionOrbit(t, a))
            assert members == {apply_images(t, images, a) for images in automorphisms}
            seen |= members


@pytest.mark.slow
def test_brute_force_pairs():
    for t in oracle_groups(64, 5000):
        automorphisms = brute_force_automorphisms(t)
        points = elements(t)
        for a in points:
            images = {apply_images(t, phi, a) for phi in automorphisms}
            for b in points:
                assert aut_orbit_equivalent(t, t.element(a), t.element(b)) == (b in images)


def ulm_classes(t):
    classes = {}
    for a in elements(t):
        classes.setdefault(ulm_invariant(t, a), set()).add(a)
    return list(classes.values())


def assert_orbits_follow_heights(t, rng):
    classes = ulm_classes(t)
    for cls in classes:
        assert set(TorsionOrbit(t, min(cls))) == cls
    points = elements(t)
    for _ in range(10):
        a, b = rng.choice(points), rng.choice(points)
        same = ulm_invariant(t, a) == ulm_invariant(t, b)
        assert aut_orbit_equivalent(t, t.element(a), t.element(b)) == same


@pytest.mark.parametrize("t", finite_groups(48), ids=str)
def test_orbits_follow_height_sequences(t, rng):
    assert_orbits_follow_heights(t, rng)


@pytest.mark.slow
def test_orbits_follow_height_sequences_up_to_200(rng):
    for t in finite_groups(200):
        assert_orbits_follow_heights(t, rng)


def test_height_sequences():
    t = FgGroup(torsion=(2, 4))
    assert ulm_invariant(t, (1, 0)) == ulm_invariant(t, (1, 2)) != ulm_invariant(t, (0, 2))
    assert ulm_invariant(t, (0, 0)) == ((2, (None, None, None)),)
    assert ulm_invariant(t, (0, 1)) == ((2, (0, 1, None)),)

def test_equivalence_relation(rng):
    groups = [t for t in finite_groups(200) if t.order > 1]
    for _ in range(200):
        t = rng.choice(groups)
        a, b, c = (t.element([rng.randrange(d) for d in t.torsion]) for _ in range(3))
        ab = aut_orbit_equivalent(t, a, b)
        assert aut_orbit_equivalent(t, a, a)
        assert ab == aut_orbit_equivalent(t, b, a)
        if ab and aut_orbit_equivalent(t, b, c):
            assert aut_orbit_equivalent(t, a, c)
        if ab:
            assert a.order == b.order
            assert_witness(t, a, b)


def test_orbit_elements():
    z6 = FgGroup.cyclic(6)
    assert sorted(x.coords for x in orbit(z6, z6.element([2]))) == [(2,), (4,)]
