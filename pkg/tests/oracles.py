"""Brute-force reference computations used to check the exact algorithms."""
import math
from itertools import combinations, product

from sympy import Matrix, multiplicity, primefactors

from ginv.abelian.groups import FgGroup
from ginv.errors import ValidationError
from ginv.sft import validate


def random_sft(rng, max_size=4, max_entry=3):
    while True:
        n = rng.randint(1, max_size)
        rows = [[rng.randint(0, max_entry) for _ in range(n)] for _ in range(n)]
        try:
            return validate(rows)
        except ValidationError:
            continue


def random_matrix(rng, rows, cols, bound):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def determinantal_invariant_factors(rows):
    """Nonzero invariant factors from gcds of k x k minors."""
    m = Matrix(rows)
    divisors = [1]
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for r in combinations(range(m.rows), k):
            for c in combinations(range(m.cols), k):
                g = math.gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    return [b // a for a, b in zip(divisors, divisors[1:])]


def small_nullspace(rows, bound=3):
    """Nonzero integer vectors with entries in [-bound, bound] killed by the matrix."""
    ncols = len(rows[0])
    return [
        x for x in product(range(-bound, bound + 1), repeat=ncols)
        if any(x) and all(sum(a * b for a, b in zip(row, x)) == 0 for row in rows)
    ]


def finite_groups(max_order):
    """Every finite abelian group of order <= max_order, in canonical form."""
    result = []

    def extend(chain, order):
        result.append(FgGroup(torsion=tuple(chain)))
        last = chain[-1] if chain else 1
        multiple = last if chain else 2
        while order * multiple <= max_order:
            if multiple >= 2:
                extend(chain + [multiple], order * multiple)
            multiple += last

    extend([], 1)
    return result


def elements(t: FgGroup):
    return list(product(*(range(d) for d in t.torsion)))


def brute_force_automorphisms(t: FgGroup):
    """Generator images of every automorphism, found by testing all maps of the generators."""
    points = elements(t)
    found = []
    for images in product(points, repeat=len(t.torsion)):
        if any(any(d * x % e for x, e in zip(image, t.torsion)) for d, image in zip(t.torsion, images)):
            continue
        image_set = {
            tuple(sum(c * image[k] for c, image in zip(x, images)) % e for k, e in enumerate(t.torsion))
            for x in points
        }
        if len(image_set) == len(points):
            found.append(images)
    return found


def apply_images(t: FgGroup, images, x):
    return tuple(sum(c * image[k] for c, image in zip(x, images)) % e for k, e in enumerate(t.torsion))


def p_height(t: FgGroup, p: int, x) -> int | None:
    """Largest h with x in p^h T for the p-part of x; None when that part is zero."""
    heights = [
        multiplicity(p, c) for c, d in zip(x, t.torsion)
        if c % d and multiplicity(p, c) < multiplicity(p, d)
    ]
    return min(heights, default=None)


def ulm_invariant(t: FgGroup, x) -> tuple:
    """Height sequences of x, px, p^2 x, ... for every prime p dividing |T|.

    Two points of a finite abelian group share an automorphism orbit iff these agree.
    """
    x = tuple(c % d for c, d in zip(x, t.torsion))
    invariant = []
    for p in primefactors(t.order):
        top = max(multiplicity(p, d) for d in t.torsion)
        invariant.append((p, tuple(
            p_height(t, p, tuple(p ** j * c % d for c, d in zip(x, t.torsion))) for j in range(top + 1)
        )))
    return tuple(invariant)
