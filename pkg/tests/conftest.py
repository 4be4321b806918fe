import random

import pytest

from linktorsion.algebra import GF, QQ, ZZ, LaurentPoly


def rand_poly(rng, ring, num_vars, max_terms=3, exp_bound=2, coeff_bound=3,
              nonzero=False):
    """A small random Laurent polynomial; coefficients in [-bound, bound]."""
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        exps = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(num_vars))
        terms[exps] = rng.randint(-coeff_bound, coeff_bound)
    p = LaurentPoly(ring, num_vars, terms)
    if nonzero and p.is_zero:
        return LaurentPoly.one(ring, num_vars)
    return p


def rand_unit(rng, ring, num_vars):
    """A random monomial unit: +-t^k over Z, c*t^k over fields."""
    exps = tuple(rng.randint(-2, 2) for _ in range(num_vars))
    if ring.kind == "Z":
        c = rng.choice([1, -1])
    elif ring.kind == "Fp":
        c = rng.randint(1, ring.p - 1)
    else:
        c = rng.choice([1, -1]) * rng.randint(1, 4)
    return LaurentPoly.monomial(ring, num_vars, c, exps)


@pytest.fixture
def rng():
    return random.Random(0x5eed)


ALL_RINGS = [ZZ, QQ, GF(5), GF(3)]
