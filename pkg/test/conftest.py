import random
from fractions import Fraction

import pytest
from opgp.orealg import Monomial, OrePoly, RingSpec


def _random_element(ring: RingSpec, rng: random.Random, terms: int = 4, degree: int = 3,
                    fractions: bool = True) -> OrePoly:
    """Random element with at most `terms` normal-ordered words of total degree <= `degree`."""
    d = ring.d
    slots = len(ring.names)
    out = {}
    for _ in range(rng.randint(1, terms)):
        exponents = [0] * slots
        for _ in range(rng.randint(0, degree)):
            exponents[rng.randrange(slots)] += 1
        b = tuple(exponents[d:]) if ring.is_weyl else (0,) * d
        coef = Fraction(rng.randint(-5, 5), rng.randint(1, 3)) if fractions else rng.randint(-3, 3)
        out[Monomial(tuple(exponents[:d]), b)] = coef
    return OrePoly(ring, out)


@pytest.fixture(scope="session")
def random_element():
    return _random_element


@pytest.fixture(scope="session")
def weyl_rings():
    """Weyl algebras in one, two and three variables."""
    return [RingSpec.weyl(["x"]), RingSpec.weyl(["x", "y"]), RingSpec.weyl(["x", "y", "z"])]
