import numpy as np
import pytest

from seeded_ising import FullTemplate, LatticeGeometry, Seed, TemplatePart


def random_part(rng: np.random.Generator, geometry: LatticeGeometry) -> TemplatePart:
    return TemplatePart(geometry, rng.integers(0, 2, geometry.size, dtype=np.int8) * 2 - 1)


def random_full(rng: np.random.Generator, geometry: LatticeGeometry) -> FullTemplate:
    return FullTemplate(random_part(rng, geometry), random_part(rng, geometry))


def random_seed_bits(rng: np.random.Generator, geometry: LatticeGeometry, count: int) -> Seed:
    idx0 = np.sort(rng.choice(geometry.size, size=count, replace=False))
    vals = rng.integers(0, 2, count, dtype=np.int8) * 2 - 1
    return Seed(geometry, idx0 + 1, vals)


@pytest.fixture
def rng():
    return np.random.default_rng(0x5EED15)
