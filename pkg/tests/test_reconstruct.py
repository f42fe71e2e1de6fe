import numpy as np
import pytest
from fractions import Fraction

from conftest import random_full, random_part
from seeded_ising import (
    FullTemplate,
    IsingParams,
    LatticeGeometry,
    RecordingSchedule,
    Seed,
    SeedSpec,
    TemplatePart,
    aggregate,
    extract_seed,
    extract_seeds,
    hamming_distance,
    reconstruct_full,
    reconstruct_part,
    run_chain,
)

J = IsingParams(0.2, 0.3)
G8 = LatticeGeometry(8, 128)


class TestSeedSpec:
    def test_exactly_one_mode(self):
        with pytest.raises(ValueError):
            SeedSpec()
        with pytest.raises(ValueError):
            SeedSpec(fraction=Fraction(1, 4), count=10)

    def test_fraction_bounds(self):
        with pytest.raises(ValueError):
            SeedSpec(fraction=Fraction(0))
        with pytest.raises(ValueError):
            SeedSpec(fraction=Fraction(7, 6))
        assert SeedSpec(fraction=1).fraction == Fraction(1)

    def test_ceiling_rounding(self):
        # 1024/6 rounds up to 171 sites per part (342 over both parts)
        assert SeedSpec(fraction=Fraction(1, 6)).resolved_count(G8) == 171
        assert SeedSpec(fraction=Fraction(1, 5)).resolved_count(G8) == 205
        assert SeedSpec(fraction=Fraction(1, 4)).resolved_count(G8) == 256
        assert SeedSpec(count=256).resolved_count(G8) == 256

    def test_count_exceeding_lattice(self):
        with pytest.raises(ValueError):
            SeedSpec(count=25).resolved_count(LatticeGeometry(2, 3))


class TestExtractSeed:
    def test_paper_scale_quarter_seed(self, rng):
        part = random_part(rng, G8)
        seed = extract_seed(part, SeedSpec(count=256), rng)
        assert len(seed) == 256
        assert np.array_equal(seed.values, part.spins[seed.indices - 1])

    def test_full_seed_reproduces_part(self, rng):
        part = random_part(rng, LatticeGeometry(3, 4))
        seed = extract_seed(part, SeedSpec(fraction=1), rng)
        assert reconstruct_part(seed, J, RecordingSchedule((0, 5)), rng) == part

    def test_index_set_is_uniform(self):
        # inclusion marginals of a 3-subset of 8 sites
        g = LatticeGeometry(2, 4)
        rng = np.random.default_rng(1234)
        spec = SeedSpec(count=3)
        part = random_part(rng, g)
        hits = np.zeros(g.size)
        draws = 4000
        for _ in range(draws):
            hits[extract_seed(part, spec, rng).indices - 1] += 1
        expected = draws * 3 / 8
        sd = np.sqrt(draws * (3 / 8) * (5 / 8))
        assert np.all(np.abs(hits - expected) < 5 * sd)

    def test_redraw_differs_between_calls(self, rng):
        part = random_part(rng, G8)
        spec = SeedSpec(count=256)
        a = extract_seed(part, spec, rng)
        b = extract_seed(part, spec, rng)
        assert not np.array_equal(a.indices, b.indices)


class TestExtractSeeds:
    def test_shared_index_set(self, rng):
        full = random_full(rng, G8)
        seed_r, seed_i = extract_seeds(full, SeedSpec(fraction=Fraction(1, 4)), rng)
        assert len(seed_r) == len(seed_i) == 256
        assert np.array_equal(seed_r.indices, seed_i.indices)
        assert np.array_equal(seed_r.values, full.real.spins[seed_r.indices - 1])
        assert np.array_equal(seed_i.values, full.imag.spins[seed_i.indices - 1])

    def test_independent_index_sets(self, rng):
        full = random_full(rng, G8)
        spec = SeedSpec(count=256, shared_index_set=False)
        differing = 0
        for _ in range(5):
            seed_r, seed_i = extract_seeds(full, spec, rng)
            differing += not np.array_equal(seed_r.indices, seed_i.indices)
        assert differing == 5


class TestAggregate:
    def test_singleton_vote(self, rng):
        part = random_part(rng, LatticeGeometry(2, 4))
        assert aggregate([part]) == part
        assert aggregate([part, part, part]) == part

    def test_majority_and_tie_rule(self):
        g = LatticeGeometry(1, 3)
        plus = TemplatePart(g, [1, 1, 1])
        minus = TemplatePart(g, [-1, -1, -1])
        assert aggregate([plus, plus, minus]) == plus
        assert aggregate([minus, minus, plus]) == minus
        # a zero vote sum resolves to +1
        assert aggregate([plus, minus]) == plus

    def test_errors(self, rng):
        with pytest.raises(ValueError):
            aggregate([])
        a = random_part(rng, LatticeGeometry(2, 3))
        b = random_part(rng, LatticeGeometry(2, 4))
        with pytest.raises(ValueError):
            aggregate([a, b])

    def test_negation_commutes_on_tie_free_votes(self, rng):
        g = LatticeGeometry(3, 5)
        snaps = [random_part(rng, g) for _ in range(3)]  # odd count: no ties
        flipped = [s.negated() for s in snaps]
        assert aggregate(flipped) == aggregate(snaps).negated()


class TestReconstruct:
    def test_output_lies_in_seed_class(self, rng):
        g = LatticeGeometry(4, 8)
        part = random_part(rng, g)
        seed = extract_seed(part, SeedSpec(fraction=Fraction(1, 6)), rng)
        recon = reconstruct_part(seed, J, RecordingSchedule.linear(100, 10), rng)
        assert np.array_equal(recon.spins[seed.indices - 1], seed.values)

    def test_fully_seeded_identity_any_schedule(self, rng):
        part = random_part(rng, LatticeGeometry(3, 4))
        seed = Seed(part.geometry, np.arange(1, 13), part.spins)
        for sched in (RecordingSchedule((0,)), RecordingSchedule.linear(50, 3)):
            assert reconstruct_part(seed, J, sched, rng) == part

    def test_full_fraction_spec_is_identity(self, rng):
        full = random_full(rng, LatticeGeometry(3, 4))
        recon, seed_r, seed_i = reconstruct_full(
            full, SeedSpec(fraction=1), J, RecordingSchedule((0, 10)), rng
        )
        assert recon == full
        assert len(seed_r) == 12

    def test_beats_random_start_on_model_originals(self):
        # synthetic originals drawn from the model itself: the reconstruction
        # should land strictly closer than the random initial template
        rng = np.random.default_rng(2718)
        spec = SeedSpec(fraction=Fraction(1, 6))
        sched = RecordingSchedule.linear(1000, 10)
        wins = 0
        trials = 10
        for _ in range(trials):
            parts = [
                run_chain(Seed.empty(G8), J, RecordingSchedule((60_000,)), rng)[0]
                for _ in range(2)
            ]
            original = FullTemplate(*parts)
            seed_r, seed_i = extract_seeds(original, spec, rng)
            init = FullTemplate(
                *(run_chain(s, J, RecordingSchedule((0,)), np.random.default_rng(rng.integers(2**63)))[0]
                  for s in (seed_r, seed_i))
            )
            recon = FullTemplate(
                reconstruct_part(seed_r, J, sched, rng),
                reconstruct_part(seed_i, J, sched, rng),
            )
            wins += hamming_distance(original, recon) < hamming_distance(original, init)
        assert wins >= trials - 1
