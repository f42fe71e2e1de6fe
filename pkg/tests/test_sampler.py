import numpy as np
import pytest

from conftest import random_part, random_seed_bits
from seeded_ising import (
    ChainState,
    IsingParams,
    LatticeGeometry,
    RecordingSchedule,
    Seed,
    TemplatePart,
    disagreement_counts,
    empirical_distribution,
    exact_distribution,
    flip_log_ratio,
    initial_template,
    metropolis_step,
    run_chain,
    total_variation,
    unnormalized_log_prob,
)

J = IsingParams(0.2, 0.3)
G8 = LatticeGeometry(8, 128)


class TestParamsAndSchedule:
    def test_params_must_be_finite(self):
        with pytest.raises(ValueError):
            IsingParams(float("nan"), 0.1)
        with pytest.raises(ValueError):
            IsingParams(0.1, float("inf"))
        IsingParams(-0.7, 0.0)  # any finite pair is legal

    def test_schedule_validation(self):
        with pytest.raises(ValueError):
            RecordingSchedule(())
        with pytest.raises(ValueError):
            RecordingSchedule((5, 5))
        with pytest.raises(ValueError):
            RecordingSchedule((-1, 3))
        assert RecordingSchedule((0,)).checkpoints == (0,)
        assert RecordingSchedule.linear(10_000, 100).checkpoints[::33] == (10_000, 340_000, 670_000, 1_000_000)
        assert RecordingSchedule.linear(10_000, 100).last == 1_000_000


class TestLogProb:
    def test_ground_state(self):
        part = TemplatePart(G8, np.ones(G8.size, dtype=np.int8))
        assert unnormalized_log_prob(part, J) == 0.0

    def test_alternating_row(self):
        part = TemplatePart(LatticeGeometry(1, 4), [1, -1, 1, -1])
        # d_h = 4 per the disagreement-count oracle, d_v = 0
        assert disagreement_counts(part) == (0, 4)
        assert unnormalized_log_prob(part, J) == -2 * 0.3 * 4


class TestInitialTemplate:
    def test_fully_seeded_is_deterministic(self, rng):
        g = LatticeGeometry(2, 3)
        part = random_part(rng, g)
        seed = Seed(g, np.arange(1, 7), part.spins)
        probe = np.random.default_rng(123)
        assert initial_template(seed, probe) == part
        # the generator was never consumed
        assert probe.random() == np.random.default_rng(123).random()

    def test_unseeded_mean_is_centered(self):
        g = LatticeGeometry(100, 1000)
        part = initial_template(Seed.empty(g), np.random.default_rng(42))
        mean = part.spins.astype(np.float64).mean()
        assert abs(mean) < 4 / np.sqrt(g.size)

    def test_pinning_contract(self, rng):
        g = LatticeGeometry(4, 8)
        seed = random_seed_bits(rng, g, 10)
        part = initial_template(seed, rng)
        assert np.array_equal(part.spins[seed.indices - 1], seed.values)


class TestFlipLogRatio:
    def test_interior_of_uniform_lattice(self, rng):
        state = ChainState(
            TemplatePart(G8, np.ones(G8.size, dtype=np.int8)), Seed.empty(G8), J, rng
        )
        k = G8.index_of(4, 10)  # two vertical and two horizontal neighbours
        assert flip_log_ratio(state, k) == pytest.approx(-2.0, abs=1e-15)

    def test_top_row_of_uniform_lattice(self, rng):
        state = ChainState(
            TemplatePart(G8, np.ones(G8.size, dtype=np.int8)), Seed.empty(G8), J, rng
        )
        k = G8.index_of(1, 10)  # one vertical, two horizontal
        assert flip_log_ratio(state, k) == pytest.approx(-1.6, abs=1e-15)

    def test_balanced_neighbourhood_is_neutral(self, rng):
        g = LatticeGeometry(3, 3)
        grid = np.ones((3, 3), dtype=np.int8)
        grid[2, 1] = -1  # below centre
        grid[1, 2] = -1  # right of centre
        state = ChainState(TemplatePart.from_grid(g, grid), Seed.empty(g), J, rng)
        assert flip_log_ratio(state, g.index_of(2, 2)) == 0.0

    def test_rejects_pinned_or_bad_index(self, rng):
        g = LatticeGeometry(2, 3)
        seed = Seed(g, [4], [1])
        state = ChainState(initial_template(seed, rng), seed, J, rng)
        with pytest.raises(ValueError):
            flip_log_ratio(state, 4)
        with pytest.raises(ValueError):
            flip_log_ratio(state, 0)

    def test_equals_from_scratch_log_prob_difference_exactly(self, rng):
        g = LatticeGeometry(6, 17)
        for params in (J, IsingParams(-0.4, 0.15), IsingParams(0.0, 0.9)):
            part = random_part(rng, g)
            seed = random_seed_bits(rng, g, 20)
            spins = part.spins.copy()
            spins[seed.indices - 1] = seed.values
            part = TemplatePart(g, spins)
            state = ChainState(part, seed, params, rng)
            free = state.free_indices()
            for k in rng.choice(free, size=200):
                k = int(k)
                flipped = part.spins.copy()
                flipped[k - 1] = -flipped[k - 1]
                expected = unnormalized_log_prob(TemplatePart(g, flipped), params) - unnormalized_log_prob(part, params)
                assert flip_log_ratio(state, k) == expected  # bitwise, not approx


class TestChainState:
    def test_requires_lattice_matching_seed(self, rng):
        g = LatticeGeometry(2, 3)
        seed = Seed(g, [1], [1])
        bad = TemplatePart(g, -np.ones(6, dtype=np.int8))
        with pytest.raises(ValueError):
            ChainState(bad, seed, J, rng)

    def test_incremental_counts_stay_exact(self, rng):
        g = LatticeGeometry(5, 9)
        seed = random_seed_bits(rng, g, 7)
        state = ChainState.from_seed(seed, J, rng)
        for steps in (1, 13, 500, 4096):
            state.advance(steps)
            assert state.cached_counts == disagreement_counts(state.lattice)
        assert state.iteration == 1 + 13 + 500 + 4096

    def test_pinning_holds_throughout(self, rng):
        g = LatticeGeometry(4, 6)
        seed = random_seed_bits(rng, g, 6)
        state = ChainState.from_seed(seed, J, rng)
        for _ in range(20):
            state.advance(97)
            assert np.array_equal(state.lattice.spins[seed.indices - 1], seed.values)

    def test_zero_coupling_accepts_every_proposal(self, rng):
        g = LatticeGeometry(3, 5)
        state = ChainState.from_seed(Seed.empty(g), IsingParams(0.0, 0.0), rng)
        for _ in range(50):
            before = state.lattice.spins
            metropolis_step(state)
            assert np.count_nonzero(state.lattice.spins != before) == 1

    def test_fully_seeded_step_errors(self, rng):
        g = LatticeGeometry(2, 3)
        part = random_part(rng, g)
        seed = Seed(g, np.arange(1, 7), part.spins)
        state = ChainState(part, seed, J, rng)
        with pytest.raises(ValueError):
            metropolis_step(state)


class TestRunChain:
    def test_zero_checkpoint_returns_initial_only(self):
        g = LatticeGeometry(3, 4)
        seed = Seed(g, [5], [-1])
        snaps = run_chain(seed, J, RecordingSchedule((0,)), np.random.default_rng(9))
        assert len(snaps) == 1
        assert snaps[0] == initial_template(seed, np.random.default_rng(9))

    def test_reference_configuration_runs(self, rng):
        # 10^4 * (1..100) on an 8x128 part with a quarter of the sites pinned
        seed = random_seed_bits(rng, G8, 256)
        snaps = run_chain(seed, J, RecordingSchedule.linear(10_000, 100), rng)
        assert len(snaps) == 100
        for snap in (snaps[0], snaps[49], snaps[99]):
            assert np.array_equal(snap.spins[seed.indices - 1], seed.values)

    def test_deterministic_replay(self, rng):
        g = LatticeGeometry(4, 8)
        seed = random_seed_bits(rng, g, 5)
        sched = RecordingSchedule((10, 50, 200))
        a = run_chain(seed, J, sched, np.random.default_rng(314))
        b = run_chain(seed, J, sched, np.random.default_rng(314))
        assert a == b

    def test_fully_seeded_rejected(self, rng):
        g = LatticeGeometry(2, 3)
        part = random_part(rng, g)
        seed = Seed(g, np.arange(1, 7), part.spins)
        with pytest.raises(ValueError):
            run_chain(seed, J, RecordingSchedule((0,)), rng)


class TestStationarity:
    def test_tiny_circular_lattice_matches_gibbs(self):
        # 1x3 ring, one pinned site, no vertical coupling
        g = LatticeGeometry(1, 3)
        seed = Seed(g, [2], [1])
        params = IsingParams(0.0, 0.3)
        rng = np.random.default_rng(77)
        exact = exact_distribution(seed, params, g)
        emp = empirical_distribution(seed, params, g, burn_in=10_000, samples=200_000, thin=1, rng=rng)
        assert total_variation(exact, emp) < 0.02

    def test_global_flip_symmetry_of_the_law(self, rng):
        g = LatticeGeometry(2, 4)
        seed = random_seed_bits(rng, g, 3)
        negated = Seed(g, seed.indices, -seed.values)
        p = exact_distribution(seed, J, g)
        q = exact_distribution(negated, J, g)
        full = (1 << p.n_free) - 1
        for code in range(1 << p.n_free):
            assert q.values[code ^ full] == pytest.approx(p.values[code], rel=1e-12)
