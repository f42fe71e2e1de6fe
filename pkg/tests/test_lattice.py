import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_full, random_part
from seeded_ising import (
    HORIZONTAL,
    VERTICAL,
    FullTemplate,
    LatticeGeometry,
    Seed,
    TemplatePart,
    disagreement_counts,
    edge_sums,
    hamming_distance,
    hamming_distance_min_rotation,
    neighbors,
    rotate_columns,
)

G8 = LatticeGeometry(8, 128)

geometries = st.builds(
    LatticeGeometry, rows=st.integers(1, 5), cols=st.integers(3, 9)
)


class TestGeometry:
    def test_degenerate_shapes_rejected(self):
        with pytest.raises(ValueError):
            LatticeGeometry(0, 5)
        with pytest.raises(ValueError):
            LatticeGeometry(3, 2)
        with pytest.raises(ValueError):
            LatticeGeometry(3, 1)

    def test_edge_counts(self):
        assert G8.vertical_edge_count == G8.size - G8.cols == 7 * 128
        assert G8.horizontal_edge_count == G8.size == 1024

    @given(geometries)
    def test_index_position_bijection(self, g):
        seen = set()
        for j in range(1, g.cols + 1):
            for i in range(1, g.rows + 1):
                k = g.index_of(i, j)
                assert g.position_of(k) == (i, j)
                seen.add(k)
        assert seen == set(range(1, g.size + 1))

    def test_index_mapping_is_column_major(self):
        # k = i + (j - 1) * m
        assert G8.index_of(1, 1) == 1
        assert G8.index_of(8, 1) == 8
        assert G8.index_of(1, 2) == 9
        assert G8.index_of(4, 10) == 4 + 9 * 8

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            G8.position_of(0)
        with pytest.raises(ValueError):
            G8.position_of(G8.size + 1)
        with pytest.raises(ValueError):
            G8.index_of(9, 1)


class TestNeighbors:
    def test_interior_cell(self):
        nbrs = neighbors(G8, G8.index_of(4, 10))
        assert len(nbrs) == 4
        assert sum(1 for _, d in nbrs if d == VERTICAL) == 2
        assert sum(1 for _, d in nbrs if d == HORIZONTAL) == 2

    def test_open_top_boundary(self):
        nbrs = neighbors(G8, G8.index_of(1, 10))
        assert len(nbrs) == 3
        vertical = [k for k, d in nbrs if d == VERTICAL]
        assert vertical == [G8.index_of(2, 10)]

    def test_column_wrap(self):
        nbrs = neighbors(G8, G8.index_of(3, 128))
        horizontal = {k for k, d in nbrs if d == HORIZONTAL}
        assert horizontal == {G8.index_of(3, 127), G8.index_of(3, 1)}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            neighbors(G8, 0)

    @given(geometries)
    @settings(max_examples=30)
    def test_symmetry_and_degree_sums(self, g):
        tables = {k: neighbors(g, k) for k in range(1, g.size + 1)}
        for k, nbrs in tables.items():
            for other, direction in nbrs:
                assert (k, direction) in tables[other]
        h_total = sum(1 for nbrs in tables.values() for _, d in nbrs if d == HORIZONTAL)
        v_total = sum(1 for nbrs in tables.values() for _, d in nbrs if d == VERTICAL)
        assert h_total == 2 * g.size
        assert v_total == 2 * (g.size - g.cols)
        assert all(
            sum(1 for _, d in nbrs if d == HORIZONTAL) == 2 for nbrs in tables.values()
        )


def brute_force_edge_stats(part):
    """Independent route: walk every unordered neighbour pair once."""
    g = part.geometry
    d_v = d_h = s_v = s_h = 0
    for k in range(1, g.size + 1):
        for other, direction in neighbors(g, k):
            if other <= k:
                continue  # wrap pairs appear twice in the neighbour lists too
            prod = int(part.spins[k - 1]) * int(part.spins[other - 1])
            if direction == VERTICAL:
                s_v += prod
                d_v += prod == -1
            else:
                s_h += prod
                d_h += prod == -1
    return d_v, d_h, s_v, s_h


class TestDisagreementCounts:
    def test_uniform_lattice(self):
        part = TemplatePart(G8, np.ones(G8.size, dtype=np.int8))
        assert disagreement_counts(part) == (0, 0)

    def test_alternating_row_with_wrap(self):
        g = LatticeGeometry(1, 4)
        part = TemplatePart(g, [1, -1, 1, -1])
        assert disagreement_counts(part) == (0, 4)

    def test_matches_direct_edge_sum_oracle(self, rng):
        for g in (LatticeGeometry(3, 5), LatticeGeometry(8, 128)):
            part = random_part(rng, g)
            d_v, d_h = disagreement_counts(part)
            s_v, s_h = edge_sums(part)
            bd_v, bd_h, bs_v, bs_h = brute_force_edge_stats(part)
            assert (d_v, d_h) == (bd_v, bd_h)
            assert (s_v, s_h) == (bs_v, bs_h)
            assert s_v == g.size - g.cols - 2 * d_v
            assert s_h == g.size - 2 * d_h

    @given(geometries, st.integers(0, 2**32 - 1))
    @settings(max_examples=40)
    def test_energy_identity_property(self, g, seed):
        part = random_part(np.random.default_rng(seed), g)
        d_v, d_h = disagreement_counts(part)
        s_v, s_h = edge_sums(part)
        assert s_v == g.size - g.cols - 2 * d_v
        assert s_h == g.size - 2 * d_h


class TestTemplateContainers:
    def test_spin_validation(self):
        with pytest.raises(ValueError):
            TemplatePart(LatticeGeometry(1, 3), [1, 0, 1])
        with pytest.raises(ValueError):
            TemplatePart(LatticeGeometry(1, 3), [1, 1])

    def test_immutable(self, rng):
        part = random_part(rng, LatticeGeometry(2, 3))
        with pytest.raises(ValueError):
            part.spins[0] = -part.spins[0]
        with pytest.raises(AttributeError):
            part.spins = part.spins

    def test_grid_round_trip(self, rng):
        g = LatticeGeometry(3, 4)
        part = random_part(rng, g)
        assert TemplatePart.from_grid(g, part.grid()) == part
        # column-major flattening: grid[i-1, j-1] is site i + (j-1) m
        assert part.grid()[1, 2] == part.spins[g.index_of(2, 3) - 1]

    def test_bits_round_trip(self, rng):
        g = LatticeGeometry(2, 5)
        part = random_part(rng, g)
        assert TemplatePart.from_bits(g, part.to_bits()) == part
        assert set(np.unique(part.to_bits())) <= {0, 1}

    def test_full_template_requires_shared_geometry(self, rng):
        a = random_part(rng, LatticeGeometry(2, 4))
        b = random_part(rng, LatticeGeometry(2, 5))
        with pytest.raises(ValueError):
            FullTemplate(a, b)
        assert FullTemplate(a, a).bit_count == 16


class TestSeed:
    def test_validation(self):
        g = LatticeGeometry(2, 3)
        with pytest.raises(ValueError):
            Seed(g, [1, 1], [1, -1])  # duplicate index
        with pytest.raises(ValueError):
            Seed(g, [0], [1])  # out of range
        with pytest.raises(ValueError):
            Seed(g, [7], [1])
        with pytest.raises(ValueError):
            Seed(g, [1], [2])  # not a spin

    def test_empty_and_mapping(self):
        g = LatticeGeometry(2, 3)
        assert len(Seed.empty(g)) == 0
        seed = Seed.from_mapping(g, {5: -1, 2: 1})
        assert list(seed.entries()) == [(2, 1), (5, -1)]
        assert seed.pin_mask().tolist() == [False, True, False, False, True, False]


class TestHammingDistance:
    def test_identity_and_complement(self, rng):
        a = random_full(rng, G8)
        assert hamming_distance(a, a) == 0.0
        negated = FullTemplate(a.real.negated(), a.imag.negated())
        assert hamming_distance(a, negated) == 1.0

    def test_single_bit(self, rng):
        a = random_full(rng, G8)
        spins = a.real.spins.copy()
        spins[137] = -spins[137]
        b = FullTemplate(TemplatePart(G8, spins), a.imag)
        assert hamming_distance(a, b) == 1 / 2048

    def test_geometry_mismatch(self, rng):
        a = random_full(rng, LatticeGeometry(2, 4))
        b = random_full(rng, LatticeGeometry(2, 5))
        with pytest.raises(ValueError):
            hamming_distance(a, b)

    def test_scaled_metric(self, rng):
        g = LatticeGeometry(3, 6)
        for _ in range(50):
            a, b, c = (random_full(rng, g) for _ in range(3))
            assert hamming_distance(a, b) == hamming_distance(b, a)
            assert (hamming_distance(a, b) == 0.0) == (a == b)
            assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c) + 1e-15


class TestRotationMatching:
    def test_exact_rotated_copy(self, rng):
        a = random_full(rng, G8)
        b = rotate_columns(a, 3)
        assert hamming_distance_min_rotation(a, b, max_shift=8) == (0.0, 3)

    def test_zero_shift_degenerates_to_plain(self, rng):
        a, b = random_full(rng, G8), random_full(rng, G8)
        d, s = hamming_distance_min_rotation(a, b, max_shift=0)
        assert s == 0
        assert d == hamming_distance(a, b)

    def test_never_exceeds_plain_distance(self, rng):
        g = LatticeGeometry(4, 16)
        for _ in range(20):
            a, b = random_full(rng, g), random_full(rng, g)
            d, _ = hamming_distance_min_rotation(a, b, max_shift=5)
            assert d <= hamming_distance(a, b)

    def test_symmetry_under_swap(self, rng):
        g = LatticeGeometry(4, 16)
        for _ in range(20):
            a, b = random_full(rng, g), random_full(rng, g)
            d_ab, s_ab = hamming_distance_min_rotation(a, b, max_shift=5)
            d_ba, s_ba = hamming_distance_min_rotation(b, a, max_shift=5)
            assert d_ab == d_ba
            # the negated swap shift reaches the same minimum (it may differ
            # from s_ab only when several shifts tie)
            assert hamming_distance(rotate_columns(a, -s_ba), b) == d_ab

    def test_tie_break_prefers_small_and_negative(self):
        g = LatticeGeometry(1, 4)
        ones = FullTemplate(
            TemplatePart(g, np.ones(4, np.int8)), TemplatePart(g, np.ones(4, np.int8))
        )
        # every rotation of a constant template ties at distance 0
        assert hamming_distance_min_rotation(ones, ones, max_shift=2) == (0.0, 0)

    def test_errors(self, rng):
        a = random_full(rng, LatticeGeometry(2, 4))
        with pytest.raises(ValueError):
            hamming_distance_min_rotation(a, a, max_shift=4)  # >= cols
        with pytest.raises(ValueError):
            hamming_distance_min_rotation(a, a, max_shift=-1)
        b = random_full(rng, LatticeGeometry(2, 5))
        with pytest.raises(ValueError):
            hamming_distance_min_rotation(a, b, max_shift=2)

    def test_rotate_columns_moves_content_right(self, rng):
        a = random_full(rng, LatticeGeometry(2, 5))
        b = rotate_columns(a, 2)
        assert np.array_equal(b.real.grid()[:, 2], a.real.grid()[:, 0])
        assert rotate_columns(b, -2) == a
