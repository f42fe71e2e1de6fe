"""Seed extraction and majority-vote template reconstruction.

A reconstruction runs one chain per template part from a random start in
T(s), snapshots it at the schedule checkpoints, and takes the per-site
majority over the snapshots, with ties resolved to +1:

    r_i = +1  if  sum_j t^(n_j)_i >= 0,   else  -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from .lattice import FullTemplate, LatticeGeometry, Seed, TemplatePart
from .sampler import IsingParams, RecordingSchedule, initial_template, run_chain


@dataclass(frozen=True)
class SeedSpec:
    """How to carve a seed out of a full template.

    Either ``fraction`` (of each part's sites, rounded up) or ``count``
    (sites per part) must be given.  With ``shared_index_set`` the real and
    imaginary parts pin the same site set; otherwise each part draws its own.
    """

    fraction: Fraction | None = None
    count: int | None = None
    shared_index_set: bool = True

    def __post_init__(self):
        if (self.fraction is None) == (self.count is None):
            raise ValueError("give exactly one of fraction or count")
        if self.fraction is not None:
            f = Fraction(self.fraction)
            if not 0 < f <= 1:
                raise ValueError(f"fraction must lie in (0, 1], got {f}")
            object.__setattr__(self, "fraction", f)
        else:
            if self.count < 1:
                raise ValueError("count must be >= 1")

    def resolved_count(self, geometry: LatticeGeometry) -> int:
        """Pinned sites per part; fractions round up (ceil)."""
        if self.count is not None:
            if self.count > geometry.size:
                raise ValueError(
                    f"seed count {self.count} exceeds lattice size {geometry.size}"
                )
            return self.count
        return ceil(self.fraction * geometry.size)


def _draw_index_set(geometry: LatticeGeometry, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random count-subset of flat 0-based indices, sorted."""
    idx = rng.choice(geometry.size, size=count, replace=False)
    idx.sort()
    return idx


def _seed_at(part: TemplatePart, idx0: np.ndarray) -> Seed:
    return Seed(part.geometry, idx0 + 1, part.spins[idx0])


def extract_seed(part: TemplatePart, spec: SeedSpec, rng: np.random.Generator) -> Seed:
    """Pin a uniformly random index set of the spec's size to the part's values."""
    count = spec.resolved_count(part.geometry)
    return _seed_at(part, _draw_index_set(part.geometry, count, rng))


def extract_seeds(
    original: FullTemplate, spec: SeedSpec, rng: np.random.Generator
) -> tuple[Seed, Seed]:
    """Seeds for the real and imaginary parts, sharing one index set when asked."""
    geometry = original.geometry
    count = spec.resolved_count(geometry)
    if spec.shared_index_set:
        idx0 = _draw_index_set(geometry, count, rng)
        return _seed_at(original.real, idx0), _seed_at(original.imag, idx0)
    return (
        _seed_at(original.real, _draw_index_set(geometry, count, rng)),
        _seed_at(original.imag, _draw_index_set(geometry, count, rng)),
    )


def aggregate(snapshots: list[TemplatePart]) -> TemplatePart:
    """Per-site majority vote over snapshots; a zero vote sum yields +1."""
    if not snapshots:
        raise ValueError("need at least one snapshot")
    geometry = snapshots[0].geometry
    votes = np.zeros(geometry.size, dtype=np.int64)
    for snap in snapshots:
        if snap.geometry != geometry:
            raise ValueError("snapshots must share one geometry")
        votes += snap.spins
    return TemplatePart(geometry, np.where(votes >= 0, 1, -1).astype(np.int8))


def reconstruct_part(
    seed: Seed,
    params: IsingParams,
    schedule: RecordingSchedule,
    rng: np.random.Generator,
) -> TemplatePart:
    """Majority vote over one chain's snapshots; output always lies in T(s)."""
    if len(seed) == seed.geometry.size:
        # Nothing free to sample: the seed determines the part outright.
        return initial_template(seed, rng)
    return aggregate(run_chain(seed, params, schedule, rng))


def reconstruct_full(
    original: FullTemplate,
    spec: SeedSpec,
    params: IsingParams,
    schedule: RecordingSchedule,
    rng: np.random.Generator,
) -> tuple[FullTemplate, Seed, Seed]:
    """Extract seeds from both parts, reconstruct each, combine.

    Returns (reconstructed template, real seed, imaginary seed).  The two
    parts run as independent chains off the same RNG stream in sequence.
    """
    seed_r, seed_i = extract_seeds(original, spec, rng)
    part_r = reconstruct_part(seed_r, params, schedule, rng)
    part_i = reconstruct_part(seed_i, params, schedule, rng)
    return FullTemplate(part_r, part_i), seed_r, seed_i
