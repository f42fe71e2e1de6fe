"""Metropolis sampling of seeded lattice configurations.

The target law on the set T(s) of templates agreeing with a seed s is

    P(x) = exp(J_v * sum_v x_i x_j + J_h * sum_h x_i x_j) / Z,

equivalently P(x) is proportional to the unnormalized weight
``pi(x) = exp(-2 J_v d_v - 2 J_h d_h)`` in terms of disagreeing edge counts.
Proposals flip a single uniformly chosen non-seed site; pinned sites never
move.  The flip acceptance ratio is evaluated incrementally from the edges
touching the proposed site, and the chain keeps exact running disagreement
counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import LatticeGeometry, Seed, TemplatePart, disagreement_counts

_CHUNK = 1 << 15  # proposals drawn from the RNG per batch


@dataclass(frozen=True)
class IsingParams:
    """Dimensionless coupling pair (vertical, horizontal)."""

    j_v: float
    j_h: float

    def __post_init__(self):
        if not (math.isfinite(self.j_v) and math.isfinite(self.j_h)):
            raise ValueError("couplings must be finite")


@dataclass(frozen=True)
class RecordingSchedule:
    """Strictly increasing iteration counts at which chain snapshots are taken."""

    checkpoints: tuple[int, ...]

    def __post_init__(self):
        cps = tuple(int(c) for c in self.checkpoints)
        if not cps:
            raise ValueError("schedule must have at least one checkpoint")
        if cps[0] < 0 or any(a >= b for a, b in zip(cps, cps[1:])):
            raise ValueError("checkpoints must be nonnegative and strictly increasing")
        object.__setattr__(self, "checkpoints", cps)

    @classmethod
    def linear(cls, step: int, count: int) -> "RecordingSchedule":
        """Checkpoints step, 2*step, ..., count*step."""
        if step < 1 or count < 1:
            raise ValueError("step and count must be positive")
        return cls(tuple(step * j for j in range(1, count + 1)))

    @property
    def length(self) -> int:
        return len(self.checkpoints)

    @property
    def last(self) -> int:
        return self.checkpoints[-1]


@lru_cache(maxsize=32)
def _neighbor_tables(geometry: LatticeGeometry):
    """Flat 0-based neighbour indices (up, down, left, right) per site.

    Missing vertical neighbours point at the sentinel slot ``m*n``, which the
    chain keeps at spin 0 so such edges contribute nothing.
    """
    m, n = geometry.rows, geometry.cols
    mn = m * n
    up = [mn] * mn
    down = [mn] * mn
    left = [0] * mn
    right = [0] * mn
    for j in range(n):
        for i in range(m):
            k = i + j * m
            if i > 0:
                up[k] = k - 1
            if i < m - 1:
                down[k] = k + 1
            left[k] = i + ((j - 1) % n) * m
            right[k] = i + ((j + 1) % n) * m
    return tuple(up), tuple(down), tuple(left), tuple(right)


def _log_pi(params: IsingParams, d_v: int, d_h: int) -> float:
    # Single shared evaluation path so incremental ratios and from-scratch
    # log-weights agree bit for bit.
    return (-2.0 * params.j_v) * d_v + (-2.0 * params.j_h) * d_h


def unnormalized_log_prob(part: TemplatePart, params: IsingParams) -> float:
    """log pi(x) = -2 J_v d_v - 2 J_h d_h for the given configuration."""
    d_v, d_h = disagreement_counts(part)
    return _log_pi(params, d_v, d_h)


def initial_template(seed: Seed, rng: np.random.Generator) -> TemplatePart:
    """Random member of T(s): pinned sites fixed, the rest fair coin flips.

    A fully pinned seed is returned verbatim without consuming randomness.
    """
    g = seed.geometry
    if len(seed) == g.size:
        spins = np.empty(g.size, dtype=np.int8)
        spins[seed.indices - 1] = seed.values
        return TemplatePart(g, spins)
    spins = rng.integers(0, 2, size=g.size, dtype=np.int8) * 2 - 1
    if len(seed):
        spins[seed.indices - 1] = seed.values
    return TemplatePart(g, spins)


class ChainState:
    """Mutable state of one Metropolis chain over T(s).

    Owns a working copy of the lattice, the exact running disagreement
    counts, an iteration counter, and the RNG stream driving proposals.
    A state is single-owner: run concurrent chains on separate states with
    independently spawned RNG streams instead of sharing one.
    """

    __slots__ = (
        "seed", "params", "iteration", "_geometry", "_rng", "_w",
        "_free", "_pinned", "_up", "_down", "_left", "_right", "_dv", "_dh",
    )

    def __init__(
        self,
        lattice: TemplatePart,
        seed: Seed,
        params: IsingParams,
        rng: np.random.Generator,
    ):
        if lattice.geometry != seed.geometry:
            raise ValueError("lattice and seed geometry differ")
        if len(seed) and not np.array_equal(lattice.spins[seed.indices - 1], seed.values):
            raise ValueError("lattice disagrees with the seed at a pinned site")
        self.seed = seed
        self.params = params
        self.iteration = 0
        self._geometry = lattice.geometry
        self._rng = rng
        self._w = lattice.spins.tolist()
        self._w.append(0)  # sentinel for missing vertical neighbours
        mask = seed.pin_mask()
        self._free = np.nonzero(~mask)[0].tolist()
        self._pinned = mask.tolist()
        self._up, self._down, self._left, self._right = _neighbor_tables(lattice.geometry)
        self._dv, self._dh = disagreement_counts(lattice)

    @classmethod
    def from_seed(cls, seed: Seed, params: IsingParams, rng: np.random.Generator) -> "ChainState":
        return cls(initial_template(seed, rng), seed, params, rng)

    @property
    def geometry(self) -> LatticeGeometry:
        return self._geometry

    @property
    def lattice(self) -> TemplatePart:
        """Snapshot of the current configuration."""
        return TemplatePart(self._geometry, np.array(self._w[:-1], dtype=np.int8))

    @property
    def cached_counts(self) -> tuple[int, int]:
        """Incrementally maintained (d_v, d_h); always equals a full recount."""
        return self._dv, self._dh

    @property
    def free_site_count(self) -> int:
        return len(self._free)

    def free_indices(self) -> tuple[int, ...]:
        """Non-seed site indices, 1-based, ascending."""
        return tuple(k + 1 for k in self._free)

    def log_prob(self) -> float:
        """Unnormalized log probability of the current configuration."""
        return _log_pi(self.params, self._dv, self._dh)

    def _local_deltas(self, k0: int) -> tuple[int, int]:
        """Change (delta d_v, delta d_h) caused by flipping flat site k0."""
        w = self._w
        x = w[k0]
        ddv = x * (w[self._up[k0]] + w[self._down[k0]])
        ddh = x * (w[self._left[k0]] + w[self._right[k0]])
        return ddv, ddh

    def advance(self, n_steps: int) -> "ChainState":
        """Run ``n_steps`` proposals; rejected proposals count as iterations too."""
        if n_steps < 0:
            raise ValueError("n_steps must be >= 0")
        if n_steps == 0:
            return self
        if not self._free:
            raise ValueError("every site is pinned by the seed; nothing to sample")
        rng = self._rng
        w = self._w
        free = self._free
        up, down, left, right = self._up, self._down, self._left, self._right
        njv2 = -2.0 * self.params.j_v
        njh2 = -2.0 * self.params.j_h
        dv, dh = self._dv, self._dh
        n_free = len(free)
        exp = math.exp
        remaining = n_steps
        while remaining:
            span = min(_CHUNK, remaining)
            ks = rng.integers(0, n_free, size=span)
            us = _open_uniform(rng, span)
            ks = ks.tolist()
            us = us.tolist()
            for t in range(span):
                k = free[ks[t]]
                x = w[k]
                ddv = x * (w[up[k]] + w[down[k]])
                ddh = x * (w[left[k]] + w[right[k]])
                ratio = (njv2 * (dv + ddv) + njh2 * (dh + ddh)) - (njv2 * dv + njh2 * dh)
                if ratio >= 0.0 or us[t] < exp(ratio):
                    w[k] = -x
                    dv += ddv
                    dh += ddh
            remaining -= span
        self._dv, self._dh = dv, dh
        self.iteration += n_steps
        return self

    def advance_recording(self, burn_in: int, samples: int, thin: int) -> np.ndarray:
        """Run burn_in + samples*thin proposals, tallying visited states.

        After the burn-in, the packed free-site configuration is recorded
        every ``thin`` proposals.  Returns occurrence counts indexed by the
        packed code (bit b set iff the b-th free site, in ascending index
        order, is +1).  Requires at most 20 free sites.
        """
        if burn_in < 0 or samples < 1 or thin < 1:
            raise ValueError("need burn_in >= 0, samples >= 1, thin >= 1")
        if not self._free:
            raise ValueError("every site is pinned by the seed; nothing to sample")
        if len(self._free) > 20:
            raise ValueError("state recording supports at most 20 free sites")
        rng = self._rng
        w = self._w
        free = self._free
        up, down, left, right = self._up, self._down, self._left, self._right
        njv2 = -2.0 * self.params.j_v
        njh2 = -2.0 * self.params.j_h
        dv, dh = self._dv, self._dh
        n_free = len(free)
        exp = math.exp
        bitpos = [-1] * (self._geometry.size + 1)
        code = 0
        for b, k in enumerate(free):
            bitpos[k] = b
            if w[k] == 1:
                code |= 1 << b
        counts = [0] * (1 << n_free)
        total = burn_in + samples * thin
        next_record = burn_in + thin
        done = 0
        while done < total:
            span = min(_CHUNK, total - done)
            ks = rng.integers(0, n_free, size=span)
            us = _open_uniform(rng, span)
            ks = ks.tolist()
            us = us.tolist()
            for t in range(span):
                k = free[ks[t]]
                x = w[k]
                ddv = x * (w[up[k]] + w[down[k]])
                ddh = x * (w[left[k]] + w[right[k]])
                ratio = (njv2 * (dv + ddv) + njh2 * (dh + ddh)) - (njv2 * dv + njh2 * dh)
                if ratio >= 0.0 or us[t] < exp(ratio):
                    w[k] = -x
                    dv += ddv
                    dh += ddh
                    code ^= 1 << bitpos[k]
                if done + t + 1 == next_record:
                    counts[code] += 1
                    next_record += thin
            done += span
        self._dv, self._dh = dv, dh
        self.iteration += total
        return np.array(counts, dtype=np.int64)


def _open_uniform(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform draws on the open interval (0, 1)."""
    us = rng.random(size)
    while True:
        zero = us == 0.0
        if not zero.any():
            return us
        us[zero] = rng.random(int(zero.sum()))


def flip_log_ratio(state: ChainState, k: int) -> float:
    """log pi(x with site k flipped) - log pi(x), for a non-seed site k.

    Evaluated from the edges incident to k:
    ``2 J_v (d_v,k - a_v,k) + 2 J_h (d_h,k - a_h,k)`` where d/a count the
    disagreeing/agreeing incident edges.  Exactly equals the difference of
    ``unnormalized_log_prob`` between the flipped and current lattices.
    """
    state.geometry._check_index(k)
    if state._pinned[k - 1]:
        raise ValueError(f"site {k} is pinned by the seed")
    ddv, ddh = state._local_deltas(k - 1)
    p = state.params
    dv, dh = state._dv, state._dh
    return _log_pi(p, dv + ddv, dh + ddh) - _log_pi(p, dv, dh)


def metropolis_step(state: ChainState) -> ChainState:
    """One proposal at a uniform random non-seed site, accepted with
    probability min(1, pi(x')/pi(x)); the iteration count advances either way."""
    return state.advance(1)


def run_chain(
    seed: Seed,
    params: IsingParams,
    schedule: RecordingSchedule,
    rng: np.random.Generator,
) -> list[TemplatePart]:
    """Run one chain from a random member of T(s), snapshotting at checkpoints.

    Returns the lattice after n_1, n_2, ..., n_L proposals of a single
    continuous chain.  Every snapshot agrees with the seed at its pinned
    sites, and identical RNG seeding reproduces the list bit for bit.
    """
    if len(seed) == seed.geometry.size:
        raise ValueError("every site is pinned by the seed; nothing to sample")
    state = ChainState.from_seed(seed, params, rng)
    snapshots = []
    reached = 0
    for cp in schedule.checkpoints:
        state.advance(cp - reached)
        reached = cp
        snapshots.append(state.lattice)
    return snapshots
