"""Exact brute-force reference for small lattices.

Enumerates every completion of a seed (up to 20 free sites), computes the
normalized Gibbs law and its partition function, and compares running chains
against that ground truth.  This is the validation harness for the sampler;
it is deliberately independent of the incremental edge accounting the chain
uses, summing spin products over explicit edge lists instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import logsumexp

from .lattice import LatticeGeometry, Seed, TemplatePart
from .sampler import ChainState, IsingParams, flip_log_ratio

MAX_FREE_BITS = 20

_ENUM_CHUNK = 1 << 13


@lru_cache(maxsize=32)
def _edge_arrays(geometry: LatticeGeometry):
    """All edges as flat 0-based endpoint arrays (vertical, then horizontal)."""
    m, n = geometry.rows, geometry.cols
    v_a, v_b, h_a, h_b = [], [], [], []
    for j in range(n):
        for i in range(m):
            k = i + j * m
            if i < m - 1:
                v_a.append(k)
                v_b.append(k + 1)
            h_a.append(k)
            h_b.append(i + ((j + 1) % n) * m)
    return (
        np.array(v_a, dtype=np.intp), np.array(v_b, dtype=np.intp),
        np.array(h_a, dtype=np.intp), np.array(h_b, dtype=np.intp),
    )


def _free_indices0(seed: Seed) -> np.ndarray:
    return np.nonzero(~seed.pin_mask())[0]


class _AssignmentTable:
    """Values keyed by packed free-site assignments.

    Bit b of a code is set iff the b-th free site (ascending index order)
    carries spin +1.  ``free_indices`` are 1-based.
    """

    __slots__ = ("free_indices", "values")

    def __init__(self, free_indices: tuple[int, ...], values: np.ndarray):
        self.free_indices = free_indices
        values.setflags(write=False)
        self.values = values

    @property
    def n_free(self) -> int:
        return len(self.free_indices)

    def code_of(self, assignment) -> int:
        signs = np.asarray(assignment)
        if signs.shape != (self.n_free,) or not np.all(np.abs(signs) == 1):
            raise ValueError(f"assignment must be {self.n_free} spins of +/-1")
        return int(np.sum((signs == 1) * (1 << np.arange(self.n_free, dtype=np.int64))))

    def assignment_of(self, code: int) -> tuple[int, ...]:
        return tuple(1 if (code >> b) & 1 else -1 for b in range(self.n_free))

    def __getitem__(self, assignment) -> float:
        return float(self.values[self.code_of(assignment)])

    def items(self):
        """Iterate (assignment sign tuple, value) over all codes."""
        for code, val in enumerate(self.values.tolist()):
            yield self.assignment_of(code), val


class ExactDistribution(_AssignmentTable):
    """Normalized Gibbs probabilities over all completions of a seed."""

    __slots__ = ("log_z",)

    def __init__(self, free_indices, probabilities, log_z):
        super().__init__(free_indices, probabilities)
        self.log_z = log_z

    @property
    def probabilities(self) -> np.ndarray:
        return self.values


class EmpiricalDistribution(_AssignmentTable):
    """Visit frequencies of a chain over packed free-site assignments."""

    __slots__ = ("samples",)

    def __init__(self, free_indices, frequencies, samples):
        super().__init__(free_indices, frequencies)
        self.samples = samples

    @property
    def frequencies(self) -> np.ndarray:
        return self.values


def _base_spins(seed: Seed) -> np.ndarray:
    base = np.full(seed.geometry.size, -1, dtype=np.int8)
    if len(seed):
        base[seed.indices - 1] = seed.values
    return base


def _enumerate_log_weights(seed: Seed, params: IsingParams, geometry: LatticeGeometry) -> tuple[np.ndarray, np.ndarray]:
    free0 = _free_indices0(seed)
    n_free = free0.size
    if n_free > MAX_FREE_BITS:
        raise ValueError(f"{n_free} free sites exceed the enumeration bound {MAX_FREE_BITS}")
    v_a, v_b, h_a, h_b = _edge_arrays(geometry)
    base = _base_spins(seed)
    bit_weights = 1 << np.arange(n_free, dtype=np.int64)
    log_w = np.empty(1 << n_free, dtype=np.float64)
    for start in range(0, 1 << n_free, _ENUM_CHUNK):
        codes = np.arange(start, min(start + _ENUM_CHUNK, 1 << n_free), dtype=np.int64)
        spins = np.tile(base, (codes.size, 1))
        spins[:, free0] = (((codes[:, None] & bit_weights) > 0) * 2 - 1).astype(np.int8)
        s16 = spins.astype(np.int16)
        sum_v = (s16[:, v_a] * s16[:, v_b]).sum(axis=1)
        sum_h = (s16[:, h_a] * s16[:, h_b]).sum(axis=1)
        log_w[codes] = params.j_v * sum_v + params.j_h * sum_h
    return log_w, free0


def exact_distribution(seed: Seed, params: IsingParams, geometry: LatticeGeometry) -> ExactDistribution:
    """Enumerate all completions of the seed and normalize their Gibbs weights.

    Weights are exp(J_v sum_v + J_h sum_h) over explicit edge lists;
    ``log_z`` is the log partition function of that weighting.
    """
    if geometry != seed.geometry:
        raise ValueError("geometry does not match the seed")
    log_w, free0 = _enumerate_log_weights(seed, params, geometry)
    log_z = float(logsumexp(log_w))
    return ExactDistribution(
        free_indices=tuple(int(k) + 1 for k in free0),
        probabilities=np.exp(log_w - log_z),
        log_z=log_z,
    )


def empirical_distribution(
    seed: Seed,
    params: IsingParams,
    geometry: LatticeGeometry,
    burn_in: int,
    samples: int,
    thin: int,
    rng: np.random.Generator,
) -> EmpiricalDistribution:
    """Visit frequencies of a Metropolis chain after burn-in, thinned.

    The chain starts from a random completion of the seed, discards
    ``burn_in`` proposals, then records the state every ``thin`` proposals,
    ``samples`` times in total.
    """
    if geometry != seed.geometry:
        raise ValueError("geometry does not match the seed")
    free0 = _free_indices0(seed)
    if free0.size > MAX_FREE_BITS:
        raise ValueError(f"{free0.size} free sites exceed the enumeration bound {MAX_FREE_BITS}")
    state = ChainState.from_seed(seed, params, rng)
    counts = state.advance_recording(burn_in=burn_in, samples=samples, thin=thin)
    return EmpiricalDistribution(
        free_indices=tuple(int(k) + 1 for k in free0),
        frequencies=counts / samples,
        samples=samples,
    )


def total_variation(a: _AssignmentTable, b: _AssignmentTable) -> float:
    """Total-variation distance between two tables on the same free sites."""
    if a.free_indices != b.free_indices:
        raise ValueError("tables are keyed by different free sites")
    return 0.5 * float(np.abs(a.values - b.values).sum())


@dataclass(frozen=True)
class BalanceReport:
    """Worst-case detailed-balance violation over all single-flip pairs."""

    max_rel_error: float
    pairs_checked: int


def detailed_balance_audit(seed: Seed, params: IsingParams, geometry: LatticeGeometry) -> BalanceReport:
    """Check pi(x) Q A(x -> x') = pi(x') Q A(x' -> x) over every single-flip pair.

    The probabilities come from the exact enumeration while the acceptance
    ratios come from the sampler's incremental ``flip_log_ratio``, so the
    audit ties the two routes together.  Returns the largest relative error.
    """
    exact = exact_distribution(seed, params, geometry)
    free0 = _free_indices0(seed)
    n_free = free0.size
    base = _base_spins(seed)
    dummy_rng = np.random.default_rng(0)  # never drawn from: no steps are taken
    probs = exact.probabilities
    q = 1.0 / n_free

    ratios = np.empty((1 << n_free, n_free), dtype=np.float64)
    for code in range(1 << n_free):
        spins = base.copy()
        spins[free0] = np.array(exact.assignment_of(code), dtype=np.int8)
        state = ChainState(TemplatePart(geometry, spins), seed, params, dummy_rng)
        for b, k0 in enumerate(free0):
            ratios[code, b] = flip_log_ratio(state, int(k0) + 1)

    max_rel = 0.0
    pairs = 0
    for code in range(1 << n_free):
        for b in range(n_free):
            other = code ^ (1 << b)
            if other < code:
                continue
            forward = probs[code] * q * min(1.0, np.exp(ratios[code, b]))
            backward = probs[other] * q * min(1.0, np.exp(ratios[other, b]))
            denom = max(forward, backward)
            if denom > 0.0:
                rel = abs(forward - backward) / denom
                if rel > max_rel:
                    max_rel = rel
            pairs += 1
    return BalanceReport(max_rel_error=max_rel, pairs_checked=pairs)
