"""Distance statistics, match-rate curves, binomial degrees-of-freedom fits,
and the coupling-parameter grid search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import NamedTuple

import numpy as np
from scipy.stats import binom

from .lattice import FullTemplate, hamming_distance
from .reconstruct import SeedSpec, reconstruct_full
from .sampler import IsingParams, RecordingSchedule

HIST_BIN_WIDTH = 0.01  # left-closed bins over [0, 1] for CSV export


@dataclass
class DistanceSample:
    """A collection of matching distances in [0, 1] with a free-text label."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64).reshape(-1)
        if vals.size and (vals.min() < 0.0 or vals.max() > 1.0):
            raise ValueError("distances must lie in [0, 1]")
        vals.setflags(write=False)
        self.values = vals

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class BinomialFit:
    """Binomial approximation of a distance distribution.

    ``p`` is the per-trial success probability and ``n_dof`` the implied
    number of Bernoulli trials ("degrees of freedom"), recovered from the
    sample mean and variance by N = p (1 - p) / var.
    """

    p: float
    n_dof: int
    sample_mean: float
    sample_var: float


class GridCell(NamedTuple):
    mean: float
    std: float
    trials: int


@dataclass
class GridResult:
    """Reconstruction quality per coupling pair, and the best pair found."""

    entries: dict[tuple[float, float], GridCell]
    argmin: tuple[float, float]
    trial_distances: dict[tuple[float, float], tuple[float, ...]] = field(
        default_factory=dict, compare=False, repr=False
    )


def match_rate(sample: DistanceSample, d: float) -> float:
    """Fraction of the sample at distance <= d (the empirical CDF at d)."""
    if not len(sample):
        raise ValueError("empty distance sample")
    return int(np.count_nonzero(sample.values <= d)) / len(sample)


def match_rate_curve(sample: DistanceSample, grid) -> list[tuple[float, float]]:
    """Match rate evaluated at each threshold of an ascending grid."""
    if not len(sample):
        raise ValueError("empty distance sample")
    thresholds = np.asarray(grid, dtype=np.float64)
    if np.any(np.diff(thresholds) < 0):
        raise ValueError("thresholds must be sorted ascending")
    ordered = np.sort(sample.values)
    counts = np.searchsorted(ordered, thresholds, side="right")
    m = len(sample)
    return [(float(d), int(c) / m) for d, c in zip(thresholds, counts)]


def summarize(sample: DistanceSample) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (M - 1 denominator)."""
    if len(sample) < 2:
        raise ValueError("need at least 2 values to summarize")
    return float(sample.values.mean()), float(sample.values.std(ddof=1))


def binomial_fit(sample: DistanceSample, method: str = "moments") -> BinomialFit:
    """Fit the binomial fraction model x = m/N to a distance sample.

    The default method of moments takes p as the sample mean and
    N = round(p (1 - p) / sample variance).  ``method="histogram"`` instead
    scans integer N for the least-squares match between the 0.01-binned
    sample histogram and the binomial mass mapped onto the same bins (p
    stays at the sample mean); it exists for cross-checking the default.
    """
    if len(sample) < 2:
        raise ValueError("need at least 2 values to fit")
    mean = float(sample.values.mean())
    var = float(sample.values.var(ddof=1))
    if var <= 0.0:
        raise ValueError("sample variance is zero; nothing to fit")
    if not 0.0 < mean < 1.0:
        raise ValueError(f"sample mean {mean} outside (0, 1)")
    if method == "moments":
        n_dof = round(mean * (1.0 - mean) / var)
        if n_dof < 1:
            raise ValueError("sample variance too large for a binomial fraction model")
    elif method == "histogram":
        n_dof = _histogram_ls_dof(sample.values, mean, var)
    else:
        raise ValueError(f"unknown fit method {method!r}")
    return BinomialFit(p=mean, n_dof=n_dof, sample_mean=mean, sample_var=var)


def histogram_bins() -> np.ndarray:
    """Edges of the export histogram: left-closed 0.01 bins covering [0, 1]."""
    return np.linspace(0.0, 1.0, round(1.0 / HIST_BIN_WIDTH) + 1)


def histogram_probs(values: np.ndarray) -> np.ndarray:
    """Fraction of values per export bin (the last bin includes 1.0)."""
    counts, _ = np.histogram(values, bins=histogram_bins())
    return counts / values.size


def binomial_bin_probs(n_dof: int, p: float) -> np.ndarray:
    """Probability mass of m/N per export bin under Binomial(N=n_dof, p)."""
    support = np.arange(n_dof + 1) / n_dof
    weights = binom.pmf(np.arange(n_dof + 1), n_dof, p)
    mass, _ = np.histogram(support, bins=histogram_bins(), weights=weights)
    return mass


def _histogram_ls_dof(values: np.ndarray, mean: float, var: float) -> int:
    emp = histogram_probs(values)
    n_mom = max(1, round(mean * (1.0 - mean) / var))
    best_n, best_sse = 1, np.inf
    for n in range(max(2, n_mom // 3), 3 * n_mom + 2):
        sse = float(np.sum((binomial_bin_probs(n, mean) - emp) ** 2))
        if sse < best_sse:
            best_n, best_sse = n, sse
    return best_n


def effective_dof(seed_fraction, total_bits: int) -> int:
    """Seed bits implied by a per-part fraction of an even total bit count.

    Each of the two parts pins ceil(fraction * total_bits / 2) sites, so the
    result is twice that.  Exact rational arithmetic is used when the
    fraction is given as a Fraction or string such as "1/6".
    """
    if total_bits < 2 or total_bits % 2 != 0:
        raise ValueError("total_bits must be a positive even integer")
    f = Fraction(seed_fraction)
    if not 0 < f <= 1:
        raise ValueError(f"seed fraction must lie in (0, 1], got {f}")
    return 2 * ceil(f * (total_bits // 2))


def _select_argmin(entries: dict[tuple[float, float], GridCell]) -> tuple[float, float]:
    # Lexicographic tie-break on the coupling pair keeps the choice
    # independent of grid ordering.
    return min(entries, key=lambda cell: (entries[cell].mean, cell))


def grid_search_j(
    original: FullTemplate,
    grid,
    spec: SeedSpec,
    trials: int,
    schedule: RecordingSchedule,
    rng: np.random.Generator,
) -> GridResult:
    """Mean reconstruction distance per coupling pair over repeated trials.

    Every trial redraws the seed index set.  Each grid cell runs on its own
    RNG stream spawned in sorted-cell order, so results do not depend on the
    order the grid is listed in and cells can be farmed out concurrently.
    """
    cells = sorted(dict.fromkeys((float(jv), float(jh)) for jv, jh in grid))
    if not cells:
        raise ValueError("empty coupling grid")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    streams = rng.spawn(len(cells))
    entries: dict[tuple[float, float], GridCell] = {}
    trial_distances: dict[tuple[float, float], tuple[float, ...]] = {}
    for cell, stream in zip(cells, streams):
        params = IsingParams(*cell)
        distances = []
        for _ in range(trials):
            recon, _, _ = reconstruct_full(original, spec, params, schedule, stream)
            distances.append(hamming_distance(original, recon))
        arr = np.asarray(distances)
        std = float(arr.std(ddof=1)) if trials > 1 else 0.0
        entries[cell] = GridCell(mean=float(arr.mean()), std=std, trials=trials)
        trial_distances[cell] = tuple(distances)
    return GridResult(entries=entries, argmin=_select_argmin(entries), trial_distances=trial_distances)
