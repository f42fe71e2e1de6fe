"""Lattice geometry, spin-template containers, and Hamming-distance matching.

A template part is a binary field on an m x n lattice stored as a flat array
of spins in {-1, +1}.  Sites carry the 1-based univariate index
``k = i + (j - 1) * m`` for row ``i`` and column ``j``, i.e. the flat array is
the column-major flattening of the grid.  Rows wrap circularly (column ``n``
is adjacent to column ``1``); there is no wrap between top and bottom rows.

External bit files use {0, 1}; in memory 0 maps to spin -1 and 1 to spin +1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class LatticeGeometry:
    """Shape of the m x n spin lattice.

    ``cols >= 3`` is required: with 2 columns the circular wrap would
    duplicate the single horizontal edge of each row, and with 1 column it
    would become a self-loop.  Both are rejected rather than double-counted.
    """

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError(f"rows must be >= 1, got {self.rows}")
        if self.cols < 3:
            raise ValueError(
                f"cols must be >= 3 (circular row wrap degenerates), got {self.cols}"
            )

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def vertical_edge_count(self) -> int:
        return (self.rows - 1) * self.cols

    @property
    def horizontal_edge_count(self) -> int:
        return self.rows * self.cols

    def index_of(self, i: int, j: int) -> int:
        """Univariate index k of the site at row i, column j (all 1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError(f"position ({i}, {j}) outside {self.rows}x{self.cols} lattice")
        return i + (j - 1) * self.rows

    def position_of(self, k: int) -> tuple[int, int]:
        """Inverse of index_of: (row, column) of site k."""
        self._check_index(k)
        return (k - 1) % self.rows + 1, (k - 1) // self.rows + 1

    def _check_index(self, k: int) -> None:
        if not 1 <= k <= self.size:
            raise ValueError(f"site index {k} outside 1..{self.size}")


def neighbors(geometry: LatticeGeometry, k: int) -> list[tuple[int, str]]:
    """Adjacent sites of k as (index, direction) pairs.

    Vertical neighbours are the sites directly above and below when they
    exist (no vertical wrap); horizontal neighbours are left and right with
    circular column wrap, so every site has exactly two of them.
    """
    i, j = geometry.position_of(k)
    m, n = geometry.rows, geometry.cols
    out = []
    if i > 1:
        out.append((geometry.index_of(i - 1, j), VERTICAL))
    if i < m:
        out.append((geometry.index_of(i + 1, j), VERTICAL))
    out.append((geometry.index_of(i, j - 1 if j > 1 else n), HORIZONTAL))
    out.append((geometry.index_of(i, j + 1 if j < n else 1), HORIZONTAL))
    return out


def _validated_spins(geometry: LatticeGeometry, spins) -> np.ndarray:
    arr = np.array(spins, dtype=np.int8, copy=True).reshape(-1)
    if arr.shape != (geometry.size,):
        raise ValueError(
            f"expected {geometry.size} spins for {geometry.rows}x{geometry.cols}, got {arr.shape[0]}"
        )
    if not np.all((arr == 1) | (arr == -1)):
        raise ValueError("spins must all be -1 or +1")
    arr.setflags(write=False)
    return arr


class TemplatePart:
    """One half (real or imaginary) of a template: immutable spins on a lattice."""

    __slots__ = ("geometry", "spins")

    def __init__(self, geometry: LatticeGeometry, spins):
        object.__setattr__(self, "geometry", geometry)
        object.__setattr__(self, "spins", _validated_spins(geometry, spins))

    def __setattr__(self, name, value):
        raise AttributeError("TemplatePart is immutable")

    def grid(self) -> np.ndarray:
        """Read-only (rows, cols) view of the spins."""
        return self.spins.reshape((self.geometry.rows, self.geometry.cols), order="F")

    @classmethod
    def from_grid(cls, geometry: LatticeGeometry, grid) -> "TemplatePart":
        g = np.asarray(grid)
        if g.shape != (geometry.rows, geometry.cols):
            raise ValueError(f"grid shape {g.shape} does not match {geometry}")
        return cls(geometry, g.flatten(order="F"))

    def to_bits(self) -> np.ndarray:
        """Spins as 0/1 bits (spin -1 -> 0, spin +1 -> 1)."""
        return ((self.spins + 1) // 2).astype(np.uint8)

    @classmethod
    def from_bits(cls, geometry: LatticeGeometry, bits) -> "TemplatePart":
        b = np.asarray(bits)
        if not np.all((b == 0) | (b == 1)):
            raise ValueError("bits must all be 0 or 1")
        return cls(geometry, b.astype(np.int8) * 2 - 1)

    def negated(self) -> "TemplatePart":
        return TemplatePart(self.geometry, -self.spins)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemplatePart):
            return NotImplemented
        return self.geometry == other.geometry and np.array_equal(self.spins, other.spins)

    __hash__ = None

    def __repr__(self) -> str:
        return f"TemplatePart({self.geometry.rows}x{self.geometry.cols})"


class FullTemplate:
    """Ordered pair of real and imaginary parts sharing one geometry."""

    __slots__ = ("real", "imag")

    def __init__(self, real: TemplatePart, imag: TemplatePart):
        if real.geometry != imag.geometry:
            raise ValueError("real and imaginary parts must share one geometry")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "imag", imag)

    def __setattr__(self, name, value):
        raise AttributeError("FullTemplate is immutable")

    @property
    def geometry(self) -> LatticeGeometry:
        return self.real.geometry

    @property
    def bit_count(self) -> int:
        return 2 * self.geometry.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, FullTemplate):
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    __hash__ = None

    def __repr__(self) -> str:
        return f"FullTemplate({self.geometry.rows}x{self.geometry.cols} x2)"


class Seed:
    """Partial template data: a set of pinned sites with fixed spin values.

    ``indices`` are distinct 1-based site indices; ``values`` the pinned
    spins.  Both are stored sorted by index.  An empty seed is allowed.
    """

    __slots__ = ("geometry", "indices", "values")

    def __init__(self, geometry: LatticeGeometry, indices, values):
        idx = np.atleast_1d(np.asarray(indices, dtype=np.int64))
        val = np.atleast_1d(np.asarray(values, dtype=np.int8))
        if idx.shape != val.shape or idx.ndim != 1:
            raise ValueError("indices and values must be 1-d and the same length")
        if idx.size:
            if idx.min() < 1 or idx.max() > geometry.size:
                raise ValueError(f"seed indices must lie in 1..{geometry.size}")
            if np.unique(idx).size != idx.size:
                raise ValueError("seed indices must be distinct")
            if not np.all((val == 1) | (val == -1)):
                raise ValueError("seed values must all be -1 or +1")
            order = np.argsort(idx)
            idx = idx[order]
            val = val[order]
        idx.setflags(write=False)
        val.setflags(write=False)
        object.__setattr__(self, "geometry", geometry)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "values", val)

    def __setattr__(self, name, value):
        raise AttributeError("Seed is immutable")

    @classmethod
    def empty(cls, geometry: LatticeGeometry) -> "Seed":
        return cls(geometry, np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int8))

    @classmethod
    def from_mapping(cls, geometry: LatticeGeometry, mapping: dict) -> "Seed":
        items = sorted(mapping.items())
        return cls(geometry, [k for k, _ in items], [v for _, v in items])

    def entries(self):
        """Iterate (index, value) pairs in index order."""
        return zip(self.indices.tolist(), self.values.tolist())

    def pin_mask(self) -> np.ndarray:
        """Boolean mask over the flat 0-based array, True at pinned sites."""
        mask = np.zeros(self.geometry.size, dtype=bool)
        mask[self.indices - 1] = True
        return mask

    def __len__(self) -> int:
        return int(self.indices.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.geometry == other.geometry
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Seed({len(self)} of {self.geometry.size} sites pinned)"


def disagreement_counts(part: TemplatePart) -> tuple[int, int]:
    """Counts (d_v, d_h) of disagreeing vertical and horizontal edges.

    An edge disagrees when its two spins multiply to -1.  Each unordered
    horizontal pair is counted once, including the per-row wrap edge.
    """
    g = part.grid()
    d_v = int(np.count_nonzero(g[:-1, :] != g[1:, :]))
    d_h = int(np.count_nonzero(g != np.roll(g, -1, axis=1)))
    return d_v, d_h


def edge_sums(part: TemplatePart) -> tuple[int, int]:
    """Sums of spin products over vertical and horizontal edges.

    Related to disagreement counts by ``sum_v = (mn - n) - 2 d_v`` and
    ``sum_h = mn - 2 d_h``.
    """
    g = part.grid().astype(np.int32)
    s_v = int(np.sum(g[:-1, :] * g[1:, :]))
    s_h = int(np.sum(g * np.roll(g, -1, axis=1)))
    return s_v, s_h


def _check_same_geometry(a: FullTemplate, b: FullTemplate) -> None:
    if a.geometry != b.geometry:
        raise ValueError(f"geometry mismatch: {a.geometry} vs {b.geometry}")


def hamming_distance(a: FullTemplate, b: FullTemplate) -> float:
    """Fraction of the 2 m n positions where the two templates differ."""
    _check_same_geometry(a, b)
    mism = np.count_nonzero(a.real.spins != b.real.spins)
    mism += np.count_nonzero(a.imag.spins != b.imag.spins)
    return mism / a.bit_count


def _rotate_part(part: TemplatePart, shift: int) -> TemplatePart:
    if shift % part.geometry.cols == 0:
        return part
    return TemplatePart.from_grid(part.geometry, np.roll(part.grid(), shift, axis=1))


def rotate_columns(t: FullTemplate, shift: int) -> FullTemplate:
    """Circularly shift both parts by ``shift`` columns (content moves right)."""
    return FullTemplate(_rotate_part(t.real, shift), _rotate_part(t.imag, shift))


def hamming_distance_min_rotation(
    a: FullTemplate, b: FullTemplate, max_shift: int = 8
) -> tuple[float, int]:
    """Minimum Hamming distance over column rotations up to ``max_shift``.

    Tries every relative rotation sigma in -max_shift..+max_shift and returns
    ``(distance, sigma)`` for the best alignment, where sigma is the column
    shift that, applied to ``a``, aligns it with ``b`` (so an exact rotated
    copy ``b = rotate_columns(a, 3)`` yields sigma = 3).  Ties prefer the
    smallest |sigma|, and the negative one between +/-sigma.
    """
    _check_same_geometry(a, b)
    if max_shift < 0:
        raise ValueError("max_shift must be >= 0")
    if max_shift >= a.geometry.cols:
        raise ValueError(f"max_shift must be < cols = {a.geometry.cols}")
    ga_r, ga_i = a.real.grid(), a.imag.grid()
    gb_r, gb_i = b.real.grid(), b.imag.grid()
    total = a.bit_count
    best_d, best_s = 2.0, 0
    for mag in range(max_shift + 1):
        shifts = (0,) if mag == 0 else (-mag, mag)
        for s in shifts:
            mism = np.count_nonzero(np.roll(ga_r, s, axis=1) != gb_r)
            mism += np.count_nonzero(np.roll(ga_i, s, axis=1) != gb_i)
            d = mism / total
            if d < best_d:
                best_d, best_s = d, s
    return best_d, best_s
