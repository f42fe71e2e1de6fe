"""Render seeded-ising CSV outputs as figures.

The renderer is a pure function of the CSV bytes and the figure spec: it
draws exactly the numbers in the file (no rebinning, no refitting) with
fixed canvas settings, so identical inputs give identical image bytes.
The probe mode writes every plotted series back out as CSV for auditing.
"""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import SchemaError, Table, read_table

KINDS = ("heatmap", "histogram", "match-rate", "fit-overlay")

_RC = {
    "figure.figsize": (6.4, 4.4),
    "figure.dpi": 120,
    "savefig.dpi": 120,
    "font.size": 9,
    "svg.hashsalt": "ising-figures",  # stable ids for SVG output
}

_SERIES_STYLES = ["-", "--", ":", "-."]


@dataclass
class FigureSpec:
    kind: str
    input_csv: Path
    output: Path
    probe_out: Path | None = None
    title: str | None = None
    zoom_center: float = 0.395  # match-rate zoom window midpoint
    zoom_halfwidth: float = 0.02
    labels: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind {self.kind!r}; expected one of {KINDS}")
        self.input_csv = Path(self.input_csv)
        self.output = Path(self.output)
        if self.probe_out is not None:
            self.probe_out = Path(self.probe_out)


def render(spec: FigureSpec) -> dict[str, list]:
    """Draw the figure and return the plotted series (column name -> values).

    Writes ``spec.output``; with ``spec.probe_out`` also dumps the returned
    series as CSV.  Raises SchemaError when the CSV does not carry the
    columns the kind requires.
    """
    table = read_table(spec.input_csv)
    with plt.rc_context(_RC):
        fig = plt.figure()
        try:
            series = _DISPATCH[spec.kind](fig, table, spec)
            fig.savefig(spec.output, metadata=_metadata_for(spec.output))
        finally:
            plt.close(fig)
    if spec.probe_out is not None:
        _write_probe(spec.probe_out, series)
    return series


def _metadata_for(path: Path):
    # strip timestamps so identical inputs give identical bytes
    suffix = path.suffix.lower()
    if suffix == ".png":
        return {"Software": "ising-figures"}
    if suffix == ".svg":
        return {"Date": None}
    return None


def _write_probe(path: Path, series: dict[str, list]) -> None:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(series.keys())
    for row in zip(*series.values()):
        writer.writerow([repr(v) if isinstance(v, float) else str(v) for v in row])
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(buf.getvalue())


# ---------------------------------------------------------------------------
# kinds


def _heatmap(fig, table: Table, spec: FigureSpec) -> dict[str, list]:
    table.require("j_v", "j_h", "mean")
    jv = table.floats("j_v")
    jh = table.floats("j_h")
    mean = table.floats("mean")
    v_axis = sorted(set(jv))
    h_axis = sorted(set(jh))
    grid = np.full((len(v_axis), len(h_axis)), np.nan)
    for a, b, m in zip(jv, jh, mean):
        grid[v_axis.index(a), h_axis.index(b)] = m

    ax = fig.add_subplot()
    im = ax.imshow(grid, origin="lower", aspect="auto", cmap="viridis")
    ax.set_xticks(range(len(h_axis)), [f"{x:g}" for x in h_axis])
    ax.set_yticks(range(len(v_axis)), [f"{x:g}" for x in v_axis])
    ax.set_xlabel(spec.labels.get("x", "horizontal coupling"))
    ax.set_ylabel(spec.labels.get("y", "vertical coupling"))
    fig.colorbar(im, ax=ax, label="mean distance")

    if "argmin" in table.meta:
        amin_v, amin_h = json.loads(table.meta["argmin"])
        ax.add_patch(
            plt.Rectangle(
                (h_axis.index(amin_h) - 0.5, v_axis.index(amin_v) - 0.5), 1, 1,
                fill=False, edgecolor="red", linewidth=2,
            )
        )
        cell = grid[v_axis.index(amin_v), h_axis.index(amin_h)]
        ax.set_title(spec.title or f"minimum mean distance {cell:g} at ({amin_v:g}, {amin_h:g})")
    elif spec.title:
        ax.set_title(spec.title)
    return {"j_v": jv, "j_h": jh, "mean": mean}


def _value_columns(table: Table, exclude: tuple[str, ...]) -> list[str]:
    cols = [c for c in table.columns if c not in exclude]
    if not cols:
        raise SchemaError(f"{table.path}: no value columns besides {exclude}")
    return cols


def _histogram(fig, table: Table, spec: FigureSpec) -> dict[str, list]:
    table.require("bin_left", "bin_right")
    left = table.floats("bin_left")
    right = table.floats("bin_right")
    value_cols = _value_columns(table, ("bin_left", "bin_right"))
    ax = fig.add_subplot()
    edges = left + right[-1:]
    for i, col in enumerate(value_cols):
        vals = table.floats(col)
        ax.stairs(vals, edges, label=spec.labels.get(col, col),
                  linestyle=_SERIES_STYLES[i % len(_SERIES_STYLES)], linewidth=1.4)
    ax.set_xlabel(spec.labels.get("x", "Hamming distance"))
    ax.set_ylabel(spec.labels.get("y", "fraction per bin"))
    ax.legend()
    if spec.title:
        ax.set_title(spec.title)
    out = {"bin_left": left, "bin_right": right}
    out.update({c: table.floats(c) for c in value_cols})
    return out


def _match_rate(fig, table: Table, spec: FigureSpec) -> dict[str, list]:
    table.require("kind", "threshold", "match_rate")
    kinds = table.strings("kind")
    thresholds = table.floats("threshold")
    rates = table.floats("match_rate")
    ax_main, ax_zoom = fig.subplots(1, 2, width_ratios=[2, 1])
    for name in sorted(set(kinds)):
        xs = [t for k, t in zip(kinds, thresholds) if k == name]
        ys = [r for k, r in zip(kinds, rates) if k == name]
        for ax in (ax_main, ax_zoom):
            ax.plot(xs, ys, label=spec.labels.get(name, name), linewidth=1.4)
    ax_main.set_xlabel("Hamming distance")
    ax_main.set_ylabel("match rate")
    ax_main.legend()
    lo = spec.zoom_center - spec.zoom_halfwidth
    hi = spec.zoom_center + spec.zoom_halfwidth
    ax_zoom.set_xlim(lo, hi)
    in_window = [r for t, r in zip(thresholds, rates) if lo <= t <= hi]
    if in_window:
        pad = 0.05
        ax_zoom.set_ylim(max(0, min(in_window) - pad), min(1, max(in_window) + pad))
    ax_zoom.set_title(f"zoom at {spec.zoom_center:g}")
    if spec.title:
        ax_main.set_title(spec.title)
    fig.tight_layout()
    return {"kind": kinds, "threshold": thresholds, "match_rate": rates}


def _fit_overlay(fig, table: Table, spec: FigureSpec) -> dict[str, list]:
    table.require("bin_left", "bin_right", "empirical_prob", "fitted_prob")
    for key in ("p", "n_dof"):
        if key not in table.meta:
            raise SchemaError(f"{table.path}: fit-overlay needs '# {key} = ...' metadata")
    left = table.floats("bin_left")
    right = table.floats("bin_right")
    emp = table.floats("empirical_prob")
    fit = table.floats("fitted_prob")
    centers = [(a + b) / 2 for a, b in zip(left, right)]
    widths = [b - a for a, b in zip(left, right)]
    ax = fig.add_subplot()
    ax.bar(centers, emp, width=widths, color="lightsteelblue",
           edgecolor="none", label=spec.labels.get("empirical_prob", "observed"))
    ax.plot(centers, fit, "k-", linewidth=1.4,
            label=spec.labels.get("fitted_prob", "binomial fit"))
    p = float(table.meta["p"])
    n_dof = int(table.meta["n_dof"])
    ax.set_xlabel("Hamming distance")
    ax.set_ylabel("fraction per bin")
    ax.legend()
    ax.set_title(spec.title or f"binomial fit: p = {p:.4f}, N = {n_dof}")
    return {
        "bin_left": left, "bin_right": right,
        "empirical_prob": emp, "fitted_prob": fit,
    }


_DISPATCH = {
    "heatmap": _heatmap,
    "histogram": _histogram,
    "match-rate": _match_rate,
    "fit-overlay": _fit_overlay,
}
