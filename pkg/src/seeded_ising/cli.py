"""Experiment harness: template file I/O, experiment subcommands, CSV output.

Every CSV this module writes starts with comment lines embedding the exact
configuration (including the RNG seed), so any output can be reproduced
bit for bit by re-running its subcommand with the embedded config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

import numpy as np

from .analysis import (
    DistanceSample,
    GridCell,
    GridResult,
    _select_argmin,
    binomial_bin_probs,
    binomial_fit,
    grid_search_j,
    histogram_probs,
    match_rate_curve,
    summarize,
)
from .lattice import (
    FullTemplate,
    LatticeGeometry,
    Seed,
    TemplatePart,
    hamming_distance,
    hamming_distance_min_rotation,
)
from .oracle import empirical_distribution, exact_distribution, total_variation
from .reconstruct import SeedSpec, aggregate, extract_seeds
from .sampler import IsingParams, RecordingSchedule, initial_template, run_chain

MAGIC = "IRISTPL"
FORMAT_VERSION = 1


class TemplateFormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# template files


def read_template(path) -> FullTemplate:
    """Parse a template file; bits 0/1 become spins -1/+1.

    Format: a header ``IRISTPL 1 <rows> <cols>``, then <rows> lines of
    '0'/'1' for the real part, one blank line, then <rows> lines for the
    imaginary part.
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines:
        raise TemplateFormatError(f"{path}: empty file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != MAGIC:
        raise TemplateFormatError(f"{path}: line 1: expected '{MAGIC} 1 <rows> <cols>'")
    if header[1] != str(FORMAT_VERSION):
        raise TemplateFormatError(f"{path}: line 1: unsupported version {header[1]}")
    try:
        rows, cols = int(header[2]), int(header[3])
        geometry = LatticeGeometry(rows, cols)
    except ValueError as exc:
        raise TemplateFormatError(f"{path}: line 1: {exc}") from exc
    expected = 2 + 2 * rows
    if len(lines) != expected:
        raise TemplateFormatError(f"{path}: expected {expected} lines, found {len(lines)}")
    if lines[1 + rows] != "":
        raise TemplateFormatError(f"{path}: line {2 + rows}: expected a blank separator line")

    def parse_block(first_line: int) -> TemplatePart:
        grid = np.empty((rows, cols), dtype=np.int8)
        for i in range(rows):
            text = lines[first_line - 1 + i]
            if len(text) != cols:
                raise TemplateFormatError(
                    f"{path}: line {first_line + i}: expected {cols} characters, found {len(text)}"
                )
            if text.strip("01"):
                raise TemplateFormatError(
                    f"{path}: line {first_line + i}: characters outside {{0,1}}"
                )
            grid[i] = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
        return TemplatePart.from_bits(geometry, grid.flatten(order="F"))

    return FullTemplate(parse_block(2), parse_block(3 + rows))


def write_template(template: FullTemplate, path, overwrite: bool = False) -> None:
    """Inverse of read_template; refuses to clobber unless ``overwrite``."""
    path = Path(path)
    if path.exists() and not overwrite:
        raise FileExistsError(f"{path} exists; pass overwrite=True to replace it")
    g = template.geometry
    out = [f"{MAGIC} {FORMAT_VERSION} {g.rows} {g.cols}"]

    def emit(part: TemplatePart) -> None:
        for row in part.to_bits().reshape((g.rows, g.cols), order="F"):
            out.append("".join("1" if b else "0" for b in row.tolist()))

    emit(template.real)
    out.append("")
    emit(template.imag)
    path.write_text("\n".join(out) + "\n")


def _subject_of(path: Path) -> str | None:
    # naming convention <subject>_<image>.tpl
    parts = path.stem.split("_")
    if len(parts) >= 2 and parts[0]:
        return parts[0]
    return None


# ---------------------------------------------------------------------------
# configuration


@dataclass
class ExperimentConfig:
    rows: int = 8
    cols: int = 128
    j_v: float = 0.2
    j_h: float = 0.3
    seed_fraction: str = "1/6"
    seed_count: int | None = None
    shared_index_set: bool = True
    schedule: str = "10000x100"
    trials: int = 100
    count: int = 10
    steps: int = 100_000
    grid: str = "0.1:1:0.1"
    max_shift: int = 8
    rotation: bool = False
    burn_in: int = 10_000
    samples: int = 200_000
    thin: int = 1
    dof_column: str = "distance"
    dof_method: str = "moments"
    rng_seed: int = 20160801

    def geometry(self) -> LatticeGeometry:
        return LatticeGeometry(self.rows, self.cols)

    def params(self) -> IsingParams:
        return IsingParams(self.j_v, self.j_h)

    def seed_spec(self) -> SeedSpec:
        if self.seed_count is not None:
            return SeedSpec(count=self.seed_count, shared_index_set=self.shared_index_set)
        return SeedSpec(fraction=Fraction(self.seed_fraction), shared_index_set=self.shared_index_set)

    def schedule_obj(self) -> RecordingSchedule:
        return parse_schedule(self.schedule)

    def grid_points(self) -> list[tuple[float, float]]:
        return parse_grid(self.grid)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


def parse_schedule(text: str) -> RecordingSchedule:
    """Parse 'STEPxCOUNT' (checkpoints step, 2*step, ...) or a comma list."""
    text = text.strip()
    if "x" in text:
        step_s, count_s = text.split("x", 1)
        return RecordingSchedule.linear(int(step_s), int(count_s))
    return RecordingSchedule(tuple(int(t) for t in text.split(",")))


def parse_grid(text: str) -> list[tuple[float, float]]:
    """Parse 'start:stop:step' (both axes) or explicit 'jv,jh;jv,jh;...'."""
    text = text.strip()
    if ":" in text:
        start_s, stop_s, step_s = text.split(":")
        start, stop, step = Fraction(start_s), Fraction(stop_s), Fraction(step_s)
        if step <= 0 or stop < start:
            raise ValueError(f"bad grid range {text!r}")
        axis = []
        v = start
        while v <= stop:
            axis.append(float(v))
            v += step
        return [(jv, jh) for jv in axis for jh in axis]
    points = []
    for chunk in text.split(";"):
        jv_s, jh_s = chunk.split(",")
        points.append((float(Fraction(jv_s)), float(Fraction(jh_s))))
    return points


# ---------------------------------------------------------------------------
# CSV plumbing


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path: Path, command: str, config: ExperimentConfig, columns, rows, meta=()) -> Path:
    buf = io.StringIO()
    buf.write(f"# seeded-ising {command}\n")
    buf.write(f"# config = {json.dumps(config.to_dict(), sort_keys=True)}\n")
    for key, value in meta:
        buf.write(f"# {key} = {value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(buf.getvalue())
    return path


def embedded_config(path) -> tuple[str, ExperimentConfig, dict]:
    """Recover (command, config, extra meta) from a CSV written by this module."""
    command, config, meta = None, None, {}
    for line in Path(path).read_text().splitlines():
        if not line.startswith("#"):
            break
        body = line[1:].strip()
        if body.startswith("seeded-ising "):
            command = body.split(" ", 1)[1]
        elif " = " in body:
            key, value = body.split(" = ", 1)
            if key == "config":
                config = ExperimentConfig.from_dict(json.loads(value))
            else:
                meta[key] = value
    if command is None or config is None:
        raise ValueError(f"{path}: no embedded seeded-ising config found")
    return command, config, meta


def csv_body(path) -> str:
    """The non-comment portion of a CSV file, for byte comparisons."""
    lines = Path(path).read_text().splitlines(keepends=True)
    return "".join(line for line in lines if not line.startswith("#"))


def _read_csv_rows(path: Path) -> tuple[list[str], list[list[str]]]:
    lines = [ln for ln in path.read_text().splitlines() if ln and not ln.startswith("#")]
    rows = list(csv.reader(lines))
    if not rows:
        raise ValueError(f"{path}: no CSV rows")
    return rows[0], rows[1:]


def _read_distance_column(path: Path, column: str) -> np.ndarray:
    header, rows = _read_csv_rows(path)
    try:
        float(header[0])
    except ValueError:
        if column not in header:
            raise ValueError(f"{path}: no column {column!r} in header {header}")
        idx = header.index(column)
        return np.array([float(r[idx]) for r in rows], dtype=np.float64)
    # headerless single column
    values = [float(r[0]) for r in [header] + rows]
    return np.array(values, dtype=np.float64)


_CENTILES = [i / 100 for i in range(101)]
_THRESHOLDS = [i / 200 for i in range(201)]


# ---------------------------------------------------------------------------
# subcommands


def cmd_synthesize(config: ExperimentConfig, out_dir) -> list[Path]:
    """Draw ``count`` synthetic templates from long unseeded chains."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    geometry = config.geometry()
    params = config.params()
    schedule = RecordingSchedule((config.steps,))
    empty = Seed.empty(geometry)
    streams = np.random.SeedSequence(config.rng_seed).spawn(config.count)
    written = []
    manifest = []
    for idx, child in enumerate(streams):
        rng = np.random.default_rng(child)
        real = run_chain(empty, params, schedule, rng)[-1]
        imag = run_chain(empty, params, schedule, rng)[-1]
        template = FullTemplate(real, imag)
        name = f"s{idx:03d}_1.tpl"
        write_template(template, out_dir / name, overwrite=True)
        written.append(out_dir / name)
        manifest.append((name, int(np.sum(real.spins == 1)), int(np.sum(imag.spins == 1))))
    _write_csv(
        out_dir / "synthesize_manifest.csv", "synthesize", config,
        ("file", "ones_real", "ones_imag"), manifest,
    )
    written.append(out_dir / "synthesize_manifest.csv")
    return written


def _with_template_geometry(config: ExperimentConfig, template: FullTemplate) -> ExperimentConfig:
    g = template.geometry
    return replace(config, rows=g.rows, cols=g.cols)


def cmd_reconstruct(config: ExperimentConfig, template_path, out_dir) -> dict:
    """Reconstruct one template ``trials`` times; log per-trial distances.

    Each trial redraws the seed index set, runs one chain per part with an
    extra checkpoint at iteration 0 to capture the true initial state, and
    majority-votes over the scheduled snapshots only.
    """
    out_dir = Path(out_dir)
    original = read_template(template_path)
    config = _with_template_geometry(config, original)
    spec = config.seed_spec()
    params = config.params()
    schedule = config.schedule_obj()
    with_start = schedule.checkpoints
    skip = 0
    if with_start[0] != 0:
        with_start = (0,) + with_start
        skip = 1
    chain_schedule = RecordingSchedule(with_start)

    streams = np.random.SeedSequence(config.rng_seed).spawn(config.trials)
    rows = []
    init_d = np.empty(config.trials)
    rec_d = np.empty(config.trials)
    for t, child in enumerate(streams):
        rng = np.random.default_rng(child)
        seed_r, seed_i = extract_seeds(original, spec, rng)
        init_parts = []
        rec_parts = []
        for seed in (seed_r, seed_i):
            if len(seed) == seed.geometry.size:
                part = initial_template(seed, rng)  # fully pinned: no chain to run
                init_parts.append(part)
                rec_parts.append(part)
                continue
            snaps = run_chain(seed, params, chain_schedule, rng)
            init_parts.append(snaps[0])
            rec_parts.append(aggregate(snaps[skip:]))
        initial = FullTemplate(*init_parts)
        recon = FullTemplate(*rec_parts)
        init_d[t] = hamming_distance(original, initial)
        rec_d[t] = hamming_distance(original, recon)
        rows.append((t, f"{config.rng_seed}.{t}", float(init_d[t]), float(rec_d[t])))

    _write_csv(
        out_dir / "reconstruct_trials.csv", "reconstruct", config,
        ("trial", "stream", "initial_distance", "reconstructed_distance"), rows,
    )
    init_mean, init_std = summarize(DistanceSample(init_d, "initial"))
    rec_mean, rec_std = summarize(DistanceSample(rec_d, "reconstructed"))
    _write_csv(
        out_dir / "reconstruct_summary.csv", "reconstruct", config,
        ("series", "mean", "std"),
        [("initial", init_mean, init_std), ("reconstructed", rec_mean, rec_std)],
    )
    emp_i = histogram_probs(init_d)
    emp_r = histogram_probs(rec_d)
    _write_csv(
        out_dir / "reconstruct_hist.csv", "reconstruct", config,
        ("bin_left", "bin_right", "initial_prob", "reconstructed_prob"),
        [
            (_CENTILES[b], _CENTILES[b + 1], float(emp_i[b]), float(emp_r[b]))
            for b in range(100)
        ],
    )
    return {
        "initial": (init_mean, init_std),
        "reconstructed": (rec_mean, rec_std),
        "trials_csv": out_dir / "reconstruct_trials.csv",
        "summary_csv": out_dir / "reconstruct_summary.csv",
        "hist_csv": out_dir / "reconstruct_hist.csv",
    }


def cmd_sweep_j(config: ExperimentConfig, template_path, out_dir) -> GridResult:
    """Grid-search the coupling pair by repeated reconstruction of one template."""
    out_dir = Path(out_dir)
    original = read_template(template_path)
    config = _with_template_geometry(config, original)
    rng = np.random.default_rng(config.rng_seed)
    result = grid_search_j(
        original, config.grid_points(), config.seed_spec(), config.trials,
        config.schedule_obj(), rng,
    )
    rows = [
        (jv, jh, cell.mean, cell.std, cell.trials)
        for (jv, jh), cell in sorted(result.entries.items())
    ]
    _write_csv(
        out_dir / "sweep_j.csv", "sweep-j", config,
        ("j_v", "j_h", "mean", "std", "trials"), rows,
        meta=[("argmin", json.dumps(list(result.argmin)))],
    )
    return result


def parse_sweep_csv(path) -> GridResult:
    """Rebuild a GridResult from a sweep-j CSV (exact float round-trip)."""
    _, _, meta = embedded_config(path)
    header, rows = _read_csv_rows(Path(path))
    if header != ["j_v", "j_h", "mean", "std", "trials"]:
        raise ValueError(f"{path}: unexpected sweep header {header}")
    entries = {
        (float(jv), float(jh)): GridCell(float(mean), float(std), int(trials))
        for jv, jh, mean, std, trials in rows
    }
    argmin = tuple(json.loads(meta["argmin"])) if "argmin" in meta else _select_argmin(entries)
    return GridResult(entries=entries, argmin=argmin)


def _expand_paths(paths) -> list[Path]:
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            out.extend(sorted(p.glob("*.tpl")))
        else:
            out.append(p)
    if not out:
        raise ValueError("no template files found")
    return out


def cmd_match(config: ExperimentConfig, paths_a, paths_b, out_dir) -> Path:
    """Pairwise Hamming distances, optionally minimized over column rotations.

    With a second path set, every cross pair (a, b) is matched; otherwise all
    unordered pairs within the first set.  Pairs are labeled genuine or
    impostor when both file names follow ``<subject>_<image>.tpl``.
    """
    out_dir = Path(out_dir)
    files_a = _expand_paths(paths_a)
    files_b = _expand_paths(paths_b) if paths_b else None
    cache: dict[Path, FullTemplate] = {}

    def load(p: Path) -> FullTemplate:
        if p not in cache:
            cache[p] = read_template(p)
        return cache[p]

    if files_b is None:
        pairs = [(a, b) for i, a in enumerate(files_a) for b in files_a[i + 1:]]
    else:
        pairs = [(a, b) for a in files_a for b in files_b]

    rows = []
    by_kind: dict[str, list[float]] = {}
    for a, b in pairs:
        ta, tb = load(a), load(b)
        if config.rotation:
            d, shift = hamming_distance_min_rotation(ta, tb, config.max_shift)
            shift_cell = shift
        else:
            d = hamming_distance(ta, tb)
            shift_cell = ""
        sa, sb = _subject_of(a), _subject_of(b)
        if sa is None or sb is None:
            kind = "unknown"
        else:
            kind = "genuine" if sa == sb else "impostor"
        rows.append((a.name, b.name, kind, float(d), shift_cell))
        by_kind.setdefault(kind, []).append(float(d))

    out = _write_csv(
        out_dir / "match_distances.csv", "match", config,
        ("a", "b", "kind", "distance", "shift"), rows,
    )
    rate_rows = []
    for kind in sorted(by_kind):
        curve = match_rate_curve(DistanceSample(np.array(by_kind[kind]), kind), _THRESHOLDS)
        rate_rows.extend((kind, d, m) for d, m in curve)
    _write_csv(
        out_dir / "match_rate.csv", "match", config,
        ("kind", "threshold", "match_rate"), rate_rows,
    )
    return out


def cmd_dof(config: ExperimentConfig, distances_csv, out_dir):
    """Binomial degrees-of-freedom fit of a distance column."""
    out_dir = Path(out_dir)
    values = _read_distance_column(Path(distances_csv), config.dof_column)
    fit = binomial_fit(DistanceSample(values), method=config.dof_method)
    emp = histogram_probs(values)
    model = binomial_bin_probs(fit.n_dof, fit.p)
    _write_csv(
        out_dir / "dof_fit.csv", "dof", config,
        ("bin_left", "bin_right", "empirical_prob", "fitted_prob"),
        [
            (_CENTILES[b], _CENTILES[b + 1], float(emp[b]), float(model[b]))
            for b in range(100)
        ],
        meta=[
            ("p", repr(fit.p)),
            ("n_dof", str(fit.n_dof)),
            ("sample_mean", repr(fit.sample_mean)),
            ("sample_var", repr(fit.sample_var)),
            ("column", config.dof_column),
            ("method", config.dof_method),
        ],
    )
    return fit


def cmd_oracle_check(config: ExperimentConfig, out_dir) -> float:
    """Compare a chain's visit frequencies against the exact distribution.

    Returns the total-variation distance (small is good).
    """
    out_dir = Path(out_dir)
    geometry = config.geometry()
    params = config.params()
    n_pinned = config.seed_count if config.seed_count is not None else 0
    rng = np.random.default_rng(config.rng_seed)
    idx0 = np.sort(rng.choice(geometry.size, size=n_pinned, replace=False))
    vals = rng.integers(0, 2, size=n_pinned, dtype=np.int8) * 2 - 1
    seed = Seed(geometry, idx0 + 1, vals) if n_pinned else Seed.empty(geometry)
    exact = exact_distribution(seed, params, geometry)
    emp = empirical_distribution(
        seed, params, geometry, config.burn_in, config.samples, config.thin, rng
    )
    tv = total_variation(exact, emp)
    rows = [
        (code, float(exact.values[code]), float(emp.values[code]))
        for code in range(exact.values.size)
    ]
    _write_csv(
        out_dir / "oracle_check.csv", "oracle-check", config,
        ("code", "exact_prob", "empirical_freq"), rows,
        meta=[
            ("tv", repr(tv)),
            ("free_indices", json.dumps(list(exact.free_indices))),
            ("seed_entries", json.dumps([[int(k), int(v)] for k, v in seed.entries()])),
        ],
    )
    return tv


# ---------------------------------------------------------------------------
# argument parsing

_FLAG_FIELDS = [
    ("rows", int), ("cols", int), ("jv", float), ("jh", float),
    ("seed_fraction", str), ("seed_count", int), ("schedule", str),
    ("trials", int), ("count", int), ("steps", int), ("grid", str),
    ("max_shift", int), ("burn_in", int), ("samples", int), ("thin", int),
    ("column", str), ("method", str), ("rng_seed", int),
]

_FLAG_TO_FIELD = {
    "jv": "j_v", "jh": "j_h", "column": "dof_column", "method": "dof_method",
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file; flags override it")
    parser.add_argument("--out", default="out", help="output directory (default: out)")
    for name, typ in _FLAG_FIELDS:
        parser.add_argument(f"--{name.replace('_', '-')}", type=typ, default=None)
    parser.add_argument("--rotation", action=argparse.BooleanOptionalAction, default=None)
    parser.add_argument(
        "--independent-seeds", action="store_true", default=None,
        help="draw separate seed index sets for the real and imaginary parts",
    )


def _build_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.config:
        config = ExperimentConfig.from_dict(json.loads(Path(args.config).read_text()))
    else:
        config = ExperimentConfig()
    overrides = {}
    for name, _ in _FLAG_FIELDS:
        value = getattr(args, name)
        if value is not None:
            overrides[_FLAG_TO_FIELD.get(name, name)] = value
    if args.rotation is not None:
        overrides["rotation"] = args.rotation
    if getattr(args, "independent_seeds", None):
        overrides["shared_index_set"] = False
    if "seed_count" in overrides:
        overrides.setdefault("seed_fraction", config.seed_fraction)
    return replace(config, **overrides)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="seeded-ising",
        description="Seeded Ising template experiments: synthesis, reconstruction, matching, fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synthesize", help="draw synthetic templates from unseeded chains")
    _add_common(p)

    p = sub.add_parser("reconstruct", help="reconstruct one template repeatedly from random seeds")
    p.add_argument("template", help="input template file")
    _add_common(p)

    p = sub.add_parser("sweep-j", help="grid-search the coupling pair on one template")
    p.add_argument("template", help="input template file")
    _add_common(p)

    p = sub.add_parser("match", help="pairwise Hamming distances between template files")
    p.add_argument("paths", nargs="+", help="template files or directories")
    p.add_argument("--against", nargs="+", help="second file set (cross pairs instead of within-set)")
    _add_common(p)

    p = sub.add_parser("dof", help="binomial degrees-of-freedom fit of a distance CSV column")
    p.add_argument("distances", help="CSV with a distance column")
    _add_common(p)

    p = sub.add_parser("oracle-check", help="chain visit frequencies vs exact distribution (small lattice)")
    _add_common(p)
    p.set_defaults(oracle_defaults=True)

    args = parser.parse_args(argv)
    try:
        config = _build_config(args)
        if args.command == "oracle-check":
            # a small lattice unless told otherwise: enumeration needs <= 20 free sites
            if args.rows is None and args.config is None:
                config = replace(config, rows=3)
            if args.cols is None and args.config is None:
                config = replace(config, cols=4)
            if args.seed_count is None and config.seed_count is None:
                config = replace(config, seed_count=5)
        out_dir = Path(args.out)

        if args.command == "synthesize":
            written = cmd_synthesize(config, out_dir)
            print(f"wrote {len(written)} files under {out_dir}")
        elif args.command == "reconstruct":
            report = cmd_reconstruct(config, args.template, out_dir)
            im, istd = report["initial"]
            rm, rstd = report["reconstructed"]
            print(f"initial {im:.4f} +/- {istd:.4f}   reconstructed {rm:.4f} +/- {rstd:.4f}")
        elif args.command == "sweep-j":
            result = cmd_sweep_j(config, args.template, out_dir)
            jv, jh = result.argmin
            print(f"argmin J = ({jv}, {jh}) mean {result.entries[result.argmin].mean:.4f}")
        elif args.command == "match":
            out = cmd_match(config, args.paths, args.against, out_dir)
            print(f"wrote {out}")
        elif args.command == "dof":
            fit = cmd_dof(config, args.distances, out_dir)
            print(f"p = {fit.p:.4f}  N = {fit.n_dof}  (var {fit.sample_var:.3e})")
        elif args.command == "oracle-check":
            tv = cmd_oracle_check(config, out_dir)
            print(f"total variation empirical vs exact: {tv:.5f}")
    except (ValueError, OSError) as exc:
        print(f"seeded-ising: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
