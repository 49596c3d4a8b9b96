"""Render figures from the training pipeline's delimited outputs.

Consumes two documented CSV schemas and writes image files:

* aggregate metrics — columns ``episode, mode, schedule, n_seeds`` plus
  ``mean_<metric>`` / ``std_<metric>`` pairs: per-episode statistics over
  seeds for one (mode, schedule) experiment;
* node projection — columns ``node, pc1, pc2, label``: one 2-D point per
  graph node, labeled with the task id that dominates its matched
  demonstrations (0 = no matches).

Everything here is presentation: smoothing and dispersion-band rendering
only. Input files are never modified and no new experiment statistics are
computed.
"""

from dataclasses import dataclass, field
from pathlib import Path
import csv

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

CURVE_METRICS = ("eval_success", "eval_return")
DEFAULT_WINDOW = 100


class InputError(ValueError):
    """Missing, empty, or malformed input file, or a bad plot setting."""


@dataclass(frozen=True)
class PlotSpec:
    """What to read, how much to smooth, and where to write the image."""

    inputs: tuple
    out: str
    window: int = DEFAULT_WINDOW
    group_by: str | None = None     # "mode", "schedule", or None for auto

    def __post_init__(self):
        if self.window < 1:
            raise InputError(f"smoothing window must be >= 1, got {self.window}")
        if self.group_by not in (None, "mode", "schedule"):
            raise InputError(f"unknown grouping column {self.group_by!r}")
        if not self.inputs:
            raise InputError("no input files given")


# ---- readers -----------------------------------------------------------------


def _read_rows(path) -> tuple:
    path = Path(path)
    if not path.exists():
        raise InputError(f"no such file: {path}")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise InputError(f"{path}: empty file")
    return rows[0], rows[1:]


def read_aggregate(path) -> dict:
    """Aggregate CSV as arrays keyed by column, plus its mode/schedule tags."""
    header, body = _read_rows(path)
    if not body:
        raise InputError(f"{path}: no data rows")
    for name in ("episode", "mode", "schedule"):
        if name not in header:
            raise InputError(f"{path}: missing column {name!r}")
    cols = {name: [row[i] for row in body] for i, name in enumerate(header)}
    out = {}
    for name, cells in cols.items():
        if name in ("mode", "schedule"):
            out[name] = cells[0]
        else:
            out[name] = np.array([float(c) for c in cells])
    return out


def read_projection(path) -> list:
    """Projection rows as (node id, x, y, label) tuples."""
    header, body = _read_rows(path)
    if header[:4] != ["node", "pc1", "pc2", "label"]:
        raise InputError(f"{path}: expected header node,pc1,pc2,label")
    if not body:
        raise InputError(f"{path}: projection has no nodes")
    return [(int(r[0]), float(r[1]), float(r[2]), int(r[3])) for r in body]


# ---- series preparation --------------------------------------------------------


def smooth(values, window: int) -> np.ndarray:
    """Trailing moving average; the first window-1 points average the prefix."""
    values = np.asarray(values, dtype=np.float64)
    if window < 1:
        raise InputError(f"smoothing window must be >= 1, got {window}")
    if window == 1:
        return values.copy()
    csum = np.concatenate([[0.0], np.cumsum(values)])
    hi = np.arange(1, values.size + 1)
    lo = np.maximum(0, hi - window)
    return (csum[hi] - csum[lo]) / (hi - lo)


def curve_band(run: dict, metric: str, window: int) -> tuple:
    """(episode, smoothed mean, band lower, band upper) for one metric.

    The band is mean ± one standard deviation; a single-seed aggregate has
    zero std everywhere, so lower == mean == upper (zero-width band).
    """
    for col in (f"mean_{metric}", f"std_{metric}"):
        if col not in run:
            raise InputError(f"aggregate input lacks column {col!r}")
    mean = smooth(run[f"mean_{metric}"], window)
    std = smooth(run[f"std_{metric}"], window)
    return run["episode"], mean, mean - std, mean + std


def group_labels(runs: list, group_by: str | None) -> list:
    """One legend label per input; distinct mode wins, else schedule, else both."""
    if group_by is not None:
        return [r[group_by] for r in runs]
    modes = [r["mode"] for r in runs]
    if len(set(modes)) == len(runs):
        return modes
    schedules = [r["schedule"] for r in runs]
    if len(set(schedules)) == len(runs):
        return schedules
    return [f"{m} ({s})" for m, s in zip(modes, schedules)]


def projection_groups(rows: list) -> list:
    """Scatter groups as (legend label, color, xs, ys), ordered by task id."""
    labels = sorted({r[3] for r in rows})
    groups = []
    for label in labels:
        xs = np.array([r[1] for r in rows if r[3] == label])
        ys = np.array([r[2] for r in rows if r[3] == label])
        name = f"task {label}" if label > 0 else "unlabeled"
        color = f"C{(label - 1) % 10}" if label > 0 else "0.6"
        groups.append((name, color, xs, ys))
    return groups


# ---- figures -------------------------------------------------------------------


def plot_curves(spec: PlotSpec) -> None:
    """Learning curves: one line per input with a ±1 std shaded band."""
    runs = [read_aggregate(p) for p in spec.inputs]
    labels = group_labels(runs, spec.group_by)
    fig, axes = plt.subplots(len(CURVE_METRICS), 1, figsize=(7.0, 6.5),
                             sharex=True)
    for run, label in zip(runs, labels):
        for ax, metric in zip(axes, CURVE_METRICS):
            x, mean, lower, upper = curve_band(run, metric, spec.window)
            line, = ax.plot(x, mean, linewidth=1.4, label=label)
            ax.fill_between(x, lower, upper, color=line.get_color(),
                            alpha=0.25, linewidth=0)
    for ax, metric in zip(axes, CURVE_METRICS):
        ax.set_ylabel(metric.replace("_", " "))
        ax.grid(True, alpha=0.3)
    axes[0].legend(loc="lower right")
    axes[0].set_title(f"mean over seeds, window {spec.window}; "
                      f"band is one standard deviation")
    axes[-1].set_xlabel("episode")
    fig.tight_layout()
    fig.savefig(spec.out, dpi=120)
    plt.close(fig)


def plot_pca(spec: PlotSpec) -> None:
    """2-D node map: one color and legend entry per dominant task."""
    if len(spec.inputs) != 1:
        raise InputError("the node-map figure takes exactly one input file")
    rows = read_projection(spec.inputs[0])
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    for name, color, xs, ys in projection_groups(rows):
        ax.scatter(xs, ys, s=14, color=color, label=name, linewidths=0)
    ax.set_xlabel("component 1")
    ax.set_ylabel("component 2")
    ax.set_title(f"node weights, 2-D projection ({len(rows)} nodes)")
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.out, dpi=120)
    plt.close(fig)
