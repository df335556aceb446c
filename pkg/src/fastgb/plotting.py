"""Figures and delimited tables for run reports.

Everything renders to files through the Agg backend; nothing opens a window.
"""

from __future__ import annotations

import csv
import math
import os
from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .complexity import CostModelInput, eval_prop1, eval_prop2, eval_prop3  # noqa: E402

COUNTER_COLUMNS = ("field_ops", "reduction_steps", "divisibility_tests", "pairs_generated",
                   "pairs_syzygy", "pairs_rewritten", "pairs_zero", "pairs_basis")


def pretty_plot(width=7, height=None):
    """A figure/axes pair with consistent font sizes."""
    golden = (math.sqrt(5) - 1.0) / 2.0
    height = height or width * golden
    fig, ax = plt.subplots(figsize=(width, height))
    ax.tick_params(labelsize=width * 1.4)
    return fig, ax


def plot_predicted_costs(m: int, n: int, path: str, N_max: int = None):
    """Log-log curves of the three predicted step counts for ``N`` from ``m+1`` to ``N_max``."""
    N_max = N_max or max(10 * (m + 1), 100)
    lo, hi = math.log(m + 1), math.log(max(N_max, m + 2))
    Ns = sorted({int(round(math.exp(lo + (hi - lo) * k / 199))) for k in range(200)})
    series = {
        "Buchberger": [eval_prop1(CostModelInput(m, n, N)) for N in Ns],
        "F5B": [eval_prop2(CostModelInput(m, n, N)) for N in Ns],
        "F5B + fast reducer": [eval_prop3(CostModelInput(m, n, N)) for N in Ns],
    }
    fig, ax = pretty_plot()
    for label, ys in series.items():
        pts = [(N, float(y)) for N, y in zip(Ns, ys) if y > 0]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("N(D, n)")
    ax.set_ylabel("predicted field operations")
    ax.set_title(f"Predicted cost, m={m}, n={n}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_measured_counters(reports: Sequence, path: str):
    """Grouped bars of the main counters for each report (log scale)."""
    names = [_label(r) for r in reports]
    cols = ("field_ops", "reduction_steps", "pairs_generated", "pairs_zero")
    fig, ax = pretty_plot(width=8)
    width = 0.8 / len(cols)
    for k, col in enumerate(cols):
        vals = [max(r.counters[col], 0) for r in reports]
        xs = [i + k * width for i in range(len(reports))]
        ax.bar(xs, [v if v > 0 else 0.8 for v in vals], width=width, label=col)
    ax.set_xticks([i + width * (len(cols) - 1) / 2 for i in range(len(reports))])
    ax.set_xticklabels(names)
    ax.set_yscale("log")
    ax.set_ylabel("count")
    ax.set_title("Measured operation counts")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_counter_table(reports: Sequence, path: str, delimiter: str = ","):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter)
        w.writerow(("algorithm",) + COUNTER_COLUMNS + ("elapsed_seconds", "predicted"))
        for r in reports:
            w.writerow((_label(r),) + tuple(r.counters[c] for c in COUNTER_COLUMNS)
                       + (r.elapsed_seconds, r.predicted[r.algorithm]))
    return path


def render_figures(reports: Sequence, outdir: str, stem: str = "run") -> Dict[str, str]:
    """Write the counter table and both figures into ``outdir``; returns their paths."""
    os.makedirs(outdir, exist_ok=True)
    inp = reports[0].input
    out = {
        "table": write_counter_table(reports, os.path.join(outdir, f"{stem}_counters.csv")),
        "measured": plot_measured_counters(reports, os.path.join(outdir, f"{stem}_measured.png")),
        "predicted": plot_predicted_costs(inp["m"], inp["n"], os.path.join(outdir, f"{stem}_predicted.png"),
                                          N_max=max(inp["N"], inp["m"] + 2)),
    }
    return out


def _label(r) -> str:
    return r.algorithm + (f"/{r.reduction}" if r.reduction and r.reduction != "safe" else "")
