"""Figures for sweep reports."""
from __future__ import annotations

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .classify import STATUSES

COLORS = {
    "Prime": "#3182bd",
    "NotPrime": "#de2d26",
    "ConjecturallyPrime": "#31a354",
    "Inconclusive": "#969696",
}


def sweep_figure(report) -> Figure:
    """Grouped bars of verdict counts per cell count, on a log scale."""
    ns = sorted(report.totals)
    shown = [s for s in STATUSES if any(report.totals[n].get(s, 0) for n in ns)]
    fig = Figure(figsize=(6.4, 4.0), dpi=100)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(1, 1, 1)
    width = 0.8 / max(len(shown), 1)
    for k, status in enumerate(shown):
        xs = [n - 0.4 + width * (k + 0.5) for n in ns]
        vals = [report.totals[n].get(status, 0) for n in ns]
        ax.bar(xs, vals, width=width, color=COLORS[status], label=status)
    ax.set_yscale("log")
    ax.set_ylim(bottom=0.5)
    ax.set_xlabel("cells")
    ax.set_ylabel("fixed polyominoes")
    ax.set_xticks(ns)
    ax.set_title(f"verdicts up to {report.n_max} cells")
    ax.legend(frameon=False, fontsize=8, loc="upper left")
    fig.tight_layout()
    return fig


def save_sweep_png(report, path) -> None:
    # no metadata so the bytes only depend on the data and matplotlib version
    sweep_figure(report).savefig(path, format="png", metadata={"Software": None})
