"""Optional matplotlib renderings written next to the delimited outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .decision import DominanceReport
from .ifn import Ifn, sample_curve


def save_curve_plot(ifn: Ifn, path: str, step=None) -> None:
    """Render the two membership polylines of one IFN to an image file."""
    rows = sample_curve(ifn, step)
    xs = [float(x) for x, _, _ in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, [float(m) for _, m, _ in rows], marker=".", label="membership")
    ax.plot(xs, [float(n) for _, _, n in rows], marker=".", label="nonmembership")
    ax.set_xlabel("x")
    ax.set_ylabel("degree")
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.05, 1.05)
    ax.legend()
    ax.set_title(ifn.text())
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_degrees_plot(report: DominanceReport, path: str) -> None:
    """Render the dominance degrees of a decision run as a bar chart."""
    fig, ax = plt.subplots(figsize=(7, 4))
    labels = list(report.alternatives)
    values = [float(d) for d in report.degrees]
    bars = ax.bar(labels, values)
    best = report.ranking[0]
    for label, bar in zip(labels, bars):
        if label == best:
            bar.set_color("tab:orange")
    ax.set_ylabel("dominance degree")
    ax.set_ylim(0, 1)
    ax.axhline(0.5, linestyle=":", linewidth=1)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
