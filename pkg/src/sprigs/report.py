"""Report files for verification runs: delimited data plus rendered figures.

Each suite gets a checks CSV, a detail CSV when the sweep recorded
per-position rows, and one PNG summarizing the sweep.  The outcomes suite
draws the positions in the advantage/edge plane colored by outcome class;
sweeps that only tally counts get a bar chart; everything else falls back
to a pass/fail bar per check.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .verify import SuiteResult

_OUTCOME_COLORS = {"L": "#1f77b4", "R": "#d62728", "N": "#7f7f7f", "P": "#2ca02c"}

plt.rcParams.update(
    {
        "figure.figsize": (7.0, 4.3),
        "font.size": 9,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "savefig.dpi": 150,
    }
)


def write_checks_csv(result: SuiteResult, outdir: Path) -> Path:
    path = outdir / f"{result.suite}.csv"
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "claim", "description", "checked", "passed", "witness"])
        for c in result.checks:
            writer.writerow(
                [result.suite, c.claim, c.description, c.checked, c.passed, c.witness or ""]
            )
    return path


def write_detail_csv(result: SuiteResult, outdir: Path) -> Path | None:
    if not result.rows:
        return None
    fields: list[str] = []
    for row in result.rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    path = outdir / f"{result.suite}_detail.csv"
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields, restval="")
        writer.writeheader()
        writer.writerows(result.rows)
    return path


def _jitter(i: int) -> float:
    # deterministic small offset so equal (advantage, edge) points stay visible
    return ((i * 2654435761) % 1000) / 1000.0 * 0.6 - 0.3


def _figure_outcomes(result: SuiteResult):
    fig, axes = plt.subplots(1, 2, sharey=True)
    for ax, star in zip(axes, (0, 1)):
        rows = [r for r in result.rows if r["star"] == star]
        for out, color in _OUTCOME_COLORS.items():
            xs = [
                r["delta"] + _jitter(i)
                for i, r in enumerate(rows)
                if r["misere_closed"] == out
            ]
            ys = [
                r["epsilon_value"] + _jitter(i + 1)
                for i, r in enumerate(rows)
                if r["misere_closed"] == out
            ]
            ax.scatter(xs, ys, s=4, c=color, label=out, alpha=0.5, linewidths=0)
        ax.set_title("with star" if star else "no star")
        ax.set_xlabel("advantage")
    axes[0].set_ylabel("edge")
    axes[0].legend(title="misere outcome", fontsize=7)
    fig.suptitle("misere outcomes over the advantage/edge plane")
    return fig

def _figure_counts(result: SuiteResult):
    fig, ax = plt.subplots()
    labels = [f"{r.get('population', '')} {r.get('normal_outcome', '')}".strip() for r in result.rows]
    counts = [r["count"] for r in result.rows]
    ax.bar(range(len(counts)), counts, color="#1f77b4")
    ax.set_xticks(range(len(counts)))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel("positions")
    ax.set_title(f"{result.suite}: outcome tally")
    return fig


def _figure_checks(result: SuiteResult):
    fig, ax = plt.subplots()
    names = [c.claim for c in result.checks]
    counts = [c.checked for c in result.checks]
    colors = ["#2ca02c" if c.passed else "#d62728" for c in result.checks]
    ax.barh(range(len(names)), counts, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xlabel("instances checked (green = passed)")
    ax.set_title(f"{result.suite}: checks")
    fig.tight_layout()
    return fig


def render_figure(result: SuiteResult, outdir: Path) -> Path:
    if result.suite == "outcomes":
        fig = _figure_outcomes(result)
    elif result.rows and "count" in result.rows[0]:
        fig = _figure_counts(result)
    else:
        fig = _figure_checks(result)
    path = outdir / f"{result.suite}.png"
    fig.savefig(path)
    plt.close(fig)
    return path


def write_suite_report(result: SuiteResult, outdir: str | Path) -> list[Path]:
    """Write all report files for one suite; returns the paths created."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [write_checks_csv(result, outdir)]
    detail = write_detail_csv(result, outdir)
    if detail is not None:
        paths.append(detail)
    paths.append(render_figure(result, outdir))
    return paths
