"""Simulation report rendering: canonical JSON, a per-email CSV table and
margin/rationale distribution figures written alongside the JSON file.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .crowd import SimulationReport

CSV_COLUMNS = (
    "task_id",
    "state",
    "context_mode",
    "verdict_pattern",
    "margin",
    "pair_rationale",
    "worker_ids",
)


def write_report(report: SimulationReport, out_path: str | Path, figures: bool = True) -> list[Path]:
    """Write report.json plus report.csv and PNG charts next to it."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    written = [out_path]
    out_path.write_text(report.canonical() + "\n", encoding="utf-8")

    csv_path = out_path.with_suffix(".csv")
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in report.per_email:
            writer.writerow(
                [
                    row["task_id"],
                    row["state"],
                    row["context_mode"],
                    row["verdict_pattern"],
                    row["margin"] or "",
                    row["pair_rationale"] or "",
                    ";".join(row["worker_ids"]),
                ]
            )
    written.append(csv_path)

    if figures:
        written.append(
            _bar_chart(
                report.aggregate["margins"],
                "Ballot margins",
                out_path.with_name(out_path.stem + "_margins.png"),
            )
        )
        written.append(
            _bar_chart(
                report.aggregate["rationales"],
                "Pair-selection rationales",
                out_path.with_name(out_path.stem + "_rationales.png"),
            )
        )
    return written


def _bar_chart(counts: dict, title: str, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 3.2))
    labels = list(counts.keys()) or ["(none)"]
    values = [counts[k] for k in counts] or [0]
    ax.bar(labels, values, color="#4878a8")
    ax.set_title(title)
    ax.set_ylabel("emails")
    ax.tick_params(axis="x", labelrotation=15)
    for spine in ("top", "right"):
        ax.spines[spine].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
