"""Report serialization (JSON / TSV) and metric figures.

JSON output is fully deterministic (sorted keys, fixed layout) so that
two evaluations of the same inputs are byte-identical.
"""

from __future__ import annotations

import json
from typing import Mapping

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .pipeline import EvalReport

_METRICS = ("accuracy", "precision", "recall")


def report_to_dict(report: EvalReport) -> dict:
    return {
        "total": report.total,
        "correct": report.correct,
        "accuracy": report.accuracy,
        "predicted_entail": report.predicted_entail,
        "correct_entail": report.correct_entail,
        "gold_entail": report.gold_entail,
        "precision": report.precision,
        "recall": report.recall,
        "flags": list(report.flags),
        "per_pair": [
            {"id": pair_id, "gold": gold.value, "predicted": predicted.value}
            for pair_id, gold, predicted in report.per_pair
        ],
    }


def report_to_json(report: EvalReport) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def report_to_tsv(report: EvalReport) -> str:
    lines = [
        f"{pair_id}\t{gold.value}\t{predicted.value}"
        for pair_id, gold, predicted in report.per_pair
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def render_metrics_figure(reports: Mapping[str, EvalReport], path) -> None:
    """Render a grouped bar chart of accuracy/precision/recall to a file.

    ``reports`` maps a label (e.g. the mode name) to its report, so a
    single run or a side-by-side comparison both work.
    """
    labels = list(reports)
    positions = range(len(_METRICS))
    width = 0.8 / max(len(labels), 1)

    fig, ax = plt.subplots(figsize=(6, 4))
    for i, label in enumerate(labels):
        report = reports[label]
        values = [getattr(report, metric) for metric in _METRICS]
        offsets = [p + i * width for p in positions]
        bars = ax.bar(offsets, values, width=width, label=label)
        ax.bar_label(bars, fmt="%.3f", fontsize=8)
    ax.set_xticks([p + width * (len(labels) - 1) / 2 for p in positions])
    ax.set_xticklabels(_METRICS)
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("score")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
