"""Report serialization: JSON, delimited CSV, and a status/timing figure.

Writing a report to ``<stem>.json`` also produces ``<stem>.csv`` with one
row per check and ``<stem>.png`` summarizing statuses and timings, so a
single output path yields the machine-readable record, the spreadsheet
view, and the picture.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .checks import Report

_STATUS_COLORS = {"pass": "#2e7d32", "fail": "#c62828",
                  "inconclusive": "#f9a825", "error": "#6a1b9a"}


def report_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=False)


def report_text(report: Report) -> str:
    lines = []
    meta = report.meta
    lines.append(f"family m={meta['m']} field={meta['field']} "
                 f"order={meta['order']} seed={meta['seed']}")
    for c in report.checks:
        lines.append(f"{c.status.upper():12s} {c.id:55s} "
                     f"{c.elapsed_ms:9.1f} ms  {c.detail}")
    counts = report.counts
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return "\n".join(lines)


def write_csv(report: Report, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "status", "elapsed_ms", "paper_anchor", "detail"])
        for c in report.checks:
            w.writerow([c.id, c.status, f"{c.elapsed_ms:.1f}",
                        c.paper_anchor, c.detail])


def write_figure(report: Report, path: Path) -> None:
    """Horizontal bar chart of check runtimes, colored by status."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = [c.id for c in report.checks]
    times = [max(c.elapsed_ms, 0.1) for c in report.checks]
    colors = [_STATUS_COLORS.get(c.status, "#455a64") for c in report.checks]
    height = max(2.5, 0.28 * len(ids) + 1.2)
    fig, ax = plt.subplots(figsize=(10, height))
    ypos = range(len(ids))
    ax.barh(list(ypos), times, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(ids, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("elapsed (ms, log scale)")
    meta = report.meta
    ax.set_title(f"verification report: m={meta['m']}, field={meta['field']}, "
                 f"seed={meta['seed']}")
    handles = [plt.Rectangle((0, 0), 1, 1, color=v)
               for v in _STATUS_COLORS.values()]
    ax.legend(handles, list(_STATUS_COLORS), fontsize=7, loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(report: Report, out_path: str) -> list[Path]:
    """Write JSON to ``out_path`` plus sibling CSV and PNG; returns paths."""
    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(report_json(report) + "\n")
    csv_path = out.with_suffix(".csv")
    write_csv(report, csv_path)
    png_path = out.with_suffix(".png")
    write_figure(report, png_path)
    return [out, csv_path, png_path]
