"""CSV tables and SVG sweep curves for sweep results.

Output is byte-deterministic: fixed 4-decimal formatting, LF line
endings, UTF-8, and no timestamps or external references, so identical
sweeps serialize identically.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .evaluation import MetricsRow
from .measures import Measure
from .sweep import SweepResult

CSV_HEADER = (
    "measure,threshold,precision,recall,f_measure,fallout,"
    "extracted_size,true_positives,universe_size,gold_size"
)

SUMMARY_HEADER = "measure,selection," + CSV_HEADER.split(",", 1)[1]


def _format_row(row: MetricsRow) -> str:
    return (
        f"{row.measure.value},{row.threshold},"
        f"{row.precision:.4f},{row.recall:.4f},{row.f_measure:.4f},{row.fallout:.4f},"
        f"{row.extracted_size},{row.true_positives},{row.universe_size},{row.gold_size}"
    )


def write_csv(result: SweepResult, sink: IO[bytes]) -> int:
    """Write one sweep as CSV, one line per threshold; returns the row count."""
    lines = [CSV_HEADER]
    lines.extend(_format_row(row) for row in result.rows)
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))
    return len(result.rows)


def write_summary_csv(results: Sequence[SweepResult], sink: IO[bytes]) -> int:
    """Write each sweep's selected operating points as CSV rows."""
    lines = [SUMMARY_HEADER]
    count = 0
    for result in results:
        lines.append(f"{result.measure.value},best_f," + _format_row(result.best_f).split(",", 1)[1])
        count += 1
        if result.best_f_under_cap is not None:
            lines.append(
                f"{result.measure.value},best_f_under_cap,"
                + _format_row(result.best_f_under_cap).split(",", 1)[1]
            )
            count += 1
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))
    return count


def read_metrics_csv(source: IO[bytes]) -> list[MetricsRow]:
    """Parse a CSV written by write_csv back into MetricsRow values."""
    text = io.TextIOWrapper(source, encoding="utf-8", newline="")
    rows = []
    for record in csv.DictReader(text):
        rows.append(
            MetricsRow(
                measure=Measure(record["measure"]),
                threshold=int(record["threshold"]),
                precision=float(record["precision"]),
                recall=float(record["recall"]),
                f_measure=float(record["f_measure"]),
                fallout=float(record["fallout"]),
                extracted_size=int(record["extracted_size"]),
                true_positives=int(record["true_positives"]),
                universe_size=int(record["universe_size"]),
                gold_size=int(record["gold_size"]),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_SERIES = (
    ("Precision", "precision", "#1f77b4"),
    ("Recall", "recall", "#2ca02c"),
    ("F-measure", "f_measure", "#d62728"),
    ("Fallout", "fallout", "#ff7f0e"),
)

_WIDTH = 960
_HEIGHT = 560
_MARGIN_LEFT = 70
_MARGIN_RIGHT = 190
_MARGIN_TOP = 60
_MARGIN_BOTTOM = 70


def _x_ticks(t_min: int, t_max: int) -> list[int]:
    span = t_max - t_min
    step = next(s for s in (1, 2, 5, 10, 20, 25, 50, 100) if span / s <= 12)
    ticks = [t_min]
    ticks.extend(t for t in range(t_min + 1, t_max + 1) if t % step == 0)
    if ticks[-1] != t_max:
        ticks.append(t_max)
    return ticks


def render_svg(result: SweepResult, sink: IO[bytes]) -> None:
    """Render a sweep as a self-contained SVG line chart.

    X axis is the threshold, Y axis is [0, 1]; one polyline per metric
    plus a dashed vertical marker at the best-F threshold.  Requires at
    least two rows.
    """
    if len(result.rows) < 2:
        raise ValueError(f"need at least 2 rows to plot, got {len(result.rows)}")

    plot_left = _MARGIN_LEFT
    plot_right = _WIDTH - _MARGIN_RIGHT
    plot_top = _MARGIN_TOP
    plot_bottom = _HEIGHT - _MARGIN_BOTTOM
    plot_width = plot_right - plot_left
    plot_height = plot_bottom - plot_top

    t_min = result.rows[0].threshold
    t_max = result.rows[-1].threshold

    def x_px(threshold: int) -> float:
        return plot_left + (threshold - t_min) / (t_max - t_min) * plot_width

    def y_px(value: float) -> float:
        return plot_bottom - value * plot_height

    unit = "%" if result.measure.is_percent else " docs"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="#ffffff"/>',
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="32" text-anchor="middle" '
        f'font-size="20" font-family="sans-serif">{result.measure.label} sweep</text>',
    ]

    # Horizontal grid and y labels at 0.0 .. 1.0.
    for i in range(11):
        value = i / 10
        y = y_px(value)
        lines.append(
            f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        if i % 2 == 0:
            lines.append(
                f'<text x="{plot_left - 8}" y="{y + 4:.2f}" text-anchor="end" '
                f'font-size="12" font-family="sans-serif">{value:.1f}</text>'
            )

    # Axes.
    lines.append(
        f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" '
        f'stroke="#000000" stroke-width="1.5"/>'
    )
    lines.append(
        f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" y2="{plot_bottom}" '
        f'stroke="#000000" stroke-width="1.5"/>'
    )
    for tick in _x_ticks(t_min, t_max):
        x = x_px(tick)
        lines.append(
            f'<line x1="{x:.2f}" y1="{plot_bottom}" x2="{x:.2f}" y2="{plot_bottom + 5}" '
            f'stroke="#000000" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{x:.2f}" y="{plot_bottom + 20}" text-anchor="middle" '
            f'font-size="12" font-family="sans-serif">{tick}</text>'
        )
    lines.append(
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{_HEIGHT - 22}" '
        f'text-anchor="middle" font-size="14" font-family="sans-serif">'
        f'threshold ({result.measure.value}{unit})</text>'
    )

    # Best-F marker.
    best_x = x_px(result.best_f.threshold)
    lines.append(
        f'<line x1="{best_x:.2f}" y1="{plot_top}" x2="{best_x:.2f}" y2="{plot_bottom}" '
        f'stroke="#555555" stroke-width="1" stroke-dasharray="5,4"/>'
    )
    lines.append(
        f'<text x="{best_x + 4:.2f}" y="{plot_top + 14}" text-anchor="start" '
        f'font-size="12" font-family="sans-serif">best F @ {result.best_f.threshold}</text>'
    )

    # One polyline per metric, plus legend.
    legend_x = plot_right + 24
    legend_y = plot_top + 10
    for i, (label, attr, color) in enumerate(_SERIES):
        points = " ".join(
            f"{x_px(row.threshold):.2f},{y_px(getattr(row, attr)):.2f}"
            for row in result.rows
        )
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{points}"/>'
        )
        ly = legend_y + i * 22
        lines.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 24}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{legend_x + 30}" y="{ly + 4}" text-anchor="start" '
            f'font-size="13" font-family="sans-serif">{label}</text>'
        )

    lines.append("</svg>")
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))


# ---------------------------------------------------------------------------
# Report bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReportBundle:
    """Paths of everything one sweep report wrote."""

    csv_paths: dict[Measure, Path]
    svg_paths: dict[Measure, Path]
    summary_path: Path

    def all_paths(self) -> list[Path]:
        return [*self.csv_paths.values(), *self.svg_paths.values(), self.summary_path]


def write_report_bundle(results: Iterable[SweepResult], out_dir) -> ReportBundle:
    """Write per-measure CSV and SVG files plus summary.csv into a directory."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = list(results)
    csv_paths: dict[Measure, Path] = {}
    svg_paths: dict[Measure, Path] = {}
    for result in results:
        csv_path = out_dir / f"{result.measure.value}.csv"
        with open(csv_path, "wb") as handle:
            write_csv(result, handle)
        csv_paths[result.measure] = csv_path
        svg_path = out_dir / f"{result.measure.value}.svg"
        with open(svg_path, "wb") as handle:
            render_svg(result, handle)
        svg_paths[result.measure] = svg_path
    summary_path = out_dir / "summary.csv"
    with open(summary_path, "wb") as handle:
        write_summary_csv(results, handle)
    return ReportBundle(csv_paths=csv_paths, svg_paths=svg_paths, summary_path=summary_path)
