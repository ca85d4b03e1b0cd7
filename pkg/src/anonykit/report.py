"""CSV and SVG output for sweep reports."""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path

from .census import SweepReport
from .errors import EmptyReport

CSV_HEADER = ["k", "algorithm", "order", "seed", "cost", "ratio"]
PALETTE = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"]


def report_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.rows:
        writer.writerow([r.k, r.algorithm, r.order, r.seed, r.cost, str(r.ratio)])
    return buf.getvalue()


def report_svg(report: SweepReport, width: int = 720, height: int = 420) -> str:
    """Ratio-versus-k line chart, one polyline per variant, log-scaled k axis."""
    margin = 50
    ks = [r.k for r in report.rows]
    ratios = [float(r.ratio) for r in report.rows]
    kmin, kmax = min(ks), max(ks)
    rmin, rmax = 1.0, max(max(ratios), 1.0) * 1.05
    lx0, lx1 = math.log(kmin), math.log(kmax)

    def px(k):
        span = lx1 - lx0 or 1.0
        return margin + (math.log(k) - lx0) / span * (width - 2 * margin)

    def py(r):
        span = rmax - rmin or 1.0
        return height - margin - (r - rmin) / span * (height - 2 * margin)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2:.1f}" y="{height - 12}" text-anchor="middle">k (log scale)</text>',
        f'<text x="14" y="{height / 2:.1f}" transform="rotate(-90 14 {height / 2:.1f})" '
        f'text-anchor="middle">max class size / k</text>',
        f'<text x="{margin - 6}" y="{py(rmin) + 4:.1f}" text-anchor="end">{rmin:.2f}</text>',
        f'<text x="{margin - 6}" y="{py(rmax) + 4:.1f}" text-anchor="end">{rmax:.2f}</text>',
        f'<text x="{margin}" y="{height - margin + 16}" text-anchor="middle">{kmin}</text>',
        f'<text x="{width - margin}" y="{height - margin + 16}" text-anchor="middle">{kmax}</text>',
    ]
    for idx, variant in enumerate(report.variants()):
        color = PALETTE[idx % len(PALETTE)]
        pts = " ".join(f"{px(r.k):.2f},{py(float(r.ratio)):.2f}" for r in report.series(variant))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = margin + 16 * idx
        out.append(f'<text x="{width - margin - 120}" y="{ly}" fill="{color}">{variant}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_report(report: SweepReport, csv_path, svg_path=None) -> None:
    if not report.rows:
        raise EmptyReport("report has no rows; nothing written")
    Path(csv_path).write_text(report_csv(report))
    if svg_path is not None:
        Path(svg_path).write_text(report_svg(report))
