"""Dependency-free SVG scatter of an RVReport on the (r, v) lattice."""
from __future__ import annotations

from .rv_sets import RVReport

CELL = 48
MARGIN = 56

STYLE = {
    "realized": ("#1f77b4", "circle"),
    "missing": ("#d62728", "ring"),
    "extra": ("#ff7f0e", "square"),
}


def render_svg(report: RVReport) -> str:
    pts = set(report.formula_set) | set(report.empirical_set)
    if report.upper_set is not None:
        pts |= set(report.upper_set)
    rmax = max([p[0] for p in pts] + [2])
    vmax = max([p[1] for p in pts] + [2])
    width = 2 * MARGIN + rmax * CELL
    height = 2 * MARGIN + vmax * CELL

    def sx(r):
        return MARGIN + r * CELL

    def sy(v):
        return height - MARGIN - v * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>(reg, v) lattice, n={report.n}, class={report.class_name}</title>',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line class="axis" x1="{sx(0)}" y1="{sy(0)}" x2="{sx(rmax) + CELL // 2}" y2="{sy(0)}" stroke="black"/>',
        f'<line class="axis" x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(vmax) - CELL // 2}" stroke="black"/>',
        f'<text x="{sx(rmax) + CELL // 2}" y="{sy(0) + 20}" font-size="14">reg</text>',
        f'<text x="{sx(0) - 20}" y="{sy(vmax) - CELL // 2}" font-size="14">v</text>',
    ]
    for r in range(1, rmax + 1):
        out.append(f'<text x="{sx(r) - 4}" y="{sy(0) + 18}" font-size="12">{r}</text>')
    for v in range(1, vmax + 1):
        out.append(f'<text x="{sx(0) - 18}" y="{sy(v) + 4}" font-size="12">{v}</text>')
    half = CELL // 2 - 4
    for r, v in report.formula_set:
        out.append(f'<rect class="formula" x="{sx(r) - half}" y="{sy(v) - half}" '
                   f'width="{2 * half}" height="{2 * half}" fill="#e8f0fa" stroke="#1f77b4" '
                   f'stroke-dasharray="4 2"/>')
    for r, v in report.empirical_set:
        kind = "extra" if (r, v) in report.extra else "realized"
        color, shape = STYLE[kind]
        if shape == "square":
            out.append(f'<rect class="{kind}" x="{sx(r) - 7}" y="{sy(v) - 7}" width="14" height="14" '
                       f'fill="{color}"/>')
        else:
            out.append(f'<circle class="{kind}" cx="{sx(r)}" cy="{sy(v)}" r="7" fill="{color}"/>')
    for r, v in report.missing:
        color, _ = STYLE["missing"]
        out.append(f'<circle class="missing" cx="{sx(r)}" cy="{sy(v)}" r="9" fill="none" '
                   f'stroke="{color}" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
