"""Standalone SVG box-whisker plots built from rect/line/text primitives."""

from __future__ import annotations

import math
from typing import Sequence

from .experiments import BoxStats

WIDTH = 640
HEIGHT = 420
MARGIN_LEFT = 70
MARGIN_RIGHT = 24
MARGIN_TOP = 48
MARGIN_BOTTOM = 56


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def boxplot_svg(
    cells: Sequence[tuple[int, BoxStats]], threshold: float, title: str
) -> str:
    """Render one boxplot per (spike count, stats) pair.

    Spike counts run along the horizontal axis at equal spacing, the
    error norm along the vertical axis; a dashed horizontal reference
    line marks the threshold.
    """
    if not cells:
        raise ValueError("cells must be nonempty")
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    y_top = max(
        float(threshold),
        max(max(s.whisker_high, *(s.outliers or (s.whisker_high,))) for _, s in cells),
    )
    y_max = y_top * 1.08 if y_top > 0 else 1.0

    def x_of(slot: int) -> float:
        return MARGIN_LEFT + (slot + 0.5) * plot_w / len(cells)

    def y_of(v: float) -> float:
        return MARGIN_TOP + plot_h * (1.0 - v / y_max)

    half_box = 0.22 * plot_w / len(cells)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="24" font-family="sans-serif" font-size="15" '
        f'text-anchor="middle">{title}</text>',
        # axes
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{HEIGHT - MARGIN_BOTTOM}" stroke="black"/>',
        f'<line x1="{MARGIN_LEFT}" y1="{HEIGHT - MARGIN_BOTTOM}" '
        f'x2="{WIDTH - MARGIN_RIGHT}" y2="{HEIGHT - MARGIN_BOTTOM}" stroke="black"/>',
    ]
    n_ticks = 5
    for k in range(n_ticks + 1):
        v = y_max * k / n_ticks
        y = y_of(v)
        parts.append(
            f'<line x1="{MARGIN_LEFT - 5}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" '
            f'y2="{_fmt(y)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 9}" y="{_fmt(y + 4)}" font-family="sans-serif" '
            f'font-size="11" text-anchor="end">{v:.3g}</text>'
        )
    y_ref = y_of(float(threshold))
    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{_fmt(y_ref)}" x2="{WIDTH - MARGIN_RIGHT}" '
        f'y2="{_fmt(y_ref)}" stroke="red" stroke-dasharray="6,4"/>'
    )
    parts.append(
        f'<text x="{WIDTH - MARGIN_RIGHT - 4}" y="{_fmt(y_ref - 5)}" '
        f'font-family="sans-serif" font-size="11" text-anchor="end" '
        f'fill="red">threshold</text>'
    )
    for slot, (n, s) in enumerate(cells):
        cx = x_of(slot)
        # whisker stems and caps
        for v_from, v_to in ((s.whisker_low, s.q1), (s.q3, s.whisker_high)):
            parts.append(
                f'<line x1="{_fmt(cx)}" y1="{_fmt(y_of(v_from))}" x2="{_fmt(cx)}" '
                f'y2="{_fmt(y_of(v_to))}" stroke="black"/>'
            )
        for v in (s.whisker_low, s.whisker_high):
            parts.append(
                f'<line x1="{_fmt(cx - half_box / 2)}" y1="{_fmt(y_of(v))}" '
                f'x2="{_fmt(cx + half_box / 2)}" y2="{_fmt(y_of(v))}" stroke="black"/>'
            )
        parts.append(
            f'<rect x="{_fmt(cx - half_box)}" y="{_fmt(y_of(s.q3))}" '
            f'width="{_fmt(2 * half_box)}" height="{_fmt(y_of(s.q1) - y_of(s.q3))}" '
            f'fill="#9ecae1" stroke="black"/>'
        )
        parts.append(
            f'<line x1="{_fmt(cx - half_box)}" y1="{_fmt(y_of(s.median))}" '
            f'x2="{_fmt(cx + half_box)}" y2="{_fmt(y_of(s.median))}" '
            f'stroke="black" stroke-width="2"/>'
        )
        for v in s.outliers:
            parts.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(y_of(v))}" r="2.5" '
                f'fill="none" stroke="black"/>'
            )
        parts.append(
            f'<text x="{_fmt(cx)}" y="{HEIGHT - MARGIN_BOTTOM + 18}" '
            f'font-family="sans-serif" font-size="12" text-anchor="middle">{n}</text>'
        )
    parts.append(
        f'<text x="{WIDTH / 2:.2f}" y="{HEIGHT - 14}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle">number of spikes</text>'
    )
    parts.append(
        f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.2f}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.2f})">error norm</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def alpha_label(alpha: float) -> str:
    return "inf" if math.isinf(alpha) else repr(float(alpha))
