"""Self-contained SVG charts for experiment results.

Two generators mirror the harness's two standard views: learning curves
(metric vs. label budget, one panel per metric and emotion-set size) and
final performance vs. emotion-set size.  Both draw analytic chance levels as
dotted lines and across-seed standard errors as vertical bars, and emit
deterministic standalone SVG text so results directories need no plotting
stack to stay viewable.
"""

from __future__ import annotations

from typing import Sequence

from .evaluation import MetricRecord, aggregate_records
from .vadspace import chance_levels

__all__ = ["learning_curves_svg", "final_vs_n_svg"]

_METHOD_COLORS = {"ours": "#d62728", "sep": "#1f77b4", "sep_all": "#2ca02c"}
_METRIC_LABELS = {"quality": "Quality score", "top1": "Top-1 accuracy",
                  "top2": "Top-2 accuracy"}
_METRIC_RANGES = {"quality": (1.0, 7.0), "top1": (0.0, 1.0),
                  "top2": (0.0, 1.0)}

_PANEL_W = 260.0
_PANEL_H = 190.0
_MARGIN_L = 52.0
_MARGIN_R = 16.0
_MARGIN_T = 30.0
_MARGIN_B = 42.0
_GAP = 24.0


def _fmt(value: float) -> str:
    text = f"{value:.6g}"
    return text


class _Panel:
    """One axes rectangle with data-to-pixel mapping and tick drawing."""

    def __init__(self, origin_x: float, origin_y: float,
                 x_range: tuple[float, float], y_range: tuple[float, float],
                 title: str, x_label: str, y_label: str):
        self.x0 = origin_x + _MARGIN_L
        self.y0 = origin_y + _MARGIN_T
        self.w = _PANEL_W - _MARGIN_L - _MARGIN_R
        self.h = _PANEL_H - _MARGIN_T - _MARGIN_B
        self.x_range = x_range
        self.y_range = y_range
        self.title = title
        self.x_label = x_label
        self.y_label = y_label
        self.shapes: list[str] = []

    def px(self, x: float) -> float:
        lo, hi = self.x_range
        span = hi - lo if hi > lo else 1.0
        return self.x0 + (x - lo) / span * self.w

    def py(self, y: float) -> float:
        lo, hi = self.y_range
        span = hi - lo if hi > lo else 1.0
        return self.y0 + self.h - (y - lo) / span * self.h

    def frame(self, x_ticks: Sequence[float],
              y_ticks: Sequence[float]) -> None:
        s = self.shapes
        s.append(f'<rect x="{_fmt(self.x0)}" y="{_fmt(self.y0)}" '
                 f'width="{_fmt(self.w)}" height="{_fmt(self.h)}" '
                 'fill="none" stroke="#555" stroke-width="1"/>')
        s.append(f'<text x="{_fmt(self.x0 + self.w / 2)}" '
                 f'y="{_fmt(self.y0 - 10)}" text-anchor="middle" '
                 'font-size="12" font-weight="bold">'
                 f'{self.title}</text>')
        s.append(f'<text x="{_fmt(self.x0 + self.w / 2)}" '
                 f'y="{_fmt(self.y0 + self.h + 32)}" text-anchor="middle" '
                 f'font-size="11">{self.x_label}</text>')
        ylx = self.x0 - 38
        yly = self.y0 + self.h / 2
        s.append(f'<text x="{_fmt(ylx)}" y="{_fmt(yly)}" '
                 f'text-anchor="middle" font-size="11" '
                 f'transform="rotate(-90 {_fmt(ylx)} {_fmt(yly)})">'
                 f'{self.y_label}</text>')
        for tick in x_ticks:
            x = self.px(tick)
            s.append(f'<line x1="{_fmt(x)}" y1="{_fmt(self.y0 + self.h)}" '
                     f'x2="{_fmt(x)}" y2="{_fmt(self.y0 + self.h + 4)}" '
                     'stroke="#555" stroke-width="1"/>')
            s.append(f'<text x="{_fmt(x)}" y="{_fmt(self.y0 + self.h + 16)}" '
                     f'text-anchor="middle" font-size="10">{_fmt(tick)}</text>')
        for tick in y_ticks:
            y = self.py(tick)
            s.append(f'<line x1="{_fmt(self.x0 - 4)}" y1="{_fmt(y)}" '
                     f'x2="{_fmt(self.x0)}" y2="{_fmt(y)}" '
                     'stroke="#555" stroke-width="1"/>')
            s.append(f'<text x="{_fmt(self.x0 - 7)}" y="{_fmt(y + 3)}" '
                     f'text-anchor="end" font-size="10">{_fmt(tick)}</text>')

    def chance_line(self, level: float) -> None:
        y = self.py(level)
        self.shapes.append(
            f'<line x1="{_fmt(self.x0)}" y1="{_fmt(y)}" '
            f'x2="{_fmt(self.x0 + self.w)}" y2="{_fmt(y)}" '
            'stroke="#888" stroke-width="1" stroke-dasharray="2 4"/>')

    def series(self, points: Sequence[tuple[float, float, float]],
               color: str) -> None:
        """A polyline of (x, y, se) with vertical error bars and markers."""
        if not points:
            return
        path = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}"
                        for x, y, _ in points)
        self.shapes.append(f'<polyline points="{path}" fill="none" '
                           f'stroke="{color}" stroke-width="1.5"/>')
        for x, y, se in points:
            cx, cy = self.px(x), self.py(y)
            if se > 0:
                y_lo = self.py(max(self.y_range[0], y - se))
                y_hi = self.py(min(self.y_range[1], y + se))
                self.shapes.append(
                    f'<line x1="{_fmt(cx)}" y1="{_fmt(y_lo)}" '
                    f'x2="{_fmt(cx)}" y2="{_fmt(y_hi)}" '
                    f'stroke="{color}" stroke-width="1"/>')
            self.shapes.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                               f'r="2.5" fill="{color}"/>')


def _legend(methods: Sequence[str], x: float, y: float) -> list[str]:
    shapes = []
    for i, method in enumerate(methods):
        color = _METHOD_COLORS[method]
        lx = x + i * 110
        shapes.append(f'<line x1="{_fmt(lx)}" y1="{_fmt(y)}" '
                      f'x2="{_fmt(lx + 22)}" y2="{_fmt(y)}" '
                      f'stroke="{color}" stroke-width="2"/>')
        shapes.append(f'<text x="{_fmt(lx + 27)}" y="{_fmt(y + 4)}" '
                      f'font-size="11">{method}</text>')
    shapes.append(f'<line x1="{_fmt(x + len(methods) * 110)}" '
                  f'y1="{_fmt(y)}" x2="{_fmt(x + len(methods) * 110 + 22)}" '
                  f'y2="{_fmt(y)}" stroke="#888" stroke-width="1" '
                  'stroke-dasharray="2 4"/>')
    shapes.append(f'<text x="{_fmt(x + len(methods) * 110 + 27)}" '
                  f'y="{_fmt(y + 4)}" font-size="11">chance</text>')
    return shapes


def _document(width: float, height: float, shapes: Sequence[str]) -> str:
    header = (f'<svg xmlns="http://www.w3.org/2000/svg" '
              f'width="{_fmt(width)}" height="{_fmt(height)}" '
              f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" '
              'font-family="sans-serif">')
    body = "\n".join(shapes)
    return f"{header}\n{body}\n</svg>\n"


def _round_ticks(hi: float) -> list[float]:
    if hi <= 0:
        return [0.0]
    step = max(1.0, round(hi / 4))
    ticks = [0.0]
    while ticks[-1] + step <= hi + 1e-9:
        ticks.append(ticks[-1] + step)
    return ticks


def learning_curves_svg(records: Sequence[MetricRecord]) -> str:
    """Metric vs. label budget: one panel row per emotion-set size."""
    stats = aggregate_records(records)
    if not stats:
        return _document(_PANEL_W, _PANEL_H,
                         ['<text x="20" y="40" font-size="12">'
                          'no successful records</text>'])
    sizes = sorted({key[1] for key in stats})
    methods = [m for m in _METHOD_COLORS if any(k[0] == m for k in stats)]
    max_q = max(key[2] for key in stats)

    shapes: list[str] = []
    for row, n in enumerate(sizes):
        for col, metric in enumerate(("quality", "top1", "top2")):
            panel = _Panel(col * (_PANEL_W + _GAP),
                           20 + row * (_PANEL_H + _GAP),
                           (0.0, float(max_q) or 1.0),
                           _METRIC_RANGES[metric],
                           f"{_METRIC_LABELS[metric]} (N={n})",
                           "labels", _METRIC_LABELS[metric])
            y_ticks = ([1, 2, 3, 4, 5, 6, 7] if metric == "quality"
                       else [0.0, 0.25, 0.5, 0.75, 1.0])
            panel.frame(_round_ticks(float(max_q)), y_ticks)
            panel.chance_line(chance_levels(n)[metric])
            for method in methods:
                points = sorted(
                    (key[2], entry[metric], entry[f"{metric}_se"])
                    for key, entry in stats.items()
                    if key[0] == method and key[1] == n)
                panel.series(points, _METHOD_COLORS[method])
            shapes.extend(panel.shapes)

    height = 20 + len(sizes) * (_PANEL_H + _GAP) + 20
    shapes.extend(_legend(methods, _MARGIN_L, height - 14))
    width = 3 * _PANEL_W + 2 * _GAP
    return _document(width, height, shapes)


def final_vs_n_svg(records: Sequence[MetricRecord]) -> str:
    """Final metric vs. emotion-set size, one panel per metric."""
    stats = aggregate_records(records)
    if not stats:
        return _document(_PANEL_W, _PANEL_H,
                         ['<text x="20" y="40" font-size="12">'
                          'no successful records</text>'])
    methods = [m for m in _METHOD_COLORS if any(k[0] == m for k in stats)]
    sizes = sorted({key[1] for key in stats})
    finals = {}
    for method in methods:
        for n in sizes:
            counts = [key[2] for key in stats
                      if key[0] == method and key[1] == n]
            if counts:
                finals[(method, n)] = stats[(method, n, max(counts))]

    shapes: list[str] = []
    for col, metric in enumerate(("quality", "top1", "top2")):
        panel = _Panel(col * (_PANEL_W + _GAP), 20,
                       (float(sizes[0]) - 0.5, float(sizes[-1]) + 0.5),
                       _METRIC_RANGES[metric],
                       f"Final {_METRIC_LABELS[metric]}",
                       "evaluation emotions", _METRIC_LABELS[metric])
        y_ticks = ([1, 2, 3, 4, 5, 6, 7] if metric == "quality"
                   else [0.0, 0.25, 0.5, 0.75, 1.0])
        panel.frame([float(n) for n in sizes], y_ticks)
        chance_pts = [(float(n), chance_levels(n)[metric], 0.0)
                      for n in sizes]
        path = " ".join(f"{_fmt(panel.px(x))},{_fmt(panel.py(y))}"
                        for x, y, _ in chance_pts)
        panel.shapes.append(f'<polyline points="{path}" fill="none" '
                            'stroke="#888" stroke-width="1" '
                            'stroke-dasharray="2 4"/>')
        for method in methods:
            points = [(float(n),) + (finals[(method, n)][metric],
                                     finals[(method, n)][f"{metric}_se"])
                      for n in sizes if (method, n) in finals]
            panel.series(points, _METHOD_COLORS[method])
        shapes.extend(panel.shapes)

    height = 20 + _PANEL_H + 40
    shapes.extend(_legend(methods, _MARGIN_L, height - 14))
    width = 3 * _PANEL_W + 2 * _GAP
    return _document(width, height, shapes)
