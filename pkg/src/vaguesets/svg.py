"""Self-contained SVG rendering for step-function curves.

No plotting dependency: curves are piecewise constant, so a handful of
horizontal/vertical path segments per curve is all a figure needs.  Output
is deterministic for identical inputs.
"""

from __future__ import annotations

from typing import Sequence

from .regions import Universe

__all__ = ["render_steps"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_MARGIN_LEFT = 52.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 30.0
_MARGIN_BOTTOM = 40.0


def _num(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return s if s else "0"


def render_steps(
    curves: Sequence[tuple[str, Sequence[float], Sequence[float]]],
    universe: Universe,
    width: int = 640,
    height: int = 360,
    title: str = "",
    x_label: str = "omega",
    y_label: str = "membership",
) -> str:
    """Render named step curves (label, breakpoints, piece values) to SVG.

    The y axis is fixed to [0, 1]; the x axis spans the universe.
    """
    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM
    span = universe.hi - universe.lo

    def x(omega: float) -> float:
        return _MARGIN_LEFT + (omega - universe.lo) / span * plot_w

    def y(value: float) -> float:
        return _MARGIN_TOP + (1.0 - value) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_num(width / 2)}" y="18" font-size="13" '
            f'text-anchor="middle" font-family="sans-serif">{_escape(title)}</text>'
        )

    # Horizontal grid lines and y tick labels at quarter values.
    for k in range(5):
        value = k / 4
        yy = _num(y(value))
        parts.append(
            f'<line x1="{_num(x(universe.lo))}" y1="{yy}" x2="{_num(x(universe.hi))}" '
            f'y2="{yy}" stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_num(_MARGIN_LEFT - 6)}" y="{_num(y(value) + 4)}" font-size="11" '
            f'text-anchor="end" font-family="sans-serif">{_num(value)}</text>'
        )

    # X tick labels at quarter positions of the universe.
    for k in range(5):
        omega = universe.lo + span * k / 4
        parts.append(
            f'<text x="{_num(x(omega))}" y="{_num(height - _MARGIN_BOTTOM + 16)}" '
            f'font-size="11" text-anchor="middle" font-family="sans-serif">'
            f"{_num(omega)}</text>"
        )

    # Axes.
    parts.append(
        f'<line x1="{_num(x(universe.lo))}" y1="{_num(y(0))}" '
        f'x2="{_num(x(universe.hi))}" y2="{_num(y(0))}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_num(x(universe.lo))}" y1="{_num(y(0))}" '
        f'x2="{_num(x(universe.lo))}" y2="{_num(y(1))}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_num(x(universe.lo) + plot_w / 2)}" y="{_num(height - 6)}" '
        f'font-size="12" text-anchor="middle" font-family="sans-serif">{_escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="14" y="{_num(y(0.5))}" font-size="12" text-anchor="middle" '
        f'font-family="sans-serif" transform="rotate(-90 14 {_num(y(0.5))})">'
        f"{_escape(y_label)}</text>"
    )

    for index, (label, points, values) in enumerate(curves):
        color = _PALETTE[index % len(_PALETTE)]
        steps = [f"M {_num(x(points[0]))} {_num(y(values[0]))}"]
        for k in range(1, len(points)):
            steps.append(f"H {_num(x(points[k]))}")
            if k < len(values):
                steps.append(f"V {_num(y(values[k]))}")
        parts.append(
            f'<path d="{" ".join(steps)}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        legend_y = _MARGIN_TOP + 14 * index + 8
        legend_x = width - _MARGIN_RIGHT - 130
        parts.append(
            f'<line x1="{_num(legend_x)}" y1="{_num(legend_y)}" '
            f'x2="{_num(legend_x + 18)}" y2="{_num(legend_y)}" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_num(legend_x + 24)}" y="{_num(legend_y + 4)}" font-size="11" '
            f'font-family="sans-serif">{_escape(label)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
