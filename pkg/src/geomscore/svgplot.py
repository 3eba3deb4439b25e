"""Deterministic standalone SVG bar charts of mean RLT distributions.

Hand-rolled rather than delegated to a plotting library so that a fixed
input yields byte-identical output.
"""

from xml.sax.saxutils import escape

import numpy as np

from .errors import ParameterError

TRUNCATE_MASS = 1e-3

_PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860")

_MARGIN_LEFT = 56.0
_MARGIN_RIGHT = 16.0
_MARGIN_TOP = 18.0
_MARGIN_BOTTOM = 42.0
_PLOT_HEIGHT = 240.0
_GROUP_GAP = 10.0
_BAR_WIDTH = 18.0


def render_mrlt_chart(mrlts, labels) -> str:
    """Grouped bar chart of one or more distributions over hole counts.

    Bars are truncated after the last hole count carrying mass > 1e-3 in any
    input. Each bar carries a <title> child with its exact value.
    """
    if not mrlts:
        raise ParameterError("no distributions to plot")
    if len(labels) != len(mrlts):
        raise ParameterError(f"{len(labels)} labels for {len(mrlts)} distributions")
    series = [np.asarray(m, dtype=np.float64) for m in mrlts]
    width = series[0].size
    if any(s.ndim != 1 or s.size != width for s in series):
        raise ParameterError("distributions must be 1-D and of equal length")

    visible = np.nonzero(np.max(series, axis=0) > TRUNCATE_MASS)[0]
    last = int(visible[-1]) if visible.size else 0
    counts = range(last + 1)

    y_top = max(float(np.max(s)) for s in series)
    y_top = max(0.1, float(np.ceil(y_top * 10.0) / 10.0))

    n_series = len(series)
    group_w = n_series * _BAR_WIDTH + _GROUP_GAP
    plot_w = group_w * len(counts)
    total_w = _MARGIN_LEFT + plot_w + _MARGIN_RIGHT
    total_h = _MARGIN_TOP + _PLOT_HEIGHT + _MARGIN_BOTTOM
    legend_h = 18.0 * n_series if n_series > 1 else 0.0
    total_h += legend_h
    x0, y0 = _MARGIN_LEFT, _MARGIN_TOP

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(total_w)}" height="{_fmt(total_h)}" '
        f'viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}">',
        f'<rect x="0" y="0" width="{_fmt(total_w)}" height="{_fmt(total_h)}" fill="#ffffff"/>',
    ]
    # axes
    base = y0 + _PLOT_HEIGHT
    out.append(
        f'<line x1="{_fmt(x0)}" y1="{_fmt(base)}" x2="{_fmt(x0 + plot_w)}" '
        f'y2="{_fmt(base)}" stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" '
        f'y2="{_fmt(base)}" stroke="#333333" stroke-width="1"/>'
    )
    for frac in (0.0, 0.5, 1.0):
        yv = frac * y_top
        ypix = base - frac * _PLOT_HEIGHT
        out.append(
            f'<line x1="{_fmt(x0 - 4)}" y1="{_fmt(ypix)}" x2="{_fmt(x0)}" '
            f'y2="{_fmt(ypix)}" stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x0 - 8)}" y="{_fmt(ypix + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_fmt_val(yv)}</text>'
        )
    for i in counts:
        cx = x0 + i * group_w + (group_w - _GROUP_GAP) / 2.0
        out.append(
            f'<text x="{_fmt(cx)}" y="{_fmt(base + 16)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{i}</text>'
        )
    out.append(
        f'<text x="{_fmt(x0 + plot_w / 2.0)}" y="{_fmt(base + 32)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">number of holes</text>'
    )
    # bars
    for si, (s, label) in enumerate(zip(series, labels)):
        color = _PALETTE[si % len(_PALETTE)]
        for i in counts:
            v = float(s[i])
            h = v / y_top * _PLOT_HEIGHT
            bx = x0 + i * group_w + si * _BAR_WIDTH
            out.append(
                f'<rect class="bar" x="{_fmt(bx)}" y="{_fmt(base - h)}" '
                f'width="{_fmt(_BAR_WIDTH)}" height="{_fmt(h)}" fill="{color}">'
                f"<title>{escape(label)}: i={i}, mass={v!r}</title></rect>"
            )
    if n_series > 1:
        for si, label in enumerate(labels):
            color = _PALETTE[si % len(_PALETTE)]
            ly = _MARGIN_TOP + _PLOT_HEIGHT + _MARGIN_BOTTOM + si * 18.0
            out.append(
                f'<rect x="{_fmt(x0)}" y="{_fmt(ly - 10)}" width="12" height="12" fill="{color}"/>'
            )
            out.append(
                f'<text x="{_fmt(x0 + 18)}" y="{_fmt(ly)}" font-family="sans-serif" '
                f'font-size="12">{escape(label)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _fmt_val(x: float) -> str:
    return f"{x:.2f}"
