"""CSV and minimal SVG output for the two scatter figures."""

from __future__ import annotations

from math import isqrt

FIGURE1_HEADER = "a,b"
FIGURE2_HEADER = "a,thm1_threshold,thm2_threshold_sq_num,thm2_threshold_sq_den,stronger"

_W, _H, _PAD = 640, 480, 48


def csv_text(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def figure1_csv(rows) -> str:
    return csv_text(FIGURE1_HEADER, rows)


def figure2_csv(rows) -> str:
    return csv_text(FIGURE2_HEADER, rows)


def _scale(v: int, vmax: int, span: int) -> str:
    # fixed three-decimal output keeps the bytes stable
    return f"{v * span / vmax:.3f}" if vmax else "0.000"


def _svg(points, x_max: int, y_max: int, title: str, curve: str = "") -> str:
    x_max, y_max = max(x_max, 1), max(y_max, 1)
    iw, ih = _W - 2 * _PAD, _H - 2 * _PAD
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f"<title>{title}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
        f'<g transform="translate({_PAD},{_H - _PAD}) scale(1,-1)">',
        f'<line x1="0" y1="0" x2="{iw}" y2="0" stroke="black"/>',
        f'<line x1="0" y1="0" x2="0" y2="{ih}" stroke="black"/>',
    ]
    for x, y in points:
        out.append(f'<circle cx="{_scale(x, x_max, iw)}" cy="{_scale(y, y_max, ih)}" r="1.5" fill="red"/>')
    if curve:
        out.append(curve)
    out.append("</g>")
    out.append(f'<text x="{_W - _PAD}" y="{_H - _PAD / 3:.0f}" text-anchor="end" font-size="12">a (max {x_max})</text>')
    out.append(f'<text x="{_PAD / 4:.0f}" y="{_PAD - 8}" font-size="12">b (max {y_max})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def figure1_svg(rows, a_max: int) -> str:
    y_max = max((b for _, b in rows), default=1)
    return _svg(rows, a_max, max(y_max, a_max // 2), "Narayana squares, b <= a/2")


def figure2_svg(rows, a_max: int) -> str:
    points = [(a, t1) for a, t1, *_ in rows]
    y_max = max((t for _, t in points), default=1)
    iw, ih = _W - 2 * _PAD, _H - 2 * _PAD
    # reference curve sqrt(x)/1.95 = sqrt(400x/1521), sampled on integers
    samples = []
    for i in range(0, 101):
        x = a_max * i // 100
        samples.append(f"{_scale(x, a_max, iw)},{_scale(isqrt(400 * x * 10**6 // 1521), y_max * 1000, ih)}")
    curve = f'<polyline points="{" ".join(samples)}" fill="none" stroke="green"/>'
    return _svg(points, a_max, y_max, "a - p + 1 against sqrt(a)/1.95", curve)
