"""Minimal SVG rendering of torus curves in the unit fundamental domain.

Curves live on the unit torus; every integer translate of a curve's lift
that meets the unit square is drawn, clipped to the square, so strands that
wrap reappear on the opposite edge.  Output is deterministic: no ids,
timestamps, or randomness beyond the input geometry.
"""

from __future__ import annotations

import numpy as np

__all__ = ["render_svg", "render_resolution_svg"]

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#e377c2", "#17becf"]


def _cell_translates(V, pad=0.05):
    lo = V.min(axis=0)
    hi = V.max(axis=0)
    ks = []
    for kx in range(int(np.ceil(-hi[0] - pad)), int(np.floor(1.0 - lo[0] + pad)) + 1):
        for ky in range(int(np.ceil(-hi[1] - pad)), int(np.floor(1.0 - lo[1] + pad)) + 1):
            ks.append((kx, ky))
    return ks


def _fmt(v):
    return "%.4f" % v


def _polyline(V, shift, size, color, width, dash=None):
    pts = []
    for vx, vy in V + np.asarray(shift, dtype=float):
        pts.append("%s,%s" % (_fmt(vx * size), _fmt((1.0 - vy) * size)))
    dash_attr = ' stroke-dasharray="%s"' % dash if dash else ""
    return ('<polyline points="%s" fill="none" stroke="%s" '
            'stroke-width="%.2f" stroke-linejoin="round"%s/>'
            % (" ".join(pts), color, width, dash_attr))


def _curve_group(curve, size, color, width, dash=None):
    parts = []
    for k in _cell_translates(curve.vertices):
        parts.append(_polyline(curve.vertices, k, size, color, width, dash))
    return parts


def render_svg(curves, size=480, crossings=None, labels=True):
    """SVG document (string) showing curves in the fundamental domain."""
    body = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (size, size, size, size),
        '<defs><clipPath id="cell"><rect x="0" y="0" width="%d" height="%d"/>'
        '</clipPath></defs>' % (size, size),
        '<rect x="0" y="0" width="%d" height="%d" fill="white" '
        'stroke="#888" stroke-width="1"/>' % (size, size),
        '<g clip-path="url(#cell)">',
    ]
    for i, curve in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        body.extend(_curve_group(curve, size, color, 2.0))
    if crossings:
        for c in crossings:
            body.append('<circle cx="%s" cy="%s" r="3.5" fill="#111"/>'
                        % (_fmt(c.point[0] * size),
                           _fmt((1.0 - c.point[1]) * size)))
    body.append("</g>")
    if labels:
        for i, curve in enumerate(curves):
            color = _PALETTE[i % len(_PALETTE)]
            p, q = curve.homology_class()
            body.append('<text x="6" y="%d" font-family="monospace" '
                        'font-size="12" fill="%s">%s (%d,%d)</text>'
                        % (16 + 14 * i, color, curve.ident, p, q))
    body.append("</svg>")
    return "\n".join(body)


def render_resolution_svg(resolution, size=480):
    """Inputs (dashed, faint) and resolved curves (solid) in one picture."""
    body = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (size, size, size, size),
        '<defs><clipPath id="cell"><rect x="0" y="0" width="%d" height="%d"/>'
        '</clipPath></defs>' % (size, size),
        '<rect x="0" y="0" width="%d" height="%d" fill="white" '
        'stroke="#888" stroke-width="1"/>' % (size, size),
        '<g clip-path="url(#cell)">',
    ]
    for i, curve in enumerate(resolution.inputs):
        body.extend(_curve_group(curve, size, "#bbbbbb", 1.2, dash="4,3"))
    for i, curve in enumerate(resolution.curves):
        color = _PALETTE[i % len(_PALETTE)]
        body.extend(_curve_group(curve, size, color, 2.2))
    for c in resolution.crossings:
        body.append('<circle cx="%s" cy="%s" r="3" fill="none" '
                    'stroke="#111" stroke-width="1"/>'
                    % (_fmt(c.point[0] * size),
                       _fmt((1.0 - c.point[1]) * size)))
    body.append("</g>")
    for i, curve in enumerate(resolution.curves):
        color = _PALETTE[i % len(_PALETTE)]
        p, q = curve.homology_class()
        body.append('<text x="6" y="%d" font-family="monospace" '
                    'font-size="12" fill="%s">%s (%d,%d)</text>'
                    % (16 + 14 * i, color, curve.ident, p, q))
    body.append("</svg>")
    return "\n".join(body)
