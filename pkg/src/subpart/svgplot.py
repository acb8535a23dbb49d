"""SVG rendering of a shape report.

Data coordinates have y increasing upward; the SVG mapping is
sx = MARGIN + (x + W) * SCALE, sy = MARGIN + (TOP - y) * SCALE where W is
the half-width of the plotted window and TOP its height, so the viewBox is
(0, 0, 2*W*SCALE + 2*MARGIN, TOP*SCALE + 2*MARGIN + CAPTION_BAND).  The
document is built with ElementTree, which keeps it well-formed XML.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .maximizer import ShapeReport
from .ratefn import VershikCurve

SCALE = 120.0
MARGIN = 30.0
CAPTION_BAND = 60.0
CURVE_SAMPLES = 401


def write_shape_svg(report: ShapeReport, path: str) -> None:
    tree = ET.ElementTree(render_shape_svg(report))
    ET.indent(tree)
    tree.write(path, encoding="unicode", xml_declaration=True)


def render_shape_svg(report: ShapeReport) -> ET.Element:
    curve = VershikCurve()
    half_width = max(1.5, max(abs(x) for x, _ in report.profile_shape.kinks) * 1.15)
    top = max(
        curve.value(0.0),
        max(y for _, y in report.profile_shape.kinks),
        half_width,
    ) * 1.1

    def to_svg(x: float, y: float) -> tuple[float, float]:
        return MARGIN + (x + half_width) * SCALE, MARGIN + (top - y) * SCALE

    def polyline_points(pairs) -> str:
        return " ".join(f"{sx:.3f},{sy:.3f}" for sx, sy in (to_svg(x, y) for x, y in pairs))

    width = 2 * half_width * SCALE + 2 * MARGIN
    height = top * SCALE + 2 * MARGIN + CAPTION_BAND
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": f"0 0 {width:.0f} {height:.0f}",
            "width": f"{width:.0f}",
            "height": f"{height:.0f}",
        },
    )

    def bounded(shape):
        pts = [(-half_width, half_width)]
        pts += [k for k in shape.kinks if -half_width < k[0] < half_width]
        pts.append((half_width, half_width))
        return pts

    curve_pts = []
    for i in range(CURVE_SAMPLES):
        x = -half_width + 2 * half_width * i / (CURVE_SAMPLES - 1)
        curve_pts.append((x, curve.value(x)))

    series = [
        ("asymptote", "#999999", "4 4", [(-half_width, half_width), (0.0, 0.0), (half_width, half_width)]),
        ("profile", "#1f77b4", None, bounded(report.profile_shape)),
        ("envelope", "#2ca02c", None, bounded(report.envelope_shape)),
        ("vershik", "#d62728", None, curve_pts),
    ]
    labels = {
        "asymptote": "|x|",
        "profile": f"profile of {report.partition} (n={report.n})",
        "envelope": "convex envelope",
        "vershik": "limit curve",
    }
    for name, color, dash, pts in series:
        attrs = {
            "id": name,
            "points": polyline_points(pts),
            "fill": "none",
            "stroke": color,
            "stroke-width": "2",
        }
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(root, "polyline", attrs)

    legend = ET.SubElement(root, "g", {"id": "legend", "font-size": "13"})
    for row, (name, color, _, _) in enumerate(series):
        y = MARGIN + 18.0 * row
        ET.SubElement(
            legend,
            "line",
            {
                "x1": f"{MARGIN:.0f}",
                "x2": f"{MARGIN + 26:.0f}",
                "y1": f"{y:.1f}",
                "y2": f"{y:.1f}",
                "stroke": color,
                "stroke-width": "2",
            },
        )
        item = ET.SubElement(
            legend, "text", {"x": f"{MARGIN + 32:.0f}", "y": f"{y + 4:.1f}"}
        )
        item.text = labels[name]

    caption = ET.SubElement(
        root,
        "text",
        {
            "id": "caption",
            "x": f"{MARGIN:.0f}",
            "y": f"{height - MARGIN:.1f}",
            "font-size": "13",
        },
    )
    caption.text = format_caption(report)
    return root


def format_caption(report: ShapeReport) -> str:
    return (
        f"d(profile, limit curve) = {report.profile_distance:.6f}; "
        f"d(envelope, limit curve) = {report.envelope_distance:.6f}; "
        f"functional(envelope) = {report.envelope_functional:.6f}"
    )
