"""JSON curve files and deterministic report serialization.

The curve file format, schema 1::

    {"schema": 1,
     "surface": "torus",
     "curves": [{"id": "c1",
                 "vertices": [[0.0, 0.25], [1.0, 0.25]],
                 "oriented": true},
                ...]}

Vertices are a plane lift whose last vertex equals the first plus the
curve's integer homology class.  Loading validates every curve (closure,
embeddedness); unknown per-curve keys such as provenance tags written by
the resolver survive a round trip unread.

All JSON emitted here is byte-deterministic: keys sorted, two-space indent,
no timestamps.
"""

from __future__ import annotations

import json

from .torus import GeometryError, TorusCurve

__all__ = [
    "load_curvefile",
    "curves_to_dict",
    "save_curvefile",
    "resolution_to_dict",
    "dumps_report",
]

SCHEMA = 1


def dumps_report(obj):
    """Deterministic JSON text for report objects."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_curvefile(source):
    """Parse a curve file (path or dict) into validated TorusCurve objects."""
    if isinstance(source, dict):
        data = source
    else:
        with open(source) as fh:
            data = json.load(fh)
    if data.get("schema") != SCHEMA:
        raise GeometryError("unsupported curve file schema %r"
                            % (data.get("schema"),))
    if data.get("surface") != "torus":
        raise GeometryError("unsupported surface %r" % (data.get("surface"),))
    entries = data.get("curves")
    if not isinstance(entries, list) or not entries:
        raise GeometryError("curve file lists no curves")
    curves = []
    for i, rec in enumerate(entries):
        if not isinstance(rec, dict) or "vertices" not in rec:
            raise GeometryError("curve entry %d lacks vertices" % i)
        curves.append(TorusCurve(
            rec["vertices"],
            ident=str(rec.get("id", "c%d" % i)),
            oriented=bool(rec.get("oriented", True))))
    return curves


def curves_to_dict(curves, provenance=None):
    """Curve file dict for a list of curves, optional per-curve provenance."""
    out = {"schema": SCHEMA, "surface": "torus", "curves": []}
    for i, c in enumerate(curves):
        rec = {
            "id": c.ident,
            "vertices": [[float(a), float(b)] for a, b in c.vertices],
            "oriented": bool(c.oriented),
        }
        if provenance is not None:
            rec["provenance"] = provenance[i]
        out["curves"].append(rec)
    return out


def save_curvefile(curves, path, provenance=None):
    data = curves_to_dict(curves, provenance=provenance)
    with open(path, "w") as fh:
        fh.write(dumps_report(data))
    return data


def resolution_to_dict(resolution):
    """Resolved diagram in the curve file schema plus resolution metadata."""
    data = curves_to_dict(resolution.curves, provenance=resolution.provenance)
    data["inputs"] = [
        {"id": c.ident, "class": list(c.homology_class())}
        for c in resolution.inputs
    ]
    data["crossings"] = [
        {"id": c.ident,
         "point": [float(c.point[0]), float(c.point[1])],
         "sign": int(c.sign),
         "angle": float(c.angle)}
        for c in resolution.crossings
    ]
    data["chamfer"] = float(resolution.chamfer)
    data["components"] = len(resolution.curves)
    data["classes"] = [list(c.homology_class()) for c in resolution.curves]
    data["graph"] = resolution.graph_instance()
    data["graph_choices"] = resolution.graph_choices()
    return data
