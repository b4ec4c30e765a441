"""Polygon file formats: JSON, CSV, Wavefront OBJ, Geomview VECT and PD code.

Floats are written with 17 significant digits, which reproduces every
double exactly on reading.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .arcpres import ArcPresentation, from_json as arcpres_from_json, to_json as arcpres_to_json
from .diagram import format_pd
from .projection import polygon_to_diagram

__all__ = [
    "FORMATS",
    "fmt_float",
    "polygon_to_json",
    "polygon_to_csv",
    "polygon_to_obj",
    "polygon_to_vect",
    "polygon_to_pd",
    "render",
    "load_polygon_json",
    "write_atomic",
]

FORMATS = ("json", "csv", "obj", "vect", "pd")


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _vertices(polygon):
    return np.asarray(getattr(polygon, "vertices", polygon), dtype=float)


def polygon_to_json(polygon) -> str:
    verts = _vertices(polygon)
    rows = ",\n    ".join("[" + ", ".join(fmt_float(c) for c in v) + "]" for v in verts)
    clearance = getattr(polygon, "clearance", None)
    source = getattr(polygon, "source", None)
    parts = [
        f'  "vertices": [\n    {rows}\n  ]',
        f'  "edge_length": {fmt_float(getattr(polygon, "edge_length", 1.0))}',
        '  "clearance": ' + (fmt_float(clearance) if clearance is not None and math.isfinite(clearance) else "null"),
        '  "source": ' + (json.dumps(json.loads(arcpres_to_json(source)), sort_keys=True)
                          if isinstance(source, ArcPresentation) else "null"),
    ]
    return "{\n" + ",\n".join(parts) + "\n}\n"


def polygon_to_csv(polygon) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")  # RFC 4180 line endings
    writer.writerow(["x", "y", "z"])
    for v in _vertices(polygon):
        writer.writerow([fmt_float(c) for c in v])
    return buf.getvalue()


def polygon_to_obj(polygon) -> str:
    verts = _vertices(polygon)
    lines = ["# closed equilateral polygon"]
    lines += ["v " + " ".join(fmt_float(c) for c in v) for v in verts]
    lines.append("l " + " ".join(str(k) for k in range(1, len(verts) + 1)) + " 1")
    return "\n".join(lines) + "\n"


def polygon_to_vect(polygon) -> str:
    verts = _vertices(polygon)
    m = len(verts)
    lines = ["VECT", f"1 {m} 1", f"-{m}", "1"]  # negative count closes the polyline
    lines += [" ".join(fmt_float(c) for c in v) for v in verts]
    lines.append("1 1 1 1")
    return "\n".join(lines) + "\n"


def polygon_to_pd(polygon, seed: int = 0) -> str:
    clearance = getattr(polygon, "clearance", None)
    d = polygon_to_diagram(_vertices(polygon), seed=seed, clearance=clearance)
    text = format_pd(d)
    return text + "\n" if text else ""


def render(polygon, fmt: str, seed: int = 0) -> str:
    if fmt == "json":
        return polygon_to_json(polygon)
    if fmt == "csv":
        return polygon_to_csv(polygon)
    if fmt == "obj":
        return polygon_to_obj(polygon)
    if fmt == "vect":
        return polygon_to_vect(polygon)
    if fmt == "pd":
        return polygon_to_pd(polygon, seed)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


class LoadedPolygon:
    """A polygon read back from JSON."""

    def __init__(self, vertices, edge_length, clearance, source):
        self.vertices = vertices
        self.edge_length = edge_length
        self.clearance = clearance
        self.source = source

    @property
    def n_edges(self) -> int:
        return len(self.vertices)


def load_polygon_json(path_or_text) -> LoadedPolygon:
    text = str(path_or_text)
    if not text.lstrip().startswith("{"):
        text = Path(path_or_text).read_text()
    raw = json.loads(text)
    verts = np.array(raw["vertices"], dtype=float)
    if verts.ndim != 2 or verts.shape[1] != 3 or len(verts) < 3:
        raise ValueError("polygon JSON needs at least three [x, y, z] vertices")
    source = raw.get("source")
    if source is not None:
        source = arcpres_from_json(json.dumps(source))
    return LoadedPolygon(verts, float(raw.get("edge_length", 1.0)), raw.get("clearance"), source)


def write_atomic(path, text: str):
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
