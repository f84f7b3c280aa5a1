"""Instance files and JSON reports.

An instance file starts with a header ``# d=<int> mode=<mode>`` followed by
one whitespace-separated row per point or function.  Numbers are read
exactly: ``3``, ``-2/7``, ``0.125`` and ``1e-3`` all become Fractions.

========== ============================== ===========================
mode       row                            object
========== ============================== ===========================
euclidean  x_1 .. x_d                     PointSet
weighted   x_1 .. x_d w                   WeightedSet
spherical  u_1 .. u_(d+1) [r]             SphericalSet on S^d
arrangement g_1 .. g_d c                  Arrangement
halfspaces g_1 .. g_d c  (<= 0 negative)  Arrangement
========== ============================== ===========================
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction

from hefty.applications.levels import Arrangement
from hefty.euclidean import PointSet
from hefty.numeric import GeometryError, scalar
from hefty.spherical import SphericalSet
from hefty.weighted import WeightedSet

__all__ = [
    "MODES", "Instance", "InputError", "parse_instance", "format_instance", "read_instance",
    "format_number", "to_json", "digest", "REPORT_SCHEMA",
]

MODES = ("euclidean", "weighted", "spherical", "arrangement", "halfspaces")
REPORT_SCHEMA = "hefty-report/1"

_HEADER = re.compile(r"^#\s*d\s*=\s*(\d+)\s+mode\s*=\s*(\w+)\s*$")


class InputError(GeometryError):
    pass


@dataclass
class Instance:
    mode: str
    d: int
    data: object
    label: str = ""


def format_number(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_number(tok: str, lineno: int) -> Fraction:
    try:
        return scalar(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"line {lineno}: not an exact number: {tok!r}") from None


def parse_instance(text: str) -> Instance:
    lines = text.splitlines()
    header = None
    rows = []
    label = ""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None:
                m = _HEADER.match(line)
                if not m:
                    raise InputError(f"line {lineno}: expected header '# d=<int> mode=<mode>'")
                header = (int(m.group(1)), m.group(2))
            elif line.startswith("# label:"):
                label = line[len("# label:"):].strip()
            continue
        if header is None:
            raise InputError("missing header line")
        rows.append((lineno, [_parse_number(t, lineno) for t in line.split()]))
    if header is None:
        raise InputError("missing header line")
    d, mode = header
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if d < 1:
        raise InputError("dimension must be >= 1")
    if not rows:
        raise InputError("no data rows")
    arity = {"euclidean": (d,), "weighted": (d + 1,), "spherical": (d + 1, d + 2),
             "arrangement": (d + 1,), "halfspaces": (d + 1,)}[mode]
    for lineno, r in rows:
        if len(r) not in arity:
            raise InputError(f"line {lineno}: expected {' or '.join(map(str, arity))} numbers, got {len(r)}")
    values = [r for _, r in rows]
    if mode == "euclidean":
        data = PointSet.from_rows(values, label)
    elif mode == "weighted":
        data = WeightedSet.from_rows(values, label)
    elif mode == "spherical":
        if len({len(r) for r in values}) != 1:
            raise InputError("spherical rows must all have radii or none")
        if len(values[0]) == d + 2:
            data = SphericalSet([r[:-1] for r in values], [r[-1] for r in values], label)
        else:
            data = SphericalSet(values, label=label)
    else:
        data = Arrangement.from_rows(values, label)
    return Instance(mode, d, data, label)


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _rows(inst: Instance):
    data = inst.data
    if inst.mode == "euclidean":
        return [list(p) for p in data.points]
    if inst.mode == "weighted":
        return [list(p.location) + [p.weight] for p in data.points]
    if inst.mode == "spherical":
        if data.radii is not None:
            return [list(p.homogeneous) + [r] for p, r in zip(data.points, data.radii)]
        return [list(p.homogeneous) for p in data.points]
    return [list(f.gradient) + [f.offset] for f in data.functions]


def format_instance(inst: Instance) -> str:
    out = [f"# d={inst.d} mode={inst.mode}"]
    label = inst.label or getattr(inst.data, "label", "")
    if label:
        out.append(f"# label: {label}")
    for row in _rows(inst):
        out.append(" ".join(format_number(x) for x in row))
    return "\n".join(out) + "\n"


def digest(inst: Instance) -> str:
    """sha256 of the header and canonical rows; labels do not count."""
    lines = [f"# d={inst.d} mode={inst.mode}"]
    lines += [" ".join(format_number(x) for x in row) for row in _rows(inst)]
    return hashlib.sha256(("\n".join(lines) + "\n").encode()).hexdigest()


def _default(obj):
    if isinstance(obj, Fraction):
        return format_number(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(report: dict) -> str:
    """Deterministic JSON: sorted keys, Fractions as exact strings."""
    return json.dumps(report, sort_keys=True, indent=2, default=_default) + "\n"
