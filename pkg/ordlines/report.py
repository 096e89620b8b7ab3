#!/usr/bin/python
# -*- coding: utf8
"""
JSON and text rendering of results.

Exact values are the source of truth: every fraction is emitted as the
string ``a/b`` together with an ``approx_decimal`` string that is for reading
only and never parsed back.
"""
import dataclasses
import enum
import json
from decimal import Decimal, localcontext
from fractions import Fraction

from ordlines.field import EisensteinRational, format_scalar
from ordlines.geometry import CanonLine2, CanonLine3, CanonPlane, Point
from ordlines.incidence import PointSet

DECIMAL_DIGITS = 12


def approx_decimal(value):
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def jsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return {"exact": str(obj), "approx_decimal": approx_decimal(obj)}
    if isinstance(obj, EisensteinRational):
        return str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Point):
        return [format_scalar(c) for c in obj.coords]
    if isinstance(obj, PointSet):
        return {
            "label": obj.label,
            "kind": obj.kind.value,
            "field": obj.field,
            "n": obj.n,
            "points": [jsonable(p) for p in obj],
        }
    if isinstance(obj, CanonLine2):
        return {"line2": [jsonable(c) for c in obj.coeffs]}
    if isinstance(obj, CanonLine3):
        return {"plucker": list(obj.plucker)}
    if isinstance(obj, CanonPlane):
        return {"plane": list(obj.coeffs)}
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        if all(isinstance(k, (str, int)) for k in obj):
            return {str(k): jsonable(v) for k, v in obj.items()}
        return [{"key": jsonable(k), "value": jsonable(v)} for k, v in obj.items()]
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def dumps(result, params=None):
    return json.dumps({"params": jsonable(params or {}), "result": jsonable(result)}, indent=2)


def _text(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value)
        return f"{value} (~{approx_decimal(value)})"
    if isinstance(value, dict):
        return " ".join(f"{k}:{v}" for k, v in value.items())
    return str(value)


def render(obj, title=None, skip=()):
    lines = list()
    if title:
        lines.append(title)
    for f in dataclasses.fields(obj):
        if f.name in skip:
            continue
        value = getattr(obj, f.name)
        if isinstance(value, (list, tuple)) and value and dataclasses.is_dataclass(value[0]):
            lines.append(f"  {f.name}: {len(value)} entries")
            continue
        if isinstance(value, (list, tuple)):
            value = ", ".join(_text(v) for v in value) or "-"
        lines.append(f"  {f.name}: {_text(value)}")
    return "\n".join(lines)


def render_table(rows, columns):
    widths = [max(len(c), *(len(_text(getattr(r, c))) for r in rows)) if rows else len(c) for c in columns]
    out = ["  " + "  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    for r in rows:
        out.append("  " + "  ".join(_text(getattr(r, c)).ljust(w) for c, w in zip(columns, widths)))
    return "\n".join(out)
