"""JSON encoding of the library's value types.

Every ``*_from_json`` raises :class:`~hhcalc.errors.SchemaError` carrying a
JSON-path to the offending field, and ``x_from_json(x_to_json(v)) == v``.
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path
from typing import Any

from hhcalc.equivariant import EquivariantSummand, SerreDescriptor, Z2Split
from hhcalc.errors import HHCalcError, SchemaError
from hhcalc.gradedvec import GradedDims, GradedInterval
from hhcalc.hkr import PolyvectorTable
from hhcalc.hodge import HodgeDiamond, VarietySpec
from hhcalc.orbifold import FixedLocusDatum
from hhcalc.sod import COHOMOLOGY, HOMOLOGY, Component, SodSpec

_INT_KEY = re.compile(r"-?(0|[1-9][0-9]*)\Z")
_PAIR_KEY = re.compile(r"\s*(-?[0-9]+)\s*,\s*(-?[0-9]+)\s*\Z")


def load(source: str | Path) -> Any:
    """Read JSON from a file path, or from stdin when ``source`` is ``"-"``."""
    try:
        if str(source) == "-":
            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(str(source), f"cannot read: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(str(source), f"invalid JSON: {exc}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- primitive checks ---------------------------------------------------------


def _obj(x: Any, path: str) -> dict:
    if not isinstance(x, dict):
        raise SchemaError(path, f"expected an object, got {type(x).__name__}")
    return x


def _list(x: Any, path: str) -> list:
    if not isinstance(x, list):
        raise SchemaError(path, f"expected an array, got {type(x).__name__}")
    return x


def _int(x: Any, path: str, *, minimum: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, f"expected an integer, got {json.dumps(x)}")
    if minimum is not None and x < minimum:
        raise SchemaError(path, f"must be >= {minimum}, got {x}")
    return x


def _str(x: Any, path: str) -> str:
    if not isinstance(x, str):
        raise SchemaError(path, f"expected a string, got {json.dumps(x)}")
    return x


def _field(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(path, f"missing field {key!r}")
    return obj[key]


def _int_key(key: str, path: str) -> int:
    if not _INT_KEY.match(key):
        raise SchemaError(f"{path}[{key!r}]", "key must be a decimal integer degree")
    return int(key)


def _pair_key(key: str, path: str) -> tuple[int, int]:
    m = _PAIR_KEY.match(key)
    if not m:
        raise SchemaError(f"{path}[{key!r}]", "key must look like 'p,q'")
    return int(m.group(1)), int(m.group(2))


def _wrap(path: str, fn, *args):
    # Library validation errors inside a JSON document become schema errors.
    try:
        return fn(*args)
    except SchemaError:
        raise
    except HHCalcError as exc:
        raise SchemaError(path, str(exc)) from None


# -- graded dimensions ---------------------------------------------------------


def graded_to_json(v: GradedDims, kind: str | None = None) -> dict:
    out: dict[str, Any] = {"dims": {str(i): m for i, m in v.items()}}
    if kind is not None:
        out["kind"] = kind
    return out


def graded_from_json(x: Any, path: str = "$") -> GradedDims:
    obj = _obj(x, path)
    if "dims" in obj:
        path, obj = f"{path}.dims", _obj(obj["dims"], f"{path}.dims")
    dims = {}
    for key, val in obj.items():
        degree = _int_key(key, path)
        dims[degree] = _int(val, f"{path}[{key!r}]", minimum=0)
    return GradedDims(dims)


def kind_from_json(x: Any, path: str = "$", default: str = HOMOLOGY) -> str:
    kind = _obj(x, path).get("kind", default)
    if kind not in (HOMOLOGY, COHOMOLOGY):
        raise SchemaError(f"{path}.kind", f"must be {HOMOLOGY!r} or {COHOMOLOGY!r}, got {kind!r}")
    return kind


def interval_to_json(iv: GradedInterval) -> dict:
    return {"lo": graded_to_json(iv.lo), "hi": graded_to_json(iv.hi)}


def interval_from_json(x: Any, path: str = "$") -> GradedInterval:
    obj = _obj(x, path)
    lo = graded_from_json(_field(obj, "lo", path), f"{path}.lo")
    hi = graded_from_json(_field(obj, "hi", path), f"{path}.hi")
    return _wrap(path, GradedInterval, lo, hi)


# -- hodge ------------------------------------------------------------------------


def spec_to_json(spec: VarietySpec) -> dict:
    return {"weights": list(spec.weights), "degree": spec.degree}


def spec_from_json(x: Any, path: str = "$") -> VarietySpec:
    obj = _obj(x, path)
    raw = _list(_field(obj, "weights", path), f"{path}.weights")
    weights = tuple(_int(w, f"{path}.weights[{k}]", minimum=1) for k, w in enumerate(raw))
    degree = _int(_field(obj, "degree", path), f"{path}.degree", minimum=1)
    return _wrap(path, VarietySpec, weights, degree)


def diamond_to_json(d: HodgeDiamond) -> dict:
    return {"dim": d.dim, "h": [list(row) for row in d.h]}


def diamond_from_json(x: Any, path: str = "$") -> HodgeDiamond:
    obj = _obj(x, path)
    dim = _int(_field(obj, "dim", path), f"{path}.dim", minimum=0)
    rows = _list(_field(obj, "h", path), f"{path}.h")
    h = []
    for p, row in enumerate(rows):
        row = _list(row, f"{path}.h[{p}]")
        h.append(tuple(_int(v, f"{path}.h[{p}][{q}]", minimum=0) for q, v in enumerate(row)))
    return _wrap(path, HodgeDiamond, dim, tuple(h))


def polyvectors_to_json(t: PolyvectorTable) -> dict:
    return {"dim": t.dim, "table": {f"{p},{q}": x for (p, q), x in t.a.items()}}


def polyvectors_from_json(x: Any, path: str = "$") -> PolyvectorTable:
    obj = _obj(x, path)
    dim = _int(_field(obj, "dim", path), f"{path}.dim", minimum=0)
    table = _pair_table(_field(obj, "table", path), f"{path}.table")
    return _wrap(path, PolyvectorTable, dim, table)


def _pair_table(x: Any, path: str) -> dict[tuple[int, int], int]:
    obj = _obj(x, path)
    return {
        _pair_key(key, path): _int(val, f"{path}[{key!r}]", minimum=0) for key, val in obj.items()
    }


# -- semiorthogonal decompositions ------------------------------------------------


def sod_to_json(spec: SodSpec) -> dict:
    return {
        "total": graded_to_json(spec.total, spec.kind),
        "components": [
            {"label": c.label, **graded_to_json(c.dims, c.kind)} for c in spec.components
        ],
        "exceptional_count": spec.exceptional_count,
    }


def sod_from_json(x: Any, path: str = "$") -> SodSpec:
    obj = _obj(x, path)
    total_raw = _field(obj, "total", path)
    total = graded_from_json(total_raw, f"{path}.total")
    kind = kind_from_json(total_raw, f"{path}.total")
    components = []
    for k, raw in enumerate(_list(obj.get("components", []), f"{path}.components")):
        cpath = f"{path}.components[{k}]"
        cobj = _obj(raw, cpath)
        label = _str(_field(cobj, "label", cpath), f"{cpath}.label")
        components.append(Component(label, graded_from_json(cobj, cpath), kind_from_json(cobj, cpath)))
    count = _int(obj.get("exceptional_count", 0), f"{path}.exceptional_count", minimum=0)
    return _wrap(path, SodSpec, total, tuple(components), count, kind)


# -- equivariant ------------------------------------------------------------------


def serre_to_json(s: SerreDescriptor) -> dict:
    return {"shift_n": s.shift_n, "twist_order_q": s.twist_order_q}


def serre_from_json(x: Any, path: str = "$") -> SerreDescriptor:
    obj = _obj(x, path)
    n = _int(_field(obj, "shift_n", path), f"{path}.shift_n")
    q = _int(obj.get("twist_order_q", 1), f"{path}.twist_order_q", minimum=1)
    return SerreDescriptor(n, q)


def summand_to_json(s: EquivariantSummand) -> dict:
    return {"label": s.label, "total": graded_to_json(s.total), "invariant": interval_to_json(s.invariant)}


def summand_from_json(x: Any, path: str = "$") -> EquivariantSummand:
    obj = _obj(x, path)
    label = _str(_field(obj, "label", path), f"{path}.label")
    total = graded_from_json(_field(obj, "total", path), f"{path}.total")
    inv = obj.get("invariant")
    invariant = None if inv is None else interval_from_json(inv, f"{path}.invariant")
    return _wrap(path, EquivariantSummand, label, total, invariant)


def split_to_json(s: Z2Split) -> dict:
    return {"hh_coh": interval_to_json(s.hh_coh), "invariant_hom": interval_to_json(s.invariant_hom)}


def split_from_json(x: Any, path: str = "$") -> Z2Split:
    obj = _obj(x, path)
    return Z2Split(
        interval_from_json(_field(obj, "hh_coh", path), f"{path}.hh_coh"),
        interval_from_json(_field(obj, "invariant_hom", path), f"{path}.invariant_hom"),
    )


# -- orbifold ---------------------------------------------------------------------


def datum_to_json(d: FixedLocusDatum) -> dict:
    return {
        "label": d.label,
        "codim": d.codim,
        "table": {f"{p},{j}": x for (p, j), x in d.table.items()},
        "invariant": interval_to_json(d.invariant),
    }


def datum_from_json(x: Any, path: str = "$") -> FixedLocusDatum:
    obj = _obj(x, path)
    label = _str(_field(obj, "label", path), f"{path}.label")
    codim = _int(_field(obj, "codim", path), f"{path}.codim", minimum=0)
    table = _pair_table(obj.get("table", {}), f"{path}.table")
    for (p, j) in table:
        if p < 0 or j < 0:
            raise SchemaError(f"{path}.table['{p},{j}']", "indices must be nonnegative")
    inv = obj.get("invariant")
    invariant = None if inv is None else interval_from_json(inv, f"{path}.invariant")
    return _wrap(path, FixedLocusDatum, label, codim, table, invariant)


def data_from_json(x: Any, path: str = "$") -> list[FixedLocusDatum]:
    """A list of data, either bare or wrapped as ``{"data": [...]}``."""
    if isinstance(x, dict) and "data" in x:
        x, path = x["data"], f"{path}.data"
    return [datum_from_json(d, f"{path}[{k}]") for k, d in enumerate(_list(x, path))]


def data_to_json(data: list[FixedLocusDatum]) -> dict:
    return {"data": [datum_to_json(d) for d in data]}
