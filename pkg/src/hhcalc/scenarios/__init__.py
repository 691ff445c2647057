"""Regression scenarios: end-to-end computations with frozen expected values.

A scenario is a JSON file in this directory.  Each step names an operation from
:data:`OPS`, its JSON inputs, the exact expected JSON output, and a ``source``
saying where the expected value comes from:

* ``"published"``: the value printed in the literature for this example,
* ``"identity"``: forced by definitions,
* ``"oracle:<how>"``: recomputed by an independent method, which is named.

Inputs may reference earlier outputs as ``{"$ref": "step_id"}`` or, for a
nested field, ``{"$ref": "step_id.key.key"}``.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from hhcalc import equivariant, hkr, hodge, orbifold, sod
from hhcalc import jsonio as J
from hhcalc.errors import HHCalcError, SchemaError, UnknownScenario
from hhcalc.gradedvec import direct_sum, shift


def _graded_op(fn: Callable, *names: str) -> Callable[[dict], Any]:
    def op(inputs: dict) -> Any:
        args = [J.graded_from_json(_need(inputs, n), f"$.{n}") for n in names]
        return J.graded_to_json(fn(*args))

    return op


def _need(inputs: dict, key: str) -> Any:
    if key not in inputs:
        raise SchemaError("$", f"missing input {key!r}")
    return inputs[key]


def _int_input(inputs: dict, key: str) -> int:
    x = _need(inputs, key)
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"$.{key}", f"expected an integer, got {json.dumps(x)}")
    return x


def _split(inputs: dict) -> dict:
    bounds = inputs.get("coh_bounds")
    result = equivariant.solve_z2_split(
        J.graded_from_json(_need(inputs, "known_cg"), "$.known_cg"),
        J.graded_from_json(_need(inputs, "hh_hom_c"), "$.hh_hom_c"),
        _int_input(inputs, "n"),
        None if bounds is None else J.interval_from_json(bounds, "$.coh_bounds"),
    )
    return J.split_to_json(result)


def _interval_at(inputs: dict) -> dict:
    iv = J.interval_from_json(_need(inputs, "interval"), "$.interval")
    lo, hi = iv.at(_int_input(inputs, "degree"))
    return {"lo": lo, "hi": hi}


def _fractional(inputs: dict) -> dict:
    p, q = equivariant.fractional_cy_relation(J.serre_from_json(_need(inputs, "serre"), "$.serre"))
    return {"p": p, "q": q}


OPS: dict[str, Callable[[dict], Any]] = {
    "hodge_hypersurface": lambda i: J.diamond_to_json(
        hodge.hodge_hypersurface(J.spec_from_json(_need(i, "spec"), "$.spec"))
    ),
    "jacobian_poincare": lambda i: list(
        hodge.jacobian_poincare(J.spec_from_json(_need(i, "spec"), "$.spec"))
    ),
    "deformation_dim": lambda i: hodge.deformation_dim(J.spec_from_json(_need(i, "spec"), "$.spec")),
    "hh_homology": lambda i: J.graded_to_json(
        hkr.hh_homology(J.diamond_from_json(_need(i, "diamond"), "$.diamond"))
    ),
    "hh_cohomology_from_polyvectors": lambda i: J.graded_to_json(
        hkr.hh_cohomology_from_polyvectors(J.polyvectors_from_json(_need(i, "table"), "$.table"))
    ),
    "polyvectors_trivial_canonical": lambda i: J.polyvectors_to_json(
        hkr.polyvectors_trivial_canonical(J.diamond_from_json(_need(i, "diamond"), "$.diamond"))
    ),
    "cy_shift": lambda i: J.graded_to_json(
        hkr.cy_shift(J.graded_from_json(_need(i, "hh_hom"), "$.hh_hom"), _int_input(i, "n"))
    ),
    "shift": lambda i: J.graded_to_json(
        shift(J.graded_from_json(_need(i, "v"), "$.v"), _int_input(i, "m"))
    ),
    "direct_sum": _graded_op(direct_sum, "a", "b"),
    "sod_residual": lambda i: J.graded_to_json(sod.residual(J.sod_from_json(_need(i, "spec"), "$.spec"))),
    "solve_z2_split": _split,
    "invariant_serre": lambda i: J.serre_to_json(
        equivariant.invariant_serre(J.serre_from_json(_need(i, "serre"), "$.serre"))
    ),
    "fractional_cy_relation": _fractional,
    "orbifold_hh": lambda i: J.interval_to_json(
        orbifold.orbifold_hh(J.data_from_json(_need(i, "data"), "$.data"))
    ),
    "interval_at": _interval_at,
    "equal": lambda i: _need(i, "left") == _need(i, "right"),
}


@dataclass
class StepResult:
    id: str
    op: str
    source: str
    passed: bool
    expected: Any
    actual: Any = None
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "op": self.op,
            "source": self.source,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class ScenarioReport:
    name: str
    description: str = ""
    steps: list[StepResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def to_json(self) -> dict:
        return {
            "scenario": self.name,
            "passed": self.passed,
            "n_steps": len(self.steps),
            "n_failed": sum(not s.passed for s in self.steps),
            "steps": [s.to_json() for s in self.steps],
        }

    def to_text(self) -> str:
        lines = [f"scenario {self.name}"]
        for s in self.steps:
            mark = "PASS" if s.passed else "FAIL"
            lines.append(f"  [{mark}] {s.id:<26} {s.op:<32} ({s.source})")
            if not s.passed:
                if s.error:
                    lines.append(f"         error:    {s.error}")
                else:
                    lines.append(f"         expected: {json.dumps(s.expected)}")
                    lines.append(f"         actual:   {json.dumps(s.actual)}")
        n_bad = sum(not s.passed for s in self.steps)
        verdict = "all steps pass" if not n_bad else f"{n_bad} of {len(self.steps)} steps FAILED"
        lines.append(f"{self.name}: {verdict}")
        return "\n".join(lines)


def available() -> list[str]:
    root = resources.files(__name__)
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def load_scenario(name: str) -> dict:
    """Load a shipped scenario by name, or any scenario file by path."""
    path = Path(name)
    if path.suffix == ".json" and path.is_file():
        return J.load(path)
    resource = resources.files(__name__) / f"{name}.json"
    if not resource.is_file():
        raise UnknownScenario(f"unknown scenario {name!r}; available: {', '.join(available())}")
    return json.loads(resource.read_text(encoding="utf-8"))


class _RefError(Exception):
    pass


def _resolve(value: Any, outputs: dict[str, Any]) -> Any:
    if isinstance(value, dict):
        if set(value) == {"$ref"}:
            return _lookup(value["$ref"], outputs)
        return {k: _resolve(v, outputs) for k, v in value.items()}
    if isinstance(value, list):
        return [_resolve(v, outputs) for v in value]
    return value


def _lookup(ref: str, outputs: dict[str, Any]) -> Any:
    head, *rest = ref.split(".")
    if head not in outputs:
        raise _RefError(f"reference to unknown or failed step {head!r}")
    value = outputs[head]
    for key in rest:
        if not isinstance(value, dict) or key not in value:
            raise _RefError(f"reference {ref!r}: no field {key!r}")
        value = value[key]
    return value


def run_steps(name: str, steps: list[dict], description: str = "") -> ScenarioReport:
    report = ScenarioReport(name, description)
    outputs: dict[str, Any] = {}
    for k, step in enumerate(steps):
        sid = step.get("id", f"step{k}")
        op = step.get("op", "?")
        expected = step.get("expected")
        result = StepResult(sid, op, step.get("source", "unspecified"), False, expected)
        try:
            if op not in OPS:
                raise SchemaError(f"$.steps[{k}].op", f"unknown operation {op!r}")
            actual = OPS[op](_resolve(step.get("inputs", {}), outputs))
        except (HHCalcError, _RefError) as exc:
            result.error = f"{type(exc).__name__}: {exc}"
        else:
            result.actual = actual
            result.passed = actual == expected
            outputs[sid] = actual
        report.steps.append(result)
    return report


def run_scenario(name: str) -> ScenarioReport:
    data = load_scenario(name)
    if not isinstance(data, dict) or not isinstance(data.get("steps"), list):
        raise SchemaError("$.steps", "a scenario needs a list of steps")
    return run_steps(data.get("name", name), data["steps"], data.get("description", ""))
