"""JSON round trips for instances and reports.

Scalars are written as canonical strings (``"-3/4"`` over Q, residues over
F_p).  Every schema problem is reported with a JSON path such as
``$.modules.m0.action[1][2]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any

from .cosmos import CosmosError, Field, Mor, Obj, QQ, parse_fraction
from .laws import LawReport
from .modules import Bimodule, RightModule, check_bimodule, check_module
from .monoids import CommMonoid, MonoidMor, check_comm_monoid, check_monoid_mor

INSTANCE_SCHEMA = "ew-kernel/instance@1"
REPORT_SCHEMA = "ew-kernel/report@1"


class SchemaError(CosmosError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(eq=False)
class Instance:
    field: Field = QQ
    seed: int | None = None
    profile: str | None = None
    algebras: dict[str, CommMonoid] = dc_field(default_factory=dict)
    morphisms: dict[str, MonoidMor] = dc_field(default_factory=dict)
    modules: dict[str, RightModule] = dc_field(default_factory=dict)
    bimodules: dict[str, Bimodule] = dc_field(default_factory=dict)

    def algebra_name(self, b: CommMonoid) -> str:
        for name, a in self.algebras.items():
            if a is b or a.same_as(b):
                return name
        raise CosmosError(f"algebra {b!r} is not registered in the instance")

    def modules_over(self, b: CommMonoid) -> list[RightModule]:
        return [m for m in self.modules.values() if m.over.same_as(b)]

    def check(self) -> LawReport:
        rep = LawReport()
        for n, a in self.algebras.items():
            rep.extend(check_comm_monoid(a), f"algebra {n}/")
        for n, f in self.morphisms.items():
            rep.extend(check_monoid_mor(f), f"morphism {n}/")
        for n, m in self.modules.items():
            rep.extend(check_module(m), f"module {n}/")
        for n, X in self.bimodules.items():
            rep.extend(check_bimodule(X), f"bimodule {n}/")
        return rep


# ---------------------------------------------------------------------------
# writing


def _matrix_json(m: Mor) -> list[list[str]]:
    return [[m.field.format(v) for v in row] for row in m.rows()]


def instance_to_dict(inst: Instance) -> dict:
    name_of = inst.algebra_name
    return {
        "schema": INSTANCE_SCHEMA,
        "field": inst.field.tag,
        "p": inst.field.p,
        "seed": inst.seed,
        "profile": inst.profile,
        "algebras": {
            n: {"dim": a.dim, "unit": _matrix_json(a.unit), "product": _matrix_json(a.product)}
            for n, a in inst.algebras.items()
        },
        "morphisms": {
            n: {"src": name_of(f.src), "dst": name_of(f.dst), "matrix": _matrix_json(f.map)}
            for n, f in inst.morphisms.items()
        },
        "modules": {
            n: {"over": name_of(m.over), "dim": m.dim, "action": _matrix_json(m.action)}
            for n, m in inst.modules.items()
        },
        "bimodules": {
            n: {
                "left": name_of(X.left_over),
                "right": name_of(X.right_over),
                "dim": X.dim,
                "left_action": _matrix_json(X.left_action),
                "right_action": _matrix_json(X.right_action),
            }
            for n, X in inst.bimodules.items()
        },
    }


def dumps_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# reading


def _expect(obj, kind, path):
    if not isinstance(obj, kind):
        raise SchemaError(path, f"expected {kind.__name__}, got {type(obj).__name__}")
    return obj


def _get(d: dict, key: str, path: str):
    if key not in d:
        raise SchemaError(path, f"missing key {key!r}")
    return d[key]


def _scalar(value, fld: Field, path: str):
    if isinstance(value, bool):
        raise SchemaError(path, "booleans are not scalars")
    try:
        if isinstance(value, int):
            return fld.scalar(value)
        if isinstance(value, str):
            return fld.scalar(parse_fraction(value))
    except CosmosError as exc:
        raise SchemaError(path, str(exc)) from None
    except ValueError:
        raise SchemaError(path, f"not a rational number: {value!r}") from None
    raise SchemaError(path, f"expected an integer or a fraction string, got {value!r}")


def _matrix(value, rows: int, cols: int, fld: Field, path: str) -> Mor:
    _expect(value, list, path)
    if len(value) != rows:
        raise SchemaError(path, f"expected {rows} rows, got {len(value)}")
    flat = []
    for i, row in enumerate(value):
        _expect(row, list, f"{path}[{i}]")
        if len(row) != cols:
            raise SchemaError(f"{path}[{i}]", f"expected {cols} entries, got {len(row)}")
        flat += [_scalar(v, fld, f"{path}[{i}][{j}]") for j, v in enumerate(row)]
    return Mor(Obj(cols), Obj(rows), fld.matrix(rows, cols, flat), fld)


def _dim(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(path, f"expected a non-negative integer dimension, got {value!r}")
    return value


def _field_of(d: dict) -> Field:
    tag = d.get("field", "q")
    p = d.get("p")
    _expect(tag, str, "$.field")
    try:
        fld = Field.parse(tag)
    except (CosmosError, ValueError) as exc:
        raise SchemaError("$.field", str(exc)) from None
    if p is not None:
        if isinstance(p, bool) or not isinstance(p, int):
            raise SchemaError("$.p", f"expected a prime, got {p!r}")
        if "field" in d and fld.p != p:
            raise SchemaError("$.p", f"conflicts with field {tag!r}")
        try:
            fld = Field(p)
        except CosmosError as exc:
            raise SchemaError("$.p", str(exc)) from None
    return fld


def instance_from_dict(d: dict, check: bool = True) -> Instance:
    _expect(d, dict, "$")
    schema = d.get("schema", INSTANCE_SCHEMA)
    if schema != INSTANCE_SCHEMA:
        raise SchemaError("$.schema", f"unsupported schema {schema!r}")
    fld = _field_of(d)
    inst = Instance(fld, d.get("seed"), d.get("profile"))

    def algebra(name, path):
        if name not in inst.algebras:
            raise SchemaError(path, f"unknown algebra {name!r}")
        return inst.algebras[name]

    for n, a in _expect(d.get("algebras", {}), dict, "$.algebras").items():
        path = f"$.algebras.{n}"
        _expect(a, dict, path)
        dim = _dim(_get(a, "dim", path), f"{path}.dim")
        unit = _matrix(_get(a, "unit", path), dim, 1, fld, f"{path}.unit")
        prod = _matrix(_get(a, "product", path), dim, dim * dim, fld, f"{path}.product")
        inst.algebras[n] = CommMonoid(Obj(dim), unit, prod, n)
    for n, f in _expect(d.get("morphisms", {}), dict, "$.morphisms").items():
        path = f"$.morphisms.{n}"
        _expect(f, dict, path)
        src = algebra(_get(f, "src", path), f"{path}.src")
        dst = algebra(_get(f, "dst", path), f"{path}.dst")
        m = _matrix(_get(f, "matrix", path), dst.dim, src.dim, fld, f"{path}.matrix")
        inst.morphisms[n] = MonoidMor(src, dst, m, n)
    for n, x in _expect(d.get("modules", {}), dict, "$.modules").items():
        path = f"$.modules.{n}"
        _expect(x, dict, path)
        b = algebra(_get(x, "over", path), f"{path}.over")
        dim = _dim(_get(x, "dim", path), f"{path}.dim")
        act = _matrix(_get(x, "action", path), dim, dim * b.dim, fld, f"{path}.action")
        inst.modules[n] = RightModule(b, Obj(dim), act, n)
    for n, x in _expect(d.get("bimodules", {}), dict, "$.bimodules").items():
        path = f"$.bimodules.{n}"
        _expect(x, dict, path)
        b = algebra(_get(x, "left", path), f"{path}.left")
        b2 = algebra(_get(x, "right", path), f"{path}.right")
        dim = _dim(_get(x, "dim", path), f"{path}.dim")
        rho = _matrix(_get(x, "left_action", path), dim, b.dim * dim, fld, f"{path}.left_action")
        gam = _matrix(_get(x, "right_action", path), dim, dim * b2.dim, fld, f"{path}.right_action")
        inst.bimodules[n] = Bimodule(b, b2, Obj(dim), rho, gam, n)
    if check:
        groups = (
            ("algebras", inst.algebras, check_comm_monoid),
            ("morphisms", inst.morphisms, check_monoid_mor),
            ("modules", inst.modules, check_module),
            ("bimodules", inst.bimodules, check_bimodule),
        )
        for key, values, checker in groups:
            for n, v in values.items():
                rep = checker(v)
                if not rep.ok:
                    bad = rep.failures()[0]
                    raise SchemaError(f"$.{key}.{n}", f"law check failed: {bad.name}, witness {bad.witness}")
    return inst


def loads_instance(text: str, check: bool = True) -> Instance:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return instance_from_dict(d, check)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    suite: str
    seed: int | None
    field: str
    version: str
    checks: list[dict]
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def summary(self) -> dict:
        passed = sum(c["status"] == "pass" for c in self.checks)
        neg = sum(c.get("kind") == "EXPECTED-NEGATIVE" for c in self.checks)
        return {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed, "expected_negative": neg}

    def to_dict(self, timing: bool = True) -> dict:
        d: dict[str, Any] = {
            "schema": REPORT_SCHEMA,
            "version": self.version,
            "suite": self.suite,
            "seed": self.seed,
            "field": self.field,
            "ok": self.ok,
            "summary": self.summary(),
            "checks": self.checks,
        }
        if timing:
            d["timing"] = {"seconds": round(self.seconds, 3)}
        return d


def dumps_report(r: Report, timing: bool = True) -> str:
    return json.dumps(r.to_dict(timing), indent=2, ensure_ascii=False) + "\n"


def loads_report(text: str) -> Report:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    _expect(d, dict, "$")
    if d.get("schema") != REPORT_SCHEMA:
        raise SchemaError("$.schema", f"unsupported schema {d.get('schema')!r}")
    checks = _expect(_get(d, "checks", "$"), list, "$.checks")
    for i, c in enumerate(checks):
        _expect(c, dict, f"$.checks[{i}]")
        _get(c, "id", f"$.checks[{i}]")
        if _get(c, "status", f"$.checks[{i}]") not in ("pass", "fail"):
            raise SchemaError(f"$.checks[{i}].status", "expected 'pass' or 'fail'")
    seconds = d.get("timing", {}).get("seconds", 0.0)
    return Report(d["suite"], d.get("seed"), d.get("field", "q"), d.get("version", ""), checks, seconds)
