"""Pass/fail bookkeeping for exact law checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .cosmos import CosmosError, Mor, first_difference


@dataclass
class LawResult:
    name: str
    ok: bool
    witness: object = None
    expected_negative: bool = False

    def as_dict(self) -> dict:
        d = {"id": self.name, "status": "pass" if self.ok else "fail"}
        if self.expected_negative:
            d["kind"] = "EXPECTED-NEGATIVE"
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        return d


def _jsonable(w):
    if isinstance(w, (str, int, float, bool)) or w is None:
        return w
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_jsonable(v) for v in w]
    return str(w)


@dataclass
class LawReport:
    results: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.ok]

    def add(self, name: str, ok: bool, witness=None, expected_negative: bool = False) -> LawResult:
        r = LawResult(name, bool(ok), None if ok and not expected_negative else witness, expected_negative)
        self.results.append(r)
        return r

    def equal(self, name: str, lhs: Mor, rhs: Mor) -> LawResult:
        """Record whether two morphisms agree exactly, with the first differing entry."""
        return self.add(name, lhs == rhs, first_difference(lhs, rhs))

    def attempt(self, name: str, thunk: Callable[[], object]) -> LawResult:
        """Run ``thunk``; a structural error becomes a failed law with its message."""
        try:
            out = thunk()
        except CosmosError as exc:
            return self.add(name, False, str(exc))
        if isinstance(out, LawReport):
            self.extend(out, prefix=name + "/")
            return LawResult(name, out.ok, [r.name for r in out.failures()] or None)
        if isinstance(out, bool):
            return self.add(name, out)
        return self.add(name, True)

    def extend(self, other: "LawReport", prefix: str = "") -> None:
        for r in other.results:
            self.results.append(LawResult(prefix + r.name, r.ok, r.witness, r.expected_negative))

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __repr__(self):
        bad = ", ".join(r.name for r in self.failures())
        return f"LawReport({len(self.results)} checks, {'all pass' if self.ok else 'failed: ' + bad})"
