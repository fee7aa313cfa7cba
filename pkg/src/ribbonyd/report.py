"""Pass/fail reports produced by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .linmap import LinMap, unflatten


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        if self.witness is None:
            return f"{self.name}: FAIL"
        return f"{self.name}: FAIL at basis {self.witness}"


@dataclass
class CheckReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self):
        return self.ok

    def add(self, result: CheckResult):
        self.results.append(result)

    def extend(self, other: "CheckReport"):
        self.results.extend(other.results)

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self):
        return [r.name for r in self.results]

    def failures(self):
        return [r for r in self.results if not r.passed]

    def __str__(self):
        return "\n".join(r.line() for r in self.results)


def compare(name: str, lhs: LinMap, rhs: LinMap, labels: Optional[Sequence[Sequence[str]]] = None) -> CheckResult:
    """Exact matrix comparison; the witness names the first differing domain basis vector.

    ``labels`` lists, per tensor factor of the domain, the basis labels of
    that factor.  Without labels the witness is the flat index.
    """
    if lhs.shape != rhs.shape:
        return CheckResult(name, False, f"shape {lhs.shape} vs {rhs.shape}")
    j = lhs.first_difference(rhs)
    if j is None:
        return CheckResult(name, True)
    return CheckResult(name, False, basis_label(j, labels))


def basis_label(j: int, labels: Optional[Sequence[Sequence[str]]]) -> str:
    if labels is None:
        return f"({j})"
    if len(labels) == 0:
        return "()"
    idx = unflatten(j, [len(l) for l in labels])
    return "(" + ",".join(l[i] for l, i in zip(labels, idx)) + ")"
