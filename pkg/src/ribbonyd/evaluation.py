"""The tangle functor: evaluate framed oriented tangles against a ribbon datum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from . import ring as R
from .functor import evaluate_word
from .linmap import LinMap, scalar_of
from .report import CheckReport
from .ribbon import RibbonDatum, TwistNotScalar, certify_ribbon, derive_mixed_crossings, generator_table, scalar_twist
from .tangle import TangleWord, writhe


class UncertifiedDatum(ValueError):
    def __init__(self, report: CheckReport):
        bad = "; ".join(r.line() for r in report.failures())
        super().__init__(f"datum fails certification: {bad}")
        self.report = report


# keyed by id(); the datum itself is kept in the value so the id stays valid
_reports: Dict[int, Tuple[RibbonDatum, CheckReport]] = {}
_tables: Dict[int, Tuple[RibbonDatum, Dict[str, LinMap]]] = {}


def certification(d: RibbonDatum) -> CheckReport:
    """``certify_ribbon(d)``, memoised per datum object."""
    hit = _reports.get(id(d))
    if hit is None or hit[0] is not d:
        hit = (d, certify_ribbon(d))
        _reports[id(d)] = hit
    return hit[1]


def _generators(d: RibbonDatum, check: bool = True) -> Dict[str, LinMap]:
    hit = _tables.get(id(d))
    if hit is None or hit[0] is not d:
        hit = (d, generator_table(d, derive_mixed_crossings(d, check)))
        _tables[id(d)] = hit
    return hit[1]


def evaluate(t: TangleWord, d: RibbonDatum, unsafe: bool = False) -> LinMap:
    """``F(t)``: ``+`` goes to ``X``, ``-`` to ``X*``, slices tensor and compose top to bottom.

    Refuses data that fail :func:`certify_ribbon` unless ``unsafe``; in
    unsafe mode the mixed crossings are still derived by the same rotations.
    """
    if not unsafe:
        rep = certification(d)
        if not rep.ok:
            raise UncertifiedDatum(rep)
    return evaluate_word(_generators(d, not unsafe), d.rank, t, d.ring)


def normalization_factor(d: RibbonDatum, w: int):
    """``twist^-w``; needs the twist to be a unit (a monomial for Laurent data)."""
    t = scalar_twist(d)
    if d.ring == R.LAURENT:
        if not t.is_unit_monomial():
            raise TwistNotScalar(f"twist {R.format_scalar(t)} is not a unit monomial")
    if t == 0:
        raise TwistNotScalar("twist is zero")
    return t ** (-w)


def framed_invariant(t: TangleWord, d: RibbonDatum, normalize: bool = False, unsafe: bool = False):
    """Scalar value of a closed tangle, optionally multiplied by ``twist^-writhe``."""
    if not t.is_closed:
        raise ValueError("framed_invariant needs a closed tangle")
    value = scalar_of(evaluate(t, d, unsafe))
    if normalize:
        value = value * normalization_factor(d, writhe(t))
    return value


@dataclass(frozen=True)
class Invariant:
    raw: object
    normalized: object
    writhe: int

    def lines(self):
        return [f"raw: {R.format_scalar(self.raw)}", f"normalized: {R.format_scalar(self.normalized)}",
                f"writhe: {self.writhe}"]


def invariant(t: TangleWord, d: RibbonDatum, unsafe: bool = False) -> Invariant:
    """Both the framed value and the writhe-normalised one."""
    raw = framed_invariant(t, d, False, unsafe)
    w = writhe(t)
    return Invariant(raw, raw * normalization_factor(d, w), w)
