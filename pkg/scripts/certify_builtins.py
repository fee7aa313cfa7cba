"""Certify every built-in datum plus its dual, tensor square and the unit, with timings.

    python3 scripts/certify_builtins.py
"""

import time
from dataclasses import dataclass

from ribbonyd.data import BUILTIN_NAMES, builtin
from ribbonyd.ribbon import certify_ribbon, dual_datum, scalar_twist, tensor_datum, TwistNotScalar, unit_datum
from ribbonyd import ring as R


@dataclass
class CertifyConfig:
    tensor_squares: bool = True


def run(cfg: CertifyConfig) -> int:
    jobs = [("unit", unit_datum())]
    for name in BUILTIN_NAMES:
        d = builtin(name)
        jobs.append((name, d))
        jobs.append((name + "*", dual_datum(d)))
        if cfg.tensor_squares and d.rank <= 3:
            jobs.append((f"{name} (x) {name}", tensor_datum(d)))
    bad = 0
    for label, d in jobs:
        t0 = time.perf_counter()
        rep = certify_ribbon(d)
        dt = time.perf_counter() - t0
        bad += not rep.ok
        try:
            twist = R.format_scalar(scalar_twist(d)) if rep.ok else "-"
        except TwistNotScalar:
            twist = "not a scalar"
        print(f"{label:42s} rank {d.rank:2d}  {'PASS' if rep.ok else 'FAIL'}  {len(rep.results):3d} checks"
              f"  {dt:6.2f} s  twist {twist}")
    return bad


if __name__ == "__main__":
    raise SystemExit(1 if run(CertifyConfig()) else 0)
