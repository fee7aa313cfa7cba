"""Normalized Jones values from the engine next to the Kauffman-bracket oracle.

    python3 scripts/jones_table.py --count 30 --max-strands 4 --max-length 8
"""

import argparse
import random
import time
from dataclasses import dataclass

from ribbonyd import ring as R
from ribbonyd.data import builtin
from ribbonyd.evaluation import framed_invariant
from ribbonyd.oracle import kauffman_bracket
from ribbonyd.tangle import BraidWord, braid_closure

NAMED = [("unknot", "", 1), ("right trefoil", "1 1 1", 2), ("left trefoil", "-1 -1 -1", 2),
         ("figure-eight", "1 -2 1 -2", 3), ("Hopf link", "1 1", 2), ("cinquefoil", "1 1 1 1 1", 2),
         ("3-braid 111 2 -1 2", "1 1 1 2 -1 2", 3)]


@dataclass
class JonesTableConfig:
    count: int = 20
    max_strands: int = 4
    max_length: int = 8
    seed: int = 0


def random_braid(rng, cfg: JonesTableConfig) -> BraidWord:
    n = rng.randint(2, cfg.max_strands)
    k = rng.randint(1, cfg.max_length)
    return BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(k)))


def run(cfg: JonesTableConfig):
    d = builtin("jones")
    rng = random.Random(cfg.seed)
    rows = [(name, BraidWord.parse(w, n)) for name, w, n in NAMED]
    rows += [(f"random #{i}", random_braid(rng, cfg)) for i in range(cfg.count)]
    mismatches = 0
    for name, b in rows:
        t0 = time.perf_counter()
        got = framed_invariant(braid_closure(b), d, normalize=True)
        dt = time.perf_counter() - t0
        ok = got == kauffman_bracket(b)
        mismatches += not ok
        print(f"{name:14s} {str(b) or '-':22s} {'ok ' if ok else 'BAD'} {dt * 1000:7.1f} ms  {R.format_scalar(got)}")
    print(f"{len(rows)} links, {mismatches} mismatches")
    return mismatches


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in vars(JonesTableConfig()).items():
        p.add_argument("--" + f.replace("_", "-"), type=int, default=v)
    cfg = JonesTableConfig(**vars(p.parse_args()))
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
