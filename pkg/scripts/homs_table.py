"""Freyd-Yetter counts: engine trace under the group data against the Wirtinger oracle.

    python3 scripts/homs_table.py --datum s3-all
"""

import argparse
from dataclasses import dataclass, field

from ribbonyd.data import GROUP_BUILTINS, GROUPS, builtin, group_class
from ribbonyd.evaluation import framed_invariant
from ribbonyd.oracle import count_meridian_homs
from ribbonyd.tangle import BraidWord, braid_closure

LINKS = {
    "unknot": ("", 1),
    "2-unlink": ("", 2),
    "trefoil": ("1 1 1", 2),
    "figure-eight": ("1 -2 1 -2", 3),
    "Hopf link": ("1 1", 2),
    "3-braid 11-21-2": ("1 1 -2 1 -2", 3),
    "cinquefoil": ("1 1 1 1 1", 2),
    "granny": ("1 1 1 2 2 2", 3),
}


@dataclass
class HomsTableConfig:
    data: list = field(default_factory=lambda: list(GROUP_BUILTINS))


def run(cfg: HomsTableConfig):
    bad = 0
    print(f"{'link':14s} " + " ".join(f"{n:>18s}" for n in cfg.data))
    for name, (w, n) in LINKS.items():
        b = BraidWord.parse(w, n)
        cells = []
        for dname in cfg.data:
            gname, cls = GROUP_BUILTINS[dname]
            g = GROUPS[gname]
            want = count_meridian_homs(b, g, group_class(g, cls))
            got = framed_invariant(braid_closure(b), builtin(dname))
            bad += got != want
            cells.append(f"{str(got) + ('' if got == want else ' != ' + str(want)):>18s}")
        print(f"{name:14s} " + " ".join(cells))
    return bad


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--datum", action="append", choices=sorted(GROUP_BUILTINS))
    args = p.parse_args()
    cfg = HomsTableConfig(args.datum) if args.datum else HomsTableConfig()
    raise SystemExit(1 if run(cfg) else 0)


if __name__ == "__main__":
    main()
