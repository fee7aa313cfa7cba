"""Brute-force reference values: the Kauffman bracket and Wirtinger homomorphism counts.

Neither routine shares code with the tangle functor.  Both work directly on
braid words and their trace closures.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import ring as R
from .hopf import FiniteGroup
from .tangle import BraidWord

MAX_CROSSINGS = 12
MAX_ASSIGNMENTS = 10 ** 6


class OracleLimit(ValueError):
    pass


def _a_power(e: int, c=1) -> R.LaurentHalf:
    # the variable A is stored in the v slot: A^e has key 2e
    return R.v_power(2 * e, c)


def _loops(b: BraidWord, smoothing: Sequence[int]) -> int:
    """Number of loops in the closure after smoothing every crossing.

    Node ``(level, pos)`` is the strand point at position ``pos`` below the
    first ``level`` letters; level ``len(letters)`` is glued back to level 0.
    ``smoothing[k] = 0`` joins vertically, ``1`` joins the two strands
    above and the two below.
    """
    n, L = b.strands, len(b.letters)
    parent = list(range((L + 1) * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    node = lambda lvl, p: lvl * n + p
    for k, x in enumerate(b.letters):
        i = abs(x) - 1
        for p in range(n):
            if p not in (i, i + 1):
                union(node(k, p), node(k + 1, p))
        if smoothing[k] == 0:
            union(node(k, i), node(k + 1, i))
            union(node(k, i + 1), node(k + 1, i + 1))
        else:
            union(node(k, i), node(k, i + 1))
            union(node(k + 1, i), node(k + 1, i + 1))
    for p in range(n):
        union(node(L, p), node(0, p))
    return len({find(x) for x in range(len(parent))})


def kauffman_bracket_a(b: BraidWord) -> R.LaurentHalf:
    """``<closure(b)>`` in the variable ``A``, with every loop worth ``-A^2 - A^-2``.

    A positive letter contributes ``A`` for the vertical smoothing and ``A^-1``
    for the horizontal one; a negative letter the reverse.
    """
    L = len(b.letters)
    if L > MAX_CROSSINGS:
        raise OracleLimit(f"{L} crossings exceeds the limit of {MAX_CROSSINGS}")
    delta = _a_power(2, -1) + _a_power(-2, -1)
    total = R.ZERO_L
    for state in itertools.product((0, 1), repeat=L):
        e = 0
        for x, s in zip(b.letters, state):
            sign = 1 if x > 0 else -1
            e += sign if s == 0 else -sign
        total = total + _a_power(e) * delta ** _loops(b, state)
    return total


def a_to_v(p: R.LaurentHalf) -> R.LaurentHalf:
    """Substitute ``A^2 = -v``: ``A^e -> (-1)^(e/2) v^(e/2)``.  Needs all ``A`` exponents even."""
    out = R.ZERO_L
    for key, c in p.items():
        e = key // 2
        if key % 2 or e % 2:
            raise ValueError(f"odd power A^{Fraction(key, 2)} has no image in v")
        out = out + R.v_power(e, -c if (e // 2) % 2 else c)
    return out


def jones_from_bracket_a(b: BraidWord) -> R.LaurentHalf:
    """``(-A^3)^-w <closure(b)>`` in ``A``."""
    w = b.exponent_sum
    factor = _a_power(-3 * w, (-1) ** (w % 2))
    return kauffman_bracket_a(b) * factor


def kauffman_bracket(b: BraidWord) -> R.LaurentHalf:
    """Writhe-corrected bracket of the closure, converted to the engine variable ``v``.

    The unknot gives ``v + v^-1``.
    """
    return a_to_v(jones_from_bracket_a(b))


# ---------------------------------------------------------------------------

def count_meridian_homs(b: BraidWord, g: FiniteGroup, s: Sequence[int]) -> int:
    """Homomorphisms from the link group of the closure to ``g`` with every meridian in ``s``.

    Colours the top of the braid by elements of ``s`` and pushes them down:
    ``sigma_i`` sends ``(a, b)`` to ``(a b a^-1, a)`` and ``sigma_i^-1`` sends
    ``(a, b)`` to ``(b, b^-1 a b)``.  A colouring counts when the bottom
    equals the top.
    """
    s = sorted(set(s))
    if not g.is_conjugation_closed(s):
        raise ValueError(f"subset {s} is not closed under conjugation")
    n = b.strands
    if len(s) ** n > MAX_ASSIGNMENTS:
        raise OracleLimit(f"{len(s)}^{n} assignments exceeds the limit of {MAX_ASSIGNMENTS}")
    count = 0
    for top in itertools.product(s, repeat=n):
        cur = list(top)
        for x in b.letters:
            i = abs(x) - 1
            a, c = cur[i], cur[i + 1]
            if x > 0:
                cur[i], cur[i + 1] = g.conj(a, c), a
            else:
                cur[i], cur[i + 1] = c, g.conj(g.inverse[c], a)
        if tuple(cur) == top:
            count += 1
    return count
