"""Slice-by-slice evaluation of tangle words against a table of generator maps.

This is the strict monoidal functor on words: a slice is the tensor product
of its generators, and slices compose top to bottom.  ``apply_slices`` never
builds the full slice matrix; it pushes the map through the generators one
factor group at a time.  ``slice_map`` builds the full Kronecker product and
is kept as an independent reference.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .linmap import LinMap, Wires, compose, identity, tensor_all
from .tangle import TOKENS, TangleWord


def apply_slices(gens: Mapping[str, LinMap], rank: int, domain: str,
                 slices: Sequence[Sequence[str]], ring: str) -> LinMap:
    """Image of the word ``slices`` starting at boundary ``domain``.

    ``gens`` maps every non-identity token used to its matrix; each strand
    has rank ``rank``.
    """
    w = Wires.identity([rank] * len(domain), ring)
    for s in slices:
        offset = 0
        for tok in s:
            dom, cod = TOKENS[tok]
            if tok not in ("id+", "id-"):
                w = w.apply(gens[tok], offset, len(dom), [rank] * len(cod))
            offset += len(cod)
    return w.result()


def evaluate_word(gens: Mapping[str, LinMap], rank: int, t: TangleWord, ring: str) -> LinMap:
    return apply_slices(gens, rank, t.domain, t.slices, ring)


def slice_map(gens: Mapping[str, LinMap], rank: int, tokens: Sequence[str], ring: str) -> LinMap:
    parts = []
    for tok in tokens:
        if tok in ("id+", "id-"):
            parts.append(identity(rank, ring))
        else:
            parts.append(gens[tok])
    return tensor_all(LinMap.identity(1, ring), *parts)


def evaluate_dense(gens: Mapping[str, LinMap], rank: int, t: TangleWord, ring: str) -> LinMap:
    """Reference evaluation through full slice matrices."""
    out = identity(rank ** len(t.domain), ring)
    for s in t.slices:
        out = compose(slice_map(gens, rank, s, ring), out)
    return out
