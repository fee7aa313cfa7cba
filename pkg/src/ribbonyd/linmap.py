"""Exact linear maps between finite-rank free modules.

A :class:`LinMap` is a dense ``cod_rank x dom_rank`` matrix of scalars.  The
basis of a tensor product ``A (x) B`` is ordered left-major:
``a_i (x) b_j`` has index ``i * rank(B) + j``.  With this fixed ordering the
monoidal structure is strict, so ``(f (x) g) (x) h == f (x) (g (x) h)``
entrywise.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import ring as R


class RankError(ValueError):
    """Incompatible ranks for composition or application."""


def _full(shape, value) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(value)
    return arr


def _matmul(a: np.ndarray, b: np.ndarray, ring: str) -> np.ndarray:
    """Dense object-array product that only multiplies nonzero pairs.

    Structure maps are mostly zeros, so this beats ``a @ b`` by orders of
    magnitude on exact scalars.
    """
    rows, inner = a.shape
    cols = b.shape[1]
    out = _full((rows, cols), R.zero(ring))
    if rows == 0 or cols == 0 or inner == 0:
        return out
    a_cols = [[] for _ in range(inner)]
    for i, k in zip(*np.nonzero(a)):
        a_cols[k].append((i, a[i, k]))
    for k, j in zip(*np.nonzero(b)):
        col = a_cols[k]
        if not col:
            continue
        x = b[k, j]
        for i, y in col:
            out[i, j] = out[i, j] + y * x
    return out


def _kron(a: np.ndarray, b: np.ndarray, ring: str) -> np.ndarray:
    (ra, ca), (rb, cb) = a.shape, b.shape
    out = _full((ra * rb, ca * cb), R.zero(ring))
    bnz = [(i, j, b[i, j]) for i, j in zip(*np.nonzero(b))]
    for i, j in zip(*np.nonzero(a)):
        x = a[i, j]
        for k, l, y in bnz:
            out[i * rb + k, j * cb + l] = x * y
    return out


class LinMap:
    """Immutable exact matrix, ``entries[row, col]`` with rows indexing the codomain."""

    __slots__ = ("entries", "ring")

    def __init__(self, entries, ring: str):
        if ring not in R.RINGS:
            raise R.RingError(f"unknown ring {ring!r}")
        arr = np.array(entries, dtype=object)
        if arr.ndim != 2:
            raise ValueError(f"entries must be 2-dimensional, got shape {arr.shape}")
        conv = arr.copy()
        for idx, x in np.ndenumerate(arr):
            if isinstance(x, R.LaurentHalf) and ring == R.RATIONAL:
                raise R.RingError("Laurent entry in a rational map")
            conv[idx] = R.coerce(x, ring)
        conv.flags.writeable = False
        self.entries = conv
        self.ring = ring

    @classmethod
    def _wrap(cls, arr: np.ndarray, ring: str) -> "LinMap":
        # trusted internal constructor: entries already canonical
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj.entries = arr
        obj.ring = ring
        return obj

    # -- shape ----------------------------------------------------------
    @property
    def cod_rank(self) -> int:
        return self.entries.shape[0]

    @property
    def dom_rank(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, idx):
        return self.entries[idx]

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, cod: int, dom: int, ring: str) -> "LinMap":
        return cls._wrap(_full((cod, dom), R.zero(ring)), ring)

    @classmethod
    def identity(cls, n: int, ring: str) -> "LinMap":
        arr = _full((n, n), R.zero(ring))
        one = R.one(ring)
        for i in range(n):
            arr[i, i] = one
        return cls._wrap(arr, ring)

    @classmethod
    def from_sparse(cls, cod: int, dom: int, triples: Iterable, ring: str) -> "LinMap":
        """Build from ``(row, col, coeff)`` triples; repeated positions add up."""
        arr = _full((cod, dom), R.zero(ring))
        for row, col, c in triples:
            if not (0 <= row < cod and 0 <= col < dom):
                raise RankError(f"entry ({row}, {col}) outside a {cod}x{dom} map")
            arr[row, col] = arr[row, col] + R.coerce(c, ring)
        return cls._wrap(arr, ring)

    @classmethod
    def from_basis_map(cls, dom: int, cod: int, fn: Callable[[int], dict], ring: str) -> "LinMap":
        """``fn(j)`` gives the image of basis vector ``j`` as ``{row: coeff}``."""
        return cls.from_sparse(cod, dom, ((r, j, c) for j in range(dom) for r, c in fn(j).items()), ring)

    @classmethod
    def scalar(cls, c, ring: str) -> "LinMap":
        return cls._wrap(_full((1, 1), R.coerce(c, ring)), ring)

    # -- algebra -------------------------------------------------------------
    def _check_ring(self, other: "LinMap"):
        if self.ring != other.ring:
            raise R.RingError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_ring(other)
        if self.shape != other.shape:
            raise RankError(f"cannot add {self.shape} and {other.shape}")
        return LinMap._wrap(self.entries + other.entries, self.ring)

    def __neg__(self) -> "LinMap":
        return LinMap._wrap(-self.entries, self.ring)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scale(self, c) -> "LinMap":
        c = R.coerce(c, self.ring)
        return LinMap._wrap(self.entries * c, self.ring)

    def transpose(self) -> "LinMap":
        return LinMap._wrap(self.entries.T.copy(), self.ring)

    def map_entries(self, fn) -> "LinMap":
        out = np.empty(self.shape, dtype=object)
        for idx, x in np.ndenumerate(self.entries):
            out[idx] = fn(x)
        return LinMap(out, self.ring)

    # -- comparison ------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and all(a == b for a, b in zip(self.entries.flat, other.entries.flat)))

    __hash__ = None

    def first_difference(self, other: "LinMap") -> Optional[int]:
        """Index of the first domain basis vector whose images differ."""
        if self.shape != other.shape:
            raise RankError(f"cannot compare {self.shape} with {other.shape}")
        for j in range(self.dom_rank):
            if any(a != b for a, b in zip(self.entries[:, j], other.entries[:, j])):
                return j
        return None

    def is_identity(self) -> bool:
        return self.cod_rank == self.dom_rank and self == LinMap.identity(self.dom_rank, self.ring)

    def is_zero(self) -> bool:
        return all(not x for x in self.entries.flat)

    def is_permutation(self) -> bool:
        one = R.one(self.ring)
        for col in self.entries.T:
            nz = [x for x in col if x]
            if len(nz) != 1 or nz[0] != one:
                return False
        return True

    # -- display -------------------------------------------------------------
    def rows(self):
        return [[R.format_scalar(x) for x in row] for row in self.entries]

    def __str__(self):
        return "\n".join("[" + ", ".join(row) + "]" for row in self.rows())

    def __repr__(self):
        return f"LinMap({self.cod_rank}x{self.dom_rank}, {self.ring})"


# ---------------------------------------------------------------------------

def compose(g: LinMap, f: LinMap) -> LinMap:
    """``g o f``: apply ``f`` first."""
    g._check_ring(f)
    if f.cod_rank != g.dom_rank:
        raise RankError(f"cannot compose {g.shape} after {f.shape}")
    if f.cod_rank == 0:
        return LinMap.zero(g.cod_rank, f.dom_rank, g.ring)
    return LinMap._wrap(_matmul(g.entries, f.entries, g.ring), g.ring)


def compose_all(*maps: LinMap) -> LinMap:
    """``compose_all(h, g, f) == h o g o f``."""
    return reduce(compose, maps)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product, left factor outermost."""
    f._check_ring(g)
    cod, dom = f.cod_rank * g.cod_rank, f.dom_rank * g.dom_rank
    if cod == 0 or dom == 0:
        return LinMap.zero(cod, dom, f.ring)
    return LinMap._wrap(_kron(f.entries, g.entries, f.ring), f.ring)


def tensor_all(*maps: LinMap) -> LinMap:
    return reduce(tensor, maps)


def identity(n: int, ring: str) -> LinMap:
    return LinMap.identity(n, ring)


def permute(ranks: Sequence[int], perm: Sequence[int], ring: str) -> LinMap:
    """Wire permutation ``A_0 (x) ... (x) A_{k-1} -> A_{perm[0]} (x) ... (x) A_{perm[k-1]}``.

    Output slot ``p`` carries input factor ``perm[p]``.
    """
    ranks = list(ranks)
    if sorted(perm) != list(range(len(ranks))):
        raise ValueError(f"{perm} is not a permutation of {len(ranks)} factors")
    out_ranks = [ranks[p] for p in perm]
    dom = int(np.prod(ranks)) if ranks else 1
    cod = int(np.prod(out_ranks)) if ranks else 1
    triples = []
    for idx in itertools.product(*(range(r) for r in ranks)):
        out_idx = [idx[p] for p in perm]
        triples.append((_flat(out_idx, out_ranks), _flat(idx, ranks), 1))
    return LinMap.from_sparse(cod, dom, triples, ring)


def swap(m: int, n: int, ring: str = R.RATIONAL) -> LinMap:
    """The symmetry ``e_i (x) e_j -> e_j (x) e_i`` on ``A (x) B`` with ranks ``m, n``."""
    return permute([m, n], [1, 0], ring)


def scalar_of(f: LinMap):
    """The value of an endomorphism of the unit object."""
    if f.shape != (1, 1):
        raise RankError(f"not an endomorphism of the unit: shape {f.shape}")
    return f.entries[0, 0]


def _flat(idx, ranks) -> int:
    k = 0
    for i, r in zip(idx, ranks):
        k = k * r + i
    return k


def unflatten(k: int, ranks: Sequence[int]):
    """Inverse of the left-major flattening."""
    out = []
    for r in reversed(ranks):
        k, i = divmod(k, r)
        out.append(i)
    return tuple(reversed(out))


def flatten(idx, ranks) -> int:
    return _flat(idx, ranks)


class Wires:
    """A map whose codomain is kept split into tensor factors.

    Lets local maps and wire permutations act on chosen factors without
    materialising ``id (x) g (x) id`` or permutation matrices.  The state is
    a sparse ``{(row, col): coeff}`` dict, so the cost follows the number of
    nonzero entries.  ``Wires(f, ranks).apply(g, 1, 2, [r]).result()`` equals
    ``(id (x) g (x) id) o f`` for a 4-factor codomain.
    """

    __slots__ = ("data", "ranks", "ring", "dom")

    def __init__(self, f: LinMap, ranks: Sequence[int]):
        ranks = list(ranks)
        if _prod(ranks) != f.cod_rank:
            raise RankError(f"factor ranks {ranks} do not multiply to {f.cod_rank}")
        e = f.entries
        self.data = {(int(i), int(j)): e[i, j] for i, j in zip(*np.nonzero(e))}
        self.ranks = ranks
        self.ring = f.ring
        self.dom = f.dom_rank

    @classmethod
    def identity(cls, ranks: Sequence[int], ring: str) -> "Wires":
        ranks = list(ranks)
        n = _prod(ranks)
        one = R.one(ring)
        return cls._make({(i, i): one for i in range(n)}, ranks, ring, n)

    @classmethod
    def _make(cls, data, ranks, ring, dom) -> "Wires":
        new = cls.__new__(cls)
        new.data = data
        new.ranks = ranks
        new.ring = ring
        new.dom = dom
        return new

    def apply(self, g: LinMap, start: int, count: int, out_ranks: Sequence[int]) -> "Wires":
        """Apply ``g`` to factors ``start .. start+count-1``; they become ``out_ranks``."""
        if g.ring != self.ring:
            raise R.RingError(f"ring mismatch: {g.ring} vs {self.ring}")
        out_ranks = list(out_ranks)
        mid = _prod(self.ranks[start:start + count])
        post = _prod(self.ranks[start + count:])
        out_mid = _prod(out_ranks)
        if g.dom_rank != mid or g.cod_rank != out_mid:
            raise RankError(f"map {g.shape} does not fit factors {self.ranks[start:start + count]} -> {out_ranks}")
        cols = [[] for _ in range(mid)]
        ge = g.entries
        for o, m in zip(*np.nonzero(ge)):
            cols[m].append((int(o), ge[o, m]))
        block = mid * post
        new = {}
        for (r, c), x in self.data.items():
            pre, rest = divmod(r, block)
            m, p = divmod(rest, post)
            base = pre * out_mid
            for o, y in cols[m]:
                key = ((base + o) * post + p, c)
                if key in new:
                    new[key] = new[key] + y * x
                else:
                    new[key] = y * x
        new = {k: v for k, v in new.items() if v}
        ranks = self.ranks[:start] + out_ranks + self.ranks[start + count:]
        return Wires._make(new, ranks, self.ring, self.dom)

    def permute(self, perm: Sequence[int]) -> "Wires":
        """Output factor ``p`` is current factor ``perm[p]``."""
        k = len(self.ranks)
        if sorted(perm) != list(range(k)):
            raise ValueError(f"{perm} is not a permutation of {k} factors")
        ranks = [self.ranks[p] for p in perm]
        new = {}
        for (r, c), x in self.data.items():
            idx = unflatten(r, self.ranks)
            new[(_flat([idx[p] for p in perm], ranks), c)] = x
        return Wires._make(new, ranks, self.ring, self.dom)

    def result(self) -> LinMap:
        arr = _full((_prod(self.ranks), self.dom), R.zero(self.ring))
        for (r, c), x in self.data.items():
            arr[r, c] = x
        return LinMap._wrap(arr, self.ring)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
