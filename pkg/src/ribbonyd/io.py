"""JSON file formats for Hopf algebras, Yetter-Drinfeld modules, pivotal and ribbon data.

Coefficients are strings in the scalar grammar of :mod:`ribbonyd.ring`;
omitted entries are zero.

* Hopf: ``mul [[i,j,k,c]]`` means ``e_i e_j`` contains ``c e_k``;
  ``unit [[k,c]]``; ``comul [[i,j,k,c]]`` means ``Delta(e_i)`` contains
  ``c e_j (x) e_k``; ``counit [[i,c]]``; ``antipode`` and ``antipode_inv``
  ``[[i,j,c]]`` mean ``S(e_i)`` contains ``c e_j``.
* YD: ``hopf`` is a path relative to the YD file (or an inline object);
  ``action [[i,j,k,c]]`` means ``e_i . x_j`` contains ``c x_k``;
  ``coaction [[j,i,k,c]]`` means ``beta(x_j)`` contains ``c e_i (x) x_k``.
* Pivotal: the four maps ``ev_x, coev_x, ev_xstar, coev_xstar`` as
  ``[[row, col, c]]`` triples (row indexes the codomain).  A ribbon file adds
  ``braid`` and ``braid_inv`` in the same form, or instead names a YD file
  under ``yd`` whose braiding is used.
"""

from __future__ import annotations

import json
import os
from typing import Any, Dict, Optional, Union

from . import ring as R
from .hopf import HopfData
from .linmap import LinMap
from .ribbon import PivotalData, RibbonDatum, RibbonYDData, canonical_pivotal, ribbon_datum_from_yd
from .yd import YDData


class DataFormatError(ValueError):
    pass


Source = Union[str, os.PathLike, Dict[str, Any]]


def _load(src: Source):
    if isinstance(src, dict):
        return src, None
    try:
        with open(src) as fh:
            return json.load(fh), os.path.dirname(os.path.abspath(src))
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"{src}: invalid JSON ({exc})") from exc


def _ring(obj) -> str:
    ring = obj.get("ring", R.RATIONAL)
    if ring not in R.RINGS:
        raise DataFormatError(f"unknown ring {ring!r}")
    return ring


def _coeff(c, ring):
    if isinstance(c, bool) or not isinstance(c, (str, int)):
        raise DataFormatError(f"coefficient {c!r} must be a string or integer")
    return R.ring_parse(str(c), ring)


def _int(x, bound, what):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < bound:
        raise DataFormatError(f"{what} index {x!r} out of range 0..{bound - 1}")
    return x


def _entries(obj, key, arity, required=True):
    if key not in obj:
        if required:
            raise DataFormatError(f"missing field {key!r}")
        return []
    rows = obj[key]
    if not isinstance(rows, list):
        raise DataFormatError(f"{key!r} must be a list")
    for r in rows:
        if not isinstance(r, list) or len(r) != arity:
            raise DataFormatError(f"{key!r} entries must have {arity} components, got {r!r}")
    return rows


def _rank(obj, key="rank") -> int:
    n = obj.get(key)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DataFormatError(f"{key!r} must be a nonnegative integer")
    return n


def hopf_from_json(src: Source) -> HopfData:
    obj, _ = _load(src)
    ring, n = _ring(obj), _rank(obj)
    labels = obj.get("basis") or [f"e{i}" for i in range(n)]
    if len(labels) != n:
        raise DataFormatError("basis has the wrong length")
    c = lambda x: _coeff(x, ring)
    ix = lambda x: _int(x, n, "basis")
    mul = LinMap.from_sparse(n, n * n, ((ix(k), ix(i) * n + ix(j), c(v)) for i, j, k, v in _entries(obj, "mul", 4)), ring)
    unit = LinMap.from_sparse(n, 1, ((ix(k), 0, c(v)) for k, v in _entries(obj, "unit", 2)), ring)
    comul = LinMap.from_sparse(n * n, n, ((ix(j) * n + ix(k), ix(i), c(v)) for i, j, k, v in _entries(obj, "comul", 4)), ring)
    counit = LinMap.from_sparse(1, n, ((0, ix(i), c(v)) for i, v in _entries(obj, "counit", 2)), ring)
    s = LinMap.from_sparse(n, n, ((ix(j), ix(i), c(v)) for i, j, v in _entries(obj, "antipode", 3)), ring)
    si = LinMap.from_sparse(n, n, ((ix(j), ix(i), c(v)) for i, j, v in _entries(obj, "antipode_inv", 3)), ring)
    return HopfData(n, tuple(str(l) for l in labels), mul, unit, comul, counit, s, si)


def yd_from_json(src: Source, hopf: Optional[HopfData] = None) -> YDData:
    obj, base = _load(src)
    if hopf is None:
        ref = obj.get("hopf")
        if ref is None:
            raise DataFormatError("missing field 'hopf'")
        if isinstance(ref, str) and base is not None and not os.path.isabs(ref):
            ref = os.path.join(base, ref)
        hopf = hopf_from_json(ref)
    ring, n, m = hopf.ring, hopf.rank, _rank(obj)
    c = lambda x: _coeff(x, ring)
    ih = lambda x: _int(x, n, "Hopf basis")
    ix = lambda x: _int(x, m, "module basis")
    action = LinMap.from_sparse(m, n * m, ((ix(k), ih(i) * m + ix(j), c(v)) for i, j, k, v in _entries(obj, "action", 4)), ring)
    coaction = LinMap.from_sparse(n * m, m, ((ih(i) * m + ix(k), ix(j), c(v)) for j, i, k, v in _entries(obj, "coaction", 4)), ring)
    labels = obj.get("basis")
    return YDData(hopf, m, action, coaction, tuple(map(str, labels)) if labels else None)


def _sparse_map(obj, key, cod, dom, ring) -> LinMap:
    return LinMap.from_sparse(cod, dom, ((_int(i, cod, key + " row"), _int(j, dom, key + " column"), _coeff(v, ring))
                                         for i, j, v in _entries(obj, key, 3)), ring)


def pivotal_from_json(src: Source) -> PivotalData:
    obj, _ = _load(src)
    ring, m = _ring(obj), _rank(obj)
    if obj.get("canonical"):
        return canonical_pivotal(m, ring)
    sq = m * m
    return PivotalData(m, _sparse_map(obj, "ev_x", 1, sq, ring), _sparse_map(obj, "coev_x", sq, 1, ring),
                       _sparse_map(obj, "ev_xstar", 1, sq, ring), _sparse_map(obj, "coev_xstar", sq, 1, ring))


def ribbon_yd_from_json(src: Source) -> Optional[RibbonYDData]:
    """The YD-backed form of a ribbon file, or ``None`` when it gives the braiding directly."""
    obj, base = _load(src)
    ref = obj.get("yd")
    if ref is None:
        return None
    if isinstance(ref, str) and base is not None and not os.path.isabs(ref):
        ref = os.path.join(base, ref)
    x = yd_from_json(ref)
    if obj.get("ring", x.ring) != x.ring:
        raise DataFormatError("ring of the pivotal data differs from the YD module")
    p = pivotal_from_json(dict(obj, ring=x.ring, rank=x.rank))
    return RibbonYDData(x, p)


def datum_from_json(src: Source) -> RibbonDatum:
    obj, _ = _load(src)
    name = obj.get("name", os.path.basename(str(src)) if not isinstance(src, dict) else "datum")
    r = ribbon_yd_from_json(src)
    if r is not None:
        return ribbon_datum_from_yd(r, name)
    p = pivotal_from_json(obj)
    sq = p.rank * p.rank
    return RibbonDatum(p.rank, _sparse_map(obj, "braid", sq, sq, p.ring), _sparse_map(obj, "braid_inv", sq, sq, p.ring),
                       p, name)


# -- writers ------------------------------------------------------------------

def _triples(f: LinMap):
    return [[int(i), int(j), R.format_scalar(f.entries[i, j])] for i, j in zip(*f.entries.nonzero())]


def hopf_to_json(h: HopfData) -> dict:
    n = h.rank
    out = {"ring": h.ring, "rank": n, "basis": list(h.basis_labels)}
    out["mul"] = [[c // n, c % n, r, v] for r, c, v in _triples(h.mul)]
    out["unit"] = [[r, v] for r, _, v in _triples(h.unit)]
    out["comul"] = [[c, r // n, r % n, v] for r, c, v in _triples(h.comul)]
    out["counit"] = [[c, v] for _, c, v in _triples(h.counit)]
    out["antipode"] = [[c, r, v] for r, c, v in _triples(h.antipode)]
    out["antipode_inv"] = [[c, r, v] for r, c, v in _triples(h.antipode_inv)]
    return out


def yd_to_json(x: YDData, hopf_ref: Union[str, dict]) -> dict:
    m = x.rank
    return {
        "hopf": hopf_ref, "rank": m, "basis": list(x.basis_labels),
        "action": [[c // m, c % m, r, v] for r, c, v in _triples(x.action)],
        "coaction": [[c, r // m, r % m, v] for r, c, v in _triples(x.coaction)],
    }


def datum_to_json(d: RibbonDatum) -> dict:
    p = d.pivotal
    return {
        "name": d.name, "ring": d.ring, "rank": d.rank,
        "ev_x": _triples(p.ev_x), "coev_x": _triples(p.coev_x),
        "ev_xstar": _triples(p.ev_xstar), "coev_xstar": _triples(p.coev_xstar),
        "braid": _triples(d.braid), "braid_inv": _triples(d.braid_inv),
    }
