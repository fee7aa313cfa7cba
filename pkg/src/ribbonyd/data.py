"""Built-in ribbon data: the rank-2 Jones module and group-algebra modules.

The Jones braiding is computed from a finite shadow of the Borel algebra:
the three elements ``K^1/2``, ``K^-1/2`` and ``u = K^-1/2 E`` are all that
the coaction of the 2-dimensional module ``V`` ever produces, so the
Yetter-Drinfeld braiding and its inverse only need their action on ``V``
and the values of ``S^-1`` on them.  ``V`` has basis ``v0, v1`` with
``H v0 = v0``, ``H v1 = -v1``, ``E v1 = v0``, ``F v0 = v1``, and
``K = v^H``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from . import ring as R
from .hopf import FiniteGroup
from .linmap import LinMap, Wires, identity, tensor
from .report import CheckReport, compare
from .ribbon import PivotalData, RibbonDatum, RibbonYDData, canonical_pivotal, ribbon_datum_from_yd
from .yd import adjoint_yd

L = R.LAURENT
V_LABELS = ("v0", "v1")


def _v(halves: int, coeff=1) -> R.LaurentHalf:
    return R.v_power(halves, coeff)


@dataclass(frozen=True)
class JonesShadow:
    """The part of the Borel algebra seen by ``V``, with its structure on ``V``."""

    labels: Tuple[str, ...]
    action: LinMap        # A (x) V -> V
    coaction: LinMap      # V -> A (x) V
    antipode: LinMap      # S on A
    antipode_inv: LinMap  # S^-1 on A

    @property
    def rank(self) -> int:
        return len(self.labels)


def jones_shadow() -> JonesShadow:
    labels = ("K^1/2", "K^-1/2", "K^-1/2E")
    # action: index a*2 + j for a (x) v_j
    action = LinMap.from_sparse(2, 6, [
        (0, 0, _v(1)), (1, 1, _v(-1)),      # K^1/2 v0 = v^1/2 v0, K^1/2 v1 = v^-1/2 v1
        (0, 2, _v(-1)), (1, 3, _v(1)),      # K^-1/2
        (0, 5, _v(-1)),                     # K^-1/2 E v1 = v^-1/2 v0, kills v0
    ], L)
    # beta(v0) = K^1/2 (x) v0 + (v - v^-1) K^-1/2 E (x) v1 ; beta(v1) = K^-1/2 (x) v1
    coaction = LinMap.from_sparse(6, 2, [
        (0, 0, R.ONE_L), (5, 0, _v(2) - _v(-2)), (3, 1, R.ONE_L),
    ], L)
    # S(K^a) = K^-a ; S(K^-1/2 E) = -v^-1 K^-1/2 E
    antipode = LinMap.from_sparse(3, 3, [(1, 0, R.ONE_L), (0, 1, R.ONE_L), (2, 2, _v(-2, -1))], L)
    antipode_inv = LinMap.from_sparse(3, 3, [(1, 0, R.ONE_L), (0, 1, R.ONE_L), (2, 2, _v(2, -1))], L)
    return JonesShadow(labels, action, coaction, antipode, antipode_inv)


def jones_kappa() -> LinMap:
    """``kappa``, the action of ``K^-1`` on ``V``: ``diag(v^-1, v)``."""
    return LinMap.from_sparse(2, 2, [(0, 0, _v(-2)), (1, 1, _v(2))], L)


def jones_pivotal() -> PivotalData:
    """Canonical ``ev_X, coev_X``; ``ev_X*(x (x) f) = f(kappa x)``, ``coev_X*(1) = sum v^i (x) kappa^-1 v_i``."""
    k = jones_kappa().entries
    ev = LinMap.from_sparse(1, 4, [(0, 0, R.ONE_L), (0, 3, R.ONE_L)], L)
    ev_s = LinMap.from_sparse(1, 4, [(0, 0, k[0, 0]), (0, 3, k[1, 1])], L)
    coev_s = LinMap.from_sparse(4, 1, [(0, 0, k[1, 1]), (3, 0, k[0, 0])], L)
    return PivotalData(2, ev, ev.transpose(), ev_s, coev_s)


def jones_braiding(sh: JonesShadow = None) -> Tuple[LinMap, LinMap]:
    """``psi(x (x) y) = x(-1).y (x) x(0)`` and ``psi^-1(y (x) x) = x(0) (x) S^-1(x(-1)).y``."""
    sh = sh or jones_shadow()
    a = sh.rank
    psi = (Wires(tensor(sh.coaction, identity(2, L)), [a, 2, 2]).permute([0, 2, 1])
           .apply(sh.action, 0, 2, [2]).result())
    psi_inv = (Wires(tensor(identity(2, L), sh.coaction), [2, a, 2]).permute([2, 1, 0])
               .apply(sh.antipode_inv, 1, 1, [a]).apply(sh.action, 1, 2, [2]).result())
    return psi, psi_inv


def builtin_jones_datum() -> RibbonDatum:
    psi, psi_inv = jones_braiding()
    return RibbonDatum(2, psi, psi_inv, jones_pivotal(), "jones", V_LABELS)


def check_jones_shadow(gamma_map: LinMap = None) -> CheckReport:
    """The two equivariance conditions for ``gamma`` on the Jones module, through the shadow.

    ``S^2`` is diagonal on the shadow basis (``S^2(K^a E^m) = v^-2m K^a E^m``).
    """
    sh = jones_shadow()
    g = jones_kappa() if gamma_map is None else gamma_map
    s2 = sh.antipode @ sh.antipode
    rep = CheckReport()
    rep.add(compare("e19 gamma alpha = alpha (S^2 (x) gamma)", g @ sh.action, sh.action @ tensor(s2, g),
                    [sh.labels, V_LABELS]))
    rep.add(compare("e20 beta gamma = (S^2 (x) gamma) beta", sh.coaction @ g, tensor(s2, g) @ sh.coaction,
                    [V_LABELS]))
    return rep


# ---------------------------------------------------------------------------

def builtin_group_yd(group: FiniteGroup, subset) -> RibbonYDData:
    x = adjoint_yd(group, subset)
    return RibbonYDData(x, canonical_pivotal(x.rank, x.ring))


def builtin_group_datum(group: FiniteGroup, subset, name: str = "group") -> RibbonDatum:
    """``k[S]`` with ``d(f (x) x) = f(x)``, ``b(1) = sum g (x) g*`` for both dualities."""
    return ribbon_datum_from_yd(builtin_group_yd(group, subset), name)


GROUPS = {
    "s3": FiniteGroup.symmetric(3),
    "z2": FiniteGroup.cyclic(2),
    "z3": FiniteGroup.cyclic(3),
    "trivial": FiniteGroup.trivial(),
}


def group_class(group: FiniteGroup, cls: str):
    """Named subsets: ``transpositions`` (order-2 elements), ``all``, ``nontrivial``, ``identity``."""
    if cls == "transpositions":
        return group.elements_of_order(2)
    if cls == "all":
        return list(range(group.order))
    if cls == "nontrivial":
        return [g for g in range(group.order) if g != group.identity]
    if cls == "identity":
        return [group.identity]
    raise KeyError(f"unknown class {cls!r}")


GROUP_BUILTINS = {
    "s3-transpositions": ("s3", "transpositions"),
    "s3-all": ("s3", "all"),
    "z3-nontrivial": ("z3", "nontrivial"),
}

BUILTIN_NAMES = ("jones",) + tuple(GROUP_BUILTINS)

_cache: Dict[str, RibbonDatum] = {}


def builtin_yd(name: str) -> RibbonYDData:
    gname, cls = GROUP_BUILTINS[name]
    g = GROUPS[gname]
    return builtin_group_yd(g, group_class(g, cls))


def builtin(name: str) -> RibbonDatum:
    if name not in BUILTIN_NAMES:
        raise KeyError(f"unknown built-in datum {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    if name not in _cache:
        if name == "jones":
            _cache[name] = builtin_jones_datum()
        else:
            _cache[name] = ribbon_datum_from_yd(builtin_yd(name), name)
    return _cache[name]
