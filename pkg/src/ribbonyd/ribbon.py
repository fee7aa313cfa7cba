"""Pivotal and ribbon structure on a single object ``X`` of the base category.

Notation used throughout: ``ev`` is ``ev_X: X* (x) X -> I``, ``coev`` is
``coev_X: I -> X (x) X*``, and the starred pair ``ev_star: X (x) X* -> I``,
``coev_star: I -> X* (x) X`` is the second duality of a pivotal object.
``X`` and ``X*`` are free of the same rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from . import ring as R
from .functor import apply_slices
from .linmap import LinMap, Wires, identity, swap, tensor
from .report import CheckReport, CheckResult, compare
from .tangle import ORIENTATIONS, TOKENS
from .yd import YDData, check_yd, yd_braiding


class PreconditionError(ValueError):
    pass


class TwistNotScalar(ValueError):
    pass


@dataclass(frozen=True)
class PivotalData:
    rank: int
    ev_x: LinMap
    coev_x: LinMap
    ev_xstar: LinMap
    coev_xstar: LinMap

    def __post_init__(self):
        m2 = self.rank * self.rank
        for name, shape in (("ev_x", (1, m2)), ("coev_x", (m2, 1)), ("ev_xstar", (1, m2)), ("coev_xstar", (m2, 1))):
            got = getattr(self, name).shape
            if got != shape:
                raise ValueError(f"{name} has shape {got}, expected {shape}")
        rings = {getattr(self, n).ring for n in ("ev_x", "coev_x", "ev_xstar", "coev_xstar")}
        if len(rings) != 1:
            raise R.RingError(f"mixed rings in pivotal data: {sorted(rings)}")

    @property
    def ring(self) -> str:
        return self.ev_x.ring

    @property
    def rank_x(self) -> int:
        return self.rank

    @property
    def rank_xstar(self) -> int:
        return self.rank

    def dual(self) -> "PivotalData":
        """Pivotal data of ``X*``: the two dualities trade places."""
        return PivotalData(self.rank, self.ev_xstar, self.coev_xstar, self.ev_x, self.coev_x)

    def tensor(self, other: "PivotalData") -> "PivotalData":
        """Pivotal data of ``X (x) Y`` with dual ``Y* (x) X*``."""
        m, n = self.rank, other.rank
        ring = self.ring
        # ev_{X(x)Y} = ev_Y (Y* (x) ev_X (x) Y)
        ev = (Wires.identity([n, m, m, n], ring)
              .apply(self.ev_x, 1, 2, []).apply(other.ev_x, 0, 2, []).result())
        # coev_{X(x)Y} = (X (x) coev_Y (x) X*) coev_X
        coev = Wires(self.coev_x, [m, m]).apply(other.coev_x, 1, 0, [n, n]).result()
        # ev_{Y*(x)X*} = ev_{X*} (X (x) ev_{Y*} (x) X*)
        ev_s = (Wires.identity([m, n, n, m], ring)
                .apply(other.ev_xstar, 1, 2, []).apply(self.ev_xstar, 0, 2, []).result())
        # coev_{Y*(x)X*} = (Y* (x) coev_{X*} (x) Y) coev_{Y*}
        coev_s = Wires(other.coev_xstar, [n, n]).apply(self.coev_xstar, 1, 0, [m, m]).result()
        return PivotalData(m * n, ev, coev, ev_s, coev_s)


def canonical_pivotal(rank: int, ring: str = R.RATIONAL) -> PivotalData:
    """``ev(f (x) x) = f(x)``, ``coev(1) = sum x_i (x) x^i``, and the same for the starred pair."""
    ev = LinMap.from_sparse(1, rank * rank, ((0, i * rank + i, 1) for i in range(rank)), ring)
    coev = ev.transpose()
    return PivotalData(rank, ev, coev, ev, coev)


def check_snakes(p: PivotalData) -> CheckReport:
    m, ring = p.rank, p.ring
    I = identity(m, ring)
    rep = CheckReport()
    rep.add(compare("snake X (coev_X, ev_X)", tensor(I, p.ev_x) @ tensor(p.coev_x, I), I))
    rep.add(compare("snake X* (coev_X, ev_X)", tensor(p.ev_x, I) @ tensor(I, p.coev_x), I))
    rep.add(compare("snake X* (coev_X*, ev_X*)", tensor(I, p.ev_xstar) @ tensor(p.coev_xstar, I), I))
    rep.add(compare("snake X (coev_X*, ev_X*)", tensor(p.ev_xstar, I) @ tensor(I, p.coev_xstar), I))
    return rep


def _dual_via(f: LinMap, ev_y: LinMap, coev_x: LinMap, m: int, n: int) -> LinMap:
    # f: X -> Y of ranks m, n; returns (ev_Y (x) X*)(Y* (x) f (x) X*)(Y* (x) coev_X): Y* -> X*
    w = Wires.identity([n], f.ring).apply(coev_x, 1, 0, [m, m])
    return w.apply(f, 1, 1, [n]).apply(ev_y, 0, 2, []).result()


def dual_morphism(f: LinMap, px: PivotalData, py: PivotalData) -> LinMap:
    """Left dual ``f*: Y* -> X*`` of ``f: X -> Y``."""
    if f.shape != (py.rank, px.rank):
        raise ValueError(f"map has shape {f.shape}, expected {(py.rank, px.rank)}")
    return _dual_via(f, py.ev_x, px.coev_x, px.rank, py.rank)


def double_dual(f: LinMap, px: PivotalData, py: PivotalData) -> LinMap:
    """``f** = (f*)*``, the second dual taken with the starred dualities."""
    g = dual_morphism(f, px, py)
    return _dual_via(g, px.ev_xstar, py.coev_xstar, py.rank, px.rank)


def gamma(p: PivotalData) -> LinMap:
    """Right curl built with the plain swap: ``(X (x) ev_X*)(P (x) X*)(X (x) coev_X)``."""
    m, ring = p.rank, p.ring
    return (Wires.identity([m], ring).apply(p.coev_x, 1, 0, [m, m])
            .apply(swap(m, m, ring), 0, 2, [m, m]).apply(p.ev_xstar, 1, 2, []).result())


def gamma_inv(p: PivotalData) -> LinMap:
    """Left curl with the plain swap: ``(ev_X (x) X)(X* (x) P)(coev_X* (x) X)``."""
    m, ring = p.rank, p.ring
    return (Wires.identity([m], ring).apply(p.coev_xstar, 0, 0, [m, m])
            .apply(swap(m, m, ring), 1, 2, [m, m]).apply(p.ev_x, 0, 2, []).result())


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RibbonDatum:
    """Braiding on ``X (x) X`` with its inverse, plus pivotal data; enough to evaluate tangles."""

    rank: int
    braid: LinMap
    braid_inv: LinMap
    pivotal: PivotalData
    name: str = "datum"
    labels: Optional[tuple] = None

    def __post_init__(self):
        m2 = self.rank * self.rank
        for nm in ("braid", "braid_inv"):
            if getattr(self, nm).shape != (m2, m2):
                raise ValueError(f"{nm} has shape {getattr(self, nm).shape}, expected {(m2, m2)}")
        if self.pivotal.rank != self.rank:
            raise ValueError("pivotal data rank differs from datum rank")
        if self.braid.ring != self.pivotal.ring or self.braid_inv.ring != self.pivotal.ring:
            raise R.RingError("braiding and pivotal data over different rings")

    @property
    def ring(self) -> str:
        return self.pivotal.ring

    @property
    def rank_x(self) -> int:
        return self.rank


def _curl(d: RibbonDatum, cross: LinMap, right: bool) -> LinMap:
    m, p = d.rank, d.pivotal
    if right:
        return Wires.identity([m], d.ring).apply(p.coev_x, 1, 0, [m, m]).apply(cross, 0, 2, [m, m]).apply(p.ev_xstar, 1, 2, []).result()
    return Wires.identity([m], d.ring).apply(p.coev_xstar, 0, 0, [m, m]).apply(cross, 1, 2, [m, m]).apply(p.ev_x, 0, 2, []).result()


def right_curl(d: RibbonDatum) -> LinMap:
    """``c^R = (X (x) ev_X*)(psi (x) X*)(X (x) coev_X)``."""
    return _curl(d, d.braid, True)


def left_curl(d: RibbonDatum) -> LinMap:
    """``c^L = (ev_X (x) X)(X* (x) psi)(coev_X* (x) X)``."""
    return _curl(d, d.braid, False)


def right_curl_negative(d: RibbonDatum) -> LinMap:
    return _curl(d, d.braid_inv, True)


def left_curl_negative(d: RibbonDatum) -> LinMap:
    return _curl(d, d.braid_inv, False)


CrossingTable = Dict[str, LinMap]


def _rotate(d: RibbonDatum, inner: LinMap, leg: str) -> LinMap:
    m, p = d.rank, d.pivotal
    if leg == "left":
        # (ev_X (x) B (x) X*)(X* (x) inner (x) X*)(X* (x) B (x) coev_X)
        return (Wires.identity([m, m], d.ring).apply(p.coev_x, 2, 0, [m, m]).apply(inner, 1, 2, [m, m])
                .apply(p.ev_x, 0, 2, []).result())
    # (X* (x) A (x) ev_X*)(X* (x) inner (x) X*)(coev_X* (x) A (x) X*)
    return (Wires.identity([m, m], d.ring).apply(p.coev_xstar, 0, 0, [m, m]).apply(inner, 1, 2, [m, m])
            .apply(p.ev_xstar, 2, 2, []).result())


def derive_mixed_crossings(d: RibbonDatum, check: bool = True) -> CrossingTable:
    """All eight oriented crossings, keyed by token (``x+-``, ``xi--``, ...).

    ``x-+`` rotates the left leg of the inverse braiding, ``x+-`` the right
    leg, ``x--`` rotates the left leg of ``xi-+``; the ``xi`` tokens are the
    mirror composites.  Token ``xAB`` is ``psi_{A,B}``; ``xiAB`` is the
    inverse of ``psi_{B,A}``, so both have domain ``AB``.
    """
    if check:
        core = CheckReport()
        core.extend(check_snakes(d.pivotal))
        core.extend(_invertibility(d))
        if not core.ok:
            raise PreconditionError("snakes or braid invertibility fail:\n" + str(core))
    t: CrossingTable = {"x++": d.braid, "xi++": d.braid_inv}
    t["x-+"] = _rotate(d, d.braid_inv, "left")
    t["xi-+"] = _rotate(d, d.braid, "left")
    t["x+-"] = _rotate(d, d.braid_inv, "right")
    t["xi+-"] = _rotate(d, d.braid, "right")
    t["x--"] = _rotate(d, t["xi-+"], "left")
    t["xi--"] = _rotate(d, t["x-+"], "left")
    return t


def generator_table(d: RibbonDatum, crossings: Optional[CrossingTable] = None) -> Dict[str, LinMap]:
    """Matrix for every DSL token except the identities."""
    p = d.pivotal
    gens = dict(crossings if crossings is not None else derive_mixed_crossings(d))
    gens.update({"cap_l": p.ev_x, "cap_r": p.ev_xstar, "cup_l": p.coev_x, "cup_r": p.coev_xstar})
    return gens


def _invertibility(d: RibbonDatum) -> CheckReport:
    I2 = identity(d.rank * d.rank, d.ring)
    rep = CheckReport()
    rep.add(compare("braid inverse (psi psi^-1 = id)", d.braid @ d.braid_inv, I2))
    rep.add(compare("braid inverse (psi^-1 psi = id)", d.braid_inv @ d.braid, I2))
    return rep


def _word(gens, m, ring, domain, *slices):
    return apply_slices(gens, m, domain, slices, ring)


def _sliding_checks(d: RibbonDatum, gens) -> CheckReport:
    """A strand passes over or under each cap and cup, from either side."""
    m, ring = d.rank, d.ring
    rep = CheckReport()
    bad = []
    for s in "+-":
        ids = "id" + s
        for sign in ("x", "xi"):
            for cap in ("cap_l", "cap_r"):
                a, b = TOKENS[cap][0]
                lhs = _word(gens, m, ring, s + a + b, [sign + s + a, "id" + b], ["id" + a, sign + s + b], [cap, ids])
                if lhs != _word(gens, m, ring, s + a + b, [ids, cap]):
                    bad.append(f"{sign}: {s} over/under {cap} from the left")
                lhs = _word(gens, m, ring, a + b + s, ["id" + a, sign + b + s], [sign + a + s, "id" + b], [ids, cap])
                if lhs != _word(gens, m, ring, a + b + s, [cap, ids]):
                    bad.append(f"{sign}: {s} over/under {cap} from the right")
            for cup in ("cup_l", "cup_r"):
                a, b = TOKENS[cup][1]
                lhs = _word(gens, m, ring, s, [ids, cup], [sign + s + a, "id" + b], ["id" + a, sign + s + b])
                if lhs != _word(gens, m, ring, s, [cup, ids]):
                    bad.append(f"{sign}: {s} through {cup} to the right")
                lhs = _word(gens, m, ring, s, [cup, ids], ["id" + a, sign + b + s], [sign + a + s, "id" + b])
                if lhs != _word(gens, m, ring, s, [ids, cup]):
                    bad.append(f"{sign}: {s} through {cup} to the left")
    rep.add(CheckResult("sliding naturality (32 cap/cup moves)", not bad, "; ".join(bad) or None))
    return rep


def certify_ribbon(d: RibbonDatum) -> CheckReport:
    """Everything the tangle functor relies on, each as an exact matrix identity."""
    m, ring = d.rank, d.ring
    I, I3 = identity(m, ring), identity(m ** 3, ring)
    rep = CheckReport()
    rep.extend(check_snakes(d.pivotal))
    rep.extend(_invertibility(d))
    psi = d.braid
    rep.add(compare("Yang-Baxter", tensor(psi, I) @ tensor(I, psi) @ tensor(psi, I),
                    tensor(I, psi) @ tensor(psi, I) @ tensor(I, psi)))
    cr, cl = right_curl(d), left_curl(d)
    rep.add(compare("e11 ribbon condition c^R = c^L", cr, cl))
    if not rep.ok:
        rep.add(CheckResult("mixed crossings (not derived, core checks failed)", False))
        return rep
    gens = generator_table(d)
    for oo in ORIENTATIONS:
        ro = oo[::-1]
        n2 = identity(m * m, ring)
        ok = gens["x" + oo] @ gens["xi" + ro] == n2 and gens["xi" + oo] @ gens["x" + ro] == n2
        rep.add(CheckResult(f"Reidemeister II {oo}", ok))
    rep.extend(_sliding_checks(d, gens))
    rep.add(compare("framed Reidemeister I negative curls agree", right_curl_negative(d), left_curl_negative(d)))
    rep.add(compare("framed Reidemeister I curl inverse", cr @ right_curl_negative(d), I))
    dual_r = _word(gens, m, ring, "-", ["id-", "cup_r"], ["x--", "id+"], ["id-", "cap_l"])
    dual_l = _word(gens, m, ring, "-", ["cup_l", "id-"], ["id+", "x--"], ["cap_r", "id-"])
    rep.add(compare("framed Reidemeister I on X*", dual_r, dual_l))
    return rep


def scalar_twist(d: RibbonDatum):
    """The scalar ``t`` with ``c^R = c^L = t id``."""
    cr, cl = right_curl(d), left_curl(d)
    if cr != cl:
        raise TwistNotScalar("right and left curls differ")
    t = cr.entries[0, 0] if d.rank else R.one(d.ring)
    if cr != identity(d.rank, d.ring).scale(t):
        raise TwistNotScalar("the curl is not a scalar multiple of the identity")
    return t


# ---------------------------------------------------------------------------
# closure properties

def unit_datum(ring: str = R.RATIONAL) -> RibbonDatum:
    one = LinMap.identity(1, ring)
    return RibbonDatum(1, one, one, PivotalData(1, one, one, one, one), "unit")


def dual_datum(d: RibbonDatum) -> RibbonDatum:
    """The datum on ``X*``: braiding ``x--`` and the dualities swapped."""
    t = derive_mixed_crossings(d)
    return RibbonDatum(d.rank, t["x--"], t["xi--"], d.pivotal.dual(), d.name + "*")


def tensor_braid(psi: LinMap, m: int) -> LinMap:
    """``psi_{XX,XX} = (X (x) psi (x) X)(psi (x) psi)(X (x) psi (x) X)``."""
    I = identity(m, psi.ring)
    mid = tensor(tensor(I, psi), I)
    return mid @ tensor(psi, psi) @ mid


def tensor_datum(d: RibbonDatum) -> RibbonDatum:
    """The datum on ``X (x) X`` (hexagon braiding, tensor pivotal data)."""
    m = d.rank
    return RibbonDatum(m * m, tensor_braid(d.braid, m), tensor_braid(d.braid_inv, m),
                       d.pivotal.tensor(d.pivotal), d.name + "^2")


def check_twist_tensor_law(d: RibbonDatum) -> CheckResult:
    """``c_{X(x)X} = psi_{X,X} psi_{X,X} (c_X (x) c_X)``."""
    c = right_curl(d)
    lhs = right_curl(tensor_datum(d))
    rhs = d.braid @ d.braid @ tensor(c, c)
    return compare("twist tensor law", lhs, rhs)


def check_gamma_monoidal(p: PivotalData, q: PivotalData) -> CheckResult:
    return compare("gamma monoidal", gamma(p.tensor(q)), tensor(gamma(p), gamma(q)))


# ---------------------------------------------------------------------------
# ribbon Yetter-Drinfeld modules

@dataclass(frozen=True)
class RibbonYDData:
    yd: YDData
    pivotal: PivotalData

    def __post_init__(self):
        if self.yd.rank != self.pivotal.rank:
            raise ValueError("YD module and pivotal data have different ranks")


def _s2_gamma(r: RibbonYDData):
    h = r.yd.hopf
    return tensor(h.antipode @ h.antipode, gamma(r.pivotal))


def check_prop_r35(r: RibbonYDData) -> CheckReport:
    """Conditions ``gamma alpha = alpha (S^2 (x) gamma)``, ``beta gamma = (S^2 (x) gamma) beta`` and ``c^R = c^L``."""
    x, p = r.yd, r.pivotal
    g = gamma(p)
    h = x.hopf
    rep = CheckReport()
    rep.add(compare("e19 gamma alpha = alpha (S^2 (x) gamma)", g @ x.action, x.action @ _s2_gamma(r),
                    [h.basis_labels, x.basis_labels]))
    rep.add(compare("e20 beta gamma = (S^2 (x) gamma) beta", x.coaction @ g, _s2_gamma(r) @ x.coaction,
                    [x.basis_labels]))
    psi, psi_inv = yd_braiding(x, x)
    d = RibbonDatum(x.rank, psi, psi_inv, p)
    rep.add(compare("e21 c^R = c^L", right_curl(d), left_curl(d), [x.basis_labels]))
    return rep


def ribbon_datum_from_yd(r: RibbonYDData, name: str = "yd") -> RibbonDatum:
    psi, psi_inv = yd_braiding(r.yd, r.yd)
    return RibbonDatum(r.yd.rank, psi, psi_inv, r.pivotal, name, r.yd.basis_labels)


def derive_dual_yd(r: RibbonYDData) -> YDData:
    """The Yetter-Drinfeld structure on ``X*``.

    ``alpha*(h (x) f) = f(S(h) . -)`` bent through ``coev_X``/``ev_X`` and
    ``beta*(f) = sum S^-1(x_i(-1)) (x) f(x_i(0)) x^i``.
    """
    rep = check_prop_r35(r)
    bad = [res for res in rep.results if res.name.startswith(("e19", "e20")) and not res.passed]
    if bad:
        raise PreconditionError("; ".join(res.line() for res in bad))
    x, p = r.yd, r.pivotal
    h = x.hopf
    n, m = h.rank, x.rank
    # h (x) f -> S(h) (x) f (x) coev -> f (x) S(h) x_i (x) x^i -> f(S(h) x_i) x^i
    action = (Wires(tensor(h.antipode, identity(m, x.ring)), [n, m]).apply(p.coev_x, 2, 0, [m, m])
              .permute([1, 0, 2, 3]).apply(x.action, 1, 2, [m]).apply(p.ev_x, 0, 2, []).result())
    # f -> f (x) x_i(-1) (x) x_i(0) (x) x^i -> S^-1(x_i(-1)) (x) f(x_i(0)) x^i
    coaction = (Wires.identity([m], x.ring).apply(p.coev_x, 1, 0, [m, m]).apply(x.coaction, 1, 1, [n, m])
                .permute([1, 0, 2, 3]).apply(h.antipode_inv, 0, 1, [n]).apply(p.ev_x, 1, 2, []).result())
    labels = tuple(f"{l}*" for l in x.basis_labels)
    return YDData(h, m, action, coaction, labels)
