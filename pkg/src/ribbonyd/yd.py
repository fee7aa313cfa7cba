"""Left-left Yetter-Drinfeld modules over a :class:`HopfData`."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import ring as R
from .hopf import FiniteGroup, HopfData, group_algebra, iterated_comul, iterated_mul
from .linmap import LinMap, Wires, identity, permute, tensor, tensor_all
from .report import CheckReport, compare


class HopfMismatch(ValueError):
    pass


@dataclass(frozen=True)
class YDData:
    """A module ``action: H(x)X -> X`` and comodule ``coaction: X -> H(x)X``."""

    hopf: HopfData
    rank: int
    action: LinMap
    coaction: LinMap
    basis_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        n, m = self.hopf.rank, self.rank
        if self.action.shape != (m, n * m):
            raise ValueError(f"action has shape {self.action.shape}, expected {(m, n * m)}")
        if self.coaction.shape != (n * m, m):
            raise ValueError(f"coaction has shape {self.coaction.shape}, expected {(n * m, m)}")
        if self.basis_labels is None:
            object.__setattr__(self, "basis_labels", tuple(f"x{i}" for i in range(m)))
        else:
            object.__setattr__(self, "basis_labels", tuple(self.basis_labels))

    @property
    def ring(self) -> str:
        return self.hopf.ring

    def id(self) -> LinMap:
        return identity(self.rank, self.ring)


def _same_hopf(x: YDData, y: YDData):
    if x.hopf is not y.hopf and x.hopf != y.hopf:
        raise HopfMismatch("Yetter-Drinfeld modules over different Hopf algebras")


def check_yd(x: YDData) -> CheckReport:
    """Module, comodule and the Yetter-Drinfeld compatibility, as matrix identities.

    Compatibility: ``beta(h.x) = h1 x_(-1) S(h3) (x) h2.x_(0)``.
    """
    h = x.hopf
    n, ring = h.rank, x.ring
    IH, IX = h.id(), x.id()
    a, b = x.action, x.coaction
    hx = [h.basis_labels, x.basis_labels]
    rep = CheckReport()
    rep.add(compare("yd1 module associativity", a @ tensor(h.mul, IX), a @ tensor(IH, a),
                    [h.basis_labels, h.basis_labels, x.basis_labels]))
    rep.add(compare("yd1 module unit", a @ tensor(h.unit, IX), IX, [x.basis_labels]))
    rep.add(compare("yd2 comodule coassociativity", tensor(h.comul, IX) @ b, tensor(IH, b) @ b, [x.basis_labels]))
    rep.add(compare("yd2 comodule counit", tensor(h.counit, IX) @ b, IX, [x.basis_labels]))
    lhs = b @ a
    rhs = (Wires(tensor(iterated_comul(h, 3), b), [n, n, n, n, x.rank])  # h1 h2 h3 x-1 x0
           .permute([0, 3, 2, 1, 4])  # h1 x-1 h3 h2 x0
           .apply(h.antipode, 2, 1, [n])
           .apply(iterated_mul(h, 3), 0, 3, [n])
           .apply(a, 1, 2, [x.rank]))
    rep.add(compare("yd3 compatibility", lhs, rhs.result(), hx))
    return rep


def check_yd_morphism(f: LinMap, x: YDData, y: YDData) -> CheckReport:
    _same_hopf(x, y)
    if f.shape != (y.rank, x.rank):
        raise ValueError(f"map has shape {f.shape}, expected {(y.rank, x.rank)}")
    IH = x.hopf.id()
    rep = CheckReport()
    rep.add(compare("module morphism", f @ x.action, y.action @ tensor(IH, f),
                    [x.hopf.basis_labels, x.basis_labels]))
    rep.add(compare("comodule morphism", y.coaction @ f, tensor(IH, f) @ x.coaction, [x.basis_labels]))
    return rep


def unit_yd(h: HopfData) -> YDData:
    """The monoidal unit ``(I, eps, eta)``."""
    return YDData(h, 1, h.counit, h.unit, ("1",))


def adjoint_yd(group: FiniteGroup, subset: Sequence[int], hopf: Optional[HopfData] = None) -> YDData:
    """``k[S]`` with the adjoint action ``g.s = g s g^-1`` and coaction ``s -> s (x) s``."""
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("empty subset")
    if any(not 0 <= s < group.order for s in subset):
        raise ValueError("subset element out of range")
    if not group.is_conjugation_closed(subset):
        raise ValueError(f"subset {subset} is not closed under conjugation")
    h = hopf if hopf is not None else group_algebra(group)
    if h.rank != group.order:
        raise HopfMismatch("Hopf algebra rank differs from group order")
    pos = {s: j for j, s in enumerate(subset)}
    m, n = len(subset), group.order
    action = LinMap.from_sparse(
        m, n * m, ((pos[group.conj(g, s)], g * m + j, 1) for g in range(n) for j, s in enumerate(subset)), h.ring)
    coaction = LinMap.from_sparse(n * m, m, ((s * m + j, j, 1) for j, s in enumerate(subset)), h.ring)
    return YDData(h, m, action, coaction, tuple(group.names[s] for s in subset))


def inclusion(group: FiniteGroup, subset: Sequence[int], ring: str = R.RATIONAL) -> LinMap:
    """The inclusion ``k[S] -> k[G]``."""
    subset = sorted(set(subset))
    return LinMap.from_sparse(group.order, len(subset), ((s, j, 1) for j, s in enumerate(subset)), ring)


def yd_tensor(x: YDData, y: YDData) -> YDData:
    """``h.(x(x)y) = h1.x (x) h2.y`` and ``x(x)y -> x_(-1) y_(-1) (x) x_(0) (x) y_(0)``."""
    _same_hopf(x, y)
    h = x.hopf
    n, ring = h.rank, x.ring
    mx, my = x.rank, y.rank
    action = (Wires(tensor_all(h.comul, x.id(), y.id()), [n, n, mx, my]).permute([0, 2, 1, 3])
              .apply(x.action, 0, 2, [mx]).apply(y.action, 1, 2, [my]).result())
    coaction = (Wires(tensor(x.coaction, y.coaction), [n, mx, n, my]).permute([0, 2, 1, 3])
                .apply(h.mul, 0, 2, [n]).result())
    labels = tuple(f"{a}{b}" for a in x.basis_labels for b in y.basis_labels)
    return YDData(h, x.rank * y.rank, action, coaction, labels)


def yd_braiding(x: YDData, y: YDData) -> Tuple[LinMap, LinMap]:
    """``psi(x(x)y) = x_(-1).y (x) x_(0)`` and its inverse ``y(x)x -> x_(0) (x) S^-1(x_(-1)).y``."""
    _same_hopf(x, y)
    h = x.hopf
    n, ring = h.rank, x.ring
    mx, my = x.rank, y.rank
    psi = (Wires(tensor(x.coaction, y.id()), [n, mx, my]).permute([0, 2, 1])
           .apply(y.action, 0, 2, [my]).result())
    psi_inv = (Wires(tensor(y.id(), x.coaction), [my, n, mx]).permute([2, 1, 0])
               .apply(h.antipode_inv, 1, 1, [n]).apply(y.action, 1, 2, [my]).result())
    return psi, psi_inv
