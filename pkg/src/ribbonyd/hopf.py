"""Finite-dimensional Hopf algebras given by structure tensors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import ring as R
from .linmap import LinMap, Wires, identity, permute, swap, tensor, tensor_all
from .report import CheckReport, compare


class GroupError(ValueError):
    """The multiplication table is not a group law."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group by multiplication table: ``table[a][b]`` is the index of ``a*b``."""

    table: Tuple[Tuple[int, ...], ...]
    names: Optional[Tuple[str, ...]] = None
    identity: int = field(init=False)
    inverse: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("table must be a non-empty square")
        if any(not 0 <= x < n for row in table for x in row):
            raise GroupError("table entries out of range")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupError(f"not associative at ({a},{b},{c})")
        ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
        if not ids:
            raise GroupError("no identity element")
        e = ids[0]
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
            if not cands:
                raise GroupError(f"element {a} has no inverse")
            inv.append(cands[0])
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inv))
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(n)))
        elif len(self.names) != n:
            raise GroupError("wrong number of element names")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.table[self.table[g][h]][self.inverse[g]]

    def conjugacy_class(self, h: int) -> List[int]:
        return sorted({self.conj(g, h) for g in range(self.order)})

    def conjugacy_classes(self) -> List[List[int]]:
        seen, out = set(), []
        for h in range(self.order):
            if h not in seen:
                cls = self.conjugacy_class(h)
                seen.update(cls)
                out.append(cls)
        return out

    def is_conjugation_closed(self, subset: Sequence[int]) -> bool:
        s = set(subset)
        return all(self.conj(g, h) in s for g in range(self.order) for h in s)

    # -- standard groups ------------------------------------------------
    @classmethod
    def from_permutations(cls, perms: Sequence[Tuple[int, ...]]) -> "FiniteGroup":
        """Closed set of permutations; composition ``(p*q)(i) = p(q(i))``."""
        perms = [tuple(p) for p in perms]
        index = {p: i for i, p in enumerate(perms)}
        table = []
        for p in perms:
            row = []
            for q in perms:
                pq = tuple(p[q[i]] for i in range(len(q)))
                if pq not in index:
                    raise GroupError("permutations are not closed under composition")
                row.append(index[pq])
            table.append(tuple(row))
        return cls(tuple(table), tuple(_cycle_name(p) for p in perms))

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        return cls.from_permutations(list(itertools.permutations(range(n))))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(table, tuple(f"a^{k}" if k != 1 else "a" for k in range(n)))

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(((0,),), ("e",))

    def elements_of_order(self, k: int) -> List[int]:
        out = []
        for g in range(self.order):
            x, m = g, 1
            while x != self.identity:
                x = self.mul(x, g)
                m += 1
            if m == k:
                out.append(g)
        return out


def _cycle_name(p) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True)
class HopfData:
    """Structure maps of a Hopf algebra on a free module of rank ``rank``.

    Construction does not certify anything; call :func:`check_hopf`.
    """

    rank: int
    basis_labels: Tuple[str, ...]
    mul: LinMap
    unit: LinMap
    comul: LinMap
    counit: LinMap
    antipode: LinMap
    antipode_inv: LinMap

    def __post_init__(self):
        n = self.rank
        shapes = {
            "mul": (n, n * n), "unit": (n, 1), "comul": (n * n, n),
            "counit": (1, n), "antipode": (n, n), "antipode_inv": (n, n),
        }
        for name, shape in shapes.items():
            m = getattr(self, name)
            if m.shape != shape:
                raise ValueError(f"{name} has shape {m.shape}, expected {shape}")
            if m.ring != self.mul.ring:
                raise R.RingError(f"{name} is over {m.ring}, mul over {self.mul.ring}")
        if len(self.basis_labels) != n:
            raise ValueError("wrong number of basis labels")
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))

    @property
    def ring(self) -> str:
        return self.mul.ring

    def id(self, k: int = 1) -> LinMap:
        return identity(self.rank ** k, self.ring)

    def replace(self, **kw) -> "HopfData":
        fields = dict(rank=self.rank, basis_labels=self.basis_labels, mul=self.mul, unit=self.unit,
                      comul=self.comul, counit=self.counit, antipode=self.antipode,
                      antipode_inv=self.antipode_inv)
        fields.update(kw)
        return HopfData(**fields)


def group_algebra(g: FiniteGroup, ring: str = R.RATIONAL) -> HopfData:
    """``k[G]`` with ``Delta(g) = g(x)g``, ``eps(g) = 1``, ``S(g) = g^-1``."""
    n = g.order
    mul = LinMap.from_sparse(n, n * n, ((g.mul(a, b), a * n + b, 1) for a in range(n) for b in range(n)), ring)
    unit = LinMap.from_sparse(n, 1, [(g.identity, 0, 1)], ring)
    comul = LinMap.from_sparse(n * n, n, ((a * n + a, a, 1) for a in range(n)), ring)
    counit = LinMap.from_sparse(1, n, ((0, a, 1) for a in range(n)), ring)
    antipode = LinMap.from_sparse(n, n, ((g.inverse[a], a, 1) for a in range(n)), ring)
    return HopfData(n, tuple(g.names), mul, unit, comul, counit, antipode, antipode)


# ---------------------------------------------------------------------------

def iterated_mul(h: HopfData, n: int) -> LinMap:
    """``mu_0 = eta``, ``mu_1 = id``, ``mu_n = mu (mu_{n-1} (x) H)``."""
    if n < 0:
        raise ValueError("arity must be nonnegative")
    if n == 0:
        return h.unit
    out = h.id()
    for _ in range(2, n + 1):
        out = h.mul @ tensor(out, h.id())
    return out


def iterated_comul(h: HopfData, n: int) -> LinMap:
    """``Delta_0 = eps``, ``Delta_1 = id``, ``Delta_n = (Delta_{n-1} (x) H) Delta``."""
    if n < 0:
        raise ValueError("arity must be nonnegative")
    if n == 0:
        return h.counit
    out = h.id()
    for _ in range(2, n + 1):
        out = tensor(out, h.id()) @ h.comul
    return out


def generalized_associativity(h: HopfData, ks: Sequence[int]) -> Tuple[bool, bool]:
    """Compare ``mu_m (mu_k1 (x) ... (x) mu_km)`` with ``mu_{sum k}`` and dually for Delta."""
    m = len(ks)
    one = LinMap.identity(1, h.ring)
    inner_mul = tensor_all(one, *[iterated_mul(h, k) for k in ks])
    inner_comul = tensor_all(one, *[iterated_comul(h, k) for k in ks])
    total = sum(ks)
    mul_ok = iterated_mul(h, m) @ inner_mul == iterated_mul(h, total)
    comul_ok = inner_comul @ iterated_comul(h, m) == iterated_comul(h, total)
    return mul_ok, comul_ok


def _labels(h: HopfData, k: int):
    return [h.basis_labels] * k


def check_hopf(h: HopfData) -> CheckReport:
    """Every Hopf axiom as an exact matrix identity."""
    n, ring = h.rank, h.ring
    I1 = h.id()
    mu, eta, dl, eps, S, Si = h.mul, h.unit, h.comul, h.counit, h.antipode, h.antipode_inv
    one = LinMap.identity(1, ring)
    rep = CheckReport()
    rep.add(compare("e12 associativity", mu @ tensor(mu, I1), mu @ tensor(I1, mu), _labels(h, 3)))
    rep.add(compare("e12 left unit", mu @ tensor(eta, I1), I1, _labels(h, 1)))
    rep.add(compare("e12 right unit", mu @ tensor(I1, eta), I1, _labels(h, 1)))
    rep.add(compare("e13 coassociativity", tensor(dl, I1) @ dl, tensor(I1, dl) @ dl, _labels(h, 1)))
    rep.add(compare("e13 left counit", tensor(eps, I1) @ dl, I1, _labels(h, 1)))
    rep.add(compare("e13 right counit", tensor(I1, eps) @ dl, I1, _labels(h, 1)))
    rep.add(compare("e14 counit of unit", eps @ eta, one, [["1"]]))
    rep.add(compare("e14 counit multiplicative", eps @ mu, tensor(eps, eps), _labels(h, 2)))
    rep.add(compare("e14 comultiplication unital", dl @ eta, tensor(eta, eta), [["1"]]))
    rhs = Wires(tensor(dl, dl), [n] * 4).permute([0, 2, 1, 3]).apply(mu, 0, 2, [n]).apply(mu, 1, 2, [n])
    rep.add(compare("e15 bialgebra", dl @ mu, rhs.result(), _labels(h, 2)))
    ee = eta @ eps
    rep.add(compare("e16 antipode left", mu @ tensor(S, I1) @ dl, ee, _labels(h, 1)))
    rep.add(compare("e16 antipode right", mu @ tensor(I1, S) @ dl, ee, _labels(h, 1)))
    rep.add(compare("e17 antipode inverse left", Si @ S, I1, _labels(h, 1)))
    rep.add(compare("e17 antipode inverse right", S @ Si, I1, _labels(h, 1)))
    return rep


def check_derived_antipode_identities(h: HopfData) -> CheckReport:
    """Consequences of the axioms: S is an anti-(co)algebra map preserving unit and counit."""
    n, ring = h.rank, h.ring
    mu, eta, dl, eps, S = h.mul, h.unit, h.comul, h.counit, h.antipode
    P = swap(n, n, ring)
    rep = CheckReport()
    rep.add(compare("e16-2 antipode antimultiplicative", S @ mu, mu @ tensor(S, S) @ P, _labels(h, 2)))
    rep.add(compare("e16-2 counit of antipode", eps @ S, eps, _labels(h, 1)))
    rep.add(compare("e16-2 antipode anticomultiplicative", dl @ S, P @ tensor(S, S) @ dl, _labels(h, 1)))
    rep.add(compare("e16-2 antipode of unit", S @ eta, eta, [["1"]]))
    return rep


def certify_hopf(h: HopfData) -> CheckReport:
    rep = check_hopf(h)
    rep.extend(check_derived_antipode_identities(h))
    return rep


def wire_permutation(h: HopfData, perm: Sequence[int]) -> LinMap:
    """Permutation of ``len(perm)`` copies of ``H``."""
    return permute([h.rank] * len(perm), perm, h.ring)
