"""Shared strategies and small builders for the test suite."""

from hypothesis import strategies as st

from ribbonyd import ring as R
from ribbonyd.linmap import LinMap

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(-3, 3)


@st.composite
def laurents(draw, max_terms=4, span=8):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = draw(st.integers(-span, span))
        terms[e] = terms.get(e, 0) + draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    return R.LaurentHalf(terms)


@st.composite
def linmaps(draw, cod, dom, ring=R.RATIONAL, density=0.5):
    elems = small_ints if ring == R.RATIONAL else laurents(max_terms=2, span=4)
    rows = []
    for _ in range(cod):
        row = []
        for _ in range(dom):
            row.append(draw(elems) if draw(st.floats(0, 1)) < density else 0)
        rows.append(row)
    return LinMap(rows, ring)


def perturb(f: LinMap, i: int, j: int, delta=1) -> LinMap:
    """``f`` with ``delta`` added to entry ``(i, j)``."""
    arr = f.entries.copy()
    arr[i, j] = arr[i, j] + R.coerce(delta, f.ring)
    return LinMap(arr, f.ring)



# -- elementwise oracles ------------------------------------------------------
# Straight index loops over structure constants; no matrix algebra shared
# with the engine.

def _sc(f: LinMap):
    """Sparse ``{(row, col): value}`` view."""
    return {(int(i), int(j)): f.entries[i, j] for i, j in zip(*f.entries.nonzero())}


def _vec_mul(h, x, y):
    """Product of two elements given as ``{basis: coeff}`` dicts."""
    n = h.rank
    m = _sc(h.mul)
    out = {}
    for (k, ij), c in m.items():
        i, j = divmod(ij, n)
        if i in x and j in y:
            out[k] = out.get(k, 0) + c * x[i] * y[j]
    return {k: v for k, v in out.items() if v}


def _apply(f, x, n_dom):
    out = {}
    for (r, c), v in _sc(f).items():
        if c in x:
            out[r] = out.get(r, 0) + v * x[c]
    return {k: v for k, v in out.items() if v}


def naive_hopf_ok(h) -> bool:
    n = h.rank
    e = lambda i: {i: 1}
    one = _apply(h.unit, {0: 1}, 1)
    comul = lambda x: _apply(h.comul, x, n)
    split = lambda k: divmod(k, n)
    eps = lambda x: _apply(h.counit, x, n).get(0, 0)
    S = lambda x: _apply(h.antipode, x, n)
    Si = lambda x: _apply(h.antipode_inv, x, n)
    for i in range(n):
        if _vec_mul(h, one, e(i)) != e(i) or _vec_mul(h, e(i), one) != e(i):
            return False
        d = comul(e(i))
        # coassociativity on basis element i
        left, right = {}, {}
        for k, c in d.items():
            a, b = split(k)
            for k2, c2 in comul(e(a)).items():
                a1, a2 = split(k2)
                key = (a1, a2, b)
                left[key] = left.get(key, 0) + c * c2
            for k2, c2 in comul(e(b)).items():
                b1, b2 = split(k2)
                key = (a, b1, b2)
                right[key] = right.get(key, 0) + c * c2
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            return False
        # counit and antipode
        cl, cr, sl, sr = {}, {}, {}, {}
        for k, c in d.items():
            a, b = split(k)
            for t, v in e(b).items():
                cl[t] = cl.get(t, 0) + c * eps(e(a)) * v
            cr[a] = cr.get(a, 0) + c * eps(e(b))
            for t, v in _vec_mul(h, S(e(a)), e(b)).items():
                sl[t] = sl.get(t, 0) + c * v
            for t, v in _vec_mul(h, e(a), S(e(b))).items():
                sr[t] = sr.get(t, 0) + c * v
        target = {k: v * eps(e(i)) for k, v in one.items() if v * eps(e(i))}
        clean = lambda z: {k: v for k, v in z.items() if v}
        if clean(cl) != e(i) or clean(cr) != e(i) or clean(sl) != target or clean(sr) != target:
            return False
        if Si(S(e(i))) != e(i) or S(Si(e(i))) != e(i):
            return False
        for j in range(n):
            for k in range(n):
                if _vec_mul(h, _vec_mul(h, e(i), e(j)), e(k)) != _vec_mul(h, e(i), _vec_mul(h, e(j), e(k))):
                    return False
            # Delta and eps multiplicative
            prod = _vec_mul(h, e(i), e(j))
            lhs = {}
            for t, c in prod.items():
                for k, v in comul(e(t)).items():
                    lhs[k] = lhs.get(k, 0) + c * v
            rhs = {}
            for k1, c1 in comul(e(i)).items():
                a1, a2 = split(k1)
                for k2, c2 in comul(e(j)).items():
                    b1, b2 = split(k2)
                    for p, u in _vec_mul(h, e(a1), e(b1)).items():
                        for q, w in _vec_mul(h, e(a2), e(b2)).items():
                            rhs[p * n + q] = rhs.get(p * n + q, 0) + c1 * c2 * u * w
            if clean(lhs) != clean(rhs):
                return False
            if sum(c * eps(e(t)) for t, c in prod.items()) != eps(e(i)) * eps(e(j)):
                return False
    if eps(one) != 1:
        return False
    d1 = {}
    for t, c in one.items():
        for k, v in comul(e(t)).items():
            d1[k] = d1.get(k, 0) + c * v
    return {k: v for k, v in d1.items() if v} == {a * n + b: ca * cb for a, ca in one.items() for b, cb in one.items()}


def naive_yd_ok(x) -> bool:
    """Module, comodule and compatibility for a YD module over a group algebra-like HopfData."""
    h = x.hopf
    n, m = h.rank, x.rank
    act = _sc(x.action)
    coact = _sc(x.coaction)

    def a(hv, xv):
        out = {}
        for (k, col), c in act.items():
            i, j = divmod(col, m)
            if i in hv and j in xv:
                out[k] = out.get(k, 0) + c * hv[i] * xv[j]
        return {k: v for k, v in out.items() if v}

    def b(xv):
        out = {}
        for (row, j), c in coact.items():
            if j in xv:
                out[row] = out.get(row, 0) + c * xv[j]
        return {k: v for k, v in out.items() if v}

    split = lambda k: divmod(k, m)
    one = _apply(h.unit, {0: 1}, 1)
    for j in range(m):
        xj = {j: 1}
        if a(one, xj) != xj:
            return False
        for i in range(n):
            for k in range(n):
                if a(_vec_mul(h, {i: 1}, {k: 1}), xj) != a({i: 1}, a({k: 1}, xj)):
                    return False
        bj = b(xj)
        # counit
        cnt = {}
        for r, c in bj.items():
            hi, xk = split(r)
            e = _apply(h.counit, {hi: 1}, n).get(0, 0)
            cnt[xk] = cnt.get(xk, 0) + c * e
        if {k: v for k, v in cnt.items() if v} != xj:
            return False
        # coassociativity
        left, right = {}, {}
        for r, c in bj.items():
            hi, xk = split(r)
            for d, cd in _apply(h.comul, {hi: 1}, n).items():
                h1, h2 = divmod(d, n)
                left[(h1, h2, xk)] = left.get((h1, h2, xk), 0) + c * cd
            for r2, c2 in b({xk: 1}).items():
                h2, xl = split(r2)
                right[(hi, h2, xl)] = right.get((hi, h2, xl), 0) + c * c2
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            return False
        # compatibility beta(h.x) = h1 x(-1) S(h3) (x) h2 . x(0)
        for i in range(n):
            lhs = {}
            for xk, c in a({i: 1}, xj).items():
                for r, v in b({xk: 1}).items():
                    lhs[r] = lhs.get(r, 0) + c * v
            rhs = {}
            for d1, c1 in _apply(h.comul, {i: 1}, n).items():
                h1, rest = divmod(d1, n)
                for d2, c2 in _apply(h.comul, {rest: 1}, n).items():
                    h2, h3 = divmod(d2, n)
                    s3 = _apply(h.antipode, {h3: 1}, n)
                    for r, c in bj.items():
                        xm, x0 = split(r)
                        coef = _vec_mul(h, _vec_mul(h, {h1: 1}, {xm: 1}), s3)
                        act0 = a({h2: 1}, {x0: 1})
                        for p, u in coef.items():
                            for q, w in act0.items():
                                key = p * m + q
                                rhs[key] = rhs.get(key, 0) + c1 * c2 * c * u * w
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return False
    return True


# framed moves: each pair must give the same LinMap
MOVE_PAIRS = [
    ("RII ++", "x++ ; xi++", "id+ id+"),
    ("RII +-", "x+- ; xi-+", "id+ id-"),
    ("RII -+", "x-+ ; xi+-", "id- id+"),
    ("RII --", "x-- ; xi--", "id- id-"),
    ("RII +- other order", "xi+- ; x-+", "id+ id-"),
    ("RIII positive", "x++ id+ ; id+ x++ ; x++ id+", "id+ x++ ; x++ id+ ; id+ x++"),
    ("RIII mixed sign", "x++ id+ ; id+ x++ ; xi++ id+", "id+ xi++ ; x++ id+ ; id+ x++"),
    ("RIII on X*", "x-- id- ; id- x-- ; x-- id-", "id- x-- ; x-- id- ; id- x--"),
    ("RIII mixed orientation", "x+- id- ; id- x+- ; x-- id+", "id+ x-- ; x+- id- ; id- x+-"),
    ("snake right", "id+ cup_r ; cap_r id+", "id+"),
    ("snake left", "cup_l id+ ; id+ cap_l", "id+"),
    ("snake on X* right", "id- cup_l ; cap_l id-", "id-"),
    ("snake on X* left", "cup_r id- ; id- cap_r", "id-"),
    ("framed RI", "id+ cup_l ; x++ id- ; id+ cap_r", "cup_r id+ ; id- x++ ; cap_l id+"),
    ("curl cancellation", "id+ cup_l ; x++ id- ; id+ cap_r ; id+ cup_l ; xi++ id- ; id+ cap_r", "id+"),
    ("slide past a cup", "id+ cup_l ; x++ id- ; id+ x+-", "cup_l id+"),
    ("circle orientation", "cup_r ; cap_l", "cup_l ; cap_r"),
    ("negative curl on X*", "id- cup_r ; xi-- id+ ; id- cap_l", "cup_l id- ; id+ xi-- ; cap_r id-"),
]
