import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ribbonyd import ring as R
from ribbonyd.hopf import (FiniteGroup, GroupError, HopfData, certify_hopf, check_derived_antipode_identities,
                           check_hopf, generalized_associativity, group_algebra, iterated_comul, iterated_mul)
from ribbonyd.linmap import identity

from helpers import naive_hopf_ok, perturb

GROUPS = {"z2": FiniteGroup.cyclic(2), "z3": FiniteGroup.cyclic(3), "s3": FiniteGroup.symmetric(3),
          "trivial": FiniteGroup.trivial()}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_algebras_are_hopf(name):
    h = group_algebra(GROUPS[name])
    rep = certify_hopf(h)
    assert rep.ok, str(rep)
    assert naive_hopf_ok(h)


def test_z2_antipode_is_identity():
    h = group_algebra(GROUPS["z2"])
    assert h.rank == 2 and h.antipode == identity(2, R.RATIONAL)


def test_trivial_group_rank_one():
    h = group_algebra(GROUPS["trivial"])
    assert h.rank == 1
    for f in (h.mul, h.unit, h.comul, h.counit, h.antipode):
        assert f.shape == (1, 1) and f.entries[0, 0] == 1


def test_s3_names_and_classes():
    g = GROUPS["s3"]
    assert g.order == 6
    assert sorted(len(c) for c in g.conjugacy_classes()) == [1, 2, 3]
    assert len(g.elements_of_order(2)) == 3


def test_report_covers_every_axiom():
    names = check_hopf(group_algebra(GROUPS["s3"])).names()
    for prefix in ("e12", "e13", "e14", "e15", "e16", "e17"):
        assert any(n.startswith(prefix) for n in names)


def test_associativity_failure_has_witness():
    h = group_algebra(GROUPS["s3"])
    bad = h.replace(mul=perturb(h.mul, 0, 7))
    rep = check_hopf(bad)
    res = rep["e12 associativity"]
    assert not res.passed
    assert res.witness.startswith("(") and res.witness.count(",") == 2


def test_iterated_low_arity():
    h = group_algebra(GROUPS["s3"])
    assert iterated_mul(h, 0) == h.unit
    assert iterated_mul(h, 1) == h.id()
    assert iterated_comul(h, 0) == h.counit
    assert iterated_comul(h, 1) == h.id()


def test_generalized_associativity_example():
    assert generalized_associativity(group_algebra(GROUPS["s3"]), (2, 1)) == (True, True)


def _compositions(total_max):
    for m in range(1, total_max + 1):
        for ks in itertools.product(range(total_max + 1), repeat=m):
            if sum(ks) <= total_max:
                yield ks


@pytest.mark.parametrize("ks", list(_compositions(4)))
def test_generalized_associativity_exhaustive(ks):
    assert generalized_associativity(group_algebra(GROUPS["z3"]), ks) == (True, True)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_algebra_antipode_involutive(name):
    h = group_algebra(GROUPS[name])
    assert h.antipode @ h.antipode == h.id()


def test_derived_identities_fail_on_perturbed_antipode():
    h = group_algebra(GROUPS["s3"])
    bad = h.replace(antipode=perturb(h.antipode, 2, 3))
    rep = check_derived_antipode_identities(bad)
    assert not rep.ok
    assert any(r.witness for r in rep.failures())


FIELDS = ("mul", "unit", "comul", "counit", "antipode", "antipode_inv")


def random_perturbations(h, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        field = rng.choice(FIELDS)
        f = getattr(h, field)
        i, j = rng.randrange(f.cod_rank), rng.randrange(f.dom_rank)
        delta = rng.choice([-2, -1, 1, 2])
        out.append((field, i, j, h.replace(**{field: perturb(f, i, j, delta)})))
    return out


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_perturbations_rejected_and_agree_with_oracle(name):
    h = group_algebra(GROUPS[name])
    for field, i, j, bad in random_perturbations(h, 50, seed={"z2": 2, "z3": 3, "s3": 6}[name]):
        engine = certify_hopf(bad).ok
        assert engine == naive_hopf_ok(bad), (field, i, j)
        assert not engine, (field, i, j)


@settings(max_examples=25)
@given(st.sampled_from(FIELDS), st.data())
def test_checker_matches_oracle_under_perturbation(field, data):
    h = group_algebra(GROUPS["z3"])
    f = getattr(h, field)
    i = data.draw(st.integers(0, f.cod_rank - 1))
    j = data.draw(st.integers(0, f.dom_rank - 1))
    delta = data.draw(st.sampled_from([-1, 1, 2]))
    bad = h.replace(**{field: perturb(f, i, j, delta)})
    assert certify_hopf(bad).ok == naive_hopf_ok(bad)


def test_group_table_validation():
    with pytest.raises(GroupError):
        FiniteGroup(((0, 1), (0, 1)))
    with pytest.raises(GroupError):
        FiniteGroup(((0, 1), (1, 1)))


def test_hopf_shape_validation():
    h = group_algebra(GROUPS["z2"])
    with pytest.raises(ValueError):
        h.replace(mul=h.id())
