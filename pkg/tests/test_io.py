import json

import pytest

from ribbonyd.data import GROUPS, builtin, builtin_yd
from ribbonyd.hopf import certify_hopf, group_algebra
from ribbonyd.io import (DataFormatError, datum_from_json, datum_to_json, hopf_from_json, hopf_to_json,
                         pivotal_from_json, ribbon_yd_from_json, yd_from_json, yd_to_json)
from ribbonyd.ribbon import certify_ribbon, check_snakes, ribbon_datum_from_yd
from ribbonyd.yd import check_yd


def dump(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_hopf_round_trip(tmp_path, name):
    h = group_algebra(GROUPS[name])
    back = hopf_from_json(dump(tmp_path / "h.json", hopf_to_json(h)))
    assert back.basis_labels == h.basis_labels
    for attr in ("mul", "unit", "comul", "counit", "antipode", "antipode_inv"):
        assert getattr(back, attr) == getattr(h, attr), attr
    assert certify_hopf(back).ok


def test_yd_round_trip_with_relative_path(tmp_path):
    r = builtin_yd("s3-transpositions")
    (tmp_path / "sub").mkdir()
    dump(tmp_path / "sub" / "s3.json", hopf_to_json(r.yd.hopf))
    path = dump(tmp_path / "sub" / "yd.json", yd_to_json(r.yd, "s3.json"))
    back = yd_from_json(path)
    assert back.action == r.yd.action and back.coaction == r.yd.coaction
    assert check_yd(back).ok


def test_yd_inline_hopf():
    r = builtin_yd("z3-nontrivial")
    back = yd_from_json(yd_to_json(r.yd, hopf_to_json(r.yd.hopf)))
    assert back.coaction == r.yd.coaction


def test_ribbon_yd_backed(tmp_path):
    r = builtin_yd("s3-transpositions")
    dump(tmp_path / "s3.json", hopf_to_json(r.yd.hopf))
    dump(tmp_path / "yd.json", yd_to_json(r.yd, "s3.json"))
    path = dump(tmp_path / "ribbon.json", {"yd": "yd.json", "canonical": True})
    got = ribbon_yd_from_json(path)
    assert got is not None
    d = datum_from_json(path)
    assert d.braid == ribbon_datum_from_yd(r).braid
    assert certify_ribbon(d).ok


@pytest.mark.parametrize("name", ["jones", "s3-transpositions"])
def test_direct_datum_round_trip(tmp_path, name):
    d = builtin(name)
    back = datum_from_json(dump(tmp_path / "d.json", datum_to_json(d)))
    assert back.ring == d.ring and back.name == d.name
    assert back.braid == d.braid and back.braid_inv == d.braid_inv
    assert back.pivotal.ev_xstar == d.pivotal.ev_xstar
    assert certify_ribbon(back).ok
    assert ribbon_yd_from_json(dump(tmp_path / "d.json", datum_to_json(d))) is None


def test_canonical_pivotal():
    assert check_snakes(pivotal_from_json({"rank": 3, "canonical": True})).ok


@pytest.mark.parametrize("obj,msg", [
    ({"rank": 2, "ring": "complex"}, "unknown ring"),
    ({"rank": -1}, "nonnegative"),
    ({"rank": 2, "mul": [[0, 0, 5, "1"]]}, "out of range"),
    ({"rank": 2, "mul": [[0, 0, 0]]}, "4 components"),
    ({"rank": 2, "mul": [[0, 0, 0, 1.5]]}, "string or integer"),
    ({"rank": 1, "mul": []}, "missing field"),
])
def test_format_errors(obj, msg):
    with pytest.raises(DataFormatError, match=msg):
        hopf_from_json(obj)


def test_invalid_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(DataFormatError):
        hopf_from_json(str(p))


def test_laurent_coefficients_parse():
    obj = datum_to_json(builtin("jones"))
    assert any("v^" in str(c) for _, _, c in obj["braid"])
    assert obj["ring"] == "laurent_half"
