import json

import pytest

import qconx


def test_field_info():
    info = qconx.field_info(5)
    assert info["delta"] == 2
    assert info["field_size"] == 25
    assert qconx.field_info(7)["omega_in_base_field"] is True


def test_invalid_prime_raises():
    with pytest.raises(ValueError):
        qconx.field_info(4)


def test_construct_e1():
    doc = qconx.construct(5, 1, 1, 3, exact=True)
    assert doc["params"]["N"] == 16
    assert doc["params"]["K"] == 6
    assert doc["params"]["d_exact"] >= doc["params"]["d_lower"] == 4
    assert qconx.verify_construction(doc) == ""
    doc["params"]["K"] = 7
    assert qconx.verify_construction(doc) != ""


def test_construct_defining_set():
    doc = qconx.construct_defining_set(5, 24, [0, 4, 20])
    assert doc["e"] == 3
    assert qconx.verify_construction(doc) == ""


def test_dual_exponents_and_distance():
    assert qconx.dual_exponents(7, 1, 2, 3, 5) == (5, 2, 4)
    assert qconx.dual_exponents(5, 1, 1, 2, 3) == (4, 3, 2)
    assert qconx.distance_3ps(5, 1, 4, 5, 5) == 15


def test_scan_and_table():
    res = qconx.scan(5)
    assert res["summary"]["triples_examined"] == 216
    assert qconx.verify_scan(res["records"]) == ""
    rows = qconx.compare_table(res["records"])
    assert {r["status"] for r in rows} <= {"reproduced", "beaten"}


def test_min_weight_full_space():
    gen = [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
    rep = qconx.min_weight(5, gen)
    assert rep["value"] == 1
    assert rep["kind"] == "exact"


def test_run_cli():
    code, out, _ = qconx.run_cli(["field-info", "--p", "7"])
    assert code == 0
    assert json.loads(out)["p"] == 7
    assert qconx.run_cli(["construct"])[0] == 1
