import json
import pathlib

import pytest

import crossact

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def bundle(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


def all_pass(report):
    return all(c["status"] == "pass" for c in report["checks"])


def test_cyclotomic_arithmetic():
    i = crossact.Cyclotomic.root_of_unity(4, 1)
    assert i * i == crossact.Cyclotomic(-1)
    assert i ** 4 == crossact.Cyclotomic(1)
    assert (i + crossact.Cyclotomic(1)) * (i + crossact.Cyclotomic(1)).inverse() == crossact.Cyclotomic(1)
    assert i.embed(8) == crossact.Cyclotomic.root_of_unity(8, 2)


def test_s4_bicrossed_group():
    assert crossact.bicrossed_group_order(bundle("s4_pair")["matched_pair"]) == 24


def test_hopf_round_trip():
    b = bundle("dim8_cocycle")
    h = crossact.build_hopf(b["matched_pair"], b["cocycles"])
    assert h["dim"] == 8
    assert all_pass(crossact.verify_hopf(h))


def test_cocycle_enumeration_on_z2():
    pair = bundle("z2_split")["matched_pair"]
    found = crossact.enumerate_cocycles(pair, 4)
    assert len(found) == 8
    assert all(all_pass(crossact.cocycle_report(pair, cp)) for cp in found)


def test_monad_and_braiding_pairs():
    pair = bundle("gcrossed_s3")["matched_pair"]
    assert all_pass(crossact.monad_check(pair))
    pairs = crossact.braiding_pairs(pair)
    assert pairs and all(p["qybe"] for p in pairs)


def test_braiding_search_and_verify():
    b = bundle("z2_split")
    bp = {"phi": b["braiding"]["phi"], "psi": b["braiding"]["psi"]}
    found = crossact.search_braidings(b["matched_pair"], bp, 4)
    assert len(found) == 2
    for bd in found:
        assert all_pass(crossact.verify_braiding(b["matched_pair"], bd))


def test_cli_in_process():
    code, out, _ = crossact.run_cli(["validate", "--input", str(FIXTURES / "s3_pair.json")])
    assert code == 0 and "FAIL" not in out
    code, _, _ = crossact.run_cli(["validate", "--input", str(FIXTURES / "missing.json")])
    assert code == 2


def test_malformed_pair_raises():
    with pytest.raises(crossact.Error):
        crossact.validate_pair({"G": {"cyclic": 2}})
