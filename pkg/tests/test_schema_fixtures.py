import json

import pytest

from torelli.calculus import SIPData, SSIPData, TorelliFactorization, sigma_word, tau_word
from torelli.errors import InvariantError, SchemaError
from torelli.fixtures import (
    build_documents,
    derivation_from_json,
    derivation_to_json,
    DERIVATION_BUILDERS,
    fixture_names,
    load_fixture,
    standard_sip,
)
from torelli.schema import factorization_to_json, parse_class, parse_factorization, parse_item


def test_shipped_json_matches_builders():
    docs = build_documents()
    assert sorted(docs) == fixture_names()
    for name, doc in docs.items():
        assert load_fixture(name) == json.loads(json.dumps(doc)), name


def test_load_fixture_names():
    assert load_fixture("standard_sip.json") == load_fixture("standard_sip")
    with pytest.raises(SchemaError):
        load_fixture("nope")
    for name in ("lemma_factorsip", "putman_f5", "johnson_lemma10", "sip_equality", "sip_distinctness",
                 "standard_sip", "ssip_type2", "ssip_type3", "ssip_type4", "lantern"):
        assert name in fixture_names()


def test_factorization_round_trip():
    f = parse_factorization(load_fixture("standard_sip"))
    assert f.items == (standard_sip(),)
    assert factorization_to_json(f) == load_fixture("standard_sip")
    for name in ("ssip_type2", "ssip_type3", "ssip_type4"):
        g = parse_factorization(load_fixture(name))
        assert isinstance(g.items[0], SSIPData)
        assert parse_factorization(factorization_to_json(g)) == g


def test_derivation_round_trip():
    for build in DERIVATION_BUILDERS.values():
        fx = build()
        back = derivation_from_json(derivation_to_json(fx))
        assert back["env"] == fx["env"]
        assert back["classes"] == fx["classes"]
        assert [s.steps for s in back["scripts"]] == [s.steps for s in fx["scripts"]]
        assert [(s.start, s.end) for s in back["scripts"]] == [(s.start, s.end) for s in fx["scripts"]]
    with pytest.raises(SchemaError):
        derivation_from_json({"genus": 1})
    with pytest.raises(SchemaError):
        derivation_from_json({"genus": 1, "classes": {"a": [1]}, "scripts": []})


def test_parse_class_forms():
    assert parse_class("a2-a3", 4) == parse_class([0, 1, -1, 0, 0, 0, 0, 0], 4)
    for bad in ([1, 2], [1.5, 0, 0, 0], "a9", "a1 ?", [True, 0, 0, 0], "xyz"):
        with pytest.raises(SchemaError):
            parse_class(bad, 2)


@pytest.mark.parametrize("doc", [
    [],
    {"items": []},
    {"genus": 0, "items": []},
    {"genus": 2, "items": {}},
    {"genus": 2, "items": [{"kind": "twist"}]},
    {"genus": 2, "items": [{"kind": "bp", "basis": []}]},
    {"genus": 2, "items": [{"kind": "bp", "class": [1, 0, 0, 0], "sign": 3}]},
    {"genus": 2, "items": [{"kind": "bp", "class": [1, 0, 0, 0], "basis": [[[0, 1, 0, 0]]]}]},
    {"genus": 2, "items": [{"kind": "bp", "class": [1, 0, 0, 0], "basis": "x"}]},
    {"genus": 2, "items": [{"kind": "sip", "boundary": [[1, 0, 0, 0]]}]},
    {"genus": 2, "items": [{"kind": "ssip", "curve": {"basis": []}}]},
    {"genus": 2, "items": ["bp"]},
])
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        parse_factorization(doc)


def test_invariant_errors_pass_through():
    doc = {"genus": 2, "items": [{"kind": "bp", "class": [1, 0, 0, 0], "basis": [[[1, 0, 0, 0], [0, 0, 1, 0]]]}]}
    with pytest.raises(InvariantError):
        parse_factorization(doc)


def test_genus_mismatch_is_schema_error():
    with pytest.raises(SchemaError):
        parse_factorization(load_fixture("standard_sip"), genus=3)
    assert parse_factorization({"items": []}, genus=2) == TorelliFactorization(2)


def test_sep_item_and_string_classes():
    doc = {"genus": 2, "items": [{"kind": "sep", "basis": [["a1", "b1"]]},
                                 {"kind": "bp", "class": "a2", "basis": [["a1", "b1"]], "sign": -1}]}
    f = parse_factorization(doc)
    assert tau_word(f).render() == "1·a1^a2^b1"
    assert sigma_word(f).is_zero() is False


def test_sip_item_with_two_bp_only():
    item = parse_item({"kind": "sip", "boundary": ["-a4", "a2", "a3-a2", "a4-a3"],
                       "two_bp": [None, {"class": "-a2+a4", "basis": [["-a2+a3", "b3"]]}]}, 4)
    assert isinstance(item, SIPData) and item.five_bp is None
