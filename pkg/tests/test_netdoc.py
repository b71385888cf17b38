from __future__ import annotations

import json

import pytest

from snnicheck.fixtures import demo_secure, fixture_document
from snnicheck.netdoc import (NetDocument, NetDocumentError, parse_net,
                              serialize_net)


def test_parse_fixture_document():
    lpn = parse_net(fixture_document("secure"))
    assert len(lpn.net.places) == 9
    assert len(lpn.net.transitions) == 11
    assert set(lpn.high_transitions) == {"h1", "h2"}
    assert lpn.high_labels == {"f", "g"}
    assert lpn.net.initial_marking == (1, 0, 0, 0, 0, 0, 0, 0, 0)


def test_parse_accepts_bytes():
    lpn = parse_net(fixture_document("secure").encode())
    assert len(lpn.net.transitions) == 11


def test_roundtrip_is_identity():
    text = fixture_document("leaky")
    doc = NetDocument.from_json(text)
    assert doc.to_json() == text
    assert serialize_net(doc.to_lpn()) == text


def test_roundtrip_through_lpn():
    lpn = demo_secure()
    again = parse_net(serialize_net(lpn))
    assert again.net.places == lpn.net.places
    assert again.net.transitions == lpn.net.transitions
    assert again.net.weight == lpn.net.weight
    assert again.labeling == lpn.labeling
    assert again.high_labels == lpn.high_labels


def _doc(**overrides):
    base = {
        "schema_version": "1",
        "places": [{"id": "p1", "initial_tokens": 1}, {"id": "p2"}],
        "transitions": [{"id": "t1", "label": "a", "level": "low"},
                        {"id": "t2", "label": "f", "level": "high"}],
        "arcs": [{"from": "p1", "to": "t1"}, {"from": "t1", "to": "p2"},
                 {"from": "p2", "to": "t2"}],
    }
    base.update(overrides)
    return json.dumps(base)


def test_weight_defaults_to_one():
    lpn = parse_net(_doc())
    assert lpn.net.weight[("p1", "t1")] == 1


def test_label_on_both_levels_rejected():
    bad = _doc(transitions=[{"id": "t1", "label": "a", "level": "low"},
                            {"id": "t2", "label": "a", "level": "high"}])
    with pytest.raises(NetDocumentError, match="both low and high"):
        parse_net(bad)


def test_place_to_place_arc_rejected():
    bad = _doc(arcs=[{"from": "p1", "to": "p2"}])
    with pytest.raises(NetDocumentError, match="arcs must join"):
        parse_net(bad)


def test_undeclared_arc_endpoint_rejected():
    bad = _doc(arcs=[{"from": "p1", "to": "t9"}])
    with pytest.raises(NetDocumentError, match="arcs\\[0\\]"):
        parse_net(bad)


def test_bad_schema_version():
    with pytest.raises(NetDocumentError, match="schema_version"):
        parse_net(_doc(schema_version="7"))


def test_bad_level_value():
    bad = _doc(transitions=[{"id": "t1", "label": "a", "level": "medium"}])
    with pytest.raises(NetDocumentError, match="level"):
        parse_net(bad)


def test_missing_field_diagnostics():
    bad = _doc(transitions=[{"id": "t1", "level": "low"}])
    with pytest.raises(NetDocumentError, match="transitions\\[0\\]"):
        parse_net(bad)


def test_unknown_field_rejected():
    bad = _doc(places=[{"id": "p1", "tokens": 1}, {"id": "p2"}])
    with pytest.raises(NetDocumentError, match="unknown fields"):
        parse_net(bad)


def test_negative_tokens_rejected():
    bad = _doc(places=[{"id": "p1", "initial_tokens": -1}, {"id": "p2"}])
    with pytest.raises(NetDocumentError, match="non-negative"):
        parse_net(bad)


def test_invalid_json_reports_position():
    with pytest.raises(NetDocumentError, match="line 1"):
        parse_net("{not json")


def test_duplicate_ids_rejected_at_load():
    bad = _doc(places=[{"id": "p1"}, {"id": "p1"}])
    with pytest.raises(NetDocumentError, match="duplicate"):
        parse_net(bad)
    bad = _doc(transitions=[{"id": "t1", "label": "a", "level": "low"},
                            {"id": "t1", "label": "b", "level": "low"}])
    with pytest.raises(NetDocumentError, match="duplicate"):
        parse_net(bad)


def test_zero_weight_rejected():
    bad = _doc(arcs=[{"from": "p1", "to": "t1", "weight": 0}])
    with pytest.raises(NetDocumentError, match="at least 1"):
        parse_net(bad)
