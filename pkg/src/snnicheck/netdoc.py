"""Net document format: JSON with an explicit schema version.

A document lists places with initial tokens, transitions with a label and a
visibility level ("low" or "high"), and weighted place/transition arcs.
Parsing validates the document shape with field-path diagnostics, then hands
off to the core constructors so every structural invariant is enforced at
load time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .petri import LabeledPetriNet, NetError, PetriNet

SCHEMA_VERSION = "1"
_LEVELS = ("low", "high")


class NetDocumentError(NetError):
    """Malformed or inconsistent net document; ``path`` names the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class PlaceSpec:
    id: str
    initial_tokens: int = 0


@dataclass(frozen=True)
class TransitionSpec:
    id: str
    label: str
    level: str


@dataclass(frozen=True)
class ArcSpec:
    source: str
    target: str
    weight: int = 1


@dataclass(frozen=True)
class NetDocument:
    schema_version: str
    places: tuple[PlaceSpec, ...]
    transitions: tuple[TransitionSpec, ...]
    arcs: tuple[ArcSpec, ...]

    def to_lpn(self) -> LabeledPetriNet:
        """Build the validated labeled net this document describes."""
        levels_by_label: dict[str, set[str]] = {}
        for i, t in enumerate(self.transitions):
            levels_by_label.setdefault(t.label, set()).add(t.level)
        for label, levels in sorted(levels_by_label.items()):
            if len(levels) > 1:
                raise NetDocumentError(
                    f"label {label!r} is declared both low and high; "
                    "the low and high alphabets must be disjoint", "transitions")
        net = PetriNet(places=[p.id for p in self.places],
                       transitions=[t.id for t in self.transitions],
                       arcs=[(a.source, a.target, a.weight) for a in self.arcs],
                       initial_marking=[p.initial_tokens for p in self.places])
        labeling = {t.id: t.label for t in self.transitions}
        high = {t.label for t in self.transitions if t.level == "high"}
        return LabeledPetriNet(net, labeling, high)

    @classmethod
    def from_lpn(cls, lpn: LabeledPetriNet) -> NetDocument:
        places = tuple(PlaceSpec(p, tok) for p, tok in zip(lpn.net.places, lpn.net.initial_marking))
        transitions = tuple(
            TransitionSpec(t, lpn.label(t), "low" if lpn.is_low(t) else "high")
            for t in lpn.net.transitions)
        arcs = tuple(ArcSpec(s, d, w) for (s, d), w in lpn.net.weight.items())
        return cls(SCHEMA_VERSION, places, transitions, arcs)

    def to_json(self) -> str:
        """Canonical rendering: fixed key order, two-space indent, final newline."""
        payload = {
            "schema_version": self.schema_version,
            "places": [{"id": p.id, "initial_tokens": p.initial_tokens} for p in self.places],
            "transitions": [{"id": t.id, "label": t.label, "level": t.level}
                            for t in self.transitions],
            "arcs": [{"from": a.source, "to": a.target, "weight": a.weight} for a in self.arcs],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str | bytes) -> NetDocument:
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise NetDocumentError(f"document is not valid UTF-8: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NetDocumentError(
                f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        return cls.from_object(data)

    @classmethod
    def from_object(cls, data: Any) -> NetDocument:
        if not isinstance(data, dict):
            raise NetDocumentError("document root must be an object")
        known = {"schema_version", "places", "transitions", "arcs"}
        unknown = set(data) - known
        if unknown:
            raise NetDocumentError(f"unknown fields: {sorted(unknown)}")
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise NetDocumentError(f"expected {SCHEMA_VERSION!r}, got {version!r}", "schema_version")
        places = tuple(_place(i, entry) for i, entry in enumerate(_array(data, "places")))
        transitions = tuple(_transition(i, entry)
                            for i, entry in enumerate(_array(data, "transitions")))
        arcs = tuple(_arc(i, entry) for i, entry in enumerate(_array(data, "arcs")))
        doc = cls(SCHEMA_VERSION, places, transitions, arcs)
        _check_arc_endpoints(doc)
        return doc


def _array(data: dict, key: str) -> list:
    value = data.get(key)
    if not isinstance(value, list):
        raise NetDocumentError("must be an array", key)
    return value


def _fields(path: str, entry: Any, required: dict[str, type], optional: dict[str, Any]) -> dict:
    if not isinstance(entry, dict):
        raise NetDocumentError("must be an object", path)
    unknown = set(entry) - set(required) - set(optional)
    if unknown:
        raise NetDocumentError(f"unknown fields: {sorted(unknown)}", path)
    out = {}
    for name, kind in required.items():
        if name not in entry:
            raise NetDocumentError(f"missing field {name!r}", path)
        value = entry[name]
        if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
            raise NetDocumentError(f"must be of type {kind.__name__}", f"{path}.{name}")
        out[name] = value
    for name, default in optional.items():
        value = entry.get(name, default)
        if not isinstance(value, type(default)) or isinstance(value, bool):
            raise NetDocumentError(f"must be of type {type(default).__name__}", f"{path}.{name}")
        out[name] = value
    return out


def _place(i: int, entry: Any) -> PlaceSpec:
    f = _fields(f"places[{i}]", entry, {"id": str}, {"initial_tokens": 0})
    if f["initial_tokens"] < 0:
        raise NetDocumentError("must be non-negative", f"places[{i}].initial_tokens")
    return PlaceSpec(f["id"], f["initial_tokens"])


def _transition(i: int, entry: Any) -> TransitionSpec:
    f = _fields(f"transitions[{i}]", entry, {"id": str, "label": str, "level": str}, {})
    if f["level"] not in _LEVELS:
        raise NetDocumentError(f"must be one of {_LEVELS}, got {f['level']!r}",
                               f"transitions[{i}].level")
    if not f["label"]:
        raise NetDocumentError("must be a non-empty label", f"transitions[{i}].label")
    return TransitionSpec(f["id"], f["label"], f["level"])


def _arc(i: int, entry: Any) -> ArcSpec:
    f = _fields(f"arcs[{i}]", entry, {"from": str, "to": str}, {"weight": 1})
    if f["weight"] < 1:
        raise NetDocumentError("must be at least 1", f"arcs[{i}].weight")
    return ArcSpec(f["from"], f["to"], f["weight"])


def _check_arc_endpoints(doc: NetDocument) -> None:
    place_ids = {p.id for p in doc.places}
    transition_ids = {t.id for t in doc.transitions}
    for key, declared in (("places", doc.places), ("transitions", doc.transitions)):
        ids = [e.id for e in declared]
        if len(set(ids)) != len(ids):
            dupes = sorted({x for x in ids if ids.count(x) > 1})
            raise NetDocumentError(f"duplicate identifiers: {dupes}", key)
    for i, a in enumerate(doc.arcs):
        for end, name in ((a.source, "from"), (a.target, "to")):
            if end not in place_ids and end not in transition_ids:
                raise NetDocumentError(f"undeclared identifier {end!r}", f"arcs[{i}].{name}")
        if (a.source in place_ids) == (a.target in place_ids):
            kind = "places" if a.source in place_ids else "transitions"
            raise NetDocumentError(f"connects two {kind}; arcs must join a place "
                                   "and a transition", f"arcs[{i}]")


def parse_net(document: str | bytes) -> LabeledPetriNet:
    """Parse and fully validate a net document."""
    return NetDocument.from_json(document).to_lpn()


def serialize_net(lpn: LabeledPetriNet) -> str:
    """Canonical document text for a labeled net."""
    return NetDocument.from_lpn(lpn).to_json()
