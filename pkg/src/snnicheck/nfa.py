"""Generic nondeterministic finite automaton with optional per-event labels.

States and events may be any hashable values.  Construction order of states
and arcs is preserved so that derived artifacts (exports, tag numbering) are
deterministic; membership checks use frozen sets built once.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .petri import InvalidNetError

#: Label of silent events in labeled automata.
EPSILON = ""


def _ordered_dedupe(items: Iterable) -> tuple:
    seen = set()
    out = []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


class Nfa:
    """States, arcs ``(source, event, target)``, initial states, optional labeling."""

    def __init__(self, states: Iterable[Hashable],
                 arcs: Iterable[tuple],
                 initial: Iterable[Hashable],
                 labeling: Mapping[Hashable, str] | None = None):
        self.states = _ordered_dedupe(states)
        self._state_set = frozenset(self.states)
        self.arcs = _ordered_dedupe(tuple(a) for a in arcs)
        self.initial = _ordered_dedupe(initial)
        for s, e, d in self.arcs:
            if s not in self._state_set or d not in self._state_set:
                raise InvalidNetError(f"arc ({s!r}, {e!r}, {d!r}) uses an undeclared state")
        for s in self.initial:
            if s not in self._state_set:
                raise InvalidNetError(f"initial state {s!r} is not declared")
        self.events = _ordered_dedupe(e for _, e, _ in self.arcs)
        self.labeling = dict(labeling) if labeling is not None else None
        self._out: dict[Hashable, list[tuple]] = {s: [] for s in self.states}
        for s, e, d in self.arcs:
            self._out[s].append((e, d))

    def has_state(self, state: Hashable) -> bool:
        return state in self._state_set

    def arcs_from(self, state: Hashable) -> tuple[tuple, ...]:
        """Outgoing ``(event, target)`` pairs in construction order."""
        if state not in self._state_set:
            raise InvalidNetError(f"unknown state {state!r}")
        return tuple(self._out[state])

    def label_of(self, event: Hashable) -> str:
        if self.labeling is None:
            raise InvalidNetError("automaton carries no labeling")
        return self.labeling[event]

    def __repr__(self) -> str:
        return f"Nfa(states={len(self.states)}, arcs={len(self.arcs)})"
