"""Reachability graphs and the label automata derived from them.

Shared by both decision routes: the verifier needs the low subnet's behavior
(its state space is defined over it), the brute-force oracle needs the full
net's.  Construction refuses unbounded nets with the domination witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nfa import EPSILON, Nfa
from .petri import (DEFAULT_EXPLORATION_CAP, AssumptionError, LabeledPetriNet,
                    PetriNet, explore_markings)


@dataclass(frozen=True)
class ReachGraph:
    """Complete reachability graph; states are markings, events transitions."""

    nfa: Nfa

    @property
    def marking_count(self) -> int:
        return len(self.nfa.states)


def reachability_graph(net: PetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> ReachGraph:
    """Enumerate every reachable marking and firing arc; refuse unbounded nets."""
    exploration = explore_markings(net, cap)
    if exploration.domination_witness is not None:
        w = exploration.domination_witness
        raise AssumptionError(f"net is unbounded: firing {' '.join(w.path)} strictly dominates "
                              f"the marking reached after step {w.pump_start}")
    if not exploration.complete:
        raise AssumptionError(f"reachability exploration cap of {cap} markings exhausted")
    arcs = [(m, t, net.fire(m, t))
            for m in exploration.markings
            for t in net.enabled_transitions(m)]
    return ReachGraph(Nfa(exploration.markings, arcs, [net.initial_marking]))


def projected_label_language(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> Nfa:
    """Reachability graph emitting low labels; high transitions emit ε.

    With every state accepting, this recognizes exactly the low projection of
    the net's label language (prefix-closed by construction).
    """
    graph = reachability_graph(lpn.net, cap).nfa
    labeling = {t: lpn.label(t) if lpn.is_low(t) else EPSILON for t in lpn.net.transitions}
    return Nfa(graph.states, graph.arcs, graph.initial, labeling)


def low_label_language(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> Nfa:
    """Label language of the low-transition-induced subnet."""
    low = lpn.low_subnet()
    graph = reachability_graph(low.net, cap).nfa
    labeling = {t: low.label(t) for t in low.net.transitions}
    return Nfa(graph.states, graph.arcs, graph.initial, labeling)
