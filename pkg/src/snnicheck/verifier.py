"""Interference verifier: label-synchronized product of the unfolding with
the low-subnet behavior, and the resulting yes/no verdict.

Every tagged leaf of the unfolding stands for a low observation whose
enabling may depend on hidden high firings.  The verifier pairs the unfolding
with on-the-fly low-subnet exploration under equal labels; a tag that the
product can still reach has an indistinguishable low-only counterpart.  The
system is interference-free exactly when every tag is matched.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .basis import (DEFAULT_TREE_NODE_CAP, Brg, Tag, UbrgResult, build_brg,
                    build_ubrg, path_transitions)
from .language import language_equal
from .nfa import EPSILON, Nfa
from .petri import (DEFAULT_EXPLORATION_CAP, LabeledPetriNet, LabelWord,
                    Marking, NetError)
from .reach import low_label_language


def parallel_composition(g1: Nfa, g2: Nfa) -> Nfa:
    """Product automaton: synchronized moves on equal labels, solo moves on ε.

    Both automata must carry labelings.  States are pairs built on the fly
    from the initial pair; event payloads are ``(e1, e2)`` with ``None`` on
    the side that did not move.
    """
    if g1.labeling is None or g2.labeling is None:
        raise NetError("parallel composition requires labeled automata on both sides")
    initial = [(x1, x2) for x1 in g1.initial for x2 in g2.initial]
    states: list[tuple] = list(initial)
    seen = set(initial)
    arcs: list[tuple] = []
    labeling: dict = {}
    queue = deque(initial)
    while queue:
        x1, x2 = queue.popleft()
        moves = []
        for e1, d1 in g1.arcs_from(x1):
            a = g1.label_of(e1)
            if a == EPSILON:
                moves.append(((e1, None), (d1, x2), EPSILON))
            else:
                for e2, d2 in g2.arcs_from(x2):
                    if g2.label_of(e2) == a:
                        moves.append(((e1, e2), (d1, d2), a))
        for e2, d2 in g2.arcs_from(x2):
            if g2.label_of(e2) == EPSILON:
                moves.append(((None, e2), (x1, d2), EPSILON))
        for event, target, a in moves:
            labeling[event] = a
            arcs.append(((x1, x2), event, target))
            if target not in seen:
                seen.add(target)
                states.append(target)
                queue.append(target)
    return Nfa(states, arcs, initial, labeling)


@dataclass
class SvNode:
    node_id: int
    ubrg_node: int
    low_marking: Marking


@dataclass
class SvResult:
    """Verifier tree plus which unfolding tags it managed to match."""

    tree: Nfa
    root: int
    nodes: dict[int, SvNode]
    parent: dict[int, tuple[int, tuple[str, str]]]
    ubrg: UbrgResult
    alpha_matched: frozenset[Tag]
    beta_matched: frozenset[Tag]
    #: Unexpanded beta-leaf pairings whose (marking, low marking) pair repeats
    #: an ancestor pair; exactly these admit their beta tag.
    duplicate_pair_nodes: frozenset[int]
    #: Untagged nodes whose pair repeats an ancestor pair.  Diagnostics only;
    #: the matching rule above never consults them.
    plain_duplicate_nodes: frozenset[int]

    def pair_of(self, node_id: int) -> tuple[Marking, Marking]:
        node = self.nodes[node_id]
        return (self.ubrg.nodes[node.ubrg_node].marking, node.low_marking)


def build_sv(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP,
             ubrg: UbrgResult | None = None,
             node_cap: int = DEFAULT_TREE_NODE_CAP) -> SvResult:
    """Unfold, then pair each unfolding arc with an equally-labeled low firing.

    A beta-tagged pairing whose (marking, low marking) pair already occurred
    on its root path is recorded as a duplicate and left unexpanded; all other
    nodes expand through every label-matched (unfolding arc, low transition)
    combination.  Alpha tags are matched by mere reachability of their leaf;
    beta tags only by a recorded duplicate pairing.  Pass a prebuilt ``ubrg``
    to avoid unfolding twice.
    """
    if ubrg is None:
        ubrg = build_ubrg(lpn, cap, node_cap)
    low = lpn.low_subnet()
    low_net = low.net
    root = SvNode(0, ubrg.root, low_net.initial_marking)
    nodes: dict[int, SvNode] = {0: root}
    parent: dict[int, tuple[int, tuple[str, str]]] = {}
    arcs: list[tuple[int, tuple[str, str], int]] = []
    labeling: dict[tuple[str, str], str] = {}
    duplicate_pair_nodes: set[int] = set()
    plain_duplicate_nodes: set[int] = set()
    queue: deque[int] = deque([0])
    next_id = 1
    while queue:
        nid = queue.popleft()
        node = nodes[nid]
        unode = ubrg.nodes[node.ubrg_node]
        pair = (unode.marking, node.low_marking)
        repeated = False
        ancestor = parent.get(nid)
        while ancestor is not None:
            ancestor_id = ancestor[0]
            anc = nodes[ancestor_id]
            if (ubrg.nodes[anc.ubrg_node].marking, anc.low_marking) == pair:
                repeated = True
                break
            ancestor = parent.get(ancestor_id)
        if unode.tag is not None and unode.tag.kind == "beta":
            if repeated:
                duplicate_pair_nodes.add(nid)
                continue
        elif repeated:
            plain_duplicate_nodes.add(nid)
        for event, u_child in ubrg.tree.arcs_from(node.ubrg_node):
            a = lpn.label(event.transition)
            for t2 in low.low_transitions:
                if low.label(t2) != a or not low_net.enabled(node.low_marking, t2):
                    continue
                if next_id > node_cap:
                    raise NetError(f"verifier tree exceeds {node_cap} nodes; "
                                   "raise node_cap to continue")
                child = SvNode(next_id, u_child, low_net.fire(node.low_marking, t2))
                nodes[next_id] = child
                sv_event = (event.transition, t2)
                labeling[sv_event] = a
                parent[next_id] = (nid, sv_event)
                arcs.append((nid, sv_event, next_id))
                queue.append(next_id)
                next_id += 1

    alpha_matched = set()
    beta_matched = set()
    for nid, node in nodes.items():
        tag = ubrg.nodes[node.ubrg_node].tag
        if tag is None:
            continue
        if tag.kind == "alpha":
            alpha_matched.add(tag)
        elif nid in duplicate_pair_nodes:
            beta_matched.add(tag)
    tree = Nfa(list(nodes), arcs, [0], labeling)
    return SvResult(tree=tree, root=0, nodes=nodes, parent=parent, ubrg=ubrg,
                    alpha_matched=frozenset(alpha_matched),
                    beta_matched=frozenset(beta_matched),
                    duplicate_pair_nodes=frozenset(duplicate_pair_nodes),
                    plain_duplicate_nodes=frozenset(plain_duplicate_nodes))


@dataclass(frozen=True)
class Verdict:
    """Interference decision with the evidence that produced it.

    ``witness_words`` carries, per unmatched tag, the label word of that
    tag's unfolding path: a low observation with no low-only counterpart.
    ``counterexample`` is a shortest leaked low word found by a language
    difference search.  ``spurious_tags`` holds tags the per-path matching
    rule failed on even though the language comparison proved their
    observations covered; see the note in :func:`sv_verdict`.
    """

    snni: bool
    missing_alpha: frozenset[Tag] = frozenset()
    missing_beta: frozenset[Tag] = frozenset()
    witness_words: Mapping[Tag, LabelWord] = field(default_factory=dict)
    counterexample: LabelWord | None = None
    spurious_tags: frozenset[Tag] = frozenset()

    def __post_init__(self):
        if self.snni and (self.missing_alpha or self.missing_beta or self.counterexample):
            raise NetError("a positive verdict cannot carry interference evidence")


def sv_verdict(lpn: LabeledPetriNet, sv: SvResult, brg: Brg | None = None,
               cap: int = DEFAULT_EXPLORATION_CAP) -> Verdict:
    """Derive the verdict from an already-built verifier.

    The per-tag matching is the primary evidence, but on its own it is an
    incomplete decision rule: a beta pairing may need several traversals of
    its basis cycle before the low side returns to a repeated pair, and the
    path-local repeat check cannot see that far.  The verdict is therefore
    grounded in the exact criterion on the same objects: the basis graph's
    label language must coincide with the low subnet's.  Tags the matching
    missed while the languages are equal are reported as spurious rather
    than treated as leaks.
    """
    missing_alpha = sv.ubrg.alpha_tags - sv.alpha_matched
    missing_beta = sv.ubrg.beta_tags - sv.beta_matched
    if brg is None:
        brg = build_brg(lpn, cap)
    check = language_equal(brg.nfa, low_label_language(lpn, cap))
    if not check.equal and check.counterexample_side == "right":
        raise NetError("internal error: low-subnet word missing from the basis-graph "
                       f"language: {check.counterexample}")
    if check.equal:
        return Verdict(snni=True,
                       spurious_tags=frozenset(missing_alpha | missing_beta))
    witness_words: dict[Tag, LabelWord] = {}
    for tag in sorted(missing_alpha | missing_beta):
        leaf = sv.ubrg.tag_leaves[tag]
        events = sv.ubrg.root_path_events(leaf)
        witness_words[tag] = lpn.label_word(path_transitions(events))
    return Verdict(snni=False,
                   missing_alpha=frozenset(missing_alpha),
                   missing_beta=frozenset(missing_beta),
                   witness_words=witness_words,
                   counterexample=check.counterexample)


def decide_snni(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> Verdict:
    """Decide non-interference along the basis route.

    Builds the unfolding and the verifier, matches tags, and grounds the
    boolean in the basis-graph/low-subnet language comparison.
    """
    return sv_verdict(lpn, build_sv(lpn, cap), cap=cap)
