"""Core Petri-net and labeled-net semantics.

Markings and Parikh vectors are plain tuples of non-negative integers,
indexed by the declaration order of places and transitions.  All types are
immutable after construction; operations are pure functions of their inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Marking = tuple[int, ...]
ParikhVector = tuple[int, ...]
TransitionSequence = tuple[str, ...]
LabelWord = tuple[str, ...]

#: Default ceiling on the number of distinct markings explored when checking
#: boundedness.  Exceeding it yields an "unknown" verdict, never a wrong one.
DEFAULT_EXPLORATION_CAP = 100_000


class NetError(Exception):
    """Base class for errors raised by this package."""


class InvalidNetError(NetError):
    """A net, marking, or identifier violates a structural requirement."""


class FiringError(NetError):
    """A transition was fired while not enabled."""

    def __init__(self, message: str, transition: str, place: str | None = None,
                 index: int | None = None):
        super().__init__(message)
        self.transition = transition
        self.place = place
        self.index = index


class AssumptionError(NetError):
    """Boundedness or high-subnet acyclicity could not be established."""


def _check_identifiers(kind: str, ids: Sequence[str]) -> tuple[str, ...]:
    out = tuple(ids)
    if len(set(out)) != len(out):
        dupes = sorted({x for x in out if out.count(x) > 1})
        raise InvalidNetError(f"duplicate {kind} identifiers: {dupes}")
    for x in out:
        if not isinstance(x, str) or not x:
            raise InvalidNetError(f"{kind} identifier must be a non-empty string, got {x!r}")
    return out


class PetriNet:
    """Place/transition net with weighted arcs and an initial marking.

    ``places`` and ``transitions`` keep declaration order; every marking and
    Parikh vector in this package is indexed by that order.  An arc exists
    exactly when its weight is positive.
    """

    def __init__(self, places: Sequence[str], transitions: Sequence[str],
                 arcs: Mapping[tuple[str, str], int] | Iterable[tuple],
                 initial_marking: Sequence[int]):
        self.places = _check_identifiers("place", places)
        self.transitions = _check_identifiers("transition", transitions)
        overlap = set(self.places) & set(self.transitions)
        if overlap:
            raise InvalidNetError(f"identifiers used as both place and transition: {sorted(overlap)}")
        self._place_index = {p: i for i, p in enumerate(self.places)}
        self._transition_index = {t: i for i, t in enumerate(self.transitions)}

        if isinstance(arcs, Mapping):
            arc_items = [(s, d, w) for (s, d), w in arcs.items()]
        else:
            arc_items = [a if len(a) == 3 else (a[0], a[1], 1) for a in (tuple(a) for a in arcs)]

        self.weight: dict[tuple[str, str], int] = {}
        for source, target, w in arc_items:
            if not isinstance(w, int) or w <= 0:
                raise InvalidNetError(f"arc ({source}, {target}) must have a positive integer weight, got {w!r}")
            if source in self._place_index and target in self._transition_index:
                pass
            elif source in self._transition_index and target in self._place_index:
                pass
            else:
                raise InvalidNetError(
                    f"arc ({source}, {target}) must connect a declared place and a declared transition")
            if (source, target) in self.weight:
                raise InvalidNetError(f"arc ({source}, {target}) declared twice")
            self.weight[(source, target)] = w

        self.initial_marking = self.check_marking(initial_marking)

        # Per-transition input/output/incidence vectors over the place order.
        self._pre: dict[str, Marking] = {}
        self._post: dict[str, Marking] = {}
        self._delta: dict[str, tuple[int, ...]] = {}
        for t in self.transitions:
            pre = tuple(self.weight.get((p, t), 0) for p in self.places)
            post = tuple(self.weight.get((t, p), 0) for p in self.places)
            self._pre[t] = pre
            self._post[t] = post
            self._delta[t] = tuple(o - i for i, o in zip(pre, post))

    def check_marking(self, marking: Sequence[int]) -> Marking:
        m = tuple(marking)
        if len(m) != len(self.places):
            raise InvalidNetError(f"marking has {len(m)} entries, net has {len(self.places)} places")
        for p, v in zip(self.places, m):
            if not isinstance(v, int) or v < 0:
                raise InvalidNetError(f"marking of place {p} must be a non-negative integer, got {v!r}")
        return m

    def check_transition(self, t: str) -> str:
        if t not in self._transition_index:
            raise InvalidNetError(f"unknown transition {t!r}")
        return t

    def place_index(self, p: str) -> int:
        if p not in self._place_index:
            raise InvalidNetError(f"unknown place {p!r}")
        return self._place_index[p]

    def input_weights(self, t: str) -> Marking:
        return self._pre[self.check_transition(t)]

    def output_weights(self, t: str) -> Marking:
        return self._post[self.check_transition(t)]

    def incidence_column(self, t: str) -> tuple[int, ...]:
        """Token change per place caused by firing ``t`` once."""
        return self._delta[self.check_transition(t)]

    def enabled(self, marking: Sequence[int], t: str) -> bool:
        """True iff every input place of ``t`` holds at least the arc weight."""
        pre = self._pre[self.check_transition(t)]
        return all(have >= need for have, need in zip(marking, pre))

    def deficient_place(self, marking: Sequence[int], t: str) -> str | None:
        """First input place (in declaration order) blocking ``t``, if any."""
        pre = self._pre[self.check_transition(t)]
        for p, have, need in zip(self.places, marking, pre):
            if have < need:
                return p
        return None

    def fire(self, marking: Sequence[int], t: str) -> Marking:
        """Fire ``t`` at ``marking`` and return the successor marking."""
        blocking = self.deficient_place(marking, t)
        if blocking is not None:
            raise FiringError(f"transition {t} is not enabled: place {blocking} lacks tokens",
                              transition=t, place=blocking)
        delta = self._delta[t]
        return tuple(v + d for v, d in zip(marking, delta))

    def fire_sequence(self, marking: Sequence[int], sequence: Sequence[str]) -> Marking:
        """Left fold of :meth:`fire`; the empty sequence returns ``marking``."""
        m = tuple(marking)
        for i, t in enumerate(sequence):
            blocking = self.deficient_place(m, t)
            if blocking is not None:
                raise FiringError(
                    f"step {i} of sequence is not enabled: transition {t} lacks tokens in place {blocking}",
                    transition=t, place=blocking, index=i)
            m = tuple(v + d for v, d in zip(m, self._delta[t]))
        return m

    def enabled_transitions(self, marking: Sequence[int],
                            among: Sequence[str] | None = None) -> Iterator[str]:
        """Transitions enabled at ``marking``, in declaration order."""
        for t in (self.transitions if among is None else among):
            if self.enabled(marking, t):
                yield t

    def induced_subnet(self, keep: Iterable[str]) -> PetriNet:
        """Subnet over the same places, keeping only the transitions in ``keep``."""
        keep_set = set(keep)
        unknown = keep_set - set(self.transitions)
        if unknown:
            raise InvalidNetError(f"unknown transitions in subnet selection: {sorted(unknown)}")
        kept = tuple(t for t in self.transitions if t in keep_set)
        arcs = {(s, d): w for (s, d), w in self.weight.items()
                if s in keep_set or d in keep_set}
        return PetriNet(self.places, kept, arcs, self.initial_marking)

    def __repr__(self) -> str:
        return (f"PetriNet(|P|={len(self.places)}, |T|={len(self.transitions)}, "
                f"arcs={len(self.weight)})")


def parikh(sequence: Sequence[str], index_set: Sequence[str]) -> ParikhVector:
    """Occurrence counts of ``sequence`` over the ordered ``index_set``."""
    order = {t: i for i, t in enumerate(index_set)}
    counts = [0] * len(order)
    for item in sequence:
        if item not in order:
            raise InvalidNetError(f"sequence item {item!r} outside the index set")
        counts[order[item]] += 1
    return tuple(counts)


def project(sequence: Sequence[str], keep: Iterable[str]) -> TransitionSequence:
    """Order-preserving erasure of items outside ``keep``."""
    keep_set = set(keep)
    return tuple(t for t in sequence if t in keep_set)


class LabeledPetriNet:
    """A Petri net whose transitions emit labels, split into low and high levels.

    Every transition carries exactly one non-empty label.  The label alphabet
    is partitioned by visibility: low labels are observable by everyone, high
    labels only by high-level users.  The transition partition follows the
    label partition.
    """

    def __init__(self, net: PetriNet, labeling: Mapping[str, str],
                 high_labels: Iterable[str] = ()):
        self.net = net
        missing = [t for t in net.transitions if t not in labeling]
        if missing:
            raise InvalidNetError(f"labeling must be total; unlabeled transitions: {missing}")
        extra = [t for t in labeling if t not in net._transition_index]
        if extra:
            raise InvalidNetError(f"labeling names unknown transitions: {sorted(extra)}")
        for t, a in labeling.items():
            if not isinstance(a, str) or not a:
                raise InvalidNetError(f"transition {t} must carry a non-empty label, got {a!r}")
        self.labeling = {t: labeling[t] for t in net.transitions}
        self.alphabet = frozenset(self.labeling.values())
        self.high_labels = frozenset(high_labels)
        unknown = self.high_labels - self.alphabet
        if unknown:
            raise InvalidNetError(f"high labels not used by any transition: {sorted(unknown)}")
        self.low_labels = self.alphabet - self.high_labels
        self.low_transitions = tuple(t for t in net.transitions
                                     if self.labeling[t] in self.low_labels)
        self.high_transitions = tuple(t for t in net.transitions
                                      if self.labeling[t] in self.high_labels)
        self._assumption_report: AssumptionReport | None = None
        self._explanation_cache: dict = {}

    def label(self, t: str) -> str:
        self.net.check_transition(t)
        return self.labeling[t]

    def label_word(self, sequence: Sequence[str]) -> LabelWord:
        """Word of label symbols emitted by firing ``sequence``."""
        return tuple(self.labeling[self.net.check_transition(t)] for t in sequence)

    def is_low(self, t: str) -> bool:
        return self.labeling[self.net.check_transition(t)] in self.low_labels

    def low_subnet(self) -> LabeledPetriNet:
        """Low-transition-induced subnet with the restricted labeling."""
        sub = self.net.induced_subnet(self.low_transitions)
        sub_labels = {t: self.labeling[t] for t in self.low_transitions}
        return LabeledPetriNet(sub, sub_labels, high_labels=())

    def high_subnet(self) -> PetriNet:
        return self.net.induced_subnet(self.high_transitions)

    def verify_assumptions(self, cap: int = DEFAULT_EXPLORATION_CAP) -> AssumptionReport:
        """Check boundedness and high-subnet acyclicity; cache a passing report."""
        if self._assumption_report is not None and self._assumption_report.ok:
            return self._assumption_report
        report = check_assumptions(self, cap)
        self._assumption_report = report
        return report

    def require_assumptions(self, cap: int = DEFAULT_EXPLORATION_CAP) -> AssumptionReport:
        """Raise :class:`AssumptionError` unless both standing checks pass."""
        report = self.verify_assumptions(cap)
        if not report.ok:
            raise AssumptionError(report.describe_failure())
        return report

    def __repr__(self) -> str:
        return (f"LabeledPetriNet({self.net!r}, low={len(self.low_transitions)}, "
                f"high={len(self.high_transitions)})")


def format_word(word: Sequence[str]) -> str:
    """Render a label word compactly; multi-character labels stay separated."""
    parts = tuple(word)
    if not parts:
        return "ε"
    if all(len(a) == 1 for a in parts):
        return "".join(parts)
    return " ".join(parts)


@dataclass(frozen=True)
class DominationWitness:
    """A firing path whose final marking strictly dominates an earlier one.

    Firing ``path`` from the initial marking passes, after ``pump_start``
    steps, through a marking that is componentwise <= the final marking and
    differs from it; repeating the pump segment grows tokens without bound.
    """

    path: TransitionSequence
    pump_start: int


@dataclass(frozen=True)
class AssumptionReport:
    """Outcome of the two standing checks required by every construction."""

    bounded: bool | None          # None = cap exhausted without a verdict
    reachable_count: int | None
    domination_witness: DominationWitness | None
    high_subnet_acyclic: bool
    high_cycle: tuple[str, ...] | None
    cap: int

    @property
    def ok(self) -> bool:
        return self.bounded is True and self.high_subnet_acyclic

    def describe_failure(self) -> str:
        problems = []
        if self.bounded is False:
            w = self.domination_witness
            problems.append(
                f"net is unbounded: firing {' '.join(w.path)} strictly dominates the marking "
                f"reached after step {w.pump_start}")
        elif self.bounded is None:
            problems.append(f"boundedness unknown: exploration cap of {self.cap} markings exhausted")
        if not self.high_subnet_acyclic:
            problems.append(
                f"high-transition-induced subnet has a cycle: {' -> '.join(self.high_cycle)}")
        return "; ".join(problems) if problems else "assumptions hold"


@dataclass(frozen=True)
class ExplorationResult:
    """Markings found by bounded exploration, in discovery order."""

    markings: tuple[Marking, ...]
    domination_witness: DominationWitness | None
    complete: bool


def explore_markings(net: PetriNet, cap: int) -> ExplorationResult:
    """Breadth-first marking exploration with strict-domination detection.

    Expands each distinct marking once (coverability-style tree with exact
    duplicates pruned) and compares every fresh marking against the markings
    on its own discovery path.  A strict domination proves unboundedness by
    firing monotonicity; frontier exhaustion without one proves boundedness
    with an exact reachable-marking count.
    """
    root = net.initial_marking
    # node = (marking, parent node or None, transition fired to reach it)
    root_node = (root, None, None)
    seen: set[Marking] = {root}
    order: list[Marking] = [root]
    queue: deque = deque([root_node])
    while queue:
        if len(seen) > cap:
            return ExplorationResult(tuple(order), None, complete=False)
        node = queue.popleft()
        marking = node[0]
        for t in net.transitions:
            if not net.enabled(marking, t):
                continue
            successor = net.fire(marking, t)
            # Walk the discovery path looking for a strictly dominated ancestor.
            ancestor = node
            depth_from_child = 1
            while ancestor is not None:
                m_anc = ancestor[0]
                if m_anc != successor and all(a <= b for a, b in zip(m_anc, successor)):
                    path: list[str] = [t]
                    back = node
                    while back[1] is not None:
                        path.append(back[2])
                        back = back[1]
                    path.reverse()
                    witness = DominationWitness(tuple(path), len(path) - depth_from_child)
                    return ExplorationResult(tuple(order), witness, complete=False)
                ancestor = ancestor[1]
                depth_from_child += 1
            if successor in seen:
                continue
            seen.add(successor)
            order.append(successor)
            queue.append((successor, node, t))
    return ExplorationResult(tuple(order), None, complete=True)


def _high_subnet_cycle(lpn: LabeledPetriNet) -> tuple[str, ...] | None:
    """Find a directed cycle in the bipartite graph of the high-induced subnet."""
    adjacency: dict[str, list[str]] = {x: [] for x in lpn.net.places + lpn.high_transitions}
    for t in lpn.high_transitions:
        for p in lpn.net.places:
            if lpn.net.weight.get((p, t), 0) > 0:
                adjacency[p].append(t)
            if lpn.net.weight.get((t, p), 0) > 0:
                adjacency[t].append(p)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {x: WHITE for x in adjacency}
    for start in adjacency:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, Iterator[str]]] = [(start, iter(adjacency[start]))]
        color[start] = GRAY
        path = [start]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    i = path.index(nxt)
                    return tuple(path[i:] + [nxt])
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    path.append(nxt)
                    stack.append((nxt, iter(adjacency[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                path.pop()
                stack.pop()
    return None


def check_assumptions(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> AssumptionReport:
    """Verify the two standing assumptions: boundedness and an acyclic high subnet."""
    if cap <= 0:
        raise InvalidNetError(f"exploration cap must be positive, got {cap}")
    cycle = _high_subnet_cycle(lpn)
    exploration = explore_markings(lpn.net, cap)
    if exploration.domination_witness is not None:
        bounded: bool | None = False
        count = None
    elif exploration.complete:
        bounded = True
        count = len(exploration.markings)
    else:
        bounded = None
        count = None
    return AssumptionReport(bounded=bounded, reachable_count=count,
                            domination_witness=exploration.domination_witness,
                            high_subnet_acyclic=cycle is None, high_cycle=cycle,
                            cap=cap)
