"""Brute-force non-interference oracle by direct language comparison.

Deliberately naive: take the full reachability graph, erase high labels, and
compare against the low subnet's label language with an explicit shortest
counterexample search.  This route never touches basis markings, minimal
explanations, or the unfolding, so it independently cross-checks the whole
pipeline.  The justification enumerator below plays the same oracle role for
basis markings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .explanations import minimality_filter
from .language import (LanguageCheckResult, bounded_language, epsilon_closure,
                       label_step, language_equal, word_in_language)
from .petri import (DEFAULT_EXPLORATION_CAP, InvalidNetError, LabeledPetriNet,
                    LabelWord, Marking, NetError, ParikhVector,
                    TransitionSequence, explore_markings)
from .reach import (ReachGraph, low_label_language, projected_label_language,
                    reachability_graph)
from .verifier import Verdict

__all__ = [
    "JustificationSet", "LanguageCheckResult", "ReachGraph", "bounded_language",
    "epsilon_closure", "justifications", "label_step", "language_equal",
    "low_label_language", "projected_label_language", "reachability_graph",
    "snni_oracle", "word_in_language",
]


@dataclass(frozen=True)
class JustificationSet:
    """Per low-label word: consistent low sequences with minimal high counts."""

    word: LabelWord
    pairs: frozenset[tuple[TransitionSequence, ParikhVector]]
    basis_markings: frozenset[Marking]
    complete: bool


def snni_oracle(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> Verdict:
    """Non-interference by definition: compare the two languages directly."""
    check = language_equal(projected_label_language(lpn, cap), low_label_language(lpn, cap))
    if not check.equal and check.counterexample_side == "right":
        # The low subnet's words embed into the full net's projection, so a
        # difference can only ever sit on the projected side.
        raise NetError("internal error: low-subnet word missing from the projected language: "
                       f"{check.counterexample}")
    return Verdict(snni=check.equal, counterexample=check.counterexample)


def _word_atoms(lpn: LabeledPetriNet, word: Sequence[str] | str) -> LabelWord:
    atoms = tuple(word)
    for a in atoms:
        if a not in lpn.low_labels:
            raise InvalidNetError(f"{a!r} is not a low label of this net")
    return atoms


def justifications(lpn: LabeledPetriNet, word: Sequence[str] | str,
                   cap: int | None = None) -> JustificationSet:
    """All (low sequence, minimal high count vector) pairs consistent with ``word``.

    Exhaustive search over interleavings, deduplicated on (matched length,
    low sequence, high counts); ``cap`` bounds the total interleaving length
    and trips the ``complete`` flag when exceeded.  The default cap is derived
    from the reachable-marking count, which bounds every high run, so the
    default search is exhaustive.  High firings after the word is fully
    matched are never minimal and are not explored.
    """
    atoms = _word_atoms(lpn, word)
    net = lpn.net
    high = lpn.high_transitions
    if cap is None:
        x = len(explore_markings(net, DEFAULT_EXPLORATION_CAP).markings)
        cap = len(atoms) + (len(atoms) + 1) * x
    zero = (0,) * len(high)
    raw: dict[TransitionSequence, set[ParikhVector]] = {}
    complete = True
    start = (net.initial_marking, 0, (), zero)
    stack = [start]
    seen = {(0, (), zero)}
    while stack:
        marking, matched, low_seq, high_vec = stack.pop()
        if matched == len(atoms):
            raw.setdefault(low_seq, set()).add(high_vec)
            continue
        if len(low_seq) + sum(high_vec) >= cap:
            complete = False
            continue
        for t in lpn.low_transitions:
            if lpn.label(t) == atoms[matched] and net.enabled(marking, t):
                key = (matched + 1, low_seq + (t,), high_vec)
                if key not in seen:
                    seen.add(key)
                    stack.append((net.fire(marking, t), matched + 1, low_seq + (t,), high_vec))
        for i, h in enumerate(high):
            if net.enabled(marking, h):
                bumped = high_vec[:i] + (high_vec[i] + 1,) + high_vec[i + 1:]
                key = (matched, low_seq, bumped)
                if key not in seen:
                    seen.add(key)
                    stack.append((net.fire(marking, h), matched, low_seq, bumped))

    pairs: set[tuple[TransitionSequence, ParikhVector]] = set()
    markings: set[Marking] = set()
    for low_seq, vectors in raw.items():
        for vec in minimality_filter(vectors):
            pairs.add((low_seq, vec))
            markings.add(_marking_equation(lpn, low_seq, vec))
    return JustificationSet(word=atoms, pairs=frozenset(pairs),
                            basis_markings=frozenset(markings), complete=complete)


def _marking_equation(lpn: LabeledPetriNet, low_seq: TransitionSequence,
                      high_vec: ParikhVector) -> Marking:
    new = list(lpn.net.initial_marking)
    for count, h in zip(high_vec, lpn.high_transitions):
        if count:
            for i, d in enumerate(lpn.net.incidence_column(h)):
                new[i] += count * d
    for t in low_seq:
        for i, d in enumerate(lpn.net.incidence_column(t)):
            new[i] += d
    return tuple(new)
