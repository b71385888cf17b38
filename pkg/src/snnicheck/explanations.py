"""High-sequence explanations: which hidden firings enable a low transition.

An explanation of a low transition ``t`` at marking ``m`` is a sequence of
high transitions whose firing at ``m`` enables ``t``.  Only the Parikh-minimal
count vectors of such sequences matter downstream; they are computed by a
breadth-first search over count vectors that prunes anything dominating an
explanation already found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .petri import (DEFAULT_EXPLORATION_CAP, InvalidNetError, LabeledPetriNet,
                    Marking, ParikhVector, TransitionSequence, parikh)


@dataclass(frozen=True)
class Explanation:
    """A firable high-transition sequence together with its count vector."""

    sequence: TransitionSequence
    evector: ParikhVector


@dataclass(frozen=True)
class MinimalExplanationSet:
    """All Parikh-minimal explanation vectors of one (marking, transition) query."""

    marking: Marking
    transition: str
    evectors: frozenset[ParikhVector]
    witnesses: Mapping[ParikhVector, TransitionSequence]


def _strictly_below(a: ParikhVector, b: ParikhVector) -> bool:
    return a != b and all(x <= y for x, y in zip(a, b))


def minimality_filter(candidates: Iterable[ParikhVector]) -> set[ParikhVector]:
    """Keep exactly the vectors not strictly dominated by another candidate."""
    pool = {tuple(v) for v in candidates}
    return {v for v in pool if not any(_strictly_below(w, v) for w in pool)}


def _check_low_query(lpn: LabeledPetriNet, m: Sequence[int], t: str) -> Marking:
    marking = lpn.net.check_marking(m)
    lpn.net.check_transition(t)
    if not lpn.is_low(t):
        raise InvalidNetError(f"explanations are defined for low transitions only, {t} is high")
    return marking


def explanations_bounded(lpn: LabeledPetriNet, m: Sequence[int], t: str,
                         len_cap: int) -> set[Explanation]:
    """Enumerate every high sequence of length <= ``len_cap`` enabling ``t`` at ``m``.

    Exhaustive (hence oracle-grade) whenever ``len_cap`` covers the longest
    firable high sequence, which exists under the standing assumptions.
    """
    marking = _check_low_query(lpn, m, t)
    if len_cap <= 0:
        raise InvalidNetError(f"length cap must be positive, got {len_cap}")
    net = lpn.net
    high = lpn.high_transitions
    results: set[Explanation] = set()
    stack: list[tuple[Marking, TransitionSequence]] = [(marking, ())]
    while stack:
        current, seq = stack.pop()
        if net.enabled(current, t):
            results.add(Explanation(seq, parikh(seq, high)))
        if len(seq) >= len_cap:
            continue
        for h in high:
            if net.enabled(current, h):
                stack.append((net.fire(current, h), seq + (h,)))
    return results


def minimal_e_vectors(lpn: LabeledPetriNet, m: Sequence[int], t: str,
                      cap: int = DEFAULT_EXPLORATION_CAP) -> MinimalExplanationSet:
    """Compute the Parikh-minimal explanation vectors of ``t`` at ``m``.

    Levels of the search correspond to total firing counts, so any vector
    dominating them strictly is met later and can be pruned; what remains when
    the frontier empties is exactly the minimal set, each vector paired with
    its first witness sequence in search order.  Termination needs both
    standing assumptions, which are verified (and the report cached) before
    the search runs.
    """
    marking = _check_low_query(lpn, m, t)
    lpn.require_assumptions(cap)
    key = (marking, t)
    cached = lpn._explanation_cache.get(key)
    if cached is not None:
        return cached

    net = lpn.net
    high = lpn.high_transitions
    zero = (0,) * len(high)
    found: dict[ParikhVector, TransitionSequence] = {}
    level: list[tuple[ParikhVector, Marking, TransitionSequence]] = [(zero, marking, ())]
    visited = {zero}
    while level:
        next_level: list[tuple[ParikhVector, Marking, TransitionSequence]] = []
        for vector, current, seq in level:
            # A vector pruned here was generated before the dominating
            # explanation surfaced later in the same level pass.
            if any(_strictly_below(f, vector) for f in found):
                continue
            if net.enabled(current, t):
                found[vector] = seq
                continue
            for i, h in enumerate(high):
                if not net.enabled(current, h):
                    continue
                extended = vector[:i] + (vector[i] + 1,) + vector[i + 1:]
                if extended in visited:
                    continue
                if any(_strictly_below(f, extended) for f in found):
                    continue
                visited.add(extended)
                next_level.append((extended, net.fire(current, h), seq + (h,)))
        level = next_level

    result = MinimalExplanationSet(marking=marking, transition=t,
                                   evectors=frozenset(found), witnesses=dict(found))
    lpn._explanation_cache[key] = result
    return result
