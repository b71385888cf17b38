"""Full analysis runs: pipeline verdict, graph sizes, and timings in one record."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping

from .basis import Tag, build_brg, build_ubrg
from .language import language_equal
from .petri import (DEFAULT_EXPLORATION_CAP, AssumptionReport, LabeledPetriNet,
                    LabelWord, format_word)
from .reach import low_label_language, projected_label_language
from .verifier import Verdict, build_sv, sv_verdict


@dataclass
class AnalysisReport:
    """Everything one analysis run produced, ready for rendering."""

    snni: bool
    verdict: Verdict
    alpha_tags: frozenset[Tag]
    beta_tags: frozenset[Tag]
    alpha_matched: frozenset[Tag]
    beta_matched: frozenset[Tag]
    witness_words: Mapping[Tag, LabelWord]
    leaked_word: LabelWord | None
    brg_states: int
    ubrg_nodes: int
    sv_nodes: int
    reachable_markings: int
    low_reachable_markings: int
    assumptions: AssumptionReport
    cap: int
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        """JSON-ready view; tag sets and words are rendered deterministically."""
        return {
            "snni": self.snni,
            "alpha_tags": [str(t) for t in sorted(self.alpha_tags)],
            "beta_tags": [str(t) for t in sorted(self.beta_tags)],
            "alpha_matched": [str(t) for t in sorted(self.alpha_matched)],
            "beta_matched": [str(t) for t in sorted(self.beta_matched)],
            "missing_alpha": [str(t) for t in sorted(self.verdict.missing_alpha)],
            "missing_beta": [str(t) for t in sorted(self.verdict.missing_beta)],
            "spurious_tags": [str(t) for t in sorted(self.verdict.spurious_tags)],
            "witness_words": {str(t): list(w) for t, w in sorted(self.witness_words.items())},
            "leaked_word": list(self.leaked_word) if self.leaked_word is not None else None,
            "sizes": {
                "brg_states": self.brg_states,
                "ubrg_nodes": self.ubrg_nodes,
                "sv_nodes": self.sv_nodes,
                "reachable_markings": self.reachable_markings,
                "low_reachable_markings": self.low_reachable_markings,
            },
            "assumptions": {
                "bounded": self.assumptions.bounded,
                "high_subnet_acyclic": self.assumptions.high_subnet_acyclic,
            },
            "cap": self.cap,
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }

    def to_text(self) -> str:
        lines = [f"verdict: {'SNNI' if self.snni else 'NOT SNNI'}"]
        lines.append(f"unfolding tags: alpha={_tags(self.alpha_tags)} beta={_tags(self.beta_tags)}")
        lines.append(f"matched tags:   alpha={_tags(self.alpha_matched)} beta={_tags(self.beta_matched)}")
        for tag in sorted(self.verdict.missing_alpha | self.verdict.missing_beta):
            word = self.witness_words.get(tag)
            lines.append(f"unmatched {tag}: low observation {format_word(word)} "
                         "has no low-only counterpart")
        if self.verdict.spurious_tags:
            lines.append("tags unmatched by the per-path rule but covered by the "
                         "language check: " + _tags(self.verdict.spurious_tags))
        if self.leaked_word is not None:
            lines.append(f"leaked low word (shortest): {format_word(self.leaked_word)}")
        lines.append(f"sizes: reachable={self.reachable_markings} "
                     f"low-reachable={self.low_reachable_markings} brg={self.brg_states} "
                     f"ubrg={self.ubrg_nodes} sv={self.sv_nodes}")
        lines.append("timings: " + " ".join(f"{k}={v * 1000:.1f}ms"
                                            for k, v in self.timings.items()))
        return "\n".join(lines) + "\n"


def _tags(tags: frozenset[Tag]) -> str:
    return "{" + ", ".join(str(t) for t in sorted(tags)) + "}"


def analyze(lpn: LabeledPetriNet, cap: int = DEFAULT_EXPLORATION_CAP) -> AnalysisReport:
    """Run the whole pipeline and collect the report.

    When the verdict is negative, the shortest leaked low word is computed by
    the brute-force language difference search on top of the tag evidence.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    assumptions = lpn.require_assumptions(cap)
    timings["assumptions"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    brg = build_brg(lpn, cap)
    timings["brg"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    ubrg = build_ubrg(lpn, cap)
    timings["ubrg"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    sv = build_sv(lpn, cap, ubrg=ubrg)
    verdict = sv_verdict(lpn, sv, brg=brg, cap=cap)
    timings["sv"] = time.perf_counter() - t0

    # The leaked word in the report comes from the full-net difference search,
    # independently of the basis-route counterexample already in the verdict.
    t0 = time.perf_counter()
    low_language = low_label_language(lpn, cap)
    leaked = None
    if not verdict.snni:
        check = language_equal(projected_label_language(lpn, cap), low_language)
        leaked = check.counterexample
    timings["languages"] = time.perf_counter() - t0

    return AnalysisReport(
        snni=verdict.snni, verdict=verdict,
        alpha_tags=sv.ubrg.alpha_tags, beta_tags=sv.ubrg.beta_tags,
        alpha_matched=sv.alpha_matched, beta_matched=sv.beta_matched,
        witness_words=verdict.witness_words, leaked_word=leaked,
        brg_states=len(brg.nfa.states), ubrg_nodes=len(sv.ubrg.nodes),
        sv_nodes=len(sv.nodes), reachable_markings=assumptions.reachable_count,
        low_reachable_markings=len(low_language.states),
        assumptions=assumptions, cap=cap, timings=timings)
