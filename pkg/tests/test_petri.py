from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from snnicheck.fixtures import (_DEMO_ARCS, demo_cyclic_high, demo_secure,
                                demo_unbounded)
from snnicheck.petri import (AssumptionError, FiringError, InvalidNetError,
                             LabeledPetriNet, PetriNet, check_assumptions,
                             parikh, project)

from conftest import BASIS_M2, BASIS_M4, marking_of


def test_enabled_at_initial(secure):
    m0 = secure.net.initial_marking
    assert secure.net.enabled(m0, "l5")
    assert not secure.net.enabled(m0, "l1")


def test_empty_preset_always_enabled():
    net = PetriNet(("p",), ("t",), [("t", "p")], (0,))
    assert net.enabled((0,), "t")
    assert net.enabled((5,), "t")


def test_enabled_unknown_transition(secure):
    with pytest.raises(InvalidNetError):
        secure.net.enabled(secure.net.initial_marking, "nope")


def test_fire_high_then_low(secure):
    m0 = secure.net.initial_marking
    after_h1 = secure.net.fire(m0, "h1")
    assert after_h1 == marking_of(secure, p2=1)
    assert secure.net.fire(m0, "l8") == BASIS_M4


def test_fire_self_loop_preserves_tokens():
    net = PetriNet(("p",), ("t",), [("p", "t"), ("t", "p")], (1,))
    assert net.fire((1,), "t") == (1,)


def test_fire_disabled_names_place(secure):
    with pytest.raises(FiringError) as exc:
        secure.net.fire(secure.net.initial_marking, "l1")
    assert exc.value.transition == "l1"
    assert exc.value.place == "p2"


def test_fire_sequence(secure):
    m0 = secure.net.initial_marking
    assert secure.net.fire_sequence(m0, ("h1", "l1", "l2")) == BASIS_M2
    assert secure.net.fire_sequence(m0, ()) == m0


def test_fire_sequence_reports_index(secure):
    with pytest.raises(FiringError) as exc:
        secure.net.fire_sequence(secure.net.initial_marking, ("l1",))
    assert exc.value.index == 0
    with pytest.raises(FiringError) as exc:
        secure.net.fire_sequence(secure.net.initial_marking, ("h1", "l1", "l1"))
    assert exc.value.index == 2


def test_parikh():
    assert parikh(("h1",), ("h1", "h2")) == (1, 0)
    assert parikh((), ("h1", "h2")) == (0, 0)
    assert parikh(("l1", "l2", "l1"), ("l1", "l2")) == (2, 1)
    with pytest.raises(InvalidNetError):
        parikh(("l9",), ("l1", "l2"))


def test_incidence_columns_match_declared_arcs(secure):
    # Assemble the incidence matrix independently from the raw arc list and
    # compare every firing against it.
    places = secure.net.places
    incidence = {t: [0] * len(places) for t in secure.net.transitions}
    for source, target in _DEMO_ARCS:
        if source in incidence:
            incidence[source][places.index(target)] += 1
        else:
            incidence[target][places.index(source)] -= 1
    for t in secure.net.transitions:
        assert secure.net.incidence_column(t) == tuple(incidence[t])
    for m in (secure.net.initial_marking, marking_of(secure, p2=1)):
        for t in secure.net.transitions:
            if secure.net.enabled(m, t):
                fired = secure.net.fire(m, t)
                assert fired == tuple(v + d for v, d in zip(m, incidence[t]))


def test_induced_subnet_low(secure):
    low = secure.net.induced_subnet(secure.low_transitions)
    m0 = low.initial_marking
    assert low.enabled(m0, "l5")
    assert low.fire_sequence(m0, ("l8", "l9")) == m0
    assert not low.enabled(m0, "l1")
    assert "h1" not in low.transitions


def test_induced_subnet_trivial(secure):
    same = secure.net.induced_subnet(secure.net.transitions)
    assert same.transitions == secure.net.transitions
    assert same.weight == secure.net.weight
    empty = secure.net.induced_subnet(())
    assert empty.transitions == ()
    assert empty.places == secure.net.places


def test_project():
    low = ("l1", "l2")
    assert project(("h1", "l1", "l2"), low) == ("l1", "l2")
    assert project(("h1", "l1", "l2"), ("h1",)) == ("h1",)
    assert project((), low) == ()


def test_label_word(secure):
    assert secure.label_word(("l1", "l2")) == ("a", "b")
    assert secure.label_word(("l8", "l9")) == ("a", "b")
    assert secure.label_word(()) == ()


_PROP_NET = demo_secure()
_any_sequence = st.lists(st.sampled_from(_PROP_NET.net.transitions), max_size=30)
_any_partition = st.sets(st.sampled_from(_PROP_NET.net.transitions))


@given(_any_sequence, _any_partition)
def test_projection_partition_reconstructs(sequence, keep):
    rest = set(_PROP_NET.net.transitions) - keep
    first = project(sequence, keep)
    second = project(sequence, rest)
    first_iter, second_iter = iter(first), iter(second)
    rebuilt = [next(first_iter) if item in keep else next(second_iter)
               for item in sequence]
    assert tuple(rebuilt) == tuple(sequence)
    assert len(first) + len(second) == len(sequence)


@given(_any_sequence)
def test_label_word_commutes_with_projection(sequence):
    projected_then_labeled = _PROP_NET.label_word(project(sequence, _PROP_NET.low_transitions))
    labeled_then_erased = tuple(a for a in _PROP_NET.label_word(sequence)
                                if a in _PROP_NET.low_labels)
    assert projected_then_labeled == labeled_then_erased


def test_assumptions_on_fixture(secure):
    report = check_assumptions(secure)
    assert report.ok
    assert report.bounded is True
    assert report.reachable_count == 9
    assert report.high_subnet_acyclic


def test_assumptions_unbounded():
    report = check_assumptions(demo_unbounded())
    assert report.bounded is False
    assert report.domination_witness.path == ("t",)
    assert report.domination_witness.pump_start == 0
    assert not report.ok


def test_assumptions_cyclic_high():
    report = check_assumptions(demo_cyclic_high())
    assert not report.high_subnet_acyclic
    assert report.high_cycle is not None
    assert report.high_cycle[0] == report.high_cycle[-1]
    assert not report.ok


def test_assumptions_cap_exhaustion():
    report = check_assumptions(demo_unbounded(), cap=1)
    # With a one-marking budget neither verdict may be claimed.
    assert report.bounded in (None, False)
    if report.bounded is None:
        assert not report.ok


def test_require_assumptions_refuses(secure):
    assert secure.require_assumptions().ok
    with pytest.raises(AssumptionError):
        demo_unbounded().require_assumptions()


def test_bounded_iff_no_domination_found():
    # A conservative net (tokens conserved) is found bounded; adding a
    # token-pumping transition flips the verdict with a witness.
    conservative = PetriNet(("p", "q"), ("t1", "t2"),
                            [("p", "t1"), ("t1", "q"), ("q", "t2"), ("t2", "p")], (1, 0))
    assert check_assumptions(LabeledPetriNet(conservative, {"t1": "a", "t2": "b"})).bounded is True
    pumping = PetriNet(("p", "q"), ("t1", "t2"),
                       [("p", "t1"), ("t1", "q"), ("t1", "p"), ("q", "t2"), ("t2", "p")],
                       (1, 0))
    report = check_assumptions(LabeledPetriNet(pumping, {"t1": "a", "t2": "b"}))
    assert report.bounded is False
    witness = report.domination_witness
    start = pumping.fire_sequence(pumping.initial_marking, witness.path[:witness.pump_start])
    end = pumping.fire_sequence(pumping.initial_marking, witness.path)
    assert start != end
    assert all(a <= b for a, b in zip(start, end))


def test_net_construction_validation():
    with pytest.raises(InvalidNetError):
        PetriNet(("p", "p"), ("t",), [], (0, 0))
    with pytest.raises(InvalidNetError):
        PetriNet(("p",), ("p",), [], (0,))
    with pytest.raises(InvalidNetError):
        PetriNet(("p",), ("t",), [("p", "p")], (0,))
    with pytest.raises(InvalidNetError):
        PetriNet(("p",), ("t",), [("p", "t", 0)], (0,))
    with pytest.raises(InvalidNetError):
        PetriNet(("p",), ("t",), [], (0, 1))
    with pytest.raises(InvalidNetError):
        PetriNet(("p",), ("t",), [], (-1,))


def test_labeling_validation(secure):
    net = secure.net
    with pytest.raises(InvalidNetError):
        LabeledPetriNet(net, {})  # not total
    labels = dict(secure.labeling)
    labels["l1"] = ""
    with pytest.raises(InvalidNetError):
        LabeledPetriNet(net, labels)
    with pytest.raises(InvalidNetError):
        LabeledPetriNet(net, secure.labeling, high_labels={"zz"})


def test_low_subnet_partition(secure):
    low = secure.low_subnet()
    assert low.high_transitions == ()
    assert set(low.net.transitions) == set(secure.low_transitions)
    assert low.alphabet == secure.low_labels
