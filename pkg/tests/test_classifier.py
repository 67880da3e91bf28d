import pytest
from hypothesis import given, strategies as st

from forcibly.classifier import (
    classify,
    classify_forcibly_bicyclic,
    classify_forcibly_tree,
    classify_forcibly_unicyclic,
    cross_check,
    matching_families,
)
from forcibly.sequence import is_graphic, iter_sequences, parse_sequence

from .oracles import disconnected_realization_exists

CLASSES = {
    "tree": (classify_forcibly_tree, -2, 2),
    "unicyclic": (classify_forcibly_unicyclic, 0, 3),
    "bicyclic": (classify_forcibly_bicyclic, 2, 4),
}


@pytest.mark.parametrize(
    "text, fn, decision, family",
    [
        ("3,3,1^4", classify_forcibly_tree, True, "T-double-star"),
        ("2,2,1,1", classify_forcibly_tree, True, "T-double-star"),
        ("5,1^5", classify_forcibly_tree, True, "T-star"),
        ("2,2,2,1,1", classify_forcibly_tree, False, None),
        ("2^5", classify_forcibly_unicyclic, True, "U1"),
        ("3,2^4,1", classify_forcibly_unicyclic, True, "U1"),
        ("4,2,2,1,1", classify_forcibly_unicyclic, True, "U3"),
        ("5,2^3,1^3", classify_forcibly_unicyclic, True, "U2"),
        ("2^6", classify_forcibly_unicyclic, False, None),
        ("4,2^4,1^2", classify_forcibly_unicyclic, False, None),
        ("3,3,2,2", classify_forcibly_bicyclic, True, "B5"),
        ("5,2^4,1", classify_forcibly_bicyclic, True, "B2"),
        ("4,2^6", classify_forcibly_bicyclic, True, "B1"),
        ("5,2^6,1", classify_forcibly_bicyclic, True, "B1"),
        ("6,2^5,1^2", classify_forcibly_bicyclic, True, "B3"),
        ("5,3,2^3,1^2", classify_forcibly_bicyclic, True, "B4"),
        ("4,3,3,2,2,2,1,1", classify_forcibly_bicyclic, False, None),
    ],
)
def test_examples(text, fn, decision, family):
    v = fn(parse_sequence(text))
    assert (v.decision, v.family) == (decision, family)


def test_reasons():
    assert classify_forcibly_unicyclic((7,)).reason == "not graphic"
    assert classify_forcibly_unicyclic((3, 3, 1, 1)).reason == "not graphic"
    assert classify_forcibly_unicyclic((1, 1)).reason == "sum mismatch"
    assert classify_forcibly_tree((0,)).family == "T-star"
    assert classify_forcibly_tree((0, 0)).reason == "sum mismatch"
    assert classify_forcibly_unicyclic((2, 2, 2, 2, 2, 2)).reason == "no family matched"


def test_auto_dispatch():
    assert classify("2^5")[0] == "unicyclic"
    assert classify("3,3,2,2")[0] == "bicyclic"
    assert classify("1,1")[0] == "tree"
    cls, v = classify("3,3,3,3")
    assert cls is None and v.reason == "sum mismatch"
    cls, v = classify("7")
    assert cls is None and v.reason == "not graphic"
    assert classify("2^5", "tree")[1].reason == "sum mismatch"


def test_family_params():
    assert matching_families("5,3,2,1^4", "unicyclic") == [("U3", {"r": 5, "s": 3, "t": 2, "n": 7})]
    assert matching_families("4,3,3,2,1,1", "bicyclic")[0][0] == "B5"


@pytest.mark.parametrize("cls", sorted(CLASSES))
def test_closed_form_matches_partition_oracle(cls):
    # independent of the enumeration kernel: a realization with the class's
    # edge count has the class iff connected, and a disconnected one exists
    # iff the multiset splits into two graphic parts
    fn, off, lo = CLASSES[cls]
    for n in range(lo, 10):
        for D in iter_sequences(n, 2 * n + off):
            if not is_graphic(D):
                assert not fn(D).decision
                continue
            assert fn(D).decision == (not disconnected_realization_exists(D.degrees)), (cls, D)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=9))
def test_cross_check_agrees(xs):
    if len(xs) > 10:
        return
    assert cross_check(xs).agree


def test_cross_check_record():
    rec = cross_check("4,2^4,1^2").as_record()
    assert rec["class"] == "unicyclic" and rec["agree"]
    assert rec["classifier"]["decision"] is False
    assert rec["oracle"]["status"] == "counterexample" and rec["oracle"]["counterexample"]
    assert cross_check("3,3,3,3").as_record() == {"sequence": "3^4", "class": None, "agree": True}
