import random

import pytest
from hypothesis import given, settings

from apsp.ac import AcAutomaton, solve_static
from apsp.errors import DuplicateString, EmptyString, UnknownId
from apsp.oracle import apsp_naive

from conftest import WORKED, worked_records, random_set, string_sets


def trie_nodes(ac):
    """(label, node) for every trie node."""
    stack = [("", ac.root)]
    while stack:
        label, node = stack.pop()
        yield label, node
        for c, child in node.children.items():
            stack.append((label + c, child))


def naive_flink_label(label, labels):
    for cut in range(1, len(label) + 1):
        if label[cut:] in labels:
            return label[cut:]
    raise AssertionError("the empty string is always present")


def check_flinks(ac):
    by_label = dict(trie_nodes(ac))
    labels = set(by_label)
    for label, node in by_label.items():
        if label:
            assert node.flink is by_label[naive_flink_label(label, labels)], label


def test_singleton():
    ac = AcAutomaton([(1, "a")])
    assert ac.size == 2
    assert ac.terminal_of[1].flink is ac.root


def test_worked_flink():
    ac = AcAutomaton(enumerate(WORKED, start=1))
    by_label = dict(trie_nodes(ac))
    assert by_label["babaa"].flink is by_label["abaa"]
    check_flinks(ac)


def test_two_strings_flink():
    ac = AcAutomaton([(1, "ab"), (2, "ba")])
    by_label = dict(trie_nodes(ac))
    assert by_label["ab"].flink is by_label["b"]
    assert by_label["ba"].flink is by_label["a"]


@settings(max_examples=200, deadline=None)
@given(string_sets("abcd", max_size=10, max_len=8))
def test_flinks_match_naive(strings):
    check_flinks(AcAutomaton(enumerate(strings, start=1)))


def des_by_definition(ac, label):
    """Shallowest ctrie node whose label extends ``label``."""
    best = None
    for cnode in ac.ctrie.nodes():
        if cnode.label.startswith(label) and (best is None or cnode.depth < best.depth):
            best = cnode
    return best


@settings(max_examples=100, deadline=None)
@given(string_sets("ab", max_size=8, max_len=6))
def test_des_and_ctrie(strings):
    ac = AcAutomaton(enumerate(strings, start=1))
    ac.ctrie.check()
    for label, node in trie_nodes(ac):
        assert node.des is des_by_definition(ac, label)


def test_build_errors():
    with pytest.raises(EmptyString):
        AcAutomaton([(1, "")])
    with pytest.raises(DuplicateString):
        AcAutomaton([(1, "ab"), (2, "ab")])


def test_query_worked():
    ac = AcAutomaton(enumerate(WORKED, start=1))
    q6 = ac.query(6)
    assert (6, 1, 4) in q6 and (6, 5, 0) in q6
    assert len(q6) == 9
    assert (7, 8, 2) in ac.query(7)
    assert ac.query(5) == {r for r in worked_records() if r[0] == 5}
    with pytest.raises(UnknownId):
        ac.query(10)


def test_query_singleton():
    ac = AcAutomaton([(1, "abc")])
    assert ac.query(1) == {(1, 1, 3)}


def test_solve_static_worked():
    assert solve_static(WORKED) == worked_records()
    at3 = solve_static(WORKED, ell=3)
    assert at3 == worked_records(3)
    assert (6, 1, 4) in at3 and (5, 1, 2) not in at3


def test_disjoint_alphabets():
    assert solve_static(["aaa", "bbb"], ell=1) == {(1, 1, 3), (2, 2, 3)}


def test_random_sets_match_oracle():
    rng = random.Random(11)
    for _ in range(200):
        strings = random_set(rng, rng.choice([2, 4, 26]), 15, 20)
        ref = dict(enumerate(strings, start=1))
        assert solve_static(strings) == apsp_naive(ref)


def test_threshold_reuse_and_monotonicity():
    rng = random.Random(5)
    for _ in range(50):
        strings = random_set(rng, 2, 12, 9)
        ac = AcAutomaton(enumerate(strings, start=1))
        ref = apsp_naive(dict(enumerate(strings, start=1)))
        for sid in ac.terminal_of:
            prev = None
            for ell in range(0, 11):
                got = ac.query(sid, ell)
                assert got == {r for r in ref if r.i == sid and r.length >= ell}
                if prev is not None:
                    assert got <= prev
                prev = got


def test_visit_bounds():
    rng = random.Random(3)
    for _ in range(100):
        strings = random_set(rng, rng.choice([2, 4]), 25, 30)
        ac = AcAutomaton(enumerate(strings, start=1))
        k, n = len(strings), ac.n
        before = ac.ctrie.visits
        for sid in ac.terminal_of:
            ac.query(sid)
            assert ac.last_visits <= 2 * k + 1
        assert ac.ctrie.visits - before <= 4 * (n + k * k)
