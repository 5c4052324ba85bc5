import pytest
from hypothesis import given, settings, strategies as st

from apsp.ctrie import CNode, CTrie
from apsp.errors import DeadHandle, DuplicateString, UnknownId

from conftest import WORKED


def find(trie, label):
    for node in trie.nodes():
        if node.label == label:
            return node
    raise LookupError(label)


def test_insert_into_empty():
    t = CTrie()
    out = t.ctrie_insert(1, "ab")
    assert out.split is None
    assert t.root.children["a"] is out.terminal
    assert out.terminal.label == "ab" and out.terminal.ids == {1}


def test_insert_splits_edge():
    t = CTrie()
    t.ctrie_insert(1, "abaa")
    out = t.ctrie_insert(2, "abb")
    old_child, mid = out.split
    assert mid.label == "ab" and not mid.ids
    assert old_child.label == "abaa"
    assert sorted(c.label for c in mid.children.values()) == ["abaa", "abb"]
    assert t.canonical() == CTrie.build({1: "abaa", 2: "abb"}).canonical()
    t.check()


def test_insert_prefix_extension():
    t = CTrie()
    t.ctrie_insert(1, "ab")
    out = t.ctrie_insert(2, "abc")
    assert out.split is None
    assert out.terminal.parent is t.terminal_of[1]
    t.check()


def test_insert_prefix_of_existing_creates_id_node():
    t = CTrie()
    t.ctrie_insert(1, "abc")
    out = t.ctrie_insert(2, "ab")
    assert out.split == (t.terminal_of[1], t.terminal_of[2])
    assert t.terminal_of[2].ids == {2}
    t.check()


def test_insert_duplicate():
    t = CTrie()
    t.ctrie_insert(1, "ab")
    with pytest.raises(DuplicateString):
        t.ctrie_insert(2, "ab")


def test_delete_merges_and_forwards():
    t = CTrie()
    t.ctrie_insert(1, "abaa")
    t.ctrie_insert(2, "abb")
    mid = find(t, "ab")
    t.ctrie_delete(2)
    assert not mid.alive
    assert t.resolve(mid) is t.terminal_of[1]
    assert t.canonical() == CTrie.build({1: "abaa"}).canonical()
    t.check()


def test_delete_last_leaves_root():
    t = CTrie()
    leaf = t.ctrie_insert(1, "ab").terminal
    t.ctrie_delete(1)
    assert t.size == 1 and not t.root.children
    assert t.resolve(leaf) is t.root


def test_delete_unknown():
    t = CTrie()
    with pytest.raises(UnknownId):
        t.ctrie_delete(3)


def test_dead_handle_without_forward():
    t = CTrie()
    ghost = CNode(t.root, 1, "a")
    ghost.alive = False
    with pytest.raises(DeadHandle):
        t.resolve(ghost)


def test_forwarding_chain_is_compressed():
    t = CTrie()
    for sid, s in enumerate(["abcd", "abcx", "abyy", "azzz"], start=1):
        t.ctrie_insert(sid, s)
    n_abc = find(t, "abc")
    n_ab = find(t, "ab")
    t.ctrie_delete(2)  # "abc" merges into "abcd"
    t.ctrie_delete(3)  # "ab" merges into "abcd"
    assert t.resolve(n_abc) is t.terminal_of[1]
    assert t.resolve(n_ab) is t.terminal_of[1]
    assert n_abc.forward is t.terminal_of[1]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.booleans(), st.text("abc", min_size=1, max_size=6)), max_size=40))
def test_rebuild_equality(ops):
    t = CTrie()
    alive = {}
    next_id = 1
    for is_delete, s in ops:
        if is_delete and alive:
            sid = sorted(alive)[len(s) % len(alive)]
            t.ctrie_delete(sid)
            del alive[sid]
        elif s not in alive.values():
            t.ctrie_insert(next_id, s)
            alive[next_id] = s
            next_id += 1
        t.check()
        assert t.canonical() == CTrie.build(alive).canonical()


def worked_trie():
    return CTrie.build(dict(enumerate(WORKED, start=1)))


def test_report_and_mark_subtree():
    t = worked_trie()
    out = []
    u = find(t, "ab")
    t.report_and_mark(u, 2, 5, out)
    assert sorted(out) == [(5, 1, 2), (5, 2, 2), (5, 3, 2), (5, 4, 2)]
    assert u.marked and t.marked == [u]


def test_report_and_mark_root_zero():
    t = worked_trie()
    out = []
    t.report_and_mark(t.root, 0, 3, out)
    assert len(out) == 9 and all(n == 0 for _, _, n in out)


def test_marked_subtrees_are_skipped():
    t = worked_trie()
    out = []
    t.report_and_mark(find(t, "abaa"), 4, 6, out)
    t.report_and_mark(find(t, "abaa"), 4, 6, out)
    assert out == [(6, 1, 4)]
    t.report_and_mark(t.root, 0, 6, out)
    assert [j for _, j, _ in out].count(1) == 1
    assert len(out) == 9


def test_unmark_all():
    t = worked_trie()
    for label in ("abaa", "bb", "b"):
        t.report_and_mark(find(t, label), 1, 1, [])
    assert t.unmark_all() == 3
    assert not any(n.marked for n in t.nodes())
    assert t.unmark_all() == 0


def test_size_bound_worked():
    t = worked_trie()
    t.check()
    assert t.size <= 2 * 9 + 1
