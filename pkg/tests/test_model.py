import pytest

from apsp.errors import DuplicateString, EmptyString, UnknownId
from apsp.model import OverlapLedger, StringStore
from apsp.oracle import apsp_naive


def make(n_strings=0):
    store = StringStore()
    ledger = OverlapLedger(store)
    return store, ledger


def add_with_oracle(store, ledger, content):
    sid = store.register_string(content)
    alive = store.alive()
    full = apsp_naive(alive)
    F = {r for r in full if r.i == sid}
    B = {r for r in full if r.j == sid}
    ledger.ledger_set(sid, F, B)
    return sid


def test_register_assigns_increasing_ids():
    store = StringStore()
    assert store.register_string("abaa") == 1
    assert store.register_string("abb") == 2
    store.retire(1)
    assert store.register_string("abaa") == 3


def test_register_rejects_empty_and_duplicates():
    store = StringStore()
    with pytest.raises(EmptyString):
        store.register_string("")
    store.register_string("abaa")
    with pytest.raises(DuplicateString):
        store.register_string("abaa")


def test_retire_unknown():
    store = StringStore()
    with pytest.raises(UnknownId):
        store.retire(1)


def test_self_pair_mirrored():
    store, ledger = make()
    sid = store.register_string("abaa")
    ledger.ledger_set(sid, {(1, 1, 4)}, {(1, 1, 4)})
    assert ledger.ledger_snapshot() == {(1, 1, 4)}
    assert ledger.F[ledger.slot_of[1]] == {1: 4}
    assert ledger.B[ledger.slot_of[1]] == {1: 4}


def test_snapshot_single_and_empty():
    store, ledger = make()
    assert ledger.ledger_snapshot() == set()
    add_with_oracle(store, ledger, "aa")
    assert ledger.ledger_snapshot() == {(1, 1, 2)}


def test_doubling_keeps_slots():
    store, ledger = make()
    for s in ["a", "b", "ab", "ba"]:
        add_with_oracle(store, ledger, s)
    assert ledger.capacity == 4
    before = ledger.ledger_snapshot()
    add_with_oracle(store, ledger, "aab")
    assert ledger.capacity == 8
    assert sorted(ledger.slot_of) == [1, 2, 3, 4, 5]
    assert before <= ledger.ledger_snapshot()
    assert ledger.ledger_snapshot() == apsp_naive(store.alive())


def test_halving_at_quarter_occupancy():
    store, ledger = make()
    words = ["a", "b", "c", "ab", "ba", "ca", "ac", "bc", "cb"]
    for w in words:
        add_with_oracle(store, ledger, w)
    assert ledger.capacity == 16
    for sid in [1, 2, 3, 4]:
        ledger.ledger_remove(sid)
        store.retire(sid)
    assert ledger.occupancy == 5 and ledger.capacity == 16
    ledger.ledger_remove(5)
    store.retire(5)
    assert ledger.occupancy == 4 and ledger.capacity == 8
    assert ledger.ledger_snapshot() == apsp_naive(store.alive())


def test_remove_strips_cross_entries():
    store, ledger = make()
    add_with_oracle(store, ledger, "ab")
    add_with_oracle(store, ledger, "ba")
    ledger.ledger_remove(1)
    store.retire(1)
    slot = ledger.slot_of[2]
    assert 1 not in ledger.F[slot] and 1 not in ledger.B[slot]
    with pytest.raises(UnknownId):
        ledger.ledger_remove(1)


def test_set_rejects_dead_ids():
    store, ledger = make()
    add_with_oracle(store, ledger, "ab")
    store.retire(1)
    sid = store.register_string("ba")
    with pytest.raises(UnknownId):
        ledger.ledger_set(sid, {(sid, 1, 0), (sid, sid, 2)}, {(sid, sid, 2)})
    with pytest.raises(UnknownId):
        ledger.ledger_set(1, set(), set())


def test_occupancy_invariant_under_churn():
    import random
    rng = random.Random(7)
    store, ledger = make()
    alive = []
    for step in range(400):
        if alive and rng.random() < 0.45:
            sid = alive.pop(rng.randrange(len(alive)))
            ledger.ledger_remove(sid)
            store.retire(sid)
        else:
            s = "".join(rng.choice("ab") for _ in range(rng.randint(1, 9)))
            if store.id_of(s) is not None:
                continue
            alive.append(add_with_oracle(store, ledger, s))
        assert ledger.occupancy <= ledger.capacity
        assert 4 * ledger.occupancy > ledger.capacity or ledger.capacity == ledger.min_capacity
        assert len(ledger.F) == len(ledger.B) == ledger.capacity
        ledger.check_mirror()
    assert ledger.ledger_snapshot() == apsp_naive(store.alive())


def test_pairs_matches_snapshot():
    store, ledger = make()
    for s in ("abaa", "bab", "babaa"):
        add_with_oracle(store, ledger, s)
    assert ledger.pairs() == {(r.i, r.j): r.length for r in ledger.ledger_snapshot()}
    assert ledger.pairs()[2, 3] == 3
