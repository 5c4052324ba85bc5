"""String identities, the alive set, and the F/B overlap ledger."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DuplicateString, EmptyString, UnknownId

MIN_CAPACITY = 4


class OverlapRecord(NamedTuple):
    """``(i, j, length)``: the longest suffix of S_i that is a prefix of S_j."""

    i: int
    j: int
    length: int


@dataclass(frozen=True)
class StringRecord:
    id: int
    content: str
    alive: bool = True


class StringStore:
    """Issues ids in insertion order and tracks which strings are alive.

    Ids start at 1 and are never reused, even after deletion.
    """

    def __init__(self):
        self._records: dict[int, StringRecord] = {}
        self._alive_by_content: dict[str, int] = {}
        self._next_id = 1

    def register_string(self, content: str) -> int:
        if not content:
            raise EmptyString("strings must be non-empty")
        if content in self._alive_by_content:
            raise DuplicateString(
                f"{content!r} is already stored as id {self._alive_by_content[content]}"
            )
        sid = self._next_id
        self._next_id += 1
        self._records[sid] = StringRecord(sid, content)
        self._alive_by_content[content] = sid
        return sid

    def retire(self, sid: int) -> StringRecord:
        rec = self._records.get(sid)
        if rec is None or not rec.alive:
            raise UnknownId(f"no alive string with id {sid}")
        dead = StringRecord(sid, rec.content, alive=False)
        self._records[sid] = dead
        del self._alive_by_content[rec.content]
        return dead

    def is_alive(self, sid: int) -> bool:
        rec = self._records.get(sid)
        return rec is not None and rec.alive

    def content(self, sid: int) -> str:
        if not self.is_alive(sid):
            raise UnknownId(f"no alive string with id {sid}")
        return self._records[sid].content

    def record(self, sid: int) -> StringRecord:
        try:
            return self._records[sid]
        except KeyError:
            raise UnknownId(f"id {sid} was never issued") from None

    def id_of(self, content: str) -> int | None:
        return self._alive_by_content.get(content)

    def alive(self) -> dict[int, str]:
        return {sid: rec.content for sid, rec in self._records.items() if rec.alive}

    def __len__(self):
        return len(self._alive_by_content)

    def __contains__(self, sid):
        return self.is_alive(sid)


class OverlapLedger:
    """The output list kept as two slot arrays ``F`` and ``B``.

    ``F[slot(i)]`` maps ``j -> |lspo(i, j)|`` and ``B[slot(i)]`` maps
    ``j -> |lspo(j, i)|``.  Both arrays double when every slot is taken and
    halve (with compaction) once occupancy falls to a quarter of capacity.
    External ids never change; only the id -> slot map is rewritten.
    """

    def __init__(self, store: StringStore, min_capacity: int = MIN_CAPACITY):
        self.store = store
        self.min_capacity = min_capacity
        self.capacity = min_capacity
        self.F: list[dict[int, int] | None] = [None] * min_capacity
        self.B: list[dict[int, int] | None] = [None] * min_capacity
        self.slot_of: dict[int, int] = {}
        self._free: list[int] = list(range(min_capacity - 1, -1, -1))

    @property
    def occupancy(self) -> int:
        return len(self.slot_of)

    def _resize(self, new_capacity: int) -> None:
        F = [None] * new_capacity
        B = [None] * new_capacity
        slot_of = {}
        for new_slot, (sid, old_slot) in enumerate(sorted(self.slot_of.items())):
            F[new_slot] = self.F[old_slot]
            B[new_slot] = self.B[old_slot]
            slot_of[sid] = new_slot
        self.F, self.B, self.slot_of = F, B, slot_of
        self.capacity = new_capacity
        self._free = list(range(new_capacity - 1, len(slot_of) - 1, -1))

    def _check_alive(self, sid: int) -> None:
        if not self.store.is_alive(sid):
            raise UnknownId(f"id {sid} is not alive")

    def ledger_set(self, i: int, F_i: Iterable, B_i: Iterable) -> None:
        self._check_alive(i)
        if i in self.slot_of:
            raise DuplicateString(f"id {i} already has a ledger slot")
        fwd: dict[int, int] = {}
        bwd: dict[int, int] = {}
        for rec in F_i:
            a, j, length = rec
            if a != i:
                raise ValueError(f"F record {tuple(rec)} does not start with {i}")
            self._check_alive(j)
            if j in fwd:
                raise ValueError(f"two F records for pair ({i}, {j})")
            fwd[j] = length
        for rec in B_i:
            j, b, length = rec
            if b != i:
                raise ValueError(f"B record {tuple(rec)} does not end with {i}")
            self._check_alive(j)
            if j in bwd:
                raise ValueError(f"two B records for pair ({j}, {i})")
            bwd[j] = length
        if fwd.get(i) != bwd.get(i):
            raise ValueError(f"F and B disagree on the self pair of {i}")

        if self.occupancy == self.capacity:
            self._resize(self.capacity * 2)
        slot = self._free.pop()
        self.slot_of[i] = slot
        self.F[slot] = fwd
        self.B[slot] = bwd
        for j, length in fwd.items():
            if j != i:
                self.B[self.slot_of[j]][i] = length
        for j, length in bwd.items():
            if j != i:
                self.F[self.slot_of[j]][i] = length

    def ledger_remove(self, i: int) -> None:
        slot = self.slot_of.get(i)
        if slot is None:
            raise UnknownId(f"id {i} has no ledger slot")
        for j in self.F[slot]:
            if j != i:
                self.B[self.slot_of[j]].pop(i, None)
        for j in self.B[slot]:
            if j != i:
                self.F[self.slot_of[j]].pop(i, None)
        self.F[slot] = None
        self.B[slot] = None
        del self.slot_of[i]
        self._free.append(slot)
        if self.capacity > self.min_capacity and self.occupancy <= self.capacity // 4:
            self._resize(max(self.min_capacity, self.capacity // 2))

    def forward(self, i: int) -> dict[int, int]:
        return dict(self.F[self._slot(i)])

    def backward(self, i: int) -> dict[int, int]:
        return dict(self.B[self._slot(i)])

    def _slot(self, i: int) -> int:
        try:
            return self.slot_of[i]
        except KeyError:
            raise UnknownId(f"id {i} has no ledger slot") from None

    def pairs(self) -> dict[tuple[int, int], int]:
        """``(i, j) -> length`` for every stored overlap."""
        out = {}
        for i, slot in self.slot_of.items():
            for j, length in self.F[slot].items():
                out[i, j] = length
        return out

    def ledger_snapshot(self) -> set[OverlapRecord]:
        # B is the mirror of F (see check_mirror), so F alone covers the union
        return {OverlapRecord(i, j, n) for (i, j), n in self.pairs().items()}

    def check_mirror(self) -> None:
        for i, slot in self.slot_of.items():
            for j, length in self.F[slot].items():
                assert self.B[self.slot_of[j]][i] == length, (i, j)
            for j, length in self.B[slot].items():
                assert self.F[self.slot_of[j]][i] == length, (j, i)

    def __len__(self):
        return sum(len(self.F[s]) for s in self.slot_of.values())
