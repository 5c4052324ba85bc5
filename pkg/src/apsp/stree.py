"""Fully dynamic APSP on a generalized suffix tree.

Every suffix of every alive string is an explicit node, so repeated
suffixes with a single right extension appear as non-branching internal
nodes.  Nodes keep the set of suffix occurrences ``(j, q)`` they spell
(``S_j[q:] == str(v)``), a count of alive strings they are a prefix of, and
a pointer to one alive occurrence in their subtree.  Edge labels are never
stored: the label of the edge into ``v`` is derived from that pointer and
the two endpoint depths, so it always cites an alive string.

Deleting a string walks its suffix-link chain, drops its occurrences, and
removes or merges nodes left with no occurrence, no id and at most one
child.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ctrie import CTrie, assign_des
from .errors import DuplicateString, EmptyString, UnknownId
from .model import OverlapLedger, OverlapRecord, StringStore


class StNode:
    __slots__ = (
        "parent", "children", "depth", "slink", "occ", "prefix_count",
        "id", "des", "leaf_ptr", "removed",
    )

    def __init__(self, parent, depth, leaf_ptr):
        self.parent = parent
        self.children = {}
        # None while the node is an open leaf of the string being inserted
        self.depth = depth
        self.slink = None
        self.occ = set()
        self.prefix_count = 0
        self.id = None
        self.des = None
        self.leaf_ptr = leaf_ptr
        self.removed = False

    @property
    def suffix_count(self) -> int:
        return len(self.occ)


class SuffixTreeIndex:
    def __init__(self, reversed: bool = False):
        self.root = StNode(None, 0, None)
        self.ctrie = CTrie()
        self.root.des = self.ctrie.root
        self.terminal_of: dict[int, StNode] = {}
        self.contents: dict[int, str] = {}
        self.reversed = reversed
        self.node_count = 1
        self.n = 0
        self.last_visits = 0

    def _key(self, content: str) -> str:
        return content[::-1] if self.reversed else content

    # -- labels --------------------------------------------------------------

    def label_ref(self, v: StNode) -> tuple[int, int, int]:
        """``(j, b, e)`` with ``S_j[b:e]`` the label of the edge into ``v``."""
        j, q = v.leaf_ptr
        return j, q + v.parent.depth, q + v.depth

    def string_of(self, v: StNode) -> str:
        if v is self.root:
            return ""
        j, q = v.leaf_ptr
        return self.contents[j][q:q + v.depth]

    def _first_char(self, v: StNode) -> str:
        j, q = v.leaf_ptr
        return self.contents[j][q + v.parent.depth]

    def locate(self, text: str) -> tuple[StNode, int]:
        """Deepest node on the path of ``text`` and how far into ``text`` it is.

        Returns ``(node, matched)`` where ``matched == len(text)`` iff ``text``
        ends exactly at ``node``; ``matched`` may be less than ``node.depth``
        when the path stops mid-edge (then ``node`` is the edge's lower end).
        """
        node = self.root
        i = 0
        m = len(text)
        while i < m:
            child = node.children.get(text[i])
            if child is None:
                return node, i
            j, q = child.leaf_ptr
            s = self.contents[j]
            base = q
            k = i + 1
            end = min(child.depth, m)
            while k < end and s[base + k] == text[k]:
                k += 1
            if k < child.depth:
                return child, k
            node = child
            i = k
        return node, i

    # -- insertion -------------------------------------------------------------

    def st_insert(self, content: str, sid: int) -> None:
        if not content:
            raise EmptyString("strings must be non-empty")
        if sid in self.terminal_of:
            raise DuplicateString(f"id {sid} is already indexed")
        T = self._key(content)
        m = len(T)
        node, matched = self.locate(T)
        if matched == m and node.depth == m and node.id is not None:
            raise DuplicateString(f"{content!r} is already stored as id {node.id}")
        self.contents[sid] = T
        self.n += m

        contents = self.contents
        root = self.root
        suffix_node: list[StNode | None] = [None] * m
        open_leaves = []

        def depth_of(v, end):
            return v.depth if v.depth is not None else end - v.leaf_ptr[1]

        def split(parent, child, at_depth):
            w = StNode(parent, at_depth, child.leaf_ptr)
            w.slink = root
            w.prefix_count = child.prefix_count
            w.des = child.des
            parent.children[self._first_char(child)] = w
            j, q = child.leaf_ptr
            w.children[contents[j][q + at_depth]] = child
            child.parent = w
            self.node_count += 1
            return w

        active_node = root
        active_edge = 0  # index into T of the first character of the active edge
        active_length = 0
        remainder = 0
        for pos in range(m):
            c = T[pos]
            end = pos + 1
            remainder += 1
            pending = None
            while remainder > 0:
                if active_length == 0:
                    active_edge = pos
                child = active_node.children.get(T[active_edge])
                if child is None:
                    q = pos - remainder + 1
                    leaf = StNode(active_node, None, (sid, q))
                    active_node.children[T[active_edge]] = leaf
                    self.node_count += 1
                    open_leaves.append(leaf)
                    suffix_node[q] = leaf
                    if pending is not None:
                        pending.slink = active_node
                        pending = None
                else:
                    edge_len = depth_of(child, end) - active_node.depth
                    if active_length >= edge_len:
                        active_node = child
                        active_edge += edge_len
                        active_length -= edge_len
                        continue
                    j, q0 = child.leaf_ptr
                    if contents[j][q0 + active_node.depth + active_length] == c:
                        if pending is not None and active_node is not root:
                            pending.slink = active_node
                            pending = None
                        active_length += 1
                        break
                    w = split(active_node, child, active_node.depth + active_length)
                    q = pos - remainder + 1
                    leaf = StNode(w, None, (sid, q))
                    w.children[c] = leaf
                    self.node_count += 1
                    open_leaves.append(leaf)
                    suffix_node[q] = leaf
                    if pending is not None:
                        pending.slink = w
                    pending = w
                remainder -= 1
                if active_node is root and active_length > 0:
                    active_length -= 1
                    active_edge = pos - remainder + 1
                elif active_node is not root:
                    active_node = active_node.slink

        for leaf in open_leaves:
            leaf.depth = m - leaf.leaf_ptr[1]

        # Suffixes still implicit after the last character occur elsewhere
        # in the set; make each of them an explicit node.
        for q in range(m - remainder, m):
            while True:
                if active_length == 0:
                    target = active_node
                    break
                child = active_node.children[T[active_edge]]
                edge_len = child.depth - active_node.depth
                if active_length >= edge_len:
                    active_node = child
                    active_edge += edge_len
                    active_length -= edge_len
                    continue
                target = split(active_node, child, active_node.depth + active_length)
                break
            suffix_node[q] = target
            if active_node is root:
                if active_length > 0:
                    active_length -= 1
                    active_edge = q + 1
            else:
                active_node = active_node.slink

        for q in range(m):
            v = suffix_node[q]
            v.occ.add((sid, q))
            v.slink = suffix_node[q + 1] if q + 1 < m else root

        terminal = suffix_node[0]
        terminal.id = sid
        self.terminal_of[sid] = terminal
        path = []
        v = terminal
        while v is not None:
            v.prefix_count += 1
            path.append(v)
            v = v.parent
        path.reverse()

        outcome = self.ctrie.ctrie_insert(sid, T)
        assign_des(
            [(v.depth, v) for v in path], self.ctrie.path_to(outcome.terminal), _set_des
        )

    # -- deletion ----------------------------------------------------------------

    def st_delete(self, sid: int) -> None:
        terminal = self.terminal_of.pop(sid, None)
        if terminal is None:
            raise UnknownId(f"id {sid} is not indexed")
        root = self.root
        T = self.contents[sid]
        m = len(T)

        chain = []
        v = terminal
        for _ in range(m):
            chain.append(v)
            v = v.slink

        v = terminal
        while v is not None:
            v.prefix_count -= 1
            v = v.parent
        terminal.id = None

        stale = []
        for q, v in enumerate(chain):
            occ = (sid, q)
            v.occ.discard(occ)
            while v is not None and v.leaf_ptr == occ:
                stale.append(v)
                v = v.parent

        for v in chain:
            if v.removed or v.occ or v.id is not None:
                continue
            if len(v.children) == 1:
                self._merge(v)
            elif not v.children:
                parent = v.parent
                self._remove_leaf(v)
                while parent is not root and not parent.occ and parent.id is None:
                    if parent.children:
                        if len(parent.children) == 1:
                            self._merge(parent)
                        break
                    grand = parent.parent
                    self._remove_leaf(parent)
                    parent = grand

        stale.sort(key=lambda v: v.depth, reverse=True)
        for v in stale:
            if v.removed:
                continue
            if v.occ:
                v.leaf_ptr = min(v.occ)
            else:
                v.leaf_ptr = next(iter(v.children.values())).leaf_ptr

        self.ctrie.ctrie_delete(sid)
        del self.contents[sid]
        self.n -= m

    def _remove_leaf(self, v: StNode) -> None:
        del v.parent.children[self._first_char(v)]
        v.removed = True
        self.node_count -= 1

    def _merge(self, v: StNode) -> None:
        (child,) = v.children.values()
        parent = v.parent
        parent.children[self._first_char(v)] = child
        child.parent = parent
        v.removed = True
        v.children = {}
        self.node_count -= 1

    # -- queries -------------------------------------------------------------------

    def st_query_forward(self, sid: int, ell: int = 0) -> list[tuple[int, int, int]]:
        v = self.terminal_of.get(sid)
        if v is None:
            raise UnknownId(f"id {sid} is not indexed")
        ctrie = self.ctrie
        before = ctrie.visits
        out: list = []
        while v is not None and v.depth >= ell:
            if v.prefix_count > 0:
                ctrie.report_and_mark(v.des, v.depth, sid, out)
            v = v.slink
        ctrie.unmark_all()
        self.last_visits = ctrie.visits - before
        return out

    # -- audits --------------------------------------------------------------------

    def nodes(self):
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(v.children.values())

    def canonical(self) -> tuple:
        """Node strings, counts, ids and parents, independent of build history."""
        rows = []
        for v in self.nodes():
            parent = None if v.parent is None else self.string_of(v.parent)
            rows.append((self.string_of(v), v.suffix_count, v.prefix_count, v.id, parent))
        return tuple(sorted(rows, key=repr))

    @classmethod
    def build(cls, strings: dict[int, str], reversed: bool = False) -> "SuffixTreeIndex":
        index = cls(reversed=reversed)
        for sid, content in strings.items():
            index.st_insert(content, sid)
        return index


def _set_des(node, cnode):
    node.des = cnode


@dataclass(frozen=True)
class Add:
    content: str


@dataclass(frozen=True)
class Delete:
    id: int


@dataclass
class LedgerDelta:
    op: Add | Delete
    id: int
    added: set[OverlapRecord] = field(default_factory=set)
    removed: set[OverlapRecord] = field(default_factory=set)


class FullyDynamicAPSP:
    """Fully dynamic APSP driver over a forward and a reversed suffix tree."""

    def __init__(self, min_len: int = 0):
        self.min_len = min_len
        self.store = StringStore()
        self.ledger = OverlapLedger(self.store)
        self.forward = SuffixTreeIndex()
        self.backward = SuffixTreeIndex(reversed=True)

    def add(self, content: str) -> tuple[int, set[OverlapRecord], set[OverlapRecord]]:
        sid = self.store.register_string(content)
        self.forward.st_insert(content, sid)
        self.backward.st_insert(content, sid)
        ell = self.min_len
        F = {OverlapRecord(i, j, n) for i, j, n in self.forward.st_query_forward(sid, ell)}
        B = {OverlapRecord(j, i, n) for i, j, n in self.backward.st_query_forward(sid, ell)}
        self.ledger.ledger_set(sid, F, B)
        return sid, F, B

    insert_and_report = add

    def delete(self, sid: int) -> set[OverlapRecord]:
        if not self.store.is_alive(sid):
            raise UnknownId(f"no alive string with id {sid}")
        F = self.ledger.forward(sid)
        B = self.ledger.backward(sid)
        removed = {OverlapRecord(sid, j, n) for j, n in F.items()}
        removed |= {OverlapRecord(j, sid, n) for j, n in B.items()}
        self.forward.st_delete(sid)
        self.backward.st_delete(sid)
        self.ledger.ledger_remove(sid)
        self.store.retire(sid)
        return removed

    def fd_apply(self, op: Add | Delete) -> LedgerDelta:
        if isinstance(op, Add):
            sid, F, B = self.add(op.content)
            return LedgerDelta(op, sid, added=F | B)
        if isinstance(op, Delete):
            return LedgerDelta(op, op.id, removed=self.delete(op.id))
        raise TypeError(f"unsupported operation {op!r}")

    def stats(self) -> dict[str, int]:
        return {
            "nodes": self.forward.node_count + self.backward.node_count,
            "edges": self.forward.node_count + self.backward.node_count - 2,
            "visits": self.forward.ctrie.visits + self.backward.ctrie.visits,
        }
