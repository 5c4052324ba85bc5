"""Insert-only APSP on an online multi-string DAWG (suffix automaton).

Prefix nodes of the stored strings form the trie of the set along primary
edges, so walking suffix links from the node of a new string plays the role
of the failure-link chain in the static algorithm.  A second index over the
reversed strings answers the "prefix of the new string" direction.
"""

from __future__ import annotations

from .ctrie import CTrie, assign_des
from .errors import DuplicateString, EmptyString, UnknownId
from .model import OverlapLedger, OverlapRecord, StringStore


class DawgNode:
    __slots__ = ("len", "slink", "transitions", "trie_member", "des", "id")

    def __init__(self, length, slink=None, transitions=None):
        self.len = length
        self.slink = slink
        self.transitions = {} if transitions is None else transitions
        self.trie_member = False
        self.des = None
        self.id = None


class DawgIndex:
    def __init__(self, reversed: bool = False):
        self.source = DawgNode(0)
        self.source.trie_member = True
        self.ctrie = CTrie()
        self.source.des = self.ctrie.root
        self.terminal_of: dict[int, DawgNode] = {}
        self.reversed = reversed
        self.node_count = 1
        self.edge_count = 0
        self.n = 0
        self.last_visits = 0

    def _key(self, content: str) -> str:
        return content[::-1] if self.reversed else content

    def _walk(self, text: str) -> DawgNode | None:
        node = self.source
        for c in text:
            node = node.transitions.get(c)
            if node is None:
                return None
        return node

    def _clone(self, q: DawgNode, length: int) -> DawgNode:
        clone = DawgNode(length, q.slink, dict(q.transitions))
        q.slink = clone
        self.node_count += 1
        self.edge_count += len(clone.transitions)
        return clone

    def _extend(self, last: DawgNode, c: str) -> DawgNode:
        q = last.transitions.get(c)
        if q is not None:
            # the extended string already occurs somewhere in the set
            if q.len == last.len + 1:
                return q
            clone = self._clone(q, last.len + 1)
            p = last
            while p is not None and p.transitions.get(c) is q:
                p.transitions[c] = clone
                p = p.slink
            return clone
        cur = DawgNode(last.len + 1)
        self.node_count += 1
        p = last
        while p is not None and c not in p.transitions:
            p.transitions[c] = cur
            self.edge_count += 1
            p = p.slink
        if p is None:
            cur.slink = self.source
            return cur
        q = p.transitions[c]
        if q.len == p.len + 1:
            cur.slink = q
            return cur
        clone = self._clone(q, p.len + 1)
        while p is not None and p.transitions.get(c) is q:
            p.transitions[c] = clone
            p = p.slink
        cur.slink = clone
        return cur

    def dawg_insert(self, content: str, sid: int) -> None:
        if not content:
            raise EmptyString("strings must be non-empty")
        if sid in self.terminal_of:
            raise DuplicateString(f"id {sid} is already indexed")
        text = self._key(content)
        hit = self._walk(text)
        if hit is not None and hit.id is not None and hit.len == len(text):
            raise DuplicateString(f"{content!r} is already stored as id {hit.id}")
        last = self.source
        for c in text:
            last = self._extend(last, c)
        self.n += len(text)

    def mark_trie_path(self, sid: int, content: str) -> list[DawgNode]:
        """Flag the nodes spelling the string from the source as trie nodes.

        Returns the path, source excluded, in increasing depth.
        """
        path = []
        node = self.source
        for c in self._key(content):
            node = node.transitions.get(c)
            if node is None:
                raise UnknownId(f"id {sid} has not been inserted")
            node.trie_member = True
            path.append(node)
        node.id = sid
        self.terminal_of[sid] = node
        return path

    def update_ctrie_for(self, sid: int, content: str, path: list[DawgNode]) -> None:
        outcome = self.ctrie.ctrie_insert(sid, self._key(content))
        ctrie_path = self.ctrie.path_to(outcome.terminal)
        assign_des([(node.len, node) for node in path], ctrie_path, _set_des)

    def insert(self, sid: int, content: str) -> None:
        self.dawg_insert(content, sid)
        path = self.mark_trie_path(sid, content)
        self.update_ctrie_for(sid, content, path)

    def query_forward(self, sid: int, ell: int = 0) -> list[tuple[int, int, int]]:
        """``(sid, j, |lspo|)`` for every indexed ``j``, in this index's orientation."""
        v = self.terminal_of.get(sid)
        if v is None:
            raise UnknownId(f"id {sid} is not indexed")
        ctrie = self.ctrie
        before = ctrie.visits
        out: list = []
        while v is not None and v.len >= ell:
            if v.trie_member:
                ctrie.report_and_mark(v.des, v.len, sid, out)
            v = v.slink
        ctrie.unmark_all()
        self.last_visits = ctrie.visits - before
        return out

    def nodes(self):
        seen = {id(self.source)}
        stack = [self.source]
        while stack:
            node = stack.pop()
            yield node
            for child in node.transitions.values():
                if id(child) not in seen:
                    seen.add(id(child))
                    stack.append(child)


def _set_des(node, cnode):
    node.des = cnode


class DynamicAPSP:
    """Insert-only APSP driver: string store, forward and reversed DAWGs, ledger."""

    def __init__(self, min_len: int = 0):
        self.min_len = min_len
        self.store = StringStore()
        self.ledger = OverlapLedger(self.store)
        self.forward = DawgIndex()
        self.backward = DawgIndex(reversed=True)

    def insert_and_report(self, content: str) -> tuple[int, set[OverlapRecord], set[OverlapRecord]]:
        sid = self.store.register_string(content)
        self.forward.insert(sid, content)
        self.backward.insert(sid, content)
        ell = self.min_len
        F = {OverlapRecord(i, j, n) for i, j, n in self.forward.query_forward(sid, ell)}
        B = {OverlapRecord(j, i, n) for i, j, n in self.backward.query_forward(sid, ell)}
        self.ledger.ledger_set(sid, F, B)
        return sid, F, B

    def stats(self) -> dict[str, int]:
        return {
            "nodes": self.forward.node_count + self.backward.node_count,
            "edges": self.forward.edge_count + self.backward.edge_count,
            "visits": self.forward.ctrie.visits + self.backward.ctrie.visits,
        }
