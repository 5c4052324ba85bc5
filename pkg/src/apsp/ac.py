"""Static APSP over an Aho-Corasick trie.

For each string the failure-link chain from its trie node is walked in
decreasing depth.  At every node ``v`` on the chain, the compact-trie
subtree under ``des(v)`` that is not already marked holds exactly the
strings whose longest overlap with the query is ``depth(v)``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .ctrie import CNode, CTrie
from .errors import DuplicateString, EmptyString, UnknownId
from .model import OverlapRecord, StringRecord


class AcNode:
    __slots__ = ("parent", "children", "depth", "flink", "id", "des")

    def __init__(self, parent, depth):
        self.parent = parent
        self.children = {}
        self.depth = depth
        self.flink = None
        self.id = None
        self.des = None


class AcAutomaton:
    def __init__(self, strings: Iterable[StringRecord | tuple[int, str]]):
        self.root = AcNode(None, 0)
        self.terminal_of: dict[int, AcNode] = {}
        self.contents: dict[int, str] = {}
        self.size = 1
        self.ctrie = CTrie()
        self.last_visits = 0
        for rec in strings:
            sid, content = (rec.id, rec.content) if isinstance(rec, StringRecord) else rec
            self._add(sid, content)
        self._link_failures()
        self._compact()

    def _add(self, sid: int, content: str) -> None:
        if not content:
            raise EmptyString("strings must be non-empty")
        if sid in self.contents:
            raise DuplicateString(f"id {sid} given twice")
        node = self.root
        for c in content:
            child = node.children.get(c)
            if child is None:
                child = node.children[c] = AcNode(node, node.depth + 1)
                self.size += 1
            node = child
        if node.id is not None:
            raise DuplicateString(f"{content!r} is already stored as id {node.id}")
        node.id = sid
        self.terminal_of[sid] = node
        self.contents[sid] = content

    def _link_failures(self) -> None:
        queue = deque()
        for child in self.root.children.values():
            child.flink = self.root
            queue.append(child)
        while queue:
            node = queue.popleft()
            for c, child in node.children.items():
                f = node.flink
                while f is not None and c not in f.children:
                    f = f.flink
                child.flink = self.root if f is None else f.children[c]
                queue.append(child)

    def _compact(self) -> None:
        """Build ``ctrie`` from the trie and set ``des`` on every trie node."""
        ctrie = self.ctrie
        self.root.des = ctrie.root
        created = []
        order = []
        # (trie node, nearest kept ancestor, first character below that ancestor)
        stack = [(self.root, ctrie.root, "")]
        while stack:
            node, kept_above, key = stack.pop()
            order.append(node)
            if node is not self.root and (node.id is not None or len(node.children) != 1):
                ids = () if node.id is None else (node.id,)
                text = self.contents[node.id] if node.id is not None else None
                cnode = CNode(kept_above, node.depth, text, ids)
                kept_above.children[key] = cnode
                created.append(cnode)
                if node.id is not None:
                    ctrie.terminal_of[node.id] = cnode
                node.des = cnode
                kept_above = cnode
            for c, child in node.children.items():
                stack.append((child, kept_above, c if kept_above.depth == node.depth else key))
        ctrie.size += len(created)
        for cnode in reversed(created):
            if cnode.text is None:
                cnode.text = next(iter(cnode.children.values())).text
        for node in reversed(order):
            if node.des is None:
                (child,) = node.children.values()
                node.des = child.des

    def query(self, sid: int, ell: int = 0) -> set[OverlapRecord]:
        v = self.terminal_of.get(sid)
        if v is None:
            raise UnknownId(f"id {sid} is not in the automaton")
        ctrie = self.ctrie
        out: list = []
        before = ctrie.visits
        while v is not None and v.depth >= ell:
            ctrie.report_and_mark(v.des, v.depth, sid, out)
            v = v.flink
        ctrie.unmark_all()
        self.last_visits = ctrie.visits - before
        return {OverlapRecord(*rec) for rec in out}

    @property
    def n(self) -> int:
        return sum(len(s) for s in self.contents.values())


def build(strings) -> AcAutomaton:
    return AcAutomaton(strings)


def solve_static(strings, ell: int = 0) -> set[OverlapRecord]:
    """All overlaps of length at least ``ell`` among ``strings``.

    ``strings`` may be a list of contents (ids 1..k assigned in order), a
    mapping id -> content, or an iterable of :class:`StringRecord`.
    """
    ac = AcAutomaton(_as_pairs(strings))
    out: set[OverlapRecord] = set()
    for sid in ac.terminal_of:
        out |= ac.query(sid, ell)
    return out


def _as_pairs(strings):
    if isinstance(strings, dict):
        return list(strings.items())
    strings = list(strings)
    if strings and isinstance(strings[0], str):
        return list(enumerate(strings, start=1))
    return strings
