"""Compact prefix trie over the alive strings, with per-query marking.

Only the root, branching nodes and nodes that carry a string id are kept,
so the trie has at most ``2k + 1`` nodes for ``k`` strings.  Host structures
(AC trie, DAWG, suffix tree) hold node objects as ``des`` handles.  When a
node is deleted or merged away it keeps a ``forward`` pointer to the node
that took over its position, and :meth:`CTrie.resolve` follows those
pointers with path compression.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DeadHandle, DuplicateString, UnknownId


class CNode:
    __slots__ = ("parent", "children", "depth", "text", "ids", "marked", "alive", "forward")

    def __init__(self, parent, depth, text, ids=()):
        self.parent = parent
        self.children = {}
        self.depth = depth
        # some string whose first `depth` characters spell this node
        self.text = text
        self.ids = set(ids)
        self.marked = False
        self.alive = True
        self.forward = None

    @property
    def label(self) -> str:
        return self.text[: self.depth]

    def __repr__(self):
        return f"CNode({self.label!r}, ids={sorted(self.ids)})"


@dataclass
class InsertOutcome:
    terminal: CNode
    # (child whose in-edge was split, new middle node)
    split: tuple[CNode, CNode] | None = None


@dataclass
class DeleteOutcome:
    removed: list[CNode] = field(default_factory=list)
    forwards: list[tuple[CNode, CNode]] = field(default_factory=list)


class CTrie:
    def __init__(self):
        self.root = CNode(None, 0, "")
        self.terminal_of: dict[int, CNode] = {}
        self.marked: list[CNode] = []
        self.size = 1
        self.visits = 0

    # -- structure ---------------------------------------------------------

    def ctrie_insert(self, sid: int, content: str) -> InsertOutcome:
        if sid in self.terminal_of:
            raise DuplicateString(f"id {sid} is already in the trie")
        m = len(content)
        node = self.root
        while True:
            if node.depth == m:
                if node.ids:
                    raise DuplicateString(f"{content!r} is already stored as id {min(node.ids)}")
                node.ids.add(sid)
                node.text = content
                self.terminal_of[sid] = node
                return InsertOutcome(node)
            child = node.children.get(content[node.depth])
            if child is None:
                leaf = CNode(node, m, content, (sid,))
                node.children[content[node.depth]] = leaf
                self.size += 1
                self.terminal_of[sid] = leaf
                return InsertOutcome(leaf)
            text = child.text
            k = node.depth + 1
            end = min(child.depth, m)
            while k < end and text[k] == content[k]:
                k += 1
            if k == child.depth:
                node = child
                continue
            mid = CNode(node, k, text)
            node.children[content[node.depth]] = mid
            mid.children[text[k]] = child
            child.parent = mid
            self.size += 1
            if k == m:
                mid.ids.add(sid)
                self.terminal_of[sid] = mid
                return InsertOutcome(mid, (child, mid))
            leaf = CNode(mid, m, content, (sid,))
            mid.children[content[k]] = leaf
            self.size += 1
            self.terminal_of[sid] = leaf
            return InsertOutcome(leaf, (child, mid))

    def ctrie_delete(self, sid: int) -> DeleteOutcome:
        node = self.terminal_of.pop(sid, None)
        if node is None:
            raise UnknownId(f"id {sid} is not in the trie")
        node.ids.discard(sid)
        out = DeleteOutcome()
        if len(node.children) >= 2:
            return out
        if len(node.children) == 1:
            self._merge(node, out)
            return out
        parent = node.parent
        del parent.children[node.text[parent.depth]]
        self._kill(node, parent, out)
        if parent is not self.root and not parent.ids and len(parent.children) == 1:
            self._merge(parent, out)
        return out

    def _merge(self, node: CNode, out: DeleteOutcome) -> None:
        (child,) = node.children.values()
        parent = node.parent
        parent.children[node.text[parent.depth]] = child
        child.parent = parent
        self._kill(node, child, out)

    def _kill(self, node: CNode, heir: CNode, out: DeleteOutcome) -> None:
        node.alive = False
        node.forward = heir
        node.children = {}
        if node.marked:
            node.marked = False
        self.size -= 1
        out.removed.append(node)
        out.forwards.append((node, heir))

    def resolve(self, handle: CNode) -> CNode:
        node = handle
        while not node.alive:
            if node.forward is None:
                raise DeadHandle(f"{handle!r} has no live forwarding target")
            node = node.forward
        # path compression
        while handle is not node and not handle.alive:
            nxt = handle.forward
            handle.forward = node
            handle = nxt
        return node

    def path_to(self, node: CNode) -> list[CNode]:
        """Nodes from the root down to ``node``, inclusive."""
        path = []
        while node is not None:
            path.append(node)
            node = node.parent
        path.reverse()
        return path

    def nodes(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children.values())

    # -- queries -------------------------------------------------------------

    def report_and_mark(self, u: CNode, overlap_len: int, sid: int, out) -> None:
        """Report ``(sid, j, overlap_len)`` for every id in the unmarked part of
        the subtree at ``u``, then mark ``u``.

        ``out`` is any object with an ``append`` method.
        """
        u = self.resolve(u)
        if u.marked:
            return
        stack = [u]
        visited = 0
        while stack:
            x = stack.pop()
            visited += 1
            for j in x.ids:
                out.append((sid, j, overlap_len))
            for child in x.children.values():
                if not child.marked:
                    stack.append(child)
        self.visits += visited
        u.marked = True
        self.marked.append(u)

    def unmark_all(self) -> int:
        n = len(self.marked)
        for node in self.marked:
            node.marked = False
        self.marked.clear()
        return n

    # -- audits --------------------------------------------------------------

    def canonical(self) -> tuple:
        """Order-free description used for rebuild-from-scratch comparisons."""
        rows = []
        for node in self.nodes():
            parent = node.parent.label if node.parent is not None else None
            rows.append((node.label, tuple(sorted(node.ids)), parent))
        return tuple(sorted(rows, key=repr))

    @classmethod
    def build(cls, strings: dict[int, str]) -> "CTrie":
        trie = cls()
        for sid, content in strings.items():
            trie.ctrie_insert(sid, content)
        return trie

    def check(self) -> None:
        """Assert the structural invariants; used by tests."""
        for node in self.nodes():
            assert node.alive
            if node is not self.root:
                assert len(node.children) >= 2 or node.ids, node
                assert node.depth > node.parent.depth
                assert node.parent.children[node.text[node.parent.depth]] is node
                assert node.label.startswith(node.parent.label)
            for sid in node.ids:
                assert self.terminal_of[sid] is node
        assert self.size == sum(1 for _ in self.nodes())
        assert self.size <= 2 * len(self.terminal_of) + 1


def assign_des(host_path, ctrie_path, setter) -> None:
    """Point every host node on one string's path at its shallowest ctrie node.

    ``host_path`` is a sequence of ``(depth, host_node)`` and ``ctrie_path``
    the ctrie nodes on the same string's root path, both ordered by
    increasing depth.  ``setter(host_node, ctrie_node)`` records ``des``.
    """
    it = iter(ctrie_path)
    cur = next(it)
    for depth, host in host_path:
        while cur.depth < depth:
            cur = next(it)
        setter(host, cur)
