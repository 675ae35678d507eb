"""Trie over the alphabet a, b, c, d plus a separator symbol.

Backs the word universe and the conjugacy-table row index, and provides
the shortlex sort used to order the universe.  Node storage is a flat
int array holding five child slots per node, which keeps millions of
nodes affordable; ``ops`` counts elementary node steps so linearity can
be checked by instrumentation rather than argued.

Keys may be plain words or row labels; row labels use the separator
(comma), with a leading separator tagging pair labels so they can never
collide with single-word labels.
"""

from __future__ import annotations

from array import array

SEPARATOR = ","
_SLOT = {"a": 0, "b": 1, "c": 2, "d": 3, SEPARATOR: 4}

_ABSENT = object()


class Trie:
    """5-way trie with payloads on marked nodes."""

    __slots__ = ("_kids", "_payload", "ops")

    def __init__(self):
        self._kids = array("i", [-1] * 5)
        self._payload = {}
        self.ops = 0

    def __len__(self):
        return len(self._payload)

    def insert(self, key: str, payload=None):
        """Mark ``key`` and attach ``payload``; returns the stored payload.

        If the key is already present its existing payload is returned and
        the new one is ignored, so insert doubles as get-or-create.
        """
        kids = self._kids
        node = 0
        steps = 1
        for ch in key:
            slot = node * 5 + _SLOT[ch]
            nxt = kids[slot]
            if nxt < 0:
                nxt = len(kids) // 5
                kids.extend((-1, -1, -1, -1, -1))
                kids[slot] = nxt
            node = nxt
            steps += 1
        self.ops += steps
        existing = self._payload.get(node, _ABSENT)
        if existing is not _ABSENT:
            return existing
        self._payload[node] = payload
        return payload

    def lookup(self, key: str, default=None):
        """Payload stored at ``key``, or ``default`` when absent."""
        kids = self._kids
        node = 0
        steps = 1
        for ch in key:
            node = kids[node * 5 + _SLOT[ch]]
            steps += 1
            if node < 0:
                self.ops += steps
                return default
        self.ops += steps
        got = self._payload.get(node, _ABSENT)
        return default if got is _ABSENT else got

    def __contains__(self, key: str) -> bool:
        missing = object()
        return self.lookup(key, missing) is not missing

    def items(self):
        """(key, payload) pairs in lexicographic key order."""
        kids = self._kids
        symbols = "abcd" + SEPARATOR
        path = []
        LEAVE = -2
        stack = [(0, -1)]
        while stack:
            node, sym = stack.pop()
            if sym == LEAVE:
                path.pop()
                continue
            if sym >= 0:
                path.append(symbols[sym])
                stack.append((node, LEAVE))
            if node in self._payload:
                yield "".join(path), self._payload[node]
            for slot in range(4, -1, -1):
                child = kids[node * 5 + slot]
                if child >= 0:
                    stack.append((child, slot))

    def payloads(self):
        """Payloads in lexicographic key order, without materializing keys."""
        kids = self._kids
        stack = [0]
        while stack:
            node = stack.pop()
            if node in self._payload:
                yield self._payload[node]
            for slot in range(4, -1, -1):
                child = kids[node * 5 + slot]
                if child >= 0:
                    stack.append(child)


def shortlex_order(keys) -> list:
    """Stable shortlex sort of words.

    Words are bucketed by length, then each bucket is emitted by an
    in-order walk of a trie holding its members, so total work is linear
    in the combined key length.  Duplicates come out adjacent in their
    original relative order.
    """
    buckets: dict = {}
    for i, w in enumerate(keys):
        buckets.setdefault(len(w), []).append(i)
    out = []
    keys = list(keys)
    for length in sorted(buckets):
        idxs = buckets[length]
        if length == 0:
            out.extend(keys[i] for i in idxs)
            continue
        t = Trie()
        for i in idxs:
            slot = t.insert(keys[i], [])
            slot.append(i)
        for _, bucket in t.items():
            out.extend(keys[i] for i in bucket)
    return out
