"""Conjugacy decision engine.

Builds the universe of splitting-tree labels for the inputs, processes it
in shortlex order against a growing table of conjugacy-class
representatives, and answers conjugacy queries by comparing assigned
representatives.  Total work is linear in the combined input length: the
universe is linear by the tree-size bounds, each word is processed with a
constant number of bounded Q-set operations per table entry, and no row
ever holds more than 256 entries.

Rows are keyed by the representatives of a word's children: a pair
(w0*, w1*) for words with even a-count, the single representative
(w0·w1)* otherwise.  Within a row, entries are pairwise non-conjugate;
the first entry found conjugate to a new word becomes its representative.
"""

from __future__ import annotations

from . import trie
from .quotient import (
    IDENTITY_COSET,
    QuotientTables,
    get_tables,
    lift_set_product,
    set_inv,
    set_mul,
    shift_a,
)
from .words import a_parity, parse, phi_pair, reduce

ROW_CAPACITY = 256

_SEP = trie.SEPARATOR


class CapacityViolation(RuntimeError):
    """A row exceeded 256 entries, contradicting the capacity theorem."""


class WordRecord:
    """Per-universe-word data: sections, coset, representative, Q-set."""

    __slots__ = (
        "word", "coset_id", "even",
        "child0", "child1",          # section records (even words)
        "child", "oc0", "oc1",       # product record + section cosets (odd words)
        "rep", "q_to_rep", "processed",
    )

    def __init__(self, word: str):
        self.word = word
        self.coset_id = IDENTITY_COSET
        self.even = True
        self.child0 = None
        self.child1 = None
        self.child = None
        self.oc0 = IDENTITY_COSET
        self.oc1 = IDENTITY_COSET
        self.rep = None
        self.q_to_rep = 0
        self.processed = False

    def __repr__(self):
        rep = self.rep.word if self.rep is not None else None
        return f"WordRecord({self.word!r}, rep={rep!r})"


class ConjRow:
    __slots__ = ("key", "entries")

    def __init__(self, key: str):
        self.key = key
        self.entries = []


class ConjTable:
    """Conjugacy table plus the word universe and instrumentation."""

    def __init__(self, tables: QuotientTables):
        self.tables = tables
        self.lambda1 = trie.Trie()   # word -> WordRecord
        self.lambda2 = trie.Trie()   # row label -> ConjRow
        self.rows = []
        self.ops = 0
        self.max_row_size = 0
        self._seed()

    # -- row keys ----------------------------------------------------------
    @staticmethod
    def pair_key(r0: str, r1: str) -> str:
        # Leading separator tags pair labels apart from single-word labels.
        return _SEP + r0 + _SEP + r1

    # -- seeding -----------------------------------------------------------
    def _seed(self):
        t = self.tables
        base = t.base_q
        records = {}
        for w in ("", "a", "b", "c", "d"):
            rec = WordRecord(w)
            rec.coset_id = t.gen_coset[w] if w else IDENTITY_COSET
            records[w] = rec
            self.lambda1.insert(w, rec)
        eps = records[""]
        eps.child0 = eps.child1 = eps
        for g, (s0, s1) in (("b", ("a", "c")), ("c", ("a", "d")), ("d", ("", "b"))):
            records[g].child0 = records[s0]
            records[g].child1 = records[s1]
        ra = records["a"]
        ra.even = False
        ra.child = eps
        ra.oc0 = ra.oc1 = IDENTITY_COSET
        for w, rec in records.items():
            rec.rep = rec
            rec.q_to_rep = base[w]
            rec.processed = True
        # Initial rows: one per one-letter class, labelled by child reps.
        self._new_row(self.pair_key("", ""), eps)
        self._new_row("", ra)
        self._new_row(self.pair_key("a", "c"), records["b"])
        self._new_row(self.pair_key("a", "d"), records["c"])
        self._new_row(self.pair_key("", "b"), records["d"])

    def _new_row(self, key: str, first: WordRecord) -> ConjRow:
        row = ConjRow(key)
        row.entries.append(first)
        self.rows.append(row)
        self.lambda2.insert(key, row)
        if not self.max_row_size:
            self.max_row_size = 1
        return row

    # -- Q-set transport ----------------------------------------------------
    def transport(self, x: WordRecord, y: WordRecord) -> int:
        """Q(x, y) from the stored Q-sets: empty unless both words share a
        representative r, in which case Q(x,y) = Q(y,r)^-1 Q(x,r)."""
        if x.rep is not y.rep:
            return 0
        t = self.tables
        self.ops += 16
        return set_mul(set_inv(y.q_to_rep, t), x.q_to_rep, t)

    def _q_against_even(self, rec: WordRecord, other: WordRecord) -> int:
        t = self.tables
        self.ops += 256
        straight = lift_set_product(
            self.transport(rec.child0, other.child0),
            self.transport(rec.child1, other.child1),
            t,
        )
        cross = lift_set_product(
            self.transport(rec.child1, other.child0),
            self.transport(rec.child0, other.child1),
            t,
        )
        return straight | (shift_a(cross, t) if cross else 0)

    def _q_against_odd(self, rec: WordRecord, other: WordRecord) -> int:
        t = self.tables
        self.ops += 256
        q_prod = self.transport(rec.child, other.child)
        if not q_prod:
            return 0
        # lift{(g, v1 g u1^-1)} u lift{(g u1^-1, v0^-1 g)}a with u = rec, v = other
        out = 0
        acc2 = 0
        mul, inv, lift = t.mul, t.inv, t.lift
        iu1 = inv[rec.oc1]
        iv0 = inv[other.oc0]
        v1 = other.oc1
        for g in range(16):
            if q_prod >> g & 1:
                gi = mul[g][iu1]
                s = lift[(g << 4) | mul[v1][gi]]
                if s >= 0:
                    out |= 1 << s
                s = lift[(gi << 4) | mul[iv0][g]]
                if s >= 0:
                    acc2 |= 1 << s
        if acc2:
            out |= shift_a(acc2, t)
        return out

    # -- processing ---------------------------------------------------------
    def process(self, rec: WordRecord):
        """Assign a representative to ``rec``, processing any unprocessed
        odd chain below it first.  The chain never exceeds three records:
        a third odd step would contradict the strict length decrease along
        three tree edges."""
        chain = [rec]
        while True:
            cur = chain[-1]
            if cur.even:
                if not (cur.child0.processed and cur.child1.processed):
                    raise AssertionError(
                        f"even word {cur.word!r} has unprocessed sections"
                    )
                break
            if cur.child.processed:
                break
            chain.append(cur.child)
            if len(chain) > 3:
                raise AssertionError("odd prerequisite chain deeper than 3")
        for cur in reversed(chain):
            if not cur.processed:
                self._process_one(cur)

    def _process_one(self, rec: WordRecord):
        if rec.even:
            r0 = rec.child0.rep.word
            r1 = rec.child1.rep.word
            row = self.lambda2.lookup(self.pair_key(r0, r1))
            if row is None and r0 != r1:
                row = self.lambda2.lookup(self.pair_key(r1, r0))
            q_of = self._q_against_even
            key = self.pair_key(r0, r1)
        else:
            label = rec.child.rep.word
            row = self.lambda2.lookup(label)
            q_of = self._q_against_odd
            key = label
        self.ops += len(rec.word) + 2

        if row is not None:
            for other in row.entries:
                q = q_of(rec, other)
                if q:
                    rec.rep = other
                    rec.q_to_rep = q
                    rec.processed = True
                    return
            if len(row.entries) >= ROW_CAPACITY:
                raise CapacityViolation(
                    f"row {row.key!r} would exceed {ROW_CAPACITY} entries"
                )
        rec.rep = rec
        rec.q_to_rep = q_of(rec, rec)
        rec.processed = True
        if not rec.q_to_rep & (1 << IDENTITY_COSET):
            raise AssertionError(f"Q({rec.word!r}, itself) misses the identity coset")
        if row is None:
            self._new_row(key, rec)
        else:
            row.entries.append(rec)
            if len(row.entries) > self.max_row_size:
                self.max_row_size = len(row.entries)


class SolveResult:
    """Outcome of a solve run: per-input representatives and Q-sets."""

    def __init__(self, table: ConjTable, inputs: list):
        self.table = table
        self.inputs = inputs

    def record(self, w: str) -> WordRecord:
        rec = self.table.lambda1.lookup(w)
        if rec is None:
            raise KeyError(f"{w!r} is not in the solved universe")
        return rec

    def representative(self, w: str) -> str:
        return self.record(w).rep.word

    def q_to_rep(self, w: str) -> int:
        return self.record(w).q_to_rep

    def q_set(self, u: str, v: str) -> int:
        """Q(u, v) for two universe words."""
        return self.table.transport(self.record(u), self.record(v))

    def per_input(self) -> list:
        """(representative word, Q-to-representative mask) per input, in order."""
        out = []
        for w in self.inputs:
            rec = self.record(w)
            out.append((rec.rep.word, rec.q_to_rep))
        return out

    @property
    def ops(self) -> int:
        return self.table.ops + self.table.lambda1.ops + self.table.lambda2.ops

    @property
    def max_row_size(self) -> int:
        return self.table.max_row_size


def collect_universe(inputs, table: ConjTable) -> list:
    """Create records for every splitting-tree label of every input,
    returning them in shortlex processing order."""
    t = table.tables
    lam1 = table.lambda1
    mul = t.mul
    gc = t.gen_coset
    stack = [w for w in inputs]
    words_out = []
    while stack:
        w = stack.pop()
        if lam1.lookup(w) is not None:
            continue
        rec = WordRecord(w)
        lam1.insert(w, rec)
        words_out.append(w)
        c = IDENTITY_COSET
        for ch in w:
            c = mul[c][gc[ch]]
        rec.coset_id = c
        table.ops += 2 * len(w) + 1
        if a_parity(w) == 0:
            w0, w1 = phi_pair(w)
            rec.even = True
            rec.child0 = w0
            rec.child1 = w1
            stack.append(w0)
            stack.append(w1)
        else:
            w0, w1 = phi_pair(reduce(w + "a"))
            y = reduce(w0 + w1)
            rec.even = False
            rec.child = y
            c0 = IDENTITY_COSET
            for ch in w0:
                c0 = mul[c0][gc[ch]]
            c1 = IDENTITY_COSET
            for ch in w1:
                c1 = mul[c1][gc[ch]]
            rec.oc0 = c0
            rec.oc1 = c1
            stack.append(y)
    # Resolve child references now that every label has a record.
    for w in words_out:
        rec = lam1.lookup(w)
        if rec.even:
            rec.child0 = lam1.lookup(rec.child0)
            rec.child1 = lam1.lookup(rec.child1)
        else:
            rec.child = lam1.lookup(rec.child)
    ordered = trie.shortlex_order(words_out)
    return [lam1.lookup(w) for w in ordered]


def solve(inputs, tables: QuotientTables | None = None) -> SolveResult:
    """Process all inputs (and their splitting trees) into one table."""
    if tables is None:
        tables = get_tables()
    inputs = [parse(w) for w in inputs]
    table = ConjTable(tables)
    for rec in collect_universe(inputs, table):
        if not rec.processed:
            table.process(rec)
    return SolveResult(table, inputs)


def are_conjugate(u: str, v: str, tables: QuotientTables | None = None) -> bool:
    res = solve([u, v], tables)
    return res.record(res.inputs[0]).rep is res.record(res.inputs[1]).rep


def q_set(u: str, v: str, tables: QuotientTables | None = None) -> int:
    """The set Q(u, v) of cosets of x with u = x^-1 v x, as a bitmask."""
    res = solve([u, v], tables)
    return res.q_set(res.inputs[0], res.inputs[1])


def conjugate_pairs(inputs, tables: QuotientTables | None = None):
    """First (i, j) with i < j and inputs[i] conjugate to inputs[j]."""
    res = solve(inputs, tables)
    seen = {}
    for j, w in enumerate(res.inputs):
        rep = res.record(w).rep
        i = seen.get(id(rep))
        if i is not None:
            return (i, j)
        seen[id(rep)] = j
    return None
