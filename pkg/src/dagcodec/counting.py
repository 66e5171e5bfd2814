"""Exact counting of labeled DAGs and of valid set sequences.

The number a_n of DAGs on n labeled vertices satisfies R. W. Robinson's
alternating recursion over the choice of k source vertices:

    a_n = sum_{k=1..n} (-1)^(k-1) C(n, k) 2^(k(n-k)) a_{n-k},   a_0 = 1

(OEIS A003024: 1, 1, 3, 25, 543, 29281, 3781503, ...). The bijection with
prefix-bounded set sequences means the same numbers count the sequences
S_1..S_{n-1} with |S_1 + ... + S_k| <= k for all k; the two brute-force
enumerators below make that equality checkable by direct inspection for
n <= 5 (at most 2^20 candidate graphs).

All arithmetic is exact: Python integers, math.comb, and a power of two
taken as a shift. Negative partial sums occur while accumulating and are
fine.
"""

from __future__ import annotations

import math
import threading
from typing import Iterator

from .errors import OutOfRange
from .graphs import BigCount, LabeledDag, SetSequence

__all__ = [
    "CountTable",
    "robinson_count",
    "enumerate_dags",
    "enumerate_sequences",
    "ENUMERATION_MAX_N",
]

# 2^(n(n-1)) candidate digraphs; n = 5 means 2^20, past that enumeration
# stops being a desk-scale oracle.
ENUMERATION_MAX_N = 5


class CountTable:
    """Memo table of a_0..a_N, grown on demand.

    Thread-safe: a lock guards extension, so concurrent callers observe a
    consistent table. Entry 0 is 1 (the empty graph); every later entry is
    produced by the recursion from earlier ones, and all are positive.
    """

    def __init__(self):
        self._values: list[BigCount] = [1]
        self._lock = threading.Lock()

    def count(self, n: int) -> BigCount:
        if n < 0:
            raise OutOfRange(f"vertex count must be >= 0, got {n}")
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)
                total = 0
                for k in range(1, m + 1):
                    term = math.comb(m, k) * (1 << (k * (m - k))) * self._values[m - k]
                    total += term if k % 2 == 1 else -term
                self._values.append(total)
            return self._values[n]

    def values(self, up_to: int) -> list[BigCount]:
        """The list a_0..a_{up_to}."""
        self.count(up_to)
        with self._lock:
            return self._values[: up_to + 1]


_shared_table = CountTable()


def robinson_count(n: int) -> BigCount:
    """a_n, the number of DAGs on n labeled vertices, computed exactly.

    Memoized across calls in a shared table; a_0 = 1.
    """
    return _shared_table.count(n)


def enumerate_dags(n: int) -> Iterator[LabeledDag]:
    """Yield every DAG on labels 1..n exactly once, 1 <= n <= 5.

    Candidate edge sets are bitmasks over the n(n-1) ordered pairs in
    lexicographic order (bit 0 is the first pair), and DAGs appear in
    ascending mask order. Instead of filtering all 2^(n(n-1)) masks, the
    masks are walked as a binary tree from the highest bit down, skipping
    an edge whenever it would close a cycle: any extension of a cyclic
    prefix stays cyclic, so whole subtrees drop out and the acyclic
    survivors still emerge in ascending order.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise OutOfRange(
            f"exhaustive DAG enumeration supports 1..{ENUMERATION_MAX_N}, got {n}"
        )
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    # adj[u] = bitmask of current out-neighbors (bit v-1 for vertex v)
    adj = [0] * (n + 1)
    chosen: list[tuple[int, int]] = []

    def reaches(src: int, dst: int) -> bool:
        frontier = 1 << (src - 1)
        seen = frontier
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= adj[low.bit_length()]
                v ^= low
            if nxt >> (dst - 1) & 1:
                return True
            frontier = nxt & ~seen
            seen |= nxt
        return False

    def walk(bit: int) -> Iterator[LabeledDag]:
        if bit < 0:
            yield LabeledDag(n, frozenset(chosen))
            return
        yield from walk(bit - 1)
        u, v = pairs[bit]
        if not reaches(v, u):  # adding u->v is safe iff v cannot reach u
            adj[u] |= 1 << (v - 1)
            chosen.append((u, v))
            yield from walk(bit - 1)
            chosen.pop()
            adj[u] &= ~(1 << (v - 1))

    yield from walk(len(pairs) - 1)


def enumerate_sequences(n: int) -> Iterator[SetSequence]:
    """Yield every valid set sequence for 1..n vertices, 1 <= n <= 5.

    Depth-first over positions k = 1..n-1, trying the 2^n subsets of
    {1..n} in ascending bitmask order and pruning as soon as the running
    union exceeds k. A violated prefix can never recover (unions only
    grow and the bound already failed at that k), so pruning loses
    nothing and everything yielded is valid.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise OutOfRange(
            f"exhaustive sequence enumeration supports 1..{ENUMERATION_MAX_N}, got {n}"
        )
    subsets = [
        frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
        for mask in range(1 << n)
    ]
    prefix: list[frozenset[int]] = []

    def walk(k: int, union_mask: int) -> Iterator[SetSequence]:
        if k == n:
            yield SetSequence(n, tuple(prefix))
            return
        for mask in range(1 << n):
            grown = union_mask | mask
            if grown.bit_count() <= k:
                prefix.append(subsets[mask])
                yield from walk(k + 1, grown)
                prefix.pop()

    yield from walk(1, 0)
