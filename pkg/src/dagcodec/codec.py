"""The bijection between labeled DAGs and prefix-bounded set sequences.

Encoding: list the vertices u_1..u_n by repeated smallest-label source
removal, then record S_{n-i} = out-neighbors(u_i). The out-neighbor set of
u_n is always empty (nothing comes after the last vertex of a topological
order), so only S_1..S_{n-1} are kept. Every encoding satisfies the
prefix-union bound |S_1 + ... + S_k| <= k: vertex u_i can only point at
vertices removed after it, so S_i is drawn from the last i labels of the
removal order.

Decoding inverts this without search. Writing U_m for S_1 + ... + S_m
(and U_0 empty), the vertex placed at position j is

    w_j = min of {1..n} minus {w_1..w_{j-1}} minus U_{n-j}

and the out-neighbors of w_j are exactly S_{n-j}. The prefix-union bound
guarantees the choice set is never empty, and the graph built this way is
acyclic with w as its own minimal source sequence, which is what makes the
reconstruction exact and unique.
"""

from __future__ import annotations

import heapq

from .errors import InvalidSequence
from .graphs import (
    LabeledDag,
    SetSequence,
    SourceOrder,
    minimal_source_sequence,
)

__all__ = ["encode", "decode", "decode_order"]


def encode(g: LabeledDag) -> SetSequence:
    """Encode a DAG as its sequence S_1..S_{n-1} of out-neighbor sets.

    S_{n-i} is the out-neighbor set of the i-th vertex of the minimal
    source sequence. The result always satisfies the prefix-union bound.
    """
    n = g.n
    order = minimal_source_sequence(g)
    out: dict[int, set[int]] = {u: set() for u in range(1, n + 1)}
    for u, v in g.edges:
        out[u].add(v)
    # out(u_n) is S_0, provably empty; keep the check as a cheap invariant.
    assert not out[order[-1]], "last vertex of a topological order has out-edges"
    sets: list[frozenset[int]] = [frozenset()] * (n - 1)
    for i in range(1, n):  # S_{n-i} = out(u_i), stored 0-based at n-i-1
        sets[n - i - 1] = frozenset(out[order[i - 1]])
    return SetSequence(n, tuple(sets))


def decode_order(s: SetSequence) -> SourceOrder:
    """The placement order w_1..w_n determined by a valid sequence.

    Equals ``minimal_source_sequence(decode(s))``. Raises InvalidSequence
    (reporting the first failing prefix) when the prefix-union bound does
    not hold.

    Label x is barred from position j while x lies in U_{n-j}; since the
    prefix unions only grow, each label becomes eligible at one fixed step
    (n - m + 1 for a label first seen in S_m, step 1 for labels never
    seen). A min-heap fed by that release schedule yields each w_j in
    O(log n), rather than rescanning the labels every step.
    """
    n = s.n
    _check_prefix_bound(s)
    first_seen: dict[int, int] = {}
    for m, subset in enumerate(s.sets, start=1):
        for x in subset:
            if x not in first_seen:
                first_seen[x] = m
    release: list[list[int]] = [[] for _ in range(n + 1)]
    eligible: list[int] = []
    for x in range(1, n + 1):
        m = first_seen.get(x)
        if m is None:
            eligible.append(x)
        else:
            release[n - m + 1].append(x)
    heapq.heapify(eligible)
    order: list[int] = []
    for j in range(1, n + 1):
        for x in release[j]:
            heapq.heappush(eligible, x)
        order.append(heapq.heappop(eligible))
    return SourceOrder(order)


def decode(s: SetSequence) -> LabeledDag:
    """Reconstruct the unique DAG whose encoding is ``s``.

    Raises InvalidSequence when the prefix-union bound fails; otherwise
    ``encode(decode(s)) == s`` holds exactly.
    """
    n = s.n
    order = decode_order(s)
    edges: set[tuple[int, int]] = set()
    for i in range(1, n):  # out(w_i) = S_{n-i}
        w_i = order[i - 1]
        for x in s.sets[n - i - 1]:
            edges.add((w_i, x))
    # Acyclic by construction: every edge points from an earlier w to a
    # later one, so no validating constructor pass is needed.
    return LabeledDag(n, frozenset(edges))


def _check_prefix_bound(s: SetSequence) -> None:
    seen: set[int] = set()
    for k, subset in enumerate(s.sets, start=1):
        seen |= subset
        if len(seen) > k:
            raise InvalidSequence(k, len(seen))
