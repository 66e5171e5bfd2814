"""Core domain types for labeled DAGs and set sequences.

Vertices carry the labels 1..n. A :class:`LabeledDag` is a set of directed
edges on those labels with no self-loops and no directed cycles. A
:class:`SetSequence` holds subsets S_1..S_{n-1} of {1..n}; the sequences
that encode DAGs are exactly those whose running unions satisfy
``|S_1 + ... + S_k| <= k`` for every prefix (see :func:`validate_sequence`).

Acyclicity testing, the minimal source ordering and cycle reporting all
share one source-peeling pass: repeatedly remove the smallest-label vertex
with no incoming edge. If peeling consumes every vertex the graph is
acyclic and the consumption order is the wanted ordering; if it stalls,
the leftover vertices contain every cycle.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import CyclicGraph, DagCodecError, LabelOutOfRange, OutOfRange, SelfLoop

# A permutation of 1..n, produced by repeated smallest-label source removal.
SourceOrder = tuple[int, ...]

# Arbitrary-precision nonnegative count; Python ints never overflow.
BigCount = int


@dataclass(frozen=True)
class LabeledDag:
    """A directed acyclic graph on vertices labeled 1..n.

    Plain record; use :func:`make_dag` to construct with validation.
    Equality and hashing follow (n, edge set).
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def out_neighbors(self, u: int) -> frozenset[int]:
        return frozenset(v for (a, v) in self.edges if a == u)

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic (u, v) order, the canonical listing."""
        return sorted(self.edges)


@dataclass(frozen=True)
class SetSequence:
    """Subsets S_1..S_{n-1} of {1..n}, the encoding alphabet for DAGs.

    Structurally there are always exactly n - 1 sets (none when n = 1).
    Whether the prefix-union bound holds is a separate question answered
    by :func:`validate_sequence`. Use :func:`make_sequence` to construct
    with validation.
    """

    n: int
    sets: tuple[frozenset[int], ...]

    def sorted_sets(self) -> list[list[int]]:
        """Each set as an ascending label list, the canonical rendering."""
        return [sorted(s) for s in self.sets]


def make_dag(n: int, edges: Iterable[tuple[int, int]]) -> LabeledDag:
    """Build a validated DAG on labels 1..n.

    Duplicate edges are collapsed (the edge set is a set). Raises
    LabelOutOfRange or SelfLoop for malformed edges and CyclicGraph when
    the edges contain a directed cycle.
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    edge_set = set()
    for u, v in edges:
        if not 1 <= u <= n:
            raise LabelOutOfRange(u, n)
        if not 1 <= v <= n:
            raise LabelOutOfRange(v, n)
        if u == v:
            raise SelfLoop(u)
        edge_set.add((u, v))
    order = _peel(n, edge_set)
    if len(order) < n:
        raise CyclicGraph(frozenset(range(1, n + 1)) - frozenset(order))
    return LabeledDag(n, frozenset(edge_set))


def is_acyclic(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the edges contain no directed cycle.

    Assumes labels are in range and self-loop free (validation happens in
    :func:`make_dag`). Deterministic: peeling either consumes all n
    vertices or provably stalls.
    """
    edge_list = list(edges)
    return len(_peel(n, edge_list)) == n


def minimal_source_sequence(g: LabeledDag) -> SourceOrder:
    """The ordering u_1..u_n from repeated smallest-label source removal.

    u_1 is the smallest-label source of g; each u_i is the smallest-label
    source once u_1..u_{i-1} are deleted. The result is a permutation of
    1..n and a topological order of g; it is in fact the lexicographically
    smallest topological order, since every step takes the least available
    vertex.
    """
    return SourceOrder(_peel(g.n, g.edges))


def _peel(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    """Remove smallest-label sources until none remain.

    Returns the removal order; shorter than n exactly when a cycle blocks
    peeling. Cost O((V + E) log V) via a label-keyed heap of sources.
    """
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        out[u].append(v)
        indeg[v] += 1
    sources = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(sources)
    order: list[int] = []
    while sources:
        u = heapq.heappop(sources)
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(sources, v)
    return order


def make_sequence(n: int, sets: Iterable[Iterable[int]]) -> SetSequence:
    """Build a structurally checked SetSequence (n - 1 sets over 1..n).

    Only structure is enforced here; the prefix-union bound is checked by
    :func:`validate_sequence`.
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    frozen = tuple(frozenset(s) for s in sets)
    if len(frozen) != n - 1:
        raise DagCodecError(f"expected {n - 1} sets for n={n}, got {len(frozen)}")
    for s in frozen:
        for x in s:
            if not 1 <= x <= n:
                raise LabelOutOfRange(x, n)
    return SetSequence(n, frozen)


def validate_sequence(s: SetSequence) -> bool:
    """True iff ``|S_1 + ... + S_k| <= k`` for every 1 <= k <= n-1.

    Single left-to-right pass over a running union.
    """
    seen: set[int] = set()
    for k, subset in enumerate(s.sets, start=1):
        seen |= subset
        if len(seen) > k:
            return False
    return True
