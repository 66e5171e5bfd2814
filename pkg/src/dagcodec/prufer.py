"""Prufer coding of labeled trees and the bridge into the DAG codec.

The classic Prufer process deletes the smallest-label leaf of a tree
n - 2 times, recording each deleted leaf's surviving neighbor; the
recorded list determines the tree uniquely (whence Cayley's n^(n-2)
count of labeled trees).

Orienting every tree edge from its earlier-removed endpoint to its
later-removed endpoint turns the tree into a DAG whose set-sequence
encoding consists of singletons only: the last survivor's label first,
then the recorded neighbors in reverse order of recording. That makes the
DAG codec a strict generalisation of Prufer coding, and
``bridge_sequence`` produces the sequence directly from the trace so the
equality with ``encode(orient_tree(t))`` stays independently checkable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import LabelOutOfRange, NotATree, OutOfRange, SelfLoop
from .graphs import LabeledDag, SetSequence

__all__ = [
    "LabeledTree",
    "PruferTrace",
    "make_tree",
    "prufer_encode",
    "prufer_decode",
    "orient_tree",
    "bridge_sequence",
]


@dataclass(frozen=True)
class LabeledTree:
    """A tree on vertices 1..n, n >= 2; edges stored as (min, max) pairs.

    Use :func:`make_tree` to construct with validation.
    """

    n: int
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class PruferTrace:
    """Full transcript of the Prufer process on a tree.

    ``code`` is the recorded neighbor list a_1..a_{n-2} (empty for n = 2)
    and ``removal`` the order v_1..v_n in which vertices left the tree,
    the two survivors last with the smaller label first.
    """

    code: tuple[int, ...]
    removal: tuple[int, ...]


def make_tree(n: int, edges: Iterable[tuple[int, int]]) -> LabeledTree:
    """Build a validated tree on labels 1..n (n >= 2).

    Raises NotATree when the (deduplicated, undirected) edge count is not
    n - 1 or the graph is disconnected.
    """
    if n < 2:
        raise OutOfRange(f"trees need at least 2 vertices, got n={n}")
    canonical = set()
    for u, v in edges:
        if not 1 <= u <= n:
            raise LabelOutOfRange(u, n)
        if not 1 <= v <= n:
            raise LabelOutOfRange(v, n)
        if u == v:
            raise SelfLoop(u)
        canonical.add((min(u, v), max(u, v)))
    if len(canonical) != n - 1:
        raise NotATree(f"a tree on {n} vertices has {n - 1} edges, got {len(canonical)}")
    if not _connected(n, canonical):
        raise NotATree(f"edge set on {n} vertices is disconnected")
    return LabeledTree(n, frozenset(canonical))


def _connected(n, edges) -> bool:
    neighbors: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = {1}
    stack = [1]
    while stack:
        for w in neighbors[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def prufer_encode(t: LabeledTree) -> PruferTrace:
    """Run the Prufer process, keeping both the code and the removal order.

    Step i deletes the smallest-label leaf v_i and records its neighbor
    a_i, for i = 1..n-2; the two survivors close the removal order,
    smaller label first.
    """
    n = t.n
    neighbors: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in t.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    leaves = [v for v in range(1, n + 1) if len(neighbors[v]) == 1]
    heapq.heapify(leaves)
    code: list[int] = []
    removal: list[int] = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = neighbors[leaf]
        code.append(parent)
        removal.append(leaf)
        neighbors[parent].discard(leaf)
        neighbors[leaf].clear()
        if len(neighbors[parent]) == 1:
            heapq.heappush(leaves, parent)
    survivors = sorted(v for v in range(1, n + 1) if neighbors[v])
    removal.extend(survivors)
    return PruferTrace(tuple(code), tuple(removal))


def prufer_decode(n: int, code: Iterable[int]) -> LabeledTree:
    """The unique tree on 1..n whose Prufer code equals ``code``.

    ``code`` must have length n - 2 with every element in 1..n.
    """
    if n < 2:
        raise OutOfRange(f"trees need at least 2 vertices, got n={n}")
    seq = tuple(code)
    if len(seq) != n - 2:
        raise OutOfRange(f"code for n={n} must have length {n - 2}, got {len(seq)}")
    degree = [1] * (n + 1)
    for a in seq:
        if not 1 <= a <= n:
            raise LabelOutOfRange(a, n)
        degree[a] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, a), max(leaf, a)))
        degree[leaf] -= 1
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    last = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return LabeledTree(n, frozenset(edges))


def orient_tree(t: LabeledTree) -> LabeledDag:
    """Direct each tree edge from its earlier-removed endpoint to the later.

    Positions refer to the Prufer removal order, so every non-final vertex
    points at exactly one later vertex and the result is acyclic by
    construction. The removal order is also the minimal source sequence of
    the oriented graph: the sources left after deleting a prefix are
    precisely the leaves the Prufer process would see.
    """
    position = {v: i for i, v in enumerate(prufer_encode(t).removal)}
    directed = frozenset(
        (u, v) if position[u] < position[v] else (v, u) for u, v in t.edges
    )
    return LabeledDag(t.n, directed)


def bridge_sequence(t: LabeledTree) -> SetSequence:
    """The set sequence of the oriented tree, read off the Prufer trace.

    With trace code a_1..a_{n-2} and removal order v_1..v_n the encoding
    of the oriented tree is S_1 = {v_n} and S_{n-i} = {a_i}; all sets are
    singletons. Equals ``encode(orient_tree(t))`` computed through the
    graph codec, which is what makes the codec a generalisation of Prufer
    coding.
    """
    n = t.n
    trace = prufer_encode(t)
    sets: list[frozenset[int]] = [frozenset()] * (n - 1)
    sets[0] = frozenset({trace.removal[-1]})
    for i, a in enumerate(trace.code, start=1):
        sets[n - i - 1] = frozenset({a})
    return SetSequence(n, tuple(sets))
