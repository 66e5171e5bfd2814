"""Exception hierarchy shared by all dagcodec modules."""

from __future__ import annotations


class DagCodecError(ValueError):
    """Base class for all dagcodec errors."""


class LabelOutOfRange(DagCodecError):
    """A vertex label lies outside {1..n}."""

    def __init__(self, label: int, n: int):
        super().__init__(f"label {label} out of range 1..{n}")
        self.label = label
        self.n = n


class SelfLoop(DagCodecError):
    """An edge of the form (u, u)."""

    def __init__(self, label: int):
        super().__init__(f"self-loop edge ({label}, {label})")
        self.label = label


class CyclicGraph(DagCodecError):
    """The directed graph contains a cycle.

    ``stuck`` holds the vertex set remaining when source peeling first
    stalled; every directed cycle of the graph lies inside it.
    """

    def __init__(self, stuck: frozenset[int]):
        vertices = ", ".join(str(v) for v in sorted(stuck))
        super().__init__(f"directed cycle detected among vertices {{{vertices}}}")
        self.stuck = stuck


class InvalidSequence(DagCodecError):
    """A set sequence violates the prefix-union bound.

    ``k`` is the first prefix length whose union exceeds it.
    """

    def __init__(self, k: int, union_size: int):
        super().__init__(
            f"invalid sequence at prefix k={k}: union of S_1..S_{k} "
            f"has {union_size} elements, limit is {k}"
        )
        self.k = k
        self.union_size = union_size


class NotATree(DagCodecError):
    """The edge set does not form a tree on the given vertices."""


class OutOfRange(DagCodecError):
    """A count parameter lies outside the supported range."""
