"""Kneser graphs and their two-block-partition ("total") variant.

kg(n, k) has the k-subsets of {1..n} as vertices, joined when disjoint.
total_kneser(n) has the unordered partitions of {1..n} into two nonempty
blocks as vertices, joined when one block of one partition is contained
in a block of the other.  Partitions are canonicalized so that block_a
is the block containing element 1; bitmasks carry the blocks (bit e-1
set when element e is in block_a).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphcore import Graph, induced_subgraph

__all__ = [
    "TwoBlockPartition",
    "kg",
    "nested",
    "total_kneser",
    "remove_singleton_partitions",
    "all_partitions",
    "spherelike_partitions",
]

MAX_GROUND_SET = 24


@dataclass(frozen=True)
class TwoBlockPartition:
    """Unordered partition of {1..n} into two nonempty blocks.

    Canonical form: ``mask`` is the bitmask of the block containing
    element 1, so ``mask`` is odd and never the full set.
    """

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"ground set must have at least 2 elements, got n={self.n}")
        full = (1 << self.n) - 1
        m = self.mask
        if not 0 < m < full:
            raise ValueError("both blocks must be nonempty")
        if m & ~full:
            raise ValueError(f"mask {m:#x} out of range for n={self.n}")
        if not m & 1:
            object.__setattr__(self, "mask", m ^ full)

    @classmethod
    def from_block(cls, n: int, members) -> TwoBlockPartition:
        m = 0
        for e in members:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} out of range 1..{n}")
            if m >> (e - 1) & 1:
                raise ValueError(f"repeated element {e}")
            m |= 1 << (e - 1)
        return cls(n, m)

    @classmethod
    def from_label(cls, text: str) -> TwoBlockPartition:
        """Parse "1 2|3 4 5" form; the two sides must partition 1..n."""
        left, sep, right = text.partition("|")
        if not sep:
            raise ValueError(f"partition label {text!r} has no '|'")
        try:
            a = [int(x) for x in left.split()]
            b = [int(x) for x in right.split()]
        except ValueError:
            raise ValueError(f"partition label {text!r} has non-integer entries") from None
        n = len(a) + len(b)
        if sorted(a + b) != list(range(1, n + 1)):
            raise ValueError(f"label {text!r} does not partition 1..{n}")
        if not a or not b:
            raise ValueError(f"label {text!r} has an empty block")
        return cls.from_block(n, a)

    @property
    def block_a(self) -> tuple[int, ...]:
        return tuple(e for e in range(1, self.n + 1) if self.mask >> (e - 1) & 1)

    @property
    def block_b(self) -> tuple[int, ...]:
        return tuple(e for e in range(1, self.n + 1) if not self.mask >> (e - 1) & 1)

    @property
    def min_block_size(self) -> int:
        c = self.mask.bit_count()
        return min(c, self.n - c)

    @property
    def label(self) -> str:
        return "{}|{}".format(
            " ".join(map(str, self.block_a)), " ".join(map(str, self.block_b))
        )

    def __str__(self):
        return self.label


def nested(p: TwoBlockPartition, q: TwoBlockPartition) -> bool:
    """True when a block of p is contained in a block of q.

    The condition is symmetric: a block containment one way forces the
    complementary containment the other way.  nested(p, p) is True.
    """
    if p.n != q.n:
        raise ValueError(f"mismatched ground sets: n={p.n} vs n={q.n}")
    full = (1 << p.n) - 1
    a, c = p.mask, q.mask
    b, d = a ^ full, c ^ full
    return not (a & ~c) or not (a & ~d) or not (b & ~c) or not (b & ~d)


def kg(n: int, k: int) -> Graph:
    """Kneser graph on k-subsets of {1..n}; labels are sorted member lists."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 2 * k:
        raise ValueError(f"kg requires n >= 2k, got n={n}, k={k}")
    subsets = list(combinations(range(1, n + 1), k))
    labels = [" ".join(map(str, s)) for s in subsets]
    masks = [sum(1 << (e - 1) for e in s) for s in subsets]
    edges = [
        (i, j)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if not masks[i] & masks[j]
    ]
    return Graph(labels, edges)


def all_partitions(n: int) -> list[TwoBlockPartition]:
    """All 2^(n-1) - 1 canonical partitions, ascending by block_a mask."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > MAX_GROUND_SET:
        raise ValueError(f"refusing n={n} > {MAX_GROUND_SET} (vertex count 2^(n-1) - 1)")
    full = (1 << n) - 1
    return [TwoBlockPartition(n, m) for m in range(1, full, 2)]


def spherelike_partitions(n: int) -> list[TwoBlockPartition]:
    """The canonical partitions with both blocks of size at least 2."""
    return [p for p in all_partitions(n) if p.min_block_size >= 2]


def _partition_graph(parts: list[TwoBlockPartition], n: int) -> Graph:
    full = (1 << n) - 1
    masks = [p.mask for p in parts]
    edges = []
    for i in range(len(masks)):
        a = masks[i]
        b = a ^ full
        for j in range(i + 1, len(masks)):
            c = masks[j]
            d = c ^ full
            if not (a & ~c) or not (a & ~d) or not (b & ~c) or not (b & ~d):
                edges.append((i, j))
    return Graph([p.label for p in parts], edges)


def total_kneser(n: int) -> Graph:
    """Graph on all two-block partitions of {1..n}, edges between nested pairs."""
    parts = all_partitions(n)
    return _partition_graph(parts, n)


def remove_singleton_partitions(g: Graph) -> Graph:
    """Induced subgraph on the partition labels whose blocks both have >= 2 elements."""
    keep = []
    for v, label in enumerate(g.labels):
        p = TwoBlockPartition.from_label(label)
        if p.min_block_size >= 2:
            keep.append(v)
    return induced_subgraph(g, keep)
