"""Disjoint-set forest with path compression and union by rank."""

from __future__ import annotations

import math


class Forest:
    """Union-find over integer node ids ``0..len-1``.

    Two counters are kept for amortized-cost measurements: ``operations``
    counts find/merge calls (including the finds a merge performs) and
    ``traversals`` counts parent links followed while searching for roots.

    >>> f = Forest(3)
    >>> f.merge(0, 2)
    0
    >>> f.find_root(2), f.find_root(1)
    (0, 1)
    """

    def __init__(self, size: int = 0):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.operations = 0
        self.traversals = 0

    def __len__(self) -> int:
        return len(self.parent)

    def make_node(self) -> int:
        n = len(self.parent)
        self.parent.append(n)
        self.rank.append(0)
        return n

    def extend(self, count: int) -> range:
        start = len(self.parent)
        self.parent.extend(range(start, start + count))
        self.rank.extend([0] * count)
        return range(start, start + count)

    def find_root(self, n: int) -> int:
        # Two passes instead of recursion: adversarial chains must not hit
        # the interpreter's recursion limit.
        parent = self.parent
        if not 0 <= n < len(parent):
            raise KeyError(f"unknown node {n}")
        self.operations += 1
        root = n
        p = parent[root]
        steps = 0
        while p != root:
            root = p
            p = parent[root]
            steps += 1
        self.traversals += steps
        while n != root:
            p = parent[n]
            parent[n] = root
            n = p
        return root

    def merge(self, x: int, y: int) -> int:
        """Unite the classes of ``x`` and ``y`` and return the surviving root.

        The higher-rank root survives; on a tie the root of ``x`` survives
        and its rank grows by one.
        """
        r1 = self.find_root(x)
        r2 = self.find_root(y)
        self.operations += 1
        if r1 == r2:
            return r1
        rank = self.rank
        if rank[r1] > rank[r2]:
            self.parent[r2] = r1
            return r1
        if rank[r2] > rank[r1]:
            self.parent[r1] = r2
            return r2
        self.parent[r2] = r1
        rank[r1] += 1
        return r1

    def is_root(self, n: int) -> bool:
        return self.parent[n] == n

    def classes(self) -> dict[int, list[int]]:
        """Group nodes by root without compressing paths or touching counters."""
        parent = self.parent
        out: dict[int, list[int]] = {}
        for n in range(len(parent)):
            r = n
            while parent[r] != r:
                r = parent[r]
            out.setdefault(r, []).append(n)
        return out

    def check_invariants(self) -> None:
        """Raise AssertionError if the rank invariants are violated."""
        parent, rank = self.parent, self.rank
        for n in range(len(parent)):
            p = parent[n]
            if p != n and not rank[n] < rank[p]:
                raise AssertionError(f"rank({n})={rank[n]} not below rank of parent {p}")
        for root, members in self.classes().items():
            if rank[root] > int(math.log2(len(members))):
                raise AssertionError(
                    f"root {root} has rank {rank[root]} for a class of size {len(members)}"
                )
