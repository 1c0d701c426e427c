"""Brute-force automorphism groups by individualization and equitable refinement.

The search enumerates every automorphism as a leaf of the search tree, so
its output is the full element set rather than a generating set.  Nothing
about the Petersen structure is assumed: in particular the initial
partition is the unit partition, since some automorphisms swap the rings.
"""
from __future__ import annotations

import os
from collections import deque
from typing import Sequence

from .permcore import DEFAULT_GROUP_CAP, Permutation, PermGroup, SizeLimitError, closure
from .petersen import PetersenGraph

DEFAULT_NODE_BUDGET = 10**7
DEFAULT_MAX_N = 50


class SearchBudgetError(RuntimeError):
    pass


def node_budget_from_env(default: int = DEFAULT_NODE_BUDGET) -> int:
    raw = os.environ.get("TSG_NODE_BUDGET")
    return int(raw) if raw else default


class _Partition:
    """Ordered partition stored nauty-style: ``lab`` holds vertices cell by
    cell, a cell is identified by its start offset into ``lab``."""

    __slots__ = ("lab", "cell_of", "length")

    def __init__(self, lab, cell_of, length):
        self.lab = lab
        self.cell_of = cell_of
        self.length = length

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]], nv: int) -> "_Partition":
        lab, cell_of, length = [], [0] * nv, {}
        for cell in cells:
            start = len(lab)
            length[start] = len(cell)
            for v in cell:
                cell_of[v] = start
                lab.append(v)
        if sorted(lab) != list(range(nv)):
            raise ValueError("partition does not cover each vertex exactly once")
        return cls(lab, cell_of, length)

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.cell_of[:], dict(self.length))

    def cells(self) -> list[list[int]]:
        return [self.lab[s : s + self.length[s]] for s in sorted(self.length)]

    def is_discrete(self) -> bool:
        return len(self.length) == len(self.lab)

    def first_nonsingleton(self) -> int | None:
        for s in sorted(self.length):
            if self.length[s] > 1:
                return s
        return None

    def individualize(self, start: int, v: int) -> None:
        size = self.length[start]
        cell = self.lab[start : start + size]
        rest = sorted(x for x in cell if x != v)
        self.lab[start : start + size] = [v] + rest
        self.length[start] = 1
        self.length[start + 1] = size - 1
        for x in rest:
            self.cell_of[x] = start + 1

    def refine(self, adj: Sequence[Sequence[int]], queue: list[int]) -> list:
        """Split cells until equitable; returns a trace of every split.

        Fragments are ordered by neighbour count and all of them are queued as
        new splitters, so the result does not depend on vertex names.
        """
        trace = []
        pending = deque(queue)
        queued = set(queue)
        while pending:
            s = pending.popleft()
            queued.discard(s)
            counts: dict[int, int] = {}
            for x in self.lab[s : s + self.length[s]]:
                for y in adj[x]:
                    counts[y] = counts.get(y, 0) + 1
            touched = sorted({self.cell_of[y] for y in counts})
            for c in touched:
                size = self.length[c]
                if size == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for x in self.lab[c : c + size]:
                    groups.setdefault(counts.get(x, 0), []).append(x)
                if len(groups) == 1:
                    continue
                pos = c
                split = []
                for cnt in sorted(groups):
                    frag = sorted(groups[cnt])
                    self.lab[pos : pos + len(frag)] = frag
                    self.length[pos] = len(frag)
                    for x in frag:
                        self.cell_of[x] = pos
                    split.append((cnt, len(frag)))
                    if pos not in queued:
                        pending.append(pos)
                        queued.add(pos)
                    pos += len(frag)
                trace.append((s, c, tuple(split)))
        return trace


def refine_partition(g: PetersenGraph | Sequence[Sequence[int]], partition: Sequence[Sequence[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    adj = _adjacency(g)
    part = _Partition.from_cells(partition, len(adj))
    part.refine(adj, sorted(part.length))
    return part.cells()


def is_equitable(adj: Sequence[Sequence[int]], cells: Sequence[Sequence[int]]) -> bool:
    where = {}
    for i, cell in enumerate(cells):
        for v in cell:
            where[v] = i
    for cell in cells:
        profiles = set()
        for v in cell:
            prof = [0] * len(cells)
            for y in adj[v]:
                prof[where[y]] += 1
            profiles.add(tuple(prof))
        if len(profiles) > 1:
            return False
    return True


def _adjacency(g) -> list[list[int]]:
    if isinstance(g, PetersenGraph):
        return [sorted(a) for a in g.adjacency]
    return [sorted(a) for a in g]


def automorphisms_of(
    adjacency: Sequence[Sequence[int]],
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_GROUP_CAP,
) -> list[Permutation]:
    """Every automorphism of a simple graph given by adjacency lists."""
    adj = _adjacency(adjacency)
    nv = len(adj)
    edges = {frozenset((a, b)) for a in range(nv) for b in adj[a]}
    root = _Partition.from_cells([list(range(nv))], nv)
    root.refine(adj, [0])
    found: list[Permutation] = []
    nodes = 0

    # explicit stack keeps deep searches off the Python recursion limit
    stack = [(root, root)]
    while stack:
        pi, tau = stack.pop()
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"automorphism search exceeded {node_budget} nodes")
        if pi.is_discrete():
            images = [0] * nv
            for a, b in zip(pi.lab, tau.lab):
                images[a] = b
            if all(frozenset((images[a], images[b])) in edges for a, b in (tuple(e) for e in edges)):
                found.append(Permutation(tuple(images)))
                if len(found) > cap:
                    raise SizeLimitError(f"automorphism group exceeded the cap of {cap} elements")
            continue
        c = pi.first_nonsingleton()
        v = pi.lab[c]
        pi_v = pi.copy()
        pi_v.individualize(c, v)
        trace = pi_v.refine(adj, [c])
        shape = sorted(pi_v.length.items())
        children = []
        for w in sorted(tau.lab[c : c + tau.length[c]]):
            tau_w = tau.copy()
            tau_w.individualize(c, w)
            if tau_w.refine(adj, [c]) != trace or sorted(tau_w.length.items()) != shape:
                continue
            children.append((pi_v, tau_w))
        # reversed so targets are explored in canonical vertex order
        stack.extend(reversed(children))
    return sorted(found)


def automorphism_group(
    g: PetersenGraph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_n: int = DEFAULT_MAX_N,
    cap: int = DEFAULT_GROUP_CAP,
) -> PermGroup:
    if g.n > max_n:
        raise SizeLimitError(f"n={g.n} exceeds the configured cap of {max_n}")
    elements = automorphisms_of(g.adjacency, node_budget=node_budget, cap=cap)
    return PermGroup(2 * g.n, _generating_subset(elements), elements)


def _generating_subset(elements: Sequence[Permutation]) -> list[Permutation]:
    """Greedy generating set: scan in canonical order, keep what is not yet generated."""
    if not elements:
        return []
    degree = elements[0].degree
    gens: list[Permutation] = []
    current = {Permutation.identity(degree)}
    target = len(elements)
    for p in sorted(elements, key=lambda q: (-q.order(), q)):
        if len(current) == target:
            break
        if p not in current:
            gens.append(p)
            current = set(closure(gens, degree=degree).elements)
    return gens
