"""Generalized Petersen graphs P(n,k) with classed edges."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .permcore import DomainMismatchError, Permutation, PermGroup, vertex_label


class ConstructionError(ValueError):
    pass


class EdgeClass(enum.Enum):
    OUTER = "outer"
    INNER = "inner"
    SPOKE = "spoke"


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    cls: EdgeClass

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((self.a, self.b))


class PetersenGraph:
    def __init__(self, n: int, k: int):
        check_parameters(n, k)
        self.n = n
        self.k = k
        edges = []
        for i in range(n):
            edges.append(Edge(i, (i + 1) % n, EdgeClass.OUTER))
        for i in range(n):
            edges.append(Edge(n + i, n + (i + k) % n, EdgeClass.INNER))
        for i in range(n):
            edges.append(Edge(i, n + i, EdgeClass.SPOKE))
        self.edges = tuple(edges)
        adj: list[set[int]] = [set() for _ in range(2 * n)]
        for e in edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        self.adjacency = tuple(frozenset(s) for s in adj)

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @cached_property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(e.endpoints for e in self.edges)

    @cached_property
    def spoke_set(self) -> frozenset[frozenset[int]]:
        return frozenset(e.endpoints for e in self.edges if e.cls is EdgeClass.SPOKE)

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        return vertex_label(v, self.n)

    def inner_cycle_count(self) -> int:
        seen: set[int] = set()
        count = 0
        for i in range(self.n):
            if i in seen:
                continue
            count += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = (j + self.k) % self.n
        return count

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "k": self.k,
            "vertices": [self.label(v) for v in range(2 * self.n)],
            "edges": [{"a": self.label(e.a), "b": self.label(e.b), "class": e.cls.value} for e in self.edges],
        }
        return json.dumps(doc, indent=2)

    def to_dot(self) -> str:
        lines = [f'graph "P({self.n},{self.k})" {{']
        for v in range(2 * self.n):
            lines.append(f"  {self.label(v)};")
        for e in self.edges:
            lines.append(f'  {self.label(e.a)} -- {self.label(e.b)} [class="{e.cls.value}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"P({self.n},{self.k})"


def check_parameters(n: int, k: int) -> None:
    if n < 3:
        raise ConstructionError(f"n must be at least 3 (got n={n})")
    if k < 1:
        raise ConstructionError(f"k must be at least 1 (got k={k})")
    if 2 * k >= n:
        raise ConstructionError(f"need 2k < n (got n={n}, k={k})")


def build(n: int, k: int) -> PetersenGraph:
    return PetersenGraph(n, k)


def admissible_pairs(max_n: int, min_n: int = 3) -> list[tuple[int, int]]:
    return [(n, k) for n in range(min_n, max_n + 1) for k in range(1, (n + 1) // 2) if 2 * k < n]


def is_automorphism(g: PetersenGraph, p: Permutation) -> bool:
    if p.degree != g.num_vertices:
        raise DomainMismatchError(f"permutation of degree {p.degree} on {g!r}")
    edges = g.edge_set
    img = p.images
    return all(frozenset((img[a], img[b])) in edges for a, b in (tuple(e) for e in edges))


def setwise_invariant(p: Permutation, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return frozenset(p(x) for x in s) == s


def has_free_edge(g: PetersenGraph, group: PermGroup) -> bool:
    """True when some edge has no nontrivial group element fixing both endpoints."""
    for p in group.elements:
        if not is_automorphism(g, p):
            raise ValueError(f"{p} is not an automorphism of {g!r}")
    nontrivial = [p.images for p in group.elements if not p.is_identity()]
    for e in g.edges:
        if not any(img[e.a] == e.a and img[e.b] == e.b for img in nontrivial):
            return True
    return False

