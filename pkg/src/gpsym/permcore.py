"""Permutations on the labelled vertex set of P(n,k) and groups generated by them.

Vertices are encoded as integers: outer vertex u_i is ``i`` and inner vertex
v_i is ``n + i``, with ``0 <= i < n``.  The display label ``u_n`` is the
residue 0, so ``u10`` on P(10,3) is the integer 0.
"""
from __future__ import annotations

import enum
import math
import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

DEFAULT_GROUP_CAP = 1000


class DomainMismatchError(ValueError):
    """Two permutations (or a permutation and a graph) live on different vertex sets."""


class SizeLimitError(RuntimeError):
    """A closure or enumeration grew past its configured cap."""


class Ring(enum.Enum):
    OUTER = "u"
    INNER = "v"


@dataclass(frozen=True)
class Vertex:
    ring: Ring
    index: int
    n: int

    def __post_init__(self):
        if not 0 <= self.index < self.n:
            raise ValueError(f"vertex index {self.index} outside 0..{self.n - 1}")

    @property
    def code(self) -> int:
        return self.index if self.ring is Ring.OUTER else self.n + self.index

    @classmethod
    def from_code(cls, code: int, n: int) -> "Vertex":
        if not 0 <= code < 2 * n:
            raise ValueError(f"vertex code {code} outside 0..{2 * n - 1}")
        if code < n:
            return cls(Ring.OUTER, code, n)
        return cls(Ring.INNER, code - n, n)

    def __str__(self) -> str:
        return f"{self.ring.value}{self.index or self.n}"

    @classmethod
    def parse(cls, text: str, n: int) -> "Vertex":
        m = _VERTEX_RE.fullmatch(text.strip())
        if not m:
            raise ValueError(f"not a vertex label: {text!r}")
        return cls._from_match(m, n)

    @classmethod
    def _from_match(cls, m: re.Match, n: int) -> "Vertex":
        label = int(m.group(2))
        if not 1 <= label <= n:
            raise ValueError(f"vertex label {m.group(0)!r} out of range 1..{n}")
        return cls(Ring(m.group(1)), label % n, n)


# accepts u7, u_7, u_{10}, and the same with v
_VERTEX_RE = re.compile(r"([uv])\s*_?\s*\{?\s*(\d+)\s*\}?")


def vertex_label(code: int, n: int) -> str:
    return str(Vertex.from_code(code, n))


def parse_vertex(text: str, n: int) -> int:
    return Vertex.parse(text, n).code


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included as 1-cycles."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(sorted(Counter(lengths).items(), reverse=True)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __getitem__(self, length: int) -> int:
        return self.as_dict().get(length, 0)

    @property
    def degree(self) -> int:
        return sum(length * count for length, count in self.counts)

    def __eq__(self, other):
        if isinstance(other, CycleType):
            return self.counts == other.counts
        if isinstance(other, Mapping):
            return self.as_dict() == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{length}:{count}" for length, count in self.counts) + "}"


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``range(len(images))``; ``p(x) == images[x]``.

    For P(n,k) the degree is 2n; the u/v labels only make sense for even
    degree, but the algebra works on any degree (catalog models use it).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a permutation")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        # skips the bijectivity check for images produced by compose/inverse
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise ValueError(f"point {a} appears in more than one cycle")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation with u/v vertex labels, e.g. ``(u1 v4)(u2 u4)``.

        Whitespace, underscores, braces and commas are ignored; unlisted
        vertices are fixed.  A vertex listed twice is an error.
        """
        body = text.strip()
        if body in ("", "()", "id", "e"):
            return cls.identity(2 * n)
        if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", body):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for chunk in re.findall(r"\(([^()]*)\)", body):
            stripped = _VERTEX_RE.sub("", chunk)
            if stripped.replace(",", "").strip():
                raise ValueError(f"unexpected characters in cycle ({chunk})")
            cycles.append([Vertex._from_match(m, n).code for m in _VERTEX_RE.finditer(chunk)])
        return cls.from_cycles(cycles, 2 * n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            result = compose(base, result)
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return element_order(self)

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def to_cycle_string(self, n: int | None = None) -> str:
        """Cycle notation; u/v vertex labels when the degree is even (or n is given)."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        if n is None and self.degree % 2 == 0:
            n = self.degree // 2
        if n is None:
            return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return "".join("(" + " ".join(vertex_label(x, n) for x in c) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.to_cycle_string()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``compose(p, q)(x) == p(q(x))``: q is applied first."""
    if p.degree != q.degree:
        raise DomainMismatchError(f"degree {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation._trusted(tuple(pi[x] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def element_order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles(include_fixed=True))) if p.degree else 1


def cycle_type(p: Permutation) -> CycleType:
    return CycleType.from_lengths(len(c) for c in p.cycles(include_fixed=True))


def conjugate(p: Permutation, q: Permutation) -> Permutation:
    """q p q^-1."""
    return compose(compose(q, p), q.inverse())


class PermGroup:
    """A finite permutation group with its full, lexicographically sorted element list."""

    __slots__ = ("degree", "generators", "elements", "_index", "__weakref__")

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Iterable[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def n(self) -> int:
        """The P(n,k) parameter for groups acting on 2n vertices."""
        return self.degree // 2

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def index(self, p: Permutation) -> int:
        return self._index[p]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(p in other for p in self.elements)

    def conjugate_by(self, q: Permutation) -> "PermGroup":
        return PermGroup(
            self.degree,
            [conjugate(g, q) for g in self.generators],
            (conjugate(p, q) for p in self.elements),
        )

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree}, gens={len(self.generators)})"


def closure(
    generators: Sequence[Permutation],
    degree: int | None = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> PermGroup:
    """Enumerate the group generated by ``generators`` breadth-first.

    ``degree`` is required only when ``generators`` is empty.
    """
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("closure of no generators needs an explicit degree")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DomainMismatchError(f"generator of degree {g.degree} in a degree-{degree} closure")
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    moving = [g for g in gens if not g.is_identity()]
    while queue:
        x = queue.popleft()
        for g in moving:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise SizeLimitError(f"closure exceeded the cap of {cap} elements")
                queue.append(y)
    return PermGroup(degree, gens, seen)


def trivial_group(degree: int) -> PermGroup:
    return closure([], degree=degree)
