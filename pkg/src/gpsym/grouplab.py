"""Subgroup lattices, conjugacy and isomorphism identification for small groups.

Everything here works on a Cayley table: a ``FiniteGroup`` numbers its
elements 0..m-1 (0 is the identity) and stores ``table[a, b] = a*b``.  For a
permutation group the numbering follows the sorted element list, so the
product is ``compose(elements[a], elements[b])``.  Subgroups are handled as
sorted index arrays and keyed by a packed membership bitmap.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import catalog
from .catalog import GroupLabel
from .permcore import Permutation, PermGroup, SizeLimitError, closure, conjugate

MAX_ORDER = 480


class NotASubgroupError(ValueError):
    pass


class UnknownLabelError(KeyError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table: np.ndarray, elements: tuple | None = None):
        self.table = np.ascontiguousarray(table, dtype=np.int32)
        self.order = len(self.table)
        self.elements = elements
        if self.order and not np.array_equal(self.table[0], np.arange(self.order)):
            raise ValueError("element 0 must be the identity")
        self.inverse = np.argmin(self.table, axis=1).astype(np.int32)

    @classmethod
    def from_perm_group(cls, group: PermGroup, cap: int = catalog.CAP) -> "FiniteGroup":
        if group.order > cap:
            raise SizeLimitError(f"group of order {group.order} exceeds the cap of {cap}")
        elems = list(group.elements)
        ident = group.identity
        # identity first, the rest in canonical order
        elems.remove(ident)
        elems.insert(0, ident)
        images = np.array([p.images for p in elems], dtype=np.int32).reshape(len(elems), group.degree)
        where = {row.tobytes(): i for i, row in enumerate(images)}
        table = np.empty((len(elems), len(elems)), dtype=np.int32)
        for a in range(len(elems)):
            prods = images[a][images]
            table[a] = [where[row.tobytes()] for row in prods]
        return cls(table, tuple(elems))

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def element_orders(self) -> np.ndarray:
        everything = np.arange(self.order)
        orders = np.ones(self.order, dtype=np.int64)
        power = everything.copy()
        done = power == 0
        step = 1
        while not done.all():
            power = self.table[power, everything]
            step += 1
            newly = (power == 0) & ~done
            orders[newly] = step
            done |= newly
        return orders

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def subgroup_closure(self, gens) -> np.ndarray:
        """Sorted indices of the subgroup generated by ``gens``."""
        current = np.unique(np.concatenate(([0], np.asarray(gens, dtype=np.int64))))
        while True:
            nxt = np.unique(self.table[np.ix_(current, current)])
            if len(nxt) == len(current):
                return current
            current = nxt

    @cached_property
    def conjugacy_classes(self) -> list[np.ndarray]:
        seen = np.zeros(self.order, dtype=bool)
        out = []
        everything = np.arange(self.order)
        for a in range(self.order):
            if seen[a]:
                continue
            cls = np.unique(self.table[self.table[everything, a], self.inverse])
            seen[cls] = True
            out.append(cls)
        return out

    @cached_property
    def centralizer_sizes(self) -> np.ndarray:
        return (self.table == self.table.T).sum(axis=1)

    def center(self) -> np.ndarray:
        return np.flatnonzero(self.centralizer_sizes == self.order)

    def derived_subgroup(self, members: np.ndarray | None = None) -> np.ndarray:
        members = np.arange(self.order) if members is None else members
        a = members[:, None]
        b = members[None, :]
        comm = self.table[self.table[self.table[a, b], self.inverse[a]], self.inverse[b]]
        return self.subgroup_closure(np.unique(comm))

    def subgroup(self, members) -> "FiniteGroup":
        members = np.asarray(sorted(int(x) for x in members))
        if members[0] != 0:
            raise NotASubgroupError("a subgroup must contain the identity")
        relabel = np.full(self.order, -1, dtype=np.int32)
        relabel[members] = np.arange(len(members))
        sub = relabel[self.table[np.ix_(members, members)]]
        if (sub < 0).any():
            raise NotASubgroupError("element set is not closed under the group operation")
        elems = tuple(self.elements[i] for i in members) if self.elements else None
        return FiniteGroup(sub, elems)

    @cached_property
    def fingerprint(self) -> tuple:
        orders = self.element_orders
        series = [self.order]
        current = np.arange(self.order)
        while True:
            nxt = self.derived_subgroup(current)
            if len(nxt) == len(current):
                break
            series.append(len(nxt))
            current = nxt
        return (
            self.order,
            self.is_abelian(),
            math.lcm(*(int(x) for x in orders)),
            len(self.center()),
            tuple(series),
            tuple(sorted(Counter(int(x) for x in orders).items())),
            len(self.conjugacy_classes),
        )


# --- isomorphism ----------------------------------------------------------

def _small_generating_set(g: FiniteGroup) -> list[int]:
    orders = g.element_orders
    reps = [int(c[0]) for c in g.conjugacy_classes]
    reps.sort(key=lambda a: -orders[a])
    if g.order == 1:
        return []
    for a in reps:
        if len(g.subgroup_closure([a])) == g.order:
            return [a]
    everything = sorted(range(1, g.order), key=lambda a: (-orders[a], a))
    for a in reps:
        for b in everything:
            if len(g.subgroup_closure([a, b])) == g.order:
                return [a, b]
    gens: list[int] = []
    current = np.array([0])
    for a in everything:
        if a not in current:
            gens.append(a)
            current = g.subgroup_closure(gens)
            if len(current) == g.order:
                break
    return gens


def _extend_hom(source: FiniteGroup, gens: list[int], images: list[int], target: FiniteGroup) -> np.ndarray | None:
    """The homomorphism sending gens to images, or None when none exists."""
    phi = np.full(source.order, -1, dtype=np.int64)
    phi[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = source.table[s, x]
                val = target.table[t, phi[x]]
                if phi[y] < 0:
                    phi[y] = val
                    nxt.append(int(y))
                elif phi[y] != val:
                    return None
        frontier = nxt
    return phi


def find_isomorphism(source: FiniteGroup, target: FiniteGroup) -> np.ndarray | None:
    """An explicit isomorphism source -> target as an index array, or None."""
    if source.order != target.order or source.fingerprint != target.fingerprint:
        return None
    gens = _small_generating_set(source)
    if not gens:
        return np.zeros(1, dtype=np.int64)
    s_ord, t_ord = source.element_orders, target.element_orders
    s_cent, t_cent = source.centralizer_sizes, target.centralizer_sizes

    def pool(a: int) -> list[int]:
        return [int(b) for b in np.flatnonzero((t_ord == s_ord[a]) & (t_cent == s_cent[a]))]

    # up to an inner automorphism of the target, the first image is a class representative
    first = [int(c[0]) for c in target.conjugacy_classes if t_ord[c[0]] == s_ord[gens[0]] and t_cent[c[0]] == s_cent[gens[0]]]
    pools = [first] + [pool(a) for a in gens[1:]]
    pair_order = s_ord[source.table[gens[0], gens[1]]] if len(gens) > 1 else None
    for images in itertools.product(*pools):
        if pair_order is not None and t_ord[target.table[images[0], images[1]]] != pair_order:
            continue
        phi = _extend_hom(source, gens, list(images), target)
        if phi is not None and len(np.unique(phi)) == source.order:
            return phi
    return None


@lru_cache(maxsize=None)
def _catalog_group(name: str) -> FiniteGroup:
    return FiniteGroup.from_perm_group(catalog.model(name))


def identify_group(group: PermGroup | FiniteGroup) -> GroupLabel:
    """Catalog label of ``group`` backed by an explicit isomorphism."""
    g = _as_finite(group)
    if g.order > catalog.CAP:
        raise SizeLimitError(f"group of order {g.order} exceeds the cap of {catalog.CAP}")
    fp = g.fingerprint
    for name, _ in catalog.candidates(g.order):
        model = _catalog_group(name)
        if model.fingerprint != fp:
            continue
        if find_isomorphism(model, g) is not None:
            return GroupLabel(name, fp)
    return GroupLabel(f"Unrecognized{fp}", fp)


def _as_finite(group) -> FiniteGroup:
    if isinstance(group, FiniteGroup):
        return group
    return FiniteGroup.from_perm_group(group)


# --- subgroup lattice -----------------------------------------------------

@dataclass
class SubgroupClass:
    representative: PermGroup
    class_size: int
    iso_label: GroupLabel
    element_order_histogram: dict[int, int]
    members: list[np.ndarray] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return self.representative.order


class SubgroupLattice:
    """All subgroups of a permutation group, grouped into conjugacy classes.

    Enumeration is by cyclic extension: starting from the trivial group,
    each class representative H is joined with one generator of every
    cyclic subgroup not already in H.  Each new subgroup registers its whole
    conjugacy class at once, so later hits on a conjugate are recognised.
    """

    def __init__(self, group: PermGroup, cap: int = MAX_ORDER):
        if group.order > cap:
            raise SizeLimitError(f"group of order {group.order} exceeds the subgroup cap of {cap}")
        self.group = group
        self.fg = FiniteGroup.from_perm_group(group, cap=cap)
        self._index = {p: i for i, p in enumerate(self.fg.elements)}
        self._classes: list[list[np.ndarray]] = []
        self._key_to_class: dict[bytes, int] = {}
        self._enumerate()

    def _key(self, members: np.ndarray) -> bytes:
        mask = np.zeros(self.fg.order, dtype=bool)
        mask[members] = True
        return np.packbits(mask).tobytes()

    def _conjugates(self, members: np.ndarray) -> list[np.ndarray]:
        t, inv = self.fg.table, self.fg.inverse
        every = np.arange(self.fg.order)[:, None]
        images = np.sort(t[t[every, members[None, :]], inv[every]], axis=1)
        uniq = np.unique(images, axis=0)
        return [row for row in uniq]

    def _register(self, members: np.ndarray) -> bool:
        key = self._key(members)
        if key in self._key_to_class:
            return False
        idx = len(self._classes)
        conj = self._conjugates(members)
        for c in conj:
            self._key_to_class[self._key(c)] = idx
        self._classes.append(conj)
        return True

    def _enumerate(self) -> None:
        fg = self.fg
        cyclic_gens = []
        seen_cyclic = set()
        for a in range(1, fg.order):
            c = fg.subgroup_closure([a])
            key = self._key(c)
            if key not in seen_cyclic:
                seen_cyclic.add(key)
                cyclic_gens.append(a)
        self._register(np.array([0]))
        pending = [0]
        while pending:
            nxt = []
            for ci in pending:
                rep = self._classes[ci][0]
                inside = np.zeros(fg.order, dtype=bool)
                inside[rep] = True
                for a in cyclic_gens:
                    if inside[a]:
                        continue
                    k = fg.subgroup_closure(np.append(rep, a))
                    if self._register(k):
                        nxt.append(len(self._classes) - 1)
            pending = nxt
        # canonical order: by subgroup order, then the smallest member index list
        for c in self._classes:
            c.sort(key=lambda m: tuple(m))
        self._classes.sort(key=lambda c: (len(c[0]), tuple(self._perm_key(c[0]))))
        self._key_to_class = {self._key(m): i for i, c in enumerate(self._classes) for m in c}

    def _perm_key(self, members: np.ndarray):
        return sorted(self.fg.elements[i] for i in members)

    def to_perm_group(self, members: np.ndarray) -> PermGroup:
        elems = [self.fg.elements[i] for i in members]
        sub = self.fg.subgroup(members)
        gens = [elems[i] for i in _small_generating_set(sub)]
        return PermGroup(self.group.degree, gens, elems)

    def members_of(self, h: PermGroup) -> np.ndarray:
        try:
            return np.array(sorted(self._index[p] for p in h.elements))
        except KeyError:
            raise NotASubgroupError("element set is not contained in the ambient group") from None

    def class_index(self, h: PermGroup) -> int:
        key = self._key(self.members_of(h))
        if key not in self._key_to_class:
            raise NotASubgroupError("element set is not a subgroup of the ambient group")
        return self._key_to_class[key]

    @property
    def class_member_lists(self) -> list[list[np.ndarray]]:
        return self._classes

    def subgroup_count(self) -> int:
        return sum(len(c) for c in self._classes)

    def all_subgroups(self) -> list[PermGroup]:
        out = [self.to_perm_group(m) for c in self._classes for m in c]
        out.sort(key=lambda h: (h.order, h.elements))
        return out

    @lru_cache(maxsize=None)
    def label_of_class(self, idx: int) -> GroupLabel:
        return identify_group(self.fg.subgroup(self._classes[idx][0]))

    def subgroup_classes(self) -> list[SubgroupClass]:
        out = []
        for i, members in enumerate(self._classes):
            rep = self.to_perm_group(members[0])
            hist = Counter(int(self.fg.element_orders[x]) for x in members[0])
            out.append(SubgroupClass(rep, len(members), self.label_of_class(i), dict(sorted(hist.items())), members))
        return out

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other


_LATTICES: dict[PermGroup, SubgroupLattice] = {}


def lattice(group: PermGroup, cap: int = MAX_ORDER) -> SubgroupLattice:
    """Cached lattice; groups are hashed by their element set."""
    if group not in _LATTICES:
        _LATTICES[group] = SubgroupLattice(group, cap=cap)
    return _LATTICES[group]


def all_subgroups(group: PermGroup, cap: int = MAX_ORDER) -> list[PermGroup]:
    return lattice(group, cap).all_subgroups()


def conjugacy_classes_of_subgroups(group: PermGroup, label: str | GroupLabel | None = None, cap: int = MAX_ORDER) -> list[SubgroupClass]:
    classes = lattice(group, cap).subgroup_classes()
    if label is None:
        return classes
    name = catalog.canonical_name(str(label))
    try:
        catalog.order_of_label(name)
    except KeyError:
        raise UnknownLabelError(f"unknown group label {label!r}") from None
    return [c for c in classes if c.iso_label.name == name]


def isomorphism_classes(group: PermGroup, cap: int = MAX_ORDER) -> list[tuple[GroupLabel, int]]:
    """(label, number of conjugacy classes) pairs, ordered by group order then label."""
    counts: Counter = Counter()
    order_of = {}
    for c in conjugacy_classes_of_subgroups(group, cap=cap):
        counts[c.iso_label] += 1
        order_of[c.iso_label] = c.order
    return sorted(counts.items(), key=lambda kv: (order_of[kv[0]], kv[0].name))


def is_maximal_subgroup(h: PermGroup, g: PermGroup, cap: int = MAX_ORDER) -> bool:
    """True iff h is a proper subgroup of g with nothing strictly between them."""
    if h.degree != g.degree or not all(p in g for p in h.elements):
        raise NotASubgroupError("first argument is not contained in the second")
    if h.order == g.order:
        return False
    fg = FiniteGroup.from_perm_group(g, cap=cap)
    index = {p: i for i, p in enumerate(fg.elements)}
    members = np.array(sorted(index[p] for p in h.elements))
    if len(fg.subgroup_closure(members)) != len(members):
        raise NotASubgroupError("first argument is not closed under composition")
    inside = np.zeros(fg.order, dtype=bool)
    inside[members] = True
    # every intermediate subgroup contains <h, x> for some x outside h
    for x in range(fg.order):
        if not inside[x] and len(fg.subgroup_closure(np.append(members, x))) != fg.order:
            return False
    return True


def normalizer(h: PermGroup, g: PermGroup) -> PermGroup:
    hs = h.element_set()
    elems = [x for x in g.elements if all(conjugate(p, x) in hs for p in h.generators or h.elements)]
    return PermGroup(g.degree, [], elems)


def subgroup_of(group: PermGroup, generators: list[Permutation]) -> PermGroup:
    return closure(generators, degree=group.degree)
