"""Realizability verdicts for subgroups of Aut(P(n,k)).

A verdict has two parts: whether the subgroup is realizable as the full
symmetry group of some embedding, and whether it is positively realizable
(orientation preserving symmetries only).  The decision is a dispatch on
(n,k); negative answers carry a witness that explains them.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import catalog, grouplab
from .autsearch import automorphism_group, node_budget_from_env
from .paperlib import EXCEPTIONAL_PAIRS, P103_NOT_POSITIVE, bnk_generators, ring_swap, rotation, square_class
from .permcore import Permutation, PermGroup, SizeLimitError, closure, conjugate
from .petersen import PetersenGraph, build, check_parameters, is_automorphism


class Answer(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"
    EXTERNAL = "ExternalReference"


class ObstructionKind(enum.Enum):
    ORDER2_SIX_TWO_CYCLES = "Order2SixTwoCycles"
    ORDER4_ADJACENT_TWO_CYCLE = "Order4AdjacentTwoCycle"
    ORDER6_WITH_THREE_CYCLES = "Order6WithThreeCycles"
    ORDER4_FORM_VIOLATION = "Order4FormViolation"
    GROUP_FORM_ZR_Z4 = "GroupFormZrZ4"


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    witness_element: Permutation | None = None

    def describe(self) -> str:
        if self.witness_element is None:
            return self.kind.value
        p = self.witness_element
        return f"{self.kind.value}: {p.to_cycle_string()} (order {p.order()}, cycle type {p.cycle_type()})"


@dataclass(frozen=True)
class Citation:
    id: str
    quote: str


# short statements of the results each verdict relies on
CITATIONS = {
    "dihedral-all-subgroups": "D_n and every subgroup of it is positively realizable for every P(n,k).",
    "k2-plus1-all-subgroups": "If k^2 = 1 mod n, B(n,k) = D_n : Z_2 and all its subgroups are positively realizable.",
    "k2-minus1-all-realizable": "If k^2 = -1 mod n, B(n,k) = Z_n : Z_4 and all its subgroups are realizable.",
    "k2-minus1-positive": "If k^2 = -1 mod n, H <= B(n,k) is positively realizable iff H <= D_n, or n is even and H = Z_4.",
    "order4-elements": "If k^2 = -1 mod n, the order-4 elements of B(n,k) are exactly rho^m alpha^(+-1); none is positively realizable when n is odd.",
    "positive-implies-realizable": "A positively realizable subgroup is realizable.",
    "P(4,1)-summary": "Aut(P(4,1)) = S_4 x Z_2 and all its subgroups are positively realizable.",
    "P(8,3)-summary": "Aut(P(8,3)) = GL(2,3) : Z_2 and all its subgroups are positively realizable.",
    "P(10,2)-summary": "Aut(P(10,2)) = A_5 x Z_2 and all its subgroups are positively realizable.",
    "P(10,3)-all-realizable": "Aut(P(10,3)) = S_5 x Z_2 and all its subgroups are realizable.",
    "P(10,3)-not-positive": "Z_5:Z_4, Z_10:Z_4, S_5 x Z_2, Z_6 x Z_2, D_6 x Z_2, S_4, S_5, S_4 x Z_2, Z_4 x Z_2 and D_4 x Z_2 are not positively realizable for P(10,3).",
    "P(10,3)-positive": "D_10, Z_10, D_5, Z_5, D_2, Z_2, A_5 x Z_2, A_5, A_4 x Z_2, A_4, Z_3, Z_2^3, D_4, Z_4, D_6, Z_6 and D_3 are positively realizable for P(10,3).",
    "element-obstructions": "On P(10,3) no positively realizable group contains an involution with six 2-cycles, an order-4 element with a 2-cycle on adjacent vertices, or an order-6 element with 3-cycles.",
    "zr-z4-form": "A subgroup of the form Z_r : Z_4 with Z_4 acting by a square root of -1 is not positively realizable.",
    "P(5,2)-external": "Topological symmetry groups of the Petersen graph P(5,2) are determined in earlier work.",
    "deferred-pairs": "P(12,5) and P(24,5) are left open.",
}


def _cite(*ids: str) -> list[Citation]:
    return [Citation(i, CITATIONS[i]) for i in ids]


@dataclass
class Verdict:
    realizable: Answer
    positively_realizable: Answer
    citations: list[Citation] = field(default_factory=list)
    witness: Obstruction | None = None

    def __post_init__(self):
        if self.positively_realizable is Answer.YES and self.realizable is not Answer.YES:
            raise ValueError("a positively realizable group must be realizable")

    def to_dict(self, n: int, k: int, label: str = "", class_size: int = 1) -> dict:
        return {
            "n": n,
            "k": k,
            "subgroup_label": label,
            "class_size": class_size,
            "realizable": self.realizable.value,
            "positively_realizable": self.positively_realizable.value,
            "citations": [{"id": c.id, "quote": c.quote} for c in self.citations],
            "witness": self.witness.describe() if self.witness else None,
        }

    def to_json(self, n: int, k: int, label: str = "", class_size: int = 1) -> str:
        return json.dumps(self.to_dict(n, k, label, class_size), sort_keys=True)


class NotInAutomorphismGroupError(ValueError):
    pass


# --- obstructions ----------------------------------------------------------

def _has_adjacent_two_cycle(g: PetersenGraph, p: Permutation) -> bool:
    return any(len(c) == 2 and g.adjacent(c[0], c[1]) for c in p.cycles())


def obstruction_predicates(g: PetersenGraph, p: Permutation) -> list[ObstructionKind]:
    """Element-level obstruction kinds satisfied by a single automorphism."""
    kinds = []
    order = p.order()
    if order == 2 and p.cycle_type() == {2: 6, 1: 8}:
        kinds.append(ObstructionKind.ORDER2_SIX_TWO_CYCLES)
    if order == 4 and _has_adjacent_two_cycle(g, p):
        kinds.append(ObstructionKind.ORDER4_ADJACENT_TWO_CYCLE)
    if order == 6 and p.cycle_type()[3] > 0:
        kinds.append(ObstructionKind.ORDER6_WITH_THREE_CYCLES)
    return kinds


def _check_inside(g: PetersenGraph, h: PermGroup) -> None:
    if h.degree != g.num_vertices:
        raise NotInAutomorphismGroupError(f"group acts on {h.degree} points, P({g.n},{g.k}) has {g.num_vertices}")
    for p in h.generators or h.elements:
        if not is_automorphism(g, p):
            raise NotInAutomorphismGroupError(f"{p} is not an automorphism of P({g.n},{g.k})")


def obstruction_scan(g: PetersenGraph, h: PermGroup) -> list[Obstruction]:
    """One obstruction per element-level kind present in h, witnessed by its first such element."""
    _check_inside(g, h)
    found: dict[ObstructionKind, Permutation] = {}
    for p in h.elements:
        for kind in obstruction_predicates(g, p):
            found.setdefault(kind, p)
    return [Obstruction(kind, found[kind]) for kind in ObstructionKind if kind in found]


def zr_z4_witness(h: PermGroup) -> tuple[Permutation, Permutation] | None:
    """Elements (a, b) of h with b of order 4, b a b^-1 = a^j and j^2 = -1 mod ord(a) > 1.

    Then <a, b> is Z_r : Z_4 with the generator of Z_4 acting by a square
    root of -1, and it contains <b> properly.
    """
    fours = [p for p in h.elements if p.order() == 4]
    others = [p for p in h.elements if not p.is_identity()]
    for b in fours:
        powers = {b, b * b, b * b * b}
        for a in others:
            if a in powers:
                continue
            r = a.order()
            img = conjugate(a, b)
            power = a
            for j in range(1, r + 1):
                if power == img:
                    if (j * j + 1) % r == 0 and len(closure([a, b], cap=4 * r)) == 4 * r:
                        return a, b
                    break
                power = power * a
    return None


def order4_form_check(n: int, k: int) -> tuple[frozenset[Permutation], bool]:
    """Order-4 elements of B(n,k) and whether they are exactly rho^m alpha^(+-1)."""
    check_parameters(n, k)
    if square_class(n, k) != -1:
        raise ValueError(f"k^2 is not -1 mod n for (n,k)=({n},{k})")
    group = closure([g.perm for g in bnk_generators(n, k)])
    fours = frozenset(p for p in group.elements if p.order() == 4)
    rho, alpha = rotation(n), ring_swap(n, k)
    alpha_inv = alpha.inverse()
    form = set()
    power = Permutation.identity(2 * n)
    for _ in range(n):
        form.add(power * alpha)
        form.add(power * alpha_inv)
        power = rho * power
    return fours, fours == form


# --- dispatch --------------------------------------------------------------

@lru_cache(maxsize=None)
def aut_group(n: int, k: int) -> PermGroup:
    """Cached brute-force Aut(P(n,k)); the node budget comes from TSG_NODE_BUDGET when set."""
    return automorphism_group(build(n, k), node_budget=node_budget_from_env())


@lru_cache(maxsize=64)
def _dihedral(n: int, k: int) -> PermGroup:
    gens = bnk_generators(n, k)
    return closure([gens[0].perm, gens[1].perm])


def _inside_some_conjugate(h: PermGroup, d: PermGroup, g: PermGroup) -> bool:
    gens = h.generators or h.elements
    for x in g.elements:
        xi = x.inverse()
        if all(conjugate(p, xi) in d for p in gens):
            return True
    return False


def _identify(h: PermGroup) -> str:
    return grouplab.identify_group(h).name


def classify(n: int, k: int, h: PermGroup, label: str | None = None) -> Verdict:
    """Verdict for a subgroup h of Aut(P(n,k)); ``label`` skips identification when known."""
    check_parameters(n, k)
    g = build(n, k)
    _check_inside(g, h)
    if (n, k) == (5, 2):
        return Verdict(Answer.EXTERNAL, Answer.EXTERNAL, _cite("P(5,2)-external"))
    if (n, k) in ((12, 5), (24, 5)):
        return Verdict(Answer.UNKNOWN, Answer.UNKNOWN, _cite("deferred-pairs"))
    summary = {(4, 1): "P(4,1)-summary", (8, 3): "P(8,3)-summary", (10, 2): "P(10,2)-summary"}
    if (n, k) in summary:
        return Verdict(Answer.YES, Answer.YES, _cite(summary[(n, k)], "positive-implies-realizable"))
    if (n, k) == (10, 3):
        return _classify_p103(g, h, label)
    sq = square_class(n, k)
    if sq == 0:
        return Verdict(Answer.YES, Answer.YES, _cite("dihedral-all-subgroups", "positive-implies-realizable"))
    if sq == 1:
        return Verdict(Answer.YES, Answer.YES, _cite("k2-plus1-all-subgroups", "positive-implies-realizable"))
    return _classify_minus_one(n, k, h, label)


def _classify_minus_one(n: int, k: int, h: PermGroup, label: str | None) -> Verdict:
    if _inside_some_conjugate(h, _dihedral(n, k), aut_group(n, k)):
        return Verdict(Answer.YES, Answer.YES, _cite("k2-minus1-positive", "dihedral-all-subgroups"))
    if n % 2 == 0 and h.order == 4 and (label or _identify(h)) == "Z_4":
        return Verdict(Answer.YES, Answer.YES, _cite("k2-minus1-positive"))
    fours = [p for p in h.elements if p.order() == 4]
    if n % 2:
        witness = Obstruction(ObstructionKind.ORDER4_FORM_VIOLATION, fours[0])
        cites = _cite("k2-minus1-all-realizable", "k2-minus1-positive", "order4-elements")
    else:
        pair = zr_z4_witness(h)
        witness = Obstruction(ObstructionKind.GROUP_FORM_ZR_Z4, pair[1] if pair else fours[0])
        cites = _cite("k2-minus1-all-realizable", "k2-minus1-positive", "zr-z4-form")
    return Verdict(Answer.YES, Answer.NO, cites, witness)


_P103_NO = frozenset(catalog.canonical_name(x) for x in P103_NOT_POSITIVE)


def _classify_p103(g: PetersenGraph, h: PermGroup, label: str | None) -> Verdict:
    name = label or _identify(h)
    obstructions = obstruction_scan(g, h)
    if name in _P103_NO:
        if obstructions:
            witness = obstructions[0]
        else:
            pair = zr_z4_witness(h)
            if pair is None:
                raise RuntimeError(f"no obstruction found for a {name} subgroup of Aut(P(10,3))")
            witness = Obstruction(ObstructionKind.GROUP_FORM_ZR_Z4, pair[1])
        cite = "element-obstructions" if obstructions else "zr-z4-form"
        return Verdict(Answer.YES, Answer.NO, _cite("P(10,3)-all-realizable", "P(10,3)-not-positive", cite), witness)
    if obstructions:
        # the type is positively realizable, but not by this conjugacy class
        return Verdict(Answer.YES, Answer.NO, _cite("P(10,3)-all-realizable", "element-obstructions"), obstructions[0])
    return Verdict(Answer.YES, Answer.YES, _cite("P(10,3)-all-realizable", "P(10,3)-positive"))


@dataclass
class TableRow:
    subgroup_class: grouplab.SubgroupClass
    verdict: Verdict

    def to_dict(self, n: int, k: int) -> dict:
        c = self.subgroup_class
        d = self.verdict.to_dict(n, k, c.iso_label.name, c.class_size)
        d["order"] = c.order
        return d


def classify_all(n: int, k: int, cap: int = grouplab.MAX_ORDER) -> list[TableRow]:
    """One verdict per conjugacy class of subgroups of Aut(P(n,k))."""
    check_parameters(n, k)
    group = aut_group(n, k)
    if group.order > cap:
        raise SizeLimitError(f"|Aut(P({n},{k}))| = {group.order} exceeds the cap of {cap}")
    rows = []
    for c in grouplab.conjugacy_classes_of_subgroups(group, cap=cap):
        rows.append(TableRow(c, classify(n, k, c.representative, label=c.iso_label.name)))
    return rows


def is_exceptional(n: int, k: int) -> bool:
    return (n, k) in EXCEPTIONAL_PAIRS
