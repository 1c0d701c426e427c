"""Re-derivable claims about specific Petersen graphs, checked by computation.

Each claim pairs a recorded expectation with a function that computes the
same quantity from scratch (brute-force automorphism search, subgroup
enumeration, the classifier).  A claim passes only on exact equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

from . import catalog, grouplab, paperlib
from .classifier import Answer, ObstructionKind, aut_group, classify_all, obstruction_predicates, order4_form_check
from .paperlib import bnk_generators, named, square_class
from .permcore import PermGroup, closure
from .petersen import admissible_pairs, build, setwise_invariant

SCAN_MAX_N = 30


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class Claim:
    claim_id: str
    scope: str
    location: str
    statement: str
    expected: Any
    compute: Callable[[], Any]


@dataclass
class ClaimResult:
    claim_id: str
    citation: tuple[str, str]
    expected: Any
    computed: Any
    status: Status

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "citation": {"location": self.citation[0], "statement": self.citation[1]},
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.value,
        }


# --- shared helpers --------------------------------------------------------

@lru_cache(maxsize=None)
def bnk_group(n: int, k: int) -> PermGroup:
    return closure([g.perm for g in bnk_generators(n, k)])


def minus_one_pairs(max_n: int = SCAN_MAX_N) -> list[tuple[int, int]]:
    return [(n, k) for n, k in admissible_pairs(max_n) if square_class(n, k) == -1]


def _gen(n: int, k: int, *names: str) -> PermGroup:
    return closure([named(n, k, x) for x in names])


def _label(group: PermGroup) -> str:
    return grouplab.identify_group(group).name


def _classes(group: PermGroup, label: str) -> list[grouplab.SubgroupClass]:
    return grouplab.conjugacy_classes_of_subgroups(group, label)


def _class_has(n: int, k: int, c: grouplab.SubgroupClass, kind: ObstructionKind) -> bool:
    g = build(n, k)
    return any(kind in obstruction_predicates(g, p) for p in c.representative.elements)


def _spoke_stabilizer(n: int, k: int) -> PermGroup:
    g = build(n, k)
    spokes = g.spoke_set
    elems = [p for p in aut_group(n, k).elements if frozenset(frozenset(p(x) for x in s) for s in spokes) == spokes]
    return PermGroup(2 * n, [], elems)


# --- trichotomy and spoke subgroup -----------------------------------------

def _trichotomy_orders() -> dict:
    wrong = {}
    for n, k in admissible_pairs(SCAN_MAX_N):
        if (n, k) in paperlib.EXCEPTIONAL_PAIRS:
            continue
        want = 4 * n if square_class(n, k) else 2 * n
        got = aut_group(n, k).order
        if got != want:
            wrong[f"P({n},{k})"] = got
    return wrong


def _trichotomy_generated() -> list[str]:
    return [
        f"P({n},{k})"
        for n, k in admissible_pairs(SCAN_MAX_N)
        if (n, k) not in paperlib.EXCEPTIONAL_PAIRS and aut_group(n, k) != bnk_group(n, k)
    ]


def _spoke_mismatches() -> list[str]:
    return [f"P({n},{k})" for n, k in admissible_pairs(SCAN_MAX_N) if _spoke_stabilizer(n, k) != bnk_group(n, k)]


# --- square root of -1 -----------------------------------------------------

def _relation_failures() -> list[str]:
    bad = []
    for n, k in minus_one_pairs():
        rho, _, alpha = (g.perm for g in bnk_generators(n, k))
        ok = (rho**n).is_identity() and (alpha**4).is_identity() and alpha * rho * alpha.inverse() == rho**k
        if not ok:
            bad.append(f"P({n},{k})")
    return bad


def _order4_summary() -> dict:
    out = {}
    for n, k in minus_one_pairs():
        fours, exact = order4_form_check(n, k)
        out[f"P({n},{k})"] = [len(fours), exact]
    return out


def _d4_in_bnk() -> list[str]:
    return [f"P({n},{k})" for n, k in minus_one_pairs() if _classes(bnk_group(n, k), "D_4")]


def _multiple_of_four_with_root(limit: int = 1000) -> list[int]:
    return [n for n in range(4, limit + 1, 4) if any(k * k % n == n - 1 for k in range(1, n))]


def _minus_one_cross_check() -> list[str]:
    """Classes judged positive must be exactly those avoiding order-4 elements, plus Z_4 for even n."""
    bad = []
    for n, k in minus_one_pairs():
        if (n, k) in paperlib.EXCEPTIONAL_PAIRS:
            continue
        for row in classify_all(n, k):
            c = row.subgroup_class
            avoids = not any(p.order() == 4 for p in c.representative.elements)
            expected = avoids or (n % 2 == 0 and c.iso_label.name == "Z_4")
            if expected != (row.verdict.positively_realizable is Answer.YES):
                bad.append(f"P({n},{k}) {c.iso_label.name}")
    return bad


# --- exceptional pairs -----------------------------------------------------

def _exceptional_orders() -> dict:
    return {f"P({n},{k})": [aut_group(n, k).order, _label(aut_group(n, k))] for n, k in paperlib.EXCEPTIONAL_PAIRS[:5]}


def _recorded_generators_match() -> dict:
    return {f"P({n},{k})": closure(paperlib.recorded_generators(n, k)) == aut_group(n, k) for n, k in paperlib.REGISTRY_GRAPHS}


def _registry_in_aut() -> list[str]:
    out = []
    for n, k in paperlib.REGISTRY_GRAPHS:
        aut = aut_group(n, k)
        out.extend(a.name for a in paperlib.named_automorphisms(n, k) if a.perm not in aut)
    return out


def _registry_labels() -> dict:
    return {
        "P(8,3) <rho1,rho2,rho3>": _label(_gen(8, 3, "rho1", "rho2", "rho3")),
        "P(8,3) <delta1,delta2>": _label(_gen(8, 3, "delta1", "delta2")),
        "P(8,3) <beta1,beta>": _label(_gen(8, 3, "beta1", "beta")),
        "P(10,3) <theta1,theta2>": _label(_gen(10, 3, "theta1", "theta2")),
        "P(10,3) <theta1,theta2,theta3>": _label(_gen(10, 3, "theta1", "theta2", "theta3")),
        "P(10,3) <nu1,nu2>": _label(_gen(10, 3, "nu1", "nu2")),
        "P(10,3) <gamma1,gamma2,gamma3>": _label(_gen(10, 3, "gamma1", "gamma2", "gamma3")),
        "P(10,3) <gamma1,gamma3>": _label(_gen(10, 3, "gamma1", "gamma3")),
        "P(10,2) <alpha',beta,gamma>": _label(_gen(10, 2, "alpha'", "beta", "gamma")),
        "P(4,1) <rho,sigma>": _label(_gen(4, 1, "rho/S4", "sigma/S4")),
    }


# --- P(8,3) ----------------------------------------------------------------

def _sl23_stabilizer_orders() -> list[int]:
    group = _gen(8, 3, "rho1", "rho2", "rho3")
    return sorted({p.order() for p in group.elements if not p.is_identity() and any(p(v) == v for v in range(16))})


def _sl23_shape() -> list:
    group = _gen(8, 3, "rho1", "rho2", "rho3")
    return [group.order, _label(group)]


# --- P(10,2) ---------------------------------------------------------------

def _order5_preserving_t() -> int:
    sets = paperlib.special_vertex_sets(10, 2)
    t = sets["T1"] | sets["T2"]
    return sum(1 for p in aut_group(10, 2).elements if p.order() == 5 and setwise_invariant(p, t))


def _equator_swaps_t() -> bool:
    sets = paperlib.special_vertex_sets(10, 2)
    alpha = named(10, 2, "alpha")
    return frozenset(alpha(x) for x in sets["T1"]) == sets["T2"] and frozenset(alpha(x) for x in sets["T2"]) == sets["T1"]


# --- P(10,3) ---------------------------------------------------------------

def _p103_s4() -> list:
    classes = _classes(aut_group(10, 3), "S_4")
    return sorted(
        [_class_has(10, 3, c, ObstructionKind.ORDER2_SIX_TWO_CYCLES), _class_has(10, 3, c, ObstructionKind.ORDER4_ADJACENT_TWO_CYCLE)]
        for c in classes
    )


def _p103_single(label: str, kind: ObstructionKind) -> list[bool]:
    return [_class_has(10, 3, c, kind) for c in _classes(aut_group(10, 3), label)]


def _p103_types() -> list[str]:
    aut = aut_group(10, 3)
    names = {label.name for label, _ in grouplab.isomorphism_classes(aut)}
    return sorted(names - {catalog.TRIVIAL.name, _label(aut)})


# --- maximality ------------------------------------------------------------

def _some_class_maximal(group: PermGroup, label: str) -> bool:
    return any(grouplab.is_maximal_subgroup(c.representative, group) for c in _classes(group, label))


def _maximality() -> dict:
    a41, a83, a102, a103 = (aut_group(*p) for p in ((4, 1), (8, 3), (10, 2), (10, 3)))
    d6z2 = _gen(10, 3, "theta1", "theta2", "theta3")
    d4z2 = _gen(10, 3, "gamma1", "gamma2", "gamma3")
    m = grouplab.is_maximal_subgroup
    return {
        "P(4,1) S_4 in S_4 x Z_2": m(_gen(4, 1, "rho/S4", "sigma/S4"), a41),
        "P(4,1) A_4 x Z_2 in S_4 x Z_2": _some_class_maximal(a41, "A_4 x Z_2"),
        "P(8,3) D_12 in GL(2,3) : Z_2": m(_gen(8, 3, "beta1", "beta"), a83),
        "P(8,3) B(8,3) in GL(2,3) : Z_2": m(bnk_group(8, 3), a83),
        "P(8,3) GL(2,3) in GL(2,3) : Z_2": m(_gen(8, 3, "delta1", "delta2"), a83),
        "P(8,3) SL(2,3) : Z_2 in GL(2,3) : Z_2": m(_gen(8, 3, "rho1", "rho2", "rho3"), a83),
        "P(10,2) A_4 x Z_2 in A_5 x Z_2": _some_class_maximal(a102, "A_4 x Z_2"),
        "P(10,2) D_6 in A_5 x Z_2": m(_gen(10, 2, "alpha'", "beta", "gamma"), a102),
        "P(10,3) A_5 x Z_2 in S_5 x Z_2": _some_class_maximal(a103, "A_5 x Z_2"),
        "P(10,3) S_4 x Z_2 in S_5 x Z_2": _some_class_maximal(a103, "S_4 x Z_2"),
        "P(10,3) D_6 x Z_2 in S_5 x Z_2": m(d6z2, a103),
        "P(10,3) Z_4 x Z_2 in D_4 x Z_2": m(_gen(10, 3, "gamma1", "gamma3"), d4z2),
        "P(10,3) Z_6 x Z_2 in D_6 x Z_2": _some_class_maximal(d6z2, "Z_6 x Z_2"),
    }


# --- verdict table ---------------------------------------------------------

TABLE_PAIRS = ((7, 2), (15, 4), (13, 5), (26, 5), (4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5))


def _answers(n: int, k: int) -> list[list[str]]:
    rows = classify_all(n, k)
    return [
        sorted({r.verdict.realizable.value for r in rows}),
        sorted({r.verdict.positively_realizable.value for r in rows}),
    ]


def _table_expected() -> dict:
    full = [["Yes"], ["Yes"]]
    mixed = [["Yes"], ["No", "Yes"]]
    return {
        "P(7,2)": full, "P(15,4)": full, "P(13,5)": mixed, "P(26,5)": mixed,
        "P(4,1)": full, "P(5,2)": [["ExternalReference"], ["ExternalReference"]],
        "P(8,3)": full, "P(10,2)": full, "P(10,3)": mixed,
        "P(12,5)": [["Unknown"], ["Unknown"]], "P(24,5)": [["Unknown"], ["Unknown"]],
    }


def _p103_label_verdicts() -> list[list[str]]:
    by_label: dict[str, set[str]] = {}
    for row in classify_all(10, 3):
        by_label.setdefault(row.subgroup_class.iso_label.name, set()).add(row.verdict.positively_realizable.value)
    never = sorted(x for x, v in by_label.items() if v == {"No"})
    sometimes = sorted(x for x, v in by_label.items() if "Yes" in v)
    return [never, sometimes]


def _no_witness_missing() -> list[str]:
    out = []
    for n, k in ((10, 3), (13, 5), (26, 5)):
        out.extend(
            f"P({n},{k}) {r.subgroup_class.iso_label.name}"
            for r in classify_all(n, k)
            if r.verdict.positively_realizable is Answer.NO and r.verdict.witness is None
        )
    return out


def _canon(names) -> list[str]:
    return sorted({catalog.canonical_name(x) for x in names})


# --- the registry of claims ------------------------------------------------

def all_claims() -> list[Claim]:
    yes_labels = _canon(paperlib.P103_POSITIVE) + [catalog.TRIVIAL.name]
    return [
        Claim("trichotomy-orders", "trichotomy", "Aut orders, non-exceptional P(n,k), n <= 30",
              "|Aut| is 2n unless k^2 = +-1 mod n, in which case it is 4n", {}, _trichotomy_orders),
        Claim("trichotomy-generated", "trichotomy", "Aut generators, non-exceptional P(n,k), n <= 30",
              "Aut is generated by the rotation, the reflection and (when k^2 = +-1) the ring swap", [], _trichotomy_generated),
        Claim("spoke-subgroup", "trichotomy", "spoke-preserving subgroup, all P(n,k), n <= 30",
              "the rotation/reflection/ring-swap group is exactly the stabilizer of the spoke set", [], _spoke_mismatches),
        Claim("minus-one-relations", "k2-minus1", "B(n,k) presentation, k^2 = -1, n <= 30",
              "rho^n = alpha^4 = 1 and alpha rho alpha^-1 = rho^k", [], _relation_failures),
        Claim("minus-one-order4", "k2-minus1", "order-4 elements of B(n,k), k^2 = -1, n <= 30",
              "the order-4 elements are exactly rho^m alpha^(+-1), 2n of them",
              {f"P({n},{k})": [2 * n, True] for n, k in minus_one_pairs()}, _order4_summary),
        Claim("minus-one-no-d4", "k2-minus1", "D_4 subgroups of B(n,k), k^2 = -1, n <= 30",
              "B(n,k) has no subgroup isomorphic to D_4", [], _d4_in_bnk),
        Claim("minus-one-divisibility", "k2-minus1", "k^2 = -1 mod n for 4 | n, n <= 1000",
              "no multiple of 4 has a square root of -1", [], _multiple_of_four_with_root),
        Claim("minus-one-positive-cross-check", "k2-minus1", "positive classes of B(n,k), k^2 = -1, n <= 30",
              "positive classes are those without order-4 elements, together with Z_4 when n is even", [], _minus_one_cross_check),
        Claim("exceptional-orders", "exceptional", "Aut of the five classified exceptional graphs",
              "orders and isomorphism types of Aut",
              {"P(4,1)": [48, "S_4 x Z_2"], "P(5,2)": [120, "S_5"], "P(8,3)": [96, "GL(2,3) : Z_2"],
               "P(10,2)": [120, "A_5 x Z_2"], "P(10,3)": [240, "S_5 x Z_2"]}, _exceptional_orders),
        Claim("recorded-generators", "exceptional", "recorded generating sets of Aut",
              "the recorded automorphisms generate the searched automorphism group",
              {f"P({n},{k})": True for n, k in paperlib.REGISTRY_GRAPHS}, _recorded_generators_match),
        Claim("registry-membership", "exceptional", "every recorded automorphism",
              "each recorded permutation lies in the searched automorphism group", [], _registry_in_aut),
        Claim("registry-subgroup-types", "exceptional", "subgroups generated by recorded automorphisms",
              "isomorphism types of the named subgroups",
              {"P(8,3) <rho1,rho2,rho3>": "SL(2,3) : Z_2", "P(8,3) <delta1,delta2>": "GL(2,3)",
               "P(8,3) <beta1,beta>": "D_12", "P(10,3) <theta1,theta2>": "D_6",
               "P(10,3) <theta1,theta2,theta3>": "D_6 x Z_2", "P(10,3) <nu1,nu2>": "D_4",
               "P(10,3) <gamma1,gamma2,gamma3>": "D_4 x Z_2", "P(10,3) <gamma1,gamma3>": "Z_4 x Z_2",
               "P(10,2) <alpha',beta,gamma>": "D_6", "P(4,1) <rho,sigma>": "S_4"}, _registry_labels),
        Claim("p83-sl23-shape", "p83", "P(8,3) subgroup <rho1,rho2,rho3>",
              "order 48, isomorphic to SL(2,3) : Z_2", [48, "SL(2,3) : Z_2"], _sl23_shape),
        Claim("p83-stabilizer-orders", "p83", "P(8,3) subgroup <rho1,rho2,rho3>",
              "every nontrivial element fixing a vertex has order 3", [3], _sl23_stabilizer_orders),
        Claim("p102-order5-t-sets", "p102", "P(10,2) vertex sets T1, T2",
              "no order-5 automorphism leaves T1 u T2 setwise invariant", 0, _order5_preserving_t),
        Claim("p102-equator-swap", "p102", "P(10,2) equator automorphism",
              "the equator automorphism exchanges T1 and T2", True, _equator_swaps_t),
        Claim("p103-s4-classes", "p103", "S_4 subgroups of Aut(P(10,3))",
              "two conjugacy classes: one with a six-2-cycle involution, one with an adjacent 2-cycle of order 4",
              [[False, True], [True, False]], _p103_s4),
        Claim("p103-z6z2-class", "p103", "Z_6 x Z_2 subgroups of Aut(P(10,3))",
              "one conjugacy class, containing an order-6 element with a 3-cycle", [True],
              lambda: _p103_single("Z_6 x Z_2", ObstructionKind.ORDER6_WITH_THREE_CYCLES)),
        Claim("p103-z4z2-class", "p103", "Z_4 x Z_2 subgroups of Aut(P(10,3))",
              "one conjugacy class, containing an order-4 element with an adjacent 2-cycle", [True],
              lambda: _p103_single("Z_4 x Z_2", ObstructionKind.ORDER4_ADJACENT_TWO_CYCLE)),
        Claim("p103-subgroup-types", "p103", "proper nontrivial subgroups of Aut(P(10,3))",
              "the 26 isomorphism types (two printed names corrected)", sorted(paperlib.p103_subgroup_types()), _p103_types),
        Claim("maximal-subgroups", "maximality", "maximal subgroups used in the exceptional cases",
              "each listed subgroup is maximal in the listed group",
              {key: True for key in _MAXIMALITY_KEYS}, _maximality),
        Claim("table-answers", "table", "verdict table",
              "answer sets per graph: complete, realizable-only, external, or open", _table_expected(),
              lambda: {f"P({n},{k})": _answers(n, k) for n, k in TABLE_PAIRS}),
        Claim("table-p103-labels", "table", "P(10,3) verdicts by isomorphism type",
              "the ten listed types are never positive; every other type has a positive class",
              [_canon(paperlib.P103_NOT_POSITIVE), sorted(yes_labels)], _p103_label_verdicts),
        Claim("table-no-has-witness", "table", "negative verdicts",
              "every negative positive-realizability verdict carries a witness", [], _no_witness_missing),
    ]


_MAXIMALITY_KEYS = (
    "P(4,1) S_4 in S_4 x Z_2", "P(4,1) A_4 x Z_2 in S_4 x Z_2",
    "P(8,3) D_12 in GL(2,3) : Z_2", "P(8,3) B(8,3) in GL(2,3) : Z_2",
    "P(8,3) GL(2,3) in GL(2,3) : Z_2", "P(8,3) SL(2,3) : Z_2 in GL(2,3) : Z_2",
    "P(10,2) A_4 x Z_2 in A_5 x Z_2", "P(10,2) D_6 in A_5 x Z_2",
    "P(10,3) A_5 x Z_2 in S_5 x Z_2", "P(10,3) S_4 x Z_2 in S_5 x Z_2", "P(10,3) D_6 x Z_2 in S_5 x Z_2",
    "P(10,3) Z_4 x Z_2 in D_4 x Z_2", "P(10,3) Z_6 x Z_2 in D_6 x Z_2",
)

SCOPES = ("trichotomy", "k2-minus1", "exceptional", "p83", "p102", "p103", "maximality", "table")


def run_claim(claim: Claim) -> ClaimResult:
    try:
        computed = claim.compute()
    except Exception as exc:  # a crash is a failed claim, reported as data
        computed = f"error: {type(exc).__name__}: {exc}"
    status = Status.PASS if computed == claim.expected else Status.FAIL
    return ClaimResult(claim.claim_id, (claim.location, claim.statement), claim.expected, computed, status)


def verify(scope: str | None = None, ids: list[str] | None = None) -> list[ClaimResult]:
    claims = all_claims()
    if scope is not None:
        if scope not in SCOPES:
            raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
        claims = [c for c in claims if c.scope == scope]
    if ids is not None:
        known = {c.claim_id for c in claims}
        missing = set(ids) - known
        if missing:
            raise KeyError(f"unknown claim ids: {sorted(missing)}")
        claims = [c for c in claims if c.claim_id in ids]
    return [run_claim(c) for c in claims]
