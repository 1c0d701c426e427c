"""Explicit permutations, vertex sets and group data for specific P(n,k).

The permutation registry lives in ``data/registry.json`` as cycle strings
in the source notation (``u_{10}`` and friends), parsed on load.  Loading
checks every entry against its graph and refuses to continue otherwise.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .permcore import Permutation, parse_vertex
from .petersen import PetersenGraph, check_parameters, is_automorphism

EXCEPTIONAL_PAIRS = ((4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5))
REGISTRY_GRAPHS = ((4, 1), (8, 3), (10, 2), (10, 3))


class RegistryError(RuntimeError):
    pass


class UnknownGraphError(KeyError):
    pass


@dataclass(frozen=True)
class NamedAutomorphism:
    name: str
    perm: Permutation
    source: str
    graph: tuple[int, int] = (0, 0)
    cycles: str = ""
    note: str = ""

    @property
    def flagged(self) -> bool:
        return self.note.startswith("flagged")


class Status(enum.Enum):
    FULLY_CLASSIFIED = "FullyClassified"
    EXTERNAL_REFERENCE = "ExternalReference"
    DEFERRED = "Deferred"


@dataclass(frozen=True)
class ExceptionalRecord:
    pair: tuple[int, int]
    aut_label: str
    aut_order: int
    status: Status


def square_class(n: int, k: int) -> int:
    """+1 if k^2 = 1, -1 if k^2 = -1 (mod n), else 0."""
    sq = k * k % n
    if sq == 1 % n:
        return 1
    if sq == n - 1:
        return -1
    return 0


def rotation(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)) + tuple(n + (i + 1) % n for i in range(n)))


def reflection(n: int) -> Permutation:
    return Permutation(tuple(-i % n for i in range(n)) + tuple(n + (-i % n) for i in range(n)))


def ring_swap(n: int, k: int) -> Permutation:
    """u_i -> v_{ki}, v_i -> u_{ki}; an automorphism exactly when k^2 = +-1."""
    return Permutation(tuple(n + k * i % n for i in range(n)) + tuple(k * i % n for i in range(n)))


def bnk_generators(n: int, k: int) -> list[NamedAutomorphism]:
    """Generators of the spoke-preserving subgroup: rotation, reflection, and the ring swap when k^2 = +-1."""
    check_parameters(n, k)
    tag = f"P({n},{k})"
    gens = [
        NamedAutomorphism(f"rho@{tag}", rotation(n), "rotation u_i -> u_{i+1}", (n, k)),
        NamedAutomorphism(f"sigma@{tag}", reflection(n), "reflection u_i -> u_{-i}", (n, k)),
    ]
    if square_class(n, k):
        gens.append(NamedAutomorphism(f"alpha@{tag}", ring_swap(n, k), "ring swap u_i -> v_{ki}", (n, k)))
    return gens


@lru_cache(maxsize=None)
def _registry() -> tuple[NamedAutomorphism, ...]:
    raw = json.loads(resources.files("gpsym").joinpath("data/registry.json").read_text())
    return tuple(load_registry(raw))


def load_registry(raw: dict) -> list[NamedAutomorphism]:
    """Parse and validate a registry document; raises RegistryError naming the bad entry."""
    out = []
    graphs: dict[tuple[int, int], PetersenGraph] = {}
    for entry in raw["entries"]:
        n, k = entry["graph"]
        g = graphs.setdefault((n, k), PetersenGraph(n, k))
        try:
            perm = Permutation.parse(entry["cycles"], n)
        except ValueError as exc:
            raise RegistryError(f"{entry['name']} ({entry['citation']}): {exc}") from exc
        if not is_automorphism(g, perm):
            raise RegistryError(f"{entry['name']} is not an automorphism of P({n},{k}) ({entry['citation']})")
        out.append(NamedAutomorphism(entry["name"], perm, entry["citation"], (n, k), entry["cycles"], entry.get("note", "")))
    return out


def named_automorphisms(n: int, k: int) -> list[NamedAutomorphism]:
    if (n, k) not in REGISTRY_GRAPHS:
        raise UnknownGraphError(f"no named automorphisms recorded for P({n},{k})")
    return [a for a in _registry() if a.graph == (n, k)]


def named(n: int, k: int, name: str) -> Permutation:
    """Registry permutation by short name: ``named(8, 3, "mu")`` or ``named(4, 1, "alpha/A4xZ2")``."""
    if "@" not in name:
        base, _, context = name.partition("/")
        name = f"{base}@P({n},{k})" + (f"/{context}" if context else "")
    for a in named_automorphisms(n, k):
        if a.name == name:
            return a.perm
    raise KeyError(f"{name} is not in the registry")


def _set(n: int, labels: list[str]) -> frozenset[int]:
    return frozenset(parse_vertex(x, n) for x in labels)


def special_vertex_sets(n: int, k: int) -> dict[str, frozenset[int]]:
    if (n, k) == (10, 2):
        return {
            "T1": _set(10, ["u1", "u4", "v7", "v8"]),
            "T2": _set(10, ["u6", "u9", "v2", "v3"]),
        }
    if (n, k) == (8, 3):
        a = [f"u{i}" for i in range(2, 9, 2)] + [f"v{j}" for j in range(1, 9, 2)]
        b = [f"u{i}" for i in range(1, 9, 2)] + [f"v{j}" for j in range(2, 9, 2)]
        return {"A": _set(8, a), "B": _set(8, b), "U": _set(8, ["u4", "v6", "u8", "v2"])}
    raise UnknownGraphError(f"no special vertex sets recorded for P({n},{k})")


def exceptional_catalog() -> list[ExceptionalRecord]:
    from .catalog import order_of_label

    rows = [
        ((4, 1), "S_4 x Z_2", Status.FULLY_CLASSIFIED),
        ((5, 2), "S_5", Status.EXTERNAL_REFERENCE),
        ((8, 3), "GL(2,3) : Z_2", Status.FULLY_CLASSIFIED),
        ((10, 2), "A_5 x Z_2", Status.FULLY_CLASSIFIED),
        ((10, 3), "S_5 x Z_2", Status.FULLY_CLASSIFIED),
        ((12, 5), "S_4 x S_3", Status.DEFERRED),
        ((24, 5), "(GL(2,3) x Z_3) : Z_2", Status.DEFERRED),
    ]
    return [ExceptionalRecord(pair, label, order_of_label(label), status) for pair, label, status in rows]


def exceptional_record(n: int, k: int) -> ExceptionalRecord | None:
    for r in exceptional_catalog():
        if r.pair == (n, k):
            return r
    return None


# Isomorphism-type names for P(10,3) as originally recorded.  The type list
# names "(Z_5 : Z_2) x Z_2" and "Z_5 : Z_2", which duplicate D_10 and D_5;
# the groups that actually occur are Z_10 : Z_4 and the Frobenius group
# Z_5 : Z_4, so those two entries are corrected on use.
P103_PRINTED_SUBGROUP_TYPES = (
    "A_5 x Z_2", "S_5", "A_5", "S_4 x Z_2", "(Z_5 : Z_2) x Z_2", "S_3 x Z_2^2", "A_4 x Z_2",
    "S_4", "D_10", "Z_5 : Z_2", "D_4 x Z_2", "Z_6 x Z_2", "D_6", "A_4", "Z_10", "D_5", "Z_2^3",
    "D_4", "Z_4 x Z_2", "Z_6", "S_3", "Z_5", "Z_2^2", "Z_4", "Z_3", "Z_2",
)
P103_PRINTED_CORRECTIONS = {"(Z_5 : Z_2) x Z_2": "Z_10 : Z_4", "Z_5 : Z_2": "Z_5 : Z_4"}

P103_NOT_POSITIVE = (
    "Z_5 : Z_4", "Z_10 : Z_4", "S_5 x Z_2", "Z_6 x Z_2", "D_6 x Z_2",
    "S_4", "S_5", "S_4 x Z_2", "Z_4 x Z_2", "D_4 x Z_2",
)
P103_POSITIVE = (
    "D_10", "Z_10", "D_5", "Z_5", "D_2", "Z_2", "A_5 x Z_2", "A_5", "A_4 x Z_2", "A_4",
    "Z_3", "Z_2 x Z_2 x Z_2", "D_4", "Z_4", "D_6", "Z_6", "D_3",
)


def p103_subgroup_types() -> list[str]:
    """The printed P(10,3) type list with the two corrections applied, canonical names."""
    from .catalog import canonical_name

    return [canonical_name(P103_PRINTED_CORRECTIONS.get(x, x)) for x in P103_PRINTED_SUBGROUP_TYPES]


# registry names whose closure is the full automorphism group
_AUT_GENERATORS = {
    (4, 1): ["rho/S4", "sigma/S4", "delta/S4"],
    (8, 3): ["mu", "beta", "gamma"],
    (10, 2): ["alpha", "alpha1", "alpha2", "alpha'", "beta", "gamma"],
    (10, 3): ["alpha", "beta"],
}


def recorded_generators(n: int, k: int) -> list[Permutation] | None:
    """Recorded generators of Aut(P(n,k)); None for (5,2), (12,5), (24,5) where none are recorded."""
    if (n, k) in _AUT_GENERATORS:
        return [named(n, k, x) for x in _AUT_GENERATORS[(n, k)]]
    if (n, k) in EXCEPTIONAL_PAIRS:
        return None
    return [g.perm for g in bnk_generators(n, k)]
