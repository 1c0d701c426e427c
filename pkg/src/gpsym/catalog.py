"""Concrete models for the named groups that identification can return.

Every model is a permutation group built without reference to any
generalized Petersen graph: natural actions for S_n, A_n and D_m, affine
maps on Z_m for split metacyclic groups, matrix actions for GL(2,3) and
SL(2,3), regular representations for the rest.  Products with Z_2 are block
constructions on disjoint point sets.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable

from .permcore import Permutation, PermGroup, closure

CAP = 2000


@dataclass(frozen=True)
class GroupLabel:
    name: str
    fingerprint: tuple | None = field(default=None, compare=False)

    @property
    def recognized(self) -> bool:
        return not self.name.startswith("Unrecognized")

    def __str__(self) -> str:
        return self.name


TRIVIAL = GroupLabel("1")


# --- builders ---------------------------------------------------------------

def _perm(images) -> Permutation:
    return Permutation(tuple(images))


def cyclic(m: int) -> PermGroup:
    if m == 1:
        return closure([], degree=1)
    return closure([_perm([(i + 1) % m for i in range(m)])])


def symmetric(d: int) -> PermGroup:
    gens = [_perm([(i + 1) % d for i in range(d)]), _perm([1, 0] + list(range(2, d)))]
    return closure(gens, cap=CAP)


def alternating(d: int) -> PermGroup:
    gens = [_perm([1, 2, 0] + list(range(3, d)))]
    rest = list(range(1, d))
    cyc = [0] * d
    # (1 2 ... d-1) for d even, (0 1 ... d-1) for d odd: both even permutations
    if d % 2:
        cyc = [(i + 1) % d for i in range(d)]
    else:
        cyc[0] = 0
        for a, b in zip(rest, rest[1:] + rest[:1]):
            cyc[a] = b
    gens.append(_perm(cyc))
    return closure(gens, cap=CAP)


def affine(m: int, multipliers: list[int]) -> PermGroup:
    """Z_m extended by the multiplicative subgroup generated by ``multipliers``."""
    gens = [_perm([(x + 1) % m for x in range(m)])]
    gens += [_perm([(u * x) % m for x in range(m)]) for u in multipliers]
    return closure(gens, cap=CAP)


def dihedral(m: int) -> PermGroup:
    """Symmetries of the m-gon, order 2m, acting on its m vertices."""
    return affine(m, [-1])


def regular(gens: list[Hashable], mul: Callable, identity: Hashable) -> PermGroup:
    """Left regular representation of the abstract group generated by ``gens``."""
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        for g in gens:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                elems.append(y)
                if len(elems) > CAP:
                    raise RuntimeError("regular representation too large")
    index = {x: j for j, x in enumerate(elems)}
    perms = [_perm([index[mul(g, x)] for x in elems]) for g in gens]
    return closure(perms, cap=CAP)


def direct_product(*groups: PermGroup) -> PermGroup:
    gens = []
    total = sum(g.degree for g in groups)
    offset = 0
    for grp in groups:
        for p in grp.generators:
            images = list(range(total))
            for x in range(grp.degree):
                images[offset + x] = offset + p(x)
            gens.append(_perm(images))
        offset += grp.degree
    return closure(gens, degree=total, cap=CAP)


def dicyclic(m: int) -> PermGroup:
    """<a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>, order 4m (Q_8 when m = 2)."""
    def mul(p, q):
        (i, j), (k, l) = p, q
        i2 = (i + (k if j == 0 else -k)) % (2 * m)
        if j and l:
            return ((i2 + m) % (2 * m), 0)
        return (i2, j ^ l)
    return regular([(1, 0), (0, 1)], mul, (0, 0))


def cyclic_extension(m: int, t: int, u: int) -> PermGroup:
    """Z_m x| Z_t with the generator of Z_t acting as multiplication by u."""
    def mul(p, q):
        (i, j), (k, l) = p, q
        return ((i + pow(u, j, m) * k) % m, (j + l) % t)
    return regular([(1, 0), (0, 1)], mul, (0, 0))


# matrices over F_3 and F_9; F_9 = F_3[i] with i^2 = -1, stored as pairs (a, b) = a + b i

def _f9_mul(x, y):
    return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)


def _f9_add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def _mat_mul(a, b):
    return tuple(
        tuple(_f9_add(_f9_mul(a[r][0], b[0][c]), _f9_mul(a[r][1], b[1][c])) for c in range(2))
        for r in range(2)
    )


def _f3_mat(rows):
    return tuple(tuple((x % 3, 0) for x in row) for row in rows)


_I2 = _f3_mat([[1, 0], [0, 1]])
_SL23_GENS = [_f3_mat([[1, 1], [0, 1]]), _f3_mat([[1, 0], [1, 1]])]
_GL23_GENS = _SL23_GENS + [_f3_mat([[1, 0], [0, -1]])]


def _vector_action(gens) -> PermGroup:
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    perms = []
    for a in gens:
        img = []
        for v in vecs:
            w = tuple((a[r][0][0] * v[0] + a[r][1][0] * v[1]) % 3 for r in range(2))
            img.append(index[w])
        perms.append(_perm(img))
    return closure(perms, cap=CAP)


def sl23() -> PermGroup:
    return _vector_action(_SL23_GENS)


def gl23() -> PermGroup:
    return _vector_action(_GL23_GENS)


def sl23_central_z4() -> PermGroup:
    """SL(2,3) extended by the scalar iI in GL(2,9): the central product with Z_4."""
    scalar_i = ((( 0, 1), (0, 0)), ((0, 0), (0, 1)))
    return regular(_SL23_GENS + [scalar_i], _mat_mul, _I2)


def _mat_inverse(a):
    for row in itertools.product(itertools.product(range(3), repeat=2), repeat=2):
        cand = tuple(tuple((x, 0) for x in r) for r in row)
        if _mat_mul(a, cand) == _I2:
            return cand
    raise ValueError("singular matrix")


def gl23_inverse_transpose() -> PermGroup:
    """GL(2,3) x| Z_2 where the involution acts by g -> (g^T)^-1."""
    def act(e, g):
        if not e:
            return g
        gi = _mat_inverse(g)
        return tuple(tuple(gi[c][r] for c in range(2)) for r in range(2))

    def mul(p, q):
        (g, e), (h, f) = p, q
        return (_mat_mul(g, act(e, h)), e ^ f)

    gens = [(a, 0) for a in _GL23_GENS] + [(_I2, 1)]
    return regular(gens, mul, (_I2, 0))


def gl23_z3_extension() -> PermGroup:
    """(GL(2,3) x Z_3) x| Z_2: the involution acts by inverse transpose and inverts Z_3."""
    def mul(p, q):
        (g, z, e), (h, w, f) = p, q
        if e:
            hi = _mat_inverse(h)
            h = tuple(tuple(hi[c][r] for c in range(2)) for r in range(2))
            w = -w % 3
        return (_mat_mul(g, h), (z + w) % 3, e ^ f)

    gens = [(a, 0, 0) for a in _GL23_GENS] + [(_I2, 1, 0), (_I2, 0, 1)]
    return regular(gens, mul, (_I2, 0, 0))


# --- label catalog ------------------------------------------------------------

def _abelian_name(factors: list[int]) -> str:
    if len(factors) == 1:
        return f"Z_{factors[0]}"
    parts = []
    for d, run in itertools.groupby(factors):
        c = len(list(run))
        parts.append(f"Z_{d}" if c == 1 else f"Z_{d}^{c}")
    return " x ".join(parts)


def _invariant_factor_lists(order: int) -> list[list[int]]:
    """All [d1, d2, ...] with d_{i+1} | d_i and product ``order``."""
    out = []

    def rec(remaining: int, bound: int | None, acc: list[int]):
        if remaining == 1:
            if acc:
                out.append(acc[:])
            return
        for d in sorted(_divisors(remaining), reverse=True):
            if d == 1:
                continue
            if bound is not None and bound % d:
                continue
            acc.append(d)
            rec(remaining // d, d, acc)
            acc.pop()

    rec(order, None, [])
    return out


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _minus_one_roots(n: int) -> list[int]:
    """Square roots of -1 mod n, one per pair {k, n - k}."""
    return [k for k in range(2, (n + 1) // 2) if (k * k + 1) % n == 0]


def _plus_one_roots(n: int) -> list[int]:
    """Nontrivial square roots of 1 mod n, one per pair {k, n - k}."""
    return [k for k in range(2, (n + 1) // 2) if (k * k - 1) % n == 0]


def _base_entries(order: int) -> list[tuple[str, Callable[[], PermGroup]]]:
    """Named non-abelian groups of the given order, in name-preference order."""
    out: list[tuple[str, Callable[[], PermGroup]]] = []
    if order == 6:
        out.append(("S_3", lambda: symmetric(3)))
    if order == 8:
        out.append(("Q_8", lambda: dicyclic(2)))
    if order % 2 == 0 and order // 2 >= 4:
        m = order // 2
        out.append((f"D_{m}", lambda m=m: dihedral(m)))
    if order == 12:
        out.append(("A_4", lambda: alternating(4)))
    if order == 16:
        out.append(("SD_16", lambda: cyclic_extension(8, 2, 3)))
        out.append(("M_16", lambda: cyclic_extension(8, 2, 5)))
    if order == 24:
        out.append(("S_4", lambda: symmetric(4)))
        out.append(("SL(2,3)", sl23))
    if order == 48:
        out.append(("GL(2,3)", gl23))
        out.append(("SL(2,3) : Z_2", sl23_central_z4))
    if order == 60:
        out.append(("A_5", lambda: alternating(5)))
    if order == 96:
        out.append(("GL(2,3) : Z_2", gl23_inverse_transpose))
    if order == 120:
        out.append(("S_5", lambda: symmetric(5)))
    if order == 144:
        out.append(("S_4 x S_3", lambda: direct_product(symmetric(4), symmetric(3))))
    if order == 288:
        out.append(("(GL(2,3) x Z_3) : Z_2", gl23_z3_extension))
    if order % 4 == 0 and order // 4 >= 3:
        m = order // 4
        out.append((f"Dic_{m}" if m > 2 else "Q_8", lambda m=m: dicyclic(m)))
        for k in _minus_one_roots(m):
            tag = "" if len(_minus_one_roots(m)) == 1 else f"[{k}]"
            out.append((f"Z_{m} :{tag} Z_4", lambda m=m, k=k: affine(m, [k])))
        ks = _plus_one_roots(m)
        for k in ks:
            tag = "" if len(ks) == 1 else f"[{k}]"
            out.append((f"D_{m} :{tag} Z_2", lambda m=m, k=k: affine(m, [-1, k])))
    if order % 8 == 0 and order // 8 >= 3:
        m = order // 8
        if m % 2:
            out.append((f"Z_{m} : Z_8", lambda m=m: cyclic_extension(m, 8, m - 1)))
    return out


@lru_cache(maxsize=None)
def candidates(order: int) -> tuple[tuple[str, Callable[[], PermGroup]], ...]:
    """All catalog labels of a given order, most preferred name first."""
    out: list[tuple[str, Callable[[], PermGroup]]] = []
    if order == 1:
        out.append(("1", lambda: closure([], degree=1)))
        return tuple(out)
    for factors in sorted(_invariant_factor_lists(order), key=len):
        out.append((_abelian_name(factors), lambda f=tuple(factors): direct_product(*[cyclic(d) for d in f])))
    out.extend(_base_entries(order))
    if order % 2 == 0:
        for name, build in candidates(order // 2):
            if _is_abelian_name(name):
                continue
            m = re.search(r" x Z_2(?:\^(\d+))?$", name)
            if m:
                new = f"{name[: m.start()]} x Z_2^{int(m.group(1) or 1) + 1}"
            else:
                new = f"{name} x Z_2" if " : " not in name else f"({name}) x Z_2"
            out.append((new, lambda b=build: direct_product(b(), cyclic(2))))
    seen = set()
    uniq = []
    for name, build in out:
        if name not in seen:
            seen.add(name)
            uniq.append((name, build))
    return tuple(uniq)


def _is_abelian_name(name: str) -> bool:
    return name == "1" or all(part.strip().startswith("Z_") and ":" not in part for part in name.split(" x "))


@lru_cache(maxsize=None)
def model(name: str) -> PermGroup:
    """The concrete model group carrying a catalog label."""
    order = order_of_label(name)
    for cand, build in candidates(order):
        if cand == name:
            return build()
    raise KeyError(f"unknown group label {name!r}")


# alternative spellings that name the same group as a catalog label
ALIASES = {
    "D_2": "Z_2^2",
    "D_3": "S_3",
    "Z_2 x Z_2": "Z_2^2",
    "Z_2 x Z_2 x Z_2": "Z_2^3",
    "S_3 x Z_2": "D_6",
    "S_3 x Z_2^2": "D_6 x Z_2",
    "D_5 x Z_2": "D_10",
    "Z_5 : Z_2": "D_5",
    "(Z_5 : Z_2) x Z_2": "D_10",
    "(Z_5 : Z_4) x Z_2": "Z_10 : Z_4",
    "Z_3 x Z_2": "Z_6",
    "Z_5 x Z_2": "Z_10",
    "Z_3 x Z_2^2": "Z_6 x Z_2",
    "trivial": "1",
    "Z_1": "1",
}


def canonical_name(name: str) -> str:
    name = " ".join(name.replace("⋊", ":").replace("×", "x").split())
    name = re.sub(r"(?<=[\d)])x(?=[A-Z(])", " x ", name)
    name = re.sub(r"\s*:(?!\[)\s*", " : ", name)
    name = re.sub(r"\b(Z|D|S|A|Dic)(\d+)", r"\1_\2", name)
    return ALIASES.get(name, name)


def order_of_label(name: str) -> int:
    """Group order encoded by a catalog label; raises KeyError for unknown labels."""
    name = canonical_name(name)
    if name == "1":
        return 1
    total = 1
    for part in _split_top(name):
        total *= _factor_order(part)
    return total


def _split_top(name: str) -> list[str]:
    # split on " x " outside parentheses
    parts = []
    depth = 0
    buf = ""
    i = 0
    while i < len(name):
        ch = name[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and name.startswith(" x ", i):
            parts.append(buf)
            buf = ""
            i += 3
            continue
        buf += ch
        i += 1
    parts.append(buf)
    return [p.strip() for p in parts]


def _factor_order(part: str) -> int:
    if part.startswith("(") and part.endswith(")"):
        return order_of_label(part[1:-1])
    special = {"S_3": 6, "Q_8": 8, "A_4": 12, "S_4": 24, "SL(2,3)": 24, "GL(2,3)": 48, "A_5": 60, "S_5": 120,
               "SD_16": 16, "M_16": 16}
    if part in special:
        return special[part]
    if " :" in part:
        left, right = part.split(" :", 1)
        right = right.split(" ", 1)[1] if right.startswith("[") else right.strip()
        return _factor_order(left.strip()) * _factor_order(right.strip())
    if part.startswith("Z_"):
        base = part[2:]
        if "^" in base:
            d, e = base.split("^")
            return int(d) ** int(e)
        return int(base)
    if part.startswith("D_"):
        return 2 * int(part[2:])
    if part.startswith("Dic_"):
        return 4 * int(part[4:])
    raise KeyError(f"unknown group label {part!r}")
