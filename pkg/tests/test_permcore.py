import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpsym.paperlib import reflection, ring_swap, rotation
from gpsym.permcore import (
    CycleType,
    DomainMismatchError,
    Permutation,
    PermGroup,
    SizeLimitError,
    Vertex,
    closure,
    compose,
    conjugate,
    cycle_type,
    element_order,
    inverse,
    parse_vertex,
    trivial_group,
    vertex_label,
)


def perms(degree: int):
    return st.permutations(range(degree)).map(lambda xs: Permutation(tuple(xs)))


@st.composite
def perm_pair(draw, max_degree=12):
    d = draw(st.integers(1, max_degree))
    return draw(perms(d)), draw(perms(d))


# --- vertices and parsing ---------------------------------------------------

def test_vertex_display_uses_n_for_residue_zero():
    assert vertex_label(0, 10) == "u10"
    assert vertex_label(10, 10) == "v10"
    assert vertex_label(13, 10) == "v3"
    assert parse_vertex("u_{10}", 10) == 0
    assert parse_vertex("v 3", 10) == 13


@given(st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 * n - 1))))
def test_vertex_round_trip(nv):
    n, code = nv
    v = Vertex.from_code(code, n)
    assert Vertex.parse(str(v), n) == v
    assert parse_vertex(vertex_label(code, n), n) == code


def test_vertex_label_out_of_range():
    with pytest.raises(ValueError):
        parse_vertex("u11", 10)
    with pytest.raises(ValueError):
        parse_vertex("w1", 10)


def test_parse_cycle_notation_variants_agree():
    a = Permutation.parse("(u1 v4)(u2 u4)", 10)
    b = Permutation.parse("( u_1, v_{4} ) (u_2 u_4)", 10)
    assert a == b
    assert a(1) == 14 and a(14) == 1 and a(3) == 3


def test_parse_rejects_repeats_and_garbage():
    with pytest.raises(ValueError):
        Permutation.parse("(u1 v4)(u1 u2)", 10)
    with pytest.raises(ValueError):
        Permutation.parse("u1 v4", 10)


@given(st.integers(3, 15).flatmap(lambda n: st.tuples(st.just(n), perms(2 * n))))
def test_cycle_string_round_trip(np_):
    n, p = np_
    assert Permutation.parse(p.to_cycle_string(n), n) == p


# --- algebra ----------------------------------------------------------------

def test_compose_applies_right_argument_first():
    p = Permutation((1, 2, 0))
    q = Permutation((0, 2, 1))
    assert compose(p, q)(1) == p(q(1)) == 0
    assert (p * q) == compose(p, q)


def test_identity_and_inverse_cancellation():
    rho = rotation(7)
    ident = Permutation.identity(14)
    assert compose(ident, rho) == rho
    assert compose(rho, inverse(rho)) == ident


def test_ring_swap_squared_negates_indices_on_p10_3():
    alpha = ring_swap(10, 3)
    sq = compose(alpha, alpha)
    assert all(sq(i) == (-i) % 10 for i in range(10))
    assert element_order(alpha) == 4
    assert element_order(rotation(10)) == 10
    assert element_order(Permutation.identity(20)) == 1


def test_mismatched_degrees_raise():
    with pytest.raises(DomainMismatchError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_non_bijection_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_cycle_type_examples():
    beta = Permutation.parse("(u1 v4)(u2 u4)(u5 v2)(u6 v9)(u7 u9)(u10 v7)", 10)
    assert cycle_type(beta) == {2: 6, 1: 8}
    mu = Permutation.parse("(u1 u7 v8)(u2 v7 v5)(u3 v4 u5)(u6 v3 v1)", 8)
    assert cycle_type(mu) == {3: 4, 1: 4}
    assert cycle_type(Permutation.identity(20)) == {1: 20}
    assert CycleType.from_lengths([2, 2, 1]).degree == 5


@settings(max_examples=300)
@given(perm_pair())
def test_compose_and_inverse_stay_bijective(pq):
    p, q = pq
    r = compose(p, q)
    assert sorted(r.images) == list(range(p.degree))
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()
    assert inverse(r) == compose(inverse(q), inverse(p))


@settings(max_examples=300)
@given(st.integers(1, 14).flatmap(perms))
def test_order_is_lcm_of_cycle_lengths(p):
    lengths = [length for length, _ in p.cycle_type().counts]
    assert element_order(p) == math.lcm(*lengths)
    assert (p ** element_order(p)).is_identity()
    assert sum(length * c for length, c in p.cycle_type().counts) == p.degree


@settings(max_examples=300)
@given(perm_pair())
def test_conjugation_preserves_cycle_type(pq):
    p, q = pq
    assert cycle_type(conjugate(p, q)) == cycle_type(p)


@settings(max_examples=150)
@given(st.integers(2, 5).flatmap(lambda d: st.lists(perms(d), min_size=1, max_size=3)))
def test_closure_lagrange_and_idempotence(gens):
    g = closure(gens)
    for s in gens:
        assert g.order % element_order(s) == 0
    again = closure(list(g.elements))
    assert again.element_set() == g.element_set()
    assert g.identity in g
    members = g.element_set()
    for a in g.elements[:10]:
        assert inverse(a) in members
        for b in g.elements[:10]:
            assert compose(a, b) in members


@settings(max_examples=100)
@given(st.integers(2, 6).flatmap(lambda d: st.tuples(st.lists(perms(d), min_size=1, max_size=2), perms(d))))
def test_subgroup_order_divides_supergroup(data):
    gens, extra = data
    small = closure(gens)
    big = closure(gens + [extra])
    assert small.is_subgroup_of(big)
    assert big.order % small.order == 0


# --- closure behaviour ------------------------------------------------------

def test_closure_of_nothing_is_trivial():
    assert trivial_group(6).order == 1
    assert closure([], degree=6).elements == (Permutation.identity(6),)
    with pytest.raises(ValueError):
        closure([])


def test_dihedral_closure_on_p7_2():
    g = closure([rotation(7), reflection(7)])
    assert g.order == 14


def test_closure_elements_sorted_and_deterministic():
    a = closure([rotation(9), reflection(9)])
    b = closure([reflection(9), rotation(9)])
    assert a.elements == b.elements
    assert list(a.elements) == sorted(a.elements)


def test_closure_cap_names_the_cap():
    big = [Permutation((1, 0, 2, 3, 4, 5)), Permutation((1, 2, 3, 4, 5, 0))]
    with pytest.raises(SizeLimitError, match="100"):
        closure(big, cap=100)


def test_p8_3_generators_close_to_order_96():
    mu = Permutation.parse("(u1 u7 v8)(u2 v7 v5)(u3 v4 u5)(u6 v3 v1)", 8)
    beta = Permutation.parse("(u1 u7)(u2 u6)(u3 u5)(v1 v7)(v2 v6)(v3 v5)", 8)
    gamma = Permutation.parse("(u1 u2 u3 u4 u5 u6 u7 u8)(v1 v2 v3 v4 v5 v6 v7 v8)", 8)
    assert closure([mu, beta, gamma]).order == 96


def test_conjugate_group_keeps_order():
    g = closure([rotation(5), reflection(5)])
    q = ring_swap(5, 2)
    h = g.conjugate_by(q)
    assert isinstance(h, PermGroup)
    assert h.order == g.order
