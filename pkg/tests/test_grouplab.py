import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpsym import catalog, grouplab
from gpsym.catalog import canonical_name, order_of_label
from gpsym.classifier import aut_group
from gpsym.grouplab import (
    FiniteGroup,
    NotASubgroupError,
    UnknownLabelError,
    all_subgroups,
    conjugacy_classes_of_subgroups,
    find_isomorphism,
    identify_group,
    is_maximal_subgroup,
    isomorphism_classes,
    normalizer,
)
from gpsym.paperlib import bnk_generators, named, p103_subgroup_types, reflection, rotation
from gpsym.permcore import Permutation, closure, conjugate, trivial_group


def d7():
    return closure([rotation(7), reflection(7)])


def test_z4_has_three_subgroups():
    z4 = closure([Permutation((1, 2, 3, 0))])
    assert sorted(h.order for h in all_subgroups(z4)) == [1, 2, 4]


def test_d7_subgroups_by_brute_force():
    g = d7()
    subs = all_subgroups(g)
    assert len(subs) == 10
    assert sorted(h.order for h in subs) == [1] + [2] * 7 + [7, 14]
    # brute force: every subgroup of D_7 is generated by at most two elements
    seen = {closure([a, b]).element_set() for a in g.elements for b in g.elements}
    assert seen == {h.element_set() for h in subs}


def test_all_subgroups_listed_once_in_canonical_order():
    subs = all_subgroups(aut_group(4, 1))
    sets = [h.element_set() for h in subs]
    assert len(sets) == len(set(sets))
    assert subs == all_subgroups(aut_group(4, 1))


@pytest.mark.parametrize("label,count", [("S_4", 2), ("Z_6 x Z_2", 1), ("Z_4 x Z_2", 1)])
def test_p10_3_class_counts(label, count):
    assert len(conjugacy_classes_of_subgroups(aut_group(10, 3), label)) == count


def test_p10_3_type_list():
    aut = aut_group(10, 3)
    names = {lab.name for lab, _ in isomorphism_classes(aut)}
    assert names - {"1", "S_5 x Z_2"} == set(p103_subgroup_types())
    assert len(p103_subgroup_types()) == 26
    assert dict((lab.name, c) for lab, c in isomorphism_classes(aut))["S_4"] == 2


def test_isomorphism_classes_of_z2():
    z2 = closure([Permutation((1, 0))])
    assert [(lab.name, c) for lab, c in isomorphism_classes(z2)] == [("1", 1), ("Z_2", 1)]


def test_b13_5_has_z4_but_no_d4():
    b = closure([g.perm for g in bnk_generators(13, 5)])
    assert b.order == 52
    names = {lab.name for lab, _ in isomorphism_classes(b)}
    assert "Z_4" in names and "D_4" not in names
    assert identify_group(b).name == "Z_13 : Z_4"


def test_unknown_label_filter():
    with pytest.raises(UnknownLabelError):
        conjugacy_classes_of_subgroups(d7(), "Frobnicator_7")


@pytest.mark.parametrize(
    "gens,label",
    [
        ([], "1"),
        ("d7", "D_7"),
    ],
)
def test_identify_small(gens, label):
    group = d7() if gens == "d7" else trivial_group(14)
    assert identify_group(group).name == label


@pytest.mark.parametrize(
    "pair,label",
    [((4, 1), "S_4 x Z_2"), ((5, 2), "S_5"), ((8, 3), "GL(2,3) : Z_2"), ((10, 2), "A_5 x Z_2"),
     ((10, 3), "S_5 x Z_2"), ((12, 5), "S_4 x S_3"), ((24, 5), "(GL(2,3) x Z_3) : Z_2")],
)
def test_identify_exceptional_aut(pair, label):
    assert identify_group(aut_group(*pair)).name == label


def test_identify_recorded_subgroups():
    p83 = closure([named(8, 3, x) for x in ("mu", "beta", "gamma")])
    assert identify_group(p83).name == "GL(2,3) : Z_2"
    assert identify_group(closure([named(10, 3, "theta1"), named(10, 3, "theta2")])).name == "D_6"
    assert identify_group(closure([named(10, 3, "nu1"), named(10, 3, "nu2")])).name == "D_4"


def test_label_is_backed_by_explicit_isomorphism():
    fg = FiniteGroup.from_perm_group(aut_group(8, 3))
    model = FiniteGroup.from_perm_group(catalog.model("GL(2,3) : Z_2"))
    iso = find_isomorphism(fg, model)
    assert iso is not None
    # homomorphism and bijection on the whole table
    assert len(set(iso.tolist())) == fg.order
    t, u = fg.table, model.table
    assert np.array_equal(iso[t], u[iso[:, None], iso[None, :]])


def test_fingerprint_agrees_with_catalog_model():
    for c in conjugacy_classes_of_subgroups(aut_group(10, 3)):
        model = FiniteGroup.from_perm_group(catalog.model(c.iso_label.name))
        mine = FiniteGroup.from_perm_group(c.representative)
        assert mine.fingerprint == model.fingerprint
        assert mine.is_abelian() == model.is_abelian()
        assert len(mine.center()) == len(model.center())


def test_maximality_examples():
    a41 = aut_group(4, 1)
    s4 = closure([named(4, 1, "rho/S4"), named(4, 1, "sigma/S4")])
    assert is_maximal_subgroup(s4, a41)
    assert not is_maximal_subgroup(a41, a41)
    with pytest.raises(NotASubgroupError):
        is_maximal_subgroup(d7(), a41)
    a103 = aut_group(10, 3)
    a5z2 = conjugacy_classes_of_subgroups(a103, "A_5 x Z_2")[0].representative
    assert is_maximal_subgroup(a5z2, a103)
    z2 = closure([named(10, 3, "beta")])
    assert not is_maximal_subgroup(z2, a103)


@pytest.mark.parametrize("pair", [(7, 2), (4, 1), (8, 3), (10, 3)])
def test_class_size_times_normalizer_is_group_order(pair):
    g = aut_group(*pair)
    for c in conjugacy_classes_of_subgroups(g):
        assert c.class_size * normalizer(c.representative, g).order == g.order


def test_class_sizes_sum_to_label_counts():
    g = aut_group(10, 2)
    subs = all_subgroups(g)
    classes = conjugacy_classes_of_subgroups(g)
    assert sum(c.class_size for c in classes) == len(subs)
    for lab, _ in isomorphism_classes(g):
        members = [h for h in subs if identify_group(h) == lab]
        assert sum(c.class_size for c in classes if c.iso_label == lab) == len(members)


def test_catalog_names():
    assert canonical_name("Z4") == "Z_4"
    assert canonical_name("D_2") == "Z_2^2"
    assert canonical_name("Z_2 x Z_2 x Z_2") == "Z_2^3"
    assert order_of_label("GL(2,3) : Z_2") == 96
    assert order_of_label("(GL(2,3) x Z_3) : Z_2") == 288
    with pytest.raises(KeyError):
        order_of_label("Q_17")


# --- randomized invariants on subgroups of Aut(P(10,3)) ---------------------

_A103 = None


def _a103():
    global _A103
    if _A103 is None:
        _A103 = aut_group(10, 3)
    return _A103


@settings(max_examples=400)
@given(st.lists(st.integers(0, 239), min_size=1, max_size=2), st.integers(0, 239))
def test_random_subgroups_lagrange_and_conjugation(idx, x):
    g = _a103()
    h = closure([g.elements[i] for i in idx])
    assert g.order % h.order == 0
    q = g.elements[x]
    conj = h.conjugate_by(q)
    assert conj.order == h.order
    assert sorted(p.order() for p in conj.elements) == sorted(p.order() for p in h.elements)
    assert identify_group(conj) == identify_group(h)
    lat = grouplab.lattice(g)
    assert lat.class_index(h) == lat.class_index(conj)


@settings(max_examples=300)
@given(st.integers(0, 239), st.integers(0, 239))
def test_conjugation_preserves_cycle_type_in_aut(i, j):
    g = _a103()
    p, q = g.elements[i], g.elements[j]
    c = conjugate(p, q)
    assert c in g
    assert c.cycle_type() == p.cycle_type()
