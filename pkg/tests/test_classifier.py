import json

import pytest

from gpsym import grouplab
from gpsym.classifier import (
    Answer,
    NotInAutomorphismGroupError,
    Obstruction,
    ObstructionKind,
    Verdict,
    aut_group,
    classify,
    classify_all,
    obstruction_predicates,
    obstruction_scan,
    order4_form_check,
    zr_z4_witness,
)
from gpsym.paperlib import bnk_generators, named
from gpsym.permcore import Permutation, closure, trivial_group
from gpsym.petersen import ConstructionError, build

K = ObstructionKind


def test_scan_of_trivial_group_is_empty():
    assert obstruction_scan(build(10, 3), trivial_group(20)) == []


def test_beta_on_p10_3_has_six_two_cycles():
    beta = named(10, 3, "beta")
    found = obstruction_scan(build(10, 3), closure([beta]))
    assert [o.kind for o in found] == [K.ORDER2_SIX_TWO_CYCLES]
    assert found[0].witness_element == beta


def test_order_six_exemplar():
    rho = named(10, 3, "rho/obstruction")
    assert rho.cycle_type() == {6: 2, 3: 2, 1: 2}
    kinds = {o.kind for o in obstruction_scan(build(10, 3), closure([rho]))}
    assert {K.ORDER6_WITH_THREE_CYCLES, K.ORDER2_SIX_TWO_CYCLES} <= kinds
    assert (rho**3).cycle_type() == {2: 6, 1: 8}


def test_witnesses_satisfy_their_predicate():
    g = build(10, 3)
    for c in grouplab.conjugacy_classes_of_subgroups(aut_group(10, 3)):
        for o in obstruction_scan(g, c.representative):
            assert o.kind in obstruction_predicates(g, o.witness_element)


def test_scan_rejects_foreign_groups():
    with pytest.raises(NotInAutomorphismGroupError):
        obstruction_scan(build(10, 3), closure([Permutation.parse("(u1 u2)", 10)]))


@pytest.mark.parametrize("n,k,count", [(5, 2, 10), (10, 3, 20), (13, 5, 26)])
def test_order4_form(n, k, count):
    fours, exact = order4_form_check(n, k)
    assert len(fours) == count and exact


def test_order4_form_needs_root_of_minus_one():
    with pytest.raises(ValueError):
        order4_form_check(7, 2)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(Answer.NO, Answer.YES)


def test_classify_dihedral_case():
    v = classify(7, 2, aut_group(7, 2))
    assert (v.realizable, v.positively_realizable) == (Answer.YES, Answer.YES)


def test_classify_z4_odd_n_is_not_positive():
    rows = [r for r in classify_all(13, 5) if r.subgroup_class.iso_label.name == "Z_4"]
    assert rows
    for r in rows:
        assert r.verdict.realizable is Answer.YES
        assert r.verdict.positively_realizable is Answer.NO
        assert r.verdict.witness.kind is K.ORDER4_FORM_VIOLATION


def test_classify_z4_even_n_is_positive():
    rows = [r for r in classify_all(26, 5) if r.subgroup_class.iso_label.name == "Z_4"]
    assert rows and all(r.verdict.positively_realizable is Answer.YES for r in rows)


def test_classify_p10_3_named_subgroups():
    d6 = closure([named(10, 3, "theta1"), named(10, 3, "theta2")])
    v = classify(10, 3, d6)
    assert (v.realizable, v.positively_realizable) == (Answer.YES, Answer.YES)
    for c in grouplab.conjugacy_classes_of_subgroups(aut_group(10, 3), "S_4"):
        v = classify(10, 3, c.representative)
        assert (v.realizable, v.positively_realizable) == (Answer.YES, Answer.NO)
        assert v.witness is not None


def test_zr_z4_witness_on_frobenius_20():
    for c in grouplab.conjugacy_classes_of_subgroups(aut_group(10, 3), "Z_5 : Z_4"):
        pair = zr_z4_witness(c.representative)
        assert pair is not None
        a, b = pair
        assert b.order() == 4 and b * a * b.inverse() in {a ** e for e in range(a.order())}


@pytest.mark.parametrize("pair,answer", [((5, 2), Answer.EXTERNAL), ((12, 5), Answer.UNKNOWN), ((24, 5), Answer.UNKNOWN)])
def test_special_pairs(pair, answer):
    v = classify(*pair, trivial_group(2 * pair[0]))
    assert v.realizable is answer and v.positively_realizable is answer


@pytest.mark.parametrize("pair", [(4, 1), (8, 3), (10, 2)])
def test_complete_exceptional_tables(pair):
    assert {(r.verdict.realizable, r.verdict.positively_realizable) for r in classify_all(*pair)} == {(Answer.YES, Answer.YES)}


def test_classify_errors():
    with pytest.raises(ConstructionError):
        classify(6, 3, trivial_group(12))
    with pytest.raises(NotInAutomorphismGroupError):
        classify(7, 2, closure([Permutation.parse("(u1 u2)", 7)]))


@pytest.mark.parametrize("pair", [(10, 3), (13, 5), (26, 5), (17, 4)])
def test_positive_verdicts_are_closed_under_subgroups(pair):
    g = aut_group(*pair)
    lat = grouplab.lattice(g)
    rows = classify_all(*pair)
    positive = {i for i, r in enumerate(rows) if r.verdict.positively_realizable is Answer.YES}
    for i in positive:
        big = rows[i].subgroup_class.representative
        for h in grouplab.all_subgroups(big):
            assert lat.class_index(h) in positive


@pytest.mark.parametrize("pair", [(10, 3), (13, 5)])
def test_conjugate_subgroups_get_identical_verdicts(pair):
    g = aut_group(*pair)
    for r in classify_all(*pair)[:25]:
        rep = r.subgroup_class.representative
        other = rep.conjugate_by(g.elements[-1])
        v = classify(*pair, other)
        assert (v.realizable, v.positively_realizable) == (r.verdict.realizable, r.verdict.positively_realizable)


def test_positive_implies_no_obstruction_on_p10_3():
    g = build(10, 3)
    for r in classify_all(10, 3):
        if r.verdict.positively_realizable is Answer.YES:
            assert obstruction_scan(g, r.subgroup_class.representative) == []


def test_verdict_json_schema():
    row = classify_all(10, 3)[1]
    doc = json.loads(json.dumps(row.to_dict(10, 3)))
    assert {"n", "k", "subgroup_label", "class_size", "realizable", "positively_realizable", "citations", "witness"} <= set(doc)
    assert all(set(c) == {"id", "quote"} for c in doc["citations"])


def test_obstruction_describe():
    o = Obstruction(K.GROUP_FORM_ZR_Z4)
    assert o.describe() == "GroupFormZrZ4"
    beta = named(10, 3, "beta")
    assert "2:6" in Obstruction(K.ORDER2_SIX_TWO_CYCLES, beta).describe()


def test_bnk_minus_one_subgroups_inside_dihedral_are_positive():
    n, k = 17, 4
    rho, sigma, _ = (g.perm for g in bnk_generators(n, k))
    v = classify(n, k, closure([rho, sigma]))
    assert v.positively_realizable is Answer.YES
