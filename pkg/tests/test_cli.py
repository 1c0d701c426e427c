import csv
import io
import json

import pytest

from gpsym import classifier, claims, paperlib
from gpsym.cli import main
from gpsym.paperlib import NamedAutomorphism


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_aut_reports_order_and_label():
    code, text = run("aut", "--n", "7", "--k", "2", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["agree"]
    assert doc["oracle"]["order"] == 14 and doc["oracle"]["label"] == "D_7"
    code, text = run("aut", "--n", "10", "--k", "3", "--json")
    doc = json.loads(text)
    assert doc["oracle"]["label"] == doc["recorded"]["label"] == "S_5 x Z_2"
    assert doc["oracle"]["order"] == 240
    code, text = run("aut", "--n", "4", "--k", "1", "--oracle")
    assert code == 0 and "48" in text and "S_4 x Z_2" in text and "recorded" not in text


def test_recorded_only_mode_without_generators_is_usage_error():
    assert run("aut", "--n", "5", "--k", "2", "--paper")[0] == 2


def test_aut_mismatch_exits_one(monkeypatch):
    monkeypatch.setattr(paperlib, "recorded_generators", lambda n, k: [paperlib.rotation(n)])
    assert run("aut", "--n", "7", "--k", "2")[0] == 1


def test_classify_by_label():
    code, text = run("classify", "--n", "13", "--k", "5", "--group", "Z4", "--json")
    docs = json.loads(text)
    assert code == 0
    assert all(d["realizable"] == "Yes" and d["positively_realizable"] == "No" for d in docs)


def test_classify_by_cycles():
    beta = "(u1 v4)(u2 u4)(u5 v2)(u6 v9)(u7 u9)(u10 v7)"
    code, text = run("classify", "--n", "10", "--k", "3", "--gens", beta, "--json")
    (doc,) = json.loads(text)
    assert doc["subgroup_label"] == "Z_2"
    assert doc["positively_realizable"] == "No"
    assert doc["witness"].startswith("Order2SixTwoCycles")


def test_classify_all_external_reference():
    code, text = run("classify", "--n", "5", "--k", "2", "--all", "--json")
    docs = json.loads(text)
    assert docs and {d["realizable"] for d in docs} == {"ExternalReference"}


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--n", "7", "--k", "2", "--gens", "(u1 u2)"),
        ("classify", "--n", "7", "--k", "2", "--gens", "u1 u2"),
        ("classify", "--n", "7", "--k", "2", "--group", "S4"),
        ("aut", "--n", "6", "--k", "3"),
        ("export", "--n", "6", "--k", "2", "--format", "dot", "--verdicts"),
    ],
)
def test_bad_input_exits_two(argv):
    assert run(*argv)[0] == 2


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["export", "--n", "6", "--k", "2", "--format", "png"])
    assert exc.value.code == 2


def test_subgroups_table():
    code, text = run("subgroups", "--n", "7", "--k", "2", "--json")
    docs = json.loads(text)
    assert [(d["order"], d["class_size"]) for d in docs] == [(1, 1), (2, 7), (7, 1), (14, 1)]


def test_export_formats(tmp_path):
    code, dot = run("export", "--n", "6", "--k", "2", "--format", "dot")
    assert dot.count(" -- ") == 18 and dot.count(";") - dot.count(" -- ") == 12
    code, text = run("export", "--n", "10", "--k", "3", "--format", "json")
    doc = json.loads(text)
    assert set(doc) == {"n", "k", "vertices", "edges"}
    assert all(set(e) == {"a", "b", "class"} for e in doc["edges"])
    target = tmp_path / "verdicts.csv"
    assert run("export", "--n", "10", "--k", "3", "--format", "csv", "--verdicts", "-o", str(target))[0] == 0
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == len(classifier.classify_all(10, 3))


@pytest.mark.parametrize(
    "argv",
    [
        ("aut", "--n", "8", "--k", "3", "--json"),
        ("classify", "--n", "10", "--k", "3", "--all", "--json"),
        ("export", "--n", "10", "--k", "3", "--format", "csv", "--verdicts"),
        ("subgroups", "--n", "12", "--k", "5"),
    ],
)
def test_output_is_byte_stable(argv):
    assert run(*argv) == run(*argv)


def test_verify_scope_passes():
    code, text = run("verify-paper", "--scope", "p83", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["all_pass"]
    assert {r["claim_id"] for r in doc["results"]} == {"p83-sl23-shape", "p83-stabilizer-orders"}
    p83 = {r["claim_id"]: r for r in doc["results"]}
    assert p83["p83-stabilizer-orders"]["computed"] == [3]


# --- mutation tests: perturbing the data or a rule must break verification ---

def _swap_registry_entry(monkeypatch, name, replacement):
    original = paperlib._registry()
    patched = tuple(
        NamedAutomorphism(a.name, replacement, a.source, a.graph, a.cycles, a.note) if a.name == name else a
        for a in original
    )
    monkeypatch.setattr(paperlib, "_registry", lambda: patched)


def test_perturbed_registry_permutation_fails_verification(monkeypatch):
    # a valid automorphism, but not the recorded one
    _swap_registry_entry(monkeypatch, "mu@P(8,3)", paperlib.reflection(8))
    assert run("verify-paper", "--scope", "exceptional")[0] == 1


def test_corrupt_registry_file_fails_verification(monkeypatch):
    raw = {"version": 1, "entries": [{"graph": [8, 3], "name": "mu@P(8,3)", "cycles": "(u1 u2)", "citation": "test"}]}

    def broken():
        return tuple(paperlib.load_registry(raw))

    monkeypatch.setattr(paperlib, "_registry", broken)
    code, text = run("verify-paper", "--scope", "p83", "--json")
    assert code == 1
    assert all(r["status"] == "Fail" for r in json.loads(text)["results"])


def test_perturbed_label_rule_fails_verification(monkeypatch):
    monkeypatch.setattr(classifier, "_P103_NO", classifier._P103_NO - {"Z_5 : Z_4"})
    results = claims.verify(ids=["table-p103-labels"])
    assert results[0].status is claims.Status.FAIL


def test_perturbed_dispatch_rule_fails_verification(monkeypatch):
    monkeypatch.setattr(classifier, "square_class", lambda n, k: 0)
    results = claims.verify(ids=["table-answers", "minus-one-positive-cross-check"])
    assert {r.status for r in results} == {claims.Status.FAIL}


def test_unknown_claim_ids_rejected():
    with pytest.raises(KeyError):
        claims.verify(ids=["no-such-claim"])
