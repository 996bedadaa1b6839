import json

import pytest

from drgkit.core import format_array
from drgkit.corpus import (
    CorpusEntry,
    CorpusSchemaError,
    builtin_corpus,
    entry_from_json,
    load_corpus,
    parse_eigenvalue_expr,
    save_corpus,
    table1_entries,
    verify_entry,
)


def test_builtin_contents():
    entries = builtin_corpus()
    assert len(entries) == 27
    assert len(table1_entries()) == 23
    by = {e.name: e for e in entries}
    assert format_array(by["row 7"].array) == "{6,5,4;1,2,6}"
    assert by["row 7"].spectrum == (("6", 1), ("2", 15), ("-2", 15), ("-6", 1))
    assert format_array(by["row 23"].array) == "{3,2,2,1;1,1,1,2}"
    assert format_array(by["dcmm-t2"].array) == "{15,14,1;1,2,15}"
    assert "table1-row-22" in by["row 22"].tags and "graphs-2" in by["row 22"].tags


def test_builtin_structure_tags():
    by = {e.name: e for e in builtin_corpus()}
    assert "bipartite" in by["row 1"].tags
    assert "antipodal" in by["row 15"].tags
    assert "shilla" in by["hamming-3-3"].tags
    assert "D2" in by["petersen"].tags
    assert "bipartite" not in by["row 18"].tags


def test_expression_parser():
    assert parse_eigenvalue_expr("3").rational == 3
    assert parse_eigenvalue_expr("-4").rational == -4
    v = parse_eigenvalue_expr("sqrt(2)")
    assert v.is_root_of((-2, 0, 1)) and v.sign() == 1
    v = parse_eigenvalue_expr("-sqrt(3)")
    assert v.is_root_of((-3, 0, 1)) and v.sign() == -1
    v = parse_eigenvalue_expr("(-1+sqrt(2))")
    assert v.is_root_of((-1, 2, 1))
    v = parse_eigenvalue_expr("(1+sqrt(5))/2")
    assert v.is_root_of((-1, -1, 1))
    assert parse_eigenvalue_expr("sqrt(4)").rational == 2
    with pytest.raises(CorpusSchemaError):
        parse_eigenvalue_expr("cbrt(2)")


def test_bipartite_tag_iff_symmetric_spectrum():
    for e in builtin_corpus():
        if e.spectrum is None:
            continue
        vals = e.expected_eigenvalues()
        symmetric = all(vals[i].cmp(vals[len(vals) - 1 - i].neg()) == 0
                        for i in range(len(vals)))
        assert symmetric == ("bipartite" in e.tags), e.name


def test_roundtrip_save_load(tmp_path):
    path = tmp_path / "corpus.json"
    entries = builtin_corpus()
    save_corpus(entries, path)
    loaded = load_corpus(path)
    assert loaded == entries


def test_unknown_fields_preserved(tmp_path):
    obj = {"name": "x", "b": [3, 2], "c": [1, 1], "tags": [],
           "note": "hand-added", "source": {"id": 7}}
    entry = entry_from_json(obj)
    assert dict(entry.extras) == {"note": "hand-added", "source": {"id": 7}}
    path = tmp_path / "c.json"
    save_corpus([entry], path)
    assert load_corpus(path) == [entry]
    assert json.loads(path.read_text())[0]["note"] == "hand-added"


def test_schema_error_names_entry(tmp_path):
    bad = [{"name": "broken", "b": [3, 2, 2], "c": [1, 1, 3],
            "spectrum": [["3", 1], ["sqrt(2)", 6], ["-sqrt(2)", 6], ["-3", 2]]}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    with pytest.raises(CorpusSchemaError, match="broken"):
        load_corpus(path)


def test_schema_error_positions(tmp_path):
    path = tmp_path / "bad2.json"
    path.write_text(json.dumps([{"name": "q", "b": [3], "c": [1, 1]}]))
    with pytest.raises(CorpusSchemaError, match=r"\[0\]"):
        load_corpus(path)


def test_empty_corpus(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("[]")
    assert load_corpus(path) == []


def test_verify_entry_detects_wrong_expectation():
    wrong = CorpusEntry(
        name="wrong", array=builtin_corpus()[0].array,
        spectrum=(("3", 1), ("1", 6), ("-1", 6), ("-3", 1)), tags=frozenset())
    assert verify_entry(wrong)
