import json

import numpy as np
import pytest

from fuzzphaser.ddm import DoubleDensityMatrix
from fuzzphaser.density import DensityMatrix, PureState
from fuzzphaser.errors import LexiconError
from fuzzphaser.lexicon import (
    entry_from_document,
    entry_to_document,
    lexicon_from_document,
    lexicon_to_document,
    load_lexicon,
    save_lexicon,
)
from fuzzphaser.textcirc import LexiconEntry

PURE_DOC = {
    "name": "red",
    "space": "c",
    "kind": "pure",
    "mechanism": "projector",
    "data": [[0.8, 0.0], [0.6, 0.0]],
}

DENSITY_DOC = {
    "name": "black",
    "space": "c",
    "kind": "density",
    "mechanism": "fuzz",
    "data": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
}

DDM_DOC = {
    "name": "blur",
    "space": "c",
    "kind": "ddm",
    "mechanism": "ddm",
    "data": {
        "factors": [
            {
                "y": 2.0,
                "branches": [
                    {"x": 1.0, "phi": [[1.0, 0.0], [0.0, 0.0]]},
                    {"x": 0.5, "phi": [[0.0, 0.0], [1.0, 0.0]]},
                ],
            }
        ]
    },
}


def _doc():
    return {"spaces": {"c": 2}, "entries": [PURE_DOC, DENSITY_DOC, DDM_DOC]}


class TestEntryParsing:
    def test_pure_entry(self):
        entry = entry_from_document(PURE_DOC)
        assert isinstance(entry.operand, PureState)
        assert np.allclose(entry.operand.amplitudes, np.array([0.8, 0.6]))

    def test_density_entry(self):
        entry = entry_from_document(DENSITY_DOC)
        assert isinstance(entry.operand, DensityMatrix)
        assert entry.operand.trace == pytest.approx(2.0)

    def test_ddm_entry(self):
        entry = entry_from_document(DDM_DOC)
        assert isinstance(entry.operand, DoubleDensityMatrix)
        assert entry.operand.factors[0].y == 2.0

    def test_bare_reals_accepted(self):
        doc = dict(PURE_DOC, data=[0.8, 0.6])
        entry = entry_from_document(doc)
        assert np.allclose(entry.operand.amplitudes, np.array([0.8, 0.6]))

    def test_complex_pairs(self):
        doc = dict(PURE_DOC, data=[[0.0, 1.0], [1.0, 0.0]])
        entry = entry_from_document(doc)
        assert entry.operand.amplitudes[0] == 1.0j

    def test_missing_key(self):
        bad = {k: v for k, v in PURE_DOC.items() if k != "mechanism"}
        with pytest.raises(LexiconError) as err:
            entry_from_document(bad)
        assert "mechanism" in str(err.value)

    def test_unknown_kind(self):
        with pytest.raises(LexiconError):
            entry_from_document(dict(PURE_DOC, kind="sound"))

    def test_non_square_matrix(self):
        bad = dict(DENSITY_DOC, data=[[[1.0, 0.0]], [[0.0, 0.0]]])
        with pytest.raises(LexiconError):
            entry_from_document(bad)

    def test_bool_is_not_a_number(self):
        with pytest.raises(LexiconError):
            entry_from_document(dict(PURE_DOC, data=[True, 0.0]))

    def test_invalid_operand_reported_with_entry_name(self):
        bad = dict(DENSITY_DOC, data=[[[1.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]])
        with pytest.raises(LexiconError) as err:
            entry_from_document(bad)
        assert "black" in str(err.value)


class TestDocumentParsing:
    def test_full_document(self):
        lex = lexicon_from_document(_doc())
        assert lex.spaces == {"c": 2}
        assert set(lex.entries) == {"red", "black", "blur"}

    def test_verb_space_pair(self):
        doc = {
            "spaces": {"c": 2},
            "entries": [
                {
                    "name": "bites",
                    "space": ["c", "c"],
                    "kind": "density",
                    "mechanism": "fuzz",
                    "data": [[[float(i == j), 0.0] for j in range(4)] for i in range(4)],
                }
            ],
        }
        lex = lexicon_from_document(doc)
        assert lex.entry("bites").space == ("c", "c")

    def test_rejects_malformed_top_level(self):
        with pytest.raises(LexiconError):
            lexicon_from_document([])
        with pytest.raises(LexiconError):
            lexicon_from_document({"spaces": {}, "entries": []})
        with pytest.raises(LexiconError):
            lexicon_from_document({"spaces": {"c": 2}, "entries": {}})
        with pytest.raises(LexiconError):
            lexicon_from_document({"spaces": {"c": 0}, "entries": []})
        with pytest.raises(LexiconError):
            lexicon_from_document({"spaces": {"c": True}, "entries": []})


class TestRoundTrip:
    def test_entry_round_trip(self):
        for doc in (PURE_DOC, DENSITY_DOC, DDM_DOC):
            assert entry_to_document(entry_from_document(doc)) == doc

    def test_document_round_trip(self):
        doc = _doc()
        assert lexicon_to_document(lexicon_from_document(doc)) == doc

    def test_round_trip_normalizes_bare_reals(self):
        doc = dict(PURE_DOC, data=[0.8, 0.6])
        out = entry_to_document(entry_from_document(doc))
        assert out["data"] == [[0.8, 0.0], [0.6, 0.0]]

    def test_entry_to_document_verb_space_is_list(self):
        entry = LexiconEntry(
            "bites", ("c", "c"), "density", "fuzz", DensityMatrix.identity(4)
        )
        assert entry_to_document(entry)["space"] == ["c", "c"]


class TestFiles:
    def test_save_and_load(self, tmp_path):
        path = tmp_path / "lex.json"
        lex = lexicon_from_document(_doc())
        save_lexicon(lex, path)
        again = load_lexicon(path)
        assert lexicon_to_document(again) == lexicon_to_document(lex)
        # canonical form is stable under one more save
        path2 = tmp_path / "lex2.json"
        save_lexicon(again, path2)
        assert path.read_text() == path2.read_text()

    def test_load_rejects_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(LexiconError) as err:
            load_lexicon(path)
        assert "broken.json" in str(err.value)

    def test_saved_file_is_plain_json(self, tmp_path):
        path = tmp_path / "lex.json"
        save_lexicon(lexicon_from_document(_doc()), path)
        doc = json.loads(path.read_text())
        assert doc == _doc()
