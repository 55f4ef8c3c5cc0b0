"""Workspace files, report format, verbs and exit codes."""

import json

import pytest

from entwine.cli import (build_gallery, cmd_check, cmd_comc, cmd_compose,
                         cmd_gallery, cmd_laws, deserialize, load_workspace,
                         main, parse_field_flag, save_workspace, serialize)
from entwine.exactlin import FieldSpec, QQ


@pytest.fixture(scope="module")
def gallery_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("ws") / "gallery.json"
    save_workspace(build_gallery(QQ), str(path))
    return str(path)


class TestSerialization:
    def test_round_trip_byte_identical(self, gallery_file):
        text = open(gallery_file).read()
        assert serialize(deserialize(text)) == text

    def test_scalars_are_strings_in_lowest_terms(self, gallery_file):
        doc = json.loads(open(gallery_file).read())
        mult = doc["algebras"]["kC2"]["mult"]
        assert all(isinstance(x, str) for row in mult for x in row)
        assert doc["field"] == {"kind": "rational"}

    def test_prime_field_round_trip(self, tmp_path):
        ws = build_gallery(FieldSpec("prime", 5))
        path = tmp_path / "g5.json"
        save_workspace(ws, str(path))
        text = open(path).read()
        assert serialize(deserialize(text)) == text
        assert json.loads(text)["field"] == {"kind": "prime", "p": 5}

    def test_parse_field_flag(self):
        assert parse_field_flag("rational") == QQ
        assert parse_field_flag("prime:7") == FieldSpec("prime", 7)


class TestCheck:
    def test_gallery_all_pass(self, gallery_file, capsys):
        assert cmd_check(gallery_file) == 0
        out = capsys.readouterr().out
        assert " PASS" in out and " FAIL" not in out
        # line-oriented "KIND name axiom PASS"
        first = out.splitlines()[0].split()
        assert first[0] == "ALGEBRA" and first[-1] == "PASS"

    def test_deterministic_output(self, gallery_file, capsys):
        cmd_check(gallery_file)
        first = capsys.readouterr().out
        cmd_check(gallery_file)
        assert capsys.readouterr().out == first

    def test_selector(self, gallery_file, capsys):
        assert cmd_check(gallery_file, selector="bialg_C2") == 0
        out = capsys.readouterr().out
        assert all(" bialg_C2 " in line for line in out.splitlines())

    def test_unknown_selector_is_input_error(self, gallery_file):
        assert cmd_check(gallery_file, selector="nonexistent") == 2

    def test_mutated_psi_fails_with_named_axiom(self, gallery_file,
                                                tmp_path, capsys):
        doc = json.loads(open(gallery_file).read())
        # corrupt psi on a unit column: breaks E3 among others
        doc["entwinings"]["bialg_C2"]["psi"][0][0] = "5"
        bad = tmp_path / "mutated.json"
        bad.write_text(json.dumps(doc))
        assert cmd_check(str(bad)) == 1
        out = capsys.readouterr().out
        assert "ENTWINING bialg_C2 E3-unit-triangle FAIL" in out

    def test_malformed_field_is_input_error(self, gallery_file, tmp_path,
                                            capsys):
        doc = json.loads(open(gallery_file).read())
        doc["field"] = {"kind": "octonion"}
        bad = tmp_path / "badfield.json"
        bad.write_text(json.dumps(doc))
        assert cmd_check(str(bad)) == 2

    def test_unreadable_file_is_input_error(self, tmp_path):
        assert cmd_check(str(tmp_path / "missing.json")) == 2
        garbled = tmp_path / "garbled.json"
        garbled.write_text("{not json")
        assert cmd_check(str(garbled)) == 2


class TestCompose:
    def test_identity_squared_is_identity_file(self, gallery_file,
                                               tmp_path, capsys):
        out1 = tmp_path / "c1.json"
        rc = cmd_compose(gallery_file, "id_bialg_C2,id_bialg_C2", str(out1))
        assert rc == 0
        # the composite of identities is the identity cell, byte for byte
        ws = load_workspace(gallery_file)
        from entwine.cli import Workspace
        expected = Workspace(ws.field)
        expected.add_algebra("kC2", ws.algebras["kC2"])
        expected.add_coalgebra("gl2", ws.coalgebras["gl2"])
        expected.add_entwining("bialg_C2", "kC2", "gl2",
                               ws.entwinings["bialg_C2"])
        expected.add_one_cell("composite", "bialg_C2", "bialg_C2",
                              ws.one_cells["id_bialg_C2"])
        expected.provenance["composite"] = \
            "compose(id_bialg_C2,id_bialg_C2)"
        assert open(out1).read() == serialize(expected)

    def test_composite_passes_check(self, gallery_file, tmp_path, capsys):
        out = tmp_path / "c2.json"
        assert cmd_compose(gallery_file, "m_swap,m_aug", str(out)) == 0
        capsys.readouterr()
        assert cmd_check(str(out)) == 0

    def test_noncomposable_is_semantic_error(self, gallery_file, tmp_path,
                                             capsys):
        out = tmp_path / "c3.json"
        assert cmd_compose(gallery_file, "m_swap,id_bialg_C2",
                           str(out)) == 1

    def test_missing_name_is_input_error(self, gallery_file, tmp_path,
                                         capsys):
        out = tmp_path / "c4.json"
        assert cmd_compose(gallery_file, "nope,id_bialg_C2", str(out)) == 2


class TestComc:
    def test_coring_output_passes_check(self, gallery_file, tmp_path,
                                        capsys):
        out = tmp_path / "cor.json"
        assert cmd_comc(gallery_file, "bialg_C2", str(out)) == 0
        capsys.readouterr()
        assert cmd_check(str(out)) == 0
        doc = json.loads(open(out).read())
        assert doc["corings"]["comc_bialg_C2"]["dim"] == 4
        assert doc["provenance"]["comc_bialg_C2"] == "comc(bialg_C2)"

    def test_one_cell_output_passes_check(self, gallery_file, tmp_path,
                                          capsys):
        out = tmp_path / "corcell.json"
        assert cmd_comc(gallery_file, "m_swap", str(out)) == 0
        capsys.readouterr()
        assert cmd_check(str(out)) == 0
        assert serialize(load_workspace(str(out))) == open(out).read()

    def test_two_cell_output_passes_check(self, gallery_file, tmp_path,
                                          capsys):
        out = tmp_path / "cor2.json"
        assert cmd_comc(gallery_file, "t_two_swap", str(out)) == 0
        capsys.readouterr()
        assert cmd_check(str(out)) == 0

    def test_unknown_name_is_input_error(self, gallery_file, tmp_path):
        assert cmd_comc(gallery_file, "nope", str(tmp_path / "x.json")) == 2


class TestLaws:
    def test_cells_level(self, gallery_file, capsys):
        assert cmd_laws(gallery_file, "cells") == 0
        out = capsys.readouterr().out
        assert "CORONECELL comc(m_swap) street pentagon PASS" in out

    def test_bicategory_level(self, gallery_file, capsys):
        assert cmd_laws(gallery_file, "bicategory") == 0
        out = capsys.readouterr().out
        assert "LAW - " in out and "interchange" in out

    def test_unknown_level(self, gallery_file):
        assert cmd_laws(gallery_file, "monoidal") == 2


class TestMain:
    def test_gallery_and_check_via_argv(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        assert main(["gallery", "--out", str(out)]) == 0
        assert main(["check", str(out), "--selector", "kC2"]) == 0

    def test_bad_field_flag(self, tmp_path):
        assert main(["gallery", "--field", "prime:6",
                     "--out", str(tmp_path / "x.json")]) == 2

    def test_unknown_verb(self, capsys):
        assert main(["frobnicate"]) == 2
