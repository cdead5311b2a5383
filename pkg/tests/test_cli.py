import json

import numpy as np
import pytest

from loopstatics import (
    Bivector6,
    SelfStressState,
    fundamental_cycles,
    k5_frame,
    serialize_state,
    validate_structure,
    parse_structure,
)
from loopstatics.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def k5_path(tmp_path, capsys):
    path = tmp_path / "k5.json"
    code, _, _ = run(capsys, "gen", "k5", "-o", str(path))
    assert code == 0
    return path


class TestGen:
    def test_k5_document(self, capsys):
        code, out, _ = run(capsys, "gen", "k5")
        assert code == 0
        g = validate_structure(parse_structure(out))
        assert (g.v, g.e) == (5, 10)

    def test_prism_critical(self, capsys):
        code, out, _ = run(capsys, "gen", "prism", "--critical")
        assert code == 0
        doc = parse_structure(out)
        assert doc.metadata["twist"] == pytest.approx(np.pi / 6, abs=1e-9)


class TestCycles:
    def test_report_counts(self, capsys, k5_path):
        code, out, _ = run(capsys, "cycles", str(k5_path))
        assert code == 0
        report = json.loads(out)
        assert report["counts"]["cycles"] == 6
        assert report["counts"]["selfstress_dimension"] == 36
        assert len(report["cycles"]) == 6

    def test_byte_identical_runs(self, capsys, k5_path):
        _, out1, _ = run(capsys, "cycles", str(k5_path))
        _, out2, _ = run(capsys, "cycles", str(k5_path))
        assert out1 == out2

    def test_tree_root_flag(self, capsys, k5_path):
        code, out, _ = run(capsys, "cycles", str(k5_path), "--tree-root", "o1")
        assert code == 0
        assert json.loads(out)["tree"]["root"] == "o1"


class TestAxial:
    def test_k5_full_report(self, capsys, k5_path):
        code, out, _ = run(capsys, "axial", str(k5_path))
        assert code == 0
        report = json.loads(out)
        assert report["statics"]["s"] == 1
        assert report["statics"]["m"] == 0
        assert report["statics"]["rank"] == 9
        assert len(report["bar_resultants"]) == 10
        assert all(row["is_axial"] for row in report["axial_check"])
        for row in report["node_residuals"]:
            assert np.linalg.norm(row["force"]) < 1e-12
            assert np.linalg.norm(row["moment"]) < 1e-12

    def test_text_format(self, capsys, k5_path):
        code, out, _ = run(capsys, "axial", str(k5_path), "--format", "text")
        assert code == 0
        assert "s=1 m=0 rank=9" in out


class TestCheck:
    def test_supplied_state_report(self, capsys, tmp_path, k5_path):
        basis = fundamental_cycles(k5_frame())
        state = SelfStressState(
            {c.generator: Bivector6(ih=1.0, jh=-2.0) for c in basis}
        )
        state_path = tmp_path / "state.json"
        state_path.write_text(serialize_state(state))
        code, out, _ = run(capsys, "check", str(k5_path), "--state", str(state_path))
        assert code == 0
        report = json.loads(out)
        for row in report["node_residuals"]:
            assert np.linalg.norm(row["force"]) < 1e-12
            assert np.linalg.norm(row["moment"]) < 1e-12
        # pure moment areas on every loop: not an axial state
        assert not all(row["is_axial"] for row in report["axial_check"])


class TestExport:
    def test_axial_export_writes_both_files(self, capsys, tmp_path, k5_path):
        out_dir = tmp_path / "diag"
        code, out, _ = run(
            capsys, "export", str(k5_path), "--axial",
            "--loops", "cycles", "--share-vertex", "--out-dir", str(out_dir),
        )
        assert code == 0
        assert (out_dir / "form.obj").exists()
        assert (out_dir / "force.obj").exists()
        assert (out_dir / "force.obj").read_text().count("o cycle_") == 6

    def test_untwisted_prism_has_nothing_to_export(self, capsys, tmp_path):
        prism_path = tmp_path / "prism.json"
        run(capsys, "gen", "prism", "--twist", "0.0", "-o", str(prism_path))
        code, _, err = run(
            capsys, "export", str(prism_path), "--axial",
            "--out-dir", str(tmp_path / "d"),
        )
        assert code == 2
        assert "no axial self-stress" in err


class TestIntegerIds:
    def test_tree_root_flag_parses_integer_ids(self, capsys, tmp_path):
        doc = {
            "nodes": [
                {"id": 0, "x": 0, "y": 0, "z": 0},
                {"id": 1, "x": 1, "y": 0, "z": 0},
                {"id": 2, "x": 0, "y": 1, "z": 0},
            ],
            "bars": [
                {"id": 10, "tail": 0, "head": 1},
                {"id": 11, "tail": 1, "head": 2},
                {"id": 12, "tail": 0, "head": 2},
            ],
        }
        path = tmp_path / "tri.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "cycles", str(path), "--tree-root", "2")
        assert code == 0
        report = json.loads(out)
        assert report["tree"]["root"] == 2
        assert report["counts"]["cycles"] == 1


class TestMergedStateExport:
    def test_welded_state_exports_merged_chains(self, capsys, tmp_path, k5_path):
        basis = fundamental_cycles(k5_frame())
        state = SelfStressState(
            {c.generator: Bivector6(jk=1.0, kh=2.0) for c in basis}
        )
        state_path = tmp_path / "state.json"
        state_path.write_text(serialize_state(state))
        out_dir = tmp_path / "diag"
        code, _, err = run(
            capsys, "export", str(k5_path), "--state", str(state_path),
            "--loops", "cycles", "--merge-loops", "--out-dir", str(out_dir),
        )
        assert code == 0
        assert "rectangle chain" in err  # fallbacks reported
        text = (out_dir / "force.obj").read_text()
        # merged: exactly one polyline object per basis cycle
        assert text.count("o cycle_") == 6


class TestErrors:
    def test_bad_document_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ not json")
        code, _, err = run(capsys, "cycles", str(bad))
        assert code == 2
        assert "syntax error" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "cycles", str(tmp_path / "absent.json"))
        assert code == 2
        assert "error" in err

    def test_unwritable_export_path(self, capsys, tmp_path, k5_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        code, _, err = run(
            capsys, "export", str(k5_path), "--axial",
            "--out-dir", str(blocker / "sub"),
        )
        assert code == 2
        assert "error" in err
