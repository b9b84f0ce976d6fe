import json

from schublr.cli import main
from schublr.lr import ScanReport
from schublr.schubert import clear_schubert_cache


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPolynomialCommands:
    def test_schubert_e3(self, capsys):
        code, out, _ = run(capsys, "schubert", "2,3,4,1,5")
        assert code == 0 and out.strip() == "x1*x2*x3"

    def test_schubert_identity(self, capsys):
        code, out, _ = run(capsys, "schubert", "1")
        assert code == 0 and out.strip() == "1"

    def test_schubert_h2(self, capsys):
        code, out, _ = run(capsys, "schubert", "1,2,5,3,4")
        assert code == 0
        assert out.strip() == "x3^2 + x2*x3 + x1*x3 + x2^2 + x1*x2 + x1^2"

    def test_malformed_permutation_exit_2(self, capsys):
        code, _, err = run(capsys, "schubert", "2,2,1")
        assert code == 2 and "error" in err

    def test_schur_methods_agree(self, capsys):
        _, ssyt_out, _ = run(capsys, "schur", "--lambda", "2,1", "--k", "3")
        _, jt_out, _ = run(
            capsys, "schur", "--lambda", "2,1", "--k", "3", "--method", "jacobi-trudi"
        )
        assert ssyt_out == jt_out

    def test_pieri_endpoints(self, capsys):
        code, out, _ = run(capsys, "pieri", "--w", "1,4,3,2", "--m", "2", "--k", "3")
        assert code == 0
        assert out.splitlines() == [
            "1,4,6,2,3,5",
            "1,6,3,2,4,5",
            "2,4,5,1,3",
            "2,5,3,1,4",
        ]


class TestExpand:
    def test_worked_expansion_text(self, capsys):
        code, out, _ = run(
            capsys, "expand", "--w", "1,4,3,2", "--lambda", "2,0", "--k", "3"
        )
        assert code == 0
        assert out.splitlines() == [
            "1,4,6,2,3,5: 1",
            "1,6,3,2,4,5: 1",
            "2,4,5,1,3: 1",
            "2,5,3,1,4: 1",
        ]

    def test_seven_term_expansion_json(self, capsys):
        code, out, _ = run(
            capsys,
            "expand",
            "--w", "1,2,3,5,7,4,6",
            "--lambda", "2,1",
            "--k", "5",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["w"] == [1, 2, 3, 5, 7, 4, 6]
        assert payload["k"] == 5
        assert payload["lambda"] == [2, 1]
        assert len(payload["terms"]) == 7
        coeff2 = [t for t in payload["terms"] if t["coeff"] == 2]
        assert coeff2 == [{"v": [1, 2, 4, 6, 8, 3, 5, 7], "coeff": 2}]

    def test_trivial_cell(self, capsys):
        code, out, _ = run(capsys, "expand", "--w", "2,1", "--lambda", "0,0", "--k", "2")
        assert code == 0 and out.strip() == "2,1: 1"

    def test_bad_shape_exit_2(self, capsys):
        code, _, err = run(capsys, "expand", "--w", "2,1", "--lambda", "1,2", "--k", "2")
        assert code == 2 and "error" in err


class TestClassify:
    def test_case3_chain(self, capsys):
        code, out, _ = run(
            capsys,
            "classify",
            "--w", "1,3,2",
            "--k", "2",
            "--steps", "(1,3)(2,4)(2,5)",
            "--n2", "3",
        )
        assert code == 0 and out.strip() == "(1,1,{1},[(1,3)])"

    def test_all_tail_chain(self, capsys):
        code, out, _ = run(
            capsys,
            "classify",
            "--w", "1,3,2",
            "--k", "2",
            "--steps", "(2,4)(2,5)(2,6)",
            "--n2", "3",
        )
        assert code == 0 and out.strip() == "(0,0,{},[])"

    def test_malformed_steps_exit_2(self, capsys):
        code, _, err = run(
            capsys,
            "classify",
            "--w", "1,3,2",
            "--k", "2",
            "--steps", "(1,3)(oops)",
            "--n2", "3",
        )
        assert code == 2 and "error" in err


class TestScan:
    def test_theorem1_clean(self, capsys):
        code, out, _ = run(
            capsys, "scan", "theorem1", "--n2", "2..3", "--m1-max", "2"
        )
        assert code == 0
        assert "violations=0" in out

    def test_conjecture_json_report(self, capsys, tmp_path):
        out_path = tmp_path / "r.json"
        code, _, _ = run(
            capsys,
            "scan", "conjecture",
            "--n2", "2..3",
            "--k-all",
            "--m1-max", "2",
            "--format", "json",
            "--out", str(out_path),
        )
        assert code == 0
        report = ScanReport.from_dict(json.loads(out_path.read_text()))
        assert report.violations == []
        assert all(
            cell.max_coeff <= max(1, cell.n2 - cell.k) for cell in report.cells
        )

    def test_report_round_trip_and_determinism(self, capsys, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            code, _, _ = run(
                capsys,
                "scan", "conjecture",
                "--n2", "2..3",
                "--k-all",
                "--m1-max", "1",
                "--format", "json",
                "--out", str(path),
            )
            assert code == 0
        first, second = (json.loads(p.read_text()) for p in paths)
        assert ScanReport.from_dict(first) == ScanReport.from_dict(first)
        first.pop("timing"), second.pop("timing")
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)

    def test_theorem2_grid(self, capsys):
        code, out, _ = run(
            capsys, "scan", "theorem2", "--n2", "2..3", "--m1-max", "2"
        )
        assert code == 0 and "violations=0" in out

    def test_cell_example(self, capsys):
        code, out, _ = run(
            capsys,
            "scan", "cell",
            "--w", "1,2,3,5,7,4,6",
            "--lambda", "2,1",
            "--k", "5",
        )
        assert code == 0
        assert "cells=1 global_max=2 violations=0" in out

    def test_missing_output_directory_exit_4(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "scan", "theorem1",
            "--n2", "2..2",
            "--m1-max", "1",
            "--out", str(tmp_path / "nope" / "r.json"),
        )
        assert code == 4 and "io error" in err

    def test_recorded_violation_exits_3(self, capsys, monkeypatch):
        # No true violation exists on any grid (the bounds are theorems), so
        # fake one to pin the exit-code contract.
        import schublr.cli as cli_mod
        from schublr.lr import ViolationRecord

        def fake_scan(*args, **kwargs):
            return ScanReport(
                config={"scan": "conjecture"},
                cells=[],
                violations=[
                    ViolationRecord(
                        n2=4, w=(2, 1), k=2, lam=(1, 1), v=(3, 1, 2),
                        coeff=9, bound=2,
                    )
                ],
                global_max=9,
                timing={},
            )

        monkeypatch.setattr(cli_mod.lr, "scan_conjecture", fake_scan)
        code, out, _ = run(
            capsys, "scan", "conjecture", "--n2", "2..2", "--m1-max", "1"
        )
        assert code == 3 and "VIOLATION" in out

    def test_workers_flag_through_cli(self, capsys):
        code, out, _ = run(
            capsys,
            "scan", "conjecture",
            "--n2", "2..3",
            "--k-all",
            "--m1-max", "1",
            "--workers", "2",
        )
        assert code == 0 and "violations=0" in out

    def test_conjecture_antidominant_filter(self, capsys):
        code, out, _ = run(
            capsys,
            "scan", "conjecture",
            "--n2", "4..4",
            "--k", "2..2",
            "--m1-max", "1",
            "--filter", "antidominant",
            "--format", "json",
        )
        assert code == 0
        report = ScanReport.from_dict(json.loads(out))
        from schublr.lr import has_antidominant_tail

        assert report.cells
        assert all(has_antidominant_tail(c.w, c.k, c.n2) for c in report.cells)


class TestJsonFormats:
    def test_pieri_json(self, capsys):
        code, out, _ = run(
            capsys,
            "pieri", "--w", "1,4,3,2", "--m", "2", "--k", "3",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["endpoints"][0] == [1, 4, 6, 2, 3, 5]

    def test_classify_json(self, capsys):
        code, out, _ = run(
            capsys,
            "classify",
            "--w", "1,3,2", "--k", "2",
            "--steps", "(1,3)(2,4)(2,5)", "--n2", "3",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {"i": 1, "j": 1, "i1": [1], "i2": [[1, 3]]}

    def test_schur_three_rows_jt_exit_2(self, capsys):
        code, _, err = run(
            capsys,
            "schur", "--lambda", "2,1,1", "--k", "3", "--method", "jacobi-trudi",
        )
        assert code == 2 and "error" in err


class TestCacheDirectory:
    def test_cache_persists_between_runs(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SCHUBERT_CACHE_DIR", str(tmp_path))
        clear_schubert_cache()
        code, first, _ = run(capsys, "schubert", "1,2,5,3,4")
        assert code == 0
        assert (tmp_path / "schubert_cache.json").exists()
        clear_schubert_cache()
        code, second, _ = run(capsys, "schubert", "1,2,5,3,4")
        assert code == 0 and first == second

    def test_corrupt_cache_is_ignored(self, capsys, tmp_path, monkeypatch):
        (tmp_path / "schubert_cache.json").write_text("{not json")
        monkeypatch.setenv("SCHUBERT_CACHE_DIR", str(tmp_path))
        clear_schubert_cache()
        code, out, _ = run(capsys, "schubert", "2,3,4,1,5")
        assert code == 0 and out.strip() == "x1*x2*x3"
