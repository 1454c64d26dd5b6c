from __future__ import annotations

import csv
import io
import json

import pytest

from degpow.cli import main
from degpow.graphs import degree_sequence, from_graph6


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_friendship_graph6(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "friendship", "5")
        assert code == 0
        assert degree_sequence(from_graph6(out.strip())) == (4, 2, 2, 2, 2)

    def test_polarity_edgelist(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "polarity", "2", "--out", "edgelist")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "7" and len(lines) == 1 + 9

    def test_wheel_too_small(self, capsys):
        code, _, err = run_cli(capsys, "construct", "wheel", "3")
        assert code == 1 and "wheel" in err

    def test_bipartite_params(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "complete_bipartite", "2", "5")
        assert code == 0
        assert degree_sequence(from_graph6(out.strip())) == (3, 3, 2, 2, 2)

    def test_split_params(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "split", "6", "2")
        assert code == 0
        assert degree_sequence(from_graph6(out.strip())) == (5, 5, 2, 2, 2, 2)


class TestEp:
    def test_g6_input(self, capsys):
        code, out, _ = run_cli(capsys, "ep", "--g6", "C~", "--p", "2")
        assert code == 0 and out.strip() == "36"

    def test_friendship_31(self, capsys):
        _, g6, _ = run_cli(capsys, "construct", "friendship", "31")
        code, out, _ = run_cli(capsys, "ep", "--g6", g6.strip(), "--p", "2")
        assert code == 0 and out.strip() == "1020"

    def test_empty_graph(self, capsys):
        code, out, _ = run_cli(capsys, "ep", "--g6", "C?", "--p", "5")
        assert code == 0 and out.strip() == "0"

    def test_edge_list_file(self, tmp_path, capsys):
        path = tmp_path / "g.edges"
        path.write_text("3\n0 1\n1 2\n")
        code, out, _ = run_cli(capsys, "ep", "--file", str(path), "--p", "2")
        assert code == 0 and out.strip() == "6"

    def test_graph6_lines_file(self, tmp_path, capsys):
        path = tmp_path / "graphs.g6"
        path.write_text("C~\nBw\n")
        code, out, _ = run_cli(capsys, "ep", "--file", str(path), "--p", "2")
        assert code == 0 and out.split() == ["36", "12"]

    def test_parse_failure(self, capsys):
        code, _, err = run_cli(capsys, "ep", "--g6", "C\x01", "--p", "2")
        assert code == 1 and "error" in err


class TestCheck:
    def test_c4free_friendship(self, capsys):
        _, g6, _ = run_cli(capsys, "construct", "friendship", "7")
        code, out, _ = run_cli(capsys, "check", "c4free", "--g6", g6.strip())
        assert code == 0 and out.strip() == "true"

    def test_min_t_conn_wheel(self, capsys):
        _, g6, _ = run_cli(capsys, "construct", "wheel", "8")
        code, out, _ = run_cli(capsys, "check", "min-t-conn", "--t", "3", "--g6", g6.strip())
        assert code == 0 and out.strip() == "true"

    def test_degeneracy_k5(self, capsys):
        code, out, _ = run_cli(capsys, "check", "degeneracy", "--g6", "D~{")
        assert code == 0 and out.strip() == "4"

    def test_missing_param(self, capsys):
        with pytest.raises(SystemExit):
            run_cli(capsys, "check", "min-t-conn", "--g6", "C~")

    def test_false_result_still_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "check", "c4free", "--g6", "C~")
        assert code == 0 and out.strip() == "false"


class TestVerify:
    def test_exit_zero_on_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "polarity", "--q", "5", "--p", "2")
        assert code == 0
        assert "pass value=30" in out

    def test_thresholds_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "thresholds", "--pair", "W_vs_K3", "--pmax", "11"
        )
        assert code == 0
        values = [int(line.rsplit("=", 1)[1]) for line in out.splitlines() if "value=" in line]
        assert values == [8, 9, 10, 12, 13, 15, 17, 19, 21, 23]

    def test_json_determinism(self, tmp_path, capsys):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            code, _, _ = run_cli(
                capsys, "verify", "lemma12", "--n", "6..12", "--p", "2,3",
                "--json", str(path),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        payload = json.loads(paths[0].read_text())
        assert payload["format_version"] == 1
        assert payload["started_at"] is None  # omitted for byte-identical runs
        assert all(r["verdict"] == "pass" for r in payload["records"])

    def test_timestamps_opt_in(self, tmp_path, capsys):
        path = tmp_path / "t.json"
        run_cli(capsys, "verify", "polarity", "--q", "2", "--p", "2",
                "--json", str(path), "--timestamps")
        payload = json.loads(path.read_text())
        assert payload["started_at"] is not None

    def test_csv_schema(self, tmp_path, capsys):
        path = tmp_path / "r.csv"
        code, _, _ = run_cli(
            capsys, "verify", "thm2", "--n", "4,5", "--p", "2", "--csv", str(path)
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(path.read_text())))
        assert rows[0] == ["suite", "params", "verdict", "value", "witness_g6"]
        assert ["t2i", "n=4;p=2", "pass", "16", ""] in rows

    def test_records_round_trip_through_json(self, tmp_path, capsys):
        path = tmp_path / "r.json"
        run_cli(capsys, "verify", "appendixA", "--p", "12", "--json", str(path))
        payload = json.loads(path.read_text())
        for record in payload["records"]:
            assert set(record) == {"check", "params", "verdict", "value", "witness", "detail"}

    def test_failing_record_exits_one_with_witness(self, capsys, monkeypatch):
        import degpow.cli as cli_mod
        from degpow.verify import VerificationRecord

        bad = VerificationRecord(
            check="demo", params={"n": 4}, verdict="fail", witness={"g6": "C~"}
        )
        monkeypatch.setattr(cli_mod, "run_task", lambda task: [bad])
        code, out, _ = run_cli(capsys, "verify", "polarity", "--q", "2", "--p", "2")
        assert code == 1
        assert "witness" in out and "C~" in out

    def test_enumeration_guard(self, capsys, monkeypatch):
        monkeypatch.delenv("DEGPOW_MAX_N", raising=False)
        with pytest.raises(SystemExit):
            run_cli(capsys, "verify", "thm1", "--n", "9", "--p", "2")

    def test_guard_lifted_by_env(self, capsys, monkeypatch):
        monkeypatch.setenv("DEGPOW_MAX_N", "9")
        code, out, _ = run_cli(capsys, "verify", "thm1", "--n", "4", "--p", "2")
        assert code == 0

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit):
            run_cli(capsys, "verify", "nosuchsuite")
