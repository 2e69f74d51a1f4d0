"""Test run logs."""

import json
from pathlib import Path

import pytest

from poisson_vqls.ansatz import AnsatzKind
from poisson_vqls.bench import read_run_log, read_run_logs, run_file_name, write_run_log
from poisson_vqls.engine import RunConfig, optimize
from poisson_vqls.errors import ReportError


class TestRunLog:
    """Test writing and reading run logs."""

    def test_file_name(self) -> None:
        """Test `<ansatz>_n<n>_q<qdelta>_s<seed>.jsonl`."""
        config = RunConfig.for_ansatz(4, AnsatzKind.HEA, q_delta=0.1, seed=2)
        assert run_file_name(config) == "hea_n4_q0.1_s2.jsonl"

    def test_round_trip(self, tmp_path: Path) -> None:
        """Test a record survives writing and reading."""
        record = optimize(RunConfig.for_ansatz(2, AnsatzKind.GEA, max_iterations=2))
        path = write_run_log(record, tmp_path / "runs")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert [json.loads(line)["kind"] for line in lines] == ["header", "iteration", "iteration", "result"]
        assert read_run_log(path).model_dump() == record.model_dump()
        assert "wall_time_seconds" not in json.loads(lines[-1])

    def test_malformed_line(self, tmp_path: Path) -> None:
        """Test unparseable lines are reported with their number."""
        path = tmp_path / "bad.jsonl"
        path.write_text('{"kind": "header"}\n', encoding="utf-8")
        with pytest.raises(ReportError, match=":1:"):
            read_run_log(path)

    def test_incomplete(self, tmp_path: Path) -> None:
        """Test logs need a header and a result."""
        record = optimize(RunConfig.for_ansatz(2, max_iterations=1))
        path = write_run_log(record, tmp_path)
        lines = path.read_text(encoding="utf-8").splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
        with pytest.raises(ReportError, match="header and a result"):
            read_run_log(path)

    def test_read_directory(self, tmp_path: Path) -> None:
        """Test every log in a directory is read in name order."""
        for seed in (1, 0):
            write_run_log(optimize(RunConfig.for_ansatz(2, max_iterations=1, seed=seed)), tmp_path)
        assert [record.config.seed for record in read_run_logs(tmp_path)] == [0, 1]
        with pytest.raises(ReportError):
            read_run_logs(tmp_path / "missing")
