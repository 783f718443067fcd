import io

import pytest
import yaml

from common.machines.enumeration import MachineClass, enumerateClass
from common.machines.outcomes import OUTCOME_KINDS
from common.reports.classification import (CSV_HEADER, WALL_TIME_TARGET_S, ClassificationReport,
                                           classifyAll, classifyMachine, summaryPathFor,
                                           writeClassificationCsv, writeSummary)
from common.machines.families import pingPong
from errors import ClassTooLarge, ValidationError


class TestEnumeration:

    @pytest.mark.parametrize("states,symbols,size", [(1, 1, 3), (1, 2, 25), (2, 2, 6561)])
    def test_class_sizes(self, states, symbols, size):
        machineClass = MachineClass(states, symbols)
        assert machineClass.size == size
        machines = list(enumerateClass(machineClass))
        assert len(machines) == size
        assert len({m.code() for m in machines}) == size

    def test_canonical_order(self):
        codes = [m.code() for m in enumerateClass(MachineClass(1, 1))]
        assert codes == ["---", "0LA", "0RA"]

    def test_deterministic(self):
        first = [m.code() for m in enumerateClass(MachineClass(1, 2))]
        second = [m.code() for m in enumerateClass(MachineClass(1, 2))]
        assert first == second

    def test_too_large(self):
        with pytest.raises(ClassTooLarge) as e:
            enumerateClass(MachineClass(3, 3))
        assert e.value.count == 19 ** 9

    def test_limit_is_configurable(self):
        with pytest.raises(ClassTooLarge):
            enumerateClass(MachineClass(1, 2, limit=24))

    def test_empty_class_rejected(self):
        with pytest.raises(ValidationError):
            MachineClass(0, 2)


class TestClassifyAll:

    def test_one_state_one_symbol(self):
        report = classifyAll(MachineClass(1, 1), budget=100)
        assert report.counts == {"halted": 1, "loop": 0, "budget": 2}
        assert not report.auditFailures

    def test_one_state_two_symbols(self):
        report = classifyAll(MachineClass(1, 2), budget=100)
        assert len(report.rows) == 25
        assert sum(report.counts.values()) == 25
        assert not report.auditFailures
        assert set(report.counts) == set(OUTCOME_KINDS)

    def test_workers_keep_order(self):
        serial = classifyAll(MachineClass(1, 2), budget=100)
        fanned = classifyAll(MachineClass(1, 2), budget=100, workers=2)
        assert fanned.rows == serial.rows

    def test_ping_pong_row(self):
        row = classifyMachine(pingPong(), budget=100)
        assert row.csvFields() == ("0RB---_0LA---", "loop", 2, 0, 2, "true")

    def test_summary(self):
        report = classifyAll(MachineClass(1, 1), budget=100)
        assert report.summary["class_size"] == 3
        assert report.summary["max_halting_step"] == 0
        assert report.summary["max_loop_period"] is None
        assert report.summary["audit_failures"] == 0
        assert report.summary["within_wall_time_target"]

    def test_wall_time_over_target_is_flagged(self):
        report = ClassificationReport([], budget=100, historyCap=10, classSize=0, wallTime=150.0)
        summary = report.summarise()
        assert summary["wall_time_target_s"] == WALL_TIME_TARGET_S
        assert not summary["within_wall_time_target"]

    @pytest.mark.slow
    def test_two_state_two_symbol_class(self):
        report = classifyAll(MachineClass(2, 2), budget=10 ** 4, historyCap=10 ** 5, workers=2)
        assert len(report.rows) == 6561
        assert not report.auditFailures
        assert report.counts["loop"] > 0
        assert report.counts["halted"] > 0


class TestReportFiles:

    def test_csv(self):
        report = classifyAll(MachineClass(1, 1), budget=10)
        stream = io.StringIO()
        writeClassificationCsv(report, stream)
        lines = stream.getvalue().split("\n")
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1] == "---,halted,0,,,true"
        assert lines[2] == "0LA,budget,10,,,true"
        assert lines[-1] == ""
        assert len(lines) == 5

    def test_csv_is_reproducible(self):
        outputs = []
        for _ in range(2):
            stream = io.StringIO()
            writeClassificationCsv(classifyAll(MachineClass(1, 2), budget=50), stream)
            outputs.append(stream.getvalue())
        assert outputs[0] == outputs[1]

    def test_summary_sidecar(self, tmp_path):
        report = classifyAll(MachineClass(1, 2), budget=50)
        path = summaryPathFor(tmp_path / "class.csv")
        assert path.endswith("class.summary.yml")
        writeSummary(report.summary, path)
        with open(path) as f:
            summary = yaml.safe_load(f)
        assert summary["counts"] == report.counts
        assert "wall_time_s" in summary
