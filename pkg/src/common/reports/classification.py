import csv
from dataclasses import dataclass, field
from functools import partial
import logging
from multiprocessing import Pool
import time

import numpy as np
import yaml

from common.machines.enumeration import enumerateClass
from common.machines.oracle import replayVerify, runWithOracle
from common.machines.outcomes import OUTCOME_KINDS, Halted, LoopDetected

CSV_HEADER = ("machine_id", "outcome", "steps", "loop_first", "loop_period", "audit")
DEFAULT_BUDGET = 10 ** 4
DEFAULT_HISTORY_CAP = 10 ** 5
WALL_TIME_TARGET_S = 120


@dataclass(frozen=True)
class ClassificationRow:
    machineId: str
    outcome: str
    steps: int
    loopFirst: object = None
    loopPeriod: object = None
    audit: bool = True
    historyCapped: bool = False

    def csvFields(self):
        return (self.machineId, self.outcome, self.steps,
                "" if self.loopFirst is None else self.loopFirst,
                "" if self.loopPeriod is None else self.loopPeriod,
                "true" if self.audit else "false")


@dataclass
class ClassificationReport:
    rows: list
    budget: int
    historyCap: int
    classSize: int
    wallTime: float = 0.0
    summary: dict = field(default_factory=dict)

    @property
    def counts(self):
        counts = {kind: 0 for kind in OUTCOME_KINDS}
        for row in self.rows:
            counts[row.outcome] += 1
        return counts

    @property
    def auditFailures(self):
        return [row for row in self.rows if not row.audit]

    def summarise(self):
        """ Counts per outcome and halting-step statistics; numbers only, for the sidecar. """
        haltingSteps = np.array([r.steps for r in self.rows if r.outcome == Halted.kind], dtype=np.int64)
        periods = np.array([r.loopPeriod for r in self.rows if r.outcome == LoopDetected.kind],
                           dtype=np.int64)
        self.summary = {
            "class_size": self.classSize,
            "counts": self.counts,
            "audit_failures": len(self.auditFailures),
            "history_capped": sum(1 for r in self.rows if r.historyCapped),
            "budget": self.budget,
            "history_cap": self.historyCap,
            "max_halting_step": int(haltingSteps.max()) if haltingSteps.size else None,
            "mean_halting_step": round(float(np.mean(haltingSteps)), 3) if haltingSteps.size else None,
            "median_halting_step": float(np.median(haltingSteps)) if haltingSteps.size else None,
            "max_loop_period": int(periods.max()) if periods.size else None,
            "wall_time_s": round(self.wallTime, 3),
            "wall_time_target_s": WALL_TIME_TARGET_S,
            "within_wall_time_target": self.wallTime < WALL_TIME_TARGET_S,
        }
        return self.summary


def classifyMachine(machine, input=(), budget=DEFAULT_BUDGET, historyCap=DEFAULT_HISTORY_CAP):
    """ Oracle verdict for one machine plus its replay audit. """
    outcome = runWithOracle(machine, input, budget, historyCap)
    audit = replayVerify(machine, input, outcome)
    if isinstance(outcome, LoopDetected):
        return ClassificationRow(machine.code(), outcome.kind, outcome.steps,
                                 outcome.firstIndex, outcome.period, audit)
    return ClassificationRow(machine.code(), outcome.kind, outcome.steps, audit=audit,
                             historyCapped=getattr(outcome, "historyCapped", False))


def classifyAll(machineClass, input=(), budget=DEFAULT_BUDGET, historyCap=DEFAULT_HISTORY_CAP,
                workers=1, loggerName="root"):
    """
    Classify every machine of <machineClass> with the looping oracle and audit each
    verdict by replay. Rows are in canonical enumeration order whatever <workers> is.
    """
    logger = logging.getLogger(loggerName)
    start = time.time()
    machines = enumerateClass(machineClass, loggerName)
    classify = partial(classifyMachine, input=tuple(input), budget=budget, historyCap=historyCap)
    if workers > 1:
        logger.info("Classifying {} machines on {} workers".format(machineClass.size, workers))
        with Pool(workers) as pool:
            rows = list(pool.imap(classify, machines, chunksize=256))
    else:
        logger.info("Classifying {} machines".format(machineClass.size))
        rows = [classify(machine) for machine in machines]

    report = ClassificationReport(rows, budget, historyCap, machineClass.size, time.time() - start)
    report.summarise()
    for row in report.auditFailures:
        logger.error("Audit failed for machine {} ({})".format(row.machineId, row.outcome))
    return report


def writeClassificationCsv(report, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(row.csvFields())


def writeSummary(summary, path):
    """ Sidecar summary; the only place wall time is recorded. """
    with open(path, "w") as f:
        yaml.safe_dump(summary, f, sort_keys=False)


def summaryPathFor(csvPath):
    csvPath = str(csvPath)
    stem = csvPath[:-4] if csvPath.endswith(".csv") else csvPath
    return stem + ".summary.yml"
