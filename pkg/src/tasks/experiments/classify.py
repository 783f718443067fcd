import sys

from common.machines.enumeration import MachineClass
from common.reports.classification import (DEFAULT_BUDGET, DEFAULT_HISTORY_CAP, classifyAll,
                                           summaryPathFor, writeClassificationCsv, writeSummary)
from tasks.task import EXIT_AUDIT_FAILURE, EXIT_OK, Task
from utility import bcolors, colourKind, parseIntList, prepareOutputPath


class ClassifyMachineClass(Task):
    """ Enumerate a machine class and classify every member with the looping oracle. """

    def __init__(self, logger):
        super().__init__(logger)
        self.states = None
        self.symbols = None
        self.budget = None
        self.historyCap = None
        self.input = None
        self.workers = None
        self.out = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.states = kwargs["states"]
        self.symbols = kwargs["symbols"]
        self.budget = kwargs.get("budget", DEFAULT_BUDGET)
        self.historyCap = kwargs.get("history_cap", DEFAULT_HISTORY_CAP)
        self.input = parseIntList(kwargs.get("input", ""))
        self.workers = kwargs.get("workers", 1)
        self.out = kwargs.get("out")

        machineClass = MachineClass(self.states, self.symbols)
        report = classifyAll(machineClass, self.input, self.budget, self.historyCap,
                             self.workers, self.logger.name)

        # CSV body to <out> (or stdout); wall time goes to the sidecar summary only.
        #
        if self.out:
            path = prepareOutputPath(self.out)
            with open(path, "w", newline="") as f:
                writeClassificationCsv(report, f)
            writeSummary(report.summary, summaryPathFor(path))
            self.logger.info("Report written to {}".format(path))
        else:
            writeClassificationCsv(report, sys.stdout)

        for kind, count in report.counts.items():
            self.logger.info("{}: {}".format(colourKind(kind), count))
        if report.summary["max_halting_step"] is not None:
            self.logger.info("Max halting step: {}".format(report.summary["max_halting_step"]))
        if report.summary["within_wall_time_target"]:
            self.logger.info("Classified in {:.1f}s (target {}s)".format(
                report.wallTime, report.summary["wall_time_target_s"]))
        else:
            self.logger.warning(bcolors.WARNING + "Classified in {:.1f}s, over the {}s target".format(
                report.wallTime, report.summary["wall_time_target_s"]) + bcolors.ENDC)

        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        if report.auditFailures:
            self.logger.critical(bcolors.FAIL + "{} audit failure(s)".format(
                len(report.auditFailures)) + bcolors.ENDC)
            return EXIT_AUDIT_FAILURE
        return EXIT_OK
