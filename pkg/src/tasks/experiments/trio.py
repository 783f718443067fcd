import sys

from common.reports.fixtures import runFixtureSuite, writeTrioCsv
from common.trio.corpus import AUDIT_FUEL
from tasks.task import Task
from utility import bcolors, colourKind, prepareOutputPath


class RunTrioFixtures(Task):
    """ Run the trio on every fixture in a directory and audit each verdict. """

    def __init__(self, logger):
        super().__init__(logger)
        self.fixtures = None
        self.auditFuel = None
        self.parallel = None
        self.out = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.fixtures = kwargs["fixtures"]
        self.auditFuel = kwargs.get("audit_fuel", AUDIT_FUEL)
        self.parallel = kwargs.get("parallel", False)
        self.out = kwargs.get("out")

        if self.parallel:
            self.logger.info("Threaded trio, each verdict checked against a canonical re-run")
        report = runFixtureSuite(self.fixtures, self.auditFuel, self.logger.name, self.parallel)

        if self.out:
            path = prepareOutputPath(self.out)
            with open(path, "w", newline="") as f:
                writeTrioCsv(report, f)
            self.logger.info("Report written to {}".format(path))
        else:
            writeTrioCsv(report, sys.stdout)

        for record in report.records:
            self.logger.info("{:<24} {} F'={}".format(record.name, colourKind(record.verdict.kind),
                                                      record.fPrime))
        for failure in report.failures:
            self.logger.critical(bcolors.FAIL + "{}: audit {} / expectation {}".format(
                failure.name, failure.audit, report.expectationMet(failure)) + bcolors.ENDC)
        for diagnostic in report.diagnostics:
            self.logger.critical(diagnostic)

        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        return report.exitCode
