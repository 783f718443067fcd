from common.recfun.evaluator import evaluate
from common.recfun.results import Value
from common.reports.fixtures import runFixtureSuite
from common.trio.task import Proved
from tasks.task import EXIT_AUDIT_FAILURE, EXIT_OK, Task
from utility import bcolors


def sampleZeros(task, samples=1000, fuel=10 ** 4):
    """ Values of y in 0..samples where G(fixedArgs, y) converges to 0. """
    zeros = []
    for y in range(samples + 1):
        result = evaluate(task.gBody, task.fixedArgs + (y,), fuel)
        if isinstance(result, Value) and result.v == 0:
            zeros.append(y)
    return zeros


class CertificateSoundnessSweep(Task):
    """ Re-check every Proved fixture by sampling its statement over y = 0..samples. """

    def __init__(self, logger):
        super().__init__(logger)
        self.fixtures = None
        self.samples = None
        self.fuel = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.fixtures = kwargs["fixtures"]
        self.samples = kwargs.get("samples", 1000)
        self.fuel = kwargs.get("fuel", 10 ** 4)

        report = runFixtureSuite(self.fixtures, loggerName=self.logger.name)
        violations = 0
        proved = 0
        for record in report.records:
            if not isinstance(record.verdict, Proved):
                continue
            proved += 1
            zeros = sampleZeros(record.task, self.samples, self.fuel)
            if zeros:
                violations += 1
                self.logger.critical(bcolors.FAIL + "{}: certificate {} but G is 0 at y = {}".format(
                    record.name, record.verdict.cert.render(), zeros[:10]) + bcolors.ENDC)
            else:
                self.logger.info("{}: {} holds on y = 0..{}".format(
                    record.name, record.verdict.cert.render(), self.samples))

        self.logger.info("{} proved fixtures sampled, {} violations".format(proved, violations))
        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        return EXIT_AUDIT_FAILURE if violations or report.diagnostics else EXIT_OK
