from common.machines.families import confinedFamily, confinementBound
from common.machines.oracle import replayVerify, runWithOracle
from common.machines.outcomes import BudgetExceeded, LoopDetected
from tasks.task import EXIT_AUDIT_FAILURE, EXIT_OK, Task
from utility import bcolors, colourKind


def checkConfinedFamily(count=50, seed=0, maxCells=3):
    """
    Run every confined machine with budget bound + 1 and collect rows of
    (code, cells, bound, outcome, audit). None may end in BudgetExceeded.
    """
    rows = []
    for machine, cells in confinedFamily(count, seed, maxCells):
        bound = confinementBound(machine, cells)
        outcome = runWithOracle(machine, (), bound + 1)
        rows.append((machine.code(), cells, bound, outcome, replayVerify(machine, (), outcome)))
    return rows


class BoundedTapeCompleteness(Task):
    """ Machines confined to a few cells must all end Halted or LoopDetected within their bound. """

    def __init__(self, logger):
        super().__init__(logger)
        self.count = None
        self.seed = None
        self.maxCells = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.count = kwargs.get("count", 50)
        self.seed = kwargs.get("seed", 0)
        self.maxCells = kwargs.get("max_cells", 3)

        rows = checkConfinedFamily(self.count, self.seed, self.maxCells)
        exceeded = [r for r in rows if isinstance(r[3], BudgetExceeded)]
        failedAudits = [r for r in rows if not r[4]]
        for code, cells, bound, outcome, audit in rows:
            extra = ""
            if isinstance(outcome, LoopDetected):
                extra = " first {} period {}".format(outcome.firstIndex, outcome.period)
            self.logger.debug("{} cells={} bound={} {}{} audit={}".format(
                code, cells, bound, colourKind(outcome.kind), extra, audit))

        loops = sum(1 for r in rows if isinstance(r[3], LoopDetected))
        self.logger.info("{} machines: {} halted, {} looping, {} budget exceeded".format(
            len(rows), len(rows) - loops - len(exceeded), loops, len(exceeded)))
        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        if exceeded or failedAudits:
            self.logger.critical(bcolors.FAIL + "{} budget exceeded, {} audit failures".format(
                len(exceeded), len(failedAudits)) + bcolors.ENDC)
            return EXIT_AUDIT_FAILURE
        return EXIT_OK
