from common.machines.core import Simulation, initialID
from common.machines.families import rightRunner
from common.machines.oracle import runWithOracle
from common.machines.outcomes import BudgetExceeded
from tasks.task import EXIT_AUDIT_FAILURE, EXIT_OK, Task
from utility import bcolors

DEFAULT_BUDGETS = (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)


def nonBlankSamples(machine, steps, samples=100):
    """ Non-blank cell counts at <samples> evenly spaced steps in 0..steps. """
    simulation = Simulation(machine, initialID(machine))
    stride = max(1, steps // samples)
    counts = [simulation.nonBlankCount]
    while simulation.steps < steps:
        if not simulation.advance():
            break
        if simulation.steps % stride == 0:
            counts.append(simulation.nonBlankCount)
    return counts


def strictlyIncreasing(values):
    return all(b > a for a, b in zip(values, values[1:]))


class DemoFalsify(Task):
    """
    Show the limit of the looping oracle: the right-runner never halts, yet no
    instantaneous description ever repeats, so every budget ends in BudgetExceeded.
    """

    def __init__(self, logger):
        super().__init__(logger)
        self.budgets = None
        self.samples = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.budgets = tuple(kwargs.get("budgets") or DEFAULT_BUDGETS)
        self.samples = kwargs.get("samples", 100)

        machine = rightRunner()
        self.logger.info("Machine {}: q0 on blank -> write 1, move R, stay in q0".format(machine.code()))
        ok = True
        for budget in self.budgets:
            outcome = runWithOracle(machine, (), budget)
            counts = nonBlankSamples(machine, budget, self.samples)
            monotone = strictlyIncreasing(counts)
            verdictOk = isinstance(outcome, BudgetExceeded) and outcome.steps == budget
            ok = ok and verdictOk and monotone
            colour = bcolors.OKGREEN if verdictOk and monotone else bcolors.FAIL
            self.logger.info(colour + "budget {:>8}: {} after {} steps; non-blank cells {} -> {} "
                             "over {} samples, strictly increasing: {}".format(
                                 budget, outcome.kind, outcome.steps, counts[0], counts[-1],
                                 len(counts), monotone) + bcolors.ENDC)
            print("{},{},{},{}".format(budget, outcome.kind, outcome.steps, str(monotone).lower()))

        self.logger.info("The oracle is sound but not complete: this machine never halts "
                         "and never repeats a description.")
        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        return EXIT_OK if ok else EXIT_AUDIT_FAILURE
