from dataclasses import dataclass, field
import random

from common.recfun.evaluator import auditMu, evaluate
from common.recfun.generate import randomArgs, randomExpr
from common.recfun.reference import oracleEvaluate
from common.recfun.results import Value
from tasks.task import EXIT_AUDIT_FAILURE, EXIT_OK, Task
from utility import bcolors


@dataclass
class SweepResult:
    cases: int = 0
    converged: int = 0
    exhausted: int = 0
    muAudits: int = 0
    disagreements: list = field(default_factory=list)
    muFailures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements and not self.muFailures


def differentialSweep(cases=10 ** 4, seed=0, maxDepth=5, maxArity=3, maxArg=10, fuel=10 ** 5):
    """
    Evaluate <cases> random well-arity expressions with both evaluators and compare the
    results exactly; audit mu-minimality for every value a mu node returned.
    """
    rng = random.Random(seed)
    result = SweepResult()
    for _ in range(cases):
        arity = rng.randint(0, maxArity)
        depth = rng.randint(2 if arity == 0 else 1, maxDepth)
        expr = randomExpr(rng, arity, depth)
        args = randomArgs(rng, arity, maxArg)

        trace = []
        expected = oracleEvaluate(expr, args, fuel, trace)
        actual = evaluate(expr, args, fuel)
        result.cases += 1
        if actual != expected:
            result.disagreements.append((expr, args, expected, actual))
        if isinstance(expected, Value):
            result.converged += 1
        else:
            result.exhausted += 1

        for muExpr, muArgs, k in set(trace):
            result.muAudits += 1
            if not auditMu(muExpr.body, muArgs, k, fuel):
                result.muFailures.append((muExpr, muArgs, k))
    return result


class EvaluatorEquivalence(Task):
    """ Differential run of the main evaluator against the reference evaluator. """

    def __init__(self, logger):
        super().__init__(logger)
        self.cases = None
        self.seed = None
        self.maxDepth = None
        self.maxArg = None
        self.fuel = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.cases = kwargs.get("cases", 10 ** 4)
        self.seed = kwargs.get("seed", 0)
        self.maxDepth = kwargs.get("max_depth", 5)
        self.maxArg = kwargs.get("max_arg", 10)
        self.fuel = kwargs.get("fuel", 10 ** 5)

        result = differentialSweep(self.cases, self.seed, self.maxDepth, maxArg=self.maxArg, fuel=self.fuel)
        self.logger.info("{} cases: {} converged, {} out of fuel, {} mu values audited".format(
            result.cases, result.converged, result.exhausted, result.muAudits))
        for expr, args, expected, actual in result.disagreements[:10]:
            self.logger.error("Disagreement on {} {}: reference {} vs {}".format(expr, args, expected, actual))
        for muExpr, muArgs, k in result.muFailures[:10]:
            self.logger.error("Mu minimality failed: {} {} -> {}".format(muExpr, muArgs, k))

        self.toc()
        self.logger.info("Finished in {}s".format(self.elapsed))
        if not result.ok:
            self.logger.critical(bcolors.FAIL + "{} disagreements, {} mu failures".format(
                len(result.disagreements), len(result.muFailures)) + bcolors.ENDC)
            return EXIT_AUDIT_FAILURE
        return EXIT_OK
