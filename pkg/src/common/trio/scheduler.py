"""
Canonical trio schedule: deterministic round-robin interleaving.

Every round grants <quantum> units to T1, then T2, then T3, in that order; the first
searcher to succeed fixes the verdict, so simultaneous success cannot occur. Units are
fuel for T1, machine steps for T2 and checked candidates for T3.
"""
import logging

from common.machines.oracle import OracleRun
from common.machines.outcomes import LoopDetected
from common.proofs.certificate import Statement
from common.recfun.evaluator import Evaluation
from common.trio.task import Exhausted, Found, Proved, SelfTerminated, Undetermined


class Searcher():
    """ One member of the trio; advance(units) returns a verdict or None. """
    name = None

    def __init__(self):
        self.granted = 0
        self.used = 0
        self.retired = False

    def grant(self, units):
        self.granted += units
        if self.retired:
            return None
        return self.advance(units)

    def advance(self, units):
        raise NotImplementedError


class ZeroSearch(Searcher):
    """ T1: evaluate G(a, 0), G(a, 1), ... until a zero appears. """
    name = "T1"

    def __init__(self, task):
        super().__init__()
        self.task = task
        self.y = 0
        self.evaluation = None

    def advance(self, units):
        while units > 0:
            if self.evaluation is None:
                self.evaluation = Evaluation(self.task.gBody, self.task.fixedArgs + (self.y,))
            before = self.evaluation.consumed
            value = self.evaluation.advance(units)
            spent = self.evaluation.consumed - before
            units -= spent
            self.used += spent
            if value is None:
                return None
            if value == 0:
                return Found(self.y, self.used)
            self.y += 1
            self.evaluation = None
        return None


class LoopSearch(Searcher):
    """ T2: run the task's machine under the looping oracle. """
    name = "T2"

    def __init__(self, task):
        super().__init__()
        self.oracle = OracleRun(task.t2Machine, task.t2Input, task.historyCap)

    def advance(self, units):
        before = self.oracle.steps
        outcome = self.oracle.advance(units)
        self.used += self.oracle.steps - before
        if isinstance(outcome, LoopDetected):
            return SelfTerminated(outcome)
        if outcome is not None:
            # Halted, or the history cap fired: T2 can no longer signal self-termination.
            self.retired = True
        return None


class ProofSearch(Searcher):
    """ T3: check certificates in enumeration order. """
    name = "T3"

    def __init__(self, task):
        super().__init__()
        self.system = task.proofSystem
        self.statement = Statement(task.gBody, task.fixedArgs)
        self.candidates = iter(self.system.enumerateCertificates(self.statement, task.maxCertSize))

    def advance(self, units):
        for _ in range(units):
            try:
                cert = next(self.candidates)
            except StopIteration:
                self.retired = True
                return None
            self.used += 1
            if self.system.checkCertificate(cert, self.statement):
                return Proved(cert)
        return None


class Trio():
    """ Holds the three searchers and the round counter of one canonical run. """

    def __init__(self, task, loggerName="root"):
        self.task = task
        self.logger = logging.getLogger(loggerName)
        self.searchers = (ZeroSearch(task), LoopSearch(task), ProofSearch(task))
        self.rounds = 0
        self.verdict = None

    @property
    def granted(self):
        return {s.name: s.granted for s in self.searchers}

    @property
    def used(self):
        return {s.name: s.used for s in self.searchers}

    def run(self, rounds=None):
        """ Run up to <rounds> more rounds (default: the rest of the budget). """
        if self.verdict is not None:
            return self.verdict
        limit = self.task.budget if rounds is None else min(self.task.budget, self.rounds + rounds)
        while self.rounds < limit:
            self.rounds += 1
            for searcher in self.searchers:
                verdict = searcher.grant(self.task.quantum)
                if verdict is not None:
                    self.verdict = _withRounds(verdict, self.rounds)
                    self.logger.debug("{}: {} won in round {} ({})".format(
                        self.task.name, searcher.name, self.rounds, self.verdict))
                    return self.verdict
        if self.rounds >= self.task.budget:
            self.verdict = Exhausted(self.rounds)
            self.logger.debug("{}: exhausted after {} rounds".format(self.task.name, self.rounds))
            return self.verdict
        return None


def _withRounds(verdict, rounds):
    if isinstance(verdict, Found):
        return Found(verdict.k, verdict.steps, rounds)
    if isinstance(verdict, SelfTerminated):
        return SelfTerminated(verdict.loop, rounds)
    return Proved(verdict.cert, rounds)


def runTrio(task, loggerName="root"):
    return Trio(task, loggerName).run()


def extendVerdict(verdict):
    """ F' value for a verdict: k if T1 won, 0 if T2 or T3 won, Undetermined otherwise. """
    if isinstance(verdict, Found):
        return verdict.k
    if isinstance(verdict, (SelfTerminated, Proved)):
        return 0
    return Undetermined


def extend(task, loggerName="root"):
    return extendVerdict(runTrio(task, loggerName))
