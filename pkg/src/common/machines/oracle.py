"""
Looping oracle: simulate a machine while recording every instantaneous description, and
return a self-termination verdict (LoopDetected) as soon as one recurs exactly.

Descriptions are indexed by an incremental fingerprint. A fingerprint hit is confirmed
by re-simulating up to the earlier step and comparing the full descriptions, so a
LoopDetected verdict is never the product of a hash collision.
"""
from common.machines.core import Simulation, initialID, simulateTo
from common.machines.outcomes import BudgetExceeded, Halted, LoopDetected
from errors import ValidationError


class History():
    """
    Fingerprint -> step indices of the descriptions recorded under it. A lone index is
    stored bare; a list only appears once two descriptions share a fingerprint.
    """

    def __init__(self, cap=None):
        self._index = {}
        self._size = 0
        self.cap = cap

    def candidates(self, fingerprint):
        entry = self._index.get(fingerprint)
        if entry is None:
            return ()
        if isinstance(entry, list):
            return entry
        return (entry,)

    def record(self, fingerprint, stepIndex):
        entry = self._index.get(fingerprint)
        if entry is None:
            self._index[fingerprint] = stepIndex
        elif isinstance(entry, list):
            entry.append(stepIndex)
        else:
            self._index[fingerprint] = [entry, stepIndex]
        self._size += 1

    @property
    def full(self):
        return self.cap is not None and self._size >= self.cap

    def __len__(self):
        return self._size


class OracleRun():
    """
    Resumable oracle simulation of <machine> on <input>.

    advance(units) executes at most <units> further steps and returns the outcome
    (Halted or LoopDetected, or BudgetExceeded when the history cap fires), or None if
    the machine is still running when the units run out.
    """

    def __init__(self, machine, input=(), historyCap=None):
        self.machine = machine
        self.input = tuple(input)
        self.simulation = Simulation(machine, initialID(machine, self.input))
        self.history = History(historyCap)
        self.history.record(self.simulation.fingerprint(), 0)
        self.falseHits = 0
        self.outcome = None

    @property
    def steps(self):
        return self.simulation.steps

    def advance(self, units):
        if self.outcome is not None:
            return self.outcome
        simulation = self.simulation
        history = self.history
        while True:
            if units <= 0:
                if simulation.isHalted():
                    self.outcome = Halted(simulation.steps, simulation.snapshot())
                return self.outcome
            if not simulation.advance():
                self.outcome = Halted(simulation.steps, simulation.snapshot())
                return self.outcome
            units -= 1

            fingerprint = simulation.fingerprint()
            for earlier in history.candidates(fingerprint):
                if self._confirm(earlier):
                    self.outcome = LoopDetected(earlier, simulation.steps - earlier)
                    return self.outcome
                self.falseHits += 1

            if history.full:
                self.outcome = BudgetExceeded(simulation.steps, simulation.snapshot(), historyCapped=True)
                return self.outcome
            history.record(fingerprint, simulation.steps)

    def _confirm(self, earlier):
        return simulateTo(self.machine, self.input, earlier) == self.simulation.snapshot()


def runWithOracle(machine, input=(), budget=10000, historyCap=None):
    """ Halted, LoopDetected or BudgetExceeded for at most <budget> executed steps. """
    if budget < 0:
        raise ValidationError("budget must be >= 0, got {}".format(budget))
    oracle = OracleRun(machine, input, historyCap)
    outcome = oracle.advance(budget)
    if outcome is None:
        outcome = BudgetExceeded(oracle.steps, oracle.simulation.snapshot())
    return outcome


def replayVerify(machine, input, outcome):
    """
    Re-simulate without the oracle and confirm <outcome>.

    Halted must halt at exactly the reported step with the reported final description;
    LoopDetected must satisfy ID(firstIndex) == ID(firstIndex + period) by direct
    recomputation; BudgetExceeded must run the reported steps without halting.
    """
    input = tuple(input)
    if isinstance(outcome, Halted):
        final = simulateTo(machine, input, outcome.steps)
        if final is None or final != outcome.finalID:
            return False
        simulation = Simulation(machine, final)
        return simulation.isHalted()
    if isinstance(outcome, LoopDetected):
        if outcome.period < 1 or outcome.firstIndex < 0:
            return False
        first = simulateTo(machine, input, outcome.firstIndex)
        if first is None:
            return False
        simulation = Simulation(machine, first)
        while simulation.steps < outcome.period:
            if not simulation.advance():
                return False
        return simulation.snapshot() == first
    if isinstance(outcome, BudgetExceeded):
        last = simulateTo(machine, input, outcome.steps)
        return last is not None and last == outcome.lastID
    return False
