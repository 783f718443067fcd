from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Halted:
    """ The machine halted after <steps> steps (no transition applied to finalID). """
    steps: int
    finalID: Any

    kind = "halted"


@dataclass(frozen=True)
class LoopDetected:
    """
    The description at step firstIndex + period equals the one at step firstIndex.

    By determinism the run repeats forever from there, so the machine never halts. This
    is the self-termination symbol of the looping oracle.
    """
    firstIndex: int
    period: int

    kind = "loop"

    @property
    def steps(self):
        return self.firstIndex + self.period


@dataclass(frozen=True)
class BudgetExceeded:
    steps: int
    lastID: Any
    historyCapped: bool = False

    kind = "budget"


OUTCOME_KINDS = (Halted.kind, LoopDetected.kind, BudgetExceeded.kind)
