from dataclasses import dataclass, field
from typing import Optional, Tuple

from common.machines.core import Machine, initialID
from common.machines.outcomes import LoopDetected
from common.proofs.certificate import Certificate
from common.proofs.system import DEFAULT_PROOF_SYSTEM, ProofSystem
from common.recfun.expr import RecExpr, arity
from errors import ArityMismatch, ValidationError


@dataclass(frozen=True)
class TrioTask:
    """
    One instance of the trio: search for the least y with gBody(fixedArgs, y) = 0 (T1),
    run <t2Machine> under the looping oracle (T2), and search for a certificate that
    gBody(fixedArgs, y) is never 0 (T3). Each gets <quantum> units per round, for at
    most <budget> rounds.
    """
    gBody: RecExpr
    fixedArgs: Tuple[int, ...]
    t2Machine: Machine
    t2Input: Tuple[int, ...] = ()
    quantum: int = 100
    budget: int = 1000
    maxCertSize: int = 3
    historyCap: Optional[int] = None
    name: str = "task"
    proofSystem: ProofSystem = field(default=DEFAULT_PROOF_SYSTEM, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "fixedArgs", tuple(self.fixedArgs))
        object.__setattr__(self, "t2Input", tuple(self.t2Input))
        try:
            expected = arity(self.gBody)
        except ArityMismatch as e:
            raise ValidationError("gBody: {}".format(e))
        if expected != len(self.fixedArgs) + 1:
            raise ValidationError("gBody has arity {} but {} fixed arguments were given".format(
                expected, len(self.fixedArgs)))
        if any(not isinstance(a, int) or a < 0 for a in self.fixedArgs):
            raise ValidationError("fixed arguments must be natural numbers: {}".format(self.fixedArgs))
        if not isinstance(self.t2Machine, Machine):
            raise ValidationError("t2Machine must be a Machine")
        initialID(self.t2Machine, self.t2Input)
        if self.quantum < 1:
            raise ValidationError("quantum must be >= 1, got {}".format(self.quantum))
        if self.budget < 0:
            raise ValidationError("budget must be >= 0, got {}".format(self.budget))
        if self.maxCertSize < 0:
            raise ValidationError("maxCertSize must be >= 0, got {}".format(self.maxCertSize))
        if self.historyCap is not None and (
                not isinstance(self.historyCap, int) or isinstance(self.historyCap, bool)
                or self.historyCap < 1):
            raise ValidationError("historyCap must be None or an integer >= 1, got {!r}".format(
                self.historyCap))


@dataclass(frozen=True)
class Found:
    """ T1 won: k is the least zero of G; <steps> is the fuel T1 spent. """
    k: int
    steps: int
    rounds: int = 0

    kind = "found"


@dataclass(frozen=True)
class SelfTerminated:
    """ T2 won: the oracle saw T2's machine repeat an instantaneous description. """
    loop: LoopDetected
    rounds: int = 0

    kind = "self_terminated"


@dataclass(frozen=True)
class Proved:
    """ T3 won: <cert> checks for the statement that G is never 0. """
    cert: Certificate
    rounds: int = 0

    kind = "proved"


@dataclass(frozen=True)
class Exhausted:
    """ No searcher succeeded within the round budget. """
    rounds: int

    kind = "exhausted"


VERDICT_KINDS = (Found.kind, SelfTerminated.kind, Proved.kind, Exhausted.kind)


class _Undetermined():
    """ F' has no value: the trio was exhausted. """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undetermined"

    __str__ = __repr__

    def __reduce__(self):
        return (_Undetermined, ())


Undetermined = _Undetermined()
