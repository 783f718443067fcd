from dataclasses import dataclass
import logging
from typing import Any, Optional

from common.machines.oracle import replayVerify
from common.proofs.certificate import Statement
from common.recfun.evaluator import auditMu
from common.recfun.reference import oracleEvaluate
from common.trio.parallel import runTrioParallel
from common.trio.scheduler import Trio, extendVerdict
from common.trio.task import Exhausted, Found, Proved, SelfTerminated

AUDIT_FUEL = 10 ** 5


@dataclass(frozen=True)
class VerdictRecord:
    """ Verdict of one trio task with its F' value and the independent audit result. """
    name: str
    verdict: Any
    fPrime: Any
    audit: Optional[bool]
    granted: dict
    detail: str = ""
    task: Any = None

    @property
    def audited(self):
        """ Exhausted verdicts carry nothing to audit. """
        return self.audit is not None


def auditVerdict(task, verdict, auditFuel=AUDIT_FUEL):
    """
    Re-establish <verdict> without trusting the scheduler: mu-minimality by rescanning
    y < k with the reference evaluator, loops by replay, certificates by re-checking.
    Returns (audit, detail); audit is None for Exhausted.
    """
    if isinstance(verdict, Found):
        ok = auditMu(task.gBody, task.fixedArgs, verdict.k, auditFuel, evaluator=oracleEvaluate)
        return ok, "rescanned y < {}".format(verdict.k)
    if isinstance(verdict, SelfTerminated):
        ok = replayVerify(task.t2Machine, task.t2Input, verdict.loop)
        return ok, "replayed loop at {} period {}".format(verdict.loop.firstIndex, verdict.loop.period)
    if isinstance(verdict, Proved):
        ok = task.proofSystem.checkCertificate(verdict.cert, Statement(task.gBody, task.fixedArgs))
        return ok, "rechecked {}".format(verdict.cert.render())
    if isinstance(verdict, Exhausted):
        return None, "no verdict after {} rounds".format(verdict.rounds)
    return False, "unknown verdict {!r}".format(verdict)


def classifyCorpusEntry(task, auditFuel=AUDIT_FUEL, loggerName="root", parallel=False):
    """
    Run the trio on <task> and audit the verdict. With <parallel> the threaded trio is
    used; a verdict the canonical re-run does not reproduce fails the audit.
    """
    logger = logging.getLogger(loggerName)
    result = None
    if parallel:
        result = runTrioParallel(task, verify=True, loggerName=loggerName)
        verdict, granted = result.verdict, {}
    else:
        trio = Trio(task, loggerName)
        verdict, granted = trio.run(), trio.granted
    audit, detail = auditVerdict(task, verdict, auditFuel)
    if result is not None and not result.canonical:
        audit, detail = False, "not canonical: re-run gave {}".format(result.canonicalVerdict)
    if audit is False:
        logger.error("{}: audit failed for {} ({})".format(task.name, verdict, detail))
    return VerdictRecord(task.name, verdict, extendVerdict(verdict), audit, granted, detail, task)
