"""
Optional threaded trio. Each searcher runs on its own thread in quantum-sized slices
and the first success stops the others. Which searcher gets there first depends on the
thread schedule, so the result is only reported as canonical when a canonical re-run
produces the same verdict.
"""
from dataclasses import dataclass
import logging
from threading import Event, Lock, Thread
from typing import Any

from common.trio.scheduler import LoopSearch, ProofSearch, ZeroSearch, runTrio
from common.trio.task import Exhausted, Found, Proved, SelfTerminated


@dataclass(frozen=True)
class ParallelTrioResult:
    verdict: Any
    canonical: bool
    canonicalVerdict: Any = None


def sameVerdict(a, b):
    """ Equal up to round accounting. """
    if type(a) is not type(b):
        return False
    if isinstance(a, Found):
        return a.k == b.k
    if isinstance(a, SelfTerminated):
        return a.loop == b.loop
    if isinstance(a, Proved):
        return a.cert == b.cert
    return isinstance(a, Exhausted)


def runTrioParallel(task, verify=True, loggerName="root"):
    logger = logging.getLogger(loggerName)
    stop = Event()
    lock = Lock()
    winner = []

    def work(searcher):
        for _ in range(task.budget):
            if stop.is_set() or searcher.retired:
                return
            verdict = searcher.grant(task.quantum)
            if verdict is not None:
                with lock:
                    if not winner:
                        winner.append(verdict)
                        stop.set()
                return

    threads = [Thread(target=work, args=(s,), name="{}-{}".format(task.name, s.name))
               for s in (ZeroSearch(task), LoopSearch(task), ProofSearch(task))]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    verdict = winner[0] if winner else Exhausted(task.budget)
    if not verify:
        logger.warning("{}: parallel verdict {} is not canonical".format(task.name, verdict))
        return ParallelTrioResult(verdict, canonical=False)

    canonical = runTrio(task, loggerName)
    if sameVerdict(verdict, canonical):
        return ParallelTrioResult(canonical, canonical=True, canonicalVerdict=canonical)
    logger.warning("{}: parallel verdict {} differs from canonical {}".format(task.name, verdict, canonical))
    return ParallelTrioResult(verdict, canonical=False, canonicalVerdict=canonical)
