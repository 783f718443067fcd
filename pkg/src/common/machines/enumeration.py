from dataclasses import dataclass
import itertools
import logging

from common.machines.core import Machine, Move
from errors import ClassTooLarge, ValidationError

ENUMERATION_LIMIT = 10 ** 7


@dataclass(frozen=True)
class MachineClass:
    """ Every partial transition table over <stateCount> states and <alphabetSize> symbols. """
    stateCount: int
    alphabetSize: int
    limit: int = ENUMERATION_LIMIT

    def __post_init__(self):
        if self.stateCount < 1 or self.alphabetSize < 1:
            raise ValidationError("class needs at least one state and one symbol, got ({}, {})".format(
                self.stateCount, self.alphabetSize))

    @property
    def entryOptions(self):
        """ Choices for one (state, symbol) entry: halt, then each (write, move, next). """
        return 2 * self.stateCount * self.alphabetSize + 1

    @property
    def size(self):
        return self.entryOptions ** (self.stateCount * self.alphabetSize)


def enumerateClass(machineClass, loggerName="root"):
    """
    Yield every machine of <machineClass> in canonical order.

    Entries are taken in (state, symbol) order; each ranges over 'halt' followed by
    (write, move, next) with write slowest and L before R.
    """
    logger = logging.getLogger(loggerName)
    if machineClass.size > machineClass.limit:
        raise ClassTooLarge(machineClass.size, machineClass.limit)
    logger.debug("Enumerating {} machines of class ({} states, {} symbols)".format(
        machineClass.size, machineClass.stateCount, machineClass.alphabetSize))

    options = [None] + list(itertools.product(
        range(machineClass.alphabetSize), (Move.LEFT, Move.RIGHT), range(machineClass.stateCount)))
    keys = list(itertools.product(range(machineClass.stateCount), range(machineClass.alphabetSize)))
    return _generate(machineClass, keys, options)


def _generate(machineClass, keys, options):
    for choice in itertools.product(options, repeat=len(keys)):
        transitions = [key + entry for key, entry in zip(keys, choice) if entry is not None]
        yield Machine(machineClass.stateCount, machineClass.alphabetSize, transitions)
