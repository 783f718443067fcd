from dataclasses import dataclass, field
from enum import IntEnum
import string

from common.machines.outcomes import BudgetExceeded, Halted
from errors import ValidationError

BLANK = 0


class Move(IntEnum):
    """ Head movement; the value is the head displacement. """
    LEFT = -1
    RIGHT = 1

    @property
    def letter(self):
        return "L" if self is Move.LEFT else "R"

    @classmethod
    def fromLetter(cls, letter):
        try:
            return {"L": cls.LEFT, "R": cls.RIGHT}[letter.upper()]
        except KeyError:
            raise ValidationError("unknown move {!r}, expected L or R".format(letter))


@dataclass(frozen=True)
class Transition:
    write: int
    move: Move
    nextState: int


@dataclass(frozen=True)
class Machine:
    """
    Deterministic single-tape Turing machine.

    <transitions> maps (state, scannedSymbol) to a Transition; a missing entry means the
    machine halts in that configuration. It may be passed as a dict, or as an iterable of
    (state, symbol, write, move, nextState) tuples, and is stored as a sorted tuple of
    ((state, symbol), Transition) pairs so that machines compare and hash by value.
    """
    stateCount: int
    alphabetSize: int
    transitions: tuple = ()
    startState: int = 0
    _table: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.stateCount, int) or self.stateCount < 1:
            raise ValidationError("stateCount must be a positive integer, got {!r}".format(self.stateCount))
        if not isinstance(self.alphabetSize, int) or self.alphabetSize < 1:
            raise ValidationError(
                "alphabetSize must be a positive integer, got {!r}".format(self.alphabetSize))
        if not 0 <= self.startState < self.stateCount:
            raise ValidationError("startState {} out of range".format(self.startState))

        entries = {}
        for key, transition in _iterTransitions(self.transitions):
            if key in entries:
                raise ValidationError("duplicate transition for (state, symbol) = {}".format(key))
            state, symbol = key
            if not 0 <= state < self.stateCount:
                raise ValidationError("state {} out of range in transition {}".format(state, key))
            if not 0 <= symbol < self.alphabetSize:
                raise ValidationError("symbol {} out of range in transition {}".format(symbol, key))
            if not 0 <= transition.write < self.alphabetSize:
                raise ValidationError("write symbol {} out of range in transition {}".format(
                    transition.write, key))
            if not 0 <= transition.nextState < self.stateCount:
                raise ValidationError("next state {} out of range in transition {}".format(
                    transition.nextState, key))
            entries[key] = transition
        object.__setattr__(self, "transitions", tuple(sorted(entries.items())))

        # Flat lookup table indexed by state * alphabetSize + symbol, used by the simulator.
        #
        table = [None] * (self.stateCount * self.alphabetSize)
        for (state, symbol), transition in self.transitions:
            table[state * self.alphabetSize + symbol] = (
                transition.write, int(transition.move), transition.nextState)
        object.__setattr__(self, "_table", table)

    def transition(self, state, symbol):
        """ Return the Transition for (state, symbol), or None if the machine halts there. """
        entry = self._table[state * self.alphabetSize + symbol]
        if entry is None:
            return None
        return Transition(entry[0], Move(entry[1]), entry[2])

    def code(self):
        """
        Canonical transition-table encoding, e.g. '1RB---_1LA0RB'.

        States are letters and symbols digits when the class is small enough; otherwise
        each entry is 'write:move:next' (or '-') separated by '.'.
        """
        letters = self.stateCount <= 26 and self.alphabetSize <= 10
        rows = []
        for state in range(self.stateCount):
            cells = []
            for symbol in range(self.alphabetSize):
                entry = self._table[state * self.alphabetSize + symbol]
                if letters:
                    cells.append("---" if entry is None else "{}{}{}".format(
                        entry[0], Move(entry[1]).letter, string.ascii_uppercase[entry[2]]))
                else:
                    cells.append("-" if entry is None else "{}:{}:{}".format(
                        entry[0], Move(entry[1]).letter, entry[2]))
            rows.append(("" if letters else ".").join(cells))
        return "_".join(rows)

    @classmethod
    def fromCode(cls, code, startState=0):
        """ Inverse of code(). """
        rows = code.split("_")
        transitions = []
        alphabetSize = None
        for state, row in enumerate(rows):
            if ":" in row or row == "-" or "." in row:
                cells = row.split(".")
                parsed = [None if c == "-" else tuple(c.split(":")) for c in cells]
            else:
                if len(row) % 3:
                    raise ValidationError("not a machine code: {!r}".format(code))
                cells = [row[i:i + 3] for i in range(0, len(row), 3)]
                parsed = [None if c == "---" else (c[0], c[1], string.ascii_uppercase.index(c[2]))
                          for c in cells]
            if alphabetSize is None:
                alphabetSize = len(parsed)
            elif alphabetSize != len(parsed):
                raise ValidationError("ragged machine code: {!r}".format(code))
            for symbol, entry in enumerate(parsed):
                if entry is not None:
                    transitions.append(
                        (state, symbol, int(entry[0]), Move.fromLetter(entry[1]), int(entry[2])))
        return cls(len(rows), alphabetSize, transitions, startState)


def _iterTransitions(transitions):
    if isinstance(transitions, dict):
        items = transitions.items()
    else:
        items = transitions
    for item in items:
        if len(item) == 2:
            key, value = item
            if not isinstance(value, Transition):
                value = Transition(value[0], Move(value[1]), value[2])
            yield tuple(key), Transition(value.write, Move(value.move), value.nextState)
        elif len(item) == 5:
            state, symbol, write, move, nextState = item
            yield (state, symbol), Transition(write, Move(move), nextState)
        else:
            raise ValidationError("malformed transition entry {!r}".format(item))


@dataclass(frozen=True)
class InstantaneousDescription:
    """
    Canonical snapshot of state, head position and tape.

    <tape> is a sorted tuple of (position, symbol) pairs holding non-blank cells only, so
    two descriptions are equal iff they describe the same configuration.
    """
    state: int
    headPosition: int
    tape: tuple = ()

    def __post_init__(self):
        cells = self.tape.items() if isinstance(self.tape, dict) else self.tape
        object.__setattr__(self, "tape", tuple(sorted((p, s) for p, s in cells if s != BLANK)))

    @property
    def tapeMap(self):
        return dict(self.tape)

    def read(self, position):
        return self.tapeMap.get(position, BLANK)

    @property
    def nonBlankCount(self):
        return len(self.tape)

    def render(self, window=None):
        """ Render the tape around the head, marking the scanned cell with brackets. """
        if window is None:
            positions = [p for p, _ in self.tape] + [self.headPosition]
            lo, hi = min(positions), max(positions)
        else:
            lo, hi = window
        cells = self.tapeMap
        out = []
        for position in range(lo, hi + 1):
            symbol = str(cells.get(position, BLANK))
            out.append("[{}]".format(symbol) if position == self.headPosition else symbol)
        return "q{} {}".format(self.state, " ".join(out))


ID = InstantaneousDescription


@dataclass(frozen=True)
class Continue:
    nextID: InstantaneousDescription


@dataclass(frozen=True)
class Halt:
    pass


def initialID(machine, input=()):
    """ Head at cell 0, <input> written at cells 0..len-1, machine in its start state. """
    cells = []
    for position, symbol in enumerate(input):
        if not isinstance(symbol, int) or not 0 <= symbol < machine.alphabetSize:
            raise ValidationError("input symbol {!r} at position {} out of range".format(
                symbol, position))
        cells.append((position, symbol))
    return InstantaneousDescription(machine.startState, 0, tuple(cells))


def step(machine, id):
    """ One deterministic step: Continue(successor) or Halt() if no transition applies. """
    scanned = id.read(id.headPosition)
    entry = machine._table[id.state * machine.alphabetSize + scanned]
    if entry is None:
        return Halt()
    write, move, nextState = entry
    cells = id.tapeMap
    if write == BLANK:
        cells.pop(id.headPosition, None)
    else:
        cells[id.headPosition] = write
    return Continue(InstantaneousDescription(nextState, id.headPosition + move, tuple(cells.items())))


class Simulation():
    """
    Mutable simulator used on hot paths (run, oracle, enumeration).

    Keeps an order-independent tape key, the XOR of hash((position, symbol)) over the
    non-blank cells, updated in O(1) per step; fingerprint() folds in state and head.
    Fingerprints are only candidates for equality, never proof of it.
    """
    __slots__ = ("machine", "table", "alphabetSize", "tape", "head", "state", "steps", "tapeKey")

    def __init__(self, machine, id):
        self.machine = machine
        self.table = machine._table
        self.alphabetSize = machine.alphabetSize
        self.tape = dict(id.tape)
        self.head = id.headPosition
        self.state = id.state
        self.steps = 0
        self.tapeKey = 0
        for cell in id.tape:
            self.tapeKey ^= hash(cell)

    def advance(self):
        """ Execute one step; return False (and change nothing) if the machine halts. """
        tape = self.tape
        head = self.head
        scanned = tape.get(head, BLANK)
        entry = self.table[self.state * self.alphabetSize + scanned]
        if entry is None:
            return False
        write, move, self.state = entry
        if write != scanned:
            if scanned != BLANK:
                self.tapeKey ^= hash((head, scanned))
            if write == BLANK:
                del tape[head]
            else:
                tape[head] = write
                self.tapeKey ^= hash((head, write))
        self.head = head + move
        self.steps += 1
        return True

    def isHalted(self):
        return self.table[self.state * self.alphabetSize + self.tape.get(self.head, BLANK)] is None

    def fingerprint(self):
        return hash((self.state, self.head, self.tapeKey))

    def snapshot(self):
        return InstantaneousDescription(self.state, self.head, tuple(self.tape.items()))

    @property
    def nonBlankCount(self):
        return len(self.tape)


def simulateTo(machine, input, steps):
    """ ID after exactly <steps> steps, or None if the machine halts earlier. """
    simulation = Simulation(machine, initialID(machine, input))
    while simulation.steps < steps:
        if not simulation.advance():
            return None
    return simulation.snapshot()


def run(machine, input=(), budget=10000):
    """ Plain simulation without the oracle: Halted(steps, finalID) or BudgetExceeded(steps, lastID). """
    if budget < 0:
        raise ValidationError("budget must be >= 0, got {}".format(budget))
    simulation = Simulation(machine, initialID(machine, input))
    while True:
        if simulation.steps == budget:
            if simulation.isHalted():
                return Halted(simulation.steps, simulation.snapshot())
            return BudgetExceeded(simulation.steps, simulation.snapshot())
        if not simulation.advance():
            return Halted(simulation.steps, simulation.snapshot())
