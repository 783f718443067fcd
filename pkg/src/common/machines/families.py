""" Named machines and generated machine families used by experiments and tests. """
import random

from common.machines.core import Machine, Move


def emptyMachine(stateCount=1, alphabetSize=1):
    """ No transitions at all: halts at step 0 on every input. """
    return Machine(stateCount, alphabetSize, ())


def pingPong():
    """ q0 -blank-> (blank, R, q1); q1 -blank-> (blank, L, q0). Its ID repeats every 2 steps. """
    return Machine(2, 2, [
        (0, 0, 0, Move.RIGHT, 1),
        (1, 0, 0, Move.LEFT, 0),
    ])


def rightRunner():
    """ q0 -blank-> (1, R, q0). Never halts and never repeats an ID. """
    return Machine(1, 2, [(0, 0, 1, Move.RIGHT, 0)])


def confinedMachine(rng, cells, phases=1, alphabetSize=2, haltProbability=0.1):
    """
    Random machine whose head provably stays in cells 0..cells-1 on a blank tape.

    State q is pinned to cell q % cells; every transition moves towards an in-range
    neighbour cell and enters a state pinned to that cell. Since the head starts at 0
    in state 0, the head position always equals the pinned cell of the current state.
    """
    if cells < 2:
        raise ValueError("confined machines need at least 2 cells")
    stateCount = cells * phases
    pinned = {cell: [q for q in range(stateCount) if q % cells == cell] for cell in range(cells)}
    transitions = []
    for state in range(stateCount):
        cell = state % cells
        for symbol in range(alphabetSize):
            if rng.random() < haltProbability:
                continue
            if cell == 0:
                move = Move.RIGHT
            elif cell == cells - 1:
                move = Move.LEFT
            else:
                move = rng.choice((Move.LEFT, Move.RIGHT))
            nextState = rng.choice(pinned[cell + int(move)])
            transitions.append((state, symbol, rng.randrange(alphabetSize), move, nextState))
    return Machine(stateCount, alphabetSize, transitions)


def confinedFamily(count=50, seed=0, maxCells=3, maxPhases=2, alphabetSize=2):
    """ Deterministic list of (machine, cells) pairs with cells in 2..maxCells. """
    rng = random.Random(seed)
    family = []
    for _ in range(count):
        cells = rng.randint(2, maxCells)
        phases = rng.randint(1, maxPhases)
        family.append((confinedMachine(rng, cells, phases, alphabetSize), cells))
    return family


def confinementBound(machine, cells):
    """ Upper bound on distinct reachable IDs of a machine confined to <cells> cells. """
    return machine.stateCount * cells * machine.alphabetSize ** cells
