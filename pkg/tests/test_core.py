import pytest
from hypothesis import given, strategies as st

from common.machines.core import (ID, Continue, Halt, Machine, Move, Simulation, Transition,
                                  initialID, run, step)
from common.machines.families import emptyMachine, pingPong, rightRunner
from common.machines.outcomes import BudgetExceeded, Halted
from errors import ValidationError
from strategies import idsFor, inputsFor, machines


class TestMachine:

    def test_transitions_accept_dict_and_tuples(self):
        fromTuples = Machine(2, 2, [(0, 0, 1, Move.RIGHT, 1)])
        fromDict = Machine(2, 2, {(0, 0): Transition(1, Move.RIGHT, 1)})
        assert fromTuples == fromDict
        assert hash(fromTuples) == hash(fromDict)

    def test_missing_entry_halts(self):
        machine = pingPong()
        assert machine.transition(0, 0) == Transition(0, Move.RIGHT, 1)
        assert machine.transition(0, 1) is None

    @pytest.mark.parametrize("args", [
        (0, 2, ()),
        (1, 0, ()),
        (1, 2, [(0, 2, 0, Move.RIGHT, 0)]),
        (1, 2, [(0, 0, 2, Move.RIGHT, 0)]),
        (1, 2, [(0, 0, 0, Move.RIGHT, 1)]),
        (1, 2, [(0, 0, 0, Move.RIGHT, 0), (0, 0, 1, Move.LEFT, 0)]),
    ])
    def test_invalid_machines_rejected(self, args):
        with pytest.raises(ValidationError):
            Machine(*args)

    def test_start_state_out_of_range(self):
        with pytest.raises(ValidationError):
            Machine(2, 2, (), startState=2)

    def test_code(self):
        assert pingPong().code() == "0RB---_0LA---"
        assert rightRunner().code() == "1RA---"

    def test_numeric_code_for_large_alphabets(self):
        machine = Machine(1, 11, [(0, 10, 3, Move.LEFT, 0)])
        assert machine.code().split(".")[-1] == "3:L:0"
        assert Machine.fromCode(machine.code()) == machine

    @given(machines(maxStates=4, maxSymbols=3))
    def test_code_round_trip(self, machine):
        assert Machine.fromCode(machine.code()) == machine


class TestInstantaneousDescription:

    def test_blanks_are_stripped(self):
        assert ID(0, 0, {2: 1, 1: 0}) == ID(0, 0, ((2, 1),))
        assert ID(0, 0, ((3, 1), (1, 1))).tape == ((1, 1), (3, 1))

    def test_read_and_render(self):
        id = ID(1, 1, ((0, 1), (2, 1)))
        assert id.read(0) == 1
        assert id.read(1) == 0
        assert id.nonBlankCount == 2
        assert id.render() == "q1 1 [0] 1"

    def test_initial_id(self):
        assert initialID(pingPong(), (1, 0, 1)) == ID(0, 0, ((0, 1), (2, 1)))

    def test_initial_id_rejects_out_of_range_input(self):
        with pytest.raises(ValidationError):
            initialID(pingPong(), (2,))


class TestStep:

    def test_continue(self):
        assert step(pingPong(), initialID(pingPong())) == Continue(ID(1, 1))

    def test_halt(self):
        assert step(emptyMachine(), initialID(emptyMachine())) == Halt()

    def test_write_blank_clears_cell(self):
        machine = Machine(1, 2, [(0, 1, 0, Move.LEFT, 0)])
        assert step(machine, initialID(machine, (1,))) == Continue(ID(0, -1))

    @given(st.data())
    def test_simulation_agrees_with_step(self, data):
        machine = data.draw(machines())
        input = data.draw(inputsFor(machine))
        id = initialID(machine, input)
        simulation = Simulation(machine, id)
        for _ in range(50):
            result = step(machine, id)
            advanced = simulation.advance()
            if isinstance(result, Halt):
                assert not advanced
                assert simulation.isHalted()
                break
            assert advanced
            id = result.nextID
            assert simulation.snapshot() == id


class TestRun:

    def test_empty_machine_halts_at_zero(self):
        assert run(emptyMachine(), (), 10) == Halted(0, ID(0, 0))

    def test_halt_at_budget_is_halted(self):
        assert run(emptyMachine(), (), 0) == Halted(0, ID(0, 0))

    def test_right_runner_exceeds_budget(self):
        outcome = run(rightRunner(), (), 100)
        assert isinstance(outcome, BudgetExceeded)
        assert outcome.steps == 100
        assert outcome.lastID.nonBlankCount == 100
        assert outcome.lastID.headPosition == 100

    def test_halting_on_input(self):
        machine = Machine(1, 2, [(0, 0, 1, Move.RIGHT, 0)])
        assert run(machine, (0, 1), 10) == Halted(1, ID(0, 1, ((0, 1), (1, 1))))

    def test_negative_budget(self):
        with pytest.raises(ValidationError):
            run(pingPong(), (), -1)


class TestStepProperties:

    @given(st.data())
    def test_deterministic(self, data):
        machine = data.draw(machines())
        id = data.draw(idsFor(machine))
        assert step(machine, id) == step(machine, ID(id.state, id.headPosition, id.tapeMap))

    @given(st.data())
    def test_successor_is_canonical(self, data):
        machine = data.draw(machines())
        id = data.draw(idsFor(machine))
        result = step(machine, id)
        if isinstance(result, Continue):
            tape = result.nextID.tape
            assert all(symbol != 0 for _, symbol in tape)
            assert list(tape) == sorted(tape)
            assert len({p for p, _ in tape}) == len(tape)

    @given(st.data())
    def test_only_the_scanned_cell_changes(self, data):
        machine = data.draw(machines())
        id = data.draw(idsFor(machine))
        result = step(machine, id)
        transition = machine.transition(id.state, id.read(id.headPosition))
        if transition is None:
            assert result == Halt()
            return
        nextID = result.nextID
        assert nextID.headPosition == id.headPosition + int(transition.move)
        assert nextID.state == transition.nextState
        assert nextID.read(id.headPosition) == transition.write
        positions = {p for p, _ in id.tape} | {p for p, _ in nextID.tape}
        for position in positions - {id.headPosition}:
            assert nextID.read(position) == id.read(position)


class TestRunProperties:

    @given(st.data())
    def test_larger_budget_replays_the_same_halt(self, data):
        machine = data.draw(machines())
        input = data.draw(inputsFor(machine))
        budget = data.draw(st.integers(0, 30))
        extra = data.draw(st.integers(0, 30))
        outcome = run(machine, input, budget)
        if isinstance(outcome, Halted):
            assert run(machine, input, budget + extra) == outcome
        else:
            assert outcome.steps == budget
            longer = run(machine, input, budget + extra)
            assert longer.steps >= budget

    def test_right_runner_ids_are_pairwise_distinct(self):
        machine = rightRunner()
        ids = [initialID(machine)]
        for _ in range(5):
            ids.append(step(machine, ids[-1]).nextID)
        assert len(set(ids)) == 6
        assert [id.nonBlankCount for id in ids] == [0, 1, 2, 3, 4, 5]

    def test_ping_pong_without_oracle_exceeds_budget(self):
        assert run(pingPong(), (), 10) == BudgetExceeded(10, ID(0, 0))
