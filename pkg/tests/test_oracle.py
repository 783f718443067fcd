import pytest
from hypothesis import given, strategies as st

from common.machines.core import ID, Machine, Move, Simulation, initialID, run, simulateTo
from common.machines.families import emptyMachine, pingPong, rightRunner
from common.machines.oracle import History, OracleRun, replayVerify, runWithOracle
from common.machines.outcomes import BudgetExceeded, Halted, LoopDetected
from errors import ValidationError
from strategies import inputsFor, machines


class TestRunWithOracle:

    def test_ping_pong_loops(self):
        assert runWithOracle(pingPong(), (), 100) == LoopDetected(0, 2)

    def test_ping_pong_loop_steps(self):
        assert runWithOracle(pingPong(), (), 100).steps == 2

    def test_loop_needs_enough_budget(self):
        outcome = runWithOracle(pingPong(), (), 1)
        assert isinstance(outcome, BudgetExceeded)
        assert outcome.steps == 1

    def test_right_runner_never_loops(self):
        outcome = runWithOracle(rightRunner(), (), 1000)
        assert isinstance(outcome, BudgetExceeded)
        assert outcome.steps == 1000
        assert not outcome.historyCapped

    def test_empty_machine(self):
        assert runWithOracle(emptyMachine(), (), 0) == Halted(0, ID(0, 0))

    def test_history_cap(self):
        outcome = runWithOracle(rightRunner(), (), 1000, historyCap=10)
        assert isinstance(outcome, BudgetExceeded)
        assert outcome.historyCapped
        assert outcome.steps == 10

    def test_loop_after_prefix(self):
        # Walks right over the input, then bounces on the first blank.
        machine = Machine(3, 2, [
            (0, 1, 1, Move.RIGHT, 0),
            (0, 0, 0, Move.RIGHT, 1),
            (1, 0, 0, Move.LEFT, 2),
            (2, 0, 0, Move.RIGHT, 1),
        ])
        outcome = runWithOracle(machine, (1, 1, 1), 100)
        assert outcome == LoopDetected(4, 2)
        assert replayVerify(machine, (1, 1, 1), outcome)

    def test_negative_budget(self):
        with pytest.raises(ValidationError):
            runWithOracle(pingPong(), (), -1)

    @given(st.data())
    def test_agrees_with_plain_run(self, data):
        machine = data.draw(machines())
        input = data.draw(inputsFor(machine))
        outcome = runWithOracle(machine, input, 200)
        plain = run(machine, input, 200)
        if isinstance(outcome, LoopDetected):
            assert isinstance(plain, BudgetExceeded)
            assert simulateTo(machine, input, outcome.firstIndex) == \
                simulateTo(machine, input, outcome.firstIndex + outcome.period)
        else:
            assert outcome == plain

    @given(st.data())
    def test_verdicts_replay(self, data):
        machine = data.draw(machines())
        input = data.draw(inputsFor(machine))
        assert replayVerify(machine, input, runWithOracle(machine, input, 200))

    @given(st.data())
    def test_loop_is_least_repetition(self, data):
        machine = data.draw(machines(maxStates=2))
        outcome = runWithOracle(machine, (), 200)
        if isinstance(outcome, LoopDetected):
            seen = [simulateTo(machine, (), i) for i in range(outcome.steps)]
            assert len(set(seen)) == len(seen)


class TestOracleRun:

    @given(st.data())
    def test_chunked_advance_matches_one_shot(self, data):
        machine = data.draw(machines())
        chunks = data.draw(st.lists(st.integers(1, 7), min_size=1, max_size=40))
        oracle = OracleRun(machine)
        outcome = None
        for units in chunks:
            outcome = oracle.advance(units)
            if outcome is not None:
                break
        total = sum(chunks)
        if outcome is None:
            outcome = BudgetExceeded(oracle.steps, oracle.simulation.snapshot())
            assert oracle.steps == total
        assert outcome == runWithOracle(machine, (), min(total, oracle.steps))

    def test_history_holds_one_entry_per_step(self):
        oracle = OracleRun(rightRunner())
        assert oracle.advance(50) is None
        assert len(oracle.history) == 51

    @given(st.data())
    def test_history_grows_with_steps(self, data):
        machine = data.draw(machines())
        input = data.draw(inputsFor(machine))
        oracle = OracleRun(machine, input)
        if oracle.advance(data.draw(st.integers(0, 60))) is None:
            assert len(oracle.history) == oracle.steps + 1

    def test_halt_reported_without_units(self):
        oracle = OracleRun(emptyMachine())
        assert oracle.advance(0) == Halted(0, ID(0, 0))

    def test_outcome_is_sticky(self):
        oracle = OracleRun(pingPong())
        first = oracle.advance(10)
        assert oracle.advance(10) is first
        assert oracle.steps == 2

    def test_fingerprint_collisions_are_confirmed(self, monkeypatch):
        monkeypatch.setattr(Simulation, "fingerprint", lambda self: 0)
        oracle = OracleRun(rightRunner())
        outcome = oracle.advance(20)
        assert outcome is None
        # Step s compares against all s earlier descriptions.
        assert oracle.falseHits == sum(range(1, 21))

    def test_collision_then_real_loop(self, monkeypatch):
        monkeypatch.setattr(Simulation, "fingerprint", lambda self: 0)
        oracle = OracleRun(pingPong())
        assert oracle.advance(10) == LoopDetected(0, 2)
        assert oracle.falseHits == 1


class TestHistory:

    def test_bare_and_collided_entries(self):
        history = History()
        history.record(7, 0)
        assert history.candidates(7) == (0,)
        history.record(7, 3)
        assert list(history.candidates(7)) == [0, 3]
        assert history.candidates(8) == ()
        assert len(history) == 2

    def test_full(self):
        history = History(cap=1)
        assert not history.full
        history.record(1, 0)
        assert history.full


class TestReplayVerify:

    @pytest.mark.parametrize("outcome", [
        LoopDetected(0, 1),
        LoopDetected(0, 0),
        LoopDetected(-1, 2),
        Halted(2, ID(0, 0)),
        BudgetExceeded(2, ID(1, 1)),
    ])
    def test_forged_outcomes_rejected(self, outcome):
        assert not replayVerify(pingPong(), (), outcome)

    def test_halted_before_end(self):
        machine = Machine(1, 2, [(0, 0, 1, Move.RIGHT, 0)])
        assert replayVerify(machine, (0, 1), Halted(1, ID(0, 1, ((0, 1), (1, 1)))))
        assert not replayVerify(rightRunner(), (), Halted(5, ID(0, 5)))

    def test_budget_exceeded(self):
        outcome = runWithOracle(rightRunner(), (), 50)
        assert replayVerify(rightRunner(), (), outcome)

    def test_unknown_outcome(self):
        assert not replayVerify(pingPong(), (), "loop")
