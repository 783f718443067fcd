import pytest
from hypothesis import given, strategies as st

from common.recfun.evaluator import Evaluation, auditMu, charValue, evaluate
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero, arity, containsMu
from common.recfun.prelude import ADD, ANTISG, EQ, MONUS, MULT, PRED, SG, const
from common.recfun.reference import oracleEvaluate
from common.recfun.results import FuelExhausted, Value
from errors import ArityMismatch, NotBoolean, ValidationError
from strategies import exprsWithArgs
from tasks.experiments.equivalence import differentialSweep

small = st.integers(0, 8)


class TestArity:

    @pytest.mark.parametrize("expr,expected", [
        (Zero(), 1),
        (Succ(), 1),
        (Proj(2, 3), 3),
        (ADD, 2),
        (Compose(Succ(), (Proj(1, 2),)), 2),
        (Mu(MONUS), 1),
        (Mu(Succ()), 0),
    ])
    def test_arity(self, expr, expected):
        assert arity(expr) == expected

    @pytest.mark.parametrize("expr,path", [
        (Proj(0, 2), ()),
        (Proj(3, 2), ()),
        (PrimRec(Zero(), Proj(1, 2)), ()),
        (Compose(Succ(), (PrimRec(Zero(), Proj(1, 2)),)), ("inner0",)),
        (Compose(Proj(1, 2), (Zero(),)), ()),
        (Compose(ADD, (Zero(), Proj(1, 2))), ()),
        (Mu(Compose(Succ(), (Proj(4, 2),))), ("body", "inner0")),
        (PrimRec(Proj(1, 1), Compose(Succ(), (Proj(5, 3),))), ("step", "inner0")),
    ])
    def test_mismatch_path(self, expr, path):
        with pytest.raises(ArityMismatch) as e:
            arity(expr)
        assert e.value.path == path

    def test_contains_mu(self):
        assert not containsMu(ADD)
        assert containsMu(Compose(Succ(), (Mu(MONUS),)))


class TestEvaluate:

    def test_add(self):
        assert evaluate(ADD, (2, 3), 10 ** 4) == Value(5)

    def test_least_zero(self):
        assert evaluate(Mu(MONUS), (5,), 10 ** 4) == Value(5)

    def test_divergent_mu(self):
        assert evaluate(Mu(Succ()), (), 100) == FuelExhausted(100)

    def test_exact_cost(self):
        # PrimRec entry + base, then per iteration: one unit plus compose, proj and succ.
        assert evaluate(ADD, (2, 3), 14) == Value(5)
        assert evaluate(ADD, (2, 3), 13) == FuelExhausted(13)
        assert oracleEvaluate(ADD, (2, 3), 14) == Value(5)
        assert oracleEvaluate(ADD, (2, 3), 13) == FuelExhausted(13)

    def test_zero_fuel(self):
        assert evaluate(Zero(), (3,), 0) == FuelExhausted(0)
        assert evaluate(Zero(), (3,), 1) == Value(0)

    def test_wrong_argument_count(self):
        with pytest.raises(ArityMismatch):
            evaluate(ADD, (1,), 100)
        with pytest.raises(ArityMismatch):
            oracleEvaluate(ADD, (1, 2, 3), 100)

    def test_negative_argument(self):
        with pytest.raises(ValidationError):
            evaluate(Succ(), (-1,), 100)

    def test_negative_fuel(self):
        with pytest.raises(ValidationError):
            evaluate(Succ(), (1,), -1)

    def test_const(self):
        assert evaluate(const(4, 3), (9, 9, 9), 100) == Value(4)
        assert arity(const(0, 2)) == 2

    def test_characteristic(self):
        assert charValue(EQ, (2, 2), 10 ** 4) == Value(0)
        assert charValue(EQ, (2, 3), 10 ** 4) == Value(1)
        with pytest.raises(NotBoolean) as e:
            charValue(ADD, (2, 3), 10 ** 4)
        assert e.value.value == 5

    @given(small, small)
    def test_prelude(self, x, y):
        fuel = 10 ** 5
        assert evaluate(ADD, (x, y), fuel) == Value(x + y)
        assert evaluate(MULT, (x, y), fuel) == Value(x * y)
        assert evaluate(MONUS, (x, y), fuel) == Value(max(x - y, 0))
        assert evaluate(PRED, (x,), fuel) == Value(max(x - 1, 0))
        assert evaluate(SG, (x,), fuel) == Value(0 if x == 0 else 1)
        assert evaluate(ANTISG, (x,), fuel) == Value(1 if x == 0 else 0)
        assert evaluate(EQ, (x, y), fuel) == Value(0 if x == y else 1)


class TestEvaluation:

    def test_resume(self):
        evaluation = Evaluation(MULT, (3, 4))
        assert evaluation.advance(5) is None
        assert evaluation.consumed == 5
        value = None
        while value is None:
            value = evaluation.advance(3)
        assert value == 12
        assert evaluation.done

    @given(exprsWithArgs(), st.integers(1, 9))
    def test_chunked_matches_one_shot(self, case, chunk):
        expr, args = case
        fuel = 2000
        expected = evaluate(expr, args, fuel)
        evaluation = Evaluation(expr, args)
        value = None
        while value is None and evaluation.consumed < fuel:
            value = evaluation.advance(min(chunk, fuel - evaluation.consumed))
        if isinstance(expected, Value):
            assert value == expected.v
            assert evaluation.consumed <= fuel
        else:
            assert value is None

    @given(exprsWithArgs(), st.integers(0, 2000))
    def test_more_fuel_keeps_the_value(self, case, extra):
        expr, args = case
        result = evaluate(expr, args, 500)
        if isinstance(result, Value):
            assert evaluate(expr, args, 500 + extra) == result
            assert oracleEvaluate(expr, args, 500 + extra) == result

    @given(exprsWithArgs(maxDepth=4, maxArg=3, allowMu=False))
    def test_primitive_recursive_terms_are_total(self, case):
        expr, args = case
        assert not containsMu(expr)
        assert isinstance(evaluate(expr, args, 10 ** 6), Value)


class TestDifferential:

    @given(exprsWithArgs())
    def test_evaluators_agree(self, case):
        expr, args = case
        assert evaluate(expr, args, 2000) == oracleEvaluate(expr, args, 2000)

    @given(exprsWithArgs())
    def test_mu_values_are_least(self, case):
        expr, args = case
        trace = []
        oracleEvaluate(expr, args, 2000, trace)
        for muExpr, muArgs, k in set(trace):
            assert auditMu(muExpr.body, muArgs, k, 2000)

    def test_sweep(self):
        result = differentialSweep(cases=300, seed=1, maxDepth=4, fuel=10 ** 4)
        assert result.cases == 300
        assert result.ok

    @pytest.mark.slow
    def test_full_sweep(self):
        assert differentialSweep(cases=10 ** 4, seed=0).ok


class TestAuditMu:

    @pytest.mark.parametrize("k,expected", [(5, True), (4, False), (6, False)])
    def test_monus(self, k, expected):
        assert auditMu(MONUS, (5,), k, 10 ** 4) is expected

    def test_divergent_prefix_fails(self):
        # body(0) diverges, so 1 cannot be certified as the least zero.
        body = Compose(MONUS, (Compose(Mu(Compose(Succ(), (Proj(2, 2),))), (Proj(1, 1),)), const(1)))
        assert not auditMu(body, (), 1, 100)
