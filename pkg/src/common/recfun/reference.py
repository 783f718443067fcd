"""
Reference evaluator: a deliberately naive structural recursion over the expression tree,
kept independent of the main evaluator so the two can be tested against each other.

Fuel is charged exactly as the main evaluator charges it: one unit per node application,
one per primitive-recursion iteration and one per mu candidate.
"""
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero, arity
from common.recfun.results import FuelExhausted, Value
from errors import ArityMismatch


class _OutOfFuel(Exception):
    pass


class _Fuel():
    def __init__(self, amount):
        self.left = amount

    def charge(self):
        if self.left == 0:
            raise _OutOfFuel()
        self.left -= 1


def oracleEvaluate(expr, args, fuel, trace=None):
    """
    Evaluate like evaluate(). If <trace> is a list, every value returned by a mu node is
    appended to it as (muExpr, args, k).
    """
    args = tuple(args)
    if arity(expr) != len(args):
        raise ArityMismatch("expected {} arguments, got {}".format(arity(expr), len(args)))
    tank = _Fuel(fuel)
    try:
        return Value(_apply(expr, args, tank, trace))
    except _OutOfFuel:
        return FuelExhausted(fuel)


def _apply(expr, args, tank, trace):
    tank.charge()
    if isinstance(expr, Zero):
        return 0
    if isinstance(expr, Succ):
        return args[0] + 1
    if isinstance(expr, Proj):
        return args[expr.i - 1]
    if isinstance(expr, Compose):
        values = tuple(_apply(g, args, tank, trace) for g in expr.inners)
        return _apply(expr.outer, values, tank, trace)
    if isinstance(expr, PrimRec):
        xs, y = args[:-1], args[-1]
        acc = _apply(expr.base, xs, tank, trace)
        for i in range(y):
            tank.charge()
            acc = _apply(expr.step, xs + (i, acc), tank, trace)
        return acc
    if isinstance(expr, Mu):
        k = 0
        while True:
            tank.charge()
            if _apply(expr.body, args + (k,), tank, trace) == 0:
                if trace is not None:
                    trace.append((expr, args, k))
                return k
            k += 1
    raise TypeError("not an expression: {!r}".format(expr))
