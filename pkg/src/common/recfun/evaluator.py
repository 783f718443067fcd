from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero, arity
from common.recfun.results import FuelExhausted, Value
from errors import ArityMismatch, NotBoolean, ValidationError

# Frame phases.
_ENTRY = 0
_COMPOSE_INNER = 1
_PRIMREC_BASE = 2
_PRIMREC_NEXT = 3
_PRIMREC_STEP = 4
_MU_NEXT = 5
_MU_BODY = 6


class _Frame():
    __slots__ = ("expr", "args", "phase", "values", "acc", "i", "received")

    def __init__(self, expr, args):
        self.expr = expr
        self.args = args
        self.phase = _ENTRY
        self.values = None
        self.acc = None
        self.i = 0
        self.received = None


class Evaluation():
    """
    Resumable, explicit-stack evaluation of <expr> on <args>.

    advance(units) spends at most <units> fuel and returns the value, or None if the
    fuel ran out first; a later advance() continues exactly where it stopped. Fuel is
    charged once per node application, once per primitive-recursion iteration and once
    per mu candidate.
    """

    def __init__(self, expr, args):
        args = _checkArgs(expr, args)
        self.expr = expr
        self.args = args
        self.consumed = 0
        self.value = None
        self._stack = [_Frame(expr, args)]

    @property
    def done(self):
        return not self._stack

    def advance(self, units):
        if not self._stack:
            return self.value
        stack = self._stack
        remaining = units
        while True:
            frame = stack[-1]
            expr = frame.expr
            phase = frame.phase
            result = None

            if phase == _ENTRY:
                if remaining == 0:
                    break
                remaining -= 1
                self.consumed += 1
                if isinstance(expr, Proj):
                    result = frame.args[expr.i - 1]
                elif isinstance(expr, Succ):
                    result = frame.args[0] + 1
                elif isinstance(expr, Zero):
                    result = 0
                elif isinstance(expr, Compose):
                    frame.values = []
                    frame.phase = _COMPOSE_INNER
                    stack.append(_Frame(expr.inners[0], frame.args))
                    continue
                elif isinstance(expr, PrimRec):
                    frame.phase = _PRIMREC_BASE
                    stack.append(_Frame(expr.base, frame.args[:-1]))
                    continue
                elif isinstance(expr, Mu):
                    frame.phase = _MU_NEXT
                    continue
                else:
                    raise TypeError("not an expression: {!r}".format(expr))

            elif phase == _COMPOSE_INNER:
                frame.values.append(frame.received)
                if len(frame.values) < len(expr.inners):
                    stack.append(_Frame(expr.inners[len(frame.values)], frame.args))
                    continue
                # Tail call: the outer function replaces this frame, charged on entry.
                stack[-1] = _Frame(expr.outer, tuple(frame.values))
                continue

            elif phase == _PRIMREC_BASE:
                frame.acc = frame.received
                frame.phase = _PRIMREC_NEXT
                continue

            elif phase == _PRIMREC_NEXT:
                if frame.i == frame.args[-1]:
                    result = frame.acc
                else:
                    if remaining == 0:
                        break
                    remaining -= 1
                    self.consumed += 1
                    frame.phase = _PRIMREC_STEP
                    stack.append(_Frame(expr.step, frame.args[:-1] + (frame.i, frame.acc)))
                    continue

            elif phase == _PRIMREC_STEP:
                frame.acc = frame.received
                frame.i += 1
                frame.phase = _PRIMREC_NEXT
                continue

            elif phase == _MU_NEXT:
                if remaining == 0:
                    break
                remaining -= 1
                self.consumed += 1
                frame.phase = _MU_BODY
                stack.append(_Frame(expr.body, frame.args + (frame.i,)))
                continue

            elif phase == _MU_BODY:
                if frame.received == 0:
                    result = frame.i
                else:
                    frame.i += 1
                    frame.phase = _MU_NEXT
                    continue

            # <frame> produced <result>: pop it and hand the value to its caller.
            stack.pop()
            if not stack:
                self.value = result
                return result
            stack[-1].received = result
        return None


def _checkArgs(expr, args):
    args = tuple(args)
    expected = arity(expr)
    if expected != len(args):
        raise ArityMismatch("expected {} arguments, got {}".format(expected, len(args)))
    for a in args:
        if not isinstance(a, int) or a < 0:
            raise ValidationError("arguments must be natural numbers, got {!r}".format(a))
    return args


def evaluate(expr, args, fuel):
    """ Value{v} if <expr>(<args>) converges within <fuel>, else FuelExhausted. """
    if fuel < 0:
        raise ValidationError("fuel must be >= 0, got {}".format(fuel))
    evaluation = Evaluation(expr, args)
    value = evaluation.advance(fuel)
    if value is None:
        return FuelExhausted(evaluation.consumed)
    return Value(value)


def charValue(relExpr, args, fuel):
    """
    Evaluate a characteristic function (0 = relation holds, 1 = it does not).

    Raises NotBoolean when the value is outside {0, 1}.
    """
    result = evaluate(relExpr, args, fuel)
    if isinstance(result, Value) and result.v not in (0, 1):
        raise NotBoolean(result.v)
    return result


def auditMu(body, args, k, fuel, evaluator=evaluate):
    """
    Check that k is the least zero of body(args, .): body(args, k) = 0 and body(args, i)
    converges to a nonzero value for every i < k, each within <fuel>.
    """
    args = tuple(args)
    for i in range(k):
        result = evaluator(body, args + (i,), fuel)
        if not isinstance(result, Value) or result.v == 0:
            return False
    result = evaluator(body, args + (k,), fuel)
    return isinstance(result, Value) and result.v == 0
