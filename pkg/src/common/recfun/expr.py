"""
Partial recursive function terms.

Zero and Succ are unary, Proj(i, n) is n-ary and 1-based. PrimRec recurses on its last
argument: h(x, 0) = base(x), h(x, y+1) = step(x, y, h(x, y)). Mu(body) is the unrestricted
least-zero search on the body's last argument.
"""
from dataclasses import dataclass
from typing import Tuple

from errors import ArityMismatch


class RecExpr():
    """ Marker base class for expression nodes. """
    __slots__ = ()

    @property
    def children(self):
        return ()


@dataclass(frozen=True)
class Zero(RecExpr):
    pass


@dataclass(frozen=True)
class Succ(RecExpr):
    pass


@dataclass(frozen=True)
class Proj(RecExpr):
    i: int
    n: int


@dataclass(frozen=True)
class Compose(RecExpr):
    outer: RecExpr
    inners: Tuple[RecExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "inners", tuple(self.inners))

    @property
    def children(self):
        return (self.outer,) + self.inners


@dataclass(frozen=True)
class PrimRec(RecExpr):
    base: RecExpr
    step: RecExpr

    @property
    def children(self):
        return (self.base, self.step)


@dataclass(frozen=True)
class Mu(RecExpr):
    body: RecExpr

    @property
    def children(self):
        return (self.body,)


def arity(expr, path=(), memo=None):
    """
    Arity of <expr>; raises ArityMismatch naming the offending subterm.

    <memo> maps id(node) to the arity of nodes already checked, so expressions that
    share subterms are walked once per distinct node.
    """
    if memo is None:
        return _arity(expr, path, None)
    key = id(expr)
    if key not in memo:
        memo[key] = _arity(expr, path, memo)
    return memo[key]


def _arity(expr, path, memo):
    if isinstance(expr, (Zero, Succ)):
        return 1
    if isinstance(expr, Proj):
        if not (isinstance(expr.i, int) and isinstance(expr.n, int)) or not 1 <= expr.i <= expr.n:
            raise ArityMismatch("proj {} {} needs 1 <= i <= n".format(expr.i, expr.n), path)
        return expr.n
    if isinstance(expr, Compose):
        outerArity = arity(expr.outer, path + ("outer",), memo)
        if outerArity != len(expr.inners):
            raise ArityMismatch("compose: outer has arity {} but {} inner terms given".format(
                outerArity, len(expr.inners)), path)
        arities = [arity(g, path + ("inner{}".format(idx),), memo)
                   for idx, g in enumerate(expr.inners)]
        if not arities:
            raise ArityMismatch("compose needs at least one inner term", path)
        if len(set(arities)) != 1:
            raise ArityMismatch("compose: inner terms disagree on arity {}".format(arities), path)
        return arities[0]
    if isinstance(expr, PrimRec):
        baseArity = arity(expr.base, path + ("base",), memo)
        stepArity = arity(expr.step, path + ("step",), memo)
        if stepArity != baseArity + 2:
            raise ArityMismatch("primrec: base arity {} needs step arity {}, got {}".format(
                baseArity, baseArity + 2, stepArity), path)
        return baseArity + 1
    if isinstance(expr, Mu):
        bodyArity = arity(expr.body, path + ("body",), memo)
        if bodyArity < 1:
            raise ArityMismatch("mu body must take at least one argument", path)
        return bodyArity - 1
    raise ArityMismatch("not an expression: {!r}".format(expr), path)


def containsMu(expr):
    return isinstance(expr, Mu) or any(containsMu(c) for c in expr.children)
