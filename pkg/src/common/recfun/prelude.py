""" Standard library of recursive functions, mirrored by etc/programs/prelude.rf. """
from common.recfun.expr import Compose, PrimRec, Proj, Succ, Zero


def const(k, n=1):
    """ n-ary constant k. """
    expr = Zero() if n == 1 else Compose(Zero(), (Proj(1, n),))
    for _ in range(k):
        expr = Compose(Succ(), (expr,))
    return expr


# add(x, y) = x + y
ADD = PrimRec(Proj(1, 1), Compose(Succ(), (Proj(3, 3),)))

# pred(y) = y - 1, truncated at 0; the binary helper ignores its first argument.
PRED2 = PrimRec(Zero(), Proj(2, 3))
PRED = Compose(PRED2, (Proj(1, 1), Proj(1, 1)))

# monus(x, y) = max(x - y, 0)
MONUS = PrimRec(Proj(1, 1), Compose(PRED, (Proj(3, 3),)))

# mult(x, y) = x * y
MULT = PrimRec(Zero(), Compose(ADD, (Proj(3, 3), Proj(1, 3))))

# sg(x) = 0 if x == 0 else 1; antisg is its complement.
ANTISG = Compose(MONUS, (const(1), Proj(1, 1)))
SG = Compose(MONUS, (const(1), ANTISG))

# Characteristic function of equality: 0 if x == y else 1.
EQ = Compose(SG, (Compose(ADD, (
    Compose(MONUS, (Proj(1, 2), Proj(2, 2))),
    Compose(MONUS, (Proj(2, 2), Proj(1, 2))),
)),))

PRELUDE = {
    "add": ADD,
    "pred": PRED,
    "monus": MONUS,
    "mult": MULT,
    "sg": SG,
    "antisg": ANTISG,
    "eq": EQ,
}
