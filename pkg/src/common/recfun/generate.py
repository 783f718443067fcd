""" Random well-arity expressions for differential and round-trip runs. """
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero


def _buildable(arity, depth, allowMu=True):
    # Nothing of arity 0 fits in a single node; it takes at least a mu over a leaf.
    if arity >= 1:
        return depth >= 1
    return allowMu and depth >= 2


def randomExpr(rng, arity, depth, maxOuterArity=3, allowMu=True):
    """ Random expression of exactly <arity> and depth at most <depth>, drawn from <rng>. """
    if not _buildable(arity, depth, allowMu):
        raise ValueError("no expression of arity {} fits in depth {}".format(arity, depth))

    choices = []
    if arity >= 1:
        choices += ["leaf", "leaf"]
    if depth >= 2:
        if _buildable(arity, depth - 1, allowMu):
            choices += ["compose", "compose"]
        if arity >= 1 and _buildable(arity - 1, depth - 1, allowMu):
            choices.append("primrec")
        if allowMu:
            choices.append("mu")
    kind = rng.choice(choices)

    if kind == "leaf":
        if arity == 1:
            return rng.choice([Zero(), Succ(), Proj(1, 1)])
        return Proj(rng.randint(1, arity), arity)
    if kind == "compose":
        k = rng.randint(1, maxOuterArity)
        outer = randomExpr(rng, k, depth - 1, maxOuterArity, allowMu)
        inners = tuple(randomExpr(rng, arity, depth - 1, maxOuterArity, allowMu) for _ in range(k))
        return Compose(outer, inners)
    if kind == "primrec":
        base = randomExpr(rng, arity - 1, depth - 1, maxOuterArity, allowMu)
        step = randomExpr(rng, arity + 1, depth - 1, maxOuterArity, allowMu)
        return PrimRec(base, step)
    return Mu(randomExpr(rng, arity + 1, depth - 1, maxOuterArity, allowMu))


def randomArgs(rng, arity, maxValue=10):
    return tuple(rng.randint(0, maxValue) for _ in range(arity))
