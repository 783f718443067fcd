from common.dsl.program import FORMAT_VERSION
from common.machines.core import Machine
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero


def formatTerm(expr, nested=False):
    """ Canonical text of <expr>; compound terms are parenthesised when <nested>. """
    if isinstance(expr, Zero):
        return "zero"
    if isinstance(expr, Succ):
        return "succ"
    if isinstance(expr, Proj):
        text = "proj {} {}".format(expr.i, expr.n)
    elif isinstance(expr, Compose):
        text = "compose {} ({})".format(
            formatTerm(expr.outer, True), " ".join(formatTerm(g, True) for g in expr.inners))
    elif isinstance(expr, PrimRec):
        text = "primrec {} {}".format(formatTerm(expr.base, True), formatTerm(expr.step, True))
    elif isinstance(expr, Mu):
        text = "mu {}".format(formatTerm(expr.body, True))
    else:
        raise TypeError("not an expression: {!r}".format(expr))
    return "({})".format(text) if nested else text


def formatMachine(name, machine):
    lines = ["machine {}".format(name),
             "states={} alphabet={} start={}".format(
                 machine.stateCount, machine.alphabetSize, machine.startState)]
    for (state, symbol), transition in machine.transitions:
        lines.append("{} {} -> {} {} {}".format(
            state, symbol, transition.write, transition.move.letter, transition.nextState))
    lines.append("end")
    return "\n".join(lines)


def formatProgram(program):
    """ Canonical text of <program>; parseProgram(formatProgram(p)) == p. """
    parts = ["format={}".format(FORMAT_VERSION)]
    for name, definition in program.definitions.items():
        if isinstance(definition, Machine):
            parts.append(formatMachine(name, definition))
        else:
            parts.append("def {} = {}".format(name, formatTerm(definition)))
    return "\n".join(parts) + "\n"
