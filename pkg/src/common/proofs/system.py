"""
Decidable certificate checking and bounded certificate search for statements of the form
"G(a1, ..., an, y) != 0 for all y".

ProofSystem is the pluggable interface; ReferenceRuleSet is a small sound rule set over
expression structure:

    SuccHead         the subterm is succ, or a composition whose outer function is succ
    ConstNonzero     the subterm cannot depend on y and evaluates to nonzero once
    SumLeftNonzero   the subterm is add(l, r) and l is certified (child at path + (0,))
    SumRightNonzero  the subterm is add(l, r) and r is certified (child at path + (1,))
    ProductNonzero   the subterm is mult(l, r) and both l and r are certified

It is incomplete by construction: true statements outside its reach stay unproved.
"""
import abc
from functools import lru_cache

from common.proofs.certificate import Certificate, subtermAt
from common.recfun.evaluator import evaluate
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero, arity
from common.recfun.prelude import ADD, MULT
from common.recfun.results import Value

SUCC_HEAD = "SuccHead"
CONST_NONZERO = "ConstNonzero"
SUM_LEFT = "SumLeftNonzero"
SUM_RIGHT = "SumRightNonzero"
PRODUCT = "ProductNonzero"

CHECK_FUEL = 10 ** 4


class ProofSystem(abc.ABC):
    """ A decidable proof relation together with an enumeration of its candidate proofs. """

    @abc.abstractmethod
    def checkCertificate(self, cert, stmt):
        """ True iff <cert> is a correct derivation of <stmt>. Must always terminate. """

    @abc.abstractmethod
    def enumerateCertificates(self, stmt, maxSize):
        """ Deterministic, size-ordered iterator over well-formed certificates up to <maxSize> nodes. """


def mayDependOn(expr, index):
    """
    False only if the value of <expr> is provably independent of argument <index>
    (1-based). Conservative syntactic analysis.
    """
    if isinstance(expr, Zero):
        return False
    if isinstance(expr, Succ):
        return True
    if isinstance(expr, Proj):
        return expr.i == index
    if isinstance(expr, Compose):
        # The outer function only ever sees the inner values.
        return any(mayDependOn(g, index) for g in expr.inners)
    if isinstance(expr, PrimRec):
        if index == arity(expr):
            return True
        return mayDependOn(expr.base, index) or mayDependOn(expr.step, index)
    if isinstance(expr, Mu):
        return mayDependOn(expr.body, index)
    return True


class ReferenceRuleSet(ProofSystem):

    RULES = tuple(sorted([CONST_NONZERO, PRODUCT, SUCC_HEAD, SUM_LEFT, SUM_RIGHT]))
    LEAF_RULES = frozenset([SUCC_HEAD, CONST_NONZERO])

    def __init__(self, addition=ADD, multiplication=MULT, checkFuel=CHECK_FUEL):
        self.addition = addition
        self.multiplication = multiplication
        self.checkFuel = checkFuel

    def checkCertificate(self, cert, stmt):
        try:
            return self._check(cert, stmt, ())
        except (AttributeError, TypeError):
            return False

    def _check(self, cert, stmt, path):
        if not isinstance(cert, Certificate) or tuple(cert.path) != path:
            return False
        term = subtermAt(stmt.subject, path)
        if term is None:
            return False

        if cert.rule == SUCC_HEAD:
            return not cert.children and (
                isinstance(term, Succ) or (isinstance(term, Compose) and isinstance(term.outer, Succ)))

        if cert.rule == CONST_NONZERO:
            if cert.children or mayDependOn(term, arity(term)):
                return False
            result = evaluate(term, stmt.fixedArgs + (0,), self.checkFuel)
            return isinstance(result, Value) and result.v != 0

        if cert.rule in (SUM_LEFT, SUM_RIGHT):
            if len(cert.children) != 1 or not self._isApplication(term, self.addition):
                return False
            side = 0 if cert.rule == SUM_LEFT else 1
            return self._check(cert.children[0], stmt, path + (side,))

        if cert.rule == PRODUCT:
            if len(cert.children) != 2 or not self._isApplication(term, self.multiplication):
                return False
            return (self._check(cert.children[0], stmt, path + (0,))
                    and self._check(cert.children[1], stmt, path + (1,)))

        return False

    @staticmethod
    def _isApplication(term, combinator):
        return isinstance(term, Compose) and len(term.inners) == 2 and term.outer == combinator

    def enumerateCertificates(self, stmt, maxSize):
        subject = stmt.subject
        rules = self.RULES
        leafRules = self.LEAF_RULES

        @lru_cache(maxsize=None)
        def trees(path, size):
            term = subtermAt(subject, path)
            binary = isinstance(term, Compose) and len(term.inners) == 2
            out = []
            for rule in rules:
                if rule in leafRules:
                    if size == 1:
                        out.append(Certificate(rule, path))
                elif rule in (SUM_LEFT, SUM_RIGHT):
                    if size >= 2 and binary:
                        childPath = path + ((0,) if rule == SUM_LEFT else (1,))
                        out.extend(Certificate(rule, path, (child,)) for child in trees(childPath, size - 1))
                elif rule == PRODUCT:
                    if size >= 3 and binary:
                        for leftSize in range(1, size - 1):
                            for left in trees(path + (0,), leftSize):
                                for right in trees(path + (1,), size - 1 - leftSize):
                                    out.append(Certificate(rule, path, (left, right)))
            return tuple(sorted(out, key=lambda c: c.tags))

        for size in range(1, maxSize + 1):
            yield from trees((), size)


DEFAULT_PROOF_SYSTEM = ReferenceRuleSet()


def checkCertificate(cert, stmt, system=DEFAULT_PROOF_SYSTEM):
    return system.checkCertificate(cert, stmt)


def enumerateCertificates(stmt, maxSize, system=DEFAULT_PROOF_SYSTEM):
    return system.enumerateCertificates(stmt, maxSize)
