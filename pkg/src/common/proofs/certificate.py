from dataclasses import dataclass
from typing import Tuple

from common.recfun.expr import Compose, RecExpr, arity
from errors import ValidationError


@dataclass(frozen=True)
class Statement:
    """
    The claim "subject(fixedArgs..., y) is nonzero for every y at which it converges".

    <subject> has arity len(fixedArgs) + 1; its last argument is the quantified y.
    """
    subject: RecExpr
    fixedArgs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fixedArgs", tuple(self.fixedArgs))
        if len(self.fixedArgs) + 1 != arity(self.subject):
            raise ValidationError("statement needs {} fixed arguments, got {}".format(
                arity(self.subject) - 1, len(self.fixedArgs)))


@dataclass(frozen=True)
class Certificate:
    """
    Rule-tagged derivation node. <path> addresses the subterm the rule applies to: a
    sequence of inner-term indices of nested compositions, starting at the subject.
    """
    rule: str
    path: Tuple[int, ...] = ()
    children: Tuple["Certificate", ...] = ()

    @property
    def size(self):
        return 1 + sum(c.size for c in self.children)

    @property
    def tags(self):
        """ Rule tags in preorder; with fixed rule arities this identifies the tree. """
        out = [self.rule]
        for child in self.children:
            out.extend(child.tags)
        return tuple(out)

    def render(self):
        text = self.rule
        if self.path:
            text += "@" + ".".join(str(p) for p in self.path)
        if self.children:
            text += "(" + ", ".join(c.render() for c in self.children) + ")"
        return text

    def __str__(self):
        return self.render()


def subtermAt(subject, path):
    """ Subterm of <subject> reached through composition inner indices, or None. """
    term = subject
    for index in path:
        if not isinstance(term, Compose) or not 0 <= index < len(term.inners):
            return None
        term = term.inners[index]
    return term
