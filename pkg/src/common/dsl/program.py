from dataclasses import dataclass, field

from common.machines.core import Machine
from common.recfun.expr import RecExpr

FORMAT_VERSION = 1

KEYWORDS = frozenset(["zero", "succ", "proj", "compose", "primrec", "mu", "def", "machine", "end",
                      "format", "states", "alphabet", "start"])


@dataclass
class Program:
    """
    Named definitions, each a RecExpr (references already inlined) or a Machine.

    Two programs are equal when they define the same names with structurally equal values.
    """
    definitions: dict = field(default_factory=dict)

    @property
    def functions(self):
        return {name: d for name, d in self.definitions.items() if isinstance(d, RecExpr)}

    @property
    def machines(self):
        return {name: d for name, d in self.definitions.items() if isinstance(d, Machine)}

    def entry(self, name):
        """ Definition called <name>; KeyError if there is none. """
        return self.definitions[name]

    def function(self, name):
        definition = self.entry(name)
        if not isinstance(definition, RecExpr):
            raise KeyError("{} is not a function".format(name))
        return definition

    def machine(self, name=None):
        """ Machine called <name>, or the only machine if <name> is None. """
        if name is None:
            machines = list(self.machines.values())
            if len(machines) != 1:
                raise KeyError("expected exactly one machine, found {}".format(len(machines)))
            return machines[0]
        definition = self.entry(name)
        if not isinstance(definition, Machine):
            raise KeyError("{} is not a machine".format(name))
        return definition

    def __len__(self):
        return len(self.definitions)
