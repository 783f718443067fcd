class WorkbenchError(Exception):
    """ Base class for all workbench errors. """


class ValidationError(WorkbenchError):
    """ A machine, input or task violates its construction invariants. """


class ArityMismatch(ValidationError):
    """ An expression breaks the arity rules; <path> locates the offending subterm. """

    def __init__(self, message, path=()):
        self.path = tuple(path)
        super().__init__("{} (at {})".format(message, formatPath(self.path)))


class NotBoolean(WorkbenchError):
    """ An expression flagged as a characteristic function returned <value>. """

    def __init__(self, value):
        self.value = value
        super().__init__("characteristic function returned {}".format(value))


class ParseError(WorkbenchError):
    """ Located diagnostic from the program parser. """

    def __init__(self, message, line=1, column=1, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = "{}:{}".format(self.line, self.column)
        if self.source:
            where = "{}:{}".format(self.source, where)
        return "{}: {}".format(where, self.message)


class ClassTooLarge(WorkbenchError):
    """ A machine class is too large to enumerate. """

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__("class holds {} machines, limit is {}".format(count, limit))


class FixtureError(WorkbenchError):
    """ A trio fixture could not be loaded. """

    def __init__(self, path, message):
        self.path = str(path)
        super().__init__("{}: {}".format(self.path, message))


def formatPath(path):
    """ Render a subterm path, e.g. (1, 0) -> 'root.1.0'. """
    return ".".join(["root"] + [str(p) for p in path])
