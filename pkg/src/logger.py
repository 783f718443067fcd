import logging
import sys

from utility import bcolors

DEFAULT_FORMAT = "%(asctime)s [%(name)s] %(module)20s %(levelname)5s %(process)d\t%(message)s"

LEVEL_COLOURS = {
    "WARNING": bcolors.WARNING,
    "ERROR": bcolors.FAIL,
    "CRITICAL": bcolors.FAIL + bcolors.BOLD,
}


class _LevelColourFormatter(logging.Formatter):
    """ Colours WARNING and above; only used when the stream is a terminal. """

    def format(self, record):
        text = super().format(record)
        colour = LEVEL_COLOURS.get(record.levelname)
        return colour + text + bcolors.ENDC if colour else text


class Logger:
    """
    Named logger with one console handler. Everything is captured at DEBUG and the
    handler filters at <level>; library code reaches the same logger through
    logging.getLogger(name).
    """
    def __init__(
        self,
        name="root",
        level="DEBUG",
        fmt=DEFAULT_FORMAT,
        add_ch=True,
        stream=None
    ):
        self._fmt = fmt
        self._name = name
        self._level = level
        self._stream = stream if stream is not None else sys.stdout

        isTerminal = getattr(self._stream, "isatty", lambda: False)()
        self.formatter = (_LevelColourFormatter if isTerminal else logging.Formatter)(self.fmt)

        self.get().setLevel("DEBUG")

        # Stop child loggers propagating to parents, prevents double logging.
        #
        self.get().propagate = False

        self.get().handlers = []
        if add_ch:
            self._addConsoleHandler()

    @classmethod
    def forTask(cls, className, verbose=False, stream=None):
        """ Per-task logger as run.py builds it: named after the class, stderr by default. """
        return cls(name=className, level="DEBUG" if verbose else "INFO",
                   stream=stream if stream is not None else sys.stderr)

    def _addConsoleHandler(self):
        ch = logging.StreamHandler(self._stream)
        ch.setLevel(self.level)
        ch.setFormatter(fmt=self.formatter)
        self.get().addHandler(ch)

    @property
    def fmt(self):
        return self._fmt

    def get(self):
        """ Return a reference to this logger. """
        return logging.getLogger(self.name)

    @property
    def level(self):
        return self._level

    @property
    def name(self):
        return self._name
