import os
from pathlib import Path


class bcolors:
    """ Struct-like object to store terminal colour codes. """

    HEADER = "\033[95m"
    OKBLUE = "\033[94m"
    OKGREEN = "\033[92m"
    WARNING = "\033[93m"
    FAIL = "\033[91m"
    ENDC = "\033[0m"
    BOLD = "\033[1m"
    UNDERLINE = "\033[4m"


# Colour per outcome / verdict kind for summary lines.
KIND_COLOURS = {
    "halted": bcolors.OKGREEN,
    "found": bcolors.OKGREEN,
    "loop": bcolors.OKBLUE,
    "self_terminated": bcolors.OKBLUE,
    "proved": bcolors.HEADER,
    "budget": bcolors.WARNING,
    "exhausted": bcolors.WARNING,
}


def colourKind(kind):
    return KIND_COLOURS.get(kind, "") + kind + bcolors.ENDC


def parseIntList(text):
    """
    Parse "2,3" (or "2 3") into (2, 3). An empty string is the empty tuple.

    Raises ValueError on anything that is not a comma/space separated list of naturals.
    """
    if text is None:
        return ()
    if isinstance(text, (list, tuple)):
        values = tuple(int(v) for v in text)
    else:
        tokens = [t for t in str(text).replace(",", " ").split() if t]
        values = tuple(int(t) for t in tokens)
    if any(v < 0 for v in values):
        raise ValueError("expected natural numbers, got {}".format(text))
    return values


def prepareOutputPath(path):
    """ Create the parent directory of <path> if needed and return it as a Path. """
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)
    return path
