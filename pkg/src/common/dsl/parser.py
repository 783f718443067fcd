"""
Parser for the workbench's line-oriented file format (.rf functions, .tm machines).

    format=1
    # functions: prefix terms, references to other definitions are inlined at load
    def add = primrec (proj 1 1) (compose succ (proj 3 3))
    # machines: a block, or in a .tm file just the header and transitions
    machine pingpong
    states=2 alphabet=2 start=0
    0 0 -> 0 R 1
    1 0 -> 0 L 0
    end

Every failure is reported as a ParseError carrying line and column.
"""
from pathlib import Path
import re

from common.dsl.program import FORMAT_VERSION, KEYWORDS, Program
from common.machines.core import Machine, Move
from common.recfun.expr import Compose, Mu, PrimRec, Proj, Succ, Zero, arity
from errors import ArityMismatch, ParseError, ValidationError

MAX_TERM_DEPTH = 200
MAX_TABLE_ENTRIES = 10 ** 6

_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<comment>\#.*)
  | (?P<arrow>->)
  | (?P<punct>[()=])
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE | re.ASCII)

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z", re.ASCII)


class _Token():
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return "<{} {!r} at {}:{}>".format(self.kind, self.text, self.line, self.column)


def isIdentifier(name):
    return bool(_IDENTIFIER.match(name)) and name not in KEYWORDS


def _tokenize(text, lineNumber, source):
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise ParseError("unexpected character {!r}".format(text[position]),
                             lineNumber, position + 1, source)
        kind = match.lastgroup
        if kind not in ("space", "comment"):
            tokens.append(_Token(kind, match.group(), lineNumber, position + 1))
        position = match.end()
    return tokens


class _Cursor():
    """ Token stream for one line. """

    def __init__(self, tokens, line, endColumn, source):
        self.tokens = tokens
        self.index = 0
        self.line = line
        self.endColumn = endColumn
        self.source = source

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self, what="token"):
        token = self.peek()
        if token is None:
            raise ParseError("expected {}, found end of line".format(what), self.line, self.endColumn,
                             self.source)
        self.index += 1
        return token

    def expect(self, kind, text=None, what=None):
        token = self.next(what or text or kind)
        if token.kind != kind or (text is not None and token.text != text):
            raise ParseError("expected {}, found {!r}".format(what or text or kind, token.text),
                             token.line, token.column, self.source)
        return token

    def expectInt(self, what):
        return int(self.expect("int", what=what).text)

    def done(self):
        token = self.peek()
        if token is not None:
            raise ParseError("unexpected {!r}".format(token.text), token.line, token.column, self.source)


class _Ref():
    """ Unresolved reference to another definition. """
    __slots__ = ("name", "token")

    def __init__(self, name, token):
        self.name = name
        self.token = token


def parseProgram(text, defaultMachineName="main", source=None):
    """ Parse <text> (str or bytes) into a Program, or raise a located ParseError. """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            before = bytes(text[:e.start])
            line = before.count(b"\n") + 1
            column = e.start - (before.rfind(b"\n") + 1) + 1
            raise ParseError("invalid UTF-8: {}".format(e.reason), line, column, source)
    try:
        return _Loader(defaultMachineName, source).load(text)
    except RecursionError:
        raise ParseError("definitions nested too deeply", 1, 1, source)


def loadProgram(path):
    """ Parse the file at <path>; machines in implicit blocks are named after the file stem. """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise ParseError("cannot read file: {}".format(e.strerror or e), 1, 1, str(path))
    return parseProgram(data, defaultMachineName=path.stem, source=str(path))


class _Loader():

    def __init__(self, defaultMachineName, source):
        self.defaultMachineName = defaultMachineName
        self.source = source
        self.rawDefinitions = {}    # name -> (kind, value, token)
        self.block = None
        self.seenContent = False

    def error(self, message, token=None, line=1, column=1):
        if token is not None:
            line, column = token.line, token.column
        return ParseError(message, line, column, self.source)

    def load(self, text):
        lines = text.split("\n")
        for lineNumber, line in enumerate(lines, start=1):
            tokens = _tokenize(line, lineNumber, self.source)
            if not tokens:
                continue
            cursor = _Cursor(tokens, lineNumber, len(line) + 1, self.source)
            self.handleLine(cursor)
        if self.block is not None:
            if self.block["explicit"]:
                raise self.error("machine block {!r} is missing 'end'".format(self.block["name"]),
                                 self.block["token"])
            self.closeBlock()
        return Program(self.resolve())

    def handleLine(self, cursor):
        first = cursor.peek()
        if first.kind == "name" and first.text == "format":
            self.handleFormat(cursor)
        elif first.kind == "name" and first.text == "def":
            self.requireNoBlock(first)
            self.handleDef(cursor)
        elif first.kind == "name" and first.text == "machine":
            self.requireNoBlock(first)
            cursor.next()
            name = cursor.expect("name", what="machine name")
            cursor.done()
            self.openBlock(name.text, name, explicit=True)
        elif first.kind == "name" and first.text == "end":
            cursor.next()
            cursor.done()
            if self.block is None or not self.block["explicit"]:
                raise self.error("'end' outside a machine block", first)
            self.closeBlock()
        elif first.kind == "name" and first.text == "states":
            if self.block is None:
                self.openBlock(self.defaultMachineName, first, explicit=False)
            self.handleHeader(cursor)
        elif first.kind == "int":
            if self.block is None or self.block["header"] is None:
                raise self.error("transition outside a machine block with a header", first)
            self.handleTransition(cursor)
        else:
            raise self.error("unexpected {!r}".format(first.text), first)
        self.seenContent = True

    def requireNoBlock(self, token):
        if self.block is not None:
            raise self.error("{!r} inside machine block {!r}".format(token.text, self.block["name"]), token)

    def handleFormat(self, cursor):
        token = cursor.next()
        if self.seenContent:
            raise self.error("format header must come first", token)
        cursor.expect("punct", "=")
        version = cursor.expect("int", what="format version")
        cursor.done()
        if int(version.text) != FORMAT_VERSION:
            raise self.error("unsupported format version {}".format(version.text), version)

    def declare(self, name, token, kind, value):
        if not isIdentifier(name):
            raise self.error("invalid name {!r}".format(name), token)
        if name in self.rawDefinitions:
            raise self.error("duplicate definition of {!r}".format(name), token)
        self.rawDefinitions[name] = (kind, value, token)

    # Functions.
    #
    def handleDef(self, cursor):
        cursor.next()
        name = cursor.expect("name", what="definition name")
        cursor.expect("punct", "=")
        term = self.parseTerm(cursor, 0)
        cursor.done()
        self.declare(name.text, name, "function", term)

    def parseTerm(self, cursor, depth):
        token = cursor.next("term")
        if depth > MAX_TERM_DEPTH:
            raise self.error("term nested too deeply", token)
        if token.kind == "punct" and token.text == "(":
            term = self.parseTerm(cursor, depth + 1)
            cursor.expect("punct", ")")
            return term
        if token.kind != "name":
            raise self.error("expected a term, found {!r}".format(token.text), token)
        if token.text == "zero":
            return Zero()
        if token.text == "succ":
            return Succ()
        if token.text == "proj":
            i = cursor.expectInt("projection index")
            n = cursor.expectInt("projection arity")
            if not 1 <= i <= n:
                raise self.error("arity error in 'proj {} {}': index must be between 1 and {}".format(
                    i, n, n), token)
            return Proj(i, n)
        if token.text == "compose":
            outer = self.parseTerm(cursor, depth + 1)
            cursor.expect("punct", "(", what="'(' opening the inner terms of compose")
            inners = []
            while True:
                peek = cursor.peek()
                if peek is not None and peek.kind == "punct" and peek.text == ")":
                    cursor.next()
                    break
                inners.append(self.parseTerm(cursor, depth + 1))
            if not inners:
                raise self.error("compose needs at least one inner term", token)
            return _Composition(outer, inners, token)
        if token.text == "primrec":
            base = self.parseTerm(cursor, depth + 1)
            step = self.parseTerm(cursor, depth + 1)
            return _Recursion(base, step, token)
        if token.text == "mu":
            return _Minimisation(self.parseTerm(cursor, depth + 1), token)
        if token.text in KEYWORDS:
            raise self.error("unexpected keyword {!r} in term".format(token.text), token)
        return _Ref(token.text, token)

    # Machines.
    #
    def openBlock(self, name, token, explicit):
        self.block = {"name": name, "token": token, "explicit": explicit, "header": None,
                      "transitions": {}}

    def handleHeader(self, cursor):
        first = cursor.peek()
        if self.block["header"] is not None:
            raise self.error("machine {!r} already has a header".format(self.block["name"]), first)
        values = {}
        while cursor.peek() is not None:
            key = cursor.expect("name", what="header key")
            if key.text not in ("states", "alphabet", "start"):
                raise self.error("unknown header key {!r}".format(key.text), key)
            if key.text in values:
                raise self.error("repeated header key {!r}".format(key.text), key)
            cursor.expect("punct", "=")
            values[key.text] = (cursor.expectInt(key.text), key)
        for required in ("states", "alphabet", "start"):
            if required not in values:
                raise self.error("header is missing {!r}".format(required), first)
        states, alphabet = values["states"][0], values["alphabet"][0]
        if states < 1 or alphabet < 1:
            raise self.error("states and alphabet must be positive", first)
        if states * alphabet > MAX_TABLE_ENTRIES:
            raise self.error("machine too large ({} x {})".format(states, alphabet), first)
        if not values["start"][0] < states:
            raise self.error("start state {} out of range".format(values["start"][0]), values["start"][1])
        self.block["header"] = (states, alphabet, values["start"][0])

    def handleTransition(self, cursor):
        states, alphabet, _ = self.block["header"]
        stateToken = cursor.expect("int", what="state")
        symbolToken = cursor.expect("int", what="symbol")
        cursor.expect("arrow", what="'->'")
        writeToken = cursor.expect("int", what="write symbol")
        moveToken = cursor.expect("name", what="move (L or R)")
        nextToken = cursor.expect("int", what="next state")
        cursor.done()
        state, symbol = int(stateToken.text), int(symbolToken.text)
        write, nextState = int(writeToken.text), int(nextToken.text)
        for value, limit, token, what in ((state, states, stateToken, "state"),
                                          (symbol, alphabet, symbolToken, "symbol"),
                                          (write, alphabet, writeToken, "write symbol"),
                                          (nextState, states, nextToken, "next state")):
            if value >= limit:
                raise self.error("{} {} out of range (limit {})".format(what, value, limit), token)
        if moveToken.text not in ("L", "R"):
            raise self.error("move must be L or R, found {!r}".format(moveToken.text), moveToken)
        key = (state, symbol)
        if key in self.block["transitions"]:
            raise self.error("second transition for state {} symbol {}".format(state, symbol), stateToken)
        self.block["transitions"][key] = (write, Move.fromLetter(moveToken.text), nextState)

    def closeBlock(self):
        block = self.block
        self.block = None
        if block["header"] is None:
            raise self.error("machine {!r} has no header".format(block["name"]), block["token"])
        states, alphabet, start = block["header"]
        try:
            machine = Machine(states, alphabet, block["transitions"], start)
        except ValidationError as e:
            raise self.error(str(e), block["token"])
        self.declare(block["name"], block["token"], "machine", machine)

    # Reference resolution: inline every reference, rejecting unknown names and cycles.
    #
    def resolve(self):
        resolved = {}
        visiting = set()
        arities = {}

        def resolveName(name, token):
            if name in resolved:
                return resolved[name]
            if name not in self.rawDefinitions:
                raise self.error("unknown name {!r}".format(name), token)
            kind, value, defToken = self.rawDefinitions[name]
            if kind == "machine":
                raise self.error("{!r} is a machine, not a function".format(name), token)
            if name in visiting:
                raise self.error("definition cycle through {!r}".format(name), token)
            visiting.add(name)
            expr = build(value)
            visiting.discard(name)
            try:
                arity(expr, memo=arities)
            except ArityMismatch as e:
                raise self.error("arity error in definition {!r}: {}".format(name, e), defToken)
            resolved[name] = expr
            return expr

        def build(term):
            if isinstance(term, _Ref):
                return resolveName(term.name, term.token)
            if isinstance(term, _Composition):
                return Compose(build(term.outer), tuple(build(g) for g in term.inners))
            if isinstance(term, _Recursion):
                return PrimRec(build(term.base), build(term.step))
            if isinstance(term, _Minimisation):
                return Mu(build(term.body))
            return term

        definitions = {}
        for name, (kind, value, token) in self.rawDefinitions.items():
            definitions[name] = value if kind == "machine" else resolveName(name, token)
        return definitions


class _Composition():
    __slots__ = ("outer", "inners", "token")

    def __init__(self, outer, inners, token):
        self.outer, self.inners, self.token = outer, inners, token


class _Recursion():
    __slots__ = ("base", "step", "token")

    def __init__(self, base, step, token):
        self.base, self.step, self.token = base, step, token


class _Minimisation():
    __slots__ = ("body", "token")

    def __init__(self, body, token):
        self.body, self.token = body, token
