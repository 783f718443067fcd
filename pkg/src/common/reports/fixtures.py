import csv
from dataclasses import dataclass, field
import logging
from pathlib import Path

import yaml

from common.dsl.parser import loadProgram
from common.trio.corpus import AUDIT_FUEL, classifyCorpusEntry
from common.trio.task import VERDICT_KINDS, TrioTask, Undetermined
from errors import FixtureError, ParseError, ValidationError

TRIO_CSV_HEADER = ("fixture", "verdict", "k", "f_prime", "rounds", "loop_first", "loop_period",
                   "certificate", "audit", "expected_ok")


@dataclass(frozen=True)
class Fixture:
    task: TrioTask
    expected: object = None
    expectedFPrime: object = None


@dataclass
class FixtureReport:
    records: list = field(default_factory=list)
    expectations: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def expectationMet(self, record):
        expected = self.expectations.get(record.name)
        if expected is None:
            return None
        kind, fPrime = expected
        if kind is not None and record.verdict.kind != kind:
            return False
        if fPrime is not None and record.fPrime != fPrime:
            return False
        return True

    @property
    def failures(self):
        return [r for r in self.records if r.audit is False or self.expectationMet(r) is False]

    @property
    def exitCode(self):
        if self.diagnostics:
            return 2
        return 1 if self.failures else 0


def _resolve(base, descriptor, key, path):
    try:
        name = descriptor[key]
    except KeyError:
        raise FixtureError(path, "missing key {!r}".format(key))
    target = (base / str(name)).resolve()
    if not target.is_file():
        raise FixtureError(target, "{} file not found".format(key))
    return target


def _optionalInt(value):
    return None if value is None else int(value)


def loadFixture(path):
    """ Build a TrioTask from a YAML descriptor plus the .rf and .tm files it names. """
    path = Path(path)
    try:
        descriptor = yaml.safe_load(path.read_text())
    except (OSError, UnicodeDecodeError) as e:
        raise FixtureError(path, "cannot read descriptor: {}".format(e))
    except yaml.YAMLError as e:
        raise FixtureError(path, "invalid YAML: {}".format(e))
    if not isinstance(descriptor, dict):
        raise FixtureError(path, "descriptor must be a key-value mapping")

    programPath = _resolve(path.parent, descriptor, "program", path)
    machinePath = _resolve(path.parent, descriptor, "machine", path)
    try:
        program = loadProgram(programPath)
        machines = loadProgram(machinePath)
    except ParseError as e:
        raise FixtureError(e.source or path, str(e))

    try:
        gBody = program.function(descriptor["g"])
        machine = machines.machine(descriptor.get("machine_name"))
    except KeyError as e:
        raise FixtureError(path, "unknown definition {}".format(e))

    expected = descriptor.get("expected")
    if expected is not None and expected not in VERDICT_KINDS:
        raise FixtureError(path, "expected must be one of {}".format(", ".join(VERDICT_KINDS)))
    expectedFPrime = descriptor.get("expected_f_prime")
    if expectedFPrime == "undetermined":
        expectedFPrime = Undetermined

    try:
        task = TrioTask(
            gBody=gBody,
            fixedArgs=tuple(descriptor.get("fixed_args") or ()),
            t2Machine=machine,
            t2Input=tuple(descriptor.get("input") or ()),
            quantum=int(descriptor.get("quantum", 100)),
            budget=int(descriptor.get("budget", 1000)),
            maxCertSize=int(descriptor.get("max_cert_size", 3)),
            historyCap=_optionalInt(descriptor.get("history_cap")),
            name=path.stem,
        )
    except (ValidationError, TypeError, ValueError) as e:
        raise FixtureError(path, "invalid task: {}".format(e))
    return Fixture(task, expected, expectedFPrime)


def runFixtureSuite(directory, auditFuel=AUDIT_FUEL, loggerName="root", parallel=False):
    """
    classifyCorpusEntry for every descriptor (*.yml, *.yaml) in <directory>, in name
    order. Unloadable fixtures become diagnostics instead of stopping the suite.
    """
    logger = logging.getLogger(loggerName)
    directory = Path(directory)
    if not directory.is_dir():
        raise FixtureError(directory, "fixture directory not found")

    report = FixtureReport()
    descriptors = sorted(list(directory.glob("*.yml")) + list(directory.glob("*.yaml")))
    for descriptor in descriptors:
        try:
            fixture = loadFixture(descriptor)
        except FixtureError as e:
            logger.critical("Could not load fixture.")
            logger.critical(repr(e))
            report.diagnostics.append(str(e))
            continue
        record = classifyCorpusEntry(fixture.task, auditFuel, loggerName, parallel)
        report.records.append(record)
        report.expectations[record.name] = (fixture.expected, fixture.expectedFPrime)
        logger.info("{}: {} (F' = {}, audit {})".format(
            record.name, record.verdict.kind, record.fPrime, record.audit))
    return report


def writeTrioCsv(report, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRIO_CSV_HEADER)
    for record in report.records:
        verdict = record.verdict
        loop = getattr(verdict, "loop", None)
        cert = getattr(verdict, "cert", None)
        met = report.expectationMet(record)
        writer.writerow((
            record.name,
            verdict.kind,
            getattr(verdict, "k", ""),
            "undetermined" if record.fPrime is Undetermined else record.fPrime,
            verdict.rounds,
            "" if loop is None else loop.firstIndex,
            "" if loop is None else loop.period,
            "" if cert is None else cert.render(),
            "n/a" if record.audit is None else ("true" if record.audit else "false"),
            "" if met is None else ("true" if met else "false"),
        ))
