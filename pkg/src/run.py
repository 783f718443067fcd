#!/usr/bin/python3
from __future__ import absolute_import

import argparse
import importlib
import sys

from errors import WorkbenchError
from logger import Logger
from session import Session
from tasks.task import EXIT_OK, EXIT_USAGE

SUBCOMMAND_TASKS = {
    "classify": ("tasks.experiments.classify", "ClassifyMachineClass"),
    "trio": ("tasks.experiments.trio", "RunTrioFixtures"),
    "eval": ("tasks.experiments.evaluate", "EvaluateProgram"),
    "falsify": ("tasks.experiments.falsify", "DemoFalsify"),
}


def buildParser():
    parser = argparse.ArgumentParser(
        description="Computability workbench: looping oracle, recursive functions and the trio.")
    parser.add_argument('-v', help="verbose?", action='store_true')
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify = subparsers.add_parser("classify", help="classify every machine of a class")
    classify.add_argument("--states", type=int, required=True)
    classify.add_argument("--symbols", type=int, required=True)
    classify.add_argument("--budget", type=int, default=10 ** 4, help="per-machine step budget")
    classify.add_argument("--history-cap", type=int, default=10 ** 5, help="per-machine history cap")
    classify.add_argument("--input", type=str, default="", help="tape input, e.g. \"1,0,1\" (default blank)")
    classify.add_argument("--workers", type=int, default=1)
    classify.add_argument("--out", type=str, help="CSV path (default stdout)")

    trio = subparsers.add_parser("trio", help="run the trio on a directory of fixtures")
    trio.add_argument("--fixtures", type=str, required=True)
    trio.add_argument("--out", type=str, help="CSV path (default stdout)")
    trio.add_argument("--parallel", action="store_true",
                      help="threaded trio, verified against the canonical schedule")

    evaluate = subparsers.add_parser("eval", help="evaluate a function from a .rf program")
    evaluate.add_argument("--program", type=str, required=True)
    evaluate.add_argument("--name", type=str, required=True)
    evaluate.add_argument("--args", type=str, default="")
    evaluate.add_argument("--fuel", type=int, default=10 ** 5)
    evaluate.add_argument("--characteristic", action="store_true",
                          help="require the value to be 0 or 1")

    demo = subparsers.add_parser("demo", help="demonstrations")
    demo.add_argument("which", choices=["falsify"])
    demo.add_argument("--budgets", type=str, default="", help="comma separated step budgets")

    tasks = subparsers.add_parser("tasks", help="run a YAML tasks file")
    tasks.add_argument('-t', help="tasks file path", default="../etc/tasks/acceptance.yml", type=str)
    return parser


def subcommandKwargs(iargs):
    if iargs.command == "classify":
        return {"states": iargs.states, "symbols": iargs.symbols, "budget": iargs.budget,
                "history_cap": iargs.history_cap, "input": iargs.input, "workers": iargs.workers,
                "out": iargs.out}
    if iargs.command == "trio":
        return {"fixtures": iargs.fixtures, "out": iargs.out, "parallel": iargs.parallel}
    if iargs.command == "eval":
        return {"program": iargs.program, "name": iargs.name, "args": iargs.args,
                "fuel": iargs.fuel, "characteristic": iargs.characteristic}
    budgets = [int(b) for b in iargs.budgets.replace(",", " ").split()]
    return {"budgets": budgets or None}


def runTask(moduleName, className, args, kwargs, verbose):
    """ Import <moduleName>.<className>, give it its own logger and run it. """
    logger = Logger.forTask(className, verbose).get()
    try:
        # Import module specified in the task definition with the <module_name>
        # field, and assign reference to corresponding <class_name> from this
        # module to <task>.
        #
        module = importlib.import_module('{}'.format(moduleName))
        task = getattr(module, className)(logger)
    except ImportError as e:
        logger.critical("Module {} not found.".format(moduleName))
        logger.critical(repr(e))
        return EXIT_USAGE
    except AttributeError as e:
        logger.critical("Class {} not found.".format(className))
        logger.critical(repr(e))
        return EXIT_USAGE
    return task.execute(args, kwargs)


def runTasksFile(path, verbose, logger):
    try:
        session = Session(tasks=path, logger=logger)
    except WorkbenchError as e:
        logger.critical(repr(e))
        return EXIT_USAGE

    exitCode = EXIT_OK
    for name, definition in session.tasks.items():
        if not definition['enabled']:
            logger.warning("Task {} is not enabled!".format(name))
            continue
        logger.info("Running task {}: {}".format(name, definition['description']))
        kwargs = dict(definition['kwargs'])
        kwargs['task_name'] = name
        code = runTask(definition['module_name'], definition['class_name'], definition['args'],
                       kwargs, verbose)
        exitCode = max(exitCode, code)
    return exitCode


def main(argv=None):
    parser = buildParser()
    iargs = parser.parse_args(argv)

    # Setup default root loggers for CRITICAL warnings.
    #
    # These will be overriden by per-task loggers, but provide a failsafe
    # if exceptions occur while instantiating these tasks.
    #
    logger = Logger(name='root', level='DEBUG' if iargs.v else 'INFO', stream=sys.stderr).get()

    if iargs.command == "tasks":
        return runTasksFile(iargs.t, iargs.v, logger)
    key = "falsify" if iargs.command == "demo" else iargs.command
    moduleName, className = SUBCOMMAND_TASKS[key]
    try:
        kwargs = subcommandKwargs(iargs)
    except ValueError as e:
        logger.critical("Could not parse arguments.")
        logger.critical(repr(e))
        return EXIT_USAGE
    return runTask(moduleName, className, None, kwargs, iargs.v)


if __name__ == "__main__":
    sys.exit(main())
