from common.dsl.parser import loadProgram
from common.recfun.evaluator import charValue, evaluate
from common.recfun.results import Value
from tasks.task import EXIT_OK, EXIT_USAGE, Task
from utility import parseIntList


class EvaluateProgram(Task):
    """ Evaluate a named function from a .rf program. """

    def __init__(self, logger):
        super().__init__(logger)
        self.program = None
        self.name = None
        self.args = None
        self.fuel = None
        self.characteristic = None

    def run(self, args, kwargs):
        super().run(args, kwargs)
        self.tic()
        self.program = kwargs["program"]
        self.name = kwargs["name"]
        self.fuel = kwargs.get("fuel", 10 ** 5)
        self.characteristic = kwargs.get("characteristic", False)
        try:
            self.args = parseIntList(kwargs.get("args", ""))
        except ValueError as e:
            self.logger.critical("Could not parse arguments.")
            self.logger.critical(repr(e))
            return EXIT_USAGE

        program = loadProgram(self.program)
        try:
            expr = program.function(self.name)
        except KeyError as e:
            self.logger.critical("No function {} in {}".format(self.name, self.program))
            self.logger.critical(repr(e))
            return EXIT_USAGE

        evaluator = charValue if self.characteristic else evaluate
        result = evaluator(expr, self.args, self.fuel)
        if isinstance(result, Value):
            print(result.v)
            self.logger.info("{}{} = {}".format(self.name, self.args, result.v))
        else:
            print("undefined within fuel {}".format(self.fuel))
            self.logger.warning("{}{} did not converge within {} fuel".format(
                self.name, self.args, result.consumed))

        self.toc()
        self.logger.debug("Finished in {}s".format(self.elapsed))
        return EXIT_OK
