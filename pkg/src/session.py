import yaml

from errors import WorkbenchError

REQUIRED_TASK_KEYS = ("description", "module_name", "class_name", "enabled")


class SessionError(WorkbenchError):
    """ The tasks file could not be read or is malformed. """


class Session():
    def __init__(self, tasks, logger):
        self.logger = logger
        self._tasks = None

        self._parseTasksFile(tasks)

    def _parseTasksFile(self, path):
        """ Parse a tasks yaml file. """
        self.logger.info("Parsing tasks file: {}".format(path))
        try:
            with open(path) as f:
                contents = f.read()
        except IOError as e:
            self.logger.critical("Tasks file not found.")
            self.logger.critical(repr(e))
            raise SessionError("tasks file not found: {}".format(path))
        try:
            tasks = yaml.safe_load(contents) or {}
        except yaml.YAMLError as e:
            self.logger.critical("Could not parse yaml.")
            self.logger.critical(repr(e))
            raise SessionError("could not parse tasks file: {}".format(path))
        if not isinstance(tasks, dict):
            raise SessionError("tasks file must map task names to definitions: {}".format(path))
        for name, definition in tasks.items():
            missing = [key for key in REQUIRED_TASK_KEYS if key not in (definition or {})]
            if missing:
                raise SessionError("task {} is missing {}".format(name, ", ".join(missing)))
            definition.setdefault("args", None)
            if definition.get("kwargs") is None:
                definition["kwargs"] = {}
        self._tasks = tasks

    @property
    def tasks(self):
        return self._tasks
