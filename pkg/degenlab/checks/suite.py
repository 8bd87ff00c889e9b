from __future__ import unicode_literals

import logging
import os
from abc import ABCMeta, abstractmethod

from future.utils import with_metaclass

from degenlab.common.io_utils import write_csv, write_json
from degenlab.common.registrable import Registrable
from degenlab.common.utils import check_random_state
from degenlab.exceptions import InvalidInputError
from degenlab.report import check_result

logger = logging.getLogger(__name__)


class CheckSuite(with_metaclass(ABCMeta, Registrable)):
    """Group of numerical checks run by one CLI subcommand

    Subclasses declare the :class:`.SuiteConfig` they are built from in
    ``config_type`` and implement :meth:`run_checks`, which records checks
    through :meth:`check` and writes artifacts through :meth:`write_table`.
    """
    config_type = None

    def __init__(self, config=None, random_state=None):
        if config is None:
            config = self.config_type()  # pylint:disable=not-callable
        elif isinstance(config, dict):
            config = self.config_type.from_dict(config)
        if not isinstance(config, self.config_type):
            raise InvalidInputError("%s expects a %s, got %s"
                                    % (type(self).__name__,
                                       self.config_type.__name__,
                                       type(config).__name__))
        self.config = config
        self.random_state = check_random_state(random_state)
        self.checks = []
        self.artifacts = []
        self._output_dir = None

    @property
    def suite_name(self):
        return CheckSuite.registered_name(type(self))

    def run(self, output_dir):
        """Runs every check, writing artifacts in *output_dir*

        Returns:
            tuple: the list of check results and the list of artifact paths
            relative to *output_dir*
        """
        self.checks = []
        self.artifacts = []
        self._output_dir = output_dir
        self.run_checks()
        failed = [c["name"] for c in self.checks if not c["passed"]]
        if failed:
            logger.warning("Suite %s: failed checks %s", self.suite_name,
                           ", ".join(failed))
        else:
            logger.info("Suite %s: %d checks passed", self.suite_name,
                        len(self.checks))
        return self.checks, self.artifacts

    @abstractmethod
    def run_checks(self):
        pass

    def check(self, name, value, expected, passed):
        logger.debug("Check %s: value=%r, expected=%r, passed=%r", name,
                     value, expected, passed)
        self.checks.append(check_result(name, value, expected, passed))
        return passed

    def write_table(self, filename, header, rows):
        write_csv(os.path.join(self._output_dir, filename), header, rows)
        self.artifacts.append(filename)
        return filename

    def write_document(self, filename, obj):
        write_json(os.path.join(self._output_dir, filename), obj)
        self.artifacts.append(filename)
        return filename
