from __future__ import unicode_literals

import io
import logging
import os

import yaml
from future.utils import iteritems

from degenlab.common.from_dict import FromDict
from degenlab.configs.config import Config, SuiteConfig
from degenlab.constants import (
    ALL_SUITES, DEFAULT_OUTPUT_DIR, DEFAULT_SEED, OUTPUT_DIR_ENV)
from degenlab.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def default_output_dir():
    """Output directory from the ``DEGENLAB_OUTPUT_DIR`` environment
    variable, ``degenlab_reports`` otherwise"""
    return os.environ.get(OUTPUT_DIR_ENV) or DEFAULT_OUTPUT_DIR


class RunConfig(FromDict, Config):
    """Configuration of a run of one check suite, or of all of them

    Args:
        suite (str): name of a registered :class:`.CheckSuite`, or ``"all"``
        suite_config: configuration of the suite, either a
            :class:`.SuiteConfig` or its dict. For ``"all"`` it is a dict
            mapping suite names to their configurations; missing suites use
            their defaults.
        output_dir (str, optional): where the report and artifacts are
            written, see :func:`default_output_dir`
        seed (int, optional): seed of every random draw of the run, recorded
            in the report
    """

    def __init__(self, suite, suite_config=None, output_dir=None, seed=None):
        from degenlab.checks import CheckSuite

        available = CheckSuite.list_available()
        if suite != ALL_SUITES and suite not in available:
            raise InvalidInputError("Unknown suite %r, available suites: %s"
                                    % (suite, ", ".join(available
                                                        + [ALL_SUITES])))
        self.suite = suite
        if suite == ALL_SUITES:
            suite_config = suite_config or dict()
            unknown = sorted(set(suite_config) - set(available))
            if unknown:
                raise InvalidInputError("Unknown suites in configuration: %s"
                                        % ", ".join(unknown))
            self.suite_configs = [
                (name, _as_suite_config(name, suite_config.get(name)))
                for name in available]
        else:
            self.suite_configs = [(suite, _as_suite_config(suite,
                                                           suite_config))]
        self.output_dir = output_dir or default_output_dir()
        self.seed = DEFAULT_SEED if seed is None else int(seed)

    @property
    def suite_config(self):
        if self.suite == ALL_SUITES:
            return {name: config for name, config in self.suite_configs}
        return self.suite_configs[0][1]

    @classmethod
    def from_file(cls, path, **overrides):
        """Loads a YAML (or JSON) run configuration, with keyword overrides
        taking precedence when not None"""
        obj_dict = load_config_file(path)
        for key, value in iteritems(overrides):
            if value is not None:
                obj_dict[key] = value
        return cls.from_dict(obj_dict)

    def to_dict(self):
        if self.suite == ALL_SUITES:
            suite_config = {name: config.to_dict()
                            for name, config in self.suite_configs}
        else:
            suite_config = self.suite_configs[0][1].to_dict()
        return {
            "suite": self.suite,
            "suite_config": suite_config,
            "output_dir": self.output_dir,
            "seed": self.seed
        }


def _as_suite_config(name, config):
    from degenlab.checks import CheckSuite

    config_type = CheckSuite.by_name(name).config_type
    if config is None:
        return config_type()
    if isinstance(config, dict):
        return config_type.from_dict(config)
    if isinstance(config, SuiteConfig):
        if not isinstance(config, config_type):
            raise InvalidInputError("Suite %r expects a %s, got %s"
                                    % (name, config_type.__name__,
                                       type(config).__name__))
        return config
    raise TypeError("Expected a %s or a dict but received: %s"
                    % (config_type.__name__, type(config)))


def load_config_file(path):
    """Reads a YAML (or JSON, which YAML parses) configuration mapping"""
    with io.open(str(path), encoding="utf8") as f:
        obj_dict = yaml.safe_load(f)
    if obj_dict is None:
        return dict()
    if not isinstance(obj_dict, dict):
        raise InvalidInputError("Configuration file %s does not contain a "
                                "mapping" % path)
    return obj_dict
