from __future__ import unicode_literals

import logging
import os
from timeit import default_timer

from degenlab.checks import CheckSuite
from degenlab.common.io_utils import mkdir_p, write_json
from degenlab.constants import ALL_SUITES
from degenlab.report import combined_report, suite_report

logger = logging.getLogger(__name__)

REPORT_SUFFIX = "_report.json"


def report_path(output_dir, suite):
    return os.path.join(output_dir, suite + REPORT_SUFFIX)


def run_suite(name, suite_config, output_dir, seed):
    """Runs one registered suite and writes its JSON report

    Returns:
        dict: the suite report, see :func:`.suite_report`
    """
    suite = CheckSuite.by_name(name)(suite_config, random_state=seed)
    logger.info("Running suite %s", name)
    start = default_timer()
    checks, artifacts = suite.run(output_dir)
    elapsed = default_timer() - start
    report = suite_report(name, suite_config.to_dict(), checks, artifacts,
                          elapsed, seed)
    write_json(report_path(output_dir, name), report)
    logger.info("Suite %s %s in %.3fs", name,
                "passed" if report["passed"] else "FAILED", elapsed)
    return report


def run(config):
    """Runs the suite(s) named in a :class:`.RunConfig`

    One ``<suite>_report.json`` is written per suite in the output
    directory, next to the CSV artifacts it references. A run of every
    suite also writes ``all_report.json``, which gathers the suite reports.

    Returns:
        dict: the report of the run; its ``passed`` flag is True exactly
        when every check passed
    """
    mkdir_p(config.output_dir)
    start = default_timer()
    reports = [run_suite(name, suite_config, config.output_dir, config.seed)
               for name, suite_config in config.suite_configs]
    if config.suite != ALL_SUITES:
        return reports[0]
    report = combined_report(reports, default_timer() - start, config.seed)
    write_json(report_path(config.output_dir, ALL_SUITES), report)
    return report
