from __future__ import unicode_literals

from degenlab.__about__ import __report_schema_version__
from degenlab.constants import (
    ARTIFACTS, CHECKS, CONFIG, ELAPSED_SECONDS, EXPECTED, NAME, PASSED, SEED,
    SCHEMA_VERSION, SUITE, SUITES, VALUE)


def check_result(name, value, expected, passed):
    """Creates the outcome of a single check of a suite

    *expected* is either the reference value or a description of the bound
    the value is checked against.

    Example:

        >>> check_result("inj_radius_upper_max", 0.465, "<= 0.5", True)
        {'name': 'inj_radius_upper_max', 'value': 0.465, 'expected': \
'<= 0.5', 'passed': True}
    """
    return {
        NAME: name,
        VALUE: value,
        EXPECTED: expected,
        PASSED: bool(passed)
    }


def suite_report(suite, config, checks, artifacts, elapsed_seconds, seed):
    """Creates the report of a suite run; it passes when every check passes

    Example:

        >>> from degenlab.common.utils import json_string
        >>> report = suite_report("bounds", {"J": 500}, [check_result(
        ...     "base_series", 1224.0, 1224.0, True)], ["ledger.csv"], 0.1, 0)
        >>> print(json_string(report, indent=4))
        {
            "artifacts": [
                "ledger.csv"
            ],
            "checks": [
                {
                    "expected": 1224.0,
                    "name": "base_series",
                    "passed": true,
                    "value": 1224.0
                }
            ],
            "config": {
                "J": 500
            },
            "elapsed_seconds": 0.1,
            "passed": true,
            "schema_version": "1.1",
            "seed": 0,
            "suite": "bounds"
        }
    """
    return {
        SCHEMA_VERSION: __report_schema_version__,
        SUITE: suite,
        CONFIG: config,
        CHECKS: checks,
        ARTIFACTS: artifacts,
        PASSED: all(c[PASSED] for c in checks),
        ELAPSED_SECONDS: elapsed_seconds,
        SEED: seed
    }


def combined_report(reports, elapsed_seconds, seed):
    """Report of a run of every suite"""
    return {
        SCHEMA_VERSION: __report_schema_version__,
        SUITE: "all",
        SUITES: reports,
        PASSED: all(r[PASSED] for r in reports),
        ELAPSED_SECONDS: elapsed_seconds,
        SEED: seed
    }
