from __future__ import print_function, unicode_literals

from degenlab.constants import ALL_SUITES, RADIUS_RATIO


def _add_common_arguments(subparser):
    subparser.add_argument("-c", "--config", type=str,
                           help="Path to a YAML or JSON run configuration")
    subparser.add_argument("-o", "--output-dir", type=str,
                           help="Directory of the report and artifacts, "
                                "defaults to $DEGENLAB_OUTPUT_DIR or "
                                "./degenlab_reports")
    subparser.add_argument("--seed", type=int,
                           help="Seed of the random draws")
    subparser.add_argument("-v", "--verbosity", action="count", default=0,
                           help="Increase output verbosity")


def _add_suite_parser(subparsers, formatter_class, suite, help_text,
                      aliases=()):
    subparser = subparsers.add_parser(
        suite, aliases=list(aliases), formatter_class=formatter_class,
        help=help_text)
    _add_common_arguments(subparser)
    subparser.set_defaults(func=_run_checks, suite=suite)
    return subparser


def add_cylinder_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "cyl",
        "Injectivity radius bounds and collar function of the cylinder")
    subparser.add_argument("--H", type=float, help="Cylinder half-height")
    subparser.add_argument("--a", type=float, help="Band fraction")
    subparser.add_argument("--samples", type=int,
                           help="Number of time samples in [0, 1]")
    subparser.add_argument("--collar-grid", type=int,
                           help="Number of collar length samples")
    subparser.add_argument("--naive-dps", type=int,
                           help="Digits of the literal collar formula")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_stretch_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "stretch",
        "Beltrami coefficients and dilatations of stretch maps")
    subparser.add_argument("--heights", type=float, nargs="+",
                           help="Half-heights of the checked cylinders")
    subparser.add_argument("--t", type=float, help="Stretch time")
    subparser.add_argument("--max-stage", type=int,
                           help="Largest iterated stage j")
    subparser.add_argument("--fd-step", type=float,
                           help="Finite-difference step")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_david_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "david",
        "Budget selection and David certificate")
    subparser.add_argument("--stages", type=int, help="Number of stages")
    subparser.add_argument("--exponent", type=float,
                           help="Exponent of the exponential integrability")
    subparser.add_argument("--eps-grid", type=float, nargs="+",
                           help="Values of eps where the certificate is "
                                "checked")
    return subparser


def add_bounds_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "bounds",
        "Convergence series of the Bers-norm steps and Wolpert bracketing",
        aliases=["series"])
    subparser.add_argument("--C", type=float,
                           help="Constant of the step bound")
    subparser.add_argument("--L0", type=float,
                           help="Initial injectivity radius bound")
    ratio_group = subparser.add_mutually_exclusive_group()
    ratio_group.add_argument("--ratio", type=float,
                             help="Ratio between consecutive radius bounds")
    ratio_group.add_argument("--ratio-default", dest="ratio",
                             action="store_const", const=RADIUS_RATIO,
                             help="Use the ratio 2 sqrt(2) / 3")
    subparser.add_argument("--J", type=int, help="Number of stages")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_solver_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "solve",
        "Grid Beltrami solver and convergence to the identity")
    subparser.add_argument("--H", type=float, help="Cylinder half-height")
    subparser.add_argument("--nx", type=int, help="Number of grid columns")
    subparser.add_argument("--ny", type=int, help="Number of grid rows")
    subparser.add_argument("--stages", type=int, nargs="+",
                           help="Stages n of the convergence experiment")
    subparser.add_argument("--experiment-grid", type=int,
                           help="Grid size of the convergence experiment")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_schwarzian_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "schwarzian",
        "Schwarzian derivatives, Bers-norm counterexample and derivative "
        "kernel")
    subparser.add_argument("--lambda", dest="lambdas", type=float,
                           nargs="+", help="Values of lambda in [0, 1)")
    subparser.add_argument("--grid", type=int,
                           help="Radial and angular size of the norm grid")
    subparser.add_argument("--fd-points", type=int,
                           help="Number of finite-difference sample points")
    subparser.add_argument("--kernel-cells", type=int,
                           help="Cells per side of the kernel quadrature")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_pudding_parser(subparsers, formatter_class):
    subparser = _add_suite_parser(
        subparsers, formatter_class, "pudding",
        "L1 domination of Laurent series on nested annuli")
    subparser.add_argument("--r1", type=float)
    subparser.add_argument("--r2", type=float)
    subparser.add_argument("--R", type=float)
    subparser.add_argument("--random-series", type=int,
                           help="Number of random Laurent series")
    subparser.add_argument("--tolerance", type=float)
    return subparser


def add_all_parser(subparsers, formatter_class):
    return _add_suite_parser(subparsers, formatter_class, ALL_SUITES,
                             "Run every check suite")


# parsed arguments which are not suite parameters
_RUN_ARGUMENTS = {"func", "suite", "config", "output_dir", "seed",
                  "verbosity", "version"}


def _run_checks(args_namespace):
    overrides = {k: v for k, v in vars(args_namespace).items()
                 if k not in _RUN_ARGUMENTS and v is not None}
    return run_checks(args_namespace.suite, overrides,
                      args_namespace.config, args_namespace.output_dir,
                      args_namespace.seed, args_namespace.verbosity)


def run_checks(suite, overrides=None, config_path=None, output_dir=None,
               seed=None, verbose=0):
    """Runs a check suite and prints a summary of its checks

    Args:
        suite (str): suite name, or ``"all"``
        overrides (dict, optional): suite parameters taking precedence over
            the configuration file
        config_path (str, optional): YAML or JSON file with the keys
            ``suite_config``, ``output_dir`` and ``seed``

    Returns:
        dict: the run report
    """
    from degenlab.cli.utils import PrettyPrintLevel, pretty_print, \
        set_verbosity
    from degenlab.common.log_utils import format_table
    from degenlab.configs import RunConfig, load_config_file
    from degenlab.runner import run

    set_verbosity(verbose)
    file_config = load_config_file(config_path) if config_path else dict()
    suite_config = dict(file_config.get("suite_config") or dict())
    suite_config.update(overrides or dict())
    config = RunConfig(
        suite, suite_config,
        output_dir=output_dir or file_config.get("output_dir"),
        seed=seed if seed is not None else file_config.get("seed"))

    report = run(config)
    suite_reports = report.get("suites", [report])
    for suite_report in suite_reports:
        rows = [[c["name"], c["value"], c["expected"], c["passed"]]
                for c in suite_report["checks"]]
        passed = suite_report["passed"]
        pretty_print(
            format_table(["check", "value", "expected", "passed"], rows),
            title="Suite %s %s" % (suite_report["suite"],
                                   "passed" if passed else "failed"),
            level=PrettyPrintLevel.SUCCESS if passed
            else PrettyPrintLevel.ERROR)
    print("Reports written to %s" % config.output_dir)
    return report
