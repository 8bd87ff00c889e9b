from __future__ import print_function, unicode_literals

import argparse
import sys


class Formatter(argparse.ArgumentDefaultsHelpFormatter):
    def __init__(self, prog):
        super(Formatter, self).__init__(prog, max_help_position=35, width=150)


def get_arg_parser():
    from degenlab.cli.suites import (
        add_all_parser, add_bounds_parser, add_cylinder_parser,
        add_david_parser, add_pudding_parser, add_schwarzian_parser,
        add_solver_parser, add_stretch_parser)

    arg_parser = argparse.ArgumentParser(
        description="degenlab command line interface",
        prog="python -m degenlab", formatter_class=Formatter)
    arg_parser.add_argument("--version", action="store_true",
                            help="Print package version")
    subparsers = arg_parser.add_subparsers(
        title="available commands", metavar="command [options ...]")
    add_cylinder_parser(subparsers, formatter_class=Formatter)
    add_stretch_parser(subparsers, formatter_class=Formatter)
    add_david_parser(subparsers, formatter_class=Formatter)
    add_bounds_parser(subparsers, formatter_class=Formatter)
    add_solver_parser(subparsers, formatter_class=Formatter)
    add_schwarzian_parser(subparsers, formatter_class=Formatter)
    add_pudding_parser(subparsers, formatter_class=Formatter)
    add_all_parser(subparsers, formatter_class=Formatter)
    return arg_parser


def main(args=None):
    """Entry point of the ``degenlab`` command; exits with status 0 exactly
    when every check of the run passes"""
    from degenlab.__about__ import __version__
    from degenlab.cli.utils import PrettyPrintLevel, pretty_print
    from degenlab.exceptions import DegenLabError

    arg_parser = get_arg_parser()
    args = arg_parser.parse_args(args)

    if hasattr(args, "func"):
        try:
            report = args.func(args)
        except DegenLabError as exc:
            pretty_print(str(exc), title="%s" % type(exc).__name__,
                         level=PrettyPrintLevel.ERROR, exits=1)
            return
        sys.exit(0 if report["passed"] else 1)
    elif args.version:
        print(__version__)
    else:
        arg_parser.print_help()
        sys.exit(1)
