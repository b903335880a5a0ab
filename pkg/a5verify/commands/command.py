import argparse
import logging
from multiprocessing import cpu_count
import sys
import time

from a5verify.executor import ansi
from a5verify.executor import execute_jobs
from a5verify.executor import EXIT_BUDGET
from a5verify.executor import exit_code
from a5verify.executor import EXIT_INPUT_ERROR
from a5verify.executor import INPUT_ERRORS
from a5verify.executor import inputs_digest
from a5verify.executor import output_report
from a5verify.executor import output_results
from a5verify.executor import run_report
from a5verify.fpgroups import CosetBudgetExceeded
from a5verify.fpgroups import DEFAULT_MAX_COSETS


class Command(object):

    command = None
    help = None

    def __init__(self, args):
        self.debug = args.debug if 'debug' in args else False
        self.json = args.json if 'json' in args else False
        self.digits = args.digits if 'digits' in args else 30
        self.max_cosets = args.max_cosets \
            if 'max_cosets' in args else DEFAULT_MAX_COSETS
        # files whose content enters the report digest
        self.inputs = []

    def generate_jobs(self):
        raise NotImplementedError()


def check_greater_zero(value):
    try:
        value = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid int value: '%s'" % value)
    if value <= 0:
        raise argparse.ArgumentTypeError(
            "invalid positive int value: '%d'" % value)
    return value


def check_not_negative(value):
    try:
        value = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid int value: '%s'" % value)
    if value < 0:
        raise argparse.ArgumentTypeError(
            "invalid non-negative int value: '%d'" % value)
    return value


def add_common_arguments(parser):
    parser.formatter_class = argparse.ArgumentDefaultsHelpFormatter
    group = parser.add_argument_group('Common parameters')
    group.add_argument(
        '--debug', action='store_true', default=False,
        help='Show debug messages')
    try:
        default_workers = cpu_count()
    except NotImplementedError:
        default_workers = 4
    group.add_argument(
        '-w', '--workers', type=check_greater_zero, metavar='N',
        default=default_workers, help='Number of parallel worker threads')
    group.add_argument(
        '--json', action='store_true', default=False,
        help='Output the run report as JSON')
    group.add_argument(
        '--digits', type=check_not_negative, metavar='D', default=30,
        help='Digits of the decimal rendering of exact numbers')


def add_max_cosets_argument(group):
    group.add_argument(
        '--max-cosets', type=check_greater_zero, metavar='N',
        default=DEFAULT_MAX_COSETS,
        help='Abort coset enumeration beyond N live cosets')


def print_error(message):
    from a5verify.streams import stderr
    print(ansi('redf') + str(message) + ansi('reset'), file=stderr)


def simple_main(parser, command_class, args=None):
    add_common_arguments(parser)
    argv = list(sys.argv[1:] if args is None else args)
    args = parser.parse_args(argv)
    if args.debug:
        logging.getLogger('a5verify').setLevel(logging.DEBUG)

    start = time.time()
    try:
        command = command_class(args)
        jobs = command.generate_jobs()
    except CosetBudgetExceeded as e:
        print_error(e)
        return EXIT_BUDGET
    except INPUT_ERRORS as e:
        print_error(e)
        return EXIT_INPUT_ERROR

    results = execute_jobs(
        jobs, show_progress=not args.json, number_of_workers=args.workers,
        debug_jobs=args.debug)

    if args.json:
        digest = inputs_digest(
            [command.command] + argv, command.inputs)
        output_report(run_report(
            command.command, digest, results,
            round(time.time() - start, 3), digits=args.digits))
    else:
        output_results(results)
    return exit_code(results)
