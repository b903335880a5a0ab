import argparse
import sys
import threading

from a5verify import builtin
from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.fpgroups import parse_relator
from a5verify.fpgroups import todd_coxeter
from a5verify.gcomplex import BrownPresentation
from a5verify.gcomplex import load_complex
from a5verify.streams import set_streams

from .command import add_max_cosets_argument
from .command import check_not_negative
from .command import Command
from .command import simple_main


def add_complex_arguments(group):
    source = group.add_mutually_exclusive_group(required=True)
    source.add_argument(
        'file', metavar='FILE', nargs='?',
        help='Orbit complex as a YAML / JSON file')
    source.add_argument(
        '--builtin', choices=builtin.complex_names(),
        help='A built-in complex')


def complex_from_args(command, args):
    if args.builtin:
        return builtin.orbit_complex(args.builtin)
    command.inputs.append(args.file)
    return load_complex(args.file)


class BrownCommand(Command):

    command = 'brown'
    help = 'Brown presentation of the extension given by a complex'

    def __init__(self, args):
        super(BrownCommand, self).__init__(args)
        self.complex = complex_from_args(self, args)
        self.order = args.order or args.expect_order is not None
        self.expect_order = args.expect_order
        self.additions = [parse_relator(r) for r in args.add or []]
        self._lock = threading.Lock()
        self._brown = None

    def brown(self):
        with self._lock:
            if self._brown is None:
                self._brown = BrownPresentation(self.complex)
            return self._brown

    def generate_jobs(self):
        jobs = [job('presentation', self.check_presentation)]
        if self.order:
            jobs.append(job(
                'order', self.check_order, depends=['presentation']))
        return jobs

    def check_presentation(self):
        brown = self.brown()
        lines = ['raw: %d generators, %d relators' % (
            len(brown.raw.generators), len(brown.raw.relators))]
        for face, relator in zip(
                self.complex.faces, brown.raw.relators[-len(
                    self.complex.faces):] if self.complex.faces else []):
            lines.append('r_%s = %s' % (face.name, relator))
        lines.append(str(brown.presentation))
        return check_result(
            True, '\n'.join(lines), values={
                'generators': list(brown.presentation.generators),
                'relators': [str(r) for r in brown.presentation.relators],
            })

    def check_order(self):
        presentation = self.brown().presentation
        if self.additions:
            presentation = presentation.add_relators(self.additions)
        order = len(todd_coxeter(presentation, (), self.max_cosets))
        group_order = self.complex.group.order
        output = 'order: %d (kernel of order %s)' % (
            order, '%d' % (order // group_order)
            if order % group_order == 0 else 'not integral')
        values = {'order': order}
        if order % group_order:
            return check_result(
                False, output, values=values,
                reason='order is not a multiple of %d' % group_order)
        if self.expect_order is not None and order != self.expect_order:
            return check_result(
                False, output, values=values,
                reason='order %d, expected %d' % (order, self.expect_order))
        return check_result(True, output, values=values)


def get_parser():
    parser = argparse.ArgumentParser(
        description='Build the Brown presentation of the group extension '
        'acting on the universal cover of a complex', prog='a5v brown')
    group = parser.add_argument_group('"brown" command parameters')
    add_complex_arguments(group)
    group.add_argument(
        '--order', action='store_true', default=False,
        help='Enumerate the cosets of the trivial subgroup')
    group.add_argument(
        '--add', nargs='*', metavar='RELATOR',
        help='Relators added before enumerating')
    group.add_argument(
        '--expect-order', type=check_not_negative, metavar='N',
        help='Fail unless the order is N (implies --order)')
    add_max_cosets_argument(group)
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, BrownCommand, args)


if __name__ == '__main__':
    sys.exit(main())
