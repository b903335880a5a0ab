import argparse
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.fpgroups import coset_action
from a5verify.fpgroups import load_presentation
from a5verify.fpgroups import parse_relator
from a5verify.fpgroups import parse_word
from a5verify.fpgroups import todd_coxeter
from a5verify.streams import set_streams

from .command import add_max_cosets_argument
from .command import check_not_negative
from .command import Command
from .command import simple_main


def presentation_inputs(source):
    return [] if source.startswith('builtin:') else [source]


class CosetEnumCommand(Command):

    command = 'coset-enum'
    help = 'Enumerate the cosets of a subgroup of a presented group'

    def __init__(self, args):
        super(CosetEnumCommand, self).__init__(args)
        self.inputs.extend(presentation_inputs(args.file))
        presentation = load_presentation(args.file)
        if args.add:
            presentation = presentation.add_relators(
                [parse_relator(r) for r in args.add])
        self.presentation = presentation
        self.subgroup = [parse_word(w) for w in args.subgroup or []]
        self.expect = args.expect
        self.show_action = args.action

    def generate_jobs(self):
        return [job('enumerate', self.check_enumerate)]

    def check_enumerate(self):
        table = todd_coxeter(
            self.presentation, self.subgroup, self.max_cosets)
        index = len(table)
        key = 'index' if self.subgroup else 'order'
        lines = ['%s: %d' % (key, index)]
        values = {key: index}
        if self.show_action:
            action = coset_action(table)
            for name in self.presentation.generators:
                lines.append('%s -> %s' % (name, action.images[name]))
            values['action'] = action.images
        if self.expect is not None and index != self.expect:
            return check_result(
                False, '\n'.join(lines), values=values,
                reason='%s %d, expected %d' % (key, index, self.expect))
        return check_result(True, '\n'.join(lines), values=values)


def get_parser():
    parser = argparse.ArgumentParser(
        description='Enumerate cosets by Todd-Coxeter and certify the '
        'completed table', prog='a5v coset-enum')
    group = parser.add_argument_group('"coset-enum" command parameters')
    group.add_argument(
        'file', metavar='FILE',
        help="Presentation file or 'builtin:NAME'")
    group.add_argument(
        '--subgroup', nargs='*', metavar='WORD',
        help='Words generating the subgroup (default: trivial subgroup)')
    group.add_argument(
        '--add', nargs='*', metavar='RELATOR',
        help='Relators added to the presentation')
    group.add_argument(
        '--expect', type=check_not_negative, metavar='N',
        help='Fail unless the index is N')
    group.add_argument(
        '--action', action='store_true', default=False,
        help='Show the permutation action of the generators')
    add_max_cosets_argument(group)
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, CosetEnumCommand, args)


if __name__ == '__main__':
    sys.exit(main())
