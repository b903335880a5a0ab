import argparse
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.fpgroups import coset_action
from a5verify.fpgroups import load_presentation
from a5verify.fpgroups import parse_word
from a5verify.fpgroups import todd_coxeter
from a5verify.streams import set_streams

from .command import add_max_cosets_argument
from .command import Command
from .command import simple_main
from .coset_enum import presentation_inputs


class WordIdentityCommand(Command):

    command = 'word-identity'
    help = 'Decide an identity of words in a finite presented group'

    def __init__(self, args):
        super(WordIdentityCommand, self).__init__(args)
        self.inputs.extend(presentation_inputs(args.file))
        self.presentation = load_presentation(args.file)
        self.lhs = parse_word(args.lhs)
        self.rhs = parse_word(args.rhs)
        known = set(self.presentation.generators)
        for word in (self.lhs, self.rhs):
            unknown = word.generators() - known
            if unknown:
                raise ValueError(
                    "Word '%s' uses unknown generators: %s" %
                    (word, ', '.join(sorted(unknown))))

    def generate_jobs(self):
        return [job('identity', self.check_identity)]

    def check_identity(self):
        table = todd_coxeter(self.presentation, (), self.max_cosets)
        action = coset_action(table)
        lhs, rhs = action.image(self.lhs), action.image(self.rhs)
        equal = lhs == rhs
        output = '%s %s %s in the action on %d cosets' % (
            self.lhs, '=' if equal else '!=', self.rhs, len(table))
        return check_result(
            equal, output, values={
                'cosets': len(table), 'lhs': lhs, 'rhs': rhs},
            reason=None if equal else 'the words differ')


def get_parser():
    parser = argparse.ArgumentParser(
        description='Compare two words in the regular permutation action '
        'of a finite presented group', prog='a5v word-identity')
    group = parser.add_argument_group('"word-identity" command parameters')
    group.add_argument(
        'file', metavar='FILE',
        help="Presentation file or 'builtin:NAME'")
    group.add_argument('lhs', metavar='LHS', help='Left hand side word')
    group.add_argument('rhs', metavar='RHS', help='Right hand side word')
    add_max_cosets_argument(group)
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, WordIdentityCommand, args)


if __name__ == '__main__':
    sys.exit(main())
