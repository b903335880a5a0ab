import argparse
import re
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.fpgroups import parse_word
from a5verify.groups import phi_eval
from a5verify.moduli import build_generators
from a5verify.moduli import good_rep_check
from a5verify.moduli import universal_point
from a5verify.streams import set_streams

from .command import check_not_negative
from .command import Command
from .command import simple_main

_EXTRA = re.compile(r'x([0-9]+)$')


class KernelCheckCommand(Command):

    command = 'kernel-check'
    help = 'Check that words of Gamma_k lie in the kernel of phi'

    def __init__(self, args):
        super(KernelCheckCommand, self).__init__(args)
        self.k = args.k
        self.words = []
        for text in args.words:
            word = parse_word(text)
            for name in word.generators():
                match = _EXTRA.match(name)
                if name in ('a', 'b', 'c', 'd'):
                    continue
                if not match or int(match.group(1)) > self.k:
                    raise ValueError(
                        "Word '%s' uses '%s' which is not a generator of "
                        'Gamma_%d' % (text, name, self.k))
            self.words.append(word)
        self.good_rep = args.good_rep

    def generate_jobs(self):
        jobs = [
            job('phi(w%d) = 1' % i, self._kernel_check(word))
            for i, word in enumerate(self.words)]
        if self.good_rep:
            jobs.append(job('good representation', self.check_good_rep))
        return jobs

    def _kernel_check(self, word):
        def check():
            image = phi_eval(word)
            return check_result(
                image.is_identity(), "phi('%s') = %s" % (word, image),
                values={'image': image},
                reason=None if image.is_identity()
                else 'word is not in the kernel of phi')
        return check

    def check_good_rep(self):
        assignment = build_generators(universal_point(), self.k)
        result = good_rep_check(assignment, self.words, self.k)
        lines = ['%s: %s' % (name, 'yes' if passed else 'no')
                 for name, passed in result.checks]
        if result.conclusion:
            lines.append('the quotient does not map isomorphically to A5')
        return check_result(
            result.conclusion, '\n'.join(lines),
            values={name: passed for name, passed in result.checks},
            reason=None if result.conclusion
            else 'a hypothesis of the criterion fails')


def get_parser():
    parser = argparse.ArgumentParser(
        description='Evaluate words of Gamma_k in A5 with every x_i mapped '
        'to the identity', prog='a5v kernel-check')
    group = parser.add_argument_group('"kernel-check" command parameters')
    group.add_argument(
        'words', nargs='+', metavar='WORD',
        help='Words in a, b, c, d, x0..xk')
    group.add_argument(
        '--k', type=check_not_negative, metavar='N', default=0,
        help='Number of extra generators x1..xN')
    group.add_argument(
        '--good-rep', action='store_true', default=False,
        help='Also test the words against the representation at the '
        'universal point')
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, KernelCheckCommand, args)


if __name__ == '__main__':
    sys.exit(main())
