import argparse
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.moduli import build_generators
from a5verify.moduli import eval_word
from a5verify.moduli import load_point
from a5verify.moduli import RELATORS
from a5verify.moduli import universal_point
from a5verify.moduli import verify_relations
from a5verify.streams import set_streams

from .command import check_not_negative
from .command import Command
from .command import simple_main


class VerifyModuliCommand(Command):

    command = 'verify-moduli'
    help = 'Check the relators of Gamma_k on the representation moduli'

    def __init__(self, args):
        super(VerifyModuliCommand, self).__init__(args)
        self.k = args.k
        self.at = args.at
        if self.at is None:
            self.point = None
        elif self.at == 'zbad':
            self.point = universal_point()
        else:
            self.inputs.append(self.at)
            self.point = load_point(self.at)
        self.assignment = build_generators(self.point, self.k)

    def generate_jobs(self):
        jobs = []
        for name, text in RELATORS:
            jobs.append(job(
                'relator %s' % name, self._relator_check(name, text)))
        if self.at == 'zbad':
            for word in ['x0', '(b a c)^3'] + [
                    'x%d' % i for i in range(1, self.k + 1)]:
                jobs.append(job(
                    'universal %s = 1' % word, self._identity_check(word)))
        return jobs

    def _relator_check(self, name, text):
        def check():
            result, = verify_relations(self.assignment, [(name, text)])
            where = 'symbolically' if self.point is None else \
                'at the point'
            if result.passed:
                return check_result(
                    True, 'vanishes %s' % where,
                    values={'residual': 'zero'})
            return check_result(
                False, 'residual %s:\n%s' % (where, result.residual),
                values={'residual': str(result.residual)},
                reason="relator '%s' does not map to the identity" % name)
        return check

    def _identity_check(self, word):
        def check():
            image = eval_word(self.assignment, word)
            if image.is_identity():
                return check_result(True, 'maps to the identity')
            return check_result(
                False, str(image), values={'image': image},
                reason="'%s' does not map to the identity" % word)
        return check


def get_parser():
    parser = argparse.ArgumentParser(
        description='Verify that the matrices of the representation moduli '
        'satisfy every relator of Gamma_k', prog='a5v verify-moduli')
    group = parser.add_argument_group('"verify-moduli" command parameters')
    group.add_argument(
        '--k', type=check_not_negative, metavar='N', default=0,
        help='Number of extra free generators x1..xN')
    mode = group.add_mutually_exclusive_group()
    mode.add_argument(
        '--symbolic', action='store_const', dest='at', const=None,
        help='Verify over the polynomial ring (default)')
    mode.add_argument(
        '--at', metavar='zbad|FILE', default=None,
        help="Verify at the universal point 'zbad' or at a point read "
        'from a YAML / JSON file')
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, VerifyModuliCommand, args)


if __name__ == '__main__':
    sys.exit(main())
