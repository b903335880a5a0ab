import argparse
from fractions import Fraction
import sys

from a5verify.exactfield import named_constants
from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.moduli import universal_point
from a5verify.quat import choose_signs
from a5verify.quat import jacobian_closed_form
from a5verify.quat import jacobian_determinant
from a5verify.quat import jacobian_jet
from a5verify.quat import jet_word_eval
from a5verify.quat import purity_table
from a5verify.streams import set_streams

from .command import check_not_negative
from .command import Command
from .command import simple_main

PURITY_WORDS = ('x0', '(b a c)^3')


def expected_block_columns():
    """Columns of the 3x3 block at the universal point."""
    point = universal_point()
    k = named_constants()
    alpha1, beta1 = point.alphas[0], point.betas[0]
    half = Fraction(1, 2)
    return [
        (0, 0, half),
        (-beta1 * half, -alpha1 * half, 0),
        (0, -k['sqrt6'] / 6, k['sqrt3'] / 6),
    ]


def expected_determinant():
    return named_constants()['sqrt6'] * universal_point().betas[0] / 24


class JacobianCommand(Command):

    command = 'jacobian'
    help = 'Jacobian of the lifted word map at t_bad'

    def __init__(self, args):
        super(JacobianCommand, self).__init__(args)
        self.k = args.k
        self.method = args.method

    def generate_jobs(self):
        jobs = []
        if self.method in ('closed', 'both'):
            jobs.append(job('closed form', self.check_closed_form))
        if self.method in ('jet', 'both'):
            jobs.append(job('lift signs', self.check_signs))
            jobs.append(job(
                'jet', self.check_jet, depends=['lift signs']))
            jobs.append(job(
                'purity', self.check_purity, depends=['lift signs']))
        if self.method == 'both':
            jobs.append(job(
                'agreement', self.check_agreement,
                depends=['closed form', 'jet']))
        return jobs

    def check_closed_form(self):
        m = jacobian_closed_form(self.k)
        det = jacobian_determinant(self.k)
        problems = []
        for c, column in enumerate(expected_block_columns()):
            if any(m[r, c] != column[r] for r in range(3)):
                problems.append('column %d' % (c + 1))
        if det != expected_determinant():
            problems.append('determinant')
        if not det:
            problems.append('singular')
        output = '%s\ndet = %s' % (
            _render(m, self.digits), det.to_decimal(self.digits))
        return check_result(
            not problems, output, values={'matrix': m, 'det': det},
            reason='closed form differs in %s' % ', '.join(problems)
            if problems else None)

    def check_signs(self):
        signs = choose_signs()
        values = {}
        for word in PURITY_WORDS:
            values[word] = jet_word_eval(word, self.k).value
        wrong = [word for word, value in values.items() if value != 1]
        return check_result(
            not wrong, 'signs: %s' % ' '.join(
                '%s%s' % ('+' if s > 0 else '-', name)
                for name, s in signs.items()),
            values={'signs': signs},
            reason='%s not 1 at t_bad' % ', '.join(wrong) if wrong else None)

    def check_jet(self):
        m = jacobian_jet(self.k)
        block = [[m[r, c] for c in range(3)] for r in range(3)]
        tail = all(
            m[r, c] == (1 if r == c else 0)
            for r in range(m.shape[0]) for c in range(m.shape[1])
            if r >= 3 or c >= 3)
        output = _render(m, self.digits)
        return check_result(
            tail, output, values={'block': block},
            reason=None if tail else 'jet matrix is not block diagonal')

    def check_agreement(self):
        closed = jacobian_closed_form(self.k)
        jet = jacobian_jet(self.k)
        n = closed.shape[0]
        differing = [
            (r, c) for r in range(n) for c in range(n)
            if closed[r, c] != jet[r, c]]
        if differing:
            return check_result(
                False, 'entries differ: %s' % ', '.join(
                    '(%d, %d)' % (r + 1, c + 1) for r, c in differing),
                reason='closed form and jet matrices differ')
        return check_result(True, 'all %d entries equal' % (n * n))

    def check_purity(self):
        lines = []
        impure = []
        for entry in purity_table(PURITY_WORDS, self.k):
            pure = all(entry.pure)
            if not pure:
                impure.append(str(entry.word))
            lines.append('%s: value %s, partials %s' % (
                entry.word, entry.value, 'pure' if pure else 'not pure'))
        return check_result(
            not impure, '\n'.join(lines),
            reason='partials of %s are not pure' % ', '.join(impure)
            if impure else None)


def _render(m, digits):
    return '\n'.join(
        '[ %s ]' % '  '.join(
            x.to_decimal(min(digits, 12)) if hasattr(x, 'to_decimal')
            else str(x) for x in row)
        for row in m.rows)


def get_parser():
    parser = argparse.ArgumentParser(
        description='Compute the Jacobian of the lifted word map at t_bad',
        prog='a5v jacobian')
    group = parser.add_argument_group('"jacobian" command parameters')
    group.add_argument(
        '--k', type=check_not_negative, metavar='N', default=0,
        help='Number of extra generators x1..xN')
    group.add_argument(
        '--method', choices=['closed', 'jet', 'both'], default='both',
        help='Closed form, exact jet computation or both compared')
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, JacobianCommand, args)


if __name__ == '__main__':
    sys.exit(main())
