import argparse
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.fpgroups import exponent_matrix
from a5verify.fpgroups import load_presentation
from a5verify.fpgroups import NormalizationError
from a5verify.fpgroups import normalize_relators
from a5verify.linalg import int_rank_det
from a5verify.streams import set_streams

from .command import check_greater_zero
from .command import Command
from .command import simple_main
from .coset_enum import presentation_inputs


class ExponentMatrixCommand(Command):

    command = 'exponent-matrix'
    help = 'Exponent sums of the relators in chosen generators'

    def __init__(self, args):
        super(ExponentMatrixCommand, self).__init__(args)
        self.inputs.extend(presentation_inputs(args.file))
        self.presentation = load_presentation(args.file)
        self.variables = [
            v for text in args.vars for v in text.replace(',', ' ').split()]
        unknown = set(self.variables) - set(self.presentation.generators)
        if unknown:
            raise ValueError(
                'Unknown generators: %s' % ', '.join(sorted(unknown)))
        self.relators = list(self.presentation.relators)
        if args.relators:
            missing = [i for i in args.relators if i > len(self.relators)]
            if missing:
                raise ValueError(
                    'Presentation has %d relators, no relator %d' %
                    (len(self.relators), missing[0]))
            self.relators = [self.relators[i - 1] for i in args.relators]
        self.normalize = args.normalize

    def generate_jobs(self):
        jobs = [job('exponent matrix', self.check_matrix)]
        if self.normalize:
            jobs.append(job('normalize', self.check_normalize))
        return jobs

    def check_matrix(self):
        matrix = exponent_matrix(self.relators, self.variables)
        rank, det = int_rank_det(matrix)
        square = matrix.nrows == matrix.ncols
        output = '%s\nrank %d%s' % (
            matrix, rank, ', det %d' % det if square else '')
        values = {'matrix': matrix, 'rank': rank}
        if square:
            values['det'] = det
        invertible = square and det != 0
        return check_result(
            invertible, output, values=values,
            reason=None if invertible
            else 'exponent matrix is not invertible over Q')

    def check_normalize(self):
        try:
            result = normalize_relators(self.relators, self.variables)
        except NormalizationError as e:
            return check_result(False, str(e), reason=str(e))
        lines = ['%d moves' % len(result.log)]
        lines.extend(
            'w%d = %s' % (i, w) for i, w in enumerate(result.relators))
        return check_result(
            True, '\n'.join(lines), values={
                'relators': [str(w) for w in result.relators],
                'moves': [list(move) for move in result.log]})


def get_parser():
    parser = argparse.ArgumentParser(
        description='Compute the total exponents of chosen generators in '
        'the relators of a presentation', prog='a5v exponent-matrix')
    group = parser.add_argument_group('"exponent-matrix" command parameters')
    group.add_argument(
        'file', metavar='FILE',
        help="Presentation file or 'builtin:NAME'")
    group.add_argument(
        '--vars', nargs='+', required=True, metavar='NAME',
        help='Generators giving the columns')
    group.add_argument(
        '--relators', nargs='*', type=check_greater_zero, metavar='I',
        help='1-based indices of the relators giving the rows '
        '(default: all)')
    group.add_argument(
        '--normalize', action='store_true', default=False,
        help='Reduce the matrix to the identity by moves on the relators')
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, ExponentMatrixCommand, args)


if __name__ == '__main__':
    sys.exit(main())
