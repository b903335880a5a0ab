import argparse
import sys
import threading

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.moduli import golden_universal_point
from a5verify.moduli import solve_universal
from a5verify.streams import set_streams
from a5verify.symbolic import VARIABLES

from .command import Command
from .command import simple_main

# signs of the coordinates of the universal point
EXPECTED_SIGNS = {
    'alpha1': -1,
    'beta1': 1,
    'alpha2': -1,
    'beta2': 1,
    'alpha3': -1,
    'beta3': 1,
}


class SolveUniversalCommand(Command):

    command = 'solve-universal'
    help = 'Solve for the unique point killing x0 and (bac)^3'

    def __init__(self, args):
        super(SolveUniversalCommand, self).__init__(args)
        self._lock = threading.Lock()
        self._solution = None

    def solution(self):
        with self._lock:
            if self._solution is None:
                self._solution = solve_universal()
            return self._solution

    def generate_jobs(self):
        return [
            job('solve', self.check_solve),
            job('golden table', self.check_golden, depends=['solve']),
            job('circle relations', self.check_circle, depends=['solve']),
            job('signs', self.check_signs, depends=['solve']),
        ]

    def check_solve(self):
        point, certificate = self.solution()
        lines = []
        for step in certificate.steps:
            lines.append(
                '%s from %s%s: %s = %s' % (
                    step.variable, step.equation, step.entry, step.variable,
                    step.value.to_decimal(self.digits)))
        values = dict(point.as_dict())
        values['divisors'] = dict(certificate.divisors)
        return check_result(True, '\n'.join(lines), values=values)

    def check_golden(self):
        point, _ = self.solution()
        golden = golden_universal_point()
        differing = [
            name for name, x, y in zip(VARIABLES, point.values, golden.values)
            if x != y]
        if differing:
            return check_result(
                False, 'differs in %s' % ', '.join(differing),
                reason='solution differs from the radical expressions')
        return check_result(
            True, 'all %d coordinates equal the radical expressions' %
            len(VARIABLES))

    def check_circle(self):
        _, certificate = self.solution()
        passed = all(certificate.circle)
        return check_result(
            passed, 'alpha_i^2 + beta_i^2 = 1: %s' % ', '.join(
                'yes' if ok else 'no' for ok in certificate.circle),
            values={'circle': list(certificate.circle)})

    def check_signs(self):
        point, _ = self.solution()
        signs = {
            name: value.sign() for name, value in point.as_dict().items()}
        wrong = [
            name for name in VARIABLES if signs[name] != EXPECTED_SIGNS[name]]
        return check_result(
            not wrong, ', '.join(
                '%s %s' % (name, '<' if signs[name] < 0 else '>') + ' 0'
                for name in VARIABLES),
            values={'signs': signs},
            reason='unexpected sign of %s' % ', '.join(wrong) if wrong
            else None)


def get_parser():
    parser = argparse.ArgumentParser(
        description='Solve the universal equations x0 = 1 and (bac)^3 = 1 '
        'exactly', prog='a5v solve-universal')
    parser.add_argument_group('"solve-universal" command parameters')
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, SolveUniversalCommand, args)


if __name__ == '__main__':
    sys.exit(main())
