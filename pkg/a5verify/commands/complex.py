import argparse
import sys

from a5verify.executor import check_result
from a5verify.executor import job
from a5verify.gcomplex import acyclicity_suite
from a5verify.gcomplex import expand
from a5verify.gcomplex import fixed_subcomplex
from a5verify.gcomplex import homology
from a5verify.gcomplex import index_table
from a5verify.gcomplex import is_reduced
from a5verify.gcomplex import orbit_is_forest
from a5verify.gcomplex import stabilizer_incomparability
from a5verify.gcomplex import verify_lemma23
from a5verify.groups import Perm
from a5verify.groups import PermGroup
from a5verify.groups import SubgroupLattice
from a5verify.streams import set_streams

from .brown import add_complex_arguments
from .brown import complex_from_args
from .command import Command
from .command import simple_main

OPERATIONS = (
    'homology', 'euler', 'fixed', 'reduced', 'indices', 'lemma23',
    'acyclicity')


def _describe(h):
    gens = ', '.join(str(g) for g in h.generators) or '()'
    return '<%s> of order %d' % (gens, h.order)


class ComplexCommand(Command):

    command = 'complex'
    help = 'Homology, fixed sets and indices of an orbit complex'

    def __init__(self, args):
        super(ComplexCommand, self).__init__(args)
        self.complex = complex_from_args(self, args)
        self.operations = args.op or ['homology']
        self.subgroup = None
        if 'fixed' in self.operations:
            if not args.subgroup:
                raise ValueError("Operation 'fixed' needs --subgroup")
            degree = self.complex.group.degree
            self.subgroup = PermGroup(
                [Perm.parse(g, degree) for g in args.subgroup], degree)
            if not self.subgroup.is_subgroup_of(self.complex.group):
                raise ValueError(
                    'Subgroup is not contained in the acting group')
        self._lattice = None

    def lattice(self):
        # built in generate_jobs, before the workers start
        return self._lattice

    def generate_jobs(self):
        if {'indices', 'lemma23', 'acyclicity'} & set(self.operations):
            self._lattice = SubgroupLattice(self.complex.group)
        return [
            job(op, getattr(self, 'check_' + op))
            for op in sorted(set(self.operations), key=OPERATIONS.index)]

    def check_homology(self):
        cells = expand(self.complex)
        result = homology(cells)
        counts = [cells.count(n) for n in range(3)]
        return check_result(
            True, 'cells: %d/%d/%d\n%s' % (tuple(counts) + (result,)),
            values={
                'cells': counts, 'betti': list(result.betti),
                'torsion': [list(t) for t in result.torsion],
                'acyclic': result.is_acyclic()})

    def check_euler(self):
        chi = expand(self.complex).euler_characteristic()
        return check_result(
            True, 'euler characteristic: %d' % chi, values={'euler': chi})

    def check_fixed(self):
        fixed = fixed_subcomplex(self.complex, self.subgroup)
        counts = [fixed.count(n) for n in range(3)]
        if fixed.is_empty():
            return check_result(
                True, 'fixed set of %s is empty' % _describe(self.subgroup),
                values={'cells': counts, 'status': 'empty'})
        result = homology(fixed)
        output = 'fixed set of %s: cells %d/%d/%d\n%s' % (
            (_describe(self.subgroup),) + tuple(counts) + (result,))
        return check_result(
            result.is_acyclic(), output,
            values={'cells': counts, 'betti': list(result.betti),
                    'status': 'acyclic' if result.is_acyclic()
                    else 'not acyclic'},
            reason=None if result.is_acyclic()
            else 'fixed set is neither empty nor acyclic')

    def check_reduced(self):
        forests = [
            e.name for i, e in enumerate(self.complex.edges)
            if orbit_is_forest(self.complex, i)]
        reduced = is_reduced(self.complex)
        incomparable = stabilizer_incomparability(self.complex)
        lines = [
            'reduced: %s' % ('yes' if reduced else
                             'no, forests: %s' % ', '.join(forests)),
            'vertex stabilizers incomparable: %s' %
            ('yes' if incomparable else 'no'),
        ]
        problems = []
        if not reduced:
            problems.append('edge orbits span forests')
        if not incomparable:
            problems.append('comparable vertex stabilizers')
        return check_result(
            reduced and incomparable, '\n'.join(lines),
            values={'reduced': reduced, 'incomparable': incomparable,
                    'forests': forests},
            reason=', '.join(problems) or None)

    def check_indices(self):
        lattice = self.lattice()
        family = lattice.solvable_family()
        lines = []
        values = {}
        for h, index in index_table(lattice, family):
            lines.append('i(%s) = %s' % (_describe(h), index))
            values[_describe(h)] = index
        return check_result(True, '\n'.join(lines), values=values)

    def check_lemma23(self):
        lattice = self.lattice()
        entries = verify_lemma23(
            self.complex, lattice.solvable_family(), lattice)
        lines = []
        for entry in entries:
            lines.append('%s: orbits %s, alternating sum %d, index %s%s' % (
                _describe(entry.subgroup),
                '/'.join(str(n) for n in entry.counts),
                entry.alternating_sum, entry.index,
                '' if entry.match else '  MISMATCH'))
        mismatches = [e for e in entries if not e.match]
        return check_result(
            not mismatches, '\n'.join(lines),
            values={'entries': len(entries), 'mismatches': len(mismatches)},
            reason='%d stabilizer classes do not match' % len(mismatches)
            if mismatches else None)

    def check_acyclicity(self):
        entries = acyclicity_suite(self.complex, self.lattice())
        statuses = {}
        for entry in entries:
            statuses[entry.status] = statuses.get(entry.status, 0) + 1
        lines = ['%s: %d subgroups' % (status, n)
                 for status, n in sorted(statuses.items())]
        bad = [_describe(e.subgroup) for e in entries
               if e.status == 'not acyclic']
        lines.extend('not acyclic: %s' % h for h in bad)
        return check_result(
            not bad, '\n'.join(lines),
            values={'subgroups': len(entries), 'statuses': statuses},
            reason='%d fixed sets are not acyclic' % len(bad) if bad
            else None)


def get_parser():
    parser = argparse.ArgumentParser(
        description='Equivariant cellular computations on an orbit complex',
        prog='a5v complex')
    group = parser.add_argument_group('"complex" command parameters')
    add_complex_arguments(group)
    group.add_argument(
        '--op', action='append', choices=OPERATIONS,
        help='Operation to run, may be repeated (default: homology)')
    group.add_argument(
        '--subgroup', nargs='*', metavar='PERM',
        help="Generators in cycle notation for '--op fixed'")
    return parser


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    parser = get_parser()
    return simple_main(parser, ComplexCommand, args)


if __name__ == '__main__':
    sys.exit(main())
