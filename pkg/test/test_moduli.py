from fractions import Fraction
import os
import shutil
import tempfile
import unittest

from a5verify.exactfield import canonical_field
from a5verify.exactfield import named_constants
from a5verify.moduli import build_generators
from a5verify.moduli import eval_word
from a5verify.moduli import golden_universal_point
from a5verify.moduli import good_rep_check
from a5verify.moduli import load_point
from a5verify.moduli import ModuliError
from a5verify.moduli import ModuliPoint
from a5verify.moduli import RELATORS
from a5verify.moduli import rotation_R
from a5verify.moduli import solve_universal
from a5verify.moduli import universal_point
from a5verify.moduli import verify_relations


class TestSolveUniversal(unittest.TestCase):

    def test_matches_radical_expressions(self):
        point, _ = solve_universal()
        golden = golden_universal_point()
        self.assertEqual(list(point.values), list(golden.values))

    def test_signs(self):
        point = universal_point()
        self.assertTrue(all(a.sign() < 0 for a in point.alphas))
        self.assertTrue(all(b.sign() > 0 for b in point.betas))

    def test_certificate(self):
        _, certificate = solve_universal()
        self.assertEqual(
            [(s.equation, s.entry, s.variable) for s in certificate.steps],
            [('eqX0', (3, 3), 'alpha1'), ('eqBAC3', (3, 3), 'beta1'),
             ('eqX0', (1, 3), 'beta3'), ('eqX0', (2, 2), 'beta2'),
             ('eqX0', (3, 2), 'alpha2'), ('eqX0', (2, 3), 'alpha3')])
        self.assertEqual(len(certificate.residuals), 18)
        self.assertFalse(any(certificate.residuals.values()))
        self.assertEqual(certificate.circle, [True, True, True])
        self.assertTrue(all(divisor for _, divisor in certificate.divisors))

    def test_alpha1(self):
        c = named_constants()
        self.assertEqual(
            universal_point().values[0], -c['sqrt6'] * (1 + c['sqrt5']) / 8)
        self.assertEqual(universal_point().values[0].to_decimal(6),
                         '-0.990839')


class TestRelations(unittest.TestCase):

    def test_relators_at_universal_point(self):
        assignment = build_generators(universal_point())
        results = verify_relations(assignment)
        self.assertEqual([r.name for r in results],
                         [name for name, _ in RELATORS])
        self.assertTrue(all(r.passed for r in results))
        self.assertTrue(eval_word(assignment, 'x0').is_identity())
        self.assertTrue(eval_word(assignment, '(b a c)^3').is_identity())

    def test_symbolic_relators(self):
        assignment = build_generators()
        self.assertTrue(assignment.symbolic)
        chosen = [r for r in RELATORS if r[0] in ('a^2', 'c^2', '(bc)^2')]
        results = verify_relations(assignment, chosen)
        self.assertEqual(len(results), 3)
        self.assertTrue(all(r.passed for r in results))

    def test_rational_point(self):
        half = [Fraction(3, 5), Fraction(4, 5)]
        field = canonical_field()
        point = ModuliPoint([field.rational(x) for x in half * 3])
        assignment = build_generators(point, k=2)
        self.assertEqual(assignment.generators(),
                         ['a', 'b', 'c', 'd', 'x0', 'x1', 'x2'])
        self.assertEqual(assignment.k, 2)
        self.assertTrue(eval_word(assignment, 'x2').is_identity())
        results = verify_relations(assignment)
        self.assertTrue(all(r.passed for r in results))
        x0 = eval_word(assignment, 'x0')
        self.assertFalse(x0.is_identity())

    def test_unknown_generator(self):
        assignment = build_generators(universal_point())
        with self.assertRaises(ModuliError):
            eval_word(assignment, 'x1')


class TestPoints(unittest.TestCase):

    def test_circle_violation(self):
        with self.assertRaises(ModuliError):
            ModuliPoint([1, 1, 1, 0, 1, 0])
        with self.assertRaises(ModuliError):
            ModuliPoint([1, 0])

    def test_data_round_trip(self):
        point = universal_point()
        copy = ModuliPoint.from_data(point.to_data())
        self.assertEqual(list(copy.values), list(point.values))

    def test_load_point(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'point.yaml')
            with open(path, 'w') as h:
                h.write(
                    'alpha1: 3/5\nbeta1: 4/5\nalpha2: 1\nbeta2: 0\n'
                    'alpha3: 0\nbeta3: -1\n')
            point = load_point(path)
            self.assertEqual(point.values[0], Fraction(3, 5))
            with open(path, 'w') as h:
                h.write(
                    'alpha1: 0.6\nbeta1: 0.8\nalpha2: 1\nbeta2: 0\n'
                    'alpha3: 0\nbeta3: -1\n')
            with self.assertRaises(ModuliError):
                load_point(path)
        finally:
            shutil.rmtree(directory)


class TestGoodRepresentation(unittest.TestCase):

    def test_nontrivial_extra_rotation(self):
        field = canonical_field()
        zero, one = field.zero(), field.one()
        quarter_turn = rotation_R(zero, one, zero, one)
        assignment = build_generators(universal_point(), 1).replace(
            'x1', quarter_turn)
        result = good_rep_check(assignment, ['x1^4'])
        self.assertTrue(result.conclusion)
        self.assertEqual([passed for _, passed in result.checks],
                         [True, True, True])

    def test_trivial_at_universal_point(self):
        assignment = build_generators(universal_point(), 1)
        result = good_rep_check(assignment, ['x1'])
        self.assertFalse(result.conclusion)
        result = good_rep_check(assignment, ['a'])
        self.assertFalse(result.checks[0][1])


if __name__ == '__main__':
    unittest.main()
