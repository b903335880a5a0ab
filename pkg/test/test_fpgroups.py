import os
import shutil
import tempfile
import unittest

from a5verify.builtin import presentation
from a5verify.builtin import presentation_names
from a5verify.fpgroups import coset_action
from a5verify.fpgroups import CosetBudgetExceeded
from a5verify.fpgroups import exponent_matrix
from a5verify.fpgroups import FreeWord
from a5verify.fpgroups import load_presentation
from a5verify.fpgroups import normal_closure_order_check
from a5verify.fpgroups import NormalizationError
from a5verify.fpgroups import normalize_relators
from a5verify.fpgroups import parse_relator
from a5verify.fpgroups import parse_word
from a5verify.fpgroups import Presentation
from a5verify.fpgroups import PresentationError
from a5verify.fpgroups import todd_coxeter
from a5verify.fpgroups import verify_word_identity
from a5verify.fpgroups import WordSyntaxError


class TestWords(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(str(parse_word('(b a c)^3')),
                         'b a c b a c b a c')
        self.assertEqual(parse_word('a a^-1 b'), parse_word('b'))
        self.assertEqual(str(parse_word('1')), '1')
        self.assertEqual(str(parse_word('x10^-2 * y_v1')), 'x10^-2 y_v1')
        self.assertEqual(parse_word('(a b)^-1'), parse_word('b^-1 a^-1'))
        for text in ('a^', '(a b', 'a + b', 'a)'):
            with self.assertRaises(WordSyntaxError):
                parse_word(text)

    def test_relator_equation(self):
        self.assertEqual(
            parse_relator('x0 a x0^-1 = d'), parse_word('x0 a x0^-1 d^-1'))

    def test_word_operations(self):
        w = parse_word('a^2 b^-1 a')
        self.assertEqual(len(w), 4)
        self.assertEqual(w.exponent_sum('a'), 3)
        self.assertEqual(w.generators(), {'a', 'b'})
        self.assertEqual(
            w.substitute({'b': parse_word('c d')}),
            parse_word('a^2 d^-1 c^-1 a'))
        self.assertEqual(
            parse_word('a b a^-1').cyclically_reduced(), parse_word('b'))
        self.assertEqual(
            parse_word('a b c').cyclic_key(),
            parse_word('c^-1 b^-1 a^-1').cyclic_key())
        self.assertEqual(
            parse_word('a b c').cyclic_key(), parse_word('b c a').cyclic_key())
        self.assertFalse(FreeWord())


class TestPresentation(unittest.TestCase):

    def test_parse(self):
        p = Presentation.parse('# comment\ngens: x, y\nx^2\n\ny^3 # cube\n')
        self.assertEqual(p.generators, ('x', 'y'))
        self.assertEqual(len(p.relators), 2)
        self.assertEqual(p.to_text(), 'gens: x y\nx^2\ny^3\n')

    def test_errors(self):
        with self.assertRaises(PresentationError):
            Presentation.parse('x^2\n')
        with self.assertRaises(PresentationError):
            Presentation.parse('gens: x\ny^2\n')
        with self.assertRaises(PresentationError):
            Presentation.parse('gens: x x\n')
        with self.assertRaises(PresentationError):
            presentation('no-such-group')

    def test_load_files(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'z3.yaml')
            with open(path, 'w') as h:
                h.write('gens: [t]\nrelators: ["t^3"]\n')
            p = load_presentation(path)
            self.assertEqual(p.generators, ('t',))
            self.assertEqual(len(todd_coxeter(p)), 3)
            path = os.path.join(directory, 'z4.txt')
            with open(path, 'w') as h:
                h.write('gens: t\nt^4\n')
            self.assertEqual(len(todd_coxeter(load_presentation(path))), 4)
        finally:
            shutil.rmtree(directory)

    def test_builtins(self):
        self.assertEqual(
            presentation_names(),
            ['a5-xy', 'gamma-os-a5', 'gamma0', 'gtilde-a5', 'lemma-bac3',
             'poincare'])
        p = load_presentation('builtin:lemma-bac3')
        self.assertEqual(p.name, 'lemma-bac3')
        self.assertEqual(p.generators, ('a', 'b', 'c'))


class TestCosetEnumeration(unittest.TestCase):

    def test_group_orders(self):
        self.assertEqual(len(todd_coxeter(presentation('a5-xy'))), 60)
        self.assertEqual(len(todd_coxeter(presentation('lemma-bac3'))), 60)

    def test_binary_extension(self):
        table = todd_coxeter(presentation('gtilde-a5'))
        self.assertEqual(len(table), 7200)
        self.assertTrue(table.certify())

    def test_subgroup_index(self):
        self.assertEqual(
            len(todd_coxeter(presentation('a5-xy'), ['x'])), 30)
        table = todd_coxeter(presentation('lemma-bac3'), ['a', 'b'])
        self.assertEqual(table.index, 5)
        self.assertEqual(table.trace(0, parse_word('a b a')), 0)

    def test_dihedral(self):
        p = Presentation(['r', 's'], ['r^5', 's^2', '(r s)^2'])
        table = todd_coxeter(p)
        self.assertEqual(len(table), 10)
        self.assertGreaterEqual(table.stats['defined'], 10)

    def test_budget(self):
        with self.assertRaises(CosetBudgetExceeded):
            todd_coxeter(presentation('a5-xy'), max_cosets=10)

    def test_action(self):
        action = coset_action(todd_coxeter(presentation('a5-xy')))
        self.assertEqual(action.degree, 60)
        self.assertTrue(action.relators_trivial())
        self.assertTrue(action.is_transitive())
        self.assertEqual(action.group().order, 60)
        self.assertEqual(action.image('x^2').is_identity(), True)
        self.assertEqual(action.image('x').is_identity(), False)

    def test_word_identity(self):
        p = presentation('lemma-bac3')
        self.assertTrue(verify_word_identity(
            p, '(b c)(c a)^2(b c)(c a)^-2(b c)(c a)', 'a'))
        self.assertFalse(verify_word_identity(p, 'a', 'b'))


class TestExponentMatrix(unittest.TestCase):

    def test_matrix(self):
        relators = [parse_word('a^2 b'), parse_word('a b a^-2 b')]
        matrix = exponent_matrix(relators, ['a', 'b'])
        self.assertEqual(matrix.rows, [[2, 1], [-1, 2]])
        self.assertEqual(str(matrix), ' a  b\n 2  1\n-1  2')

    def test_normalize(self):
        relators = [parse_word('a^2 b'), parse_word('a b')]
        result = normalize_relators(relators, ['a', 'b'])
        self.assertEqual(result.matrix.rows, [[1, 0], [0, 1]])
        self.assertTrue(result.log)
        for move in result.log:
            self.assertIn(move[0], ('multiply', 'invert', 'swap'))

    def test_not_unimodular(self):
        relators = [parse_word('a^2'), parse_word('b^2')]
        with self.assertRaises(NormalizationError):
            normalize_relators(relators, ['a', 'b'])
        with self.assertRaises(NormalizationError):
            normalize_relators(relators[:1], ['a', 'b'])

    def test_normal_closure(self):
        p = Presentation(['a', 'b'], ['a^6', 'b^6', 'a b a^-1 b^-1'])
        words = [parse_word('a^2 b'), parse_word('a b')]
        self.assertEqual(normal_closure_order_check(p, words, ['a', 'b']),
                         (1, 1))


if __name__ == '__main__':
    unittest.main()
