from fractions import Fraction
import random
import unittest

from a5verify.exactfield import AlgebraicNumber
from a5verify.exactfield import canonical_field
from a5verify.exactfield import IncompatibleTowers
from a5verify.exactfield import named_constants
from a5verify.exactfield import QQ
from a5verify.exactfield import sqrt_or_adjoin
from a5verify.exactfield import try_sqrt


class TestTower(unittest.TestCase):

    def test_interning(self):
        self.assertIs(
            QQ.adjoin_sqrt(2, 'sqrt2'), QQ.adjoin_sqrt(2, 'sqrt2'))
        self.assertIs(canonical_field(), canonical_field())

    def test_degree(self):
        field = canonical_field()
        self.assertEqual(field.height, 4)
        self.assertEqual(field.degree, 16)
        self.assertEqual(field.names, ('sqrt2', 'sqrt3', 'sqrt5', 'u'))

    def test_adjoin_rejects_squares_and_negatives(self):
        with self.assertRaises(ValueError):
            QQ.adjoin_sqrt(4)
        with self.assertRaises(ValueError):
            QQ.adjoin_sqrt(-3)
        tower = QQ.adjoin_sqrt(2, 'sqrt2')
        with self.assertRaises(ValueError):
            tower.adjoin_sqrt(8)

    def test_description_round_trip(self):
        field = canonical_field()
        self.assertIs(
            type(field).from_description(field.describe()), field)


class TestAlgebraicNumber(unittest.TestCase):

    def setUp(self):
        self.tower = QQ.adjoin_sqrt(2, 'sqrt2')
        self.sqrt2 = self.tower.generator()

    def test_field_arithmetic(self):
        self.assertEqual(self.sqrt2 * self.sqrt2, 2)
        self.assertEqual((1 + self.sqrt2).inverse(), self.sqrt2 - 1)
        self.assertEqual(1 / self.sqrt2, self.sqrt2 / 2)
        self.assertEqual((1 + self.sqrt2) ** 2, 3 + 2 * self.sqrt2)
        self.assertEqual(self.sqrt2 ** -2, Fraction(1, 2))
        with self.assertRaises(ZeroDivisionError):
            self.tower.zero().inverse()

    def test_sign_and_order(self):
        self.assertEqual(self.sqrt2.sign(), 1)
        self.assertEqual((1 - self.sqrt2).sign(), -1)
        self.assertEqual((self.sqrt2 - self.sqrt2).sign(), 0)
        self.assertLess(Fraction(141421, 100000), self.sqrt2)
        self.assertLess(self.sqrt2, Fraction(141422, 100000))
        self.assertEqual(abs(1 - self.sqrt2), self.sqrt2 - 1)

    def test_sign_of_close_values(self):
        # 99 - 70 sqrt2 is about 0.00505
        self.assertEqual((99 - 70 * self.sqrt2).sign(), 1)
        self.assertEqual((70 * self.sqrt2 - 99).sign(), -1)

    def test_try_sqrt(self):
        self.assertEqual(try_sqrt(3 + 2 * self.sqrt2), 1 + self.sqrt2)
        self.assertEqual(try_sqrt(QQ.rational(Fraction(9, 4))), Fraction(3, 2))
        self.assertIsNone(try_sqrt(QQ.rational(2)))
        self.assertIsNone(try_sqrt(self.sqrt2))
        self.assertEqual(try_sqrt(self.tower.zero()), 0)
        with self.assertRaises(ValueError):
            try_sqrt(-self.sqrt2)

    def test_sqrt_or_adjoin(self):
        tower, root = sqrt_or_adjoin(self.tower.rational(8))
        self.assertIs(tower, self.tower)
        self.assertEqual(root, 2 * self.sqrt2)
        tower, root = sqrt_or_adjoin(self.tower.rational(3), name='sqrt3')
        self.assertEqual(tower.height, 2)
        self.assertEqual(root * root, 3)
        self.assertEqual(root.sign(), 1)

    def test_to_decimal(self):
        self.assertEqual(self.sqrt2.to_decimal(10), '1.4142135624')
        self.assertEqual(QQ.rational(Fraction(-1, 3)).to_decimal(3), '-0.333')
        self.assertEqual((-self.sqrt2).to_decimal(4), '-1.4142')

    def test_interval_contains_value(self):
        interval = self.sqrt2.to_interval(Fraction(1, 10 ** 6))
        self.assertLessEqual(interval.width, Fraction(1, 10 ** 6))
        self.assertLessEqual(interval.lo * interval.lo, 2)
        self.assertGreaterEqual(interval.hi * interval.hi, 2)

    def test_json_round_trip(self):
        constants = named_constants()
        value = constants['sin_2pi_5']
        copy = AlgebraicNumber.from_json(value.to_json())
        self.assertIs(copy.tower, value.tower)
        self.assertEqual(copy, value)

    def test_incompatible_towers(self):
        sqrt7 = QQ.adjoin_sqrt(7, 'sqrt7').generator()
        with self.assertRaises(IncompatibleTowers):
            sqrt7 + named_constants()['sqrt5']

    def test_embedding_into_extension(self):
        sqrt5 = named_constants()['sqrt5']
        self.assertEqual(named_constants()['sqrt2'], self.sqrt2)
        self.assertEqual((self.sqrt2 * sqrt5).tower, canonical_field())

    def test_str(self):
        self.assertEqual(str(1 - self.sqrt2), '1 - sqrt2')
        self.assertEqual(str(self.tower.zero()), '0')
        self.assertEqual(str(self.sqrt2 / 2), '1/2*sqrt2')


class TestNamedConstants(unittest.TestCase):

    def test_trigonometry(self):
        c = named_constants()
        self.assertEqual(c['cos_2pi_5'] ** 2 + c['sin_2pi_5'] ** 2, 1)
        self.assertEqual(c['cos_pi_5'] ** 2 + c['sin_pi_5'] ** 2, 1)
        # cos(2 pi / 5) = 2 cos(pi / 5)**2 - 1
        self.assertEqual(c['cos_2pi_5'], 2 * c['cos_pi_5'] ** 2 - 1)
        self.assertEqual(c['sqrt6'] ** 2, 6)
        self.assertEqual(c['u'] ** 2, 10 - 2 * c['sqrt5'])

    def test_decimals(self):
        c = named_constants()
        self.assertEqual(c['cos_2pi_5'].to_decimal(6), '0.309017')
        self.assertEqual(c['sin_2pi_5'].to_decimal(6), '0.951057')
        self.assertEqual(c['sin_pi_5'].to_decimal(6), '0.587785')


class TestFieldProperties(unittest.TestCase):

    def setUp(self):
        self.random = random.Random(5)
        c = named_constants()
        self.basis = [1, c['sqrt2'], c['sqrt3'] * c['sqrt5'], c['u']]

    def element(self):
        return sum((
            Fraction(self.random.randint(-5, 5), self.random.randint(1, 3)) * b
            for b in self.basis), canonical_field().zero())

    def test_field_laws(self):
        for _ in range(10):
            x, y, z = self.element(), self.element(), self.element()
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual((x + y) - y, x)
            if y:
                self.assertEqual((x * y) / y, x)

    def test_sign_laws(self):
        for _ in range(10):
            x, y = self.element(), self.element()
            self.assertGreaterEqual((x * x).sign(), 0)
            self.assertEqual(x.sign() * x, abs(x))
            self.assertEqual((x * y).sign(), x.sign() * y.sign())


if __name__ == '__main__':
    unittest.main()
