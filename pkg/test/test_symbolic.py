from fractions import Fraction
import unittest

from a5verify.exactfield import named_constants
from a5verify.quat import Quaternion
from a5verify.symbolic import circle_relation
from a5verify.symbolic import commutator
from a5verify.symbolic import Jet
from a5verify.symbolic import Poly


def var(name):
    return Poly.variable(name)


class TestPoly(unittest.TestCase):

    def test_circle_reduction(self):
        alpha1, beta1 = var('alpha1'), var('beta1')
        self.assertEqual(beta1 * beta1, 1 - alpha1 * alpha1)
        self.assertEqual(beta1 ** 3, beta1 - alpha1 * alpha1 * beta1)
        for i in (1, 2, 3):
            self.assertEqual(circle_relation(i), 0)
            self.assertFalse(circle_relation(i))

    def test_degree_and_variables(self):
        p = var('alpha2') ** 3 * var('beta3') + 2
        self.assertEqual(p.degree('alpha2'), 3)
        self.assertEqual(p.degree('beta3'), 1)
        self.assertEqual(p.degree('alpha1'), 0)
        self.assertEqual(p.variables(), ['alpha2', 'beta3'])
        self.assertFalse(p.is_constant())
        self.assertEqual(Poly.constant(5).constant_value(), 5)
        with self.assertRaises(ValueError):
            var('gamma')

    def test_substitute(self):
        p = var('alpha1') * var('beta1') + var('alpha2')
        point = [Fraction(3, 5), Fraction(4, 5), 1, 0, 1, 0]
        self.assertEqual(p.substitute(point), Fraction(37, 25))
        with self.assertRaises(ValueError):
            p.substitute([1, 1, 1, 0, 1, 0])

    def test_partial_substitute(self):
        p = var('alpha1') * var('beta2') + var('alpha1')
        q = p.partial_substitute({'alpha1': 2})
        self.assertEqual(q, 2 * var('beta2') + 2)
        self.assertEqual(q.variables(), ['beta2'])

    def test_linear_coefficients(self):
        sqrt5 = named_constants()['sqrt5']
        p = sqrt5 * var('alpha1') * var('beta2') + var('alpha3') - 1
        c1, c0 = p.linear_coefficients('alpha1')
        self.assertEqual(c1, sqrt5 * var('beta2'))
        self.assertEqual(c0, var('alpha3') - 1)
        with self.assertRaises(ValueError):
            (var('alpha1') ** 2).linear_coefficients('alpha1')


class TestJet(unittest.TestCase):

    def test_product_rule(self):
        x = Jet.seed(Fraction(2), 0, 1, 2)
        y = Jet.seed(Fraction(3), 1, 1, 2)
        product = x * y
        self.assertEqual(product.value, 6)
        self.assertEqual(product.partial(0), 3)
        self.assertEqual(product.partial(1), 2)
        square = x * x + 1
        self.assertEqual(square.value, 5)
        self.assertEqual(square.partial(0), 4)
        self.assertEqual(square.partial(1), 0)

    def test_constant(self):
        c = Jet.constant(Fraction(7), 3)
        self.assertTrue(c.is_constant())
        self.assertEqual(c, Jet(Fraction(7), [0, None, 0]))
        self.assertNotEqual(c, Jet(Fraction(7), [1, None, None]))

    def test_noncommutative_inverse(self):
        i = Quaternion(0, 1, 0, 0)
        j = Quaternion(0, 0, 1, 0)
        k = Quaternion(0, 0, 0, 1)
        # f(t) = i + t j, g = j
        f = Jet.seed(i, 0, j, 1)
        g = Jet.constant(j, 1)
        self.assertEqual(f * f.inverse(), Jet.constant(Quaternion(1), 1))
        # d/dt (f g) = j j = -1
        self.assertEqual((f * g).partial(0), Quaternion(-1))
        self.assertEqual((f * g).value, -k)
        self.assertEqual((g * f).value, k)

    def test_commutator_of_commuting_units(self):
        i = Quaternion(0, 1, 0, 0)
        f = Jet.constant(i, 2)
        g = Jet.constant(-i, 2)
        c = commutator(f, g)
        self.assertEqual(c.value, Quaternion(1))
        self.assertTrue(c.is_constant())


if __name__ == '__main__':
    unittest.main()
