import unittest

from a5verify.groups import a5_generators
from a5verify.groups import a5_lattice
from a5verify.groups import a5_subgroups
from a5verify.groups import alternating_a5
from a5verify.groups import group_closure
from a5verify.groups import is_solvable
from a5verify.groups import kernel_check
from a5verify.groups import Perm
from a5verify.groups import PermGroup
from a5verify.groups import phi_eval
from a5verify.groups import subgroup_lattice
from a5verify.groups import UnknownGenerator


class TestPerm(unittest.TestCase):

    def test_parse_and_str(self):
        p = Perm.parse('(1,2,3)(4,5)')
        self.assertEqual(p.degree, 5)
        self.assertEqual(str(p), '(1,2,3)(4,5)')
        self.assertEqual(str(Perm.parse('()', 3)), '()')
        self.assertEqual(p.order(), 6)
        for text in ('(1,2', '(1,1)', '(0,1)', '(1,2)(2,3)', '(a,b)'):
            with self.assertRaises(ValueError):
                Perm.parse(text)

    def test_product_applies_left_factor_first(self):
        p = Perm.parse('(1,2,3)')
        q = Perm.parse('(1,2)', 3)
        self.assertEqual(p * q, Perm.parse('(2,3)', 3))
        self.assertEqual(q * p, Perm.parse('(1,3)', 3))
        self.assertTrue((p * p.inverse()).is_identity())
        self.assertEqual(p ** -1, p * p)


class TestA5(unittest.TestCase):

    def test_generator_images(self):
        g = a5_generators()
        self.assertEqual(g['a'].order(), 2)
        self.assertEqual(g['b'].order(), 3)
        self.assertEqual(g['c'].order(), 2)
        self.assertEqual(g['a'], g['d'])
        self.assertEqual((g['c'] * g['d']).order(), 5)

    def test_orders(self):
        self.assertEqual(alternating_a5().order, 60)
        subgroups = a5_subgroups()
        orders = {name: h.order for name, h in subgroups.items()}
        self.assertEqual(orders, {
            'H1': 12, 'H2': 6, 'H3': 10, 'H12': 3, 'H23': 2, 'H13': 2})
        for name in ('H12', 'H13'):
            self.assertTrue(subgroups[name].is_subgroup_of(subgroups['H1']))

    def test_closure(self):
        self.assertEqual(
            group_closure(list(a5_generators().values()), 5).order, 60)
        a4 = group_closure(
            [Perm.parse('(2,5)(3,4)', 5), Perm.parse('(3,5,4)', 5)])
        self.assertEqual(a4.order, 12)
        self.assertTrue(is_solvable(a4))
        d10 = group_closure(
            [Perm.parse('(1,2)(3,5)', 5), Perm.parse('(2,5)(3,4)', 5)])
        self.assertEqual(d10.order, 10)
        self.assertFalse(is_solvable(alternating_a5()))
        self.assertEqual(len(subgroup_lattice(alternating_a5())), 59)

    def test_solvability(self):
        group = alternating_a5()
        self.assertFalse(group.is_solvable())
        self.assertEqual(group.derived_subgroup(), group)
        self.assertTrue(a5_subgroups()['H1'].is_solvable())

    def test_normalizer_and_cosets(self):
        group = alternating_a5()
        h12 = a5_subgroups()['H12']
        self.assertEqual(group.normalizer(h12).order, 6)
        self.assertEqual(len(group.left_cosets(h12)), 20)
        self.assertEqual(group.index(h12), 20)
        g = a5_generators()['c']
        conjugate = h12.conjugate(g)
        self.assertEqual(conjugate.order, 3)
        self.assertIn(g.inverse() * h12.generators[0] * g, conjugate)

    def test_lattice(self):
        lattice = a5_lattice()
        self.assertEqual(len(lattice), 59)
        self.assertEqual(
            sorted(len(members) for members in lattice.conjugacy_classes()),
            [1, 1, 5, 5, 6, 6, 10, 10, 15])
        self.assertEqual(len(lattice.maximal_subgroups()), 21)
        self.assertEqual(len(lattice.solvable_family()), 58)
        self.assertTrue(lattice.subgroups[0].is_trivial())
        h1 = a5_subgroups()['H1']
        self.assertIs(lattice.find(h1), lattice.find(PermGroup(
            h1.generators, 5)))
        self.assertEqual([h.order for h in lattice.above(h1)], [60])

    def test_phi(self):
        self.assertTrue(kernel_check('(b a c)^3'))
        self.assertTrue(kernel_check('a d^-1'))
        self.assertTrue(kernel_check('x0 x3^2'))
        self.assertTrue(kernel_check('(c a)^5'))
        self.assertFalse(kernel_check('a b'))
        self.assertEqual(phi_eval('b a c'), Perm.parse('(1,2,3)', 5))
        with self.assertRaises(UnknownGenerator):
            phi_eval('a y')


if __name__ == '__main__':
    unittest.main()
