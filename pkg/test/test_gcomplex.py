from fractions import Fraction
import unittest

from a5verify.builtin import orbit_complex
from a5verify.fpgroups import coset_action
from a5verify.fpgroups import todd_coxeter
from a5verify.gcomplex import acyclicity_suite
from a5verify.gcomplex import brown_presentation
from a5verify.gcomplex import brown_quotient_order
from a5verify.gcomplex import check_translation_conjugacy
from a5verify.gcomplex import complex_from_yaml
from a5verify.gcomplex import ComplexError
from a5verify.gcomplex import equivariant_expansion
from a5verify.gcomplex import euler_characteristic
from a5verify.gcomplex import expand
from a5verify.gcomplex import fixed_subcomplex
from a5verify.gcomplex import forest_collapse
from a5verify.gcomplex import fundamental_cycle
from a5verify.gcomplex import gamma_os_a5
from a5verify.gcomplex import homology
from a5verify.gcomplex import index_i_F
from a5verify.gcomplex import index_table
from a5verify.gcomplex import is_reduced
from a5verify.gcomplex import orbit_is_forest
from a5verify.gcomplex import orbit_sizes
from a5verify.gcomplex import poincare_complex
from a5verify.gcomplex import stabilizer_incomparability
from a5verify.gcomplex import two_cell_orbit_count
from a5verify.gcomplex import verify_lemma23
from a5verify.groups import a5_generators
from a5verify.groups import a5_lattice
from a5verify.groups import a5_subgroups
from a5verify.groups import alternating_a5
from a5verify.groups import PermGroup

SEGMENT = """
degree: 3
group: ['(1,2)']
vertices:
  - {name: w, stabilizer: ['(1,2)']}
  - {name: v, stabilizer: []}
edges:
  - {name: e, stabilizer: [], source: [w, '()'], target: [v, '()']}
"""


class TestHomology(unittest.TestCase):

    def test_gamma_os(self):
        c = gamma_os_a5()
        self.assertEqual(orbit_sizes(c), [[5, 10, 6], [20, 30, 30], []])
        self.assertEqual(euler_characteristic(c), -59)
        result = homology(c)
        self.assertEqual(result.betti, (1, 60, 0))
        self.assertEqual(str(result), 'H0 = Z, H1 = Z^60, H2 = 0')

    def test_poincare(self):
        c = poincare_complex()
        cells = expand(c)
        self.assertEqual(
            [cells.count(n) for n in range(3)], [21, 80, 60])
        result = homology(c)
        self.assertTrue(result.is_acyclic())
        self.assertEqual(str(result), 'H0 = Z, H1 = 0, H2 = 0')

    def test_segment_from_yaml(self):
        c = complex_from_yaml(SEGMENT, name='segment')
        cells = expand(c)
        self.assertEqual([cells.count(n) for n in range(3)], [3, 2, 0])
        self.assertTrue(homology(c).is_acyclic())
        self.assertTrue(orbit_is_forest(c, 0))
        self.assertFalse(is_reduced(c))
        collapsed = forest_collapse(c, 0)
        self.assertEqual([collapsed.count(n) for n in range(3)], [1, 0, 0])
        self.assertEqual(collapsed.stabilizer(0, 0).order, 2)

    def test_invalid_yaml(self):
        with self.assertRaises(ComplexError):
            complex_from_yaml('degree: 3\n')
        with self.assertRaises(ComplexError):
            complex_from_yaml('- not a mapping\n')
        with self.assertRaises(ComplexError):
            complex_from_yaml(SEGMENT.replace(
                "{name: e, stabilizer: []", "{name: e, stabilizer: ['(1,2)']"))
        with self.assertRaises(ComplexError):
            complex_from_yaml(SEGMENT.replace("target: [v", "target: [u"))


class TestFixedSets(unittest.TestCase):

    def test_fixed_subcomplex(self):
        c = poincare_complex()
        h = a5_subgroups()
        fixed = fixed_subcomplex(c, h['H1'])
        self.assertEqual([fixed.count(n) for n in range(3)], [1, 0, 0])
        fixed = fixed_subcomplex(c, h['H12'])
        self.assertEqual([fixed.count(n) for n in range(3)], [3, 2, 0])
        self.assertTrue(fixed_subcomplex(c, alternating_a5()).is_empty())

    def test_reduced(self):
        c = gamma_os_a5()
        self.assertTrue(is_reduced(c))
        self.assertTrue(stabilizer_incomparability(c))

    def test_acyclicity_suite(self):
        entries = acyclicity_suite(poincare_complex(), a5_lattice())
        self.assertEqual(len(entries), 59)
        status = {entry.subgroup.order: entry.status for entry in entries}
        self.assertEqual(status[1], 'acyclic')
        self.assertEqual(status[60], 'empty')
        self.assertEqual(status[12], 'acyclic')
        for entry in entries:
            if entry.subgroup.is_solvable():
                self.assertEqual(entry.status, 'acyclic')

    def test_equivariant_expansion(self):
        c = gamma_os_a5()
        h = a5_subgroups()['H12']
        one = c.identity()
        b = a5_generators()['b']
        expanded = equivariant_expansion(c, h, (0, one), (1, one))
        self.assertEqual(len(expanded.edges), 4)
        self.assertEqual(len(expanded.faces), 1)
        self.assertEqual(
            euler_characteristic(expanded), euler_characteristic(c))
        self.assertEqual(homology(expanded), homology(c))
        with self.assertRaises(ComplexError):
            equivariant_expansion(
                c, PermGroup([a5_generators()['c']], 5), (0, one),
                (1, b))


class TestIndices(unittest.TestCase):

    def test_trivial_subgroup(self):
        lattice = a5_lattice()
        family = lattice.solvable_family()
        self.assertEqual(
            index_i_F(lattice.subgroups[0], family, lattice), 1)
        self.assertEqual(two_cell_orbit_count(0, lattice), 1)
        self.assertEqual(two_cell_orbit_count(3, lattice), 4)

    def test_table(self):
        lattice = a5_lattice()
        table = dict(
            (h.order, index)
            for h, index in index_table(lattice, lattice.solvable_family()))
        self.assertEqual(table[2], -2)
        self.assertEqual(table[3], -1)
        self.assertEqual(table[6], 1)
        self.assertEqual(table[10], 1)
        self.assertEqual(table[12], 1)
        self.assertIsInstance(table[4], Fraction)

    def test_orbit_counts_match(self):
        lattice = a5_lattice()
        entries = verify_lemma23(
            poincare_complex(), lattice.solvable_family(), lattice)
        self.assertEqual(len(entries), 6)
        self.assertTrue(all(entry.match for entry in entries))
        counts = {e.subgroup.order: e.alternating_sum for e in entries}
        self.assertEqual(
            counts, {1: 1, 2: -2, 3: -1, 6: 1, 10: 1, 12: 1})


class TestBrownPresentation(unittest.TestCase):

    def test_poincare(self):
        brown = brown_presentation(poincare_complex())
        self.assertEqual(brown.presentation.generators, ('a', 'b', 'c'))
        self.assertEqual(len(brown.raw.generators), 9)
        for relator in brown.raw.relators:
            self.assertTrue(brown.phi_bar(relator).is_identity())
        self.assertEqual(brown_quotient_order(poincare_complex()),
                         (120, 7200))

    def test_bac3_quotient(self):
        brown = brown_presentation(poincare_complex())
        quotient = brown.presentation.add_relators(['(b a c)^3'])
        self.assertEqual(len(todd_coxeter(quotient)), 60)

    def test_translation_conjugacy(self):
        c = poincare_complex()
        brown = brown_presentation(c)
        action = coset_action(todd_coxeter(brown.presentation))
        path = fundamental_cycle(c, 0, c.identity())
        for g in a5_subgroups()['H1'].generators:
            self.assertTrue(
                check_translation_conjugacy(brown, path, g, action))

    def test_gamma_os_raw_counts(self):
        c = orbit_complex('gamma-os-a5')
        brown = brown_presentation(c)
        # two tree edges and one relator per edge stabilizer generator
        self.assertEqual(len(brown.raw.relators), 3 + 3 + 3 + 2 + 3)


if __name__ == '__main__':
    unittest.main()
