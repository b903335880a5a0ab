from io import StringIO
import json
import os
import sys
import tempfile
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

from a5verify import executor  # noqa: E402
from a5verify.commands import a5v  # noqa: E402
from a5verify.commands import brown  # noqa: E402
from a5verify.commands import complex as complex_command  # noqa: E402
from a5verify.commands import coset_enum  # noqa: E402
from a5verify.commands import exponent_matrix  # noqa: E402
from a5verify.commands import jacobian  # noqa: E402
from a5verify.commands import kernel_check  # noqa: E402
from a5verify.commands import resolve_command  # noqa: E402
from a5verify.commands import solve_universal  # noqa: E402
from a5verify.commands import verify_moduli  # noqa: E402
from a5verify.commands import word_identity  # noqa: E402


class TestCommands(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls._use_color = executor.USE_COLOR
        executor.USE_COLOR = False

    @classmethod
    def tearDownClass(cls):
        executor.USE_COLOR = cls._use_color

    def test_coset_enum(self):
        rc, output, _ = run_command(coset_enum, ['builtin:a5-xy'])
        self.assertEqual(rc, 0)
        self.assertIn('=== enumerate (pass) ===', output)
        self.assertIn('order: 60', output)

        rc, output, _ = run_command(
            coset_enum, ['builtin:lemma-bac3', '--subgroup', 'a', 'b'])
        self.assertEqual(rc, 0)
        self.assertIn('index: 5', output)

    def test_coset_enum_expect(self):
        rc, output, _ = run_command(
            coset_enum, ['builtin:a5-xy', '--expect', '59'])
        self.assertEqual(rc, 1)
        self.assertIn('=== enumerate (fail) ===', output)

    def test_coset_enum_add(self):
        rc, output, _ = run_command(
            coset_enum, [
                'builtin:gtilde-a5', '--add', '(b a c)^3', '--expect', '60'])
        self.assertEqual(rc, 0)
        self.assertIn('order: 60', output)

    def test_coset_enum_action(self):
        rc, output, _ = run_command(
            coset_enum, ['builtin:a5-xy', '--subgroup', 'x', 'y x y^-1',
                         '--action'])
        self.assertEqual(rc, 0)
        self.assertIn('x -> ', output)
        self.assertIn('y -> ', output)

    def test_coset_enum_file(self):
        with tempfile.NamedTemporaryFile(
                'w', suffix='.yaml', delete=False) as h:
            h.write('gens: [x, y]\nrelators: [x^2, y^3, (x y)^3]\n')
        try:
            rc, output, _ = run_command(coset_enum, [h.name])
        finally:
            os.remove(h.name)
        self.assertEqual(rc, 0)
        self.assertIn('order: 12', output)

    def test_coset_enum_budget(self):
        rc, output, _ = run_command(
            coset_enum, ['builtin:gtilde-a5', '--max-cosets', '10'])
        self.assertEqual(rc, 3)
        self.assertIn('CosetBudgetExceeded', output)

    def test_invalid_input(self):
        missing = os.path.join(
            tempfile.gettempdir(), 'a5verify-missing.yaml')
        rc, _, error = run_command(coset_enum, [missing])
        self.assertEqual(rc, 2)
        self.assertIn('a5verify-missing.yaml', error)

        rc, _, error = run_command(coset_enum, ['builtin:nothing'])
        self.assertEqual(rc, 2)
        self.assertIn('a5-xy', error)

        with self.assertRaises(SystemExit) as e:
            run_command(coset_enum, ['builtin:a5-xy', '--max-cosets', '0'])
        self.assertEqual(e.exception.code, 2)

    def test_json_report(self):
        rc, output, _ = run_command(
            coset_enum, ['builtin:a5-xy', '--json'])
        self.assertEqual(rc, 0)
        report = json.loads(output)
        self.assertEqual(report['schema'], 'report-v1')
        self.assertEqual(report['command'], 'coset-enum')
        self.assertEqual(len(report['inputs_digest']), 64)
        self.assertEqual(
            set(report), {
                'schema', 'command', 'inputs_digest', 'checks',
                'wall_time'})
        check, = report['checks']
        self.assertEqual(check['name'], 'enumerate')
        self.assertEqual(check['status'], 'pass')
        self.assertEqual(check['values'], {'order': 60})

        # same arguments, same digest
        _, again, _ = run_command(
            coset_enum, ['builtin:a5-xy', '--json'])
        self.assertEqual(
            json.loads(again)['inputs_digest'], report['inputs_digest'])

    def test_word_identity(self):
        rc, output, _ = run_command(
            word_identity, ['builtin:a5-xy', 'x^3', 'x'])
        self.assertEqual(rc, 0)
        self.assertIn('in the action on 60 cosets', output)

        rc, output, _ = run_command(
            word_identity, ['builtin:a5-xy', 'x', 'y'])
        self.assertEqual(rc, 1)
        self.assertIn('x != y', output)

        rc, _, error = run_command(
            word_identity, ['builtin:a5-xy', 'x z', 'y'])
        self.assertEqual(rc, 2)
        self.assertIn('z', error)

    def test_exponent_matrix(self):
        rc, output, _ = run_command(
            exponent_matrix, [
                'builtin:a5-xy', '--vars', 'x', 'y', '--relators', '1', '2'])
        self.assertEqual(rc, 0)
        self.assertIn('rank 2, det 10', output)

        # diag(2, 5) is not unimodular
        rc, output, _ = run_command(
            exponent_matrix, [
                'builtin:a5-xy', '--vars', 'x', 'y', '--relators', '1', '2',
                '--normalize'])
        self.assertEqual(rc, 1)
        self.assertIn('=== exponent matrix (pass) ===', output)
        self.assertIn('=== normalize (fail) ===', output)

        rc, output, _ = run_command(
            exponent_matrix, ['builtin:lemma-bac3', '--vars', 'a', 'b'])
        self.assertEqual(rc, 1)
        self.assertIn('rank 2', output)

    def test_exponent_matrix_invalid(self):
        rc, _, error = run_command(
            exponent_matrix, ['builtin:a5-xy', '--vars', 'z'])
        self.assertEqual(rc, 2)
        self.assertIn('Unknown generators: z', error)

        rc, _, error = run_command(
            exponent_matrix, [
                'builtin:a5-xy', '--vars', 'x', '--relators', '4'])
        self.assertEqual(rc, 2)
        self.assertIn('no relator 4', error)

    def test_kernel_check(self):
        rc, output, _ = run_command(
            kernel_check, ['x0', '(b a c)^3', 'a^2'])
        self.assertEqual(rc, 0)
        self.assertIn('=== phi(w1) = 1 (pass) ===', output)

        rc, output, _ = run_command(kernel_check, ['a b'])
        self.assertEqual(rc, 1)
        self.assertIn('=== phi(w0) = 1 (fail) ===', output)

        rc, _, error = run_command(kernel_check, ['x2', '--k', '1'])
        self.assertEqual(rc, 2)
        self.assertIn('Gamma_1', error)

    def test_verify_moduli(self):
        rc, output, _ = run_command(verify_moduli, ['--k', '1'])
        self.assertEqual(rc, 0)
        self.assertIn('=== relator (cd)^5 (pass) ===', output)
        self.assertIn('vanishes symbolically', output)

    def test_verify_moduli_universal(self):
        rc, output, _ = run_command(verify_moduli, ['--at', 'zbad'])
        self.assertEqual(rc, 0)
        self.assertIn('=== universal x0 = 1 (pass) ===', output)
        self.assertIn('=== universal (b a c)^3 = 1 (pass) ===', output)

    def test_verify_moduli_point_file(self):
        with tempfile.NamedTemporaryFile(
                'w', suffix='.yaml', delete=False) as h:
            h.write('alpha1: 2\n')
        try:
            rc, _, error = run_command(verify_moduli, ['--at', h.name])
        finally:
            os.remove(h.name)
        self.assertEqual(rc, 2)
        self.assertTrue(error)

    def test_solve_universal(self):
        rc, output, _ = run_command(solve_universal, ['--digits', '6'])
        self.assertEqual(rc, 0)
        for name in ('solve', 'golden table', 'circle relations', 'signs'):
            self.assertIn('=== %s (pass) ===' % name, output)
        self.assertIn('alpha1 < 0', output)
        self.assertIn('beta1 > 0', output)

    def test_jacobian(self):
        rc, output, _ = run_command(
            jacobian, ['--k', '0', '--method', 'both'])
        self.assertEqual(rc, 0)
        for name in ('closed form', 'lift signs', 'jet', 'purity',
                     'agreement'):
            self.assertIn('=== %s (pass) ===' % name, output)
        self.assertIn('det = ', output)

    def test_brown(self):
        rc, output, _ = run_command(
            brown, ['--builtin', 'poincare', '--expect-order', '7200'])
        self.assertEqual(rc, 0)
        self.assertIn('=== presentation (pass) ===', output)
        self.assertIn('order: 7200 (kernel of order 120)', output)

        rc, output, _ = run_command(
            brown, ['--builtin', 'poincare', '--add', '(b a c)^3',
                    '--expect-order', '60'])
        self.assertEqual(rc, 0)
        self.assertIn('order: 60 (kernel of order 1)', output)

    def test_brown_wrong_order(self):
        rc, output, _ = run_command(
            brown, ['--builtin', 'poincare', '--expect-order', '60'])
        self.assertEqual(rc, 1)
        self.assertIn('=== order (fail) ===', output)

    def test_complex(self):
        rc, output, _ = run_command(
            complex_command, ['--builtin', 'poincare', '--op', 'homology',
                              '--op', 'euler'])
        self.assertEqual(rc, 0)
        self.assertIn('cells: 21/80/60', output)
        self.assertIn('H0 = Z, H1 = 0, H2 = 0', output)
        self.assertIn('euler characteristic: 1', output)

    def test_complex_fixed(self):
        rc, output, _ = run_command(
            complex_command, ['--builtin', 'poincare', '--op', 'fixed',
                              '--subgroup', '(3,5,4)'])
        self.assertEqual(rc, 0)
        self.assertIn('cells 3/2/0', output)

        rc, output, _ = run_command(
            complex_command, ['--builtin', 'poincare', '--op', 'fixed',
                              '--subgroup', '(3,5,4)', '(2,5)(3,4)',
                              '(1,2)(3,5)'])
        self.assertEqual(rc, 0)
        self.assertIn('is empty', output)

        rc, _, error = run_command(
            complex_command, ['--builtin', 'poincare', '--op', 'fixed'])
        self.assertEqual(rc, 2)
        self.assertIn('--subgroup', error)

    def test_complex_orbit_counts(self):
        rc, output, _ = run_command(
            complex_command, ['--builtin', 'poincare', '--op', 'lemma23',
                              '--op', 'indices'])
        self.assertEqual(rc, 0)
        self.assertIn('=== indices (pass) ===', output)
        self.assertIn('=== lemma23 (pass) ===', output)
        self.assertNotIn('MISMATCH', output)

    def test_complex_reduced(self):
        rc, output, _ = run_command(
            complex_command, ['--builtin', 'gamma-os-a5', '--op', 'reduced'])
        self.assertEqual(rc, 0)
        self.assertIn('reduced: yes', output)
        self.assertIn('vertex stabilizers incomparable: yes', output)

    def test_complex_gamma_os(self):
        rc, output, _ = run_command(
            complex_command, ['--builtin', 'gamma-os-a5', '--op', 'homology'])
        self.assertEqual(rc, 0)
        self.assertIn('H0 = Z, H1 = Z^60, H2 = 0', output)

    def test_a5v_dispatch(self):
        rc, output, _ = run_command(a5v, ['coset-enum', 'builtin:a5-xy'])
        self.assertEqual(rc, 0)
        self.assertIn('order: 60', output)

        # unique prefix
        rc, output, _ = run_command(a5v, ['coset', 'builtin:a5-xy'])
        self.assertEqual(rc, 0)

        rc, _, error = run_command(a5v, ['co'])
        self.assertEqual(rc, 1)
        self.assertIn('Did you mean one of these?', error)

        rc, output, _ = run_command(a5v, [])
        self.assertEqual(rc, 0)
        self.assertIn('The available commands are:', output)
        self.assertIn('solve-universal', output)

    def test_resolve_command(self):
        names = [cmd.command for cmd in resolve_command('co')]
        self.assertEqual(names, ['complex', 'coset-enum'])
        cmd, = resolve_command('complex')
        self.assertEqual(cmd.command, 'complex')
        self.assertEqual(resolve_command('push'), [])

        # a prefix after help selects that command's --help
        with self.assertRaises(SystemExit) as e:
            run_command(a5v, ['help', 'kernel'])
        self.assertEqual(e.exception.code, 0)


def run_command(module, args):
    stdout = StringIO()
    stderr = StringIO()
    try:
        rc = module.main(
            args=list(args) + ['--workers', '2']
            if module is not a5v or args else list(args),
            stdout=stdout, stderr=stderr)
    finally:
        # commands keep the streams module pointed at the last buffers
        from a5verify.streams import set_streams
        set_streams(stdout=sys.stdout, stderr=sys.stderr)
    return rc, stdout.getvalue(), stderr.getvalue()


if __name__ == '__main__':
    unittest.main()
