from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
import logging

from a5verify.exactfield import AlgebraicNumber
from a5verify.exactfield import canonical_field
from a5verify.exactfield import named_constants
from a5verify.exactfield import try_sqrt
from a5verify.fpgroups import FreeWord
from a5verify.fpgroups import parse_word
from a5verify.groups import kernel_check
from a5verify.linalg import is_special_orthogonal
from a5verify.linalg import Matrix
from a5verify.symbolic import Poly
from a5verify.symbolic import VARIABLES
import yaml

logger = logging.getLogger(__name__)


class ModuliError(ValueError):
    pass


class SolveError(RuntimeError):
    pass


RELATORS = (
    ('a^2', 'a^2'),
    ('b^3', 'b^3'),
    ('c^2', 'c^2'),
    ('d^2', 'd^2'),
    ('(ab)^3', '(a b)^3'),
    ('(bc)^2', '(b c)^2'),
    ('(cd)^5', '(c d)^5'),
    ('x0 a x0^-1 d^-1', 'x0 a x0^-1 d^-1'),
)


def rotation_R(alpha, beta, zero=0, one=1):
    """Rotation about the z axis with cosine alpha and sine beta."""
    return Matrix([
        [alpha, beta, zero],
        [-beta, alpha, zero],
        [zero, zero, one],
    ])


@lru_cache(maxsize=None)
def constant_matrices():
    """A, B and S0..S4 over the canonical field."""
    field = canonical_field()
    k = named_constants()
    o = field.zero()
    one = field.one()
    sqrt2, sqrt3, sqrt6 = k['sqrt2'], k['sqrt3'], k['sqrt6']
    c2, s2 = k['cos_2pi_5'], k['sin_2pi_5']
    c, s = k['cos_pi_5'], k['sin_pi_5']
    third = Fraction(1, 3)
    half = Fraction(1, 2)
    return {
        'A': Matrix([
            [-one, o, o],
            [o, field.rational(third), -2 * sqrt2 / 3],
            [o, -2 * sqrt2 / 3, field.rational(-third)],
        ]),
        'B': Matrix([
            [field.rational(-half), -sqrt3 / 2, o],
            [sqrt3 / 2, field.rational(-half), o],
            [o, o, one],
        ]),
        'S0': Matrix.diagonal([-one, one, -one], zero=o),
        'S1': Matrix([
            [-one, o, o],
            [o, o, -one],
            [o, -one, o],
        ]),
        'S2': Matrix([
            [-c2, o, -s2],
            [o, -one, o],
            [-s2, o, c2],
        ]),
        'S3': Matrix([
            [o, c, s],
            [one, o, o],
            [o, s, -c],
        ]),
        'S4': Matrix([
            [o, -sqrt3 / 3, -sqrt6 / 3],
            [one, o, o],
            [o, -sqrt6 / 3, sqrt3 / 3],
        ]),
    }


class ModuliPoint(object):
    """(alpha1, beta1, ..., alpha3, beta3) plus extra rotations X1..Xk."""

    def __init__(self, values, extras=()):
        values = tuple(values)
        if len(values) != len(VARIABLES):
            raise ModuliError(
                'Expected %d coordinates, got %d' %
                (len(VARIABLES), len(values)))
        self.values = values
        self.extras = [m if isinstance(m, Matrix) else Matrix(m)
                       for m in extras]
        self.validate()

    @property
    def alphas(self):
        return self.values[0::2]

    @property
    def betas(self):
        return self.values[1::2]

    def as_dict(self):
        return dict(zip(VARIABLES, self.values))

    def validate(self):
        for i, (alpha, beta) in enumerate(zip(self.alphas, self.betas), 1):
            if alpha * alpha + beta * beta != 1:
                raise ModuliError(
                    'alpha%d^2 + beta%d^2 is not 1' % (i, i))
        for i, m in enumerate(self.extras, 1):
            if not is_special_orthogonal(m):
                raise ModuliError('X%d is not special orthogonal' % i)

    def to_data(self):
        data = {
            name: value.to_json() for name, value in self.as_dict().items()}
        if self.extras:
            data['extras'] = [
                [[x.to_json() for x in row] for row in m.rows]
                for m in self.extras]
        return data

    @classmethod
    def from_data(cls, data):
        if not isinstance(data, dict):
            raise ModuliError('Point data is not a mapping')
        missing = [name for name in VARIABLES if name not in data]
        if missing:
            raise ModuliError('Point misses %s' % ', '.join(missing))
        values = [_number(data[name]) for name in VARIABLES]
        extras = [
            [[_number(x) for x in row] for row in m]
            for m in data.get('extras') or []]
        return cls(values, extras)


def _number(value):
    """Read a coordinate: an exact number in JSON form or a rational."""
    field = canonical_field()
    if isinstance(value, dict):
        try:
            return AlgebraicNumber.from_json(value)
        except (KeyError, TypeError, ValueError) as e:
            raise ModuliError('Invalid algebraic number %r: %s' % (value, e))
    if isinstance(value, float):
        raise ModuliError(
            'Floating point coordinate %r is not exact' % (value,))
    try:
        return field.rational(Fraction(str(value)))
    except ValueError:
        raise ModuliError('Invalid coordinate %r' % (value,))


def load_point(source):
    with open(source, 'r') as h:
        text = h.read()
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ModuliError('Input data is not valid yaml: %s' % e)
    return ModuliPoint.from_data(data)


class GeneratorAssignment(object):
    """Images of a, b, c, d, x0..xk as 3x3 matrices over a common ring."""

    def __init__(self, images, symbolic=False):
        self.images = dict(images)
        self.symbolic = symbolic

    @property
    def k(self):
        return sum(1 for name in self.images if name.startswith('x')) - 1

    def generators(self):
        fixed = [g for g in ('a', 'b', 'c', 'd') if g in self.images]
        extra = sorted(
            (g for g in self.images if g not in fixed),
            key=lambda g: int(g[1:]))
        return fixed + extra

    def identity(self):
        field = canonical_field()
        return Matrix.identity(3, field.one(), field.zero())

    def replace(self, name, image):
        images = dict(self.images)
        images[name] = image
        return GeneratorAssignment(images, self.symbolic)


def build_generators(point=None, k=None):
    """Generator images at a point, or over Poly when point is None."""
    field = canonical_field()
    zero = field.zero()
    one = field.one()
    if point is None:
        values = [Poly.variable(name) for name in VARIABLES]
        extras = []
        k = k or 0
        symbolic = True
    else:
        values = list(point.values)
        extras = list(point.extras)
        if k is None:
            k = len(extras)
        if k < len(extras):
            raise ModuliError(
                'Point carries %d extra rotations, only %d used' %
                (len(extras), k))
        symbolic = False
    m = constant_matrices()
    r1 = rotation_R(values[0], values[1], zero, one)
    r2 = rotation_R(values[2], values[3], zero, one)
    r3 = rotation_R(values[4], values[5], zero, one)
    r1t = r1.transpose()
    c = r1 * m['S0'] * r1t
    d = r1 * m['S1'] * r2 * m['S2'] * r2.transpose() * \
        m['S1'].transpose() * r1t
    x0 = r1 * m['S1'] * r2 * m['S3'] * r3 * m['S4']
    images = {'a': m['A'], 'b': m['B'], 'c': c, 'd': d, 'x0': x0}
    identity = Matrix.identity(3, one, zero)
    for i in range(1, k + 1):
        # missing extra rotations are the identity
        images['x%d' % i] = extras[i - 1] if i <= len(extras) else identity
    return GeneratorAssignment(images, symbolic=symbolic)


def eval_word(assignment, word):
    """Product of the generator images, transposes standing for inverses."""
    if isinstance(word, str):
        word = parse_word(word)
    result = None
    cache = {}
    for name, exponent in word.letters:
        try:
            image = assignment.images[name]
        except KeyError:
            raise ModuliError("Unknown generator '%s'" % name)
        key = (name, exponent > 0)
        if key not in cache:
            cache[key] = image if exponent > 0 else image.transpose()
        for _ in range(abs(exponent)):
            result = cache[key] if result is None else result * cache[key]
    if result is None:
        return assignment.identity()
    return result


RelationResult = namedtuple(
    'RelationResult', ['name', 'passed', 'residual'])


def relator_residual(assignment, relator):
    """Return U - V^T for the split relator = U V.

    The halves keep the polynomial degrees low; since every image is
    orthogonal the residual vanishes exactly when the relator maps to I.
    """
    letters = relator.expand()
    half = len(letters) // 2
    left = eval_word(assignment, FreeWord(letters[:half]))
    right = eval_word(assignment, FreeWord(letters[half:]))
    return left - right.transpose()


def verify_relations(assignment, relators=RELATORS):
    results = []
    for name, text in relators:
        residual = relator_residual(assignment, parse_word(text))
        passed = residual.is_zero()
        logger.debug(
            'relator %s %s' % (name, 'vanishes' if passed else 'fails'))
        results.append(RelationResult(name, passed, residual))
    return results


def _solve_steps():
    """Forced elimination order: (equation, 1-based entry, variable)."""
    return (
        ('eqX0', (3, 3), 'alpha1'),
        ('eqBAC3', (3, 3), 'beta1'),
        ('eqX0', (1, 3), 'beta3'),
        ('eqX0', (2, 2), 'beta2'),
        ('eqX0', (3, 2), 'alpha2'),
        ('eqX0', (2, 3), 'alpha3'),
    )


SolveStep = namedtuple(
    'SolveStep', ['equation', 'entry', 'variable', 'divisor', 'value'])
Certificate = namedtuple(
    'Certificate', ['steps', 'residuals', 'circle', 'divisors'])


def universal_equations():
    """Return eqX0 and eqBAC3 over Poly.

    X0 = I is rewritten as S4 R1 S1 R2 = R3^T S3^T and (BAC)^3 = I as
    (BAC)^2 = (BAC)^T.
    """
    field = canonical_field()
    zero, one = field.zero(), field.one()
    m = constant_matrices()
    v = [Poly.variable(name) for name in VARIABLES]
    r1 = rotation_R(v[0], v[1], zero, one)
    r2 = rotation_R(v[2], v[3], zero, one)
    r3 = rotation_R(v[4], v[5], zero, one)
    eq_x0 = m['S4'] * r1 * m['S1'] * r2 - \
        r3.transpose() * m['S3'].transpose()
    bac = m['B'] * m['A'] * r1 * m['S0'] * r1.transpose()
    eq_bac3 = bac * bac - bac.transpose()
    return {'eqX0': eq_x0, 'eqBAC3': eq_bac3}


def solve_universal():
    """The unique point with X0 = I and (BAC)^3 = I.

    Every step solves one entry that is linear in the next variable with
    a constant nonzero coefficient, so no choice is ever made.
    """
    equations = universal_equations()
    known = {}
    steps = []
    for equation, (row, col), variable in _solve_steps():
        entry = equations[equation][row - 1, col - 1]
        entry = entry.partial_substitute(known)
        c1, c0 = entry.linear_coefficients(variable)
        if not c1.is_constant() or not c0.is_constant():
            raise SolveError(
                'Entry (%d, %d) of %s still depends on %s after '
                'substitution' %
                (row, col, equation, ', '.join(entry.variables())))
        divisor = c1.constant_value()
        if not divisor:
            raise SolveError(
                'Entry (%d, %d) of %s does not determine %s' %
                (row, col, equation, variable))
        value = -c0.constant_value() / divisor
        known[variable] = value
        steps.append(SolveStep(equation, (row, col), variable, divisor,
                               value))
        logger.debug('%s = %s from %s(%d, %d)' %
                     (variable, value, equation, row, col))

    residuals = {}
    for equation, matrix in sorted(equations.items()):
        for i in range(3):
            for j in range(3):
                residual = matrix[i, j].partial_substitute(known)
                residuals[(equation, i + 1, j + 1)] = \
                    residual.constant_value()
    bad = [key for key, value in residuals.items() if value]
    if bad:
        raise SolveError(
            'Residuals do not vanish at %s' %
            ', '.join('%s(%d, %d)' % key for key in sorted(bad)))
    circle = []
    for i in (1, 2, 3):
        alpha, beta = known['alpha%d' % i], known['beta%d' % i]
        circle.append(alpha * alpha + beta * beta == 1)
    if not all(circle):
        raise SolveError('Solution violates a circle relation')
    divisors = [(step.variable, step.divisor) for step in steps]
    point = ModuliPoint([known[name] for name in VARIABLES])
    return point, Certificate(steps, residuals, circle, divisors)


@lru_cache(maxsize=None)
def universal_point():
    return solve_universal()[0]


def _root(value, what):
    root = try_sqrt(value)
    if root is None:
        raise RuntimeError('%s has no square root in the field' % what)
    return root


@lru_cache(maxsize=None)
def golden_universal_point():
    """The universal point written out from its radical expressions."""
    field = canonical_field()
    k = named_constants()
    sqrt5, sqrt6, sqrt2 = k['sqrt5'], k['sqrt6'], k['sqrt2']
    q = field.rational
    values = [
        -sqrt6 * (1 + sqrt5) / 8,
        sqrt2 * (3 - sqrt5) / 8,
        -_root(q(Fraction(1, 3)) - sqrt5 * Fraction(2, 15), 'alpha2^2'),
        _root(q(Fraction(2, 3)) + sqrt5 * Fraction(2, 15), 'beta2^2'),
        -_root(q(Fraction(1, 2)) - sqrt5 / 5, 'alpha3^2'),
        _root(q(Fraction(1, 2)) + sqrt5 / 5, 'beta3^2'),
    ]
    return ModuliPoint(values)


GoodRepResult = namedtuple('GoodRepResult', ['checks', 'conclusion'])


def good_rep_check(assignment, words, k=None):
    """Test the hypotheses that rule out an isomorphism onto A5.

    If every word lies in the kernel of phi and is killed by the
    representation while some generator x_i or (bac)^3 is not, the
    quotient of Gamma_k by the words does not map isomorphically to A5.
    """
    if k is None:
        k = assignment.k
    words = [parse_word(w) if isinstance(w, str) else w for w in words]
    checks = []
    for i, word in enumerate(words):
        checks.append(('w%d in ker(phi)' % i, kernel_check(word)))
    for i, word in enumerate(words):
        checks.append(
            ('rho(w%d) = I' % i, eval_word(assignment, word).is_identity()))
    witnesses = ['x%d' % i for i in range(k + 1)] + ['(b a c)^3']
    survivors = [
        w for w in witnesses
        if not eval_word(assignment, w).is_identity()]
    checks.append((
        'rho is nontrivial on x0..x%d, (bac)^3' % k, bool(survivors)))
    conclusion = all(passed for _, passed in checks)
    return GoodRepResult(checks, conclusion)
