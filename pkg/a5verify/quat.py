from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import product
import logging

from a5verify.exactfield import AlgebraicNumber
from a5verify.exactfield import canonical_field
from a5verify.exactfield import QQ
from a5verify.exactfield import sqrt_or_adjoin
from a5verify.fpgroups import parse_word
from a5verify.linalg import is_special_orthogonal
from a5verify.linalg import Matrix
from a5verify.moduli import constant_matrices
from a5verify.moduli import rotation_R
from a5verify.moduli import universal_point
from a5verify.symbolic import Jet

logger = logging.getLogger(__name__)


class QuaternionError(ValueError):
    pass


class SignSearchError(RuntimeError):
    pass


def _number(value):
    if isinstance(value, AlgebraicNumber):
        return value
    return QQ.rational(value)


class Quaternion(object):
    """w + x i + y j + z k over a field of AlgebraicNumbers.

    Products follow i j = -k, the reverse of Hamilton's rule, so that
    p(q) is the transpose of the usual rotation and lifts B to
    1/2 - (sqrt3/2) k. Conjugation v -> q v q^-1 then acts through p(q).
    """

    __slots__ = ('w', 'x', 'y', 'z')

    def __init__(self, w, x=0, y=0, z=0):
        self.w = _number(w)
        self.x = _number(x)
        self.y = _number(y)
        self.z = _number(z)

    @classmethod
    def pure(cls, vector):
        x, y, z = vector
        return cls(0, x, y, z)

    @property
    def components(self):
        return self.w, self.x, self.y, self.z

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*[a + b for a, b in zip(
            self.components, other.components)])

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(*[a - b for a, b in zip(
            self.components, other.components)])

    def __neg__(self):
        return Quaternion(*[-a for a in self.components])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            w1, x1, y1, z1 = self.components
            w2, x2, y2, z2 = other.components
            return Quaternion(
                w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + w2 * x1 - (y1 * z2 - z1 * y2),
                w1 * y2 + w2 * y1 - (z1 * x2 - x1 * z2),
                w1 * z2 + w2 * z1 - (x1 * y2 - y1 * x2))
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return Quaternion(*[a * other for a in self.components])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return Quaternion(*[other * a for a in self.components])
        return NotImplemented

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        w, x, y, z = self.components
        return w * w + x * x + y * y + z * z

    def inverse(self):
        norm2 = self.norm2()
        if not norm2:
            raise ZeroDivisionError('Inverse of the zero quaternion')
        if norm2 == 1:
            return self.conjugate()
        return self.conjugate() * norm2.inverse()

    def is_pure(self):
        return not self.w

    def is_real(self):
        return not (self.x or self.y or self.z)

    def is_unit(self):
        return self.norm2() == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return all(a == b for a, b in zip(self.components, other.components))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return any(self.components)

    def __str__(self):
        parts = []
        for value, unit in zip(self.components, ('', 'i', 'j', 'k')):
            if not value:
                continue
            text = str(value)
            if not unit:
                parts.append(text)
            elif text == '1':
                parts.append(unit)
            elif text == '-1':
                parts.append('-' + unit)
            elif ' ' in text:
                parts.append('(%s)*%s' % (text, unit))
            else:
                parts.append('%s*%s' % (text, unit))
        return ' + '.join(parts).replace('+ -', '- ') or '0'

    def __repr__(self):
        return 'Quaternion(%s)' % self


ONE = Quaternion(1)
UNIT_I = Quaternion(0, 1, 0, 0)
UNIT_J = Quaternion(0, 0, 1, 0)
UNIT_K = Quaternion(0, 0, 0, 1)
HALF_K = Quaternion(0, 0, 0, Fraction(1, 2))


def p(q):
    """Rotation matrix of a unit quaternion."""
    if not q.is_unit():
        raise QuaternionError('p needs a unit quaternion, got %s' % q)
    w, x, y, z = q.components
    return Matrix([
        [1 - 2 * (y * y + z * z), 2 * (x * y + w * z), 2 * (x * z - w * y)],
        [2 * (x * y - w * z), 1 - 2 * (x * x + z * z), 2 * (y * z + w * x)],
        [2 * (x * z + w * y), 2 * (y * z - w * x), 1 - 2 * (x * x + y * y)],
    ])


def psi(q):
    return q.x, q.y, q.z


def conj_action(q, v):
    """Conjugate a pure quaternion v by q, v given as such or as a triple."""
    if not isinstance(v, Quaternion):
        v = Quaternion.pure(v)
    if not v.is_pure():
        raise QuaternionError('%s is not a pure quaternion' % v)
    return q * v * q.inverse()


def quat_maps(q, which, v=None):
    if which == 'p':
        return p(q)
    if which == 'psi':
        return psi(q)
    if which == 'conj_action':
        return conj_action(q, v)
    raise QuaternionError("Unknown quaternion map '%s'" % which)


def phi_disk(b, c, d):
    """Unit quaternion over a point of the closed unit ball."""
    b, c, d = _number(b), _number(c), _number(d)
    radicand = 1 - b * b - c * c - d * d
    if radicand.sign() < 0:
        raise QuaternionError(
            '(%s, %s, %s) lies outside the unit ball' % (b, c, d))
    if not radicand:
        return Quaternion(0, b, c, d)
    _, root = sqrt_or_adjoin(radicand)
    return Quaternion(root, b, c, d)


def phi_disk_jet(index, size):
    """Jet of phi_disk at the origin, seeded in slots 3 index .. +2.

    The real part sqrt(1 - |v|^2) has zero derivative at the origin.
    """
    partials = [None] * size
    for offset, unit in enumerate((UNIT_I, UNIT_J, UNIT_K)):
        partials[3 * index + offset] = unit
    return Jet(ONE, partials)


def lift_rotation(m, tower=None, name=None):
    """Return (q, tower) with p(q) = m.

    The largest of the four squared components is extracted (first on
    ties), the others are linear in it. tower, when given, must contain
    the entries of m; it is extended by at most one square root.
    """
    if not is_special_orthogonal(m):
        raise QuaternionError('Cannot lift a matrix outside SO(3)')
    if tower is None:
        tower = m[0, 0].tower if isinstance(m[0, 0], AlgebraicNumber) \
            else QQ

    def e(i, j):
        return tower.coerce(m[i, j])

    squares = [
        (1 + e(0, 0) + e(1, 1) + e(2, 2)) / 4,
        (1 + e(0, 0) - e(1, 1) - e(2, 2)) / 4,
        (1 - e(0, 0) + e(1, 1) - e(2, 2)) / 4,
        (1 - e(0, 0) - e(1, 1) + e(2, 2)) / 4,
    ]
    branch = 0
    for i in range(1, 4):
        if squares[branch] < squares[i]:
            branch = i
    tower, root = sqrt_or_adjoin(squares[branch], name=name)
    scale = (4 * root).inverse()
    if branch == 0:
        components = (
            root, (e(1, 2) - e(2, 1)) * scale, (e(2, 0) - e(0, 2)) * scale,
            (e(0, 1) - e(1, 0)) * scale)
    elif branch == 1:
        components = (
            (e(1, 2) - e(2, 1)) * scale, root, (e(0, 1) + e(1, 0)) * scale,
            (e(0, 2) + e(2, 0)) * scale)
    elif branch == 2:
        components = (
            (e(2, 0) - e(0, 2)) * scale, (e(0, 1) + e(1, 0)) * scale, root,
            (e(1, 2) + e(2, 1)) * scale)
    else:
        components = (
            (e(0, 1) - e(1, 0)) * scale, (e(0, 2) + e(2, 0)) * scale,
            (e(1, 2) + e(2, 1)) * scale, root)
    q = Quaternion(*components)
    for value in q.components:
        if value:
            if value.sign() < 0:
                q = -q
            break
    if p(q) != m:
        raise RuntimeError('Lift does not reproduce the rotation')
    return q, tower


LIFT_ORDER = ('A', 'B', 'S0', 'S1', 'S2', 'S3', 'S4')


@lru_cache(maxsize=None)
def constant_lifts():
    """Normalized lifts of A, B, S0..S4 in one chain of towers."""
    matrices = constant_matrices()
    tower = canonical_field()
    lifts = {}
    for name in LIFT_ORDER:
        lifts[name], tower = lift_rotation(
            matrices[name], tower, name='r_' + name)
    return lifts, tower


class TPoint(object):
    """Three exact angles with their half angles, plus k unit ball points."""

    def __init__(self, cos, sin, half_cos, half_sin, disk, tower):
        self.cos = tuple(cos)
        self.sin = tuple(sin)
        self.half_cos = tuple(half_cos)
        self.half_sin = tuple(half_sin)
        self.disk = [tuple(_number(x) for x in v) for v in disk]
        self.tower = tower
        self.validate()

    @property
    def k(self):
        return len(self.disk)

    def validate(self):
        for i in range(3):
            c, s = self.cos[i], self.sin[i]
            hc, hs = self.half_cos[i], self.half_sin[i]
            if c * c + s * s != 1 or hc * hc + hs * hs != 1:
                raise QuaternionError('Angle %d is not on the circle' % i)
            if 2 * hc * hc - 1 != c or 2 * hs * hc != s:
                raise QuaternionError(
                    'Half angle %d does not double to the angle' % i)
        for v in self.disk:
            if sum((x * x for x in v), QQ.zero()) > 1:
                raise QuaternionError('%s lies outside the unit ball' % (v,))

    @classmethod
    def from_moduli(cls, point, k=0, tower=None):
        """Angles of a moduli point with positive sines; disk part zero.

        Each half angle cosine sqrt((1 + cos)/2) is adjoined on top of
        tower when it is not already there.
        """
        if tower is None:
            tower = canonical_field()
        half_cos = []
        half_sin = []
        for i, (alpha, beta) in enumerate(zip(point.alphas, point.betas), 1):
            if beta.sign() <= 0:
                raise QuaternionError(
                    'beta%d must be positive to fix the half angle' % i)
            radicand = tower.coerce((1 + alpha) / 2)
            tower, c = sqrt_or_adjoin(radicand, name='c%d' % i)
            half_cos.append(c)
            half_sin.append(beta / (2 * c))
        disk = [(0, 0, 0)] * k
        return cls(point.alphas, point.betas, half_cos, half_sin, disk,
                   tower)

    def half_rotation(self, i):
        """Return cos(t/2) + k sin(t/2) for angle i (0-based)."""
        return Quaternion(self.half_cos[i], 0, 0, self.half_sin[i])


@lru_cache(maxsize=None)
def t_bad(k=0):
    lifts, tower = constant_lifts()
    return TPoint.from_moduli(universal_point(), k, tower)


def _unsigned_products(lifts, t):
    r1, r2, r3 = (t.half_rotation(i) for i in range(3))
    x0 = r1 * lifts['S1'] * r2 * lifts['S3'] * r3 * lifts['S4']
    c = r1 * lifts['S0'] * r1.inverse()
    bac = lifts['B'] * lifts['A'] * c
    return x0, bac * bac * bac


def _real_sign(q, what):
    if q == 1:
        return 1
    if q == -1:
        return -1
    raise SignSearchError('%s is not +1 or -1 before signs: %s' % (what, q))


# occurrences of each lift in X0 and in (BAC)^3, modulo 2
_PARITY = {
    'x0': {'S1': 1, 'S3': 1, 'S4': 1},
    'bac3': {'A': 1, 'B': 1, 'S0': 1},
}


@lru_cache(maxsize=None)
def choose_signs():
    """Signs for the lifts making X0~ and (B~A~C~)^3 equal 1 at t_bad.

    The products are computed once unsigned; a sign flips a product when
    its lift occurs an odd number of times, which decides every one of
    the 2^7 candidates without further arithmetic.
    """
    lifts, _ = constant_lifts()
    x0, bac3 = _unsigned_products(lifts, t_bad())
    targets = {
        'x0': _real_sign(x0, 'X0~'),
        'bac3': _real_sign(bac3, '(BAC)^3~'),
    }
    for signs in product((1, -1), repeat=len(LIFT_ORDER)):
        chosen = dict(zip(LIFT_ORDER, signs))
        ok = True
        for word, parity in _PARITY.items():
            factor = 1
            for name in parity:
                factor *= chosen[name]
            if factor != targets[word]:
                ok = False
                break
        if ok:
            logger.debug('lift signs: %s' % ', '.join(
                '%s%s' % ('+' if s > 0 else '-', n)
                for n, s in chosen.items()))
            return chosen
    raise SignSearchError('No sign choice normalizes both products')


def signed_lifts(signs=None):
    lifts, _ = constant_lifts()
    if signs is None:
        signs = choose_signs()
    return {name: q if signs[name] > 0 else -q for name, q in lifts.items()}


class QuaternionModel(object):
    """Generator jets of the lifted representation around t_bad."""

    def __init__(self, k=0, signs=None):
        self.k = k
        self.size = 3 * (k + 1)
        self.point = t_bad(k)
        self.lifts = signed_lifts(signs)
        self.jets = self._generator_jets()

    def _constant(self, q):
        return Jet.constant(q, self.size)

    def _rotation_jet(self, i):
        value = self.point.half_rotation(i)
        return Jet.seed(value, i, value * HALF_K, self.size)

    def _generator_jets(self):
        s = {name: self._constant(q) for name, q in self.lifts.items()}
        r1, r2, r3 = (self._rotation_jet(i) for i in range(3))
        r1_inv, r2_inv = r1.inverse(), r2.inverse()
        jets = {
            'a': s['A'],
            'b': s['B'],
            'c': r1 * s['S0'] * r1_inv,
            'd': r1 * s['S1'] * r2 * s['S2'] * r2_inv * s['S1'].inverse() *
            r1_inv,
            'x0': r1 * s['S1'] * r2 * s['S3'] * r3 * s['S4'],
        }
        for j in range(1, self.k + 1):
            jets['x%d' % j] = phi_disk_jet(j, self.size)
        return jets

    def evaluate(self, word):
        if isinstance(word, str):
            word = parse_word(word)
        result = self._constant(ONE)
        inverses = {}
        for name, exponent in word.letters:
            try:
                jet = self.jets[name]
            except KeyError:
                raise QuaternionError("Unknown generator '%s'" % name)
            if exponent < 0:
                if name not in inverses:
                    inverses[name] = jet.inverse()
                jet = inverses[name]
            for _ in range(abs(exponent)):
                result = result * jet
        return result


@lru_cache(maxsize=None)
def quaternion_model(k=0):
    return QuaternionModel(k)


def jet_word_eval(word, k=0):
    return quaternion_model(k).evaluate(word)


def jacobian_jet(k=0):
    """Rows 3j+r, column i: component r of psi(d X~j / d t_i)."""
    model = quaternion_model(k)
    zero = model.point.tower.zero()
    rows = [[zero] * model.size for _ in range(model.size)]
    for j in range(k + 1):
        jet = model.jets['x%d' % j]
        for i in range(model.size):
            derivative = jet.partial(i, None)
            if derivative is None:
                continue
            for r, value in enumerate(psi(derivative)):
                rows[3 * j + r][i] = value
    return Matrix(rows)


def closed_form_block(point=None):
    """The 3x3 block of derivatives of X~0 at t_bad, one column per angle.

    Columns are R1 e3 / 2, R1 S1 R2 e3 / 2 and S4^T e3 / 2.
    """
    if point is None:
        point = universal_point()
    field = canonical_field()
    zero, one = field.zero(), field.one()
    m = constant_matrices()
    a, b = point.alphas, point.betas
    r1 = rotation_R(a[0], b[0], zero, one)
    r2 = rotation_R(a[1], b[1], zero, one)
    e3 = (zero, zero, one)
    columns = [
        r1.apply(e3),
        (r1 * m['S1'] * r2).apply(e3),
        m['S4'].transpose().apply(e3),
    ]
    half = Fraction(1, 2)
    return Matrix(
        [[columns[c][r] * half for c in range(3)] for r in range(3)])


def jacobian_closed_form(k=0, point=None):
    block = closed_form_block(point)
    field = canonical_field()
    zero, one = field.zero(), field.one()
    size = 3 * (k + 1)
    rows = []
    for r in range(size):
        row = []
        for c in range(size):
            if r < 3 and c < 3:
                row.append(block[r, c])
            else:
                row.append(one if r == c else zero)
        rows.append(row)
    return Matrix(rows)


def jacobian_determinant(k=0, point=None):
    """Determinant of the block diagonal Jacobian, that of its 3x3 block."""
    return closed_form_block(point).det()


PurityEntry = namedtuple('PurityEntry', ['word', 'value', 'pure'])


def purity_table(words, k=0):
    """Evaluate each word at t_bad and test its partials for purity."""
    model = quaternion_model(k)
    entries = []
    for word in words:
        if isinstance(word, str):
            word = parse_word(word)
        jet = model.evaluate(word)
        pure = [jet.partial(i, None) is None or jet.partial(i).is_pure()
                for i in range(model.size)]
        entries.append(PurityEntry(word, jet.value, pure))
    return entries
