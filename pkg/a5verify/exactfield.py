from fractions import Fraction
from functools import lru_cache
from functools import reduce
from functools import total_ordering
import logging
import math
import threading

logger = logging.getLogger(__name__)


class IncompatibleTowers(ValueError):
    pass


class RationalInterval(object):

    __slots__ = ('lo', 'hi')

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError('Empty interval [%s, %s]' % (lo, hi))
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, value):
        return self.lo <= value <= self.hi

    def __repr__(self):
        return 'RationalInterval(%s, %s)' % (self.lo, self.hi)


# coefficient vectors are plain lists of ints of length 2**h, the
# generator of level h being the high bit of the basis index


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _mul(a, b, squares, h):
    if h == 0:
        return [a[0] * b[0]]
    half = 1 << (h - 1)
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]
    za0, za1 = not any(a0), not any(a1)
    zb0, zb1 = not any(b0), not any(b1)
    if not (za0 or za1 or zb0 or zb1):
        # (a0 + a1 x)(b0 + b1 x) = a0 b0 + a1 b1 r + ((a0+a1)(b0+b1)-..) x
        low = _mul(a0, b0, squares, h - 1)
        top = _mul(a1, b1, squares, h - 1)
        mid = _mul(_add(a0, a1), _add(b0, b1), squares, h - 1)
        high = _sub(_sub(mid, low), top)
        low = _add(low, _mul(top, squares[h - 1], squares, h - 1))
        return low + high
    low = [0] * half
    high = [0] * half
    if not (za0 or zb0):
        low = _mul(a0, b0, squares, h - 1)
    if not (za1 or zb1):
        top = _mul(a1, b1, squares, h - 1)
        low = _add(low, _mul(top, squares[h - 1], squares, h - 1))
    if not (za0 or zb1):
        high = _add(high, _mul(a0, b1, squares, h - 1))
    if not (za1 or zb0):
        high = _add(high, _mul(a1, b0, squares, h - 1))
    return low + high


def _inv(a, squares, h):
    """Return (numerators, denominator) of the inverse of a nonzero vector."""
    if h == 0:
        x = a[0]
        return [1 if x > 0 else -1], abs(x)
    half = 1 << (h - 1)
    p, q = a[:half], a[half:]
    if not any(q):
        nums, den = _inv(p, squares, h - 1)
        return nums + [0] * half, den
    # 1/(p + q x) = (p - q x) / (p^2 - q^2 r)
    norm = _sub(
        _mul(p, p, squares, h - 1),
        _mul(_mul(q, q, squares, h - 1), squares[h - 1], squares, h - 1))
    nums, den = _inv(norm, squares, h - 1)
    return (
        _mul(p, nums, squares, h - 1) +
        _mul([-x for x in q], nums, squares, h - 1)), den


class Tower(object):
    """Real quadratic tower Q(x_1)...(x_h) with every x_j > 0.

    Level j adjoins x_j with x_j**2 = square_j, an element with integer
    coefficients of the level below.
    """

    _registry = {}
    _registry_lock = threading.Lock()

    def __init__(self, parent=None, name=None, square=None):
        self.parent = parent
        self.name = name
        if parent is None:
            self.height = 0
            self.names = ()
            self.squares = ()
            self.key = ()
        else:
            self.height = parent.height + 1
            self.names = parent.names + (name,)
            self.squares = parent.squares + (list(square),)
            self.key = parent.key + ((name, tuple(square)),)
        self.degree = 1 << self.height
        self._monomials = {}

    def __repr__(self):
        if not self.height:
            return 'Tower(Q)'
        return 'Tower(Q(%s))' % ', '.join(self.names)

    def extends(self, other):
        tower = self
        while tower is not None:
            if tower is other:
                return True
            tower = tower.parent
        return False

    def ancestor(self, height):
        tower = self
        while tower.height > height:
            tower = tower.parent
        return tower

    def element(self, coefficients):
        coefficients = [Fraction(c) for c in coefficients]
        if len(coefficients) != self.degree:
            raise ValueError(
                'Expected %d coefficients, got %d' %
                (self.degree, len(coefficients)))
        den = reduce(
            lambda x, y: x * y // math.gcd(x, y),
            (c.denominator for c in coefficients), 1)
        return AlgebraicNumber(
            self, [int(c * den) for c in coefficients], den)

    def rational(self, value):
        value = Fraction(value)
        return AlgebraicNumber(
            self, [value.numerator] + [0] * (self.degree - 1),
            value.denominator)

    def zero(self):
        return self.rational(0)

    def one(self):
        return self.rational(1)

    def generator(self, level=None):
        """Return x_level (the top generator by default) as an element."""
        if level is None:
            level = self.height
        if not 1 <= level <= self.height:
            raise ValueError('No generator of level %s in %r' % (level, self))
        nums = [0] * self.degree
        nums[1 << (level - 1)] = 1
        return AlgebraicNumber(self, nums, 1)

    def coerce(self, value):
        if isinstance(value, AlgebraicNumber):
            return value.embed(self)
        return self.rational(value)

    def adjoin_sqrt(self, radicand, name=None):
        """Return the tower extended by the square root of radicand.

        The new generator is den * sqrt(radicand) where den is the common
        denominator of the radicand, so its square has integer coefficients.
        """
        radicand = self.coerce(radicand)
        if radicand.sign() <= 0:
            raise ValueError(
                'Radicand must be positive to adjoin a real root: %s' %
                radicand)
        if try_sqrt(radicand) is not None:
            raise ValueError(
                'Radicand %s is already a square in %r' % (radicand, self))
        square = [n * radicand.den for n in radicand.nums]
        name = name or 'r%d' % (self.height + 1)
        tower = self._intern(name, square)
        logger.debug(
            "adjoined '%s' with square %s to %r (height %d)" %
            (name, radicand * radicand.den * radicand.den, self,
             tower.height))
        return tower

    def _intern(self, name, square):
        key = self.key + ((name, tuple(square)),)
        with Tower._registry_lock:
            tower = Tower._registry.get(key)
            if tower is None:
                tower = Tower(self, name, square)
                Tower._registry[key] = tower
        return tower

    def describe(self):
        return [
            [name, [str(c) for c in square]]
            for name, square in zip(self.names, self.squares)]

    @classmethod
    def from_description(cls, levels):
        tower = QQ
        for name, square in levels:
            square = [int(Fraction(c)) for c in square]
            tower = tower.adjoin_sqrt(
                AlgebraicNumber(tower, square, 1), name=name)
        return tower

    def monomial_intervals(self, bits):
        """Integer bounds (lo, hi) of every basis monomial, scaled by 2**bits.

        All monomials are positive since every generator is.
        """
        cached = self._monomials.get(bits)
        if cached is not None:
            return cached
        if self.parent is None:
            one = 1 << bits
            cached = ([one], [one])
        else:
            lo, hi = self.parent.monomial_intervals(bits)
            square = self.squares[-1]
            square_lo = sum(
                c * (lo[m] if c > 0 else hi[m])
                for m, c in enumerate(square) if c)
            square_hi = sum(
                c * (hi[m] if c > 0 else lo[m])
                for m, c in enumerate(square) if c)
            gen_lo = math.isqrt(max(square_lo, 0) << bits)
            gen_hi = math.isqrt(square_hi << bits) + 1
            cached = (
                lo + [(x * gen_lo) >> bits for x in lo],
                hi + [-((-x * gen_hi) >> bits) for x in hi])
        self._monomials[bits] = cached
        return cached


QQ = Tower()


@total_ordering
class AlgebraicNumber(object):
    """Element of a Tower: integer numerators over a common denominator."""

    __slots__ = ('tower', 'nums', 'den')

    def __init__(self, tower, nums, den=1):
        if den == 0:
            raise ZeroDivisionError('Zero denominator')
        nums = list(nums)
        if len(nums) != tower.degree:
            raise ValueError(
                'Expected %d numerators, got %d' % (tower.degree, len(nums)))
        if den < 0:
            nums = [-n for n in nums]
            den = -den
        g = reduce(math.gcd, nums, den)
        if g > 1:
            nums = [n // g for n in nums]
            den //= g
        self.tower = tower
        self.nums = nums
        self.den = den

    @property
    def coefficients(self):
        return tuple(Fraction(n, self.den) for n in self.nums)

    def embed(self, tower):
        if tower is self.tower:
            return self
        if not tower.extends(self.tower):
            raise IncompatibleTowers(
                'Cannot embed %r into %r' % (self.tower, tower))
        return AlgebraicNumber(
            tower, self.nums + [0] * (tower.degree - self.tower.degree),
            self.den)

    def is_rational(self):
        return not any(self.nums[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError('%s is not rational' % self)
        return Fraction(self.nums[0], self.den)

    def split(self):
        """Return (p, q) in the parent tower with self = p + q * x_top."""
        parent = self.tower.parent
        if parent is None:
            raise ValueError('Rational numbers do not split')
        half = parent.degree
        return (
            AlgebraicNumber(parent, self.nums[:half], self.den),
            AlgebraicNumber(parent, self.nums[half:], self.den))

    def _common(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.tower is self.tower:
                return self, other
            if self.tower.extends(other.tower):
                return self, other.embed(self.tower)
            if other.tower.extends(self.tower):
                return self.embed(other.tower), other
            raise IncompatibleTowers(
                'No common tower for %r and %r' % (self.tower, other.tower))
        if isinstance(other, (int, Fraction)):
            return self, self.tower.rational(other)
        return None, None

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return AlgebraicNumber(
            a.tower, [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)],
            a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.tower, [-x for x in self.nums], self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return AlgebraicNumber(
            a.tower, [x * b.den - y * a.den for x, y in zip(a.nums, b.nums)],
            a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        tower = a.tower
        return AlgebraicNumber(
            tower, _mul(a.nums, b.nums, tower.squares, tower.height),
            a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError('Inverse of zero')
        tower = self.tower
        nums, den = _inv(self.nums, tower.squares, tower.height)
        return AlgebraicNumber(
            tower, [n * self.den for n in nums], den)

    def __truediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = self.tower.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        nums = list(self.nums)
        while len(nums) > 1 and nums[-1] == 0:
            nums.pop()
        if len(nums) == 1:
            return hash(Fraction(nums[0], self.den))
        return hash((tuple(nums), self.den))

    def __lt__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return (a - b).sign() < 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self):
        return sign(self)

    def interval(self, bits):
        lo, hi = self.tower.monomial_intervals(bits)
        scaled_lo = 0
        scaled_hi = 0
        for m, n in enumerate(self.nums):
            if n > 0:
                scaled_lo += n * lo[m]
                scaled_hi += n * hi[m]
            elif n < 0:
                scaled_lo += n * hi[m]
                scaled_hi += n * lo[m]
        den = self.den << bits
        return RationalInterval(
            Fraction(scaled_lo, den), Fraction(scaled_hi, den))

    def to_interval(self, width_bound):
        return to_interval(self, width_bound)

    def to_decimal(self, digits=30):
        interval = to_interval(self, Fraction(1, 10 ** (digits + 2)))
        scaled = round((interval.lo + interval.hi) / 2 * 10 ** digits)
        sign_ = '-' if scaled < 0 else ''
        text = str(abs(scaled)).rjust(digits + 1, '0')
        if not digits:
            return sign_ + text
        return '%s%s.%s' % (sign_, text[:-digits], text[-digits:])

    def to_json(self):
        return {
            'tower': self.tower.describe(),
            'coefficients': [str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data):
        tower = Tower.from_description(data['tower'])
        return tower.element(data['coefficients'])

    def __str__(self):
        terms = []
        for m, n in enumerate(self.nums):
            if not n:
                continue
            coefficient = Fraction(n, self.den)
            names = [
                self.tower.names[j] for j in range(self.tower.height)
                if m >> j & 1]
            magnitude = abs(coefficient)
            if not names:
                text = str(magnitude)
            elif magnitude == 1:
                text = '*'.join(names)
            else:
                text = '*'.join([str(magnitude)] + names)
            terms.append((coefficient < 0, text))
        if not terms:
            return '0'
        negative, text = terms[0]
        parts = ['-' + text if negative else text]
        for negative, text in terms[1:]:
            parts.append(('- ' if negative else '+ ') + text)
        return ' '.join(parts)

    def __repr__(self):
        return 'AlgebraicNumber(%s)' % self


def sign(a):
    """Return -1, 0 or 1, refining the enclosing interval until 0 is out."""
    if isinstance(a, (int, Fraction)):
        return (a > 0) - (a < 0)
    if not a:
        return 0
    bits = 32
    while True:
        interval = a.interval(bits)
        if interval.lo > 0:
            return 1
        if interval.hi < 0:
            return -1
        bits *= 2
        if bits > 1024:
            logger.debug('sign of %s needs %d bits' % (a, bits))


def to_interval(a, width_bound):
    width_bound = Fraction(width_bound)
    if width_bound <= 0:
        raise ValueError('Interval width bound must be positive')
    if a.is_rational():
        value = a.to_fraction()
        return RationalInterval(value, value)
    bits = 32
    while True:
        interval = a.interval(bits)
        if interval.width <= width_bound:
            return interval
        bits *= 2


def try_sqrt(a):
    """Return the nonnegative square root of a inside its tower, or None."""
    s = sign(a)
    if s < 0:
        raise ValueError('Square root of negative number %s' % a)
    if s == 0:
        return a.tower.zero()
    return _sqrt_in(a.tower, a)


def _sqrt_nonneg(tower, a):
    s = a.sign()
    if s < 0:
        return None
    if s == 0:
        return tower.zero()
    return _sqrt_in(tower, a)


def _sqrt_in(tower, a):
    a = a.embed(tower)
    if tower.parent is None:
        product = a.nums[0] * a.den
        root = math.isqrt(product)
        if root * root != product:
            return None
        return tower.rational(Fraction(root, a.den))
    parent = tower.parent
    x = tower.generator()
    square = AlgebraicNumber(parent, tower.squares[-1], 1)
    p, q = a.split()
    if not q:
        # a lies in the parent: its root is either in the parent or
        # a parent multiple of x
        root = _sqrt_in(parent, p)
        if root is not None:
            return root.embed(tower)
        root = _sqrt_in(parent, p / square)
        if root is not None:
            return root.embed(tower) * x
        return None
    norm = p * p - q * q * square
    n = _sqrt_nonneg(parent, norm)
    if n is None:
        return None
    for candidate in ((p + n) / 2, (p - n) / 2):
        root_p = _sqrt_nonneg(parent, candidate)
        if not root_p:
            continue
        root_q = q / (2 * root_p)
        root = root_p.embed(tower) + root_q.embed(tower) * x
        if root * root == a:
            return root if root.sign() >= 0 else -root
    return None


def adjoin_sqrt(tower, radicand, name=None):
    return tower.adjoin_sqrt(radicand, name=name)


def sqrt_or_adjoin(radicand, name=None):
    """Return (tower, root) with root the nonnegative square root.

    The radicand's own tower is used when it already contains the root,
    otherwise it is extended by one level.
    """
    root = try_sqrt(radicand)
    if root is not None:
        return radicand.tower, root
    tower = radicand.tower.adjoin_sqrt(radicand, name=name)
    logger.debug(
        "root of %s is not in %r, adjoined '%s'" %
        (radicand, radicand.tower, tower.name))
    return tower, tower.generator() / radicand.den


@lru_cache(maxsize=None)
def canonical_field():
    """Return K = Q(sqrt2)(sqrt3)(sqrt5)(u) with u = sqrt(10 - 2 sqrt5)."""
    tower = QQ.adjoin_sqrt(2, 'sqrt2')
    tower = tower.adjoin_sqrt(3, 'sqrt3')
    tower = tower.adjoin_sqrt(5, 'sqrt5')
    sqrt5 = tower.generator()
    return tower.adjoin_sqrt(10 - 2 * sqrt5, 'u')


@lru_cache(maxsize=None)
def named_constants():
    field = canonical_field()
    sqrt2 = field.generator(1)
    sqrt3 = field.generator(2)
    sqrt5 = field.generator(3)
    u = field.generator(4)
    # sqrt(10 + 2 sqrt5) * u = 4 sqrt5
    return {
        'sqrt2': sqrt2,
        'sqrt3': sqrt3,
        'sqrt5': sqrt5,
        'sqrt6': sqrt2 * sqrt3,
        'u': u,
        'cos_2pi_5': (sqrt5 - 1) / 4,
        'sin_2pi_5': sqrt5 / u,
        'cos_pi_5': (sqrt5 + 1) / 4,
        'sin_pi_5': u / 4,
    }
