import logging

logger = logging.getLogger(__name__)

VARIABLES = ('alpha1', 'beta1', 'alpha2', 'beta2', 'alpha3', 'beta3')
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
# beta_i sits right after alpha_i
_BETAS = (1, 3, 5)


def _is_scalar(value):
    return not isinstance(value, (Poly, Jet))


def _normal_terms(exponents, coefficient):
    """Rewrite beta_i**2 -> 1 - alpha_i**2 until every beta degree is <= 1."""
    pending = [(list(exponents), coefficient)]
    done = []
    while pending:
        exps, c = pending.pop()
        for b in _BETAS:
            if exps[b] >= 2:
                reduced = list(exps)
                reduced[b] -= 2
                shifted = list(reduced)
                shifted[b - 1] += 2
                pending.append((reduced, c))
                pending.append((shifted, -c))
                break
        else:
            done.append((tuple(exps), c))
    return done


class Poly(object):
    """Polynomial in alpha1..beta3 modulo alpha_i**2 + beta_i**2 = 1.

    Terms map exponent tuples to nonzero field coefficients. The beta
    exponents are always 0 or 1, which makes the representation unique.
    """

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        result = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(VARIABLES):
                raise ValueError(
                    'Exponent vector of wrong length: %s' % (exps,))
            for key, value in _normal_terms(exps, c):
                total = result.get(key)
                result[key] = value if total is None else total + value
        self.terms = {k: v for k, v in result.items() if v}

    @classmethod
    def _raw(cls, terms):
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, value):
        if not value:
            return cls._raw({})
        return cls._raw({(0,) * len(VARIABLES): value})

    @classmethod
    def variable(cls, name):
        exps = [0] * len(VARIABLES)
        try:
            exps[_INDEX[name]] = 1
        except KeyError:
            raise ValueError("Unknown variable '%s'" % name)
        return cls._raw({tuple(exps): 1})

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, Jet):
            return None
        return Poly.constant(other)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            total = terms.get(exps)
            total = c if total is None else total + c
            if total:
                terms[exps] = total
            else:
                del terms[exps]
        return Poly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return Poly._raw({})
            scaled = ((k, v * other) for k, v in self.terms.items())
            return Poly._raw({k: v for k, v in scaled if v})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if exps[1] > 1 or exps[3] > 1 or exps[5] > 1:
                    products = _normal_terms(exps, c)
                else:
                    products = ((exps, c),)
                for key, value in products:
                    total = result.get(key)
                    result[key] = value if total is None else total + value
        return Poly._raw({k: v for k, v in result.items() if v})

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def degree(self, name):
        index = _INDEX[name]
        return max((exps[index] for exps in self.terms), default=0)

    def variables(self):
        return [
            name for i, name in enumerate(VARIABLES)
            if any(exps[i] for exps in self.terms)]

    def is_constant(self):
        return not self.variables()

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError('%s is not constant' % self)
        return self.terms[(0,) * len(VARIABLES)]

    def partial_substitute(self, values):
        """Substitute the variables named in values, keep the others."""
        indices = [(_INDEX[name], value) for name, value in values.items()]
        powers = {}
        result = {}
        for exps, c in self.terms.items():
            exps = list(exps)
            for index, value in indices:
                e = exps[index]
                if e:
                    key = (index, e)
                    if key not in powers:
                        powers[key] = value ** e
                    c = c * powers[key]
                    exps[index] = 0
            exps = tuple(exps)
            total = result.get(exps)
            result[exps] = c if total is None else total + c
        return Poly._raw({k: v for k, v in result.items() if v})

    def substitute(self, point):
        """Evaluate at a point satisfying the circle relations."""
        if not isinstance(point, dict):
            point = dict(zip(VARIABLES, point))
        missing = [name for name in VARIABLES if name not in point]
        if missing:
            raise ValueError('Point misses %s' % ', '.join(missing))
        for i in (1, 2, 3):
            alpha = point['alpha%d' % i]
            beta = point['beta%d' % i]
            if alpha * alpha + beta * beta != 1:
                raise ValueError(
                    'Point violates alpha%d^2 + beta%d^2 = 1' % (i, i))
        return self.partial_substitute(point).constant_value()

    def linear_coefficients(self, name):
        """Return (c1, c0) with self = c1 * name + c0."""
        index = _INDEX[name]
        c1 = {}
        c0 = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if e > 1:
                raise ValueError(
                    "%s is not linear in '%s'" % (self, name))
            if e:
                reduced = list(exps)
                reduced[index] = 0
                c1[tuple(reduced)] = c
            else:
                c0[exps] = c
        return Poly._raw(c1), Poly._raw(c0)

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append('%s^%d' % (name, e))
            text = str(c)
            if ' ' in text:
                text = '(%s)' % text
            if not factors:
                parts.append(text)
            elif text == '1':
                parts.append('*'.join(factors))
            elif text == '-1':
                parts.append('-' + '*'.join(factors))
            else:
                parts.append('*'.join([text] + factors))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return 'Poly(%s)' % self


def poly_arith(p, q=None, op='add'):
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    if op == 'neg':
        return -p
    raise ValueError("Unknown polynomial operation '%s'" % op)


def poly_substitute(p, point):
    if not isinstance(p, Poly):
        return p
    return p.substitute(point)


def circle_relation(i):
    alpha = Poly.variable('alpha%d' % i)
    beta = Poly.variable('beta%d' % i)
    return alpha * alpha + beta * beta - 1


class Jet(object):
    """First order jet: a value and its partial derivatives.

    Partials equal to zero are stored as None. The ring of the value does
    not need to be commutative, the product rule keeps the factor order.
    """

    __slots__ = ('value', 'partials')

    def __init__(self, value, partials):
        self.value = value
        self.partials = tuple(partials)

    @classmethod
    def constant(cls, value, size):
        return cls(value, (None,) * size)

    @classmethod
    def seed(cls, value, index, derivative, size):
        partials = [None] * size
        partials[index] = derivative
        return cls(value, partials)

    @property
    def size(self):
        return len(self.partials)

    def partial(self, index, zero=0):
        derivative = self.partials[index]
        return zero if derivative is None else derivative

    def _check(self, other):
        if other.size != self.size:
            raise ValueError(
                'Jets of different size %d and %d' % (self.size, other.size))

    def __add__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.value + other, self.partials)
        self._check(other)
        return Jet(
            self.value + other.value,
            [_add_partial(x, y)
             for x, y in zip(self.partials, other.partials)])

    def __radd__(self, other):
        return Jet(other + self.value, self.partials)

    def __neg__(self):
        return Jet(
            -self.value, [None if x is None else -x for x in self.partials])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(
                self.value * other,
                [None if x is None else x * other for x in self.partials])
        self._check(other)
        partials = []
        for df, dg in zip(self.partials, other.partials):
            left = None if df is None else df * other.value
            right = None if dg is None else self.value * dg
            partials.append(_add_partial(left, right))
        return Jet(self.value * other.value, partials)

    def __rmul__(self, other):
        return Jet(
            other * self.value,
            [None if x is None else other * x for x in self.partials])

    def inverse(self):
        inverse = self.value.inverse()
        return Jet(
            inverse,
            [None if x is None else -(inverse * x * inverse)
             for x in self.partials])

    def map(self, function):
        """Apply a ring homomorphism or anti-homomorphism entrywise."""
        return Jet(
            function(self.value),
            [None if x is None else function(x) for x in self.partials])

    def is_constant(self):
        return all(x is None or not x for x in self.partials)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        if self.size != other.size or self.value != other.value:
            return False
        for x, y in zip(self.partials, other.partials):
            if x is None and y is None:
                continue
            if x is None:
                x, y = y, x
            if y is None:
                if x:
                    return False
            elif x != y:
                return False
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return 'Jet(%s; %s)' % (
            self.value,
            ', '.join('0' if x is None else str(x) for x in self.partials))


def _add_partial(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x + y


def jet_arith(x, y=None, op='mul', function=None):
    if op == 'add':
        return x + y
    if op == 'mul':
        return x * y
    if op == 'neg':
        return -x
    if op == 'conj':
        return x.map(function)
    raise ValueError("Unknown jet operation '%s'" % op)


def commutator(f, g):
    return f * g * f.inverse() * g.inverse()
