from collections import namedtuple
from fractions import Fraction
import logging

logger = logging.getLogger(__name__)


class MatrixError(ValueError):
    pass


def _dot(row, column):
    products = [x * y for x, y in zip(row, column)]
    result = products[0]
    for product in products[1:]:
        result = result + product
    return result


class Matrix(object):
    """Dense matrix over any ring with +, -, * and exact ==.

    Entries may be AlgebraicNumber, Poly, Jet or plain ints / Fractions.
    Inverses are never taken.
    """

    __slots__ = ('rows',)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        if not rows or not rows[0]:
            raise MatrixError('Matrix needs at least one entry')
        if any(len(row) != len(rows[0]) for row in rows):
            raise MatrixError('Rows of different length')
        self.rows = rows

    @classmethod
    def identity(cls, n=3, one=1, zero=0):
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries, zero=0):
        n = len(entries)
        return cls(
            [[entries[i] if i == j else zero for j in range(n)]
             for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def map(self, function):
        return Matrix([[function(x) for x in row] for row in self.rows])

    def transpose(self):
        return Matrix(zip(*self.rows))

    @property
    def T(self):
        return self.transpose()

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise MatrixError(
                'Shape mismatch %s vs %s' % (self.shape, other.shape))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [[x + y for x, y in zip(r, s)]
             for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_shape(other)
        return Matrix(
            [[x - y for x, y in zip(r, s)]
             for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.shape[1] != other.shape[0]:
                raise MatrixError(
                    'Cannot multiply %s by %s' % (self.shape, other.shape))
            columns = list(zip(*other.rows))
            return Matrix(
                [[_dot(row, column) for column in columns]
                 for row in self.rows])
        return self.map(lambda x: x * other)

    def __rmul__(self, scalar):
        return self.map(lambda x: scalar * x)

    def apply(self, vector):
        if len(vector) != self.shape[1]:
            raise MatrixError('Vector of wrong length %d' % len(vector))
        return tuple(_dot(row, vector) for row in self.rows)

    def trace(self):
        n, m = self.shape
        if n != m:
            raise MatrixError('Trace of a non square matrix')
        return _dot(
            [self.rows[i][i] for i in range(n)], [1] * n)

    def det(self):
        n, m = self.shape
        if n != m:
            raise MatrixError('Determinant of a non square matrix')
        return _det(self.rows)

    def is_identity(self):
        n, m = self.shape
        return n == m and all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(m))

    def is_zero(self):
        return all(x == 0 for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self.rows, other.rows)
            for x, y in zip(r, s))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.rows]
        widths = [max(len(row[j]) for row in cells)
                  for j in range(len(cells[0]))]
        return '\n'.join(
            '[ ' + '  '.join(c.rjust(w) for c, w in zip(row, widths)) + ' ]'
            for row in cells)

    def __repr__(self):
        return 'Matrix(%r)' % (self.rows,)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return (
            a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    # cofactor expansion along the first row, skipping zeros
    result = None
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _det(minor)
        if j % 2:
            term = -term
        result = term if result is None else result + term
    return 0 if result is None else result


def mat_arith(a, b=None, op='mul'):
    if op == 'mul':
        return a * b
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'transpose':
        return a.transpose()
    if op == 'det':
        return a.det()
    if op == 'trace':
        return a.trace()
    if op == 'scalar_mul':
        return a * b
    raise MatrixError("Unknown matrix operation '%s'" % op)


def is_special_orthogonal(m):
    if m.shape != (3, 3):
        return False
    return (m * m.transpose()).is_identity() and m.det() == 1


class IntMatrix(object):
    """Integer matrix; rows or columns may be empty."""

    __slots__ = ('rows', 'nrows', 'ncols')

    def __init__(self, rows, ncols=None):
        self.rows = [list(row) for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise MatrixError('Column count needed for a matrix without '
                                  'rows')
            ncols = len(self.rows[0])
        self.ncols = ncols
        if any(len(row) != ncols for row in self.rows):
            raise MatrixError('Rows of different length')

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n):
        return cls(
            [[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    def transpose(self):
        return IntMatrix(
            [[self.rows[i][j] for i in range(self.nrows)]
             for j in range(self.ncols)], ncols=self.nrows)

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise MatrixError(
                'Cannot multiply %dx%d by %dx%d' %
                (self.nrows, self.ncols, other.nrows, other.ncols))
        result = []
        for row in self.rows:
            out = [0] * other.ncols
            for k, x in enumerate(row):
                if x:
                    for j, y in enumerate(other.rows[k]):
                        if y:
                            out[j] += x * y
            result.append(out)
        return IntMatrix(result, ncols=other.ncols)

    def is_zero(self):
        return not any(any(row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == \
            (other.nrows, other.ncols, other.rows)

    __hash__ = None

    def __repr__(self):
        return 'IntMatrix(%r)' % (self.rows,)


SmithForm = namedtuple('SmithForm', ['diagonal', 'left', 'right'])


def smith_normal_form(m):
    """Return d, L, R with L * m * R diagonal and d_1 | d_2 | ...

    The pivot is always a smallest nonzero entry of the remaining block.
    The transforms are verified by re-multiplication before returning.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    a = [list(row) for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    left = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    right = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def add_row(target, source, k):
        a[target] = [x + k * y for x, y in zip(a[target], a[source])]
        left[target] = [
            x + k * y for x, y in zip(left[target], left[source])]

    def add_column(target, source, k):
        for row in a:
            row[target] += k * row[source]
        for row in right:
            row[target] += k * row[source]

    s = 0
    while s < min(nrows, ncols):
        pivot = _nonzero_min_abs(a, s)
        if pivot is None:
            break
        i, j = pivot
        a[s], a[i] = a[i], a[s]
        left[s], left[i] = left[i], left[s]
        for row in a:
            row[s], row[j] = row[j], row[s]
        for row in right:
            row[s], row[j] = row[j], row[s]

        done = True
        for i in range(s + 1, nrows):
            if a[i][s]:
                add_row(i, s, -(a[i][s] // a[s][s]))
                done = done and not a[i][s]
        for j in range(s + 1, ncols):
            if a[s][j]:
                add_column(j, s, -(a[s][j] // a[s][s]))
                done = done and not a[s][j]
        if not done:
            continue

        # move an entry not divisible by the pivot into the pivot row
        non_divisible = _find_non_divisible(a, s)
        if non_divisible is not None:
            add_row(s, non_divisible, 1)
            continue
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            left[s] = [-x for x in left[s]]
        s += 1

    diagonal = [a[i][i] for i in range(min(nrows, ncols))]
    form = SmithForm(
        diagonal, IntMatrix(left, ncols=nrows), IntMatrix(right, ncols=ncols))
    _certify_smith(m, form)
    return form


def _nonzero_min_abs(a, s):
    best = None
    best_value = None
    for i in range(s, len(a)):
        row = a[i]
        for j in range(s, len(row)):
            x = row[j]
            if x and (best_value is None or abs(x) < best_value):
                best = (i, j)
                best_value = abs(x)
                if best_value == 1:
                    return best
    return best


def _find_non_divisible(a, s):
    pivot = a[s][s]
    for i in range(s + 1, len(a)):
        for j in range(s + 1, len(a[i])):
            if a[i][j] % pivot:
                return i
    return None


def _certify_smith(m, form):
    product = form.left * m * form.right
    for i in range(product.nrows):
        for j in range(product.ncols):
            expected = form.diagonal[i] if i == j else 0
            if product.rows[i][j] != expected:
                raise RuntimeError(
                    'Smith normal form failed to certify at (%d, %d)' % (i, j))
    nonzero = [d for d in form.diagonal if d]
    for x, y in zip(nonzero, nonzero[1:]):
        if y % x:
            raise RuntimeError(
                'Smith invariant factors do not divide: %d, %d' % (x, y))


def int_rank_det(m):
    """Return (rank over Q, determinant or None if not square)."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    a = [[Fraction(x) for x in row] for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    rank = 0
    det = Fraction(1)
    for col in range(ncols):
        pivot = next(
            (i for i in range(rank, nrows) if a[i][col]), None)
        if pivot is None:
            det = Fraction(0)
            continue
        if pivot != rank:
            a[rank], a[pivot] = a[pivot], a[rank]
            det = -det
        det *= a[rank][col]
        for i in range(rank + 1, nrows):
            if a[i][col]:
                factor = a[i][col] / a[rank][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == nrows:
            break
    if nrows != ncols:
        return rank, None
    if rank < nrows:
        return rank, 0
    return rank, int(det)
