from collections import namedtuple
import logging
import re

from a5verify.groups import evaluate_word
from a5verify.groups import Perm
from a5verify.groups import PermGroup
from a5verify.linalg import int_rank_det
from a5verify.linalg import IntMatrix
import yaml

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 200000


class WordSyntaxError(ValueError):

    def __init__(self, message, text, position):
        super(WordSyntaxError, self).__init__(
            '%s at position %d of %r' % (message, position, text))
        self.text = text
        self.position = position


class PresentationError(ValueError):
    pass


class CosetBudgetExceeded(RuntimeError):
    pass


class CosetTableError(RuntimeError):
    pass


class NormalizationError(ValueError):
    pass


class FreeWord(object):
    """Freely reduced word, a tuple of (generator, nonzero exponent)."""

    __slots__ = ('letters',)

    def __init__(self, letters=()):
        reduced = []
        for name, exponent in letters:
            if not exponent:
                continue
            if reduced and reduced[-1][0] == name:
                exponent += reduced.pop()[1]
                if not exponent:
                    continue
            reduced.append((name, exponent))
        self.letters = tuple(reduced)

    @classmethod
    def generator(cls, name, exponent=1):
        return cls([(name, exponent)])

    def expand(self):
        """Return the letters as a list of (name, 1 or -1)."""
        result = []
        for name, exponent in self.letters:
            step = 1 if exponent > 0 else -1
            result.extend([(name, step)] * abs(exponent))
        return result

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.letters + other.letters)

    def inverse(self):
        return FreeWord((name, -e) for name, e in reversed(self.letters))

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        return FreeWord(base.letters * abs(exponent))

    def generators(self):
        return {name for name, _ in self.letters}

    def exponent_sum(self, name):
        return sum(e for n, e in self.letters if n == name)

    def substitute(self, mapping):
        """Replace generators by words; unmapped generators are kept."""
        result = []
        for name, exponent in self.letters:
            image = mapping.get(name)
            if image is None:
                result.append((name, exponent))
            else:
                result.extend((image ** exponent).letters)
        return FreeWord(result)

    def cyclically_reduced(self):
        letters = self.expand()
        while len(letters) > 1 and letters[0][0] == letters[-1][0] and \
                letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return FreeWord(letters)

    def cyclic_key(self):
        """Canonical key of the word up to cyclic rotation and inversion."""
        keys = []
        for word in (self.cyclically_reduced(),
                     self.cyclically_reduced().inverse()):
            letters = word.expand()
            for i in range(max(len(letters), 1)):
                keys.append(tuple(letters[i:] + letters[:i]))
        return min(keys)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __ne__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters != other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        if not self.letters:
            return '1'
        return ' '.join(
            name if e == 1 else '%s^%d' % (name, e)
            for name, e in self.letters)

    def __repr__(self):
        return 'FreeWord(%s)' % self


_TOKEN = re.compile(
    r'\s*(?:(?P<name>[A-Za-z][0-9]*(?:_[A-Za-z0-9]+)*)'
    r'|(?P<int>[+-]?[0-9]+)|(?P<op>[()*^=]))')


def _tokenize(text):
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            raise WordSyntaxError('Unexpected character', text, position)
        start = match.start(match.lastgroup)
        tokens.append((match.lastgroup, match.group(match.lastgroup), start))
        position = match.end()
    tokens.append(('end', None, len(text)))
    return tokens


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message):
        raise WordSyntaxError(message, self.text, self.peek()[2])

    def word(self):
        factors = [self.factor()]
        while True:
            kind, value, _ = self.peek()
            if kind == 'op' and value == '*':
                self.take()
                factors.append(self.factor())
            elif kind == 'name' or (kind == 'op' and value == '(') or \
                    (kind == 'int' and value == '1'):
                factors.append(self.factor())
            else:
                break
        result = FreeWord()
        for factor in factors:
            result = result * factor
        return result

    def factor(self):
        atom = self.atom()
        kind, value, _ = self.peek()
        if kind == 'op' and value == '^':
            self.take()
            kind, value, _ = self.peek()
            if kind != 'int':
                self.error('Expected an integer exponent')
            self.take()
            atom = atom ** int(value)
        return atom

    def atom(self):
        kind, value, _ = self.peek()
        if kind == 'name':
            self.take()
            return FreeWord.generator(value)
        if kind == 'int' and value == '1':
            self.take()
            return FreeWord()
        if kind == 'op' and value == '(':
            self.take()
            inner = self.word()
            kind, value, _ = self.peek()
            if kind != 'op' or value != ')':
                self.error("Expected ')'")
            self.take()
            return inner
        self.error('Expected a generator or (')


def parse_word(text):
    parser = _Parser(text)
    word = parser.word()
    if parser.peek()[0] != 'end':
        parser.error('Unexpected trailing input')
    return word


def parse_relator(text):
    """Parse a relator or an equation 'u = v' which becomes u v^-1."""
    parser = _Parser(text)
    lhs = parser.word()
    kind, value, _ = parser.peek()
    if kind == 'op' and value == '=':
        parser.take()
        rhs = parser.word()
        lhs = lhs * rhs.inverse()
    if parser.peek()[0] != 'end':
        parser.error('Unexpected trailing input')
    return lhs


class Presentation(object):

    def __init__(self, generators, relators, name=None):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise PresentationError('Duplicate generator names')
        relators = tuple(
            parse_relator(r) if isinstance(r, str) else r for r in relators)
        for relator in relators:
            unknown = relator.generators() - set(generators)
            if unknown:
                raise PresentationError(
                    "Relator '%s' uses undeclared generators: %s" %
                    (relator, ', '.join(sorted(unknown))))
        self.generators = generators
        self.relators = relators
        self.name = name

    @classmethod
    def parse(cls, text, name=None):
        generators = None
        relators = []
        for number, line in enumerate(text.splitlines(), 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if generators is None:
                if not line.startswith('gens:'):
                    raise PresentationError(
                        "Line %d: expected 'gens: ...'" % number)
                generators = line[len('gens:'):].replace(',', ' ').split()
                continue
            try:
                relators.append(parse_relator(line))
            except WordSyntaxError as e:
                raise PresentationError('Line %d: %s' % (number, e))
        if generators is None:
            raise PresentationError("Missing 'gens:' line")
        return cls(generators, relators, name=name)

    def add_relators(self, relators):
        relators = [
            parse_relator(r) if isinstance(r, str) else r for r in relators]
        return Presentation(
            self.generators, self.relators + tuple(relators), name=self.name)

    def to_text(self):
        lines = ['gens: %s' % ' '.join(self.generators)]
        lines.extend(str(r) for r in self.relators)
        return '\n'.join(lines) + '\n'

    def __str__(self):
        return '<%s | %s>' % (
            ', '.join(self.generators),
            ', '.join(str(r) for r in self.relators))

    def __repr__(self):
        return 'Presentation(%s)' % self


def load_presentation(source):
    """Load a presentation from a file or from 'builtin:NAME'."""
    if source.startswith('builtin:'):
        from a5verify import builtin
        return builtin.presentation(source[len('builtin:'):])
    with open(source, 'r') as h:
        text = h.read()
    if source.endswith(('.yaml', '.yml', '.json')):
        return presentation_from_yaml(text, name=source)
    return Presentation.parse(text, name=source)


def presentation_from_yaml(data, name=None):
    """Accept {gens: [...], relators: [...]} documents as well."""
    try:
        data = yaml.safe_load(data)
    except yaml.YAMLError as e:
        raise PresentationError('Input data is not valid yaml: %s' % e)
    if not isinstance(data, dict) or 'gens' not in data:
        raise PresentationError("Input data is missing the 'gens' key")
    return Presentation(
        data['gens'], data.get('relators') or [], name=name)


class _BudgetHit(Exception):
    pass


class CosetTable(object):
    """Coset table of a subgroup, enumerated by HLT with lookahead.

    Column 2 i holds generator i, column 2 i + 1 its inverse.
    """

    def __init__(self, presentation, subgroup_gens=(),
                 max_cosets=DEFAULT_MAX_COSETS):
        self.presentation = presentation
        self.subgroup_gens = tuple(
            parse_word(w) if isinstance(w, str) else w for w in subgroup_gens)
        self.max_cosets = max_cosets
        self._column = {}
        for i, name in enumerate(presentation.generators):
            self._column[(name, 1)] = 2 * i
            self._column[(name, -1)] = 2 * i + 1
        self.ncols = 2 * len(presentation.generators)
        self.relators = [self.columns(r) for r in presentation.relators]
        self.table = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.complete = False
        self.stats = {'defined': 1, 'coincidences': 0, 'lookaheads': 0}

    def columns(self, word):
        try:
            return [self._column[letter] for letter in word.expand()]
        except KeyError as e:
            raise PresentationError(
                "Word '%s' uses unknown generator '%s'" % (word, e.args[0][0]))

    # enumeration

    def enumerate(self):
        try:
            for word in self.subgroup_gens:
                self._scan_and_fill(0, self.columns(word))
        except _BudgetHit:
            raise CosetBudgetExceeded(
                'Subgroup generators alone need more than %d cosets' %
                self.max_cosets)
        p = self.p
        alpha = 0
        while alpha < len(self.table):
            if p[alpha] == alpha:
                try:
                    self._close_row(alpha)
                except _BudgetHit:
                    self.look_ahead()
                    if self.live >= self.max_cosets:
                        raise CosetBudgetExceeded(
                            'Coset enumeration exceeded %d cosets' %
                            self.max_cosets)
                    continue
            alpha += 1
        self._compress()
        self._standardize()
        self.complete = True
        logger.debug(
            'enumerated %d cosets of %s (%d defined, %d coincidences, '
            '%d lookaheads)' % (
                len(self.table), self.presentation, self.stats['defined'],
                self.stats['coincidences'], self.stats['lookaheads']))
        self.certify()
        return self

    def _close_row(self, alpha):
        p = self.p
        for word in self.relators:
            self._scan_and_fill(alpha, word)
            if p[alpha] < alpha:
                return
        row = self.table[alpha]
        for x in range(self.ncols):
            if row[x] is None:
                self._define(alpha, x)

    def _define(self, alpha, x):
        if self.live >= self.max_cosets:
            raise _BudgetHit()
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        self.live += 1
        self.stats['defined'] += 1

    def _scan(self, alpha, word, fill):
        table = self.table
        f = alpha
        b = alpha
        i = 0
        j = len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            if not fill:
                return
            self._define(f, word[i])

    def _scan_and_fill(self, alpha, word):
        self._scan(alpha, word, True)

    def look_ahead(self):
        """Scan every relator at every live coset without defining."""
        self.stats['lookaheads'] += 1
        p = self.p
        for beta in range(len(self.table)):
            if p[beta] != beta:
                continue
            for word in self.relators:
                self._scan(beta, word, False)
                if p[beta] < beta:
                    break
        logger.debug(
            'lookahead left %d live cosets' % self.live)

    def _rep(self, k):
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def _merge(self, k, lamda, queue):
        phi = self._rep(k)
        psi = self._rep(lamda)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            self.live -= 1
            queue.append(v)

    def _coincidence(self, alpha, beta):
        self.stats['coincidences'] += 1
        table = self.table
        queue = []
        self._merge(alpha, beta, queue)
        while queue:
            gamma = queue.pop(0)
            for x in range(self.ncols):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu = self._rep(gamma)
                nu = self._rep(delta)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def _renumber(self, order):
        index = {old: new for new, old in enumerate(order)}
        self.table = [
            [index[self.table[old][x]] for x in range(self.ncols)]
            for old in order]
        self.p = list(range(len(order)))
        self.live = len(order)

    def _compress(self):
        live = [i for i in range(len(self.table)) if self.p[i] == i]
        for i in live:
            if None in self.table[i]:
                raise CosetTableError('Coset %d has undefined entries' % i)
        self._renumber(live)

    def _standardize(self):
        """Number cosets in order of first appearance from coset 0."""
        order = [0]
        seen = {0}
        for coset in order:
            for x in range(self.ncols):
                target = self.table[coset][x]
                if target not in seen:
                    seen.add(target)
                    order.append(target)
        if len(order) != len(self.table):
            raise CosetTableError('Coset table is not connected')
        self._renumber(order)

    # queries

    @property
    def index(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def trace(self, coset, word):
        for x in self.columns(word):
            coset = self.table[coset][x]
        return coset

    def certify(self):
        """Check completeness, inverse columns and all relators."""
        table = self.table
        for coset, row in enumerate(table):
            for x, target in enumerate(row):
                if target is None:
                    raise CosetTableError(
                        'Entry (%d, %d) is undefined' % (coset, x))
                if table[target][x ^ 1] != coset:
                    raise CosetTableError(
                        'Columns %d and %d are not inverse at coset %d' %
                        (x, x ^ 1, coset))
        for word, relator in zip(self.relators, self.presentation.relators):
            for coset in range(len(table)):
                end = coset
                for x in word:
                    end = table[end][x]
                if end != coset:
                    raise CosetTableError(
                        "Relator '%s' does not close at coset %d" %
                        (relator, coset))
        for word in self.subgroup_gens:
            if self.trace(0, word) != 0:
                raise CosetTableError(
                    "Subgroup generator '%s' moves coset 0" % word)
        return True


def todd_coxeter(presentation, subgroup_gens=(),
                 max_cosets=DEFAULT_MAX_COSETS):
    return CosetTable(presentation, subgroup_gens, max_cosets).enumerate()


class CosetAction(object):
    """Permutation action of the generators on the cosets of a table."""

    def __init__(self, table):
        if not table.complete:
            raise CosetTableError('Coset action needs a complete table')
        self.table = table
        self.degree = len(table)
        self.images = {}
        for i, name in enumerate(table.presentation.generators):
            self.images[name] = Perm(row[2 * i] for row in table.table)

    def image(self, word):
        if isinstance(word, str):
            word = parse_word(word)
        return evaluate_word(word, self.images, self.degree)

    def relators_trivial(self):
        return all(
            self.image(r).is_identity()
            for r in self.table.presentation.relators)

    def is_transitive(self):
        orbit = {0}
        queue = [0]
        while queue:
            point = queue.pop()
            for perm in self.images.values():
                for target in (perm(point), perm.inverse()(point)):
                    if target not in orbit:
                        orbit.add(target)
                        queue.append(target)
        return len(orbit) == self.degree

    def group(self):
        return PermGroup(
            [self.images[name]
             for name in self.table.presentation.generators], self.degree)


def coset_action(table):
    return CosetAction(table)


class ExponentMatrix(IntMatrix):

    __slots__ = ('variables',)

    def __init__(self, rows, variables):
        super(ExponentMatrix, self).__init__(rows, ncols=len(variables))
        self.variables = tuple(variables)

    def __str__(self):
        widths = [
            max([len(v)] + [len(str(row[j])) for row in self.rows])
            for j, v in enumerate(self.variables)]
        lines = ['  '.join(v.rjust(w) for v, w in zip(self.variables, widths))]
        for row in self.rows:
            lines.append(
                '  '.join(str(x).rjust(w) for x, w in zip(row, widths)))
        return '\n'.join(lines)


def exponent_matrix(relators, variables):
    variables = list(variables)
    return ExponentMatrix(
        [[r.exponent_sum(v) for v in variables] for r in relators], variables)


NormalizationResult = namedtuple(
    'NormalizationResult', ['relators', 'log', 'matrix'])


def normalize_relators(relators, variables):
    """Reduce the exponent matrix to the identity by Nielsen-type moves.

    The moves are w_i -> w_i w_j, w_i -> w_i^-1 and swapping w_i, w_j,
    each recorded in the log as ('multiply', i, j), ('invert', i) or
    ('swap', i, j).
    """
    words = list(relators)
    variables = list(variables)
    matrix = exponent_matrix(words, variables)
    n = len(words)
    if n != len(variables):
        raise NormalizationError(
            'Exponent matrix is %dx%d, not square' % (n, len(variables)))
    _, det = int_rank_det(matrix)
    if det not in (1, -1):
        raise NormalizationError(
            'Exponent matrix has determinant %d, not unimodular' % det)
    rows = [list(row) for row in matrix.rows]
    log = []

    def multiply(i, j):
        words[i] = words[i] * words[j]
        rows[i] = [x + y for x, y in zip(rows[i], rows[j])]
        log.append(('multiply', i, j))

    def invert(i):
        words[i] = words[i].inverse()
        rows[i] = [-x for x in rows[i]]
        log.append(('invert', i))

    def swap(i, j):
        words[i], words[j] = words[j], words[i]
        rows[i], rows[j] = rows[j], rows[i]
        log.append(('swap', i, j))

    def add_multiple(i, j, k):
        """Add k times row_j to row_i, subtracting through two inversions."""
        if k < 0:
            invert(i)
        for _ in range(abs(k)):
            multiply(i, j)
        if k < 0:
            invert(i)

    for c in range(n):
        while True:
            candidates = [r for r in range(c, n) if rows[r][c]]
            if not candidates:
                raise NormalizationError('Exponent matrix is singular')
            pivot = min(candidates, key=lambda r: (abs(rows[r][c]), r))
            others = [r for r in candidates if r != pivot]
            if not others:
                break
            for r in others:
                add_multiple(r, pivot, -(rows[r][c] // rows[pivot][c]))
        if pivot != c:
            swap(c, pivot)
        if rows[c][c] < 0:
            invert(c)
        if rows[c][c] != 1:
            raise NormalizationError(
                'Pivot %d in column %d is not a unit' % (rows[c][c], c))
    for c in reversed(range(n)):
        for r in range(c):
            if rows[r][c]:
                add_multiple(r, c, -rows[r][c])

    result = exponent_matrix(words, variables)
    if result.rows != IntMatrix.identity(n).rows:
        raise RuntimeError('Normalization did not reach the identity')
    return NormalizationResult(words, log, result)


def normal_closure_order_check(presentation, words, variables,
                               max_cosets=DEFAULT_MAX_COSETS):
    """Coset counts of the quotient by the words before and after moves."""
    normalized = normalize_relators(words, variables)
    before = todd_coxeter(presentation.add_relators(words), (), max_cosets)
    after = todd_coxeter(
        presentation.add_relators(normalized.relators), (), max_cosets)
    return len(before), len(after)


def verify_word_identity(presentation, lhs, rhs,
                         max_cosets=DEFAULT_MAX_COSETS):
    if isinstance(lhs, str):
        lhs = parse_word(lhs)
    if isinstance(rhs, str):
        rhs = parse_word(rhs)
    action = coset_action(todd_coxeter(presentation, (), max_cosets))
    return action.image(lhs) == action.image(rhs)
