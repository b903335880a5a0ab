from functools import lru_cache
import logging
import re

logger = logging.getLogger(__name__)


class UnknownGenerator(ValueError):
    pass


_CYCLE = re.compile(r'\(([^()]*)\)')


class Perm(object):
    """Permutation of 1..n, stored 0-based.

    Products follow the GAP convention: p * q applies p first.
    """

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError('Not a bijection: %s' % (images,))
        self.images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def parse(cls, text, degree=None):
        """Parse cycle notation such as '(2,5)(3,4)' or '()'."""
        stripped = re.sub(r'\s+', '', text)
        if _CYCLE.sub('', stripped):
            raise ValueError("Invalid cycle notation '%s'" % text)
        cycles = []
        for body in _CYCLE.findall(stripped):
            if not body:
                continue
            try:
                cycle = [int(x) for x in body.split(',')]
            except ValueError:
                raise ValueError("Invalid cycle notation '%s'" % text)
            if min(cycle) < 1 or len(set(cycle)) != len(cycle):
                raise ValueError("Invalid cycle '(%s)'" % body)
            cycles.append(cycle)
        largest = max([max(c) for c in cycles] + [degree or 0])
        images = list(range(largest))
        seen = set()
        for cycle in cycles:
            if seen.intersection(cycle):
                raise ValueError("Cycles of '%s' are not disjoint" % text)
            seen.update(cycle)
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                images[x - 1] = y - 1
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(
                'Degrees %d and %d differ' % (self.degree, other.degree))
        return Perm(other.images[x] for x in self.images)

    def inverse(self):
        images = [0] * self.degree
        for x, y in enumerate(self.images):
            images[y] = x
        return Perm(images)

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        result = Perm.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.images))

    def order(self):
        power = self
        n = 1
        while not power.is_identity():
            power = power * self
            n += 1
        return n

    def cycles(self):
        seen = set()
        cycles = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            cycles.append(tuple(cycle))
        return cycles

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __ne__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images != other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join(
            '(%s)' % ','.join(str(x + 1) for x in cycle) for cycle in cycles)

    def __repr__(self):
        return 'Perm(%s)' % self


def _closure(generators, degree):
    identity = Perm.identity(degree)
    elements = {identity}
    queue = [identity]
    while queue:
        element = queue.pop()
        for generator in generators:
            product = element * generator
            if product not in elements:
                elements.add(product)
                queue.append(product)
    return elements


class PermGroup(object):
    """Permutation group with all its elements enumerated.

    Elements are sorted by their image tuples, so the identity comes first.
    """

    def __init__(self, generators, degree=None, name=None, _elements=None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError('Degree needed for a group without '
                                 'generators')
            degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError('Generators of different degree')
        self.generators = generators
        self.degree = degree
        self.name = name
        if _elements is None:
            _elements = _closure(generators, degree)
        self.elements = tuple(sorted(_elements))
        self.key = frozenset(self.elements)

    @classmethod
    def from_elements(cls, elements, degree, name=None):
        """Build a group from a closed set, picking generators greedily."""
        elements = frozenset(elements)
        generators = []
        spanned = {Perm.identity(degree)}
        for element in sorted(elements):
            if element not in spanned:
                generators.append(element)
                spanned = _closure(generators, degree)
        if spanned != elements:
            raise ValueError('Elements are not closed under multiplication')
        return cls(generators, degree, name=name, _elements=elements)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.key

    def identity(self):
        return self.elements[0]

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.key == other.key

    def __ne__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.key != other.key

    def __hash__(self):
        return hash(self.key)

    def is_subgroup_of(self, other):
        return self.key <= other.key

    def is_trivial(self):
        return self.order == 1

    def conjugate(self, g):
        """Return g^-1 H g."""
        g_inv = g.inverse()
        return PermGroup.from_elements(
            (g_inv * h * g for h in self.elements), self.degree)

    def intersection(self, other):
        return PermGroup.from_elements(
            self.key & other.key, self.degree)

    def join(self, other):
        return PermGroup(self.generators + other.generators, self.degree)

    def normalizer(self, h):
        return PermGroup.from_elements(
            (g for g in self.elements if h.conjugate(g) == h), self.degree)

    def derived_subgroup(self):
        commutators = {
            x.inverse() * y.inverse() * x * y
            for x in self.generators for y in self.generators}
        # normal closure of the generator commutators
        elements = _closure(list(commutators), self.degree)
        changed = True
        while changed:
            changed = False
            for g in self.generators:
                for c in list(elements):
                    conjugate = g.inverse() * c * g
                    if conjugate not in elements:
                        elements = _closure(
                            list(elements) + [conjugate], self.degree)
                        changed = True
                        break
                if changed:
                    break
        return PermGroup.from_elements(elements, self.degree)

    def is_solvable(self):
        group = self
        while not group.is_trivial():
            derived = group.derived_subgroup()
            if derived == group:
                return False
            group = derived
        return True

    def coset_representative(self, g, h):
        """Return the smallest element of the left coset g H."""
        return min(g * x for x in h.elements)

    def left_cosets(self, h):
        representatives = set()
        for g in self.elements:
            representatives.add(self.coset_representative(g, h))
        return sorted(representatives)

    def index(self, h):
        return self.order // h.order

    def describe(self):
        if self.name:
            return '%s (order %d)' % (self.name, self.order)
        return 'order %d' % self.order

    def __repr__(self):
        return 'PermGroup(<%s>, %s)' % (
            ', '.join(str(g) for g in self.generators), self.describe())


def group_closure(generators, degree=None):
    return PermGroup(generators, degree=degree)


def is_solvable(h):
    return h.is_solvable()


class SubgroupLattice(object):
    """All subgroups of a small group, built by joining cyclic subgroups."""

    def __init__(self, group):
        self.group = group
        cyclic = {}
        for g in group.elements:
            h = PermGroup([g], group.degree)
            cyclic.setdefault(h.key, h)
        cyclic = sorted(cyclic.values(), key=_sort_key)
        known = {h.key: h for h in cyclic}
        frontier = list(cyclic)
        while frontier:
            discovered = []
            for h in frontier:
                for c in cyclic:
                    if c.key <= h.key:
                        continue
                    joined = h.join(c)
                    if joined.key not in known:
                        known[joined.key] = joined
                        discovered.append(joined)
            frontier = discovered
        self.subgroups = sorted(known.values(), key=_sort_key)
        self._position = {h.key: i for i, h in enumerate(self.subgroups)}
        self._classes = self._conjugacy_classes()
        logger.debug(
            'lattice of %s: %d subgroups in %d conjugacy classes' %
            (group.describe(), len(self.subgroups), len(self._classes)))

    def _conjugacy_classes(self):
        class_of = {}
        classes = []
        for h in self.subgroups:
            if h.key in class_of:
                continue
            members = {}
            for g in self.group.elements:
                conjugate = h.conjugate(g)
                members.setdefault(conjugate.key, conjugate)
            members = sorted(
                (self.find(c) for c in members.values()), key=_sort_key)
            for member in members:
                class_of[member.key] = len(classes)
            classes.append(members)
        self._class_of = class_of
        return classes

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def find(self, h):
        """Return the lattice's own instance equal to h."""
        try:
            return self.subgroups[self._position[h.key]]
        except KeyError:
            raise ValueError('%r is not a subgroup of %r' % (h, self.group))

    def above(self, h):
        return [k for k in self.subgroups if h.key < k.key]

    def conjugacy_classes(self):
        return [list(members) for members in self._classes]

    def class_of(self, h):
        return self._class_of[h.key]

    def representatives(self):
        return [members[0] for members in self._classes]

    def maximal_subgroups(self):
        proper = [h for h in self.subgroups if h.key != self.group.key]
        return [
            h for h in proper
            if not any(h.key < k.key for k in proper)]

    def solvable_family(self):
        return [h for h in self.subgroups if h.is_solvable()]


def _sort_key(h):
    return h.order, h.elements


def subgroup_lattice(group):
    return SubgroupLattice(group)


PHI_IMAGES = {
    'a': '(2,5)(3,4)',
    'b': '(3,5,4)',
    'c': '(1,2)(3,5)',
    'd': '(2,5)(3,4)',
}
_EXTRA = re.compile(r'x[0-9]+$')


@lru_cache(maxsize=None)
def a5_generators():
    return {name: Perm.parse(text, 5) for name, text in PHI_IMAGES.items()}


@lru_cache(maxsize=None)
def alternating_a5():
    images = a5_generators()
    return PermGroup(
        [images['a'], images['b'], images['c']], 5, name='A5')


@lru_cache(maxsize=None)
def a5_subgroups():
    """The stabilizers of the three vertex orbits and their intersections."""
    g = a5_generators()
    h1 = PermGroup([g['a'], g['b']], 5, name='H1')
    h2 = PermGroup([g['b'], g['c']], 5, name='H2')
    h3 = PermGroup([g['c'], g['d']], 5, name='H3')
    return {
        'H1': h1,
        'H2': h2,
        'H3': h3,
        'H12': PermGroup([g['b']], 5, name='H12'),
        'H23': PermGroup([g['c']], 5, name='H23'),
        'H13': PermGroup([g['d']], 5, name='H13'),
    }


@lru_cache(maxsize=None)
def a5_lattice():
    return SubgroupLattice(alternating_a5())


def evaluate_word(word, images, degree):
    """Image of a word under a map of generator names to permutations."""
    result = Perm.identity(degree)
    for name, exponent in word.letters:
        try:
            image = images[name]
        except KeyError:
            raise UnknownGenerator("Unknown generator '%s'" % name)
        result = result * image ** exponent
    return result


def phi_eval(word):
    """Evaluate a word in a, b, c, d, x0, x1, ... in A5, every x_i -> 1."""
    if isinstance(word, str):
        from a5verify.fpgroups import parse_word
        word = parse_word(word)
    images = dict(a5_generators())
    identity = Perm.identity(5)
    for name, _ in word.letters:
        if name not in images and _EXTRA.match(name):
            images[name] = identity
    return evaluate_word(word, images, 5)


def kernel_check(word):
    return phi_eval(word).is_identity()
