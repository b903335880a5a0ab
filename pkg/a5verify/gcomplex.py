from collections import deque
from collections import namedtuple
from fractions import Fraction
import logging

from a5verify.fpgroups import DEFAULT_MAX_COSETS
from a5verify.fpgroups import FreeWord
from a5verify.fpgroups import Presentation
from a5verify.fpgroups import todd_coxeter
from a5verify.groups import a5_generators
from a5verify.groups import a5_subgroups
from a5verify.groups import alternating_a5
from a5verify.groups import evaluate_word
from a5verify.groups import Perm
from a5verify.groups import PermGroup
from a5verify.linalg import IntMatrix
from a5verify.linalg import smith_normal_form
import yaml

logger = logging.getLogger(__name__)


class ComplexError(ValueError):
    pass


VertexOrbit = namedtuple('VertexOrbit', ['name', 'stabilizer'])
# source and target are (vertex orbit index, group element)
EdgeOrbit = namedtuple('EdgeOrbit', ['name', 'stabilizer', 'source', 'target'])
# path is a list of (group element, edge orbit index, +1 or -1)
FaceOrbit = namedtuple('FaceOrbit', ['name', 'stabilizer', 'path'])


class OrbitComplex(object):
    """A G-CW-complex of dimension <= 2 given by one cell per orbit.

    The cells of an orbit with stabilizer H are labelled by the left cosets
    gH; a cell is the pair (orbit index, smallest element of gH).
    """

    def __init__(self, group, vertices=(), edges=(), faces=(), name=None):
        self.group = group
        self.vertices = list(vertices)
        self.edges = list(edges)
        self.faces = list(faces)
        self.name = name
        self.validate()

    def identity(self):
        return self.group.identity()

    def cell(self, stabilizer, g):
        return self.group.coset_representative(g, stabilizer)

    def edge_source(self, e, g):
        """Source vertex of the edge g.e as (orbit, coset representative)."""
        orbit, h = self.edges[e].source
        return orbit, self.cell(self.vertices[orbit].stabilizer, g * h)

    def edge_target(self, e, g):
        orbit, h = self.edges[e].target
        return orbit, self.cell(self.vertices[orbit].stabilizer, g * h)

    def step_endpoints(self, g, e, sign):
        """Start and end vertex of the oriented edge (g.e)^sign."""
        source = self.edge_source(e, g)
        target = self.edge_target(e, g)
        if sign > 0:
            return source, target
        return target, source

    def validate(self):
        for v in self.vertices:
            self._check_subgroup(v.stabilizer, v.name)
        for e in self.edges:
            self._check_subgroup(e.stabilizer, e.name)
            for orbit, g in (e.source, e.target):
                if not 0 <= orbit < len(self.vertices):
                    raise ComplexError(
                        "Edge '%s' refers to unknown vertex orbit %d" %
                        (e.name, orbit))
                # the edge stabilizer has to fix both endpoints
                fixed = self.vertices[orbit].stabilizer.conjugate(
                    g.inverse())
                if not e.stabilizer.is_subgroup_of(fixed):
                    raise ComplexError(
                        "Stabilizer of edge '%s' does not fix its endpoint "
                        "in orbit '%s'" % (e.name, self.vertices[orbit].name))
        for f in self.faces:
            self._check_subgroup(f.stabilizer, f.name)
            self._check_path(f.path, f.name)
            for g, e, _ in f.path:
                fixed = self.edges[e].stabilizer.conjugate(g.inverse())
                if not f.stabilizer.is_subgroup_of(fixed):
                    raise ComplexError(
                        "Stabilizer of face '%s' does not fix its boundary "
                        "edge in orbit '%s'" % (f.name, self.edges[e].name))

    def _check_subgroup(self, h, name):
        if not h.is_subgroup_of(self.group):
            raise ComplexError(
                "Stabilizer of '%s' is not a subgroup of the group" % name)

    def _check_path(self, path, name):
        if not path:
            raise ComplexError("Face '%s' has an empty boundary" % name)
        for g, e, sign in path:
            if not 0 <= e < len(self.edges):
                raise ComplexError(
                    "Face '%s' refers to unknown edge orbit %d" % (name, e))
            if sign not in (1, -1):
                raise ComplexError(
                    "Face '%s' uses orientation %r" % (name, sign))
        if not path_is_closed(self, path):
            raise ComplexError("Boundary of face '%s' is not closed" % name)

    def orbits(self, dimension):
        return (self.vertices, self.edges, self.faces)[dimension]

    def describe(self):
        return '%s: %d/%d/%d cell orbits' % (
            self.name or 'complex', len(self.vertices), len(self.edges),
            len(self.faces))

    def to_data(self):
        def element(g):
            return str(g)

        def stabilizer(h):
            return [str(g) for g in h.generators]

        return {
            'group': [str(g) for g in self.group.generators],
            'degree': self.group.degree,
            'vertices': [
                {'name': v.name, 'stabilizer': stabilizer(v.stabilizer)}
                for v in self.vertices],
            'edges': [
                {'name': e.name, 'stabilizer': stabilizer(e.stabilizer),
                 'source': [e.source[0], element(e.source[1])],
                 'target': [e.target[0], element(e.target[1])]}
                for e in self.edges],
            'faces': [
                {'name': f.name, 'stabilizer': stabilizer(f.stabilizer),
                 'path': [[element(g), e, s] for g, e, s in f.path]}
                for f in self.faces],
        }


def path_is_closed(c, path):
    position = None
    first = None
    for g, e, sign in path:
        start, end = c.step_endpoints(g, e, sign)
        if position is None:
            first = start
        elif start != position:
            return False
        position = end
    return position == first


def load_complex(source):
    """Read an orbit complex from a YAML or JSON file."""
    with open(source, 'r') as h:
        text = h.read()
    return complex_from_yaml(text, name=source)


def complex_from_yaml(text, name=None):
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ComplexError('Input data is not valid yaml: %s' % e)
    if not isinstance(data, dict):
        raise ComplexError('Input data is not a mapping')
    try:
        degree = int(data['degree'])
        group = PermGroup(
            [Perm.parse(g, degree) for g in data['group']], degree)
        vertices = []
        for v in data.get('vertices') or []:
            vertices.append(VertexOrbit(
                v['name'], _subgroup(v.get('stabilizer'), degree)))
        names = {v.name: i for i, v in enumerate(vertices)}
        edges = []
        for e in data.get('edges') or []:
            edges.append(EdgeOrbit(
                e['name'], _subgroup(e.get('stabilizer'), degree),
                _endpoint(e['source'], names, degree),
                _endpoint(e['target'], names, degree)))
        edge_names = {e.name: i for i, e in enumerate(edges)}
        faces = []
        for f in data.get('faces') or []:
            path = []
            for g, e, sign in f['path']:
                path.append((
                    Perm.parse(g, degree), _orbit_index(e, edge_names, 'edge'),
                    int(sign)))
            faces.append(FaceOrbit(
                f['name'], _subgroup(f.get('stabilizer'), degree), path))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ComplexError):
            raise
        raise ComplexError('Input data is not a valid complex: %s' % e)
    return OrbitComplex(group, vertices, edges, faces, name=name)


def _subgroup(generators, degree):
    return PermGroup(
        [Perm.parse(g, degree) for g in generators or []], degree)


def _orbit_index(value, names, kind):
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    try:
        return names[value]
    except (KeyError, TypeError):
        raise ComplexError('Unknown %s orbit %r' % (kind, value))


def _endpoint(value, names, degree):
    orbit, g = value
    return _orbit_index(orbit, names, 'vertex'), Perm.parse(g, degree)


class CellComplex(object):
    """Every cell of a complex listed explicitly.

    Labels identify cells (for expanded complexes (orbit, representative)),
    endpoints holds (source, target) vertex positions per edge and
    boundaries lists (edge position, sign) per face.
    """

    def __init__(self, vertices, edges, faces, endpoints, boundaries,
                 stabilizers=None, group=None):
        self.labels = (list(vertices), list(edges), list(faces))
        self.endpoints = list(endpoints)
        self.boundaries = [list(b) for b in boundaries]
        self.stabilizers = stabilizers
        self.group = group
        self._position = [
            {label: i for i, label in enumerate(labels)}
            for labels in self.labels]

    def count(self, dimension):
        return len(self.labels[dimension])

    def position(self, dimension, label):
        return self._position[dimension][label]

    def is_empty(self):
        return not any(self.labels)

    def euler_characteristic(self):
        return self.count(0) - self.count(1) + self.count(2)

    def boundary_matrices(self):
        n0, n1, n2 = self.count(0), self.count(1), self.count(2)
        d1 = IntMatrix.zeros(n0, n1)
        for j, (source, target) in enumerate(self.endpoints):
            d1.rows[target][j] += 1
            d1.rows[source][j] -= 1
        d2 = IntMatrix.zeros(n1, n2)
        for j, boundary in enumerate(self.boundaries):
            for edge, sign in boundary:
                d2.rows[edge][j] += sign
        if not (d1 * d2).is_zero():
            raise RuntimeError('Boundary of a boundary is not zero')
        return d1, d2

    def stabilizer(self, dimension, index):
        if self.stabilizers is None:
            raise ComplexError('Complex carries no group action')
        return self.stabilizers[dimension][index]

    def subcomplex(self, keep):
        """Restrict to the cells whose (dimension, position) pass keep."""
        kept = [
            [i for i in range(self.count(n)) if keep(n, i)]
            for n in range(3)]
        index = [{old: new for new, old in enumerate(k)} for k in kept]
        endpoints = []
        for j in kept[1]:
            source, target = self.endpoints[j]
            if source not in index[0] or target not in index[0]:
                raise ComplexError('Kept edge without its endpoints')
            endpoints.append((index[0][source], index[0][target]))
        boundaries = []
        for j in kept[2]:
            boundary = []
            for edge, sign in self.boundaries[j]:
                if edge not in index[1]:
                    raise ComplexError('Kept face without its boundary')
                boundary.append((index[1][edge], sign))
            boundaries.append(boundary)
        stabilizers = None
        if self.stabilizers is not None:
            stabilizers = [
                [self.stabilizers[n][i] for i in kept[n]] for n in range(3)]
        return CellComplex(
            [self.labels[0][i] for i in kept[0]],
            [self.labels[1][i] for i in kept[1]],
            [self.labels[2][i] for i in kept[2]],
            endpoints, boundaries, stabilizers, self.group)

    def one_skeleton_path(self, start, goal):
        """Shortest edge path between two vertex positions.

        Returns a list of (edge position, sign) or None.
        """
        previous = {start: None}
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            if vertex == goal:
                break
            for j, (source, target) in enumerate(self.endpoints):
                for here, there, sign in (
                        (source, target, 1), (target, source, -1)):
                    if here == vertex and there not in previous:
                        previous[there] = (vertex, j, sign)
                        queue.append(there)
        if goal not in previous:
            return None
        path = []
        vertex = goal
        while previous[vertex] is not None:
            vertex, j, sign = previous[vertex]
            path.append((j, sign))
        path.reverse()
        return path

    def __repr__(self):
        return 'CellComplex(%d/%d/%d cells)' % (
            self.count(0), self.count(1), self.count(2))


def expand(c):
    """List the cells of an orbit complex."""
    if isinstance(c, CellComplex):
        return c
    group = c.group
    conjugates = {}

    def stabilizer(h, g):
        key = (h.key, g)
        if key not in conjugates:
            conjugates[key] = h.conjugate(g.inverse())
        return conjugates[key]

    labels = ([], [], [])
    stabilizers = ([], [], [])
    for n in range(3):
        for o, orbit in enumerate(c.orbits(n)):
            for g in group.left_cosets(orbit.stabilizer):
                labels[n].append((o, g))
                stabilizers[n].append(stabilizer(orbit.stabilizer, g))
    position = [{label: i for i, label in enumerate(ls)} for ls in labels]
    endpoints = []
    for e, g in labels[1]:
        endpoints.append((
            position[0][c.edge_source(e, g)],
            position[0][c.edge_target(e, g)]))
    boundaries = []
    for f, g in labels[2]:
        boundary = []
        for h, e, sign in c.faces[f].path:
            edge = (e, c.cell(c.edges[e].stabilizer, g * h))
            boundary.append((position[1][edge], sign))
        boundaries.append(boundary)
    logger.debug(
        'expanded %s into %d/%d/%d cells' %
        (c.describe(), len(labels[0]), len(labels[1]), len(labels[2])))
    return CellComplex(
        labels[0], labels[1], labels[2], endpoints, boundaries,
        [list(s) for s in stabilizers], group)


def orbit_sizes(c):
    """Number of cells per orbit, dimension by dimension."""
    return [
        [c.group.index(orbit.stabilizer) for orbit in c.orbits(n)]
        for n in range(3)]


class HomologyResult(namedtuple('HomologyResult', ['betti', 'torsion'])):
    """Integral homology in degrees 0, 1 and 2."""

    __slots__ = ()

    def is_acyclic(self):
        return self.betti == (1, 0, 0) and not any(self.torsion)

    def is_zero(self):
        return self.betti == (0, 0, 0) and not any(self.torsion)

    def format_degree(self, n):
        parts = []
        if self.betti[n] == 1:
            parts.append('Z')
        elif self.betti[n]:
            parts.append('Z^%d' % self.betti[n])
        parts.extend('Z/%d' % t for t in self.torsion[n])
        return ' + '.join(parts) or '0'

    def __str__(self):
        return ', '.join(
            'H%d = %s' % (n, self.format_degree(n)) for n in range(3))


def homology(c):
    c = expand(c)
    d1, d2 = c.boundary_matrices()
    s1 = smith_normal_form(d1).diagonal
    s2 = smith_normal_form(d2).diagonal
    r1 = sum(1 for d in s1 if d)
    r2 = sum(1 for d in s2 if d)
    betti = (c.count(0) - r1, c.count(1) - r1 - r2, c.count(2) - r2)
    torsion = (
        tuple(d for d in s1 if d > 1), tuple(d for d in s2 if d > 1), ())
    return HomologyResult(betti, torsion)


def is_fixed(g, h, stabilizer):
    """Whether every element of h fixes the cell g.stabilizer."""
    g_inv = g.inverse()
    return all(g_inv * x * g in stabilizer for x in h.generators)


def fixed_subcomplex(c, h):
    """The cells of c whose stabilizer contains h, as a plain complex."""
    if isinstance(c, CellComplex):
        return c.subcomplex(
            lambda n, i: h.is_subgroup_of(c.stabilizer(n, i)))
    cells = expand(c)
    orbits = (c.vertices, c.edges, c.faces)

    def keep(n, i):
        o, g = cells.labels[n][i]
        return is_fixed(g, h, orbits[n][o].stabilizer)

    return cells.subcomplex(keep)


def _components(count, pairs):
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycle = False
    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx == ry:
            cycle = True
        else:
            parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(count)], cycle


def orbit_is_forest(c, e):
    """Whether the edges of orbit e span a forest in the expansion."""
    cells = expand(c)
    pairs = [
        cells.endpoints[j] for j, label in enumerate(cells.labels[1])
        if label[0] == e]
    _, cycle = _components(cells.count(0), pairs)
    return not cycle


def is_forest(c, e):
    return orbit_is_forest(c, e)


def is_reduced(c):
    return not any(orbit_is_forest(c, e) for e in range(len(c.edges)))


def forest_collapse(c, e):
    """Collapse every tree of the forest G.e to a point.

    The result is a plain complex carrying the induced action; collapsed
    vertices are labelled by the smallest original label of their tree.
    """
    if not orbit_is_forest(c, e):
        raise ComplexError(
            "Edge orbit '%s' does not span a forest" % c.edges[e].name)
    cells = expand(c)
    collapsed = [
        j for j, label in enumerate(cells.labels[1]) if label[0] == e]
    roots, _ = _components(
        cells.count(0), [cells.endpoints[j] for j in collapsed])
    classes = sorted(set(roots))
    new_vertex = {root: i for i, root in enumerate(classes)}
    members = {}
    for v, root in enumerate(roots):
        members.setdefault(root, []).append(v)
    vertex_labels = [cells.labels[0][root] for root in classes]

    # set stabilizers of the trees
    group = c.group
    vertex_stabilizers = []
    for root in classes:
        tree = {cells.labels[0][v] for v in members[root]}
        o, g = cells.labels[0][root]
        stabilizer = c.vertices[o].stabilizer
        elements = [
            x for x in group
            if (o, group.coset_representative(x * g, stabilizer)) in tree]
        vertex_stabilizers.append(
            PermGroup.from_elements(elements, group.degree))

    dropped = set(collapsed)
    kept = [j for j in range(cells.count(1)) if j not in dropped]
    edge_index = {old: new for new, old in enumerate(kept)}
    endpoints = [
        (new_vertex[roots[s]], new_vertex[roots[t]])
        for s, t in (cells.endpoints[j] for j in kept)]
    boundaries = [
        [(edge_index[j], sign) for j, sign in boundary if j in edge_index]
        for boundary in cells.boundaries]
    logger.debug(
        "collapsed orbit '%s': %d trees" % (c.edges[e].name, len(classes)))
    return CellComplex(
        vertex_labels, [cells.labels[1][j] for j in kept], cells.labels[2],
        endpoints, boundaries,
        [vertex_stabilizers, [cells.stabilizers[1][j] for j in kept],
         cells.stabilizers[2]],
        group)


def stabilizer_incomparability(c):
    """Whether no vertex stabilizer contains the stabilizer of another."""
    cells = expand(c)
    keys = [h.key for h in cells.stabilizers[0]]
    for i, x in enumerate(keys):
        for y in keys[i + 1:]:
            if x <= y or y <= x:
                return False
    return True


def euler_characteristic(c):
    return expand(c).euler_characteristic()


def gamma_os_a5():
    """The triangle of groups graph of A5.

    Three vertex orbits with stabilizers A4, S3 and D10, joined by edge
    orbits with stabilizers Z3, Z2 and Z2.
    """
    group = alternating_a5()
    h = a5_subgroups()
    one = group.identity()
    vertices = [
        VertexOrbit('v1', h['H1']),
        VertexOrbit('v2', h['H2']),
        VertexOrbit('v3', h['H3']),
    ]
    edges = [
        EdgeOrbit('e12', h['H12'], (0, one), (1, one)),
        EdgeOrbit('e23', h['H23'], (1, one), (2, one)),
        EdgeOrbit('e31', h['H13'], (2, one), (0, one)),
    ]
    return OrbitComplex(group, vertices, edges, name='gamma-os-a5')


def attach_free_orbit(c, path, name=None, stabilizer=None):
    """Attach an orbit of 2-cells along a closed edge path."""
    if stabilizer is None:
        stabilizer = PermGroup([], c.group.degree)
    name = name or 'f%d' % (len(c.faces) + 1)
    return OrbitComplex(
        c.group, c.vertices, c.edges,
        c.faces + [FaceOrbit(name, stabilizer, list(path))], name=c.name)


def poincare_complex():
    """Gamma_OS with one free orbit of triangles attached."""
    c = gamma_os_a5()
    one = c.identity()
    result = attach_free_orbit(
        c, [(one, 0, 1), (one, 1, 1), (one, 2, 1)], name='tau')
    result.name = 'poincare'
    return result


def equivariant_expansion(c, h, x0, x1, name=None):
    """Add an edge orbit with stabilizer h from x0 to x1 and fill it in.

    x0 and x1 are (orbit, element) vertices fixed by h. The new face
    orbit runs along the new edge and back through the fixed set X^h.
    """
    for orbit, g in (x0, x1):
        if not is_fixed(g, h, c.vertices[orbit].stabilizer):
            raise ComplexError(
                "Vertex %s of orbit '%s' is not fixed by the subgroup" %
                (g, c.vertices[orbit].name))
    fixed = fixed_subcomplex(c, h)
    start = (x1[0], c.cell(c.vertices[x1[0]].stabilizer, x1[1]))
    goal = (x0[0], c.cell(c.vertices[x0[0]].stabilizer, x0[1]))
    route = fixed.one_skeleton_path(
        fixed.position(0, start), fixed.position(0, goal))
    if route is None:
        raise ComplexError('The fixed set does not connect the endpoints')
    n = len(c.edges)
    name = name or 'e%d' % (n + 1)
    edge = EdgeOrbit(name, h, x0, x1)
    path = [(c.identity(), n, 1)]
    for j, sign in route:
        e, g = fixed.labels[1][j]
        path.append((g, e, sign))
    face = FaceOrbit('f_' + name, h, path)
    logger.debug(
        "expansion '%s' closes through %d fixed edges" % (name, len(route)))
    return OrbitComplex(
        c.group, c.vertices, c.edges + [edge], c.faces + [face], name=c.name)


def index_i_F(h, family, lattice):
    """Rational index (1 - chi(F_>h)) / [N(h) : h].

    chi is the Euler characteristic of the order complex of the members
    of family strictly above h; the empty poset counts as 0.
    """
    keys = {k.key for k in family}
    poset = [k for k in lattice.above(h) if k.key in keys]
    poset.sort(key=lambda k: -k.order)
    chains = {}
    for k in poset:
        chains[k.key] = 1 - sum(
            chains[x.key] for x in poset
            if x.key in chains and k.key < x.key)
    chi = sum(chains.values())
    normalizer = lattice.group.normalizer(h)
    return Fraction(1 - chi, normalizer.order // h.order)


OrbitCountEntry = namedtuple(
    'OrbitCountEntry',
    ['subgroup', 'counts', 'alternating_sum', 'index', 'match'])


def verify_lemma23(c, family, lattice):
    """Compare orbit counts per stabilizer class with the rational index."""
    counts = {}
    representative = {}
    for n in range(3):
        for orbit in c.orbits(n):
            cls = lattice.class_of(orbit.stabilizer)
            representative.setdefault(cls, lattice.find(orbit.stabilizer))
            counts.setdefault(cls, [0, 0, 0])[n] += 1
    entries = []
    for cls in sorted(counts):
        h = representative[cls]
        alternating = counts[cls][0] - counts[cls][1] + counts[cls][2]
        index = index_i_F(h, family, lattice)
        entries.append(OrbitCountEntry(
            h, tuple(counts[cls]), alternating, index, index == alternating))
    return entries


def index_table(lattice, family):
    """Index of every conjugacy class representative."""
    return [(h, index_i_F(h, family, lattice))
            for h in lattice.representatives()]


def two_cell_orbit_count(k, lattice):
    """Count the free 2-cell orbits making Gamma_OS + k edge orbits acyclic."""
    trivial = lattice.subgroups[0]
    return int(index_i_F(trivial, lattice.solvable_family(), lattice)) + k


AcyclicityEntry = namedtuple(
    'AcyclicityEntry', ['subgroup', 'status', 'homology'])


def acyclicity_suite(c, lattice):
    """Classify X^h for every subgroup h as empty, acyclic or not."""
    cells = expand(c)
    entries = []
    for h in lattice.subgroups:
        fixed = fixed_subcomplex(cells, h)
        if fixed.is_empty():
            entries.append(AcyclicityEntry(h, 'empty', None))
            continue
        result = homology(fixed)
        status = 'acyclic' if result.is_acyclic() else 'not acyclic'
        entries.append(AcyclicityEntry(h, status, result))
    return entries


# presentations of the named vertex stabilizers, generators as in A5
STABILIZER_PRESENTATIONS = {
    'H1': (('a', 'b'), ('a^2', 'b^3', '(a b)^3')),
    'H2': (('b', 'c'), ('b^3', 'c^2', '(b c)^2')),
    'H3': (('c', 'd'), ('c^2', 'd^2', '(c d)^5')),
}


def stabilizer_presentation(h):
    """Return (Presentation, images) for a vertex stabilizer.

    Named stabilizers of A5 use their small presentations; any other
    group falls back to its multiplication table.
    """
    if h.degree == 5:
        named = a5_subgroups()
        images = a5_generators()
        for key, (gens, relators) in sorted(STABILIZER_PRESENTATIONS.items()):
            if named[key] == h:
                return (
                    Presentation(gens, relators, name=key),
                    {g: images[g] for g in gens})
    logger.warning(
        'no small presentation for a stabilizer of %s, using its '
        'multiplication table' % h.describe())
    elements = [g for g in h.elements if not g.is_identity()]
    names = ['s%d' % (i + 1) for i in range(len(elements))]
    name_of = dict(zip(elements, names))
    relators = []
    for x in elements:
        for y in elements:
            product = FreeWord.generator(name_of[x]) * \
                FreeWord.generator(name_of[y])
            z = x * y
            if not z.is_identity():
                product = product * FreeWord.generator(name_of[z], -1)
            relators.append(product)
    return Presentation(names, relators), dict(zip(names, elements))


def element_words(images, degree):
    """Breadth first words for every element of the generated group."""
    identity = Perm.identity(degree)
    words = {identity: FreeWord()}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for name in sorted(images):
            for exponent in (1, -1):
                product = element * images[name] ** exponent
                if product not in words:
                    words[product] = \
                        words[element] * FreeWord.generator(name, exponent)
                    queue.append(product)
    return words


BrownChoices = namedtuple(
    'BrownChoices',
    ['tree', 'vertex_elements', 'edge_elements', 'target_elements'])


def translate_path(path, g):
    return [(g * h, e, sign) for h, e, sign in path]


class BrownPresentation(object):
    """Presentation of the group G~ built from a simply connected complex.

    raw holds the presentation as constructed, presentation the
    simplified one; images maps both sets of generator names to G.
    """

    def __init__(self, c):
        self.complex = c
        self.choices = _brown_choices(c)
        self._vertex_data(c)
        raw_gens, relators = self._relators(c)
        self.raw = Presentation(raw_gens, relators, name='raw')
        self._simplify()
        for relator in self.raw.relators:
            if not self.phi_bar(relator).is_identity():
                raise RuntimeError(
                    "Relator '%s' is not in the kernel of phi" % relator)

    def _vertex_data(self, c):
        self.copies = []
        self.words = []
        self.images = {}
        vertex_relators = []
        for v, orbit in enumerate(c.vertices):
            r = self.choices.vertex_elements[v]
            stabilizer = orbit.stabilizer.conjugate(r.inverse())
            presentation, images = stabilizer_presentation(stabilizer)
            copy = {g: '%s_%s' % (g, orbit.name) for g in images}
            for g, image in images.items():
                self.images[copy[g]] = image
            mapping = {g: FreeWord.generator(n) for g, n in copy.items()}
            vertex_relators.extend(
                rel.substitute(mapping) for rel in presentation.relators)
            words = element_words(
                {copy[g]: image for g, image in images.items()},
                c.group.degree)
            self.copies.append([copy[g] for g in presentation.generators])
            self.words.append(words)
        self.vertex_relators = vertex_relators
        for e, orbit in enumerate(c.edges):
            self.images['x_' + orbit.name] = self.choices.target_elements[e]

    def vertex_word(self, v, g):
        try:
            return self.words[v][g]
        except KeyError:
            raise RuntimeError(
                "%s does not stabilize the representative of '%s'" %
                (g, self.complex.vertices[v].name))

    def _relators(self, c):
        generators = [name for copy in self.copies for name in copy]
        generators.extend('x_' + e.name for e in c.edges)
        relators = list(self.vertex_relators)
        for e in self.choices.tree:
            relators.append(FreeWord.generator('x_' + c.edges[e].name))
        for e, orbit in enumerate(c.edges):
            x = FreeWord.generator('x_' + orbit.name)
            t = self.choices.edge_elements[e]
            g_e = self.choices.target_elements[e]
            source = orbit.source[0]
            target = orbit.target[0]
            for k in orbit.stabilizer.generators:
                g = t * k * t.inverse()
                moved = g_e.inverse() * g * g_e
                relators.append(
                    x.inverse() * self.vertex_word(source, g) * x *
                    self.vertex_word(target, moved).inverse())
        for face in c.faces:
            relators.append(self.r_omega(self._based_path(face.path)))
        return generators, relators

    def _based_path(self, path):
        """Translate a closed path so that it starts at a chosen vertex."""
        c = self.complex
        g, e, sign = path[0]
        (o, rep), _ = c.step_endpoints(g, e, sign)
        t = self.choices.vertex_elements[o] * rep.inverse()
        return translate_path(path, t)

    def r_omega(self, path):
        """Word of G~ read off a closed edge path based at a chosen vertex.

        The result is in the raw generators; phi_bar maps it to 1.
        """
        c = self.complex
        choices = self.choices
        g, e, sign = path[0]
        (base, rep), _ = c.step_endpoints(g, e, sign)
        if rep != c.cell(c.vertices[base].stabilizer,
                         choices.vertex_elements[base]):
            raise ComplexError('Path does not start at a chosen vertex')
        current = c.identity()
        vertex = base
        word = FreeWord()
        for g, e, sign in path:
            orbit = c.edges[e]
            r = choices.vertex_elements[vertex]
            start, _ = c.step_endpoints(g, e, sign)
            if start != (vertex, c.cell(
                    c.vertices[vertex].stabilizer, current * r)):
                raise ComplexError('Path is not connected')
            t = choices.edge_elements[e]
            g_e = choices.target_elements[e]
            coset = [
                current.inverse() * g * k * t.inverse()
                for k in orbit.stabilizer]
            x = FreeWord.generator('x_' + orbit.name)
            if sign > 0:
                h = min(coset)
                word = word * self.vertex_word(vertex, h) * x
                current = current * h * g_e
                vertex = orbit.target[0]
            else:
                h = min(y * g_e for y in coset)
                word = word * self.vertex_word(vertex, h) * x.inverse()
                current = current * h * g_e.inverse()
                vertex = orbit.source[0]
        if vertex != base:
            raise ComplexError('Path is not closed')
        word = word * self.vertex_word(base, current.inverse())
        if not self.phi_bar(word).is_identity():
            raise RuntimeError("Word '%s' is not in the kernel" % word)
        return word

    def phi_bar(self, word):
        return evaluate_word(word, self.images, self.complex.group.degree)

    def _simplify(self):
        generators = list(self.raw.generators)
        relators = list(self.raw.relators)
        substitutions = {}

        def eliminate(name, image):
            for key in list(substitutions):
                substitutions[key] = substitutions[key].substitute(
                    {name: image})
            substitutions[name] = image
            generators.remove(name)
            return [r.substitute({name: image}) for r in relators]

        changed = True
        while changed:
            changed = False
            for relator in relators:
                letters = relator.cyclically_reduced().letters
                if len(letters) == 1 and abs(letters[0][1]) == 1:
                    relators = eliminate(letters[0][0], FreeWord())
                    changed = True
                    break
                if len(letters) == 2 and letters[0][0] != letters[1][0] \
                        and all(abs(x) == 1 for _, x in letters):
                    (g, eg), (h, eh) = letters
                    if generators.index(g) > generators.index(h):
                        (g, eg), (h, eh) = (h, eh), (g, eg)
                    # g^eg h^eh = 1 gives h = g^(-eg*eh)
                    relators = eliminate(
                        h, FreeWord.generator(g, -eg * eh))
                    changed = True
                    break
        relators = [r for r in relators if r.cyclically_reduced()]

        bases = [name.split('_', 1)[0] for name in generators]
        if len(set(bases)) == len(bases):
            rename = dict(zip(generators, bases))
        else:
            rename = {name: name for name in generators}
        renamed = {
            old: FreeWord.generator(new) for old, new in rename.items()}
        for name in generators:
            substitutions[name] = FreeWord.generator(name)
        self.substitutions = {
            name: word.substitute(renamed)
            for name, word in substitutions.items()}
        for old, new in rename.items():
            self.images.setdefault(new, self.images[old])

        seen = set()
        unique = []
        for relator in relators:
            relator = relator.substitute(renamed)
            key = relator.cyclic_key()
            if key not in seen:
                seen.add(key)
                unique.append(relator)
        self.presentation = Presentation(
            [rename[g] for g in generators], unique,
            name=self.complex.name)
        logger.debug(
            'simplified %d generators and %d relators to %d and %d' %
            (len(self.raw.generators), len(self.raw.relators),
             len(self.presentation.generators),
             len(self.presentation.relators)))

    def reduce_word(self, word):
        """Rewrite a raw word in the simplified generators."""
        return word.substitute(self.substitutions)


def _brown_choices(c):
    """Pick a tree of orbits, vertex representatives and edge translates.

    The tree is grown by Kruskal in declaration order. Vertex orbit i is
    represented by r_i.v_i, every edge orbit by t_e.e whose source is a
    representative; its target is g_e applied to a representative.
    """
    n = len(c.vertices)
    if not n:
        raise ComplexError('Complex has no vertices')
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    tree = []
    for e, orbit in enumerate(c.edges):
        x, y = find(orbit.source[0]), find(orbit.target[0])
        if x != y:
            parent[max(x, y)] = min(x, y)
            tree.append(e)
    if len({find(x) for x in range(n)}) != 1:
        raise ComplexError('Quotient graph is not connected')

    one = c.identity()
    r = [None] * n
    r[0] = one
    pending = list(tree)
    while pending:
        for e in pending:
            orbit = c.edges[e]
            (i, g_s), (j, g_t) = orbit.source, orbit.target
            if r[i] is not None and r[j] is None:
                r[j] = r[i] * g_s.inverse() * g_t
            elif r[j] is not None and r[i] is None:
                r[i] = r[j] * g_t.inverse() * g_s
            elif r[i] is None:
                continue
            pending.remove(e)
            break

    translations = []
    targets = []
    for e, orbit in enumerate(c.edges):
        (i, g_s), (j, g_t) = orbit.source, orbit.target
        t = r[i] * g_s.inverse()
        h = c.vertices[j].stabilizer
        g_e = min(t * g_t * k * r[j].inverse() for k in h)
        translations.append(t)
        targets.append(g_e)
    logger.debug(
        'tree of edge orbits: %s' %
        ', '.join(c.edges[e].name for e in tree))
    return BrownChoices(tree, r, translations, targets)


def brown_presentation(c):
    return BrownPresentation(c)


def r_omega(brown, path):
    return brown.r_omega(path)


def fundamental_cycle(c, e, g):
    """Closed path through the edge g.e, completed by tree paths.

    The path starts and ends at the source of g.e.
    """
    cells = expand(c)
    edge = (e, c.cell(c.edges[e].stabilizer, g))
    source, target = cells.endpoints[cells.position(1, edge)]
    back = cells.one_skeleton_path(target, source)
    if back is None:
        raise ComplexError('Complex is not connected')
    path = [(edge[1], e, 1)]
    for j, sign in back:
        orbit, h = cells.labels[1][j]
        path.append((h, orbit, sign))
    return path


def check_translation_conjugacy(brown, path, g, action):
    """Check r(g.path) = g~ r(path) g~^-1 in a coset action of G~.

    g must fix the base vertex of path; g~ is its word in the copy of
    the base stabilizer.
    """
    c = brown.complex
    h, e, sign = path[0]
    (base, _), _ = c.step_endpoints(h, e, sign)
    lifted = brown.vertex_word(base, g)
    moved = brown.r_omega(translate_path(path, g))
    original = brown.r_omega(path)
    lhs = action.image(brown.reduce_word(moved))
    rhs = action.image(brown.reduce_word(lifted * original * lifted.inverse()))
    return lhs == rhs


def brown_quotient_order(c, max_cosets=DEFAULT_MAX_COSETS):
    """Order of the kernel of G~ -> G, found by coset enumeration."""
    brown = BrownPresentation(c)
    table = todd_coxeter(brown.presentation, (), max_cosets)
    order = len(table)
    if order % c.group.order:
        raise RuntimeError(
            'Order %d is not a multiple of |G| = %d' % (order, c.group.order))
    return order // c.group.order, order
