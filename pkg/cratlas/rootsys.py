"""
rootsys.py: Exact root systems of simple and semisimple compact Lie algebras: Cartan matrices,
positive roots, coroots, fundamental weights, the invariant form and Dynkin-diagram automorphisms.

Node numbering follows Bourbaki.  For E_n the branch node is alpha_4 and alpha_2 hangs off it; for
G_2 alpha_1 is the short simple root; for B_n and C_n the last node alpha_n is the odd one out
(short for B, long for C); for D_n the spin nodes are alpha_{n-1} and alpha_n.  Internally nodes
are numbered from 0 across all components of a semisimple system, in the order the components
were given.

The invariant form is normalized per simple factor so that long roots have squared length 2.  All
arithmetic is exact (ints and :class:`fractions.Fraction`).
"""
import logging
import re
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

import numpy
import sympy
import networkx
from networkx.algorithms import isomorphism

from .cratlas_utils import (InvalidRank, MismatchedSystem, CRAtlasError, ToRational,
                            RationalToJSON, RationalFromJSON)

logger = logging.getLogger(__name__)

families = ('A', 'B', 'C', 'D', 'E', 'F', 'G')

# Smallest rank allowed as a type in its own right; smaller ranks only appear as isotropy labels.
_min_rank = {'A': 1, 'B': 2, 'C': 2, 'D': 4}


class SimpleLieType(namedtuple('SimpleLieType', ['family', 'rank'])):
    """
    A simple compact Lie algebra type such as ``B3``.  Instances are immutable, hashable and sort by
    (family, rank).

    The rank bounds are A: n>=1, B: n>=2, C: n>=2, D: n>=4, E: n in {6,7,8}, F: n=4, G: n=2.  With
    ``strict=False`` the low-rank labels that come out of white subdiagrams (C_1, B_1, D_2, D_3)
    are accepted as well; they are kept as labels and not identified with their isomorphic
    counterparts (C_1 is not turned into A_1, D_3 is not turned into A_3).

    :param family: One of ``'A'``..``'G'``.
    :param rank:   A positive integer.
    :param strict: Enforce the rank bounds of a genuine type. [default: True]
    """
    __slots__ = ()

    def __new__(cls, family, rank, strict=True):
        if not isinstance(family, str) or family.upper() not in families:
            raise InvalidRank('Unknown Lie algebra family: %r' % (family,))
        family = family.upper()
        if isinstance(rank, bool) or not isinstance(rank, (int, numpy.integer)):
            raise TypeError('Rank must be an integer, got %r' % (rank,))
        rank = int(rank)
        if rank < 1:
            raise InvalidRank('Rank must be positive, got %s%d' % (family, rank))
        if family == 'E' and rank not in (6, 7, 8):
            raise InvalidRank('E_n requires n in {6, 7, 8}, got E%d' % rank)
        if family == 'F' and rank != 4:
            raise InvalidRank('F_n requires n = 4, got F%d' % rank)
        if family == 'G' and rank != 2:
            raise InvalidRank('G_n requires n = 2, got G%d' % rank)
        if strict and family in _min_rank and rank < _min_rank[family]:
            raise InvalidRank('%s_n requires n >= %d, got %s%d' %
                              (family, _min_rank[family], family, rank))
        return super(SimpleLieType, cls).__new__(cls, family, rank)

    def __getnewargs__(self):
        return (self.family, self.rank, False)

    @property
    def name(self):
        return '%s%d' % (self.family, self.rank)

    @property
    def is_strict(self):
        return self.family not in _min_rank or self.rank >= _min_rank[self.family]

    @property
    def group_name(self):
        """The compact matrix group usually written for this type, e.g. ``SO_7`` for B3."""
        n = self.rank
        if self.family == 'A':
            return 'SU_%d' % (n+1)
        elif self.family == 'B':
            return 'SO_%d' % (2*n+1)
        elif self.family == 'C':
            return 'Sp_%d' % n
        elif self.family == 'D':
            return 'SO_%d' % (2*n)
        return '%s_%d' % (self.family, n)

    @property
    def num_positive_roots(self):
        n = self.rank
        if self.family == 'A':
            return n*(n+1)//2
        elif self.family in ('B', 'C'):
            return n*n
        elif self.family == 'D':
            return n*(n-1)
        return {('E', 6): 36, ('E', 7): 63, ('E', 8): 120, ('F', 4): 24,
                ('G', 2): 6}[(self.family, n)]

    @property
    def dimension(self):
        return self.rank + 2*self.num_positive_roots

    def __str__(self):
        return self.name

    def __repr__(self):
        return 'SimpleLieType(%r, %d)' % (self.family, self.rank)


def ParseType(text, strict=True):
    """
    Read a type name like ``"B3"``, ``"B_3"`` or ``"b3"``.
    """
    if isinstance(text, SimpleLieType):
        return text
    m = re.match(r'^\s*([A-Ga-g])_?\{?(\d+)\}?\s*$', str(text))
    if not m:
        raise InvalidRank('Cannot read a Lie algebra type from "%s"' % text)
    return SimpleLieType(m.group(1), int(m.group(2)), strict=strict)


def _simple_root_data(lie_type):
    """
    Squared lengths of the simple roots and the list of bonded node pairs (0-based) for one simple
    type, in Bourbaki order.
    """
    f, n = lie_type.family, lie_type.rank
    two = Fraction(2)
    if f == 'A':
        lengths = [two]*n
    elif f == 'B':
        lengths = [two]*(n-1) + [Fraction(1)]
    elif f == 'C':
        lengths = [Fraction(1)]*(n-1) + [two]
    elif f in ('D', 'E'):
        lengths = [two]*n
    elif f == 'F':
        lengths = [two, two, Fraction(1), Fraction(1)]
    else:
        lengths = [Fraction(2, 3), two]
    if f == 'D':
        bonds = [(i, i+1) for i in range(n-2)] + [(n-3, n-1)]
    elif f == 'E':
        bonds = [b for b in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
                 if b[1] < n]
    else:
        bonds = [(i, i+1) for i in range(n-1)]
    return lengths, bonds


def _positive_roots(cartan):
    """
    Close the simple roots of one simple component under root strings.  A root r + alpha_i exists
    exactly when the alpha_i-string through r extends upward, i.e. q = p - <r, alpha_i^vee> > 0.
    """
    n = cartan.shape[0]
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known = set(simple)
    level = list(simple)
    ordered = list(simple)
    while level:
        next_level = []
        for r in level:
            for i in range(n):
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - int(sum(r[j]*cartan[i, j] for j in range(n)))
                if q > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        next_level.append(up)
        next_level.sort(key=lambda c: [-x for x in c])
        ordered.extend(next_level)
        level = next_level
    return ordered


class RootSystem(object):
    """
    The root system of a semisimple compact Lie algebra given as a product of simple types.  Do not
    construct directly; use :func:`build_root_system`, which memoizes.

    Attributes (all read-only):

    - ``components``: tuple of :class:`SimpleLieType`.
    - ``rank``, ``offsets``: total number of nodes and the first global node of each component.
    - ``cartan_matrix``: integer NumPy array with ``cartan_matrix[i, j] = <alpha_j, alpha_i^vee>``.
    - ``form``: NumPy object array of Fractions, ``form[i, j] = (alpha_i, alpha_j)``.
    - ``root_lengths``: squared lengths of the simple roots.
    - ``positive_roots``: tuple of integer coefficient tuples over the simple roots, sorted by
      height and then with alpha_1-heavy roots first.
    - ``coroot_coeffs``: dict from positive root to its integer coefficients over simple coroots.
    """

    def __init__(self, components):
        self.components = tuple(components)
        sizes = [c.rank for c in self.components]
        self.offsets = tuple(int(s) for s in numpy.cumsum([0]+sizes[:-1]))
        self.rank = int(sum(sizes))
        cartan = numpy.zeros((self.rank, self.rank), dtype=int)
        form = numpy.zeros((self.rank, self.rank), dtype=object)
        form[:, :] = Fraction(0)
        lengths = []
        component_roots = []
        for comp, offset in zip(self.components, self.offsets):
            clengths, bonds = _simple_root_data(comp)
            for i, d in enumerate(clengths):
                form[offset+i, offset+i] = d
            for i, j in bonds:
                value = -max(clengths[i], clengths[j])/2
                form[offset+i, offset+j] = value
                form[offset+j, offset+i] = value
            lengths.extend(clengths)
        for i in range(self.rank):
            for j in range(self.rank):
                entry = 2*form[i, j]/form[i, i]
                if entry.denominator != 1:
                    raise RuntimeError('Non-integral Cartan entry for %s' % self.name)
                cartan[i, j] = int(entry)
        for comp, offset in zip(self.components, self.offsets):
            block = cartan[offset:offset+comp.rank, offset:offset+comp.rank]
            roots = _positive_roots(block)
            if len(roots) != comp.num_positive_roots:
                raise RuntimeError('Root closure for %s produced %d roots, expected %d' %
                                   (comp.name, len(roots), comp.num_positive_roots))
            component_roots.append([(0,)*offset + r + (0,)*(self.rank-offset-comp.rank)
                                    for r in roots])
        cartan.setflags(write=False)
        form.setflags(write=False)
        self.cartan_matrix = cartan
        self.form = form
        self.root_lengths = tuple(lengths)
        roots = [r for rl in component_roots for r in rl]
        roots.sort(key=lambda c: (sum(c), [-x for x in c]))
        self.positive_roots = tuple(roots)
        self._positive_set = frozenset(roots)
        self._index = dict((r, i) for i, r in enumerate(self.positive_roots))
        self.coroot_coeffs = {}
        for r in self.positive_roots:
            length = self.inner(r, r)
            coeffs = []
            for j in range(self.rank):
                c = r[j]*self.root_lengths[j]/length
                if c.denominator != 1:
                    raise RuntimeError('Non-integral coroot for %s in %s' % (r, self.name))
                coeffs.append(int(c))
            self.coroot_coeffs[r] = tuple(coeffs)
        # (A^T)^{-1} expresses the fundamental weights in the simple-root basis.
        inv = sympy.Matrix(self.cartan_matrix.tolist()).T.inv()
        weights = numpy.empty((self.rank, self.rank), dtype=object)
        for i in range(self.rank):
            for j in range(self.rank):
                weights[i, j] = Fraction(int(inv[i, j].p), int(inv[i, j].q))
        weights.setflags(write=False)
        self.fundamental_weights = weights

    @property
    def name(self):
        return 'x'.join(c.name for c in self.components)

    @property
    def types(self):
        return self.components

    @property
    def dimension(self):
        return self.rank + 2*len(self.positive_roots)

    @property
    def negative_roots(self):
        return tuple(tuple(-c for c in r) for r in self.positive_roots)

    @property
    def all_roots(self):
        return self.positive_roots + self.negative_roots

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('RootSystem', self.components))

    def __repr__(self):
        return 'RootSystem(%s)' % self.name

    def __reduce__(self):
        return (build_root_system, (list(self.components),))

    def component_of(self, node):
        """Index of the simple component that contains global node ``node``."""
        for k, (comp, offset) in enumerate(zip(self.components, self.offsets)):
            if offset <= node < offset+comp.rank:
                return k
        raise IndexError('Node %d is outside a rank-%d system' % (node, self.rank))

    def component_nodes(self, k):
        return tuple(range(self.offsets[k], self.offsets[k]+self.components[k].rank))

    def simple_root(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def is_root(self, root):
        root = tuple(root)
        return root in self._positive_set or tuple(-c for c in root) in self._positive_set

    def is_positive(self, root):
        return tuple(root) in self._positive_set

    def root_index(self, root):
        return self._index[tuple(root)]

    def height(self, root):
        return sum(root)

    def inner(self, root1, root2):
        """(root1, root2) for roots (or any integer vectors) in the simple-root basis."""
        total = Fraction(0)
        for i, a in enumerate(root1):
            if a:
                for j, b in enumerate(root2):
                    if b:
                        total += a*b*self.form[i, j]
        return total

    def coroot(self, root):
        """Integer coefficients of root^vee over the simple coroots (root may be negative)."""
        root = tuple(root)
        if root in self._positive_set:
            return self.coroot_coeffs[root]
        neg = tuple(-c for c in root)
        if neg in self._positive_set:
            return tuple(-c for c in self.coroot_coeffs[neg])
        raise CRAtlasError('%s is not a root of %s' % (root, self.name))

    def root_pairing(self, root, other):
        """<root, other^vee> = 2 (root, other)/(other, other)."""
        return sum(int(root[j])*int(self.cartan_matrix[i, j]) * c
                   for i, c in enumerate(self.coroot(other)) for j in range(self.rank))

    def root_weight(self, root):
        """The fundamental-weight coordinates of a root: coordinate i is <root, alpha_i^vee>."""
        coords = numpy.dot(self.cartan_matrix, numpy.array(root, dtype=int))
        return Weight(self, [int(c) for c in coords])

    def root_length(self, root):
        return self.inner(root, root)

    def long_roots(self):
        """Positive roots of maximal length within their own simple component."""
        result = []
        for r in self.positive_roots:
            k = self.component_of(next(i for i, c in enumerate(r) if c))
            nodes = self.component_nodes(k)
            if self.inner(r, r) == max(self.root_lengths[i] for i in nodes):
                result.append(r)
        return result

    def short_roots(self):
        longs = set(self.long_roots())
        return [r for r in self.positive_roots if r not in longs]

    def weight_inner(self, w1, w2):
        """(w1, w2) computed through the simple-root expansion of both weights."""
        if w1.system != self or w2.system != self:
            raise MismatchedSystem('Weights do not belong to %s' % self.name)
        a = numpy.dot(numpy.array(w1.coords, dtype=object), self.fundamental_weights)
        b = numpy.dot(numpy.array(w2.coords, dtype=object), self.fundamental_weights)
        return Fraction(numpy.dot(numpy.dot(a, self.form), b))


@lru_cache(maxsize=None)
def _build(types):
    logger.debug('Building root system %s', 'x'.join(t.name for t in types))
    return RootSystem(types)


def _coerce_types(types):
    if isinstance(types, RootSystem):
        return types.components
    if isinstance(types, (SimpleLieType, str)):
        types = [types]
    result = []
    for t in types:
        if isinstance(t, SimpleLieType):
            if not t.is_strict:
                raise InvalidRank('%s is an isotropy label, not a buildable type' % t.name)
            result.append(t)
        else:
            result.append(ParseType(t))
    if not result:
        raise InvalidRank('A root system needs at least one simple component')
    return tuple(result)


def build_root_system(types):
    """
    Build (or fetch from the memo table) the root system of a product of simple types.

    :param types: A list of :class:`SimpleLieType` (or names like ``"B3"``), or a single one.
    :returns:     A :class:`RootSystem`.
    """
    return _build(_coerce_types(types))


class Weight(object):
    """
    A weight of a :class:`RootSystem`, stored by its rational coordinates over the fundamental
    weights pi_1, ..., pi_r (global node order).
    """

    def __init__(self, system, coords):
        if not isinstance(system, RootSystem):
            raise TypeError('Weight needs a RootSystem, got %r' % (system,))
        coords = tuple(ToRational(c) for c in coords)
        if len(coords) != system.rank:
            raise MismatchedSystem('Weight has %d coordinates but %s has rank %d' %
                                   (len(coords), system.name, system.rank))
        self.system = system
        self.coords = coords

    @classmethod
    def fundamental(cls, system, i):
        return cls(system, [1 if j == i else 0 for j in range(system.rank)])

    @classmethod
    def root_weight(cls, system, root):
        """A root written over the fundamental weights; see :meth:`RootSystem.root_weight`."""
        return system.root_weight(root)

    def component_coords(self, k):
        return tuple(self.coords[i] for i in self.system.component_nodes(k))

    def _check(self, other):
        if not isinstance(other, Weight) or other.system != self.system:
            raise MismatchedSystem('Cannot combine weights of different root systems')

    def __add__(self, other):
        self._check(other)
        return Weight(self.system, [a+b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Weight(self.system, [a-b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Weight(self.system, [-a for a in self.coords])

    def __mul__(self, scalar):
        scalar = ToRational(scalar)
        return Weight(self.system, [scalar*a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Weight) and other.system == self.system and
                other.coords == self.coords)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.system, self.coords))

    def __repr__(self):
        return 'Weight(%s, (%s))' % (self.system.name,
                                     ', '.join(str(c) for c in self.coords))


def pairing(w, root, system=None):
    """
    Evaluate the weight ``w`` on the coroot of ``root``: <w, root^vee> = sum_j w_j c_j, where the
    c_j are the coefficients of root^vee over the simple coroots.

    :param w:      A :class:`Weight`.
    :param root:   A root as a tuple of integer coefficients over the simple roots (positive or
                   negative).
    :param system: If given, the root system ``root`` is taken from; it must be the weight's own.
                   [default: None]
    :returns:      A Fraction.
    """
    if not isinstance(w, Weight):
        raise TypeError('pairing needs a Weight, got %r' % (w,))
    if system is not None and system != w.system:
        raise MismatchedSystem('Weight of %s paired with a root of %s' %
                               (w.system.name, system.name))
    root = tuple(root)
    if len(root) != w.system.rank or not w.system.is_root(root):
        raise MismatchedSystem('%s is not a root of %s' % (root, w.system.name))
    return sum((c*wc for c, wc in zip(w.system.coroot(root), w.coords)), Fraction(0))


def _diagram_graph(system):
    graph = networkx.DiGraph()
    for k, comp in enumerate(system.components):
        for node in system.component_nodes(k):
            graph.add_node(node, label=(comp.family, comp.rank))
    for i in range(system.rank):
        for j in range(system.rank):
            if i != j and system.cartan_matrix[i, j]:
                graph.add_edge(i, j, a=int(system.cartan_matrix[i, j]))
    return graph


def _label_match(n1, n2):
    return n1['label'] == n2['label']


def _edge_match(e1, e2):
    return e1['a'] == e2['a']


@lru_cache(maxsize=None)
def _automorphisms(types):
    graph = _diagram_graph(build_root_system(list(types)))
    matcher = isomorphism.DiGraphMatcher(graph, graph, node_match=_label_match,
                                         edge_match=_edge_match)
    perms = set()
    for mapping in matcher.isomorphisms_iter():
        perms.add(tuple(mapping[i] for i in range(len(mapping))))
    return tuple(sorted(perms))


def diagram_automorphisms(types):
    """
    All automorphisms of the Dynkin diagram: permutations ``perm`` of the nodes (``perm[i]`` is the
    image of node i) preserving the Cartan matrix, including swaps of isomorphic simple factors.
    Factors carrying different labels (B2 and C2, say) are never exchanged.

    :param types: A :class:`RootSystem`, a list of types, or a single type.
    :returns:     Sorted list of permutation tuples; the identity comes first.
    """
    return list(_automorphisms(_coerce_types(types)))


def RootSystemToJSON(system):
    """
    The JSON form of a root system.  Rationals are written as ``{"num": n, "den": d}``.
    """
    return {'components': [{'family': c.family, 'rank': c.rank} for c in system.components],
            'cartan_matrix': system.cartan_matrix.tolist(),
            'positive_roots': [list(r) for r in system.positive_roots],
            'coroots': [list(system.coroot_coeffs[r]) for r in system.positive_roots],
            'form': [[RationalToJSON(x) for x in row] for row in system.form]}


def RootSystemFromJSON(data):
    """
    Rebuild a root system from its JSON form.  Only ``components`` is needed; any tables present
    are checked against the rebuilt system.
    """
    try:
        types = [SimpleLieType(c['family'], int(c['rank'])) for c in data['components']]
    except (KeyError, TypeError):
        raise CRAtlasError('Root system JSON needs a "components" list of {family, rank}')
    system = build_root_system(types)
    if 'cartan_matrix' in data and data['cartan_matrix'] != system.cartan_matrix.tolist():
        raise CRAtlasError('Stored Cartan matrix does not match %s' % system.name)
    if 'positive_roots' in data and [tuple(r) for r in data['positive_roots']] != \
            list(system.positive_roots):
        raise CRAtlasError('Stored positive roots do not match %s' % system.name)
    return system


def WeightToJSON(w):
    return {'components': [{'family': c.family, 'rank': c.rank} for c in w.system.components],
            'coords': [RationalToJSON(c) for c in w.coords]}


def WeightFromJSON(data):
    system = RootSystemFromJSON(data)
    return Weight(system, [RationalFromJSON(c) for c in data['coords']])
