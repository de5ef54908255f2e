"""
flag.py: Flag manifolds F = G/K with an invariant complex structure, encoded as painted Dynkin
diagrams (black nodes are the simple roots outside the isotropy, white nodes span its semisimple
part).  Contains the isotropy computation, the complementary roots spanning the holomorphic tangent
space, enumeration of paintings and painted-diagram isomorphisms.
"""
import itertools
import logging
import re

import networkx
from networkx.algorithms import isomorphism

from .rootsys import (RootSystem, SimpleLieType, build_root_system, diagram_automorphisms,
                      ParseType)
from .cratlas_utils import InvalidPainting, CRAtlasError

logger = logging.getLogger(__name__)


class PaintedDiagram(object):
    """
    A painted Dynkin diagram: a root system plus the set of black nodes.  Every simple component
    must carry at least one black node, otherwise that factor would act trivially on the flag.

    :param system: A :class:`RootSystem` (or anything :func:`build_root_system` accepts).
    :param black:  Iterable of global, 0-based node indices.
    """

    def __init__(self, system, black):
        if not isinstance(system, RootSystem):
            system = build_root_system(system)
        try:
            black = frozenset(int(b) for b in black)
        except (TypeError, ValueError):
            raise TypeError('Black nodes must be integers, got %r' % (black,))
        for b in black:
            if b < 0 or b >= system.rank:
                raise InvalidPainting('Node %d is outside %s (rank %d)' %
                                      (b+1, system.name, system.rank))
        for k, comp in enumerate(system.components):
            if not black.intersection(system.component_nodes(k)):
                raise InvalidPainting('Component %d (%s) of %s has no black node' %
                                      (k+1, comp.name, system.name))
        self.system = system
        self.black = black

    @property
    def black_nodes(self):
        return tuple(sorted(self.black))

    @property
    def white_nodes(self):
        return tuple(i for i in range(self.system.rank) if i not in self.black)

    @property
    def white_types(self):
        """Types of the white subdiagram components, as :func:`isotropy` lists them."""
        return isotropy(self).semisimple_type

    @property
    def name(self):
        """Textual name such as ``B3[1]`` or ``C2[1]xA1[1]``; node ids are 1-based per component."""
        parts = []
        for k, comp in enumerate(self.system.components):
            offset = self.system.offsets[k]
            ids = [str(b-offset+1) for b in self.black_nodes if b in self.system.component_nodes(k)]
            parts.append('%s[%s]' % (comp.name, ','.join(ids)))
        return 'x'.join(parts)

    def components(self):
        """One single-component :class:`PaintedDiagram` per simple factor, in order."""
        result = []
        for k, comp in enumerate(self.system.components):
            offset = self.system.offsets[k]
            nodes = self.system.component_nodes(k)
            result.append(PaintedDiagram(build_root_system([comp]),
                                         [b-offset for b in self.black if b in nodes]))
        return result

    def __eq__(self, other):
        return (isinstance(other, PaintedDiagram) and self.system == other.system and
                self.black == other.black)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.system, self.black))

    def __repr__(self):
        return 'PaintedDiagram(%s)' % self.name

    def __str__(self):
        return self.name


def product(diagrams):
    """
    The componentwise product of painted diagrams (in the given order).
    """
    types = []
    black = []
    offset = 0
    for d in diagrams:
        types.extend(d.system.components)
        black.extend(b+offset for b in d.black)
        offset += d.system.rank
    if not types:
        raise InvalidPainting('Cannot take the product of no diagrams')
    return PaintedDiagram(build_root_system(types), black)


_piece = re.compile(r'^\s*([A-Ga-g])_?(\d+)\s*\[\s*([\d,\s]*)\]\s*$')


def parse_diagram(name):
    """
    Read a diagram name.  The grammar is ``<Type><rank>[<black node ids>]``, with products joined
    by ``x``; node ids are 1-based and local to their component, e.g. ``A2[1,2]`` or
    ``C2[1]xA1[1]``.

    :param name: The diagram name.
    :returns:    A :class:`PaintedDiagram`.
    """
    if isinstance(name, PaintedDiagram):
        return name
    pieces = str(name).split('x')
    types = []
    black = []
    offset = 0
    for piece in pieces:
        m = _piece.match(piece)
        if not m:
            raise InvalidPainting('Cannot read a painted diagram from "%s"' % name)
        lie_type = ParseType(m.group(1)+m.group(2))
        ids = [s for s in m.group(3).replace(',', ' ').split()]
        if not ids:
            raise InvalidPainting('Component %s of "%s" has no black node' % (lie_type.name, name))
        for s in ids:
            i = int(s)
            if i < 1 or i > lie_type.rank:
                raise InvalidPainting('Node %d is outside %s' % (i, lie_type.name))
            black.append(offset+i-1)
        types.append(lie_type)
        offset += lie_type.rank
    return PaintedDiagram(build_root_system(types), black)


class IsotropyDescription(object):
    """
    The isotropy algebra k of a flag, described by the types of the white subdiagram components
    (its semisimple part) and the dimension of its center (the number of black nodes).  The same
    class describes the subalgebra l of a CR manifold, whose center is one dimension smaller.
    """

    def __init__(self, semisimple_type, center_dim):
        self.semisimple_type = tuple(semisimple_type)
        self.center_dim = int(center_dim)

    @property
    def dimension(self):
        return self.center_dim + sum(t.dimension for t in self.semisimple_type)

    def symbol(self):
        """A group expression such as ``T^1·SO_5``; ``{e}`` when trivial."""
        parts = []
        if self.center_dim:
            parts.append('T^%d' % self.center_dim)
        parts.extend(t.group_name for t in self.semisimple_type)
        return '·'.join(parts) if parts else '{e}'

    def to_json(self):
        return {'semisimple': [t.name for t in self.semisimple_type],
                'center_dim': self.center_dim,
                'symbol': self.symbol()}

    def __eq__(self, other):
        return (isinstance(other, IsotropyDescription) and
                self.semisimple_type == other.semisimple_type and
                self.center_dim == other.center_dim)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.semisimple_type, self.center_dim))

    def __repr__(self):
        return 'IsotropyDescription(%s)' % self.symbol()


def _classify_white(system, nodes):
    """
    Identify the type of one connected white subdiagram.  Labels follow the parent family where
    the subdiagram contains its distinguished end (C_1 for the long node of C_n, B_2/C_2 by parent,
    D_k for a tail containing both spin nodes).
    """
    nodes = sorted(nodes)
    n = len(nodes)
    parent = system.components[system.component_of(nodes[0])]
    offset = system.offsets[system.component_of(nodes[0])]
    local = [i-offset for i in nodes]
    cartan = system.cartan_matrix
    if n == 1:
        if parent.family == 'C' and local[0] == parent.rank-1:
            return SimpleLieType('C', 1, strict=False)
        return SimpleLieType('A', 1)
    lengths = [system.root_lengths[i] for i in nodes]
    bonds = {}
    for a in nodes:
        for b in nodes:
            if a < b and cartan[a, b]:
                bonds[(a, b)] = int(cartan[a, b]*cartan[b, a])
    multiplicities = set(bonds.values())
    if 3 in multiplicities:
        return SimpleLieType('G', 2)
    if 2 in multiplicities:
        short = min(lengths)
        nshort = sum(1 for d in lengths if d == short)
        nlong = n-nshort
        if nshort == 1 and nlong == 1:
            return SimpleLieType(parent.family if parent.family in ('B', 'C') else 'B', 2)
        if nshort == 1:
            return SimpleLieType('B', n)
        if nlong == 1:
            return SimpleLieType('C', n)
        return SimpleLieType('F', 4)
    degree = dict((v, 0) for v in nodes)
    for a, b in bonds:
        degree[a] += 1
        degree[b] += 1
    if parent.family == 'D':
        spin = set([offset+parent.rank-1, offset+parent.rank-2])
        branch = offset+parent.rank-3
        if spin.issubset(nodes) and branch in nodes:
            return SimpleLieType('D', n, strict=False)
    if max(degree.values()) <= 2:
        return SimpleLieType('A', n)
    graph = networkx.Graph(list(bonds.keys()))
    center = next(v for v in nodes if degree[v] == 3)
    graph.remove_node(center)
    arms = sorted(len(c) for c in networkx.connected_components(graph))
    if arms[0] == 1 and arms[1] == 1:
        return SimpleLieType('D', n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return SimpleLieType('E', n)
    raise CRAtlasError('Unrecognized white subdiagram with arms %s' % arms)


def white_components(d):
    """Connected components (sorted node tuples) of the white subdiagram, in node order."""
    graph = networkx.Graph()
    graph.add_nodes_from(d.white_nodes)
    for a in d.white_nodes:
        for b in d.white_nodes:
            if a < b and d.system.cartan_matrix[a, b]:
                graph.add_edge(a, b)
    return sorted(tuple(sorted(c)) for c in networkx.connected_components(graph))


def isotropy(d):
    """
    The isotropy algebra of the flag of ``d``: the white subdiagram components classified into
    types, and a center of dimension equal to the number of black nodes.

    :param d: A :class:`PaintedDiagram`.
    :returns: An :class:`IsotropyDescription`.
    """
    types = [_classify_white(d.system, c) for c in white_components(d)]
    return IsotropyDescription(types, len(d.black))


def complementary_positive_roots(d):
    """
    Positive roots with a nonzero coefficient on some black node, i.e. R^+ minus R_K^+.  Their root
    spaces span the holomorphic tangent space of the flag.
    """
    return [r for r in d.system.positive_roots if any(r[b] for b in d.black)]


def isotropy_roots(d):
    """Positive roots of the isotropy (supported on white nodes only)."""
    return [r for r in d.system.positive_roots if not any(r[b] for b in d.black)]


def flag_dimension(d):
    """Complex dimension of the flag manifold."""
    return len(complementary_positive_roots(d))


def _painting_key(black):
    black = tuple(sorted(black))
    return (len(black), black)


def canonical_painting(d):
    """
    The representative of the diagram-automorphism orbit of ``d`` with the smallest black set
    (fewest nodes, then lexicographic), together with an automorphism ``perm`` carrying ``d`` onto
    it (``perm[i]`` is the image of node i).
    """
    best = None
    for perm in diagram_automorphisms(d.system):
        image = frozenset(perm[b] for b in d.black)
        key = _painting_key(image)
        if best is None or key < best[0]:
            best = (key, image, perm)
    return PaintedDiagram(d.system, best[1]), best[2]


def enumerate_paintings(system, orbit_representatives=False):
    """
    Every painting of ``system`` with at least one black node per component, sorted by number of
    black nodes and then lexicographically.

    :param system:                A :class:`RootSystem` or a list of types.
    :param orbit_representatives: Keep only one painting per diagram-automorphism orbit (the one
                                  :func:`canonical_painting` picks). [default: False]
    :returns:                     A list of :class:`PaintedDiagram`.
    """
    if not isinstance(system, RootSystem):
        system = build_root_system(system)
    choices = []
    for k in range(len(system.components)):
        nodes = system.component_nodes(k)
        subsets = []
        for size in range(1, len(nodes)+1):
            subsets.extend(itertools.combinations(nodes, size))
        choices.append(subsets)
    paintings = [PaintedDiagram(system, [b for part in combo for b in part])
                 for combo in itertools.product(*choices)]
    paintings.sort(key=lambda p: _painting_key(p.black))
    if orbit_representatives:
        paintings = [p for p in paintings if canonical_painting(p)[0] == p]
    return paintings


def _painted_graph(d):
    graph = networkx.DiGraph()
    for k, comp in enumerate(d.system.components):
        for node in d.system.component_nodes(k):
            graph.add_node(node, label=(comp.family, comp.rank), black=node in d.black)
    for i in range(d.system.rank):
        for j in range(d.system.rank):
            if i != j and d.system.cartan_matrix[i, j]:
                graph.add_edge(i, j, a=int(d.system.cartan_matrix[i, j]))
    return graph


def _painted_node_match(n1, n2):
    return n1['label'] == n2['label'] and n1['black'] == n2['black']


def _edge_match(e1, e2):
    return e1['a'] == e2['a']


def painted_isomorphisms(d1, d2):
    """
    All Dynkin-diagram isomorphisms from ``d1`` to ``d2`` that carry black nodes onto black nodes.
    Isomorphic factors may be permuted.

    :returns: Sorted list of tuples ``bij`` with ``bij[i]`` the node of ``d2`` that node i of ``d1``
              goes to; empty when the painted diagrams are not isomorphic.
    """
    if d1.system.rank != d2.system.rank or len(d1.black) != len(d2.black):
        return []
    if sorted(d1.system.components) != sorted(d2.system.components):
        return []
    matcher = isomorphism.DiGraphMatcher(_painted_graph(d1), _painted_graph(d2),
                                         node_match=_painted_node_match, edge_match=_edge_match)
    result = set()
    for mapping in matcher.isomorphisms_iter():
        result.add(tuple(mapping[i] for i in range(d1.system.rank)))
    return sorted(result)


def painted_automorphisms(d):
    """Diagram automorphisms of ``d`` that preserve its black set."""
    return painted_isomorphisms(d, d)


def PaintedDiagramToJSON(d):
    """
    JSON form ``{"components": [{"family", "rank"}...], "black": [...], "name": ...}``; black node
    ids are global and 1-based.
    """
    return {'components': [{'family': c.family, 'rank': c.rank} for c in d.system.components],
            'black': [b+1 for b in d.black_nodes],
            'name': d.name}


def PaintedDiagramFromJSON(data):
    try:
        types = [SimpleLieType(c['family'], int(c['rank'])) for c in data['components']]
        black = [int(b)-1 for b in data['black']]
    except (KeyError, TypeError, ValueError):
        raise InvalidPainting('Painted diagram JSON needs "components" and "black"')
    return PaintedDiagram(build_root_system(types), black)
