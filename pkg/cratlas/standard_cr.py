"""
standard_cr.py: Standard homogeneous CR manifolds M = G/L, the circle bundles over a flag manifold
F = G/K whose CR structure comes from the invariant complex structure of F.

For a painted diagram with black nodes b_1 < ... < b_m, such a manifold is fixed by an integer
m-tuple p = (p_1, ..., p_m).  The weight theta = p_1 pi_{b_1} + ... + p_m pi_{b_m} is dual (under
the invariant form) to the contact element Z, and l = [k,k] + (Z(k) cap ker theta).  Tuples must have
no zero entry, no common divisor, and theta must not vanish on the coroot of any complementary root
(otherwise the centralizer of Z is bigger than k and the Levi form degenerates).
"""
import itertools
import logging
import re
from collections import namedtuple

from .rootsys import Weight
from .flag import (IsotropyDescription, isotropy, complementary_positive_roots,
                   painted_automorphisms, painted_isomorphisms, canonical_painting, parse_diagram,
                   PaintedDiagramToJSON, PaintedDiagramFromJSON)
from .cratlas_utils import (ZeroEntry, NonPrimitive, NonRegular, WrongLength, CRAtlasError,
                            TupleGCD, ParseIntegerList)

logger = logging.getLogger(__name__)


LeviSignature = namedtuple('LeviSignature', ['n_plus', 'n_minus'])
LeviSignature.__doc__ = """
Signature of the Levi form in complex dimensions: ``n_plus`` positive and ``n_minus`` negative
directions, ``n_plus + n_minus`` equal to the complex dimension of the flag.
"""


Witness = namedtuple('Witness', ['bijection', 'conjugate'])
Witness.__doc__ = """
Evidence for a CR equivalence of standard manifolds: the painted-diagram isomorphism used
(``bijection[i]`` is the image of node i) and whether the complex structure had to be conjugated
(J to -J, i.e. the tuple negated).
"""


def RootName(root):
    """Human-readable form of a root, e.g. ``α_1+2α_2`` or ``-α_1-α_2``."""
    parts = []
    for i, c in enumerate(root):
        if not c:
            continue
        coefficient = '' if abs(c) == 1 else str(abs(c))
        sign = '-' if c < 0 else ('+' if parts else '')
        parts.append('%s%sα_%d' % (sign, coefficient, i+1))
    return ''.join(parts) if parts else '0'


def _black_coroots(d):
    """For each complementary root, the coefficients of its coroot on the black nodes."""
    black = d.black_nodes
    return [(r, tuple(d.system.coroot(r)[b] for b in black))
            for r in complementary_positive_roots(d)]


def _first_singular_root(d, p, coroots=None):
    if coroots is None:
        coroots = _black_coroots(d)
    for r, c in coroots:
        if sum(a*b for a, b in zip(c, p)) == 0:
            return r
    return None


class StandardCR(object):
    """
    A standard homogeneous CR manifold: a painted diagram and an integer tuple indexed by its black
    nodes in increasing order.  Construction validates the tuple; see :func:`make_standard`.

    :param diagram:       A :class:`PaintedDiagram` (or a diagram name).
    :param p:             Sequence of nonzero integers, one per black node.
    :param check_regular: Enforce that theta does not vanish on any complementary coroot.
                          [default: True]
    """

    def __init__(self, diagram, p, check_regular=True):
        diagram = parse_diagram(diagram)
        try:
            p = tuple(int(x) for x in p)
        except (TypeError, ValueError):
            raise TypeError('Tuple entries must be integers, got %r' % (p,))
        if len(p) != len(diagram.black):
            raise WrongLength('%s has %d black nodes but the tuple %s has %d entries' %
                              (diagram.name, len(diagram.black), p, len(p)))
        if any(x == 0 for x in p):
            raise ZeroEntry('Tuple %s for %s has a zero entry' % (p, diagram.name))
        g = TupleGCD(p)
        if g != 1:
            raise NonPrimitive('Tuple %s for %s has common divisor %d' % (p, diagram.name, g))
        self.diagram = diagram
        self.tuple = p
        if check_regular:
            r = _first_singular_root(diagram, p)
            if r is not None:
                raise NonRegular('theta((%s)^vee) = 0 for %s p=%s: the centralizer of the contact '
                                 'element is larger than k' % (RootName(r), diagram.name, p))

    @property
    def theta(self):
        coords = [0]*self.diagram.system.rank
        for b, x in zip(self.diagram.black_nodes, self.tuple):
            coords[b] = x
        return Weight(self.diagram.system, coords)

    @property
    def name(self):
        return '%s p=(%s)' % (self.diagram.name, ','.join(str(x) for x in self.tuple))

    def entries(self):
        """Dict from black node to its tuple entry."""
        return dict(zip(self.diagram.black_nodes, self.tuple))

    def __eq__(self, other):
        return (isinstance(other, StandardCR) and self.diagram == other.diagram and
                self.tuple == other.tuple)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.diagram, self.tuple))

    def __repr__(self):
        return 'StandardCR(%s)' % self.name

    def __str__(self):
        return self.name


def make_standard(d, p, check_regular=True):
    """
    Validate an m-tuple for the painted diagram ``d`` and build the standard CR manifold.

    :param d:             A :class:`PaintedDiagram` or a diagram name like ``"A2[1,2]"``.
    :param p:             Integers, one per black node (black nodes in increasing order).
    :param check_regular: Reject tuples for which theta vanishes on a complementary coroot.
                          [default: True]
    :returns:             A :class:`StandardCR`.
    """
    return StandardCR(d, p, check_regular=check_regular)


def primitive_tuple(p):
    """Divide an integer tuple by the gcd of its entries."""
    g = TupleGCD(p)
    if g == 0:
        raise ZeroEntry('Cannot make the zero tuple primitive')
    return tuple(int(x)//g for x in p)


class ContactData(object):
    """
    The contact data of a standard CR manifold: theta (which stands for Z = B^{-1} theta) and the
    description of l = [k,k] + (Z(k) cap ker theta).
    """

    def __init__(self, theta, isotropy_L):
        self.theta = theta
        self.isotropy_L = isotropy_L
        self.contact_element_note = 'Z = B^{-1}(theta), represented by theta'

    def __repr__(self):
        return 'ContactData(theta=%r, L=%s)' % (self.theta, self.isotropy_L.symbol())


def contact_data(s):
    """
    Contact data of ``s``: the semisimple part of l is the white subdiagram, and its center has
    dimension m - 1 (the kernel of theta inside the m-dimensional center of k).
    """
    k = isotropy(s.diagram)
    return ContactData(s.theta, IsotropyDescription(k.semisimple_type, k.center_dim-1))


def levi_signature(s):
    """
    Signature of the Levi form: complementary roots alpha with theta(alpha^vee) > 0 are positive
    directions, the others negative.  All-positive tuples are positive definite.
    """
    n_plus = 0
    n_minus = 0
    for r, c in _black_coroots(s.diagram):
        value = sum(a*b for a, b in zip(c, s.tuple))
        if value > 0:
            n_plus += 1
        elif value < 0:
            n_minus += 1
        else:
            raise NonRegular('theta((%s)^vee) = 0 for %s' % (RootName(r), s.name))
    return LeviSignature(n_plus, n_minus)


def _transport(s, bijection, target):
    """The tuple of ``s`` carried along a node bijection onto the black nodes of ``target``."""
    moved = dict((bijection[b], x) for b, x in s.entries().items())
    return tuple(moved[b] for b in target.black_nodes)


def equivalent_standard(s1, s2, allow_conjugate_J=True, use_automorphisms=True):
    """
    Decide whether two standard CR manifolds are equivalent through a painted-diagram isomorphism.

    :param s1, s2:            :class:`StandardCR` instances.
    :param allow_conjugate_J: Also accept the globally negated tuple (the conjugate complex
                              structure). [default: True]
    :param use_automorphisms: Search all painted-diagram isomorphisms; with False only the
                              identity is tried, which is plain tuple identity. [default: True]
    :returns:                 ``(True, Witness)`` or ``(False, None)``.
    """
    if use_automorphisms:
        bijections = painted_isomorphisms(s1.diagram, s2.diagram)
    elif s1.diagram == s2.diagram:
        bijections = [tuple(range(s1.diagram.system.rank))]
    else:
        bijections = []
    for bij in bijections:
        moved = _transport(s1, bij, s2.diagram)
        if moved == s2.tuple:
            return True, Witness(bij, False)
    if allow_conjugate_J:
        for bij in bijections:
            moved = _transport(s1, bij, s2.diagram)
            if tuple(-x for x in moved) == s2.tuple:
                return True, Witness(bij, True)
    return False, None


def _tuple_key(p):
    return (sum(1 for x in p if x < 0), p)


def _orbit(d, p, automorphisms, allow_conjugate_J):
    entries = dict(zip(d.black_nodes, p))
    for perm in automorphisms:
        moved = dict((perm[b], x) for b, x in entries.items())
        image = tuple(moved[b] for b in d.black_nodes)
        yield image
        if allow_conjugate_J:
            yield tuple(-x for x in image)


def canonical_form(s, allow_conjugate_J=True, use_automorphisms=True):
    """
    The representative of the equivalence class of ``s`` on its own diagram: fewest negative
    entries first, then the lexicographically smallest tuple, over the painted-diagram automorphism
    orbit (and the global sign when conjugation is allowed).
    """
    if use_automorphisms:
        automorphisms = painted_automorphisms(s.diagram)
    else:
        automorphisms = [tuple(range(s.diagram.system.rank))]
    best = min(_orbit(s.diagram, s.tuple, automorphisms, allow_conjugate_J), key=_tuple_key)
    return StandardCR(s.diagram, best, check_regular=False)


def canonical_key(s, allow_conjugate_J=True):
    """
    A hashable key that is equal for two standard manifolds exactly when
    :func:`equivalent_standard` relates them (with all isomorphisms allowed): the painting is moved
    to its diagram-canonical representative first, then the tuple is canonicalized.
    """
    target, perm = canonical_painting(s.diagram)
    moved = StandardCR(target, _transport(s, perm, target), check_regular=False)
    c = canonical_form(moved, allow_conjugate_J=allow_conjugate_J)
    return (tuple(t.name for t in target.system.components), target.black_nodes, c.tuple)


def enumerate_standard(d, bound, allow_conjugate_J=True, use_automorphisms=True):
    """
    All standard CR manifolds over the painting ``d`` with max |p_i| <= bound, one canonical
    representative per equivalence class (see :func:`canonical_form`), sorted by the same key.

    :param d:                 A :class:`PaintedDiagram`.
    :param bound:             Positive integer bound on the entries.
    :param allow_conjugate_J: Identify a tuple with its negative. [default: True]
    :param use_automorphisms: Identify tuples related by painted-diagram automorphisms.
                              [default: True]
    :returns:                 A list of :class:`StandardCR`.
    """
    d = parse_diagram(d)
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise CRAtlasError('Tuple bound must be a positive integer, got %r' % (bound,))
    if use_automorphisms:
        automorphisms = painted_automorphisms(d)
    else:
        automorphisms = [tuple(range(d.system.rank))]
    coroots = _black_coroots(d)
    values = [x for x in range(-bound, bound+1) if x]
    found = set()
    for p in itertools.product(values, repeat=len(d.black)):
        if TupleGCD(p) != 1 or _first_singular_root(d, p, coroots) is not None:
            continue
        found.add(min(_orbit(d, p, automorphisms, allow_conjugate_J), key=_tuple_key))
    logger.debug('%s: %d classes with bound %d', d.name, len(found), bound)
    return [StandardCR(d, p, check_regular=False) for p in sorted(found, key=_tuple_key)]


_standard_spec = re.compile(r'^\s*(?P<diagram>\S+)\s+p\s*=\s*(?P<tuple>.+?)\s*$')


def ParseStandard(text):
    """
    Read the textual form ``<diagram> p=(<ints>)``, e.g. ``A2[1,2] p=(2,-1)``.
    """
    m = _standard_spec.match(text)
    if not m:
        raise CRAtlasError('Cannot read a standard CR manifold from "%s"' % text)
    return make_standard(m.group('diagram'), ParseIntegerList(m.group('tuple')))


def StandardCRToJSON(s):
    """
    ``{"diagram", "tuple", "levi": [n_plus, n_minus], "isotropy", "name"}``; ``isotropy`` is the
    description of L.
    """
    return {'diagram': PaintedDiagramToJSON(s.diagram),
            'tuple': list(s.tuple),
            'levi': list(levi_signature(s)),
            'isotropy': contact_data(s).isotropy_L.to_json(),
            'name': s.name}


def StandardCRFromJSON(data):
    try:
        return make_standard(PaintedDiagramFromJSON(data['diagram']), data['tuple'])
    except KeyError as e:
        raise CRAtlasError('Standard CR JSON is missing %s' % e)
