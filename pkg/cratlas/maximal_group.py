"""
maximal_group.py: Maximal compact groups of automorphisms.

A flag manifold F = G/K usually has G as its maximal connected compact group of biholomorphisms;
the exceptions are the three families of Onishchik pairs, where a factor of G extends to a larger
group A acting transitively on the same complex manifold:

    I    Sp_l/Sp_{l-1}.T^1 = SU_{2l}/U_{2l-1} = CP^{2l-1}       (l > 1)
    II   G_2/U_2 = SO_7/SO_5.SO_2 = Gr_2(R^7)
    III  SO_{2l+1}/U_l = SO_{2l+2}/U_{l+1} = Com(R^{2l+2})       (l > 2)

For a standard CR manifold G/L the maximal compact group is A^{ss} x T^1, with A^{ss} the maximal
holomorphic group of the associated flag; the contact element of each extended factor is carried
over to the larger group by :func:`transfer_contact_element`.  For a non-standard manifold the
maximal group is semisimple.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from .rootsys import Weight
from .flag import product, parse_diagram, PaintedDiagramToJSON
from .standard_cr import StandardCR, contact_data, canonical_key
from .nonstandard_cr import (NonStandardCR, Table2Entry, maximal_semisimple_nonstandard)
from .cratlas_utils import CRAtlasError, RationalToJSON, FormatRational

logger = logging.getLogger(__name__)


class OnishchikInstance(object):
    """
    One member of an Onishchik family at a concrete l: the painted G-side and A-side diagrams, the
    groups of both presentations ``A/C = G/K`` and the name of the flag.
    """

    def __init__(self, pair, ell, g_side, a_side, A, C, G, K, flag_label):
        self.pair = pair
        self.row = pair.row
        self.ell = ell
        self.g_side = g_side
        self.a_side = a_side
        self.A = A
        self.C = C
        self.G = G
        self.K = K
        self.flag_label = flag_label

    def __eq__(self, other):
        return (isinstance(other, OnishchikInstance) and self.row == other.row and
                self.ell == other.ell)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.row, self.ell))

    def __repr__(self):
        return 'OnishchikInstance(%s, l=%d: %s/%s = %s/%s)' % (self.row, self.ell, self.A, self.C,
                                                              self.G, self.K)


class OnishchikPair(object):
    """
    An Onishchik family.  ``black_length`` is the squared length of the black simple root on the
    G side, ``coweight_multiple`` the n with E^k = n omega^vee (the generator of the center of K in
    the matrix group of the pair) and ``embedding_index(l)`` the integer iota with
    B_a(E^k, E^c) = -iota under the normalization B_a(E^c, E^c) = -1.
    """

    def __init__(self, row, g_family, min_ell, black_length, coweight_multiple, index):
        self.row = row
        self.g_family = g_family
        self.min_ell = min_ell
        self.black_length = Fraction(black_length)
        self.coweight_multiple = coweight_multiple
        self._index = index

    def embedding_index(self, ell):
        return self._index(ell)

    def black_node(self, ell):
        """0-based node of the G-side black root."""
        if self.row == 'I':
            return 0
        if self.row == 'II':
            # G_2/U_2 = Gr_2(R^7): the short root is black, K' is the long-root SU_2
            return 0
        return ell-1

    def match(self, d):
        """The l for which the single-component diagram ``d`` is this family's G side, or None."""
        comp = d.system.components[0]
        if comp.family != self.g_family or comp.rank < self.min_ell:
            return None
        if d.black != frozenset([self.black_node(comp.rank)]):
            return None
        return comp.rank

    def instance(self, ell):
        if ell < self.min_ell or (self.row == 'II' and ell != 2):
            raise CRAtlasError('Onishchik family %s needs l >= %d, got %d' %
                               (self.row, self.min_ell, ell))
        if self.row == 'I':
            return OnishchikInstance(self, ell, parse_diagram('C%d[1]' % ell),
                                     parse_diagram('A%d[1]' % (2*ell-1)), 'SU_%d' % (2*ell),
                                     'U_%d' % (2*ell-1), 'Sp_%d' % ell, 'Sp_%d·T^1' % (ell-1),
                                     'CP^%d' % (2*ell-1))
        if self.row == 'II':
            return OnishchikInstance(self, 2, parse_diagram('G2[1]'), parse_diagram('B3[1]'),
                                     'SO_7', 'SO_5·SO_2', 'G_2', 'U_2', 'Gr_2(R^7)')
        return OnishchikInstance(self, ell, parse_diagram('B%d[%d]' % (ell, ell)),
                                 parse_diagram('D%d[%d]' % (ell+1, ell+1)), 'SO_%d' % (2*ell+2),
                                 'U_%d' % (ell+1), 'SO_%d' % (2*ell+1), 'U_%d' % ell,
                                 'Com(R^%d)' % (2*ell+2))

    def __repr__(self):
        return 'OnishchikPair(%s)' % self.row


# Embedding indices come from the matrix realizations Sp_l in SU_{2l}, G_2 in SO_7 and
# SO_{2l+1} in SO_{2l+2}, which oracle.matrix_embedding_index recomputes.
ONISHCHIK_PAIRS = (
    OnishchikPair('I', 'C', 2, 1, 1, lambda ell: 1),
    OnishchikPair('II', 'G', 2, Fraction(2, 3), 1, lambda ell: 2),
    OnishchikPair('III', 'B', 3, 1, 1, lambda ell: ell),
)


def onishchik_pair(row):
    for pair in ONISHCHIK_PAIRS:
        if pair.row == row:
            return pair
    raise CRAtlasError('No Onishchik family %r' % (row,))


def onishchik_extension(factor):
    """
    Match a single painted simple component against the G sides of the Onishchik families.

    :param factor: A :class:`PaintedDiagram` with one simple component.
    :returns:      An :class:`OnishchikInstance`, or None.
    """
    factor = parse_diagram(factor)
    if len(factor.system.components) != 1:
        raise CRAtlasError('onishchik_extension takes a single component, got %s' % factor.name)
    for pair in ONISHCHIK_PAIRS:
        ell = pair.match(factor)
        if ell is not None:
            return pair.instance(ell)
    return None


def maximal_holomorphic_group(F):
    """
    The maximal connected compact group of biholomorphisms of the flag ``F``, factor by factor:
    Onishchik G sides are replaced by their A sides, other factors are kept.

    :param F: A :class:`PaintedDiagram`.
    :returns: ``(factors, a_side_flag)``: the list of group names of A^{ss} and the painted diagram
              of F seen as a flag of A.
    """
    F = parse_diagram(F)
    names = []
    diagrams = []
    for factor in F.components():
        match = onishchik_extension(factor)
        if match is None:
            names.append(factor.system.components[0].group_name)
            diagrams.append(factor)
        else:
            names.append(match.A)
            diagrams.append(match.a_side)
    return names, product(diagrams)


class FactorTransfer(object):
    """
    How the contact element of one simple factor is carried over to the maximal group.  For a
    factor without an Onishchik extension ``row`` is None and Z'_i = Z_i.  Otherwise Z_i =
    ``lam`` E^k, and Z'_i = ``coefficient`` E^c with coefficient = B_g(Z_i, Z_i)/B_a(Z_i, E^c).
    """

    def __init__(self, component, row=None, ell=None, lam=None, b_g=None, b_a=None,
                 coefficient=None):
        self.component = component
        self.row = row
        self.ell = ell
        self.lam = lam
        self.b_g = b_g
        self.b_a = b_a
        self.coefficient = coefficient

    @property
    def description(self):
        if self.row is None:
            return "Z'_%d = Z_%d" % (self.component+1, self.component+1)
        return "Z'_%d = %s E^c (B_g(Z,Z) = %s, B_a(Z,E^c) = %s)" % (
            self.component+1, FormatRational(self.coefficient), FormatRational(self.b_g),
            FormatRational(self.b_a))

    def to_json(self):
        result = {'component': self.component+1, 'row': self.row, 'description': self.description}
        if self.row is not None:
            result.update({'ell': self.ell,
                           'lambda': RationalToJSON(self.lam),
                           'b_g': RationalToJSON(self.b_g),
                           'b_a': RationalToJSON(self.b_a),
                           'coefficient': RationalToJSON(self.coefficient)})
        return result

    def __repr__(self):
        return 'FactorTransfer(%s)' % self.description


def contact_element(s):
    """
    The contact element Z of ``s`` as coordinates over the simple coroots: Z is dual to theta
    under the invariant form, scaled to a primitive vector of the coroot lattice.

    :returns: ``(coords, c)`` with ``coords`` the integer coordinates and ``c`` the scale applied
              to the dual of theta.
    """
    system = s.diagram.system
    theta = s.theta
    raw = []
    for i in range(system.rank):
        value = sum((theta.coords[j]*system.fundamental_weights[j, i]
                     for j in range(system.rank)), Fraction(0))
        raw.append(value*system.root_lengths[i]/2)
    nonzero = [x for x in raw if x]
    numerators = reduce(gcd, [abs(x.numerator) for x in nonzero], 0)
    denominators = reduce(lambda a, b: a*b//gcd(a, b), [x.denominator for x in nonzero], 1)
    c = Fraction(denominators, numerators)
    coords = tuple(int(x*c) for x in raw)
    return coords, c


def transfer_contact_element(s):
    """
    Carry the contact element of a standard CR manifold to its maximal group, one simple factor
    at a time.  On an Onishchik factor with black weight p pi_j,

        lam = c p d_j / (2 n),  B_g(Z_i, Z_i) = -c^2 p^2 (pi_j, pi_j),  B_a(Z_i, E^c) = -lam iota,

    and Z'_i = (B_g(Z_i, Z_i)/B_a(Z_i, E^c)) E^c, which gives B_a(Z_i, Z'_i) = B_g(Z_i, Z_i).

    :param s: A :class:`StandardCR`.
    :returns: A list of :class:`FactorTransfer`, one per simple factor.
    """
    system = s.diagram.system
    _, c = contact_element(s)
    entries = s.entries()
    result = []
    for k, factor in enumerate(s.diagram.components()):
        match = onishchik_extension(factor)
        if match is None:
            result.append(FactorTransfer(k))
            continue
        pair = match.pair
        node = system.offsets[k] + pair.black_node(match.ell)
        p = entries[node]
        pi = Weight.fundamental(factor.system, pair.black_node(match.ell))
        pi_norm = factor.system.weight_inner(pi, pi)
        lam = c*p*pair.black_length/(2*pair.coweight_multiple)
        b_g = -c*c*p*p*pi_norm
        b_a = -lam*pair.embedding_index(match.ell)
        result.append(FactorTransfer(k, pair.row, match.ell, lam, b_g, b_a, b_g/b_a))
    return result


def a_side_standard(s):
    """
    The standard CR structure that the maximal group A induces on its own flag.  Both
    presentations of an Onishchik flag have Picard group Z, generated by the line bundles of the
    black fundamental weights of either side, so |p_i| is kept on every factor; the orientation
    comes from the transferred contact element, whose coefficient on E^c has the sign of p_i.
    """
    _, a_flag = maximal_holomorphic_group(s.diagram)
    transfer = transfer_contact_element(s)
    entries = []
    position = 0
    for k, factor in enumerate(s.diagram.components()):
        count = len(factor.black)
        block = list(s.tuple[position:position+count])
        position += count
        t = transfer[k]
        if t.row is not None:
            sign = 1 if t.coefficient > 0 else -1
            block = [sign*abs(block[0])]
        entries.extend(block)
    return StandardCR(a_flag, entries)


def _c2_labels(s):
    """
    Rewrite every B_2 factor of ``s`` as C_2.  The isomorphism exchanges the two nodes (the long
    root of one is the long root of the other), so black sets and tuple blocks are reversed.
    """
    if not any(c.name == 'B2' for c in s.diagram.system.components):
        return s
    diagrams = []
    entries = []
    position = 0
    for factor in s.diagram.components():
        count = len(factor.black)
        block = list(s.tuple[position:position+count])
        position += count
        if factor.system.name == 'B2':
            ids = sorted(2-b for b in factor.black)
            factor = parse_diagram('C2[%s]' % ','.join(str(i) for i in ids))
            block.reverse()
        diagrams.append(factor)
        entries.extend(block)
    return StandardCR(product(diagrams), entries)


def cr_class_key(s, allow_conjugate_J=True):
    """
    A key equal for two standard manifolds exactly when they are CR equivalent.  B_2 paintings
    are read as C_2 first, so B2[2] and C2[1] give the same key.
    """
    return canonical_key(a_side_standard(_c2_labels(s)), allow_conjugate_J=allow_conjugate_J)


def cr_equivalent(s1, s2, allow_conjugate_J=True):
    """
    CR equivalence of standard manifolds, possibly presented through different groups (Sp_2/Sp_1
    and SU_4/SU_3 are the same S^7, say): compare the A-side data of the maximal groups.
    """
    return (cr_class_key(s1, allow_conjugate_J=allow_conjugate_J) ==
            cr_class_key(s2, allow_conjugate_J=allow_conjugate_J))


class MaxGroupReport(object):
    """
    The maximal connected compact group of CR automorphisms A = A^{ss} (x T^1 when standard).

    - ``a_ss``: list of group names of the simple factors of A^{ss}.
    - ``center_dim``: 1 for standard manifolds, 0 otherwise.
    - ``a_side_flag``: the flag as seen by A (None for non-standard manifolds).
    - ``a_side_isotropy_B``: the isotropy B of M = A/B.
    - ``transfer``: list of :class:`FactorTransfer` (empty for non-standard manifolds).
    """

    def __init__(self, a_ss, center_dim, a_side_flag=None, a_side_isotropy_B=None, transfer=()):
        if center_dim not in (0, 1):
            raise CRAtlasError('Center dimension must be 0 or 1, got %r' % (center_dim,))
        self.a_ss = list(a_ss)
        self.center_dim = center_dim
        self.a_side_flag = a_side_flag
        self.a_side_isotropy_B = a_side_isotropy_B
        self.transfer = list(transfer)

    @property
    def full_group(self):
        """``SU_4×T^1`` and the like."""
        return '×'.join(self.a_ss + (['T^1'] if self.center_dim else []))

    @property
    def transfer_note(self):
        return '; '.join(t.description for t in self.transfer)

    def to_json(self):
        return {'a_ss': list(self.a_ss),
                'center_dim': self.center_dim,
                'full_group': self.full_group,
                'a_side_flag': (PaintedDiagramToJSON(self.a_side_flag)
                                if self.a_side_flag is not None else None),
                'a_side_isotropy_B': self.a_side_isotropy_B,
                'transfer': [t.to_json() for t in self.transfer]}

    def __repr__(self):
        return 'MaxGroupReport(%s)' % self.full_group


def maximal_cr_group(m):
    """
    The maximal connected compact group of CR automorphisms.  B_2 factors of a standard manifold
    are read as C_2, so B2[2] gets the SU_4 of the sphere S^7.

    :param m: A :class:`StandardCR`, a :class:`NonStandardCR`, or an instantiated
              :class:`Table2Entry` (the whole family over t).
    :returns: A :class:`MaxGroupReport`.
    """
    if isinstance(m, StandardCR):
        m = _c2_labels(m)
        names, a_flag = maximal_holomorphic_group(m.diagram)
        b = contact_data(a_side_standard(m)).isotropy_L.symbol()
        return MaxGroupReport(names, 1, a_flag, b, transfer_contact_element(m))
    if isinstance(m, NonStandardCR):
        m = m.entry
    if isinstance(m, Table2Entry):
        A = maximal_semisimple_nonstandard(m)
        # SO_8/SO_6 is the presentation of Spin_7/SU_3 under the larger group.
        b = 'SO_6' if m.row == 2 else m.isotropy_L
        return MaxGroupReport(['%s_%d' % factor for factor in A.factors], 0, None, b)
    raise TypeError('maximal_cr_group needs a CR manifold, got %r' % (m,))


def is_standard_by_center(report):
    """A homogeneous CR manifold is standard exactly when its maximal group has a 1-dim center."""
    return report.center_dim == 1
