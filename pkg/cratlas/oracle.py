"""
oracle.py: A brute-force verification layer.  It builds Chevalley bases with explicit structure
constants for algebras of rank at most 3 and recomputes, by actual brackets, what the rest of
cratlas derives combinatorially: centralizers of contact elements, integrability and standardness
of the holomorphic tangent space, and the signature of the Levi form.  It also holds the explicit
matrix realizations behind the Onishchik embedding indices.

Conventions
-----------
Basis: H_1..H_r (the simple coroots) followed by E_alpha for the positive and then the negative
roots.  [H_i, E_a] = <a, alpha_i^vee> E_a, [E_a, E_-a] = H_a (the coroot of a written over the H_i)
and [E_a, E_b] = N_{a,b} E_{a+b}.  Signs of the N_{a,b} are fixed by declaring N = +(p+1) on every
extraspecial pair (alpha, xi-alpha), alpha the first simple root with xi-alpha a positive root;
all other constants follow from the usual identities.

Compact real form: X_a = E_a - E_-a, Y_a = i(E_a + E_-a) for positive a, with J X_a = Y_a and
J Y_a = -X_a on the complementary roots.  The Levi form is L(u, w) = -B(Z, [u, Jw]) where
B(Z, V) = i sum_j theta_j v_j and v_j is the H_j coefficient of V; with this orientation all-positive
tuples give positive definite forms.
"""
import logging
import itertools
from fractions import Fraction
from functools import lru_cache

import sympy

from .rootsys import Weight, build_root_system, _coerce_types
from .flag import PaintedDiagram, complementary_positive_roots, isotropy_roots
from .standard_cr import StandardCR, LeviSignature
from .maximal_group import onishchik_pair, transfer_contact_element
from .cratlas_utils import (UnsupportedRank, UnsupportedInstance, InvalidSpan, DegenerateForm,
                            MismatchedSystem, CRAtlasError, ToRational)

logger = logging.getLogger(__name__)

MAX_ORACLE_RANK = 3


class ChevalleyAlgebra(object):
    """
    The complex semisimple Lie algebra of a root system in a Chevalley basis.  Do not construct
    directly; use :func:`build_chevalley`.

    Attributes:

    - ``system``: the :class:`RootSystem`.
    - ``basis``: list of labels, ``('H', i)`` or ``('E', root)``.
    - ``index``: dict from label to basis position.
    - ``table``: dict from a pair of basis positions (i < j) to the sparse bracket, a dict from
      basis position to Fraction.
    """

    def __init__(self, system):
        self.system = system
        rank = system.rank
        self.basis = [('H', i) for i in range(rank)]
        self.basis.extend(('E', r) for r in system.positive_roots)
        self.basis.extend(('E', r) for r in system.negative_roots)
        self.index = dict((label, i) for i, label in enumerate(self.basis))
        self._constants = {}
        self.table = {}
        for i in range(len(self.basis)):
            for j in range(i+1, len(self.basis)):
                value = self._basis_bracket(self.basis[i], self.basis[j])
                if value:
                    self.table[(i, j)] = value

    @property
    def dimension(self):
        return len(self.basis)

    def root_vector(self, root):
        return self.index[('E', tuple(root))]

    def _extraspecial(self, xi):
        for i in range(self.system.rank):
            beta = tuple(c-(1 if j == i else 0) for j, c in enumerate(xi))
            if self.system.is_positive(beta):
                return self.system.simple_root(i), beta
        raise RuntimeError('No extraspecial pair for %s' % (xi,))

    def _string_below(self, alpha, beta):
        """max{k : beta - k alpha is a root}."""
        k = 0
        while True:
            candidate = tuple(b-(k+1)*a for a, b in zip(alpha, beta))
            if not self.system.is_root(candidate):
                return k
            k += 1

    def _length(self, root):
        return self.system.inner(root, root)

    def structure_constant(self, a, b):
        """N_{a,b} for roots a, b (0 when a+b is not a root)."""
        a = tuple(a)
        b = tuple(b)
        key = (a, b)
        if key not in self._constants:
            self._constants[key] = self._compute_constant(a, b)
        return self._constants[key]

    def _compute_constant(self, a, b):
        system = self.system
        c = tuple(x+y for x, y in zip(a, b))
        if not system.is_root(c):
            return 0
        pos_a = system.is_positive(a)
        pos_b = system.is_positive(b)
        if pos_a and pos_b:
            if system.root_index(a) > system.root_index(b):
                return -self.structure_constant(b, a)
            alpha, beta = self._extraspecial(c)
            if (a, b) == (alpha, beta):
                return self._string_below(alpha, beta)+1
            n_extra = self.structure_constant(alpha, beta)
            minus_alpha = tuple(-x for x in alpha)
            minus_beta = tuple(-x for x in beta)
            total = Fraction(0)
            s_minus_alpha = tuple(x-y for x, y in zip(b, alpha))
            if system.is_root(s_minus_alpha):
                total += Fraction(self.structure_constant(b, minus_alpha) *
                                  self.structure_constant(a, minus_beta),
                                  1)/self._length(s_minus_alpha)
            r_minus_alpha = tuple(x-y for x, y in zip(a, alpha))
            if system.is_root(r_minus_alpha):
                total += Fraction(self.structure_constant(minus_alpha, a) *
                                  self.structure_constant(b, minus_beta),
                                  1)/self._length(r_minus_alpha)
            value = self._length(c)/n_extra*total
            return _integral(value, a, b)
        if not pos_a and not pos_b:
            return -self.structure_constant(tuple(-x for x in a), tuple(-x for x in b))
        # Mixed signs: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) with a+b+c = 0.
        c = tuple(-x for x in c)
        if system.is_positive(c) == pos_a:
            value = self._length(c)/self._length(b)*self.structure_constant(c, a)
        else:
            value = self._length(c)/self._length(a)*self.structure_constant(b, c)
        return _integral(value, a, b)

    def _basis_bracket(self, x, y):
        system = self.system
        if x[0] == 'H' and y[0] == 'H':
            return {}
        if x[0] == 'E' and y[0] == 'H':
            return dict((k, -v) for k, v in self._basis_bracket(y, x).items())
        if x[0] == 'H':
            i = x[1]
            value = sum(int(y[1][j])*int(system.cartan_matrix[i, j]) for j in range(system.rank))
            return {self.index[y]: Fraction(value)} if value else {}
        a, b = x[1], y[1]
        total = tuple(p+q for p, q in zip(a, b))
        if not any(total):
            return dict((i, Fraction(c)) for i, c in enumerate(system.coroot(a)) if c)
        n = self.structure_constant(a, b)
        if not n:
            return {}
        return {self.index[('E', total)]: Fraction(n)}

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return dict((k, -v) for k, v in self.table.get((j, i), {}).items())

    def __repr__(self):
        return 'ChevalleyAlgebra(%s)' % self.system.name


def _integral(value, a, b):
    if value.denominator != 1:
        raise RuntimeError('Non-integral structure constant N_{%s,%s} = %s' % (a, b, value))
    return int(value)


@lru_cache(maxsize=None)
def _build_chevalley(types):
    logger.debug('Building Chevalley basis for %s', 'x'.join(t.name for t in types))
    return ChevalleyAlgebra(build_root_system(list(types)))


def build_chevalley(lie_type):
    """
    Build (or fetch from the memo table) the Chevalley basis of a root system of rank at most 3.

    :param lie_type: A :class:`SimpleLieType`, a type name such as ``"B3"``, a list of types or a
                     :class:`RootSystem`.
    :returns:        A :class:`ChevalleyAlgebra`.
    """
    types = _coerce_types(lie_type)
    rank = sum(t.rank for t in types)
    if rank > MAX_ORACLE_RANK:
        raise UnsupportedRank('The oracle handles rank <= %d, got %s (rank %d)' %
                              (MAX_ORACLE_RANK, 'x'.join(t.name for t in types), rank))
    return _build_chevalley(types)


def _as_vector(alg, x):
    if isinstance(x, dict):
        return x
    if isinstance(x, int):
        return {x: Fraction(1)}
    return {alg.index[x]: Fraction(1)}


def bracket(alg, x, y):
    """
    The bracket of two elements given as sparse vectors (dicts from basis position to rational),
    basis positions or basis labels.
    """
    x = _as_vector(alg, x)
    y = _as_vector(alg, y)
    result = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in alg.bracket_basis(i, j).items():
                result[k] = result.get(k, 0) + a*b*c
    return dict((k, v) for k, v in result.items() if v)


def structure_constant(alg, a, b):
    """N_{a,b} in ``alg``."""
    return alg.structure_constant(a, b)


def _add(u, v, scale=1):
    result = dict(u)
    for k, c in v.items():
        result[k] = result.get(k, 0) + scale*c
    return dict((k, c) for k, c in result.items() if c)


def check_jacobi(alg, logger=None):
    """
    Check the Jacobi identity on every triple of distinct basis elements.

    :param alg:    A :class:`ChevalleyAlgebra`.
    :param logger: If given, the first failing triple is reported through it. [default: None]
    :returns:      True when the identity holds everywhere.
    """
    n = alg.dimension
    for i, j, k in itertools.combinations(range(n), 3):
        total = _add(_add(bracket(alg, i, alg.bracket_basis(j, k)),
                          bracket(alg, j, alg.bracket_basis(k, i))),
                     bracket(alg, k, alg.bracket_basis(i, j)))
        if total:
            if logger:
                logger.error('Jacobi identity fails in %s on %s, %s, %s', alg.system.name,
                             alg.basis[i], alg.basis[j], alg.basis[k])
            return False
    return True


def _theta_coords(alg, theta):
    if isinstance(theta, Weight):
        if theta.system != alg.system:
            raise MismatchedSystem('Weight of %s used with %s' % (theta.system.name,
                                                                  alg.system.name))
        return theta.coords
    coords = tuple(ToRational(x) for x in theta)
    if len(coords) != alg.system.rank:
        raise MismatchedSystem('theta has %d coordinates but %s has rank %d' %
                               (len(coords), alg.system.name, alg.system.rank))
    return coords


def contact_vector(alg, theta):
    """
    Z = sum_i t_i H_i, the element dual to theta: sum_i t_i A[i][j] = theta_j d_j / 2 so that
    a(Z) = (theta, a) for every root a.
    """
    system = alg.system
    coords = _theta_coords(alg, theta)
    cartan = sympy.Matrix(system.cartan_matrix.tolist())
    rhs = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) *
                         sympy.Rational(d.numerator, d.denominator)/2
                         for c, d in zip(coords, system.root_lengths)]])
    t = rhs*cartan.inv()
    return dict((i, _to_fraction(t[0, i])) for i in range(system.rank) if t[0, i] != 0)


def centralizer_dim(alg, theta):
    """
    Dimension of the centralizer of Z (dual to theta), as the kernel of ad(Z) computed from the
    bracket table with exact rank.
    """
    Z = contact_vector(alg, theta)
    n = alg.dimension
    matrix = sympy.zeros(n, n)
    for j in range(n):
        for i, c in bracket(alg, Z, j).items():
            matrix[i, j] = sympy.Rational(c.numerator, c.denominator)
    return n - matrix.rank()


def centralizer_dim_formula(system, theta):
    """dim h + #{a in R : theta(a^vee) = 0}, the count ad(Z) has to reproduce."""
    if not isinstance(theta, Weight):
        theta = Weight(system, theta)
    zero = sum(1 for r in system.positive_roots
               if sum(c*w for c, w in zip(system.coroot(r), theta.coords)) == 0)
    return system.rank + 2*zero


def _check_system(alg, system):
    if system != alg.system:
        raise MismatchedSystem('%s given with a Chevalley basis of %s' % (system.name,
                                                                           alg.system.name))


def _span_roots(alg, span, isotropy=None):
    system = alg.system
    if isinstance(span, PaintedDiagram):
        _check_system(alg, span.system)
        m10 = list(complementary_positive_roots(span))
        k_roots = set(isotropy_roots(span))
        k_roots.update(tuple(-c for c in r) for r in list(k_roots))
        return m10, k_roots
    m10 = [tuple(r) for r in span]
    for r in m10:
        if len(r) != system.rank or not system.is_root(r):
            raise InvalidSpan('%s is not a root of %s' % (r, system.name))
    m10_set = set(m10)
    if any(tuple(-c for c in r) in m10_set for r in m10):
        raise InvalidSpan('m10 meets its conjugate')
    covered = m10_set.union(tuple(-c for c in r) for r in m10)
    if isotropy is None:
        k_roots = set(system.all_roots).difference(covered)
    else:
        k_roots = set(tuple(r) for r in isotropy)
        k_roots.update(tuple(-c for c in r) for r in list(k_roots))
        if k_roots.intersection(covered) or len(k_roots)+len(covered) != len(system.all_roots):
            raise InvalidSpan('m10 and its conjugate do not span the complement of the isotropy')
    return m10, k_roots


def verify_integrability(alg, span, isotropy=None):
    """
    Whether l^C + m10 is closed under the bracket, l^C taken as the Cartan subalgebra plus the root
    spaces of the isotropy roots.

    :param alg:      A :class:`ChevalleyAlgebra`.
    :param span:     A :class:`PaintedDiagram` (m10 = the complementary positive roots) or a list of
                     roots spanning m10.
    :param isotropy: Roots of the isotropy; by default every root a with neither a nor -a in m10.
                     [default: None]
    :returns:        A bool.  Raises InvalidSpan when m10 meets its conjugate.
    """
    m10, k_roots = _span_roots(alg, span, isotropy)
    allowed = set(range(alg.system.rank))
    allowed.update(alg.root_vector(r) for r in k_roots)
    allowed.update(alg.root_vector(r) for r in m10)
    for i, j in itertools.combinations(sorted(allowed), 2):
        if not set(alg.bracket_basis(i, j)).issubset(allowed):
            logger.debug('[%s, %s] leaves the span', alg.basis[i], alg.basis[j])
            return False
    return True


def verify_standard(alg, m10, theta):
    """[Z, m10] is contained in m10, checked by explicit brackets."""
    if isinstance(m10, PaintedDiagram):
        m10 = complementary_positive_roots(m10)
    Z = contact_vector(alg, theta)
    targets = set(alg.root_vector(r) for r in m10)
    for r in m10:
        if not set(bracket(alg, Z, alg.root_vector(r))).issubset(targets):
            return False
    return True


def _real_bracket(alg, u, v):
    """Bracket of phase-homogeneous elements (phase, real coefficients): phases add."""
    return (u[0]+v[0], bracket(alg, u[1], v[1]))


def levi_form_matrix(alg, painting, tuple_):
    """
    The real symmetric matrix of the Levi form on the basis X_a, Y_a (a running over the
    complementary positive roots), as a sympy Matrix.
    """
    painting_system = painting.system
    _check_system(alg, painting_system)
    if len(tuple_) != len(painting.black):
        raise CRAtlasError('%s needs %d tuple entries, got %d' %
                           (painting.name, len(painting.black), len(tuple_)))
    coords = [0]*painting_system.rank
    for b, p in zip(painting.black_nodes, tuple_):
        coords[b] = int(p)
    vectors = []
    images = []
    for r in complementary_positive_roots(painting):
        e = alg.root_vector(r)
        f = alg.root_vector(tuple(-c for c in r))
        X = (0, {e: Fraction(1), f: Fraction(-1)})
        Y = (1, {e: Fraction(1), f: Fraction(1)})
        vectors.extend([X, Y])
        images.extend([Y, (X[0], dict((k, -c) for k, c in X[1].items()))])
    n = len(vectors)
    matrix = sympy.zeros(n, n)
    for a in range(n):
        for b in range(n):
            phase, V = _real_bracket(alg, vectors[a], images[b])
            pairing = sum((coords[j]*V.get(j, 0) for j in range(painting_system.rank)),
                          Fraction(0))
            if not pairing:
                continue
            if (phase+1) % 2:
                raise RuntimeError('Levi form is not real on %s' % painting.name)
            sign = -1 if ((phase+1)//2) % 2 else 1
            value = -sign*pairing
            matrix[a, b] = sympy.Rational(value.numerator, value.denominator)
    return matrix


def levi_form_oracle(alg, painting, tuple_):
    """
    Signature of the Levi form of the standard CR manifold (painting, tuple), computed from the
    Hermitian form on the compact real form.  Real counts are halved to complex dimensions.

    :returns: A :class:`cratlas.standard_cr.LeviSignature`.  Raises DegenerateForm when the form
              has a kernel.
    """
    matrix = levi_form_matrix(alg, painting, tuple_)
    n = matrix.shape[0]
    if matrix.rank() < n:
        raise DegenerateForm('Levi form of %s p=%s is degenerate' % (painting.name, tuple(tuple_)))
    positive, negative = _inertia(matrix)
    return LeviSignature(positive//2, negative//2)


def _inertia(matrix):
    """Numbers of positive and negative eigenvalues of a nonsingular rational symmetric matrix."""
    try:
        _, D = matrix.LDLdecomposition(hermitian=False)
        pivots = [D[i, i] for i in range(D.shape[0])]
        if all(p.is_Rational and p != 0 for p in pivots):
            return (sum(1 for p in pivots if p > 0), sum(1 for p in pivots if p < 0))
    except (ValueError, ZeroDivisionError):
        pass
    positive = negative = 0
    for value, multiplicity in matrix.eigenvals().items():
        if value.is_positive:
            positive += multiplicity
        elif value.is_negative:
            negative += multiplicity
        else:
            raise DegenerateForm('Cannot decide the sign of eigenvalue %s' % value)
    return positive, negative


def _pair_row(pair):
    if isinstance(pair, str):
        return pair
    return pair.row


def _symplectic_center(ell):
    """X_k = i diag(1, 0.., -1, 0..) in sp_l inside su_{2l}, and X_c generating U_{2l-1}."""
    N = 2*ell
    k = [0]*N
    k[0] = 1
    k[ell] = -1
    c = [sympy.Integer(1)] + [sympy.Rational(-1, N-1)]*(N-1)
    X_k = sympy.I*sympy.diag(*k)
    X_c = sympy.I*sympy.diag(*c)
    J = sympy.zeros(N, N)
    J[:ell, ell:] = sympy.eye(ell)
    J[ell:, :ell] = -sympy.eye(ell)
    if X_k.T*J + J*X_k != sympy.zeros(N, N):
        raise RuntimeError('X_k is not in sp_%d' % ell)
    return X_k, X_c


def _rotation(n, planes, weights):
    X = sympy.zeros(n, n)
    for (a, b), w in zip(planes, weights):
        X[a, b] = -w
        X[b, a] = w
    return X


def _orthogonal_center(ell):
    """X_k generating U_l in so_{2l+1} (upper-left block of so_{2l+2}), X_c generating U_{l+1}."""
    n = 2*ell+2
    planes = [(2*i, 2*i+1) for i in range(ell+1)]
    X_k = _rotation(n, planes[:ell], [1]*ell)
    X_c = _rotation(n, planes, [sympy.Rational(1, ell+1)]*(ell+1))
    if any(X_k[n-1, j] != 0 or X_k[j, n-1] != 0 for j in range(n)):
        raise RuntimeError('X_k is not in so_%d' % (2*ell+1))
    return X_k, X_c


# The invariant 3-form of G_2 on R^7 = R + C^3: e^0 ^ (e^12 + e^34 + e^56) + Re dz_1 dz_2 dz_3,
# with z_1 = x_1 + i x_2, z_2 = x_3 + i x_4, z_3 = x_5 + i x_6.
_G2_FORM = {(0, 1, 2): 1, (0, 3, 4): 1, (0, 5, 6): 1,
            (1, 3, 5): 1, (1, 4, 6): -1, (2, 3, 6): -1, (2, 4, 5): -1}


def _g2_form_tensor():
    phi = {}
    for triple, sign in _G2_FORM.items():
        for perm in itertools.permutations(range(3)):
            inversions = sum(1 for i, j in itertools.combinations(range(3), 2)
                             if perm[i] > perm[j])
            parity = -1 if inversions % 2 else 1
            phi[tuple(triple[i] for i in perm)] = sign*parity
    return phi


def _preserves_g2_form(X):
    """Whether X in so_7 annihilates the invariant 3-form, i.e. X lies in g_2."""
    phi = _g2_form_tensor()
    for a, b, c in itertools.combinations(range(7), 3):
        value = 0
        for d in range(7):
            value += (X[d, a]*phi.get((d, b, c), 0) + X[d, b]*phi.get((a, d, c), 0) +
                      X[d, c]*phi.get((a, b, d), 0))
        if value != 0:
            return False
    return True


def _g2_center(ell):
    """
    X_k = omega_1^vee of G_2 acting on R^7 (weights 1, 1, -2 on the planes of z_1, z_2, z_3), and
    X_c generating the SO_2 of SO_2 x SO_5, the stabilizer of the z_3 plane.
    """
    planes = [(1, 2), (3, 4), (5, 6)]
    X_k = _rotation(7, planes, [1, 1, -2])
    X_c = _rotation(7, planes[2:], [-1])
    if not _preserves_g2_form(X_k):
        raise RuntimeError('X_k is not in g_2')
    if X_k*X_c != X_c*X_k:
        raise RuntimeError('X_k is not in the stabilizer of the z_3 plane')
    return X_k, X_c


_SUPPORTED = {'I': (2, 3), 'II': (2,), 'III': (3, 4)}


def _realization(pair, ell):
    row = _pair_row(pair)
    if row not in _SUPPORTED or ell not in _SUPPORTED[row]:
        raise UnsupportedInstance('No matrix realization for Onishchik family %s at l = %r' %
                                  (row, ell))
    if row == 'I':
        X_k, X_c = _symplectic_center(ell)
        g_scale = sympy.Integer(1)
    elif row == 'II':
        X_k, X_c = _g2_center(ell)
        g_scale = sympy.Integer(2)
    else:
        X_k, X_c = _orthogonal_center(ell)
        g_scale = sympy.Integer(2)
    # B_a is the trace form rescaled so that B_a(E^c, E^c) = -1.
    a_scale = -1/(X_c*X_c).trace()
    return X_k, X_c, a_scale, g_scale


def _to_fraction(value):
    value = sympy.nsimplify(value)
    if not value.is_Rational:
        raise RuntimeError('Expected a rational value, got %s' % value)
    return Fraction(int(value.p), int(value.q))


def matrix_embedding_index(pair, ell):
    """
    iota = -B_a(E^k, E^c) from the explicit matrix realization of an Onishchik pair (rows I and
    III at small l, row II), with B_a the trace form normalized by B_a(E^c, E^c) = -1.

    :param pair: An :class:`cratlas.maximal_group.OnishchikPair` or its row label.
    :param ell:  The rank parameter.
    :returns:    A Fraction (an integer for every supported instance).
    """
    X_k, X_c, a_scale, _ = _realization(pair, ell)
    return -_to_fraction(a_scale*(X_k*X_c).trace())


def matrix_transfer_check(row, ell, p=1):
    """
    Both sides of B_a(Z, Z') = B_g(Z, Z) for the G-side flag of an Onishchik pair with tuple (p),
    evaluated on matrices: Z = lam E^k and Z' = coefficient E^c come from
    :func:`cratlas.maximal_group.transfer_contact_element`.

    :returns: ``(B_a(Z, Z'), B_g(Z, Z))`` as Fractions.
    """
    X_k, X_c, a_scale, g_scale = _realization(row, ell)
    instance = onishchik_pair(_pair_row(row)).instance(ell)
    transfer = transfer_contact_element(StandardCR(instance.g_side, (p,)))[0]
    lam = sympy.Rational(transfer.lam.numerator, transfer.lam.denominator)
    coefficient = sympy.Rational(transfer.coefficient.numerator, transfer.coefficient.denominator)
    Z = lam*X_k
    Z_prime = coefficient*X_c
    return (_to_fraction(a_scale*(Z*Z_prime).trace()), _to_fraction((Z*Z).trace()/g_scale))


def _label(label):
    if label[0] == 'H':
        return 'H%d' % (label[1]+1)
    return 'E(%s)' % ','.join(str(c) for c in label[1])


def dump_bracket_table(alg):
    """
    A JSON-ready dump of the bracket table: the basis labels and one record per nonzero bracket
    of basis elements (i < j), with integer coefficients.
    """
    brackets = []
    for (i, j), value in sorted(alg.table.items()):
        brackets.append({'x': _label(alg.basis[i]), 'y': _label(alg.basis[j]),
                         'value': dict((_label(alg.basis[k]), int(c))
                                       for k, c in sorted(value.items()))})
    return {'system': alg.system.name,
            'basis': [_label(b) for b in alg.basis],
            'brackets': brackets}
