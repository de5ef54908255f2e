"""
nonstandard_cr.py: The catalog of non-standard homogeneous CR manifolds G/L (twelve
families of triples (G, L, K) with K the isotropy of the associated flag),
recognition of a pair (G, L), the disc modulus t of each family and the resulting equivalence.
"""
import logging
import re
import warnings
from fractions import Fraction

from .groups import ParseGroup, SymbolicGroup, TidyGroupName
from .flag import parse_diagram
from .cratlas_utils import (InvalidModulus, InvalidParameters, CRAtlasError, ToRational,
                            RationalToJSON, RationalFromJSON, FormatRational)

logger = logging.getLogger(__name__)


class _Row(object):
    """
    One row of the table: the printed templates plus what is needed to instantiate it.
    ``realize(**params)`` gives the (G, L, K) strings and the associated flag diagram name.
    """

    def __init__(self, row, G, L, K, params, constraints, check, realize, rank, geometry):
        self.row = row
        self.G = G
        self.L = L
        self.K = K
        self.params = params
        self.constraints = constraints
        self.check = check
        self.realize = realize
        self.rank = rank
        self.geometry = geometry


def _fixed(G, L, K, flag):
    return lambda: (G, L, K, flag)


def _row5(n):
    return ('SO_%d' % (2*n+1), 'SO_%d' % (2*n-1), 'T^1·SO_%d' % (2*n-1), 'B%d[1]' % n)


def _row6(n):
    flag = 'A3[2]' if n == 3 else 'D%d[1]' % n
    return ('SO_%d' % (2*n), 'SO_%d' % (2*n-2), 'T^1·SO_%d' % (2*n-2), flag)


def _row7(n):
    return ('Sp_%d' % n, 'Sp_1·Sp_%d' % (n-2), 'T^1·Sp_1·Sp_%d' % (n-2), 'C%d[2]' % n)


def _row8(n):
    return ('SU_%d' % n, 'T^1·SU_%d' % (n-2), 'T^1·U_%d' % (n-2), 'A%d[1,%d]' % (n-1, n-1))


def _su_flag(p):
    return 'A1[1]' if p == 2 else 'A%d[1,%d]' % (p-1, p-1)


def _row9(p, q):
    return ('SU_%d×SU′_%d' % (p, q), 'T^1·U_%d·U′_%d' % (p-2, q-2),
            '(T^1·U_%d)·(T^1′·U′_%d)' % (p-2, q-2), '%sx%s' % (_su_flag(p), _su_flag(q)))


def _row10(n):
    return ('SU_%d' % n, 'T^1·(SU_2×SU_2)·SU_%d' % (n-4), 'T^1·(SU_2×SU_2)·U_%d' % (n-4),
            'A%d[2,%d]' % (n-1, n-2))


_ROWS = (
    _Row(1, 'SU_2×SU′_2', 'T^1', 'T^1×T^1′', (), '', lambda: True,
         _fixed('SU_2×SU′_2', 'T^1', 'T^1×T^1′', 'A1[1]xA1[1]'), lambda: 2, 'S(S^3)'),
    _Row(2, 'Spin_7', 'SU_3', 'T^1·SU_3', (), '', lambda: True,
         _fixed('Spin_7', 'SU_3', 'T^1·SU_3', 'B3[3]'), lambda: 3, 'S(S^7)'),
    _Row(3, 'F_4', 'Spin_7', 'T^1·SO_7', (), '', lambda: True,
         _fixed('F_4', 'Spin_7', 'T^1·SO_7', 'F4[4]'), lambda: 4, 'S(OP^2)'),
    _Row(4, 'SU_2', '{e}', 'T^1', (), '', lambda: True,
         _fixed('SU_2', '{e}', 'T^1', 'A1[1]'), lambda: 1, 'S(S^2)'),
    _Row(5, 'SO_{2n+1}', 'SO_{2n−1}', 'T^1·SO_{2n−1}', ('n',), 'n>1', lambda n: n > 1,
         _row5, lambda n: n, 'S(S^{2n})'),
    _Row(6, 'SO_{2n}', 'SO_{2n−2}', 'T^1·SO_{2n−2}', ('n',), 'n>2', lambda n: n > 2,
         _row6, lambda n: n, 'S(S^{2n−1})'),
    _Row(7, 'Sp_n', 'Sp_1·Sp_{n−2}', 'T^1·Sp_1·Sp_{n−2}', ('n',), 'n>=3', lambda n: n >= 3,
         _row7, lambda n: n, 'S(HP^{n−1})'),
    _Row(8, 'SU_n', 'T^1·SU_{n−2}', 'T^1·U_{n−2}', ('n',), 'n>=3', lambda n: n >= 3,
         _row8, lambda n: n-1, 'S(S^2)'),
    _Row(9, 'SU_p×SU′_q', 'T^1·U_{p−2}·U′_{q−2}', '(T^1·U_{p−2})·(T^1′·U′_{q−2})', ('p', 'q'),
         'p+q>4, p>=2, q>=2', lambda p, q: p+q > 4 and p >= 2 and q >= 2,
         _row9, lambda p, q: p+q-2, 'S(S^3)'),
    _Row(10, 'SU_n', 'T^1·(SU_2×SU_2)·SU_{n−4}', 'T^1·(SU_2×SU_2)·U_{n−4}', ('n',), 'n>4',
         lambda n: n > 4, _row10, lambda n: n-1, 'S(S^5)'),
    _Row(11, 'SO_10', 'T^1·SO_6', 'T^2·SO_6', (), '', lambda: True,
         _fixed('SO_10', 'T^1·SO_6', 'T^2·SO_6', 'D5[1,4]'), lambda: 5, 'S(S^7)'),
    _Row(12, 'E_6', 'T^1·SO_8', 'T^2·SO_8', (), '', lambda: True,
         _fixed('E_6', 'T^1·SO_8', 'T^2·SO_8', 'E6[1,6]'), lambda: 6, 'S(S^9)'),
)

# Rows 1-7 are sphere bundles S(N) of rank-one symmetric spaces; the others fibre over a flag
# manifold with the listed typical fibre.
_SPHERE_BUNDLE_ROWS = frozenset(range(1, 8))


class Table2Entry(object):
    """
    A row of the non-standard catalog.  Templates (``params is None``) carry the printed group
    names; instances made by :func:`instantiate` carry concrete names with trivial factors removed.

    :param row:    Row number, 1 to 12.
    :param params: Dict of parameter values (``n``, or ``p`` and ``q``), or None for a template.
                   [default: None]
    """

    def __init__(self, row, params=None):
        if row not in range(1, 13):
            raise InvalidParameters('Table rows are numbered 1 to 12, got %r' % (row,))
        template = _ROWS[row-1]
        self.row = row
        self.parameter_constraints = template.constraints
        self.parameter_names = template.params
        if params is None:
            self.params = None
            self.group_G = template.G
            self.isotropy_L = template.L
            self.K = template.K
            self._flag = None
        else:
            params = dict(params)
            if set(params.keys()) != set(template.params):
                raise InvalidParameters('Row %d takes parameters %s, got %s' %
                                        (row, list(template.params) or 'none',
                                         sorted(params.keys())))
            for key, value in params.items():
                if isinstance(value, bool) or not isinstance(value, int):
                    raise InvalidParameters('Parameter %s must be an integer, got %r' %
                                            (key, value))
            values = [params[k] for k in template.params]
            if not template.check(*values):
                raise InvalidParameters('Row %d requires %s, got %s' %
                                        (row, template.constraints, _format_params(params)))
            G, L, K, flag = template.realize(*values)
            self.params = params
            self.group_G = TidyGroupName(G)
            self.isotropy_L = TidyGroupName(L)
            self.K = TidyGroupName(K)
            self._flag = flag
        # Set by :func:`recognize` when the given subgroup is named differently from L
        self.note = None

    @property
    def is_template(self):
        return self.params is None

    def _require_instance(self):
        if self.params is None:
            raise InvalidParameters('Row %d is a template; instantiate it first' % self.row)

    @property
    def G(self):
        self._require_instance()
        return ParseGroup(self.group_G)

    @property
    def L(self):
        self._require_instance()
        return ParseGroup(self.isotropy_L)

    @property
    def K_group(self):
        self._require_instance()
        return ParseGroup(self.K)

    @property
    def name(self):
        if self.params is None:
            return 'row %d: %s/%s' % (self.row, self.group_G, self.isotropy_L)
        return '%s/%s' % (self.group_G, self.isotropy_L)

    def key(self):
        if self.params is None:
            return (self.row, ())
        params = self.params
        return (self.row, tuple(params[k] for k in self.parameter_names))

    def __eq__(self, other):
        return (isinstance(other, Table2Entry) and self.row == other.row and
                self.params == other.params)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('Table2Entry', self.row, tuple(sorted((self.params or {}).items()))))

    def __repr__(self):
        if self.params is None:
            return 'Table2Entry(%d)' % self.row
        return 'Table2Entry(%d, %s)' % (self.row, _format_params(self.params))


def _format_params(params):
    return ', '.join('%s=%d' % (k, params[k]) for k in sorted(params))


def catalog():
    """The twelve row templates, in order."""
    return [Table2Entry(row) for row in range(1, 13)]


def instantiate(row, **params):
    """
    Instantiate a row at concrete parameter values, e.g. ``instantiate(6, n=4)``.

    :returns: A :class:`Table2Entry`; raises InvalidParameters when the row constraint fails.
    """
    return Table2Entry(row, params)


def dimension(entry):
    """Real dimension of M = G/L (always odd)."""
    return entry.G.dimension() - entry.L.dimension()


def associated_flag(entry):
    """The painted diagram of the flag G/K that M fibres over."""
    entry._require_instance()
    return parse_diagram(entry._flag)


def geometric_class(entry):
    """
    A short geometric description: rows 1 to 7 are sphere bundles S(N) of rank-one symmetric
    spaces N, rows 8 to 12 fibre over a flag manifold with a sphere-bundle fibre.
    """
    label = _ROWS[entry.row-1].geometry
    if entry.params is not None:
        for key, value in entry.params.items():
            label = _substitute(label, key, value)
    if entry.row in _SPHERE_BUNDLE_ROWS:
        return 'sphere bundle %s' % label
    return 'fibration over the flag %s/%s with fibre %s' % (entry.group_G, entry.K, label)


_expression = re.compile(r'\{(\d*)([a-z])([+−-]\d+)?\}')


def _substitute(label, key, value):
    def evaluate(m):
        if m.group(2) != key:
            return m.group(0)
        total = int(m.group(1) or 1)*value
        if m.group(3):
            total += int(m.group(3).replace('−', '-'))
        return str(total)
    return _expression.sub(evaluate, label)


def _candidates(row, bound):
    template = _ROWS[row-1]
    if not template.params:
        yield {}
    elif template.params == ('n',):
        for n in range(1, bound+1):
            if template.check(n):
                yield {'n': n}
    else:
        for p in range(2, bound+1):
            for q in range(p, bound+1):
                if template.check(p, q):
                    yield {'p': p, 'q': q}


def _simple_names(g):
    """Simple factors of ``g`` by name, Spin read as SO and U_n as SU_n."""
    names = []
    for kind, n in g.factors:
        kind = {'Spin': 'SO', 'U': 'SU'}.get(kind, kind)
        if (kind, n) not in (('SU', 1), ('SO', 2)):
            names.append((kind, n))
    return sorted(names)


def recognize(group, isotropy):
    """
    Find the row of the catalog whose (G, L) matches the given pair at the level of Lie algebras
    (so Spin_7 and SO_7 both match a B_3 group, and different embeddings of isomorphic subgroups
    are not told apart).

    :param group:    A group expression or :class:`SymbolicGroup`, e.g. ``"Spin7"``.
    :param isotropy: The subgroup L, e.g. ``"SU3"`` or ``"T^1·SU_2"``.
    :returns:        An instantiated :class:`Table2Entry`, or None.  When the simple factors of
                     the given L carry other names than those of the row (Sp_2/Sp_1 read as
                     SO_5/SO_3, whose quotient is not the sphere C2[1] p=(1)), a warning is issued
                     and the entry gets a ``note``.
    """
    G = ParseGroup(group)
    L = ParseGroup(isotropy)
    target = (G.algebra(), L.algebra())
    bound = G.rank()+3
    for row in range(1, 13):
        for params in _candidates(row, bound):
            entry = Table2Entry(row, params)
            if (entry.G.algebra(), entry.L.algebra()) == target:
                logger.debug('%s/%s recognized as row %d %s', G, L, row, params)
                if _simple_names(L) != _simple_names(entry.L):
                    entry.note = ('%s/%s is read as %s/%s (row %d); other embeddings of %s are '
                                  'not told apart' % (G, L, entry.group_G, entry.isotropy_L,
                                                      row, L))
                    warnings.warn(entry.note)
                return entry
    return None


def _manifold_key(entry):
    entry._require_instance()
    if entry.row == 2:
        return (6, (4,))
    if entry.row == 9:
        return (9, tuple(sorted((entry.params['p'], entry.params['q']))))
    return entry.key()


def same_manifold(e1, e2):
    """
    Whether two instances describe the same homogeneous manifold: the same row and parameters up
    to the swap (p, q) -> (q, p) of row 9, or the pair Spin_7/SU_3 = SO_8/SO_6 (rows 2 and 6 with
    n = 4).
    """
    return _manifold_key(e1) == _manifold_key(e2)


def maximal_semisimple_nonstandard(entry):
    """
    The maximal connected compact semisimple group of CR automorphisms: G itself, except for
    Spin_7/SU_3 where it is SO_8.
    """
    if entry.row == 2:
        return SymbolicGroup(0, [('SO', 8)])
    if entry.params is None:
        raise InvalidParameters('Row %d is a template; instantiate it first' % entry.row)
    return entry.G


def ParseModulus(t):
    """
    Read a complex modulus as a pair of exact rationals.  Accepts ``(re, im)``, a single rational
    (real t), or the text forms ``"1/2,0"`` and ``"1/2"``.
    """
    if isinstance(t, str):
        pieces = [s for s in t.replace(' ', '').split(',') if s]
        if len(pieces) not in (1, 2):
            raise InvalidModulus('Cannot read a complex modulus from "%s"' % t)
        t = pieces
    elif isinstance(t, complex):
        raise TypeError('Floating-point complex %r given where exact rationals are required' % t)
    if isinstance(t, (list, tuple)):
        if len(t) == 1:
            return (ToRational(t[0]), Fraction(0))
        if len(t) != 2:
            raise InvalidModulus('A complex modulus has two parts, got %r' % (t,))
        return (ToRational(t[0]), ToRational(t[1]))
    return (ToRational(t), Fraction(0))


class NonStandardCR(object):
    """
    A non-standard homogeneous CR manifold: an instantiated catalog row plus a point t of the
    punctured unit disc, stored exactly as rational real and imaginary parts.

    :param entry: An instantiated :class:`Table2Entry`.
    :param t:     The modulus, anything :func:`ParseModulus` accepts.
    """

    def __init__(self, entry, t):
        if not isinstance(entry, Table2Entry):
            raise TypeError('NonStandardCR needs a Table2Entry, got %r' % (entry,))
        entry._require_instance()
        re_t, im_t = ParseModulus(t)
        abs2 = re_t*re_t + im_t*im_t
        if abs2 == 0:
            raise InvalidModulus('t = 0 is not a non-standard structure; need 0 < |t| < 1')
        if abs2 >= 1:
            raise InvalidModulus('|t|^2 = %s is not below 1' % FormatRational(abs2))
        self.entry = entry
        self.t = (re_t, im_t)

    @property
    def abs2(self):
        """|t|^2 as a Fraction."""
        return self.t[0]*self.t[0] + self.t[1]*self.t[1]

    @property
    def name(self):
        return '%s t=%s,%s' % (self.entry.name, FormatRational(self.t[0]), FormatRational(self.t[1]))

    def __eq__(self, other):
        return (isinstance(other, NonStandardCR) and self.entry == other.entry and
                self.t == other.t)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.entry, self.t))

    def __repr__(self):
        return 'NonStandardCR(%s)' % self.name

    def __str__(self):
        return self.name


def equivalent_nonstandard(m1, m2):
    """
    Two non-standard manifolds are CR equivalent exactly when they are the same homogeneous
    manifold (see :func:`same_manifold`) and their moduli have equal absolute value.
    """
    return same_manifold(m1.entry, m2.entry) and m1.abs2 == m2.abs2


def enumerate_table2(max_rank):
    """
    Every row instance whose group G has rank at most ``max_rank``, ordered by row and then
    parameters.  Row 9 is listed with p <= q.
    """
    if isinstance(max_rank, bool) or not isinstance(max_rank, int) or max_rank < 1:
        raise CRAtlasError('Maximal rank must be a positive integer, got %r' % (max_rank,))
    result = []
    for row in range(1, 13):
        template = _ROWS[row-1]
        for params in _candidates(row, max_rank+2):
            if template.rank(*[params[k] for k in template.params]) <= max_rank:
                result.append(Table2Entry(row, params))
    return result


_nonstandard_spec = re.compile(r'^\s*(?P<G>[^/]+?)\s*/\s*(?P<L>.+?)'
                               r'(?:\s+t\s*=\s*(?P<t>\S+))?\s*$')


def ParseNonStandard(text):
    """
    Read ``<G>/<L> [t=<re>,<im>]``, e.g. ``Spin7/SU3 t=1/2,0``.

    :returns: A :class:`NonStandardCR` when t is given, otherwise the :class:`Table2Entry` of the
              whole family.  Raises CRAtlasError when the pair is not in the catalog.
    """
    m = _nonstandard_spec.match(text)
    if not m:
        raise CRAtlasError('Cannot read a non-standard CR manifold from "%s"' % text)
    entry = recognize(m.group('G'), m.group('L'))
    if entry is None:
        raise CRAtlasError('%s/%s is not a non-standard homogeneous CR manifold' %
                           (m.group('G'), m.group('L')))
    if m.group('t') is None:
        return entry
    return NonStandardCR(entry, m.group('t'))


def Table2EntryToJSON(entry):
    """
    JSON form of a row instance as a family over the modulus: ``t`` is null and ``moduli`` reads
    ``"|t| in (0,1)"``.
    """
    entry._require_instance()
    return {'row': entry.row,
            'params': dict(entry.params),
            'G': entry.group_G,
            'L': entry.isotropy_L,
            'K': entry.K,
            'dimension': dimension(entry),
            't': None,
            'moduli': '|t| in (0,1)'}


def NonStandardCRToJSON(m):
    """``{"row", "params", "t": {"re": {num, den}, "im": {num, den}}, "G", "L", "K", "name"}``."""
    return {'row': m.entry.row,
            'params': dict(m.entry.params),
            't': {'re': RationalToJSON(m.t[0]), 'im': RationalToJSON(m.t[1])},
            'G': m.entry.group_G,
            'L': m.entry.isotropy_L,
            'K': m.entry.K,
            'name': m.name}


def NonStandardCRFromJSON(data):
    try:
        entry = Table2Entry(int(data['row']), data['params'])
        t = data['t']
    except KeyError as e:
        raise CRAtlasError('Non-standard CR JSON is missing %s' % e)
    if t is None:
        return entry
    return NonStandardCR(entry, (RationalFromJSON(t['re']), RationalFromJSON(t['im'])))
