"""
groups.py: A small grammar for symbolic compact groups such as ``T^1·SU_3``, ``Sp_1·Sp_{n-2}`` (once
instantiated) or ``SU_2×SU_2'``, and their comparison at the Lie-algebra level.

Grammar (EBNF)::

    group   := factor (sep factor)*
    sep     := "·" | "." | "*" | "×" | "x"
    factor  := "(" group ")" prime? | simple prime?
    simple  := ("SU" | "SO" | "Sp" | "Spin" | "U") prime? "_"? index
             | ("G" | "F" | "E") prime? "_"? digit
             | "T" ("^" index | "_" index)?
             | "{e}" | "e"
    index   := integer | "{" integer "}"
    prime   := "'" | "′"

Primes only distinguish factors visually and are ignored.  Classical family names are read case
insensitively.
"""
import re

from .rootsys import SimpleLieType
from .cratlas_utils import UnparseableIsotropy, InvalidRank

_scanner = re.compile(r"""
    (?P<space>\s+)
  | (?P<open>\()
  | (?P<close>\))
  | (?P<prime>['′])
  | (?P<sep>[·.*×x])
  | (?P<trivial>\{e\}|e(?![\w])|1(?!\d))
  | (?P<classical>(?i:spin|su|so|sp|u))['′]?_?(?:\{(?P<cidx1>\d+)\}|(?P<cidx2>\d+))
  | (?P<exceptional>[GFE])['′]?_?\{?(?P<eidx>\d)\}?
  | (?P<torus>T)(?:\^\{?(?P<tidx1>\d+)\}?|_\{?(?P<tidx2>\d+)\}?)?
""", re.VERBOSE)

_classical_names = {'su': 'SU', 'so': 'SO', 'sp': 'Sp', 'spin': 'Spin', 'u': 'U'}


def _tokens(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _scanner.match(text, pos)
        if not m or m.end() == pos:
            raise UnparseableIsotropy('Cannot parse group expression "%s" at "%s"' %
                                      (text, text[pos:]))
        pos = m.end()
        kind = m.lastgroup
        if kind in ('space', 'prime'):
            continue
        if m.group('classical'):
            index = m.group('cidx1') or m.group('cidx2')
            tokens.append(('factor', (_classical_names[m.group('classical').lower()], int(index))))
        elif m.group('exceptional'):
            tokens.append(('factor', (m.group('exceptional'), int(m.group('eidx')))))
        elif m.group('torus'):
            index = m.group('tidx1') or m.group('tidx2')
            tokens.append(('torus', int(index) if index else 1))
        elif m.group('trivial'):
            tokens.append(('trivial', None))
        elif m.group('open'):
            tokens.append(('open', None))
        elif m.group('close'):
            tokens.append(('close', None))
        else:
            tokens.append(('sep', None))
    return tokens


def _simple_algebra(kind, n):
    """Torus dimension and simple types of one factor, after the low-rank identifications."""
    if kind == 'SU':
        return (0, [SimpleLieType('A', n-1)] if n >= 2 else [])
    if kind == 'U':
        if n == 0:
            return (0, [])
        return (1, [SimpleLieType('A', n-1)] if n >= 2 else [])
    if kind in ('SO', 'Spin'):
        if n <= 1:
            return (0, [])
        if n == 2:
            return (1, [])
        if n == 3:
            return (0, [SimpleLieType('A', 1)])
        if n == 4:
            return (0, [SimpleLieType('A', 1), SimpleLieType('A', 1)])
        if n == 5:
            return (0, [SimpleLieType('B', 2)])
        if n == 6:
            return (0, [SimpleLieType('A', 3)])
        if n % 2:
            return (0, [SimpleLieType('B', (n-1)//2)])
        return (0, [SimpleLieType('D', n//2)])
    if kind == 'Sp':
        if n == 0:
            return (0, [])
        if n == 1:
            return (0, [SimpleLieType('A', 1)])
        if n == 2:
            return (0, [SimpleLieType('B', 2)])
        return (0, [SimpleLieType('C', n)])
    try:
        return (0, [SimpleLieType(kind, n)])
    except InvalidRank:
        raise UnparseableIsotropy('%s_%d is not an exceptional group' % (kind, n))


class SymbolicGroup(object):
    """
    A compact connected group up to local isomorphism: a torus dimension plus a list of factors
    ``(kind, n)`` with kind one of SU, SO, Spin, Sp, U, G, F, E.
    """

    def __init__(self, torus_dim=0, factors=()):
        self.torus_dim = int(torus_dim)
        self.factors = tuple(factors)
        for kind, n in self.factors:
            _simple_algebra(kind, n)

    def algebra(self):
        """
        ``(torus_dim, simple_types)`` with the identifications SO_2 = U_1 = T^1,
        SO_3 = Sp_1 = SU_2, SO_4 = SU_2·SU_2, SO_5 = Sp_2, SO_6 = SU_4 applied and the simple
        types sorted.
        """
        torus = self.torus_dim
        simple = []
        for kind, n in self.factors:
            t, s = _simple_algebra(kind, n)
            torus += t
            simple.extend(s)
        return (torus, tuple(sorted(simple)))

    def dimension(self):
        torus, simple = self.algebra()
        return torus + sum(t.dimension for t in simple)

    def rank(self):
        torus, simple = self.algebra()
        return torus + sum(t.rank for t in simple)

    def is_isomorphic(self, other):
        return self.algebra() == ParseGroup(other).algebra()

    def __str__(self):
        parts = []
        if self.torus_dim:
            parts.append('T^%d' % self.torus_dim)
        parts.extend('%s_%d' % factor for factor in self.factors)
        return '·'.join(parts) if parts else '{e}'

    def __repr__(self):
        return 'SymbolicGroup(%s)' % str(self)

    def __eq__(self, other):
        return (isinstance(other, SymbolicGroup) and self.torus_dim == other.torus_dim and
                sorted(self.factors) == sorted(other.factors))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.torus_dim, tuple(sorted(self.factors))))


def ParseGroup(text):
    """
    Parse a group expression into a :class:`SymbolicGroup`.  Products, local products and
    parentheses all flatten to a single list of factors.

    :param text: The expression, e.g. ``"T^1·(SU_2×SU_2)·U_3"`` or ``"Spin7"``.
    :returns:    A :class:`SymbolicGroup`.
    """
    if isinstance(text, SymbolicGroup):
        return text
    if not isinstance(text, str):
        raise UnparseableIsotropy('Expected a group expression, got %r' % (text,))
    tokens = _tokens(text)
    if not tokens:
        raise UnparseableIsotropy('Empty group expression')
    torus = 0
    factors = []
    depth = 0
    expect_operand = True
    for kind, value in tokens:
        if kind == 'open':
            if not expect_operand:
                raise UnparseableIsotropy('Missing separator before "(" in "%s"' % text)
            depth += 1
        elif kind == 'close':
            if expect_operand or depth == 0:
                raise UnparseableIsotropy('Unbalanced or empty parentheses in "%s"' % text)
            depth -= 1
        elif kind == 'sep':
            if expect_operand:
                raise UnparseableIsotropy('Dangling separator in "%s"' % text)
            expect_operand = True
        else:
            if not expect_operand:
                raise UnparseableIsotropy('Missing separator in "%s"' % text)
            if kind == 'factor':
                factors.append(value)
            elif kind == 'torus':
                torus += value
            expect_operand = False
    if depth != 0 or expect_operand:
        raise UnparseableIsotropy('Incomplete group expression "%s"' % text)
    return SymbolicGroup(torus, factors)


_trivial_factor = re.compile(r"(?<![A-Za-z])(?:(?:SU|SO)['′]?_\{?[01]\}?|(?:U|Sp)['′]?_\{?0\}?)"
                             r"(?![\d}])")


def TidyGroupName(text):
    """
    Remove trivial factors (SU_0, SU_1, SO_0, SO_1, U_0, Sp_0) from an instantiated expression and
    clean up the separators they leave behind.  An expression that becomes empty is ``{e}``.
    """
    text = _trivial_factor.sub('', text)
    previous = None
    while previous != text:
        previous = text
        text = re.sub(r'([·×])\s*([·×])', r'\1', text)
        text = re.sub(r'\(\s*[·×]', '(', text)
        text = re.sub(r'[·×]\s*\)', ')', text)
        text = re.sub(r'^\s*[·×]|[·×]\s*$', '', text)
        text = re.sub(r'\(\s*\)', '', text)
        text = re.sub(r'\(([^()·×]*)\)', r'\1', text)
    return text.strip() or '{e}'
