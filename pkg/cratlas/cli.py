"""
cli.py: The ``CrAtlas.py`` command line: classification reports, catalog enumeration,
equivalence decisions, maximal groups and catalog verification.

Exit codes: 0 for success (and "equivalent"), 1 for "inequivalent" or a catalog that fails
verification, 2 for usage and validation errors.  Validation errors are written to stderr as
``{"error": <class name>, "message": <text>}``.
"""
import argparse
import json
import logging
import multiprocessing
import sys
import warnings
from collections import OrderedDict

from .rootsys import SimpleLieType, build_root_system
from .flag import enumerate_paintings, parse_diagram, isotropy, flag_dimension
from .standard_cr import (StandardCR, make_standard, levi_signature, contact_data,
                          enumerate_standard, equivalent_standard, ParseStandard,
                          StandardCRToJSON, StandardCRFromJSON)
from .nonstandard_cr import (NonStandardCR, recognize, equivalent_nonstandard,
                             same_manifold, dimension, geometric_class, enumerate_table2,
                             ParseNonStandard, NonStandardCRToJSON, NonStandardCRFromJSON,
                             Table2EntryToJSON)
from .maximal_group import maximal_cr_group, cr_class_key, cr_equivalent
from .file_io import (CATALOG_VERSION, CatalogToString, WriteCatalog, ReadCatalog, CatalogToTable,
                      WriteASCIITable)
from .cratlas_utils import (CRAtlasError, InvalidRank, CatalogFormatError, GetNumThreads,
                            ParseIntegerList)

logger = logging.getLogger(__name__)


def Parser():
    """
    Returns the argparse parser for ``CrAtlas.py``.  ``--format`` and ``--verbose`` are accepted
    by every subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['json', 'text'], default='json',
                        help="Output format [default: json]", dest='format')
    common.add_argument('-v', '--verbose', action='store_true',
                        help="Log progress at INFO level", dest='verbose')

    manifold = argparse.ArgumentParser(add_help=False)
    manifold.add_argument('spec', nargs='?',
                          help='A manifold as "<diagram> p=(<ints>)" or "<G>/<L> [t=<re>,<im>]"')
    manifold.add_argument('--diagram', help="Painted diagram, e.g. A2[1,2] or C2[1]xA1[1]",
                          dest='diagram')
    manifold.add_argument('--tuple', help="Integers for the black nodes, e.g. 2,-1 (write "
                                          "--tuple=-1,2 when the first entry is negative)",
                          dest='tuple')
    manifold.add_argument('--group', help="The group G of a non-standard manifold, e.g. Spin7",
                          dest='group')
    manifold.add_argument('--isotropy', help="The isotropy L of a non-standard manifold",
                          dest='isotropy')
    manifold.add_argument('--t', help="The modulus t as <re>,<im> with exact rationals",
                          dest='t')

    p = argparse.ArgumentParser(prog='CrAtlas.py',
                                description='Compact homogeneous CR manifolds of hypersurface '
                                            'type: classification, equivalence and catalogs.')
    sub = p.add_subparsers(dest='command')
    sub.required = True

    classify = sub.add_parser('classify', parents=[common, manifold],
                              help='Full report for one manifold')
    classify.set_defaults(func=cmd_classify)

    maximal = sub.add_parser('maximal-group', parents=[common, manifold],
                             help='Maximal compact group of CR automorphisms')
    maximal.set_defaults(func=cmd_maximal_group)

    enumerate_ = sub.add_parser('enumerate', parents=[common],
                                help='Catalog of all classes up to a rank and tuple bound')
    enumerate_.add_argument('--max-rank', type=int, required=True, dest='max_rank',
                            help='Largest rank of the simple groups scanned')
    enumerate_.add_argument('--tuple-bound', type=int, required=True, dest='tuple_bound',
                            help='Largest |p_i| of the tuples scanned')
    enumerate_.add_argument('--out', dest='out', help='Output file [default: stdout]')
    enumerate_.add_argument('--threads', type=int, dest='threads',
                            help='Worker processes; default is $CR_ATLAS_THREADS, or 1')
    enumerate_.set_defaults(func=cmd_enumerate)

    equivalent = sub.add_parser('equivalent', parents=[common],
                                help='Decide CR equivalence of two manifolds')
    equivalent.add_argument('first', help='First manifold spec')
    equivalent.add_argument('second', help='Second manifold spec')
    equivalent.add_argument('--no-conjugate', action='store_true', dest='no_conjugate',
                            help='Do not identify J with -J')
    equivalent.set_defaults(func=cmd_equivalent)

    catalog = sub.add_parser('catalog', help='Catalog maintenance')
    catalog_sub = catalog.add_subparsers(dest='catalog_command')
    catalog_sub.required = True
    verify = catalog_sub.add_parser('verify', parents=[common],
                                    help='Recompute every report stored in a catalog')
    verify.add_argument('file', help='Catalog file written by "enumerate"')
    verify.set_defaults(func=cmd_catalog_verify)
    return p


def ReadManifold(text):
    """
    Parse a manifold spec: standard ``A2[1,2] p=(2,-1)`` or non-standard ``Spin7/SU3 t=1/2,0``
    (without t the whole family is meant).
    """
    if '/' in text.split(' t=')[0].split(' t ')[0]:
        return ParseNonStandard(text)
    return ParseStandard(text)


def _manifold_from_args(args):
    if args.spec:
        return ReadManifold(args.spec)
    if args.diagram:
        if args.tuple is None:
            raise CRAtlasError('--diagram needs --tuple')
        return make_standard(parse_diagram(args.diagram), ParseIntegerList(args.tuple))
    if args.group:
        if args.isotropy is None:
            raise CRAtlasError('--group needs --isotropy')
        entry = recognize(args.group, args.isotropy)
        if entry is None:
            raise CRAtlasError('%s/%s is not a non-standard homogeneous CR manifold' %
                               (args.group, args.isotropy))
        if args.t is None:
            return entry
        return NonStandardCR(entry, args.t)
    raise CRAtlasError('Give a manifold spec, --diagram/--tuple or --group/--isotropy')


def StandardReport(s):
    """The classification report of a standard CR manifold."""
    group = maximal_cr_group(s)
    return OrderedDict([('kind', 'standard'),
                        ('name', s.name),
                        ('manifold', StandardCRToJSON(s)),
                        ('L', contact_data(s).isotropy_L.symbol()),
                        ('K', isotropy(s.diagram).symbol()),
                        ('levi', list(levi_signature(s))),
                        ('dimension', 2*flag_dimension(s.diagram)+1),
                        ('maximal_group', group.to_json()),
                        ('center_dim', group.center_dim)])


def NonStandardReport(m):
    """The classification report of a non-standard manifold, or of a whole family over t."""
    if isinstance(m, NonStandardCR):
        entry = m.entry
        manifold = NonStandardCRToJSON(m)
    else:
        entry = m
        manifold = Table2EntryToJSON(m)
    group = maximal_cr_group(m)
    report = OrderedDict([('kind', 'non-standard'),
                          ('name', m.name),
                          ('manifold', manifold),
                          ('row', entry.row),
                          ('L', entry.isotropy_L),
                          ('K', entry.K),
                          ('levi', None),
                          ('dimension', dimension(entry)),
                          ('geometry', geometric_class(entry)),
                          ('maximal_group', group.to_json()),
                          ('center_dim', group.center_dim)])
    if not isinstance(m, NonStandardCR):
        report['moduli'] = '|t| in (0,1)'
    if entry.note:
        report['note'] = entry.note
    return report


def Report(m):
    if isinstance(m, StandardCR):
        return StandardReport(m)
    return NonStandardReport(m)


def _text_lines(report):
    keys = ['kind', 'name', 'row', 'L', 'K', 'levi', 'dimension', 'geometry', 'moduli',
            'center_dim', 'note']
    lines = []
    for key in keys:
        if key not in report or report[key] is None:
            continue
        value = report[key]
        if key == 'levi':
            value = '(%d,%d)' % tuple(value)
        lines.append((key, str(value)))
    group = report.get('maximal_group')
    if group:
        lines.append(('maximal_group', group['full_group']))
        if group.get('a_side_isotropy_B'):
            lines.append(('isotropy_B', group['a_side_isotropy_B']))
        for t in group.get('transfer', []):
            lines.append(('transfer', t['description']))
    width = max(len(k) for k, _ in lines)
    return ['%s: %s' % (k.ljust(width), v) for k, v in lines]


def _emit(args, data, lines=None):
    if args.format == 'text' and lines is not None:
        sys.stdout.write('\n'.join(lines)+'\n')
    else:
        sys.stdout.write(CatalogToString(data))


def cmd_classify(args):
    report = Report(_manifold_from_args(args))
    _emit(args, report, _text_lines(report))
    return 0


def cmd_maximal_group(args):
    m = _manifold_from_args(args)
    group = maximal_cr_group(m)
    data = group.to_json()
    data['name'] = m.name
    lines = ['name: %s' % m.name, 'group: %s' % group.full_group,
             'center_dim: %d' % group.center_dim]
    if group.a_side_flag is not None:
        lines.append('a_side_flag: %s' % group.a_side_flag.name)
    if group.a_side_isotropy_B:
        lines.append('isotropy_B: %s' % group.a_side_isotropy_B)
    lines.extend('transfer: %s' % t.description for t in group.transfer)
    _emit(args, data, lines)
    return 0


def _decide(m1, m2, allow_conjugate_J=True):
    """``(verdict, witness)`` for any two manifolds."""
    if isinstance(m1, StandardCR) and isinstance(m2, StandardCR):
        if m1.diagram.system == m2.diagram.system:
            found, witness = equivalent_standard(m1, m2, allow_conjugate_J=allow_conjugate_J)
            if found:
                return True, {'bijection': [i+1 for i in witness.bijection],
                              'conjugate': witness.conjugate}
        if cr_equivalent(m1, m2, allow_conjugate_J=allow_conjugate_J):
            return True, {'maximal_group_class': list(map(str, cr_class_key(m1)[0]))}
        return False, None
    if isinstance(m1, StandardCR) or isinstance(m2, StandardCR):
        return False, {'reason': 'a non-standard manifold is never equivalent to a standard one'}
    families = [not isinstance(m, NonStandardCR) for m in (m1, m2)]
    if all(families):
        return same_manifold(m1, m2), None
    if any(families):
        raise CRAtlasError('Give t for both non-standard manifolds, or for neither')
    if equivalent_nonstandard(m1, m2):
        return True, {'abs_t_squared': str(m1.abs2)}
    return False, None


def cmd_equivalent(args):
    m1 = ReadManifold(args.first)
    m2 = ReadManifold(args.second)
    verdict, witness = _decide(m1, m2, allow_conjugate_J=not args.no_conjugate)
    data = OrderedDict([('first', m1.name), ('second', m2.name),
                        ('verdict', 'equivalent' if verdict else 'inequivalent'),
                        ('witness', witness)])
    lines = ['%s: %s' % (k, v) for k, v in data.items() if v is not None]
    _emit(args, data, lines)
    return 0 if verdict else 1


def catalog_types(max_rank):
    """Every simple type of rank at most ``max_rank``, by rank and then family."""
    types = []
    for rank in range(1, max_rank+1):
        for family in 'ABCDEFG':
            try:
                types.append(SimpleLieType(family, rank))
            except InvalidRank:
                continue
    return types


def _painting_classes(task):
    name, bound = task
    return [(cr_class_key(s), s.name) for s in enumerate_standard(parse_diagram(name), bound)]


def BuildCatalog(max_rank, tuple_bound, num_threads=None):
    """
    Enumerate every standard class over the simple groups of rank at most ``max_rank`` (tuples
    with entries bounded by ``tuple_bound``) and every non-standard family whose group has rank at
    most ``max_rank``.  Standard presentations of one class (Sp_2/Sp_1 and SU_4/SU_3, say) are
    merged into one entry, represented by the first presentation found; so are the two
    presentations of Spin_7/SU_3 = SO_8/SO_6.

    :param max_rank:    Positive integer.
    :param tuple_bound: Positive integer.
    :param num_threads: Worker processes for the scan; see :func:`GetNumThreads`.
                        [default: None]
    :returns:           The catalog dict.  Its bytes do not depend on ``num_threads``.
    """
    for label, value in (('max-rank', max_rank), ('tuple-bound', tuple_bound)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise CRAtlasError('%s must be a positive integer, got %r' % (label, value))
    tasks = []
    for lie_type in catalog_types(max_rank):
        for d in enumerate_paintings(build_root_system([lie_type]), orbit_representatives=True):
            tasks.append((d.name, tuple_bound))
    num_threads = GetNumThreads(num_threads)
    if num_threads > len(tasks):
        warnings.warn('%d worker processes requested for %d paintings' %
                      (num_threads, len(tasks)))
        num_threads = len(tasks)
    logger.info('Scanning %d paintings with %d worker(s)', len(tasks), num_threads)
    if num_threads > 1:
        pool = multiprocessing.Pool(num_threads)
        try:
            results = pool.map(_painting_classes, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        results = [_painting_classes(task) for task in tasks]

    classes = OrderedDict()
    for result in results:
        for key, name in result:
            classes.setdefault(key, []).append(name)
    entries = []
    for key, names in classes.items():
        entries.append(OrderedDict([('kind', 'standard'),
                                    ('presentations', names),
                                    ('report', StandardReport(ParseStandard(names[0])))]))

    families = []
    for entry in enumerate_table2(max_rank):
        for family in families:
            if same_manifold(family[0], entry):
                family[1].append(entry.name)
                break
        else:
            families.append((entry, [entry.name]))
    for entry, names in families:
        entries.append(OrderedDict([('kind', 'non-standard'),
                                    ('presentations', names),
                                    ('report', NonStandardReport(entry))]))
    logger.info('%d standard classes and %d non-standard families', len(classes), len(families))
    return OrderedDict([('version', CATALOG_VERSION),
                        ('generator', OrderedDict([('max_rank', max_rank),
                                                   ('tuple_bound', tuple_bound)])),
                        ('entries', entries)])


def cmd_enumerate(args):
    catalog = BuildCatalog(args.max_rank, args.tuple_bound, num_threads=args.threads)
    if args.format == 'text':
        WriteASCIITable(args.out or sys.stdout, CatalogToTable(catalog), print_header=True)
    elif args.out:
        WriteCatalog(args.out, catalog)
    else:
        sys.stdout.write(CatalogToString(catalog))
    return 0


def ManifoldFromJSON(data):
    """Rebuild the manifold (or non-standard family) stored in a report."""
    if 'diagram' in data:
        return StandardCRFromJSON(data)
    if 'row' in data:
        return NonStandardCRFromJSON(data)
    raise CatalogFormatError('Cannot tell what kind of manifold %s describes' % (data,))


def _plain(data):
    return json.loads(json.dumps(data))


def cmd_catalog_verify(args):
    catalog = ReadCatalog(args.file)
    mismatches = []
    for i, entry in enumerate(catalog['entries']):
        try:
            stored = entry['report']
            m = ManifoldFromJSON(stored['manifold'])
        except (KeyError, TypeError):
            raise CatalogFormatError('Entry %d of %s has no usable report' % (i+1, args.file))
        if _plain(Report(m)) != stored:
            mismatches.append(OrderedDict([('index', i+1), ('name', stored.get('name'))]))
    data = OrderedDict([('file', args.file), ('checked', len(catalog['entries'])),
                        ('mismatches', mismatches)])
    lines = ['checked: %d' % len(catalog['entries'])]
    lines.extend('mismatch: entry %d (%s)' % (m['index'], m['name']) for m in mismatches)
    _emit(args, data, lines)
    return 1 if mismatches else 0


def main(argv=None):
    """Run the command line; returns the exit code."""
    args = Parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (CRAtlasError, IOError) as e:
        sys.stderr.write(json.dumps({'error': type(e).__name__, 'message': str(e)})+'\n')
        return 2
