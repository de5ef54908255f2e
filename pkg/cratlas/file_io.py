"""
file_io.py: Catalog input/output.  Catalogs are JSON documents with a schema version; a flat
ASCII table of the same entries can be written through :func:`numpy.savetxt`.
"""
import io
import json
import logging
import warnings

import numpy

from . import cratlas_utils
from .cratlas_utils import CatalogFormatError

logger = logging.getLogger(__name__)

CATALOG_VERSION = "1"


def CatalogToString(catalog):
    """
    Serialize a catalog (or any report) deterministically: sorted keys, two-space indents, UTF-8
    characters kept as they are, and a trailing newline.
    """
    return json.dumps(catalog, sort_keys=True, indent=2, ensure_ascii=False)+'\n'


def WriteCatalog(file_name, catalog):
    """
    Write ``catalog`` to ``file_name`` as UTF-8 JSON.  Two calls with equal catalogs produce
    byte-identical files.

    :param file_name: The output path.
    :param catalog:   A dict with at least ``version`` and ``entries``.
    """
    if 'version' not in catalog or 'entries' not in catalog:
        raise CatalogFormatError('A catalog needs "version" and "entries"')
    with io.open(file_name, 'w', encoding='utf-8', newline='\n') as f:
        f.write(CatalogToString(catalog))
    logger.info('Wrote %d catalog entries to %s', len(catalog['entries']), file_name)


def ReadCatalog(file_name):
    """
    Read a catalog written by :func:`WriteCatalog`.  A catalog with a different schema version is
    still returned, with a warning.

    :param file_name: A path leading to a catalog file.
    :returns:         The catalog dict.
    """
    with io.open(file_name, encoding='utf-8') as f:
        try:
            catalog = json.load(f)
        except ValueError as e:
            raise CatalogFormatError('%s is not valid JSON: %s' % (file_name, e))
    if not isinstance(catalog, dict):
        raise CatalogFormatError('%s does not hold a catalog object' % file_name)
    for key in ('version', 'generator', 'entries'):
        if key not in catalog:
            raise CatalogFormatError('Catalog %s has no "%s" field' % (file_name, key))
    if catalog['version'] != CATALOG_VERSION:
        warnings.warn('Catalog %s has schema version %s; this is cratlas schema version %s' %
                      (file_name, catalog['version'], CATALOG_VERSION))
    if not isinstance(catalog['entries'], list):
        raise CatalogFormatError('Catalog %s: "entries" must be a list' % file_name)
    return catalog


def CatalogToTable(catalog):
    """
    Flatten the entries of a catalog into a formatted NumPy array with one row per entry and the
    fields ``index``, ``kind``, ``name``, ``L``, ``K``, ``dimension``, ``levi`` and ``group``.
    """
    rows = []
    for i, entry in enumerate(catalog['entries']):
        report = entry['report']
        levi = report.get('levi')
        levi = '%d,%d' % tuple(levi) if levi else entry.get('moduli', '-')
        rows.append((i+1, report['kind'], report['name'].replace(' ', '_'), report['L'],
                     report['K'], report['dimension'], levi.replace(' ', '_'),
                     report['maximal_group']['full_group']))
    return cratlas_utils.FormatArray(rows, fields=['index', 'kind', 'name', 'L', 'K',
                                                   'dimension', 'levi', 'group'])

# numpy.savetxt uses a different format specification language than the dtypes, so _format_str
# turns a formatted NumPy array's dtype into something savetxt understands.
_fmt_dict = {'?': 'u', 'B': 'u', 'I': 'u', 'H': 'u', 'L': 'u', 'Q': 'u', 'b': 'd', 'i': 'd',
             'h': 'd', 'l': 'd', 'q': 'd'}


def _format_str(dtype):
    if dtype.names:
        return [_format_str(dtype[i]) for i in range(len(dtype))]
    char = dtype.char
    if char == 'U' or char == 'S':
        width = dtype.str.split(char)[-1]
        return '%-'+str(width)+'s'
    if char not in _fmt_dict:
        raise ValueError('Column type %s cannot be written to an ASCII table' % dtype.str)
    return '%6'+_fmt_dict[char]


def WriteASCIITable(file_name, data_array, fields=None, print_header=False):
    """
    Given a ``file_name`` and a formatted ``data_array``, write the array to the file as an ASCII
    table.  If ``fields`` is given, only those columns are written, in that order.

    Setting ``print_header`` to True gives the file a header line starting with a hash sign and
    listing the fields.  Strings containing spaces break the column layout, which is why
    :func:`CatalogToTable` replaces them with underscores.
    """
    data = numpy.array(data_array)
    if fields:
        if not data.dtype.names:
            raise ValueError('Fields kwarg only usable if data is a formatted NumPy array')
        if len(set(fields)) != len(fields):
            raise RuntimeError('Field description list has duplicate elements')
        data = data[list(fields)]
    if print_header:
        if data.dtype.names:
            numpy.savetxt(file_name, data, fmt=_format_str(data.dtype),
                          header=' '.join(data.dtype.names), encoding='utf-8')
            return
        warnings.warn('No named data type, so requested header cannot be printed.')
    numpy.savetxt(file_name, data, fmt=_format_str(data.dtype), encoding='utf-8')
