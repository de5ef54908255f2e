"""
cratlas_utils.py: Various utilities for cr-atlas.  Includes the error hierarchy, exact-rational
helpers for the JSON schemas, record-array formatting and the worker-count lookup.
"""
import os
import warnings
from fractions import Fraction
from math import gcd
from functools import reduce

import numpy


class CRAtlasError(ValueError):
    """
    Base class for every validation error raised by cr-atlas.  It derives from ValueError so code
    that already catches ValueError (as most of the input checks in this package did historically)
    keeps working.
    """
    pass


class InvalidRank(CRAtlasError):
    pass


class MismatchedSystem(CRAtlasError):
    pass


class InvalidPainting(CRAtlasError):
    pass


class ZeroEntry(CRAtlasError):
    pass


class NonPrimitive(CRAtlasError):
    pass


class NonRegular(CRAtlasError):
    pass


class WrongLength(CRAtlasError):
    pass


class UnparseableIsotropy(CRAtlasError):
    pass


class InvalidModulus(CRAtlasError):
    pass


class InvalidParameters(CRAtlasError):
    pass


class InvalidSpan(CRAtlasError):
    pass


class DegenerateForm(CRAtlasError):
    pass


class UnsupportedRank(CRAtlasError):
    pass


class UnsupportedInstance(CRAtlasError):
    pass


class CatalogFormatError(CRAtlasError):
    pass


def ToRational(x):
    """
    Coerce ``x`` into a :class:`fractions.Fraction`.  Accepts ints, Fractions, strings like
    ``"3/4"`` or ``"-2"``, and the JSON form ``{"num": n, "den": d}``.  Floats are refused: nothing
    in cr-atlas is allowed to depend on floating-point rounding.

    :param x: The value to convert.
    :returns: A Fraction.
    """
    if isinstance(x, bool):
        raise TypeError('Cannot interpret a boolean as a rational number')
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, numpy.integer)):
        return Fraction(int(x))
    if isinstance(x, dict):
        if set(x.keys()) != set(['num', 'den']):
            raise CatalogFormatError('Rational must have exactly the keys num and den: %s' % x)
        if int(x['den']) == 0:
            raise CatalogFormatError('Rational with zero denominator: %s' % x)
        return Fraction(int(x['num']), int(x['den']))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise CatalogFormatError('Cannot read a rational number from "%s"' % x)
    if isinstance(x, (float, numpy.floating)):
        raise TypeError('Floating-point value %r given where an exact rational is required' % x)
    raise TypeError('Cannot interpret %r as a rational number' % (x,))


def RationalToJSON(x):
    """
    Return the ``{"num": n, "den": d}`` form of a rational number (always in lowest terms, with a
    positive denominator).
    """
    x = ToRational(x)
    return {'num': x.numerator, 'den': x.denominator}


def RationalFromJSON(d):
    return ToRational(d)


def FormatRational(x):
    """
    Short human-readable form of a rational: ``"3"``, ``"-1/2"``.
    """
    x = ToRational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '%d/%d' % (x.numerator, x.denominator)


def TupleGCD(values):
    """
    Greatest common divisor of the absolute values of a sequence of integers (0 for an empty or
    all-zero sequence).
    """
    return reduce(gcd, [abs(int(v)) for v in values], 0)


def ParseIntegerList(text):
    """
    Turn ``"2,-1"``, ``"(2, -1)"`` or ``"2 -1"`` into a tuple of ints.

    :param text: The string to parse.
    :returns:    A tuple of ints.
    """
    stripped = text.strip().strip('()[]')
    if not stripped:
        return ()
    pieces = stripped.replace(',', ' ').split()
    try:
        return tuple(int(p) for p in pieces)
    except ValueError:
        raise CRAtlasError('Cannot read a list of integers from "%s"' % text)


def GetNumThreads(num_threads=None):
    """
    Decide how many worker processes to use.  An explicit ``num_threads`` wins, then the
    ``CR_ATLAS_THREADS`` environment variable, then 1.

    :param num_threads: Number requested by the caller, or None. [default: None]
    :returns:           A positive integer.
    """
    if num_threads is None:
        env = os.environ.get('CR_ATLAS_THREADS')
        if env is None or not env.strip():
            return 1
        try:
            num_threads = int(env)
        except ValueError:
            warnings.warn('Ignoring CR_ATLAS_THREADS=%r, which is not an integer' % env)
            return 1
    if num_threads < 1:
        raise CRAtlasError('Number of threads must be at least 1, got %d' % num_threads)
    return num_threads


def FormatArray(d, fields=None):
    """
    Turn a list of row tuples (or a regular NumPy array) into a formatted NumPy record array, with
    optional field names.

    Each field gets its dtype from the column contents: integer columns become ``int64`` and
    everything else becomes a fixed-width unicode string wide enough for the longest entry.  This
    is what :func:`cratlas.file_io.WriteASCIITable` expects for the text form of a catalog.

    :param d:      A list of tuples (all the same length) or a NumPy array.
    :param fields: A list of field names with one name per column, or a dict of the form
                   ``{'new_name': column_number}``. [default: None]
    :returns:      A formatted numpy array with one record per row.
    """
    if hasattr(d, 'dtype') and d.dtype.names:
        data = d
    else:
        rows = [tuple(row) for row in d]
        if not rows:
            raise ValueError('Cannot format an empty table')
        ncol = len(rows[0])
        if any(len(row) != ncol for row in rows):
            raise ValueError('All rows must have the same number of columns')
        dtype = []
        for i in range(ncol):
            column = [row[i] for row in rows]
            if all(isinstance(c, (int, numpy.integer)) and not isinstance(c, bool)
                   for c in column):
                dtype.append(('f%i' % i, 'i8'))
            else:
                width = max(max(len(str(c)) for c in column), 1)
                dtype.append(('f%i' % i, 'U%i' % width))
        data = numpy.array([tuple(c if isinstance(c, (int, numpy.integer)) else str(c)
                                  for c in row) for row in rows], dtype=dtype)
    if fields:
        names = list(data.dtype.names)
        if isinstance(fields, dict):
            for key in fields:
                names[fields[key]] = key
        elif len(fields) == len(names):
            names = list(fields)
        else:
            raise RuntimeError('Cannot use given fields: '+str(fields))
        data.dtype.names = names
    return data
