import os
import unittest
import warnings
from fractions import Fraction

import numpy
try:
    import cratlas
except ImportError:
    import sys
    sys.path.append('..')
    import cratlas
from cratlas import cratlas_utils


class TestCRAtlasUtils(unittest.TestCase):

    def test_ToRational(self):
        """Test the exact conversions and the refusal of floats."""
        self.assertEqual(cratlas_utils.ToRational(3), Fraction(3))
        self.assertEqual(cratlas_utils.ToRational('-3/4'), Fraction(-3, 4))
        self.assertEqual(cratlas_utils.ToRational({'num': 2, 'den': 6}), Fraction(1, 3))
        self.assertEqual(cratlas_utils.ToRational(numpy.int64(5)), Fraction(5))
        self.assertRaises(TypeError, cratlas_utils.ToRational, 0.5)
        self.assertRaises(TypeError, cratlas_utils.ToRational, True)
        self.assertRaises(cratlas.CatalogFormatError, cratlas_utils.ToRational, 'half')
        self.assertRaises(cratlas.CatalogFormatError, cratlas_utils.ToRational,
                          {'num': 1, 'den': 0})
        self.assertEqual(cratlas_utils.RationalToJSON(Fraction(-4, 6)), {'num': -2, 'den': 3})
        self.assertEqual(cratlas_utils.FormatRational(Fraction(-1, 2)), '-1/2')
        self.assertEqual(cratlas_utils.FormatRational(4), '4')

    def test_tuples(self):
        """Test gcds and integer-list parsing."""
        self.assertEqual(cratlas_utils.TupleGCD((2, -4)), 2)
        self.assertEqual(cratlas_utils.TupleGCD((2, -1)), 1)
        self.assertEqual(cratlas_utils.TupleGCD(()), 0)
        self.assertEqual(cratlas_utils.ParseIntegerList('(2, -1)'), (2, -1))
        self.assertEqual(cratlas_utils.ParseIntegerList('2 -1 3'), (2, -1, 3))
        self.assertEqual(cratlas_utils.ParseIntegerList('()'), ())
        self.assertRaises(cratlas.CRAtlasError, cratlas_utils.ParseIntegerList, '1,a')

    def test_GetNumThreads(self):
        """Test the explicit value, the environment variable and the fallback."""
        old = os.environ.pop('CR_ATLAS_THREADS', None)
        try:
            self.assertEqual(cratlas.GetNumThreads(), 1)
            self.assertEqual(cratlas.GetNumThreads(4), 4)
            os.environ['CR_ATLAS_THREADS'] = '3'
            self.assertEqual(cratlas.GetNumThreads(), 3)
            self.assertEqual(cratlas.GetNumThreads(2), 2)
            os.environ['CR_ATLAS_THREADS'] = 'many'
            with warnings.catch_warnings(record=True) as w:
                warnings.simplefilter('always')
                self.assertEqual(cratlas.GetNumThreads(), 1)
                self.assertEqual(len(w), 1)
            self.assertRaises(cratlas.CRAtlasError, cratlas.GetNumThreads, 0)
        finally:
            os.environ.pop('CR_ATLAS_THREADS', None)
            if old is not None:
                os.environ['CR_ATLAS_THREADS'] = old

    def test_FormatArray(self):
        """Test formatted array routines and behavior."""
        rows = [(1, 'standard', 'A1[1] p=(1)'), (2, 'non-standard', 'SU_2/{e}')]
        result = cratlas.FormatArray(rows, fields=['index', 'kind', 'name'])
        numpy.testing.assert_equal(result.dtype.names, ('index', 'kind', 'name'))
        numpy.testing.assert_equal(result['index'], [1, 2])
        numpy.testing.assert_equal(result['kind'], ['standard', 'non-standard'])
        self.assertEqual(result.dtype['kind'].char, 'U')
        # Renaming by dict keeps the data
        renamed = cratlas.FormatArray(result, fields={'number': 0})
        self.assertEqual(renamed.dtype.names[0], 'number')
        self.assertRaises(RuntimeError, cratlas.FormatArray, rows, fields=['one'])
        self.assertRaises(ValueError, cratlas.FormatArray, [])

    def test_error_hierarchy(self):
        """Every validation error is a CRAtlasError and a ValueError."""
        for error in (cratlas.InvalidRank, cratlas.NonPrimitive, cratlas.NonRegular,
                      cratlas.InvalidModulus, cratlas.UnparseableIsotropy,
                      cratlas.CatalogFormatError, cratlas.UnsupportedRank):
            self.assertTrue(issubclass(error, cratlas.CRAtlasError))
            self.assertTrue(issubclass(error, ValueError))


if __name__ == '__main__':
    unittest.main()
