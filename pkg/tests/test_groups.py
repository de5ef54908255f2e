import unittest
try:
    import cratlas
except ImportError:
    import sys
    sys.path.append('..')
    import cratlas
from cratlas.rootsys import SimpleLieType


class TestGroups(unittest.TestCase):

    def test_ParseGroup(self):
        """Test the group grammar."""
        self.assertEqual(cratlas.ParseGroup('Spin7').algebra(), (0, (SimpleLieType('B', 3),)))
        self.assertEqual(cratlas.ParseGroup('T^1·(SU_2×SU_2)·U_3').algebra(),
                         (2, (SimpleLieType('A', 1), SimpleLieType('A', 1),
                              SimpleLieType('A', 2))))
        self.assertEqual(cratlas.ParseGroup("SU_2×SU′_2").algebra(),
                         cratlas.ParseGroup("su2 x su_2'").algebra())
        self.assertEqual(cratlas.ParseGroup('SU_{10}').rank(), 9)
        self.assertEqual(cratlas.ParseGroup('{e}').dimension(), 0)
        self.assertEqual(cratlas.ParseGroup('1'), cratlas.ParseGroup('{e}'))
        self.assertEqual(cratlas.ParseGroup('SU_2×1').algebra(), cratlas.ParseGroup('SU2').algebra())
        self.assertEqual(cratlas.ParseGroup('T^1·e').dimension(), 1)
        self.assertEqual(cratlas.ParseGroup('T^2·SO_8').dimension(), 30)
        self.assertEqual(cratlas.ParseGroup('E_6').dimension(), 78)
        for text in ('SU_3··', '(SU_2', 'SU_2 SU_2', '', 'SU', 'G_3'):
            self.assertRaises(cratlas.UnparseableIsotropy, cratlas.ParseGroup, text)

    def test_identifications(self):
        """Test the low-rank coincidences."""
        self.assertTrue(cratlas.ParseGroup('SO_6').is_isomorphic('SU_4'))
        self.assertTrue(cratlas.ParseGroup('SO_5').is_isomorphic('Sp_2'))
        self.assertTrue(cratlas.ParseGroup('SO_3').is_isomorphic('Sp_1'))
        self.assertTrue(cratlas.ParseGroup('SO_4').is_isomorphic('SU_2×SU_2'))
        self.assertTrue(cratlas.ParseGroup('U_1').is_isomorphic('SO_2'))
        self.assertTrue(cratlas.ParseGroup('Spin_8').is_isomorphic('SO_8'))
        self.assertFalse(cratlas.ParseGroup('SO_7').is_isomorphic('Sp_3'))
        self.assertFalse(cratlas.ParseGroup('U_3').is_isomorphic('SU_3'))

    def test_SymbolicGroup(self):
        """Test the printed form and equality."""
        g = cratlas.SymbolicGroup(1, [('SU', 3)])
        self.assertEqual(str(g), 'T^1·SU_3')
        self.assertEqual(str(cratlas.SymbolicGroup()), '{e}')
        self.assertEqual(cratlas.SymbolicGroup(0, [('SU', 2), ('SO', 5)]),
                         cratlas.SymbolicGroup(0, [('SO', 5), ('SU', 2)]))
        self.assertNotEqual(cratlas.SymbolicGroup(0, [('SO', 6)]),
                            cratlas.SymbolicGroup(0, [('SU', 4)]))
        self.assertRaises(cratlas.UnparseableIsotropy, cratlas.SymbolicGroup, 0, [('E', 5)])

    def test_TidyGroupName(self):
        """Test the removal of trivial factors."""
        self.assertEqual(cratlas.TidyGroupName('T^1·U_0·U′_1'), 'T^1·U′_1')
        self.assertEqual(cratlas.TidyGroupName('T^1·SU_1'), 'T^1')
        self.assertEqual(cratlas.TidyGroupName('Sp_1·Sp_0'), 'Sp_1')
        self.assertEqual(cratlas.TidyGroupName('T^1·(SU_2×SU_2)·SU_1'), 'T^1·(SU_2×SU_2)')
        self.assertEqual(cratlas.TidyGroupName('(T^1·U_0)·(T^1′·U′_0)'), 'T^1·T^1′')
        self.assertEqual(cratlas.TidyGroupName('SU_0'), '{e}')
        self.assertEqual(cratlas.TidyGroupName('SU_10·SO_12'), 'SU_10·SO_12')


if __name__ == '__main__':
    unittest.main()
