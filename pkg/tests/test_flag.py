import unittest
try:
    import cratlas
except ImportError:
    import sys
    sys.path.append('..')
    import cratlas
from cratlas import flag


class TestFlag(unittest.TestCase):

    def test_parse_diagram(self):
        """Test the diagram grammar and its errors."""
        d = cratlas.parse_diagram('C2[1]xA1[1]')
        self.assertEqual(d.name, 'C2[1]xA1[1]')
        self.assertEqual(d.black_nodes, (0, 2))
        self.assertEqual(d.white_nodes, (1,))
        self.assertEqual([t.name for t in d.white_types], ['C1'])
        self.assertEqual(cratlas.parse_diagram('D5[1,4]').white_types,
                         cratlas.isotropy(cratlas.parse_diagram('D5[1,4]')).semisimple_type)
        self.assertEqual(cratlas.parse_diagram('A2[1,2]').white_types, ())
        self.assertEqual([c.name for c in d.components()], ['C2[1]', 'A1[1]'])
        self.assertEqual(cratlas.parse_diagram('a2[2, 1]').name, 'A2[1,2]')
        self.assertTrue(cratlas.parse_diagram(d) is d)
        self.assertRaises(cratlas.InvalidPainting, cratlas.parse_diagram, 'A2[]')
        self.assertRaises(cratlas.InvalidPainting, cratlas.parse_diagram, 'A2[3]')
        self.assertRaises(cratlas.InvalidPainting, cratlas.parse_diagram, 'A2')
        self.assertRaises(cratlas.InvalidPainting, cratlas.PaintedDiagram, ['A1', 'A1'], [0])
        self.assertEqual(cratlas.product([cratlas.parse_diagram('A1[1]'),
                                          cratlas.parse_diagram('B2[2]')]).name, 'A1[1]xB2[2]')

    def test_isotropy(self):
        """Test the isotropy of a few flags."""
        k = cratlas.isotropy(cratlas.parse_diagram('B3[1]'))
        self.assertEqual(k.semisimple_type, (cratlas.SimpleLieType('B', 2),))
        self.assertEqual(k.center_dim, 1)
        self.assertEqual(k.symbol(), 'T^1·SO_5')
        # The white node of G2[2] is the short simple root
        k = cratlas.isotropy(cratlas.parse_diagram('G2[2]'))
        self.assertEqual(k.semisimple_type, (cratlas.SimpleLieType('A', 1),))
        self.assertEqual(k.symbol(), 'T^1·SU_2')
        k = cratlas.isotropy(cratlas.parse_diagram('A1[1]'))
        self.assertEqual(k.semisimple_type, ())
        self.assertEqual(k.symbol(), 'T^1')
        k = cratlas.isotropy(cratlas.parse_diagram('C2[1]'))
        self.assertEqual(k.semisimple_type[0].name, 'C1')
        self.assertEqual(k.symbol(), 'T^1·Sp_1')
        k = cratlas.isotropy(cratlas.parse_diagram('D5[1]'))
        self.assertEqual(k.semisimple_type[0].name, 'D4')
        k = cratlas.isotropy(cratlas.parse_diagram('D5[1,4]'))
        self.assertEqual(k.semisimple_type[0].name, 'A3')
        self.assertEqual(k.symbol(), 'T^2·SU_4')
        k = cratlas.isotropy(cratlas.parse_diagram('E6[1,6]'))
        self.assertEqual(k.semisimple_type[0].name, 'D4')
        k = cratlas.isotropy(cratlas.parse_diagram('F4[4]'))
        self.assertEqual(k.semisimple_type[0].name, 'B3')
        self.assertEqual(k.dimension, 22)

    def test_roots(self):
        """Test the complementary roots and the flag dimensions."""
        a1 = cratlas.parse_diagram('A1[1]')
        self.assertEqual(cratlas.complementary_positive_roots(a1), [(1,)])
        a2 = cratlas.parse_diagram('A2[1]')
        self.assertEqual(sorted(cratlas.complementary_positive_roots(a2)), [(1, 0), (1, 1)])
        self.assertEqual(cratlas.isotropy_roots(a2), [(0, 1)])
        b3 = cratlas.parse_diagram('B3[3]')
        self.assertEqual(len(cratlas.complementary_positive_roots(b3)), 6)
        self.assertEqual(cratlas.flag_dimension(b3), 6)
        self.assertEqual(cratlas.flag_dimension(cratlas.parse_diagram('A3[1,2,3]')), 6)

    def test_paintings(self):
        """Test painting counts and orbit representatives."""
        self.assertEqual(len(cratlas.enumerate_paintings('A2')), 3)
        self.assertEqual(len(cratlas.enumerate_paintings('A2', orbit_representatives=True)), 2)
        self.assertEqual(len(cratlas.enumerate_paintings('A1')), 1)
        self.assertEqual(len(cratlas.enumerate_paintings('B2')), 3)
        self.assertEqual(len(cratlas.enumerate_paintings('B2', orbit_representatives=True)), 3)
        self.assertEqual(len(cratlas.enumerate_paintings('D4')), 15)
        self.assertEqual([d.name for d in cratlas.enumerate_paintings('A2')],
                         ['A2[1]', 'A2[2]', 'A2[1,2]'])
        d, perm = cratlas.canonical_painting(cratlas.parse_diagram('A2[2]'))
        self.assertEqual(d.name, 'A2[1]')
        self.assertEqual(perm, (1, 0))
        d, perm = cratlas.canonical_painting(cratlas.parse_diagram('A1[1]xB2[1]'))
        self.assertEqual(d.name, 'A1[1]xB2[1]')

    def test_isomorphisms(self):
        """Test painted-diagram isomorphisms."""
        a = cratlas.parse_diagram('A2[1]')
        b = cratlas.parse_diagram('A2[2]')
        self.assertEqual(cratlas.painted_isomorphisms(a, b), [(1, 0)])
        self.assertIn((0, 1), cratlas.painted_isomorphisms(a, a))
        self.assertEqual(cratlas.painted_isomorphisms(cratlas.parse_diagram('B2[1]'),
                                                      cratlas.parse_diagram('B2[2]')), [])
        self.assertEqual(cratlas.painted_isomorphisms(cratlas.parse_diagram('B2[1]'),
                                                      cratlas.parse_diagram('C2[1]')), [])
        full = cratlas.parse_diagram('A3[1,2,3]')
        self.assertEqual(len(cratlas.painted_automorphisms(full)), 2)
        self.assertEqual(len(cratlas.painted_automorphisms(cratlas.parse_diagram('A3[2]'))), 2)
        self.assertEqual(len(cratlas.painted_automorphisms(cratlas.parse_diagram('A3[1]'))), 1)
        self.assertEqual(len(cratlas.painted_automorphisms(cratlas.parse_diagram('D4[2]'))), 6)
        self.assertEqual(len(cratlas.painted_automorphisms(cratlas.parse_diagram('D4[1]'))), 2)
        product = cratlas.parse_diagram('A1[1]xA1[1]')
        self.assertEqual(cratlas.painted_automorphisms(product), [(0, 1), (1, 0)])

    def test_json(self):
        """Test the JSON form of painted diagrams."""
        d = cratlas.parse_diagram('C2[1]xA1[1]')
        data = flag.PaintedDiagramToJSON(d)
        self.assertEqual(data['black'], [1, 3])
        self.assertEqual(data['name'], 'C2[1]xA1[1]')
        self.assertEqual(flag.PaintedDiagramFromJSON(data), d)
        self.assertRaises(cratlas.InvalidPainting, flag.PaintedDiagramFromJSON, {'black': [1]})


if __name__ == '__main__':
    unittest.main()
