import unittest
from fractions import Fraction
try:
    import cratlas
except ImportError:
    import sys
    sys.path.append('..')
    import cratlas
from cratlas import maximal_group


class TestMaximalGroup(unittest.TestCase):

    def test_onishchik_extension(self):
        """Test matching of single factors against the three families."""
        match = maximal_group.onishchik_extension('C2[1]')
        self.assertEqual((match.row, match.ell), ('I', 2))
        self.assertEqual((match.A, match.C, match.G), ('SU_4', 'U_3', 'Sp_2'))
        self.assertEqual(match.a_side.name, 'A3[1]')
        match = maximal_group.onishchik_extension('B3[3]')
        self.assertEqual((match.row, match.ell), ('III', 3))
        self.assertEqual((match.A, match.C, match.G, match.K), ('SO_8', 'U_4', 'SO_7', 'U_3'))
        self.assertEqual(match.a_side.name, 'D4[4]')
        match = maximal_group.onishchik_extension('G2[1]')
        self.assertEqual(match.row, 'II')
        self.assertEqual(match.a_side.name, 'B3[1]')
        self.assertEqual(match.flag_label, 'Gr_2(R^7)')
        self.assertEqual(maximal_group.onishchik_extension('B3[1]'), None)
        self.assertEqual(maximal_group.onishchik_extension('G2[2]'), None)
        self.assertEqual(maximal_group.onishchik_extension('B2[2]'), None)
        self.assertRaises(cratlas.CRAtlasError, maximal_group.onishchik_extension,
                          'A1[1]xA1[1]')

    def test_families_are_exhaustive(self):
        """Over every painting of rank at most 5 only the three families match."""
        matched = set()
        for family in 'ABCDEFG':
            for rank in range(1, 6):
                try:
                    lie_type = cratlas.SimpleLieType(family, rank)
                except cratlas.InvalidRank:
                    continue
                for d in cratlas.enumerate_paintings([lie_type]):
                    if maximal_group.onishchik_extension(d) is not None:
                        matched.add(d.name)
        self.assertEqual(matched, set(['C2[1]', 'C3[1]', 'C4[1]', 'C5[1]', 'B3[3]', 'B4[4]',
                                       'B5[5]', 'G2[1]']))

    def test_embedding_index(self):
        """Test the tabulated embedding indices."""
        self.assertEqual(cratlas.onishchik_pair('I').embedding_index(3), 1)
        self.assertEqual(cratlas.onishchik_pair('II').embedding_index(2), 2)
        self.assertEqual(cratlas.onishchik_pair('III').embedding_index(4), 4)
        self.assertRaises(cratlas.CRAtlasError, cratlas.onishchik_pair, 'IV')
        self.assertRaises(cratlas.CRAtlasError, cratlas.onishchik_pair('II').instance, 3)
        self.assertEqual(len(cratlas.ONISHCHIK_PAIRS), 3)

    def test_maximal_holomorphic_group(self):
        """Test the factorwise replacement."""
        names, flag = cratlas.maximal_holomorphic_group('C2[1]')
        self.assertEqual(names, ['SU_4'])
        self.assertEqual(flag.name, 'A3[1]')
        names, flag = cratlas.maximal_holomorphic_group('C3[1]xB3[3]xA2[1]')
        self.assertEqual(names, ['SU_6', 'SO_8', 'SU_3'])
        self.assertEqual(flag.name, 'A5[1]xD4[4]xA2[1]')
        names, flag = cratlas.maximal_holomorphic_group('B3[1]')
        self.assertEqual(names, ['SO_7'])
        self.assertEqual(flag.name, 'B3[1]')

    def test_contact_element(self):
        """Test the primitive coroot coordinates of Z."""
        coords, c = maximal_group.contact_element(cratlas.make_standard('C2[1]', (1,)))
        self.assertEqual(coords, (1, 1))
        self.assertEqual(c, 2)
        coords, c = maximal_group.contact_element(cratlas.make_standard('B3[3]', (1,)))
        self.assertEqual(coords, (2, 4, 3))
        self.assertEqual(c, 4)
        coords, c = maximal_group.contact_element(cratlas.make_standard('A1[1]', (1,)))
        self.assertEqual(coords, (1,))
        self.assertEqual(c, 2)

    def test_transfer(self):
        """Test the transfer of the contact element to the larger group."""
        transfer = cratlas.transfer_contact_element(cratlas.make_standard('C2[1]', (1,)))
        self.assertEqual(len(transfer), 1)
        t = transfer[0]
        self.assertEqual(t.row, 'I')
        self.assertEqual((t.lam, t.b_g, t.b_a, t.coefficient), (1, -2, -1, 2))
        self.assertEqual(t.b_a*t.coefficient, t.b_g)
        transfer = cratlas.transfer_contact_element(cratlas.make_standard('B3[3]', (1,)))
        t = transfer[0]
        self.assertEqual((t.lam, t.b_g, t.b_a, t.coefficient), (2, -12, -6, 2))
        self.assertEqual(t.to_json()['b_a'], {'num': -6, 'den': 1})
        transfer = cratlas.transfer_contact_element(cratlas.make_standard('C2[1]xA1[1]',
                                                                          (1, -1)))
        self.assertEqual(transfer[0].row, 'I')
        self.assertEqual(transfer[1].row, None)
        self.assertEqual(transfer[1].description, "Z'_2 = Z_2")
        for t in cratlas.transfer_contact_element(cratlas.make_standard('G2[1]', (1,))):
            self.assertEqual(t.b_a*t.coefficient, t.b_g)
            self.assertNotEqual(t.b_a, 0)
            self.assertEqual(Fraction(t.b_a).denominator, 1)
        t = cratlas.transfer_contact_element(cratlas.make_standard('G2[1]', (1,)))[0]
        self.assertEqual((t.lam, t.b_g, t.b_a, t.coefficient), (1, -6, -2, 3))
        # G2[2] is the adjoint variety of G_2, which SO_7 does not act on
        report = cratlas.maximal_cr_group(cratlas.make_standard('G2[2]', (1,)))
        self.assertEqual(report.full_group, 'G_2×T^1')

    def test_a_side_standard(self):
        """The A-side tuple keeps |p| and takes its sign from the transferred contact element."""
        for name, p, a_name in (('C2[1]', (1,), 'A3[1]'), ('C2[1]', (-1,), 'A3[1]'),
                                ('B3[3]', (1,), 'D4[4]'), ('G2[1]', (-1,), 'B3[1]'),
                                ('C2[1]xA1[1]', (2, -1), 'A3[1]xA1[1]'),
                                ('A1[1]xC3[1]', (-1, -2), 'A1[1]xA5[1]')):
            s = cratlas.make_standard(name, p)
            a_side = maximal_group.a_side_standard(s)
            self.assertEqual(a_side.diagram.name, a_name)
            self.assertEqual(a_side.tuple, p)
            self.assertEqual(cratlas.levi_signature(a_side), cratlas.levi_signature(s))
            for t in cratlas.transfer_contact_element(s):
                if t.row is None:
                    continue
                # B_a(Z, Z') = B_g(Z, Z)
                self.assertEqual(t.b_a*t.coefficient, t.b_g)
                entry = a_side.tuple[t.component]
                self.assertEqual(t.coefficient > 0, entry > 0)
        s = cratlas.make_standard('A2[1,2]', (2, -1))
        self.assertEqual(maximal_group.a_side_standard(s), s)

    def test_cr_equivalent(self):
        """Standard manifolds presented through different groups."""
        sp = cratlas.make_standard('C2[1]', (1,))
        su = cratlas.make_standard('A3[1]', (1,))
        self.assertTrue(cratlas.cr_equivalent(sp, su))
        self.assertTrue(cratlas.cr_equivalent(sp, cratlas.make_standard('A3[3]', (1,))))
        self.assertTrue(cratlas.cr_equivalent(cratlas.make_standard('B3[3]', (1,)),
                                              cratlas.make_standard('D4[4]', (1,))))
        self.assertTrue(cratlas.cr_equivalent(cratlas.make_standard('G2[1]', (1,)),
                                              cratlas.make_standard('B3[1]', (-1,))))
        self.assertFalse(cratlas.cr_equivalent(sp, cratlas.make_standard('A3[2]', (1,))))
        self.assertFalse(cratlas.cr_equivalent(sp, cratlas.make_standard('A3[3]', (-1,)),
                                               allow_conjugate_J=False))
        self.assertEqual(maximal_group.a_side_standard(sp), su)

    def test_b2_c2_labels(self):
        """B_2 and C_2 paintings of one manifold share a class."""
        pairs = [(('B2[2]', (1,)), ('C2[1]', (1,))),
                 (('B2[1]', (1,)), ('C2[2]', (1,))),
                 (('B2[1,2]', (1, 2)), ('C2[1,2]', (2, 1)))]
        for b, c in pairs:
            sb = cratlas.make_standard(*b)
            sc = cratlas.make_standard(*c)
            self.assertTrue(cratlas.cr_equivalent(sb, sc))
            self.assertEqual(maximal_group.cr_class_key(sb), maximal_group.cr_class_key(sc))
        self.assertFalse(cratlas.cr_equivalent(cratlas.make_standard('B2[2]', (1,)),
                                               cratlas.make_standard('C2[2]', (1,))))
        self.assertTrue(cratlas.cr_equivalent(cratlas.make_standard('B2[2]', (1,)),
                                              cratlas.make_standard('A3[1]', (1,))))
        report = cratlas.maximal_cr_group(cratlas.make_standard('B2[2]', (1,)))
        self.assertEqual(report.full_group, 'SU_4×T^1')
        self.assertEqual(report.a_side_flag.name, 'A3[1]')

    def test_maximal_cr_group(self):
        """The center of the maximal group tells standard from non-standard manifolds."""
        report = cratlas.maximal_cr_group(cratlas.make_standard('C2[1]', (1,)))
        self.assertEqual(report.full_group, 'SU_4×T^1')
        self.assertEqual(report.center_dim, 1)
        self.assertEqual(report.a_side_flag.name, 'A3[1]')
        self.assertEqual(report.a_side_isotropy_B, 'SU_3')
        self.assertTrue(cratlas.is_standard_by_center(report))
        self.assertEqual(report.to_json()['transfer'][0]['row'], 'I')
        report = cratlas.maximal_cr_group(cratlas.make_standard('A2[1,2]', (2, -1)))
        self.assertEqual(report.full_group, 'SU_3×T^1')
        self.assertEqual(report.transfer_note, "Z'_1 = Z_1")
        report = cratlas.maximal_cr_group(cratlas.NonStandardCR(cratlas.instantiate(2), '1/2'))
        self.assertEqual(report.full_group, 'SO_8')
        self.assertEqual(report.a_side_isotropy_B, 'SO_6')
        self.assertFalse(cratlas.is_standard_by_center(report))
        self.assertEqual(report.to_json()['a_side_flag'], None)
        self.assertEqual(cratlas.maximal_cr_group(cratlas.instantiate(3)).full_group, 'F_4')
        self.assertEqual(cratlas.maximal_cr_group(cratlas.instantiate(12)).full_group, 'E_6')
        self.assertEqual(cratlas.maximal_cr_group(cratlas.instantiate(8, n=4)).a_ss, ['SU_4'])
        for entry in cratlas.enumerate_table2(4):
            self.assertEqual(cratlas.maximal_cr_group(entry).center_dim, 0)
        self.assertRaises(TypeError, cratlas.maximal_cr_group, 'A1[1] p=(1)')
        self.assertRaises(cratlas.CRAtlasError, maximal_group.MaxGroupReport, ['SU_2'], 2)


if __name__ == '__main__':
    unittest.main()
