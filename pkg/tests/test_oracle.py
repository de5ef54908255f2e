import logging
import random
import unittest
from fractions import Fraction
import helper
try:
    import cratlas
except ImportError:
    import sys
    sys.path.append('..')
    import cratlas
from cratlas import oracle


class TestChevalley(unittest.TestCase):

    def test_build(self):
        """Test the basis sizes and the rank limit."""
        self.assertEqual(oracle.build_chevalley('A2').dimension, 8)
        self.assertEqual(oracle.build_chevalley('B3').dimension, 21)
        self.assertEqual(oracle.build_chevalley(['A1', 'A1']).dimension, 6)
        self.assertTrue(oracle.build_chevalley('G2') is oracle.build_chevalley('G2'))
        self.assertRaises(cratlas.UnsupportedRank, oracle.build_chevalley, 'A4')
        self.assertRaises(cratlas.UnsupportedRank, oracle.build_chevalley, ['B2', 'A2'])

    def test_structure_constants(self):
        """Test extraspecial pairs, antisymmetry and the Jacobi identity."""
        a2 = oracle.build_chevalley('A2')
        self.assertEqual(oracle.structure_constant(a2, (1, 0), (0, 1)), 1)
        self.assertEqual(oracle.structure_constant(a2, (0, 1), (1, 0)), -1)
        self.assertEqual(oracle.structure_constant(a2, (1, 0), (1, 1)), 0)
        b2 = oracle.build_chevalley('B2')
        self.assertEqual(oracle.structure_constant(b2, (1, 0), (0, 1)), 1)
        self.assertEqual(oracle.structure_constant(b2, (0, 1), (1, 1)), 2)
        g2 = oracle.build_chevalley('G2')
        for name in ('A1', 'A2', 'B2', 'C2', 'G2', 'A3', 'B3', 'C3'):
            alg = oracle.build_chevalley(name)
            roots = alg.system.all_roots
            for a in roots:
                for b in roots:
                    n = oracle.structure_constant(alg, a, b)
                    self.assertEqual(n, -oracle.structure_constant(alg, b, a))
                    if alg.system.is_root(tuple(x+y for x, y in zip(a, b))):
                        self.assertNotEqual(n, 0)
            self.assertTrue(oracle.check_jacobi(alg, logger=logging.getLogger('test_oracle')))
        self.assertTrue(oracle.check_jacobi(oracle.build_chevalley(['A1', 'B2'])))
        # [E_a, E_-a] is the coroot of a
        self.assertEqual(oracle.bracket(g2, ('E', (3, 2)), ('E', (-3, -2))),
                         {0: Fraction(1), 1: Fraction(2)})
        self.assertEqual(oracle.bracket(g2, ('H', 0), ('E', (1, 0))),
                         {g2.root_vector((1, 0)): Fraction(2)})

    def test_dump(self):
        """Test the JSON dump of a bracket table."""
        table = oracle.dump_bracket_table(oracle.build_chevalley('A1'))
        self.assertEqual(table['basis'], ['H1', 'E(1)', 'E(-1)'])
        self.assertEqual(table['brackets'][0], {'x': 'H1', 'y': 'E(1)', 'value': {'E(1)': 2}})
        self.assertEqual(len(table['brackets']), 3)


class TestOracle(unittest.TestCase):

    def test_centralizer(self):
        """The bracket kernel agrees with the root count on random weights."""
        a2 = oracle.build_chevalley('A2')
        self.assertEqual(oracle.centralizer_dim(a2, (1, -1)), 4)
        self.assertEqual(oracle.centralizer_dim(a2, (1, 1)), 2)
        self.assertEqual(oracle.centralizer_dim(a2, (1, 0)), 4)
        rng = random.Random(20261019)
        names = ['A1', 'A2', 'B2', 'C2', 'G2', 'A3', 'B3', 'C3', ['A1', 'A1'], ['A1', 'A2']]
        for i in range(100):
            alg = oracle.build_chevalley(names[i % len(names)])
            theta = [rng.randint(-2, 2) for _ in range(alg.system.rank)]
            self.assertEqual(oracle.centralizer_dim(alg, theta),
                             oracle.centralizer_dim_formula(alg.system, theta))

    def test_contact_vector(self):
        """Z evaluates like theta on roots: a(Z) = (theta, a)."""
        for name in ('A2', 'B2', 'G2', 'B3'):
            alg = oracle.build_chevalley(name)
            system = alg.system
            theta = cratlas.Weight(system, [i+1 for i in range(system.rank)])
            Z = oracle.contact_vector(alg, theta)
            for r in system.positive_roots:
                expected = sum((c*t*d/2 for c, t, d in zip(r, theta.coords, system.root_lengths)),
                               Fraction(0))
                value = oracle.bracket(alg, Z, ('E', r)).get(alg.root_vector(r), 0)
                self.assertEqual(value, expected)
        self.assertRaises(cratlas.MismatchedSystem, oracle.contact_vector,
                          oracle.build_chevalley('A2'), (1,))

    def test_integrability(self):
        """Painted diagrams give integrable spans; a twisted span does not."""
        for name in ('A1', 'A2', 'B2', 'C2', 'G2', 'A3', 'B3', 'C3', ['A1', 'A2']):
            alg = oracle.build_chevalley(name)
            for d in cratlas.enumerate_paintings(alg.system):
                self.assertTrue(oracle.verify_integrability(alg, d))
                p = [1]*len(d.black)
                self.assertTrue(oracle.verify_standard(alg, d,
                                                       cratlas.make_standard(d, p).theta))
        a2 = oracle.build_chevalley('A2')
        self.assertFalse(oracle.verify_integrability(a2, [(1, 0), (0, 1), (-1, -1)]))
        self.assertTrue(oracle.verify_integrability(a2, [(1, 0), (0, 1), (1, 1)]))
        self.assertTrue(oracle.verify_integrability(a2, [(1, 0), (1, 1)], isotropy=[(0, 1)]))
        self.assertRaises(cratlas.InvalidSpan, oracle.verify_integrability, a2,
                          [(1, 0), (-1, 0)])
        self.assertRaises(cratlas.InvalidSpan, oracle.verify_integrability, a2, [(2, 0)])
        self.assertRaises(cratlas.InvalidSpan, oracle.verify_integrability, a2, [(1, 0)],
                          isotropy=[(0, 1)])

    def test_levi_form(self):
        """The bracket Levi form agrees with the combinatorial signature."""
        a2 = oracle.build_chevalley('A2')
        d = cratlas.parse_diagram('A2[1,2]')
        self.assertEqual(oracle.levi_form_oracle(a2, d, (1, 1)), (3, 0))
        self.assertEqual(oracle.levi_form_oracle(a2, d, (2, -1)), (2, 1))
        self.assertRaises(cratlas.DegenerateForm, oracle.levi_form_oracle, a2, d, (1, -1))
        self.assertRaises(cratlas.CRAtlasError, oracle.levi_form_oracle, a2, d, (1,))
        matrix = oracle.levi_form_matrix(a2, d, (1, 1))
        self.assertEqual(matrix, matrix.T)
        for name, bound in (('A2', 3), ('B2', 3), ('C2', 3), ('G2', 3), ('B3', 2)):
            alg = oracle.build_chevalley(name)
            for d in cratlas.enumerate_paintings(alg.system):
                for s in helper.AdmissibleTuples(d, bound):
                    signature = oracle.levi_form_oracle(alg, d, s.tuple)
                    self.assertEqual(signature, cratlas.levi_signature(s))
                    self.assertEqual(signature.n_minus == 0, all(p > 0 for p in s.tuple))


class TestMatrixRealizations(unittest.TestCase):

    def test_embedding_index(self):
        """The matrix embeddings reproduce the tabulated indices."""
        for row, ell in (('I', 2), ('I', 3), ('II', 2), ('III', 3), ('III', 4)):
            pair = cratlas.onishchik_pair(row)
            self.assertEqual(oracle.matrix_embedding_index(pair, ell), pair.embedding_index(ell))
        self.assertEqual(oracle.matrix_embedding_index('III', 3), 3)
        self.assertEqual(oracle.matrix_embedding_index('II', 2), 2)
        self.assertRaises(cratlas.UnsupportedInstance, oracle.matrix_embedding_index, 'II', 3)
        self.assertRaises(cratlas.UnsupportedInstance, oracle.matrix_embedding_index, 'I', 5)

    def test_transfer(self):
        """B_a(Z, Z') = B_g(Z, Z) on the matrix realizations."""
        for row, ell in (('I', 2), ('I', 3), ('II', 2), ('III', 3), ('III', 4)):
            b_a, b_g = oracle.matrix_transfer_check(row, ell)
            self.assertEqual(b_a, b_g)
            self.assertNotEqual(b_g, 0)
        b_a, b_g = oracle.matrix_transfer_check('I', 2)
        self.assertEqual(b_g, -2)
        b_a, b_g = oracle.matrix_transfer_check('III', 3)
        self.assertEqual(b_g, -12)
        b_a, b_g = oracle.matrix_transfer_check('III', 3, p=-1)
        self.assertEqual(b_a, b_g)
        b_a, b_g = oracle.matrix_transfer_check('II', 2, p=-1)
        self.assertEqual((b_a, b_g), (-6, -6))

    def test_g2_realization(self):
        """The G_2 center element preserves the invariant 3-form; a generic rotation does not."""
        X_k, X_c = oracle._g2_center(2)
        self.assertTrue(oracle._preserves_g2_form(X_k))
        self.assertFalse(oracle._preserves_g2_form(X_c))
        self.assertFalse(oracle._preserves_g2_form(oracle._rotation(7, [(1, 2), (3, 4), (5, 6)],
                                                                    [1, 1, 1])))
        self.assertTrue(oracle._preserves_g2_form(oracle._rotation(7, [(1, 2), (3, 4), (5, 6)],
                                                                   [1, -1, 0])))


if __name__ == '__main__':
    unittest.main()
