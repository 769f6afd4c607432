from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import SimpleTestCase as HypothesisSimpleTestCase
from sympy.polys.rings import ring as poly_ring

from ambiskew.identities import v_power
from basealg.algebra import base_mul, central_project
from basealg.automorphisms import restrict_to_central
from basealg.presets import laurent_line, polynomial_line, quantum_torus, uqsl2_alpha, usl2_alpha
from scalars.field import FIELD, ONE, Scalar, q_pow, s_pow
from scalars.laurent import LaurentPoly
from spectra.families import ExampleFamily, make_example

from .ideals import (
    CentralIdeal, MixedSubrings, NotCentralUnivariate, UndecidableDegree,
    apply_auto_ideal, contained, contains, ideal_eq, ideal_intersect, ideal_product,
    ideal_sum, is_maximal, is_unit_ideal,
)
from .residues import DegenerateElimination, DegenerateModulus, residue_minpoly, resultant

T = LaurentPoly.monomial(1)
GAP = q_pow(1) - q_pow(-1)


def poly_ideal(f):
    return CentralIdeal.of(f, laurent=False)


def laurent_ideal(f):
    return CentralIdeal.of(f, laurent=True)


class IdealArithmeticTests(SimpleTestCase):

    def test_distinct_maximal_ideals_are_comaximal(self):
        self.assertTrue(is_unit_ideal(ideal_sum(poly_ideal(T - 1), poly_ideal(T - 2))))

    def test_intersection_is_lcm(self):
        meet = ideal_intersect(poly_ideal(T - 1), poly_ideal(T - 2))
        self.assertEqual(meet, poly_ideal((T - 1) * (T - 2)))

    def test_product_equals_intersection_for_coprime(self):
        left = ideal_product(poly_ideal(T + 1), poly_ideal(T - 1))
        right = ideal_intersect(poly_ideal(T + 1), poly_ideal(T - 1))
        self.assertTrue(ideal_eq(left, right))

    def test_laurent_normalization(self):
        ideal = laurent_ideal(LaurentPoly.from_terms({-1: Scalar(3), 1: Scalar(-3) * q_pow(2)}))
        self.assertEqual(ideal.generator, T * T - q_pow(-2))
        self.assertTrue(is_unit_ideal(laurent_ideal(T * 5)))
        self.assertFalse(is_unit_ideal(poly_ideal(T * 5)))

    def test_zero_ideal(self):
        zero = CentralIdeal.zero(False)
        self.assertTrue(zero.is_zero)
        self.assertEqual(ideal_sum(zero, poly_ideal(T - 1)), poly_ideal(T - 1))
        self.assertTrue(ideal_intersect(zero, poly_ideal(T)).is_zero)
        self.assertFalse(contains(zero, T))
        self.assertTrue(contains(zero, LaurentPoly()))

    def test_mixed_subrings(self):
        with self.assertRaises(MixedSubrings):
            ideal_sum(poly_ideal(T), laurent_ideal(T - 1))

    def test_serialization(self):
        self.assertEqual(poly_ideal(T * 2 + 2).to_dict('t'), {'generator': 't + 1', 'laurent': False})


class MembershipTests(SimpleTestCase):

    def test_quadratic_in_linear(self):
        for m in range(1, 5):
            ideal = laurent_ideal(T - q_pow(1 - m))
            self.assertTrue(contains(ideal, T * T - q_pow(2 - 2 * m)))

    def test_one_not_in_proper_ideal(self):
        self.assertFalse(contains(poly_ideal(T - 1), LaurentPoly.constant(1)))

    def test_torus_v_power_ideal(self):
        for p in (1, 3, 5):
            ring, _ = make_example(ExampleFamily.qtorus(p))
            for m in range(1, 5):
                ideal = laurent_ideal(v_power(ring, m))
                target = T * T - q_pow((p + 2 * m - 3) // 2)
                self.assertTrue(contains(ideal, target))
                self.assertEqual(ideal, laurent_ideal(target))

    def test_contained(self):
        self.assertTrue(contained(poly_ideal(T * T - 1), poly_ideal(T + 1)))
        self.assertFalse(contained(poly_ideal(T + 1), poly_ideal(T * T - 1)))

    def test_rejects_non_central_elements(self):
        torus = quantum_torus(3)
        with self.assertRaises(NotCentralUnivariate):
            contains(laurent_ideal(T - 1), torus.gen(0))
        with self.assertRaises(NotCentralUnivariate):
            contains(poly_ideal(T - 1), LaurentPoly.monomial(-1))


class MaximalityTests(SimpleTestCase):

    def test_linear_is_maximal(self):
        self.assertTrue(is_maximal(poly_ideal(T + 1)))

    def test_split_quadratic(self):
        for m in range(1, 4):
            self.assertFalse(is_maximal(laurent_ideal(T * T - q_pow(2 - 2 * m))))

    def test_irreducible_quadratic(self):
        self.assertTrue(is_maximal(laurent_ideal(T * T - s_pow(1))))
        self.assertTrue(is_maximal(poly_ideal(T * T + 1)))

    def test_trivial_ideals(self):
        self.assertFalse(is_maximal(CentralIdeal.zero(True)))
        self.assertFalse(is_maximal(CentralIdeal.unit(True)))

    def test_cubic_is_undecidable(self):
        with self.assertRaises(UndecidableDegree):
            is_maximal(poly_ideal(T ** 3 - 2))


class AutomorphismOnIdealsTests(SimpleTestCase):

    def test_shift(self):
        action = restrict_to_central(usl2_alpha(), polynomial_line())
        self.assertEqual(apply_auto_ideal(action, -1, poly_ideal(T + 1)), poly_ideal(T - 1))

    def test_scaling(self):
        action = restrict_to_central(uqsl2_alpha(), laurent_line())
        mu = s_pow(3) + 1
        self.assertEqual(apply_auto_ideal(action, 1, laurent_ideal(T - mu)), laurent_ideal(T - q_pow(-2) * mu))

    def test_identity(self):
        action = restrict_to_central(uqsl2_alpha(), laurent_line())
        ideal = laurent_ideal(T - 3)
        self.assertIs(apply_auto_ideal(action, 0, ideal), ideal)


class ResidueMinpolyTests(SimpleTestCase):

    def test_usl2(self):
        _, u = make_example(ExampleFamily.usl2())
        for m in range(1, 7):
            minpoly = residue_minpoly(T + (m - 1), u, laurent=False)
            self.assertEqual(minpoly, T + Scalar(Fraction(m * m, 4)))

    def test_quantum_torus(self):
        for p in (1, 3, 5):
            ring, u = make_example(ExampleFamily.qtorus(p))
            for m in range(1, 5):
                sigma = q_pow((p + 1) // 2) * (q_pow(-m) + 2 + q_pow(m))
                minpoly = residue_minpoly(v_power(ring, m), u, laurent=True)
                self.assertEqual(minpoly, T * T - sigma)

    def test_uqsl2(self):
        ring, u = make_example(ExampleFamily.uqsl2())
        for m in range(1, 5):
            value = (q_pow(-m) + q_pow(m)) / GAP ** 2
            minpoly = residue_minpoly(v_power(ring, m), u, laurent=True)
            self.assertEqual(minpoly, T * T - value * value)

    def test_minpoly_annihilates(self):
        ring, u = make_example(ExampleFamily.uqsl2())
        for m in range(1, 4):
            g = v_power(ring, m)
            minpoly = residue_minpoly(g, u, laurent=True)
            self.assertTrue(contains(laurent_ideal(g), minpoly.compose(central_project(u))))

    def test_degenerate_modulus(self):
        with self.assertRaises(DegenerateModulus):
            residue_minpoly(LaurentPoly(), T, laurent=False)
        with self.assertRaises(DegenerateModulus):
            residue_minpoly(LaurentPoly.constant(5), T, laurent=False)


class ResultantTests(SimpleTestCase):

    def test_linear_factors(self):
        R, t = poly_ring('t', FIELD)
        a, b = s_pow(2).frac, FIELD.convert(3)
        self.assertEqual(resultant(t - a, t - b, 't'), s_pow(2) - 3)

    def test_common_factor(self):
        R, t = poly_ring('t', FIELD)
        f = t ** 2 - 2
        self.assertTrue(resultant(f, f, 't').is_zero)

    def test_elimination(self):
        R, k, X, Y = poly_ring('k,X,Y', FIELD)
        a, b = (ONE + q_pow(-2)).frac, q_pow(-2).frac
        result = resultant(k * X - a, k ** 2 * Y - b, 'k')
        S, X2, Y2 = poly_ring('X,Y', FIELD)
        expected = X2 ** 2 - Y2 * (a * a / b)
        self.assertEqual(result.monic(), expected.monic())

    def test_constant_inputs(self):
        R, k, X = poly_ring('k,X', FIELD)
        with self.assertRaises(DegenerateElimination):
            resultant(X - 1, X + 1, 'k')


roots = st.sampled_from([ONE, Scalar(-1), Scalar(2), s_pow(1), q_pow(1), Scalar(Fraction(1, 2))])
ideals = st.lists(roots, max_size=3).map(
    lambda rs: poly_ideal(LaurentPoly.from_terms({0: ONE}) if not rs else _product(rs))
)


def _product(rs):
    result = LaurentPoly.constant(1)
    for r in rs:
        result = result * (T - r)
    return result


TORUS = quantum_torus(3)
coefficients = st.sampled_from([ONE, Scalar(2), s_pow(1), Scalar(Fraction(-1, 3))])
torus_elements = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)), coefficients, max_size=4,
).map(lambda terms: sum((TORUS.monomial(e, c) for e, c in terms.items()), TORUS.zero()))


class IdealLatticeTests(HypothesisSimpleTestCase):

    @settings(max_examples=500, deadline=None)
    @given(ideals, ideals, ideals)
    def test_lattice_laws(self, I, J, K):
        self.assertEqual(ideal_sum(I, J), ideal_sum(J, I))
        self.assertEqual(ideal_intersect(I, J), ideal_intersect(J, I))
        self.assertEqual(ideal_sum(ideal_sum(I, J), K), ideal_sum(I, ideal_sum(J, K)))
        self.assertEqual(ideal_intersect(ideal_intersect(I, J), K), ideal_intersect(I, ideal_intersect(J, K)))
        self.assertEqual(ideal_sum(I, I), I)
        self.assertEqual(ideal_intersect(I, I), I)
        self.assertEqual(ideal_product(I, ideal_sum(J, K)), ideal_sum(ideal_product(I, J), ideal_product(I, K)))

    @settings(max_examples=200, deadline=None)
    @given(torus_elements)
    def test_central_reduction_bridge(self, b):
        z3 = TORUS.gen(2)
        g = z3 * z3 - q_pow(1)
        ideal = laurent_ideal(central_project(g))
        projected = central_project(base_mul(g, b))
        if projected is not None:
            self.assertTrue(contains(ideal, projected))
