from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import SimpleTestCase as HypothesisSimpleTestCase

from ambiskew.identities import casimir
from ambiskew.rings import AmbiskewRing, NotCentral
from basealg.presets import laurent_line, uqsl2_alpha
from scalars.field import ONE, Scalar, q_pow, s_pow
from scalars.laurent import LaurentPoly
from spectra.families import ExampleFamily, adu_central_presentation, make_example

from .quotients import DegenerateQuotient, NotRealizable, NotStable, quotient_by_stable_central
from .rings import GwaRing, NotConformal, d_element, e_element, from_ambiskew, gwa_mul, ore_to_gwa, power_identities

ADU_FAMILY = ExampleFamily.adu(1, LaurentPoly.monomial(-1))
FAMILIES = [
    ExampleFamily.usl2(),
    ExampleFamily.uqsl2(),
    ExampleFamily.qtorus(1),
    ExampleFamily.qtorus(3),
    ExampleFamily.qtorus(5),
    ADU_FAMILY,
]


def gwa_of(family, lam=0):
    ring, u = make_example(family)
    return from_ambiskew(ring, u, lam)


class GradedProductTests(SimpleTestCase):

    def setUp(self):
        self.W = gwa_of(ExampleFamily.usl2())
        self.u = self.W.u

    def test_defining_relations(self):
        W = self.W
        self.assertEqual(W.X() * W.Y(), W.coefficient(self.u))
        self.assertEqual(W.Y() * W.X(), W.coefficient(W.alpha_power(1, self.u)))

    def test_x_squared_y_squared(self):
        W = self.W
        expected = self.u * W.alpha_power(-1, self.u)
        self.assertEqual(W.X(2) * W.Y(2), W.coefficient(expected))

    def test_coefficients_move_by_alpha(self):
        W = self.W
        t = W.sig.gen(0)
        self.assertEqual(W.Y() * W.coefficient(t), W.element({1: t + 2}))
        self.assertEqual(W.X() * W.coefficient(t), W.element({-1: t - 2}))

    def test_rendering(self):
        W = self.W
        t = W.sig.gen(0)
        self.assertEqual(str(W.element({2: t, -1: W.sig.one()})), '(t)*Y^2 + (1)*X')


class PowerIdentityTests(SimpleTestCase):

    def test_power_identities_in_all_families(self):
        for family in FAMILIES:
            W = gwa_of(family, 1)
            for m in range(1, 9):
                self.assertTrue(power_identities(W, m), f'{family.label} m={m}')

    def test_d_and_e_elements(self):
        for family in FAMILIES:
            W = gwa_of(family, Fraction(1, 2))
            self.assertEqual(d_element(W, 1), W.alpha_power(1, W.u))
            for i in range(1, 6):
                d_i = d_element(W, i)
                self.assertEqual(e_element(W, i), W.alpha_power(-i, d_i))
                self.assertEqual(gwa_mul(W.Y(i), W.X(i)), W.coefficient(d_i))
                self.assertEqual(gwa_mul(W.X(i), W.Y(i)), W.coefficient(e_element(W, i)))

    def test_rejects_non_positive_index(self):
        W = gwa_of(ExampleFamily.usl2())
        with self.assertRaises(ValueError):
            d_element(W, 0)
        with self.assertRaises(ValueError):
            power_identities(W, 0)


class FromAmbiskewTests(SimpleTestCase):

    def test_usl2_at_zero(self):
        ring, u = make_example(ExampleFamily.usl2())
        W = from_ambiskew(ring, u)
        t = ring.sig.gen(0)
        self.assertEqual(W.u, Scalar(Fraction(-1, 4)) * (t - 1) * (t - 1))

    def test_uqsl2_shifts_u(self):
        ring, u = make_example(ExampleFamily.uqsl2())
        lam = s_pow(3)
        self.assertEqual(from_ambiskew(ring, u, lam).u, u + lam)

    def test_rejects_non_unit_rho(self):
        sig = laurent_line()
        t = sig.gen(0)
        rho = s_pow(1)
        ring = AmbiskewRing(sig, uqsl2_alpha(), t - q_pow(1) * rho * t, rho)
        with self.assertRaises(NotConformal):
            from_ambiskew(ring, t)

    def test_rejects_non_splitting(self):
        ring, _ = make_example(ExampleFamily.usl2())
        with self.assertRaises(NotConformal):
            from_ambiskew(ring, ring.sig.gen(0))

    def test_casimir_translate_maps_to_zero(self):
        for family in FAMILIES:
            ring, u = make_example(family)
            lam = Scalar(7)
            W = from_ambiskew(ring, u, lam)
            z = casimir(ring, u) - ring.one() * lam
            self.assertTrue(ore_to_gwa(W, z).is_zero, family.label)


class StableQuotientTests(SimpleTestCase):

    def setUp(self):
        self.W = gwa_of(ADU_FAMILY)
        self.c, self.k = self.W.sig.gen(0), self.W.sig.gen(1)

    def test_substitution_of_constant(self):
        gamma = s_pow(1) + 1
        quotient = quotient_by_stable_central(self.W, self.c - gamma)
        reduced = quotient.ring
        k = reduced.sig.gen(0)
        self.assertEqual(reduced.sig.names, ('k',))
        self.assertEqual(reduced.u, gamma * k + k ** -1)
        self.assertEqual(reduced.alpha.factors, (q_pow(2),))
        self.assertTrue(power_identities(reduced, 3))

    def test_moving_ideal_is_not_stable(self):
        # c - q^{-2} k^{-2} es el c̄ de m = 1 y α lo mueve
        with self.assertRaises(NotStable):
            quotient_by_stable_central(self.W, self.c - q_pow(-2) * self.k ** -2)

    def test_quadratic_in_t_is_not_stable(self):
        W = gwa_of(ExampleFamily.uqsl2())
        t = W.sig.gen(0)
        with self.assertRaises(NotStable):
            quotient_by_stable_central(W, t * t - q_pow(0))

    def test_degenerate_generators(self):
        with self.assertRaises(DegenerateQuotient):
            quotient_by_stable_central(self.W, self.W.sig.one())
        with self.assertRaises(DegenerateQuotient):
            quotient_by_stable_central(self.W, self.k)

    def test_not_realizable(self):
        with self.assertRaises(NotRealizable):
            quotient_by_stable_central(self.W, self.c * self.c - 1)

    def test_non_central_generator(self):
        W = gwa_of(ExampleFamily.qtorus(3))
        with self.assertRaises(NotCentral):
            quotient_by_stable_central(W, W.sig.gen(0) - 1)

    def test_central_presentation_recovers_translate(self):
        B = adu_central_presentation(ADU_FAMILY)
        z = B.sig.gen(2)
        lam = Scalar(3)
        quotient = quotient_by_stable_central(B, z - lam)
        c, k = quotient.ring.sig.gen(0), quotient.ring.sig.gen(1)
        self.assertEqual(quotient.ring.u, c * k + k ** -1 + lam)


USL2_W = gwa_of(ExampleFamily.usl2(), Fraction(9, 4))
TORUS_W = gwa_of(ExampleFamily.qtorus(3), 1)
ADU_W = gwa_of(ADU_FAMILY)
ADU_QUOTIENT = quotient_by_stable_central(ADU_W, ADU_W.sig.gen(0) - 2)
USL2_RING, USL2_U = make_example(ExampleFamily.usl2())

numbers = st.sampled_from([1, -1, 2, Fraction(1, 3)])


def base_elements(sig, max_terms=2):
    exponent = st.integers(min_value=-1, max_value=2)
    vectors = st.tuples(*[
        exponent if sig.invertible[k] else st.integers(min_value=0, max_value=2)
        for k in range(sig.n)
    ])
    return st.dictionaries(vectors, numbers, max_size=max_terms).map(
        lambda terms: sum((sig.monomial(e, c) for e, c in terms.items()), sig.zero())
    )


def gwa_elements(ring, max_terms=3):
    return st.dictionaries(st.integers(-2, 2), base_elements(ring.sig), max_size=max_terms).map(ring.element)


def ore_elements(ring, max_terms=3):
    keys = st.tuples(st.integers(0, 2), st.integers(0, 2))
    return st.dictionaries(keys, base_elements(ring.sig), max_size=max_terms).map(ring.element)


class GwaPropertyTests(HypothesisSimpleTestCase):

    @settings(max_examples=500, deadline=None)
    @given(gwa_elements(USL2_W), gwa_elements(USL2_W), gwa_elements(USL2_W))
    def test_associativity(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=200, deadline=None)
    @given(gwa_elements(TORUS_W), gwa_elements(TORUS_W), gwa_elements(TORUS_W))
    def test_associativity_torus(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=500, deadline=None)
    @given(st.integers(-3, 3), base_elements(TORUS_W.sig), st.integers(-3, 3), base_elements(TORUS_W.sig))
    def test_grading(self, d1, a, d2, b):
        product = TORUS_W.element({d1: a}) * TORUS_W.element({d2: b})
        self.assertTrue(set(product.components) <= {d1 + d2})

    @settings(max_examples=150, deadline=None)
    @given(ore_elements(USL2_RING), ore_elements(USL2_RING))
    def test_projection_from_ambiskew_is_multiplicative(self, a, b):
        self.assertEqual(ore_to_gwa(USL2_W, a * b), ore_to_gwa(USL2_W, a) * ore_to_gwa(USL2_W, b))

    @settings(max_examples=150, deadline=None)
    @given(gwa_elements(ADU_W), gwa_elements(ADU_W))
    def test_quotient_projection_is_multiplicative(self, a, b):
        project = ADU_QUOTIENT.project
        self.assertEqual(project(a * b), project(a) * project(b))
