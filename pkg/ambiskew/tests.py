from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import SimpleTestCase as HypothesisSimpleTestCase

from basealg.automorphisms import apply_auto
from basealg.presets import (
    down_up_alpha, down_up_base, laurent_line, polynomial_line,
    quantum_torus, quantum_torus_alpha, uqsl2_alpha, usl2_alpha,
)
from scalars.field import ONE, Scalar, q_pow, s_pow

from .identities import casimir, check_casimir_normality, check_skewcomm, splitting_check, v_power
from .rings import AmbiskewRing, NotCentral, NotSplitting, RingMismatch

QUARTER = Scalar(Fraction(1, 4))


def usl2():
    sig = polynomial_line()
    t = sig.gen(0)
    u = -QUARTER * (t - 1) * (t - 1)
    return AmbiskewRing(sig, usl2_alpha(), t, ONE, 'U(sl2)'), u


def uqsl2():
    sig = laurent_line()
    t = sig.gen(0)
    q = q_pow(1)
    u = -(t * (ONE / q) + t ** -1 * q) * (ONE / (q - ONE / q) ** 2)
    v = u - apply_auto(uqsl2_alpha(), 1, u)
    return AmbiskewRing(sig, uqsl2_alpha(), v, ONE, 'U_q(sl2)'), u


def qtorus(p):
    sig = quantum_torus(p)
    zp = sig.gen(p - 1)
    u = q_pow((p - 1) // 2) * zp ** -1 + q_pow(1) * zp
    v = (1 - q_pow(1)) * (q_pow((p - 1) // 2) * zp ** -1 - zp)
    return AmbiskewRing(sig, quantum_torus_alpha(p), v, ONE, f'QTorus({p})'), u


def down_up():
    sig = down_up_base()
    c, k = sig.gen(0), sig.gen(1)
    u = c * k + k ** -1
    v = u - apply_auto(down_up_alpha(), 1, u)
    return AmbiskewRing(sig, down_up_alpha(), v, ONE, 'ADU(1,k^-1)'), u


def toy_rho_s():
    """Anillo no conforme a ρ = 1: ρ = s, u = t sobre K[t^±1]."""
    sig = laurent_line()
    t = sig.gen(0)
    rho = s_pow(1)
    v = t - apply_auto(uqsl2_alpha(), 1, t) * rho
    return AmbiskewRing(sig, uqsl2_alpha(), v, rho, 'toy'), t


FAMILIES = [usl2, uqsl2, lambda: qtorus(1), lambda: qtorus(3), lambda: qtorus(5), down_up, toy_rho_s]


class OreProductTests(SimpleTestCase):

    def test_y_times_x(self):
        ring, _ = usl2()
        t = ring.sig.gen(0)
        expected = ring.x() * ring.y() - ring.coefficient(t)
        self.assertEqual(ring.y() * ring.x(), expected)

    def test_y_times_x_general_rho(self):
        ring, _ = toy_rho_s()
        inverse = ONE / ring.rho
        expected = (ring.x() * ring.y() - ring.coefficient(ring.v)) * inverse
        self.assertEqual(ring.y() * ring.x(), expected)

    def test_y_passes_coefficients(self):
        ring, _ = usl2()
        t = ring.sig.gen(0)
        self.assertEqual(ring.y() * ring.coefficient(t), ring.term(0, t + 2, 1))
        self.assertEqual(ring.coefficient(t) * ring.x(), ring.term(1, t + 2, 0))

    def test_equation_one_at_m_two(self):
        ring, _ = usl2()
        left = ring.x() * ring.y(2) - ring.y(2) * ring.x()
        self.assertEqual(left, ring.term(0, v_power(ring, 2), 1))

    def test_ring_mismatch(self):
        ring, _ = usl2()
        other, _ = uqsl2()
        with self.assertRaises(RingMismatch):
            ring.x() * other.y()

    def test_non_central_v_rejected(self):
        sig = quantum_torus(3)
        with self.assertRaises(NotCentral):
            AmbiskewRing(sig, quantum_torus_alpha(3), sig.gen(0), ONE)


class VPowerTests(SimpleTestCase):

    def test_usl2_closed_form(self):
        ring, _ = usl2()
        t = ring.sig.gen(0)
        self.assertTrue(v_power(ring, 0).is_zero)
        for m in range(1, 9):
            self.assertEqual(v_power(ring, m), (t + (m - 1)) * m)

    def test_uqsl2_closed_form(self):
        ring, _ = uqsl2()
        t = ring.sig.gen(0)
        q = q_pow(1)
        for m in range(1, 9):
            expected = (t * (q_pow(2 * m - 1) - q_pow(-1)) + t ** -1 * (q_pow(1 - 2 * m) - q)) * (ONE / (q - q_pow(-1)) ** 2)
            self.assertEqual(v_power(ring, m), expected)

    def test_qtorus_closed_form(self):
        for p in (1, 3, 5):
            ring, _ = qtorus(p)
            zp = ring.sig.gen(p - 1)
            for m in range(1, 9):
                expected = (1 - q_pow(m)) * (q_pow((p - 1) // 2) * zp ** -1 - q_pow(1 - m) * zp)
                self.assertEqual(v_power(ring, m), expected)

    def test_down_up_leading_coefficient(self):
        ring, _ = down_up()
        c, k = ring.sig.gen(0), ring.sig.gen(1)
        for m in range(1, 5):
            expected = (1 - q_pow(2 * m)) * c * k + (1 - q_pow(-2 * m)) * k ** -1
            self.assertEqual(v_power(ring, m), expected)

    def test_recurrence_and_conformal_form(self):
        for build in FAMILIES:
            ring, u = build()
            for m in range(0, 10):
                self.assertEqual(
                    v_power(ring, m + 1),
                    ring.v + ring.alpha_power(1, v_power(ring, m)) * ring.rho,
                )
                self.assertEqual(
                    v_power(ring, m + 1),
                    u - ring.alpha_power(m + 1, u) * ring.rho ** (m + 1),
                )


class SkewCommutationTests(SimpleTestCase):

    def test_identities_hold_in_all_families(self):
        for build in FAMILIES:
            ring, _ = build()
            for m in range(1, 9):
                self.assertTrue(check_skewcomm(ring, m), f'{ring.label} m={m}')

    def test_rejects_non_positive_m(self):
        ring, _ = usl2()
        with self.assertRaises(ValueError):
            check_skewcomm(ring, 0)


class CasimirTests(SimpleTestCase):

    def test_splitting_elements(self):
        ring, u = usl2()
        self.assertTrue(splitting_check(ring, u))
        self.assertFalse(splitting_check(ring, ring.sig.gen(0)))
        torus, u3 = qtorus(3)
        self.assertTrue(splitting_check(torus, u3))

    def test_splitting_requires_central_u(self):
        torus, _ = qtorus(3)
        with self.assertRaises(NotCentral):
            splitting_check(torus, torus.sig.gen(0))

    def test_casimir_of_usl2(self):
        ring, u = usl2()
        t = ring.sig.gen(0)
        z = casimir(ring, u)
        expected = ring.x() * ring.y() + ring.coefficient(QUARTER * (t - 1) * (t - 1))
        self.assertEqual(z, expected)

    def test_casimir_rejects_non_splitting(self):
        ring, _ = usl2()
        with self.assertRaises(NotSplitting):
            casimir(ring, ring.sig.gen(0))

    def test_normality(self):
        for build in FAMILIES:
            ring, u = build()
            self.assertTrue(check_casimir_normality(casimir(ring, u)), ring.label)

    def test_uqsl2_casimir_matches_closed_form(self):
        ring, u = uqsl2()
        t = ring.sig.gen(0)
        q = q_pow(1)
        expected = ring.x() * ring.y() + ring.coefficient((t * (ONE / q) + t ** -1 * q) * (ONE / (q - ONE / q) ** 2))
        self.assertEqual(casimir(ring, u), expected)


USL2, USL2_U = usl2()
TOY, TOY_U = toy_rho_s()


def ore_elements(ring, max_terms=3):
    keys = st.tuples(st.integers(0, 2), st.integers(0, 2))
    coeffs = st.sampled_from([1, -1, 2, Fraction(1, 2)]).flatmap(
        lambda c: st.integers(-1 if ring.sig.invertible[0] else 0, 2).map(lambda e: Scalar(c) * ring.sig.gen(0, e))
    )
    return st.dictionaries(keys, coeffs, max_size=max_terms).map(ring.element)


class OrePropertyTests(HypothesisSimpleTestCase):

    @settings(max_examples=500, deadline=None)
    @given(ore_elements(TOY), ore_elements(TOY), ore_elements(TOY))
    def test_associativity_general_rho(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=150, deadline=None)
    @given(ore_elements(USL2), ore_elements(USL2), ore_elements(USL2))
    def test_associativity_usl2(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @settings(max_examples=150, deadline=None)
    @given(ore_elements(USL2), st.sampled_from([0, 1, Fraction(9, 4), Fraction(-1, 3)]))
    def test_casimir_translates_are_central(self, w, lam):
        z = casimir(USL2, USL2_U) - USL2.one() * Scalar(lam)
        self.assertEqual(z * w, w * z)
