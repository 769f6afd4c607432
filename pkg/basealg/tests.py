from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from hypothesis.extra.django import SimpleTestCase as HypothesisSimpleTestCase

from scalars.field import ONE, Scalar, q_pow, s_pow
from scalars.laurent import LaurentPoly

from .algebra import (
    AlgebraSignature, InvalidSignature, SignatureMismatch,
    base_mul, central_project, is_central, substitute_variable,
)
from .automorphisms import InvalidAutomorphism, Scaling, Shift, apply_auto, restrict_to_central
from .presets import (
    down_up_alpha, down_up_base, laurent_line, polynomial_line,
    quantum_torus, quantum_torus_alpha, uqsl2_alpha, usl2_alpha,
)

TORUS = quantum_torus(3)
TORUS_ALPHA = quantum_torus_alpha(3)

coefficients = st.sampled_from([
    ONE, -ONE, Scalar(2), Scalar(Fraction(1, 3)), s_pow(1), q_pow(-1), s_pow(1) + 1,
])


def elements(sig, low=-2, high=2, max_terms=5):
    exponent = st.integers(min_value=low, max_value=high)
    vectors = st.tuples(*[
        exponent if sig.invertible[k] else st.integers(min_value=0, max_value=high)
        for k in range(sig.n)
    ])
    return st.dictionaries(vectors, coefficients, max_size=max_terms).map(
        lambda terms: sig.zero() + sum((sig.monomial(e, c) for e, c in terms.items()), sig.zero())
    )


def rewrite_word(sig, word):
    """Ordena una palabra de letras (índice, ±1) por intercambios adyacentes."""
    letters = list(word)
    factor = ONE
    changed = True
    while changed:
        changed = False
        for pos in range(len(letters) - 1):
            (i, a), (j, b) = letters[pos], letters[pos + 1]
            if i > j:
                factor = factor * sig.q(i, j) ** (a * b)
                letters[pos], letters[pos + 1] = letters[pos + 1], letters[pos]
                changed = True
    exponents = [0] * sig.n
    for index, sign in letters:
        exponents[index] += sign
    return sig.monomial(tuple(exponents), factor)


class SignatureTests(SimpleTestCase):

    def test_central_variable_must_commute(self):
        with self.assertRaises(InvalidSignature):
            AlgebraSignature(
                names=('a', 'b'), invertible=(True, True),
                commutation=((1, 0, q_pow(1)),), central_variable=1,
            )

    def test_zero_commutation_scalar_rejected(self):
        with self.assertRaises(InvalidSignature):
            AlgebraSignature(names=('a', 'b'), invertible=(True, True), commutation=((1, 0, Scalar(0)),))

    def test_non_invertible_variable_rejects_negative_exponent(self):
        with self.assertRaises(ValueError):
            polynomial_line().gen(0, -1)


class BaseMulTests(SimpleTestCase):

    def test_torus_relation(self):
        z1, z2 = TORUS.gen(0), TORUS.gen(1)
        self.assertEqual(base_mul(z2, z1), q_pow(-1) * base_mul(z1, z2))
        self.assertEqual(base_mul(z2, z1), TORUS.monomial((1, 1, 0), q_pow(-1)))

    def test_identity_and_polynomial_square(self):
        t = polynomial_line().gen(0)
        a = t * t + 3 * t + 1
        self.assertEqual(base_mul(polynomial_line().one(), a), a)
        self.assertEqual(base_mul(t, t), polynomial_line().gen(0, 2))

    def test_signature_mismatch(self):
        with self.assertRaises(SignatureMismatch):
            base_mul(polynomial_line().gen(0), laurent_line().gen(0))

    def test_inverse_of_monomial(self):
        a = TORUS.monomial((1, -1, 2), s_pow(3))
        self.assertEqual(base_mul(a, a ** -1), TORUS.one())
        self.assertEqual(base_mul(a ** -1, a), TORUS.one())

    def test_rendering_sorted_by_exponents(self):
        z3 = TORUS.gen(2)
        u = s_pow(2) * z3 ** -1 + q_pow(1) * z3
        self.assertEqual(str(u), 's^2*z3^-1 + s^2*z3')


class AutomorphismTests(SimpleTestCase):

    def test_shift_on_t(self):
        t = polynomial_line().gen(0)
        self.assertEqual(apply_auto(usl2_alpha(), 1, t), t + 2)
        self.assertEqual(apply_auto(usl2_alpha(), 1, t * t), t * t + 4 * t + 4)

    def test_shift_power(self):
        t = polynomial_line().gen(0)
        for m in range(-5, 9):
            self.assertEqual(apply_auto(usl2_alpha(), m, t), t + 2 * m)

    def test_torus_scaling(self):
        z1, z2 = TORUS.gen(0), TORUS.gen(1)
        self.assertEqual(apply_auto(TORUS_ALPHA, 1, z1), q_pow(-1) * z1)
        self.assertEqual(apply_auto(TORUS_ALPHA, 1, z2), z2)
        self.assertEqual(apply_auto(TORUS_ALPHA, 0, z1), z1)

    def test_invalid_specs(self):
        with self.assertRaises(InvalidAutomorphism):
            apply_auto(Shift(Scalar(2)), 1, laurent_line().gen(0))
        with self.assertRaises(InvalidAutomorphism):
            apply_auto(Scaling((ONE,)), 1, TORUS.gen(0))
        with self.assertRaises(InvalidAutomorphism):
            apply_auto(Scaling((Scalar(0),)), 1, laurent_line().gen(0))

    def test_central_action(self):
        action = restrict_to_central(uqsl2_alpha(), laurent_line())
        x = LaurentPoly.monomial(1)
        self.assertEqual(action.apply(1, x - 1), q_pow(2) * x - 1)
        shift = restrict_to_central(usl2_alpha(), polynomial_line())
        self.assertEqual(shift.apply(-1, x + 1), x - 1)


class CentralityTests(SimpleTestCase):

    def test_torus_centre(self):
        self.assertTrue(is_central(TORUS.gen(2)))
        self.assertFalse(is_central(TORUS.gen(0)))
        self.assertTrue(is_central(polynomial_line().gen(0) * 5 + 1))

    def test_balanced_monomial_is_central(self):
        # z2 z1 = q^{-1} z1 z2, pero z2^2 no conmuta con z1
        self.assertFalse(is_central(TORUS.gen(1, 2)))
        self.assertTrue(is_central(TORUS.gen(2, -3)))

    def test_central_project(self):
        z3 = TORUS.gen(2)
        u = q_pow(1) * z3 ** -1 + q_pow(1) * z3
        projected = central_project(u)
        self.assertEqual(projected, LaurentPoly.from_terms({-1: q_pow(1), 1: q_pow(1)}))
        self.assertIsNone(central_project(TORUS.gen(0)))
        self.assertEqual(central_project(TORUS.scalar(5)), LaurentPoly.constant(5))
        self.assertEqual(TORUS.from_central(projected), u)

    def test_substitution(self):
        sig = down_up_base()
        c, k = sig.gen(0), sig.gen(1)
        reduced = sig.drop_variable(0)
        value = reduced.gen(0, -2) * q_pow(-1)
        image = substitute_variable(c * k + k ** -1, 0, value)
        self.assertEqual(image, reduced.gen(0, -1) * (q_pow(-1) + 1))
        self.assertEqual(reduced.central_variable, 0)


class BaseAlgebraPropertyTests(HypothesisSimpleTestCase):

    @settings(max_examples=500, deadline=None)
    @given(elements(TORUS), elements(TORUS), elements(TORUS))
    def test_associativity_and_distributivity(self, a, b, c):
        self.assertEqual(base_mul(base_mul(a, b), c), base_mul(a, base_mul(b, c)))
        self.assertEqual(base_mul(a, b + c), base_mul(a, b) + base_mul(a, c))

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=7),
           st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=7))
    def test_swap_rewriting_agrees(self, left, right):
        product = base_mul(rewrite_word(TORUS, left), rewrite_word(TORUS, right))
        self.assertEqual(product, rewrite_word(TORUS, left + right))

    @settings(max_examples=200, deadline=None)
    @given(elements(TORUS), elements(TORUS), st.integers(min_value=-3, max_value=3))
    def test_alpha_is_automorphism(self, a, b, k):
        self.assertEqual(
            apply_auto(TORUS_ALPHA, k, base_mul(a, b)),
            base_mul(apply_auto(TORUS_ALPHA, k, a), apply_auto(TORUS_ALPHA, k, b)),
        )
        self.assertEqual(apply_auto(TORUS_ALPHA, -k, apply_auto(TORUS_ALPHA, k, a)), a)

    @settings(max_examples=100, deadline=None)
    @given(elements(down_up_base()), elements(down_up_base()))
    def test_down_up_alpha_is_automorphism(self, a, b):
        alpha = down_up_alpha()
        self.assertEqual(apply_auto(alpha, 1, base_mul(a, b)), base_mul(apply_auto(alpha, 1, a), apply_auto(alpha, 1, b)))

    @settings(max_examples=100, deadline=None)
    @given(elements(polynomial_line(), high=3), elements(polynomial_line(), high=3))
    def test_shift_is_automorphism(self, a, b):
        alpha = usl2_alpha()
        self.assertEqual(apply_auto(alpha, 2, base_mul(a, b)), base_mul(apply_auto(alpha, 2, a), apply_auto(alpha, 2, b)))
        self.assertEqual(apply_auto(alpha, -2, apply_auto(alpha, 2, a)), a)
