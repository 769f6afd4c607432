import json
from dataclasses import replace
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, override_settings

from basealg.automorphisms import Scaling
from basealg.presets import polynomial_line
from gwa.rings import GwaRing
from idealkit.ideals import CentralIdeal, ideal_eq, ideal_product, is_maximal, is_unit_ideal
from scalars.field import ONE, Scalar, q_pow, s_pow
from scalars.laurent import LaurentPoly

from .central import CentralView
from .families import ADU, ExampleFamily, family_from_params, make_example
from .goldie import goldie_decomposition
from .jm import NonDistinctTranslates, build_jm, pi_product, verify_jm_closure
from .services import SCHEMA, spectrum_report
from .witnesses import (
    NotExceptional, exceptional_ideal, exceptional_lambdas, find_pm, find_pm_bivariate,
    maximality_scan, uqsl2_mu,
)

T = LaurentPoly.monomial(1)
GAP = q_pow(1) - q_pow(-1)

USL2_FAMILY = ExampleFamily.usl2()
UQSL2_FAMILY = ExampleFamily.uqsl2()
ADU_FAMILY = ExampleFamily.adu(1, LaurentPoly.monomial(-1))


def poly_ideal(f):
    return CentralIdeal.of(f, laurent=False)


def laurent_ideal(f):
    return CentralIdeal.of(f, laurent=True)


def exceptional_table(family, m, index=0):
    lam = exceptional_lambdas(family, m)[index]
    view = CentralView.for_family(family, lam)
    return build_jm(view, exceptional_ideal(family, lam, m), m)


class FamilyTests(SimpleTestCase):

    def test_expected_prime_counts(self):
        self.assertEqual(USL2_FAMILY.d, 1)
        self.assertEqual(UQSL2_FAMILY.d, 2)
        self.assertEqual(ExampleFamily.qtorus(3).d, 2)
        self.assertIsNone(ADU_FAMILY.d)
        self.assertFalse(ADU_FAMILY.is_spectral)

    def test_qtorus_rejects_even_p(self):
        with self.assertRaises(ValidationError) as ctx:
            ExampleFamily.qtorus(4)
        self.assertEqual(ctx.exception.code, 'invalid_p')

    def test_unknown_family(self):
        with self.assertRaises(ValidationError):
            ExampleFamily('sl3')

    def test_family_from_params(self):
        self.assertEqual(family_from_params('qtorus', p='5'), ExampleFamily.qtorus(5))
        family = family_from_params('adu', n='1', f='k^-1')
        self.assertEqual(family.kind, ADU)
        self.assertEqual(family.f, LaurentPoly.monomial(-1))

    def test_family_from_params_errors(self):
        with self.assertRaises(ValidationError) as ctx:
            family_from_params('qtorus', p='x')
        self.assertEqual(ctx.exception.code, 'invalid_p')
        with self.assertRaises(ValidationError) as ctx:
            family_from_params('adu', n='1', f='k + 1')
        self.assertEqual(ctx.exception.code, 'invalid_f')
        with self.assertRaises(ValidationError) as ctx:
            family_from_params('adu', n='1', f='k^')
        self.assertEqual(ctx.exception.code, 'invalid_f')

    def test_usl2_presentation(self):
        ring, u = make_example(USL2_FAMILY)
        t = ring.sig.gen(0)
        self.assertEqual(ring.v, t)
        self.assertEqual(u, Scalar(Fraction(-1, 4)) * (t - 1) * (t - 1))

    def test_central_view(self):
        view = CentralView.for_family(USL2_FAMILY)
        self.assertEqual(view.var, 't')
        self.assertFalse(view.laurent)
        self.assertEqual(view.u_translate(1), (T + 1) * (T + 1) * Scalar(Fraction(-1, 4)))
        self.assertTrue(CentralView.for_family(UQSL2_FAMILY).laurent)


class HeightOneTests(SimpleTestCase):

    def test_usl2_pm_is_linear(self):
        for m in range(1, 6):
            witness = find_pm(USL2_FAMILY, m)
            self.assertEqual(witness.p, T + Fraction(m * m, 4))
            self.assertTrue(ideal_eq(witness.modulus, poly_ideal(T + (m - 1))))

    def test_qtorus_pm(self):
        for p in (1, 3, 5):
            family = ExampleFamily.qtorus(p)
            for m in range(1, 7):
                expected = T * T - q_pow((p + 1) // 2) * (q_pow(-m) + 2 + q_pow(m))
                self.assertEqual(find_pm(family, m).p, expected, f'p={p}, m={m}')

    def test_uqsl2_pm(self):
        for m in range(1, 7):
            expected = T * T - (q_pow(m) + q_pow(-m)) ** 2 / GAP ** 4
            self.assertEqual(find_pm(UQSL2_FAMILY, m).p, expected, f'm={m}')

    def test_pm_certificate_to_dict(self):
        data = find_pm(USL2_FAMILY, 2).to_dict()
        self.assertEqual(data['m'], 2)
        self.assertTrue(data['verified'])
        self.assertEqual(data['modulus'], 't + 1')
        self.assertEqual(find_pm(ExampleFamily.qtorus(5), 1).to_dict()['modulus'], 'z5^2 - s^4')

    def test_adu_has_no_univariate_pm(self):
        with self.assertRaises(ValidationError):
            find_pm(ADU_FAMILY, 1)

    def test_adu_bivariate_pm(self):
        for m in range(1, 4):
            witness = find_pm_bivariate(ADU_FAMILY, m)
            self.assertEqual(witness.c_bar, LaurentPoly.monomial(-2, q_pow(-2 * m)))
            self.assertEqual(witness.u_bar, LaurentPoly.monomial(-1, ONE + q_pow(-2 * m)))
            self.assertEqual(witness.leading_coefficient, ONE - q_pow(2 * m))
            X, Y = witness.p.ring.gens
            expected = (X ** 2 - Y * ((q_pow(m) + q_pow(-m)) ** 2).frac).monic()
            self.assertEqual(witness.p, expected, f'm={m}')
            self.assertEqual(witness.to_dict()['m'], m)
            self.assertNotIn('+ -', witness.to_dict()['p'])

    def test_bivariate_rejects_spectral_family(self):
        with self.assertRaises(ValidationError):
            find_pm_bivariate(USL2_FAMILY, 1)


class ExceptionalLambdaTests(SimpleTestCase):

    def test_closed_forms(self):
        self.assertEqual(exceptional_lambdas(USL2_FAMILY, 3), [Scalar(Fraction(9, 4))])
        value = s_pow(3) + s_pow(1)
        self.assertEqual(exceptional_lambdas(ExampleFamily.qtorus(3), 1), [value, -value])
        self.assertEqual(exceptional_lambdas(ExampleFamily.qtorus(3), 2)[0], s_pow(4) + 1)
        plus, minus = exceptional_lambdas(UQSL2_FAMILY, 2)
        self.assertEqual(plus, (q_pow(-2) + q_pow(2)) / GAP ** 2)
        self.assertEqual(minus, -plus)

    def test_scan_finds_exactly_its_level(self):
        families = (USL2_FAMILY, UQSL2_FAMILY, ExampleFamily.qtorus(3))
        for family in families:
            for m in range(1, 7):
                for lam in exceptional_lambdas(family, m):
                    self.assertEqual(maximality_scan(family, lam, 7), [m], f'{family.label}, m={m}')

    def test_generic_lambdas_are_maximal(self):
        for lam in (0, Fraction(1, 3), 2):
            self.assertEqual(maximality_scan(USL2_FAMILY, lam, 10), [])
        for lam in (0, Fraction(1, 3), 1):
            self.assertEqual(maximality_scan(UQSL2_FAMILY, lam, 10), [])
        self.assertEqual(maximality_scan(ExampleFamily.qtorus(3), 1, 10), [])

    def test_usl2_exceptional_ideal(self):
        for m in range(1, 5):
            lam = exceptional_lambdas(USL2_FAMILY, m)[0]
            M = exceptional_ideal(USL2_FAMILY, lam, m)
            self.assertTrue(ideal_eq(M, poly_ideal(T + (m - 1))))
            self.assertTrue(is_maximal(M))

    def test_uqsl2_exceptional_ideal(self):
        for m in range(1, 4):
            plus, minus = exceptional_lambdas(UQSL2_FAMILY, m)
            self.assertTrue(ideal_eq(exceptional_ideal(UQSL2_FAMILY, plus, m), laurent_ideal(T - q_pow(1 - m))))
            self.assertTrue(ideal_eq(exceptional_ideal(UQSL2_FAMILY, minus, m), laurent_ideal(T + q_pow(1 - m))))
            self.assertEqual(uqsl2_mu(plus, m), q_pow(1 - m))
            self.assertEqual(uqsl2_mu(minus, m), -q_pow(1 - m))

    def test_qtorus_exceptional_ideals_split_modulus(self):
        for p in (1, 3):
            family = ExampleFamily.qtorus(p)
            for m in range(1, 4):
                plus, minus = (exceptional_ideal(family, lam, m) for lam in exceptional_lambdas(family, m))
                self.assertTrue(is_maximal(plus))
                self.assertFalse(ideal_eq(plus, minus))
                modulus = laurent_ideal(T * T - q_pow((p + 2 * m - 3) // 2))
                self.assertTrue(ideal_eq(ideal_product(plus, minus), modulus), f'p={p}, m={m}')

    def test_qtorus_plus_sign_ideal(self):
        family = ExampleFamily.qtorus(3)
        lam = exceptional_lambdas(family, 1)[0]
        self.assertTrue(ideal_eq(exceptional_ideal(family, lam, 1), laurent_ideal(T + s_pow(1))))

    def test_non_exceptional_lambda(self):
        with self.assertRaises(NotExceptional):
            exceptional_ideal(USL2_FAMILY, 0, 1)


class JmTableTests(SimpleTestCase):

    def test_usl2_level_two(self):
        table = exceptional_table(USL2_FAMILY, 2)
        self.assertTrue(ideal_eq(table.component(0), poly_ideal(T * T - 1)))
        self.assertTrue(ideal_eq(table.component(1), poly_ideal(T + 1)))
        self.assertTrue(ideal_eq(table.component(-1), poly_ideal(T - 1)))
        self.assertTrue(is_unit_ideal(table.component(2)))
        self.assertTrue(is_unit_ideal(table.component(-5)))

    def test_usl2_level_one(self):
        table = exceptional_table(USL2_FAMILY, 1)
        self.assertEqual(sorted(table.components), [0])
        self.assertTrue(ideal_eq(table.component(0), poly_ideal(T)))

    def test_pi_product(self):
        translates = exceptional_table(USL2_FAMILY, 2).translates
        self.assertTrue(ideal_eq(pi_product(translates, 0, 1), poly_ideal(T * T - 1)))
        self.assertTrue(ideal_eq(pi_product(translates, 0, 1, skip=0), poly_ideal(T - 1)))
        self.assertTrue(is_unit_ideal(pi_product(translates, 1, 0)))
        self.assertTrue(is_unit_ideal(pi_product(translates, 1, 1, skip=1)))
        with self.assertRaises(IndexError):
            pi_product(translates, 0, 2)
        with self.assertRaises(IndexError):
            pi_product(translates, 0, 1, skip=3)

    def test_components_are_pi_products(self):
        for family in (USL2_FAMILY, UQSL2_FAMILY, ExampleFamily.qtorus(3)):
            for m in range(1, 5):
                table = exceptional_table(family, m)
                for i in range(m):
                    self.assertTrue(ideal_eq(table.component(i), pi_product(table.translates, 0, m - 1 - i)))
                    self.assertTrue(ideal_eq(table.component(-i), pi_product(table.translates, i, m - 1)))

    def test_closure(self):
        for family in (USL2_FAMILY, UQSL2_FAMILY, ExampleFamily.qtorus(3)):
            for m in range(1, 5):
                for index in range(family.d):
                    self.assertTrue(verify_jm_closure(exceptional_table(family, m, index)))

    def test_corrupted_table_is_not_closed(self):
        table = exceptional_table(USL2_FAMILY, 2)
        broken = table.with_component(0, table.view.unit())
        self.assertFalse(verify_jm_closure(broken))

    def test_rejects_non_maximal(self):
        view = CentralView.for_family(USL2_FAMILY, 1)
        with self.assertRaises(ValueError):
            build_jm(view, poly_ideal(T * T - 1), 2)

    def test_rejects_repeated_translates(self):
        sig = polynomial_line()
        t = sig.gen(0)
        view = CentralView.of(GwaRing(sig, Scaling((ONE,)), t * t, 'trivial'))
        with self.assertRaises(NonDistinctTranslates):
            build_jm(view, poly_ideal(T - 1), 2)

    def test_to_dict(self):
        data = exceptional_table(USL2_FAMILY, 2).to_dict()
        self.assertEqual(data['M'], 't + 1')
        self.assertEqual(sorted(data['components']), ['-1', '0', '1'])


class GoldieTests(SimpleTestCase):

    def test_usl2_rank(self):
        for m in range(1, 5):
            report = goldie_decomposition(exceptional_table(USL2_FAMILY, m))
            self.assertEqual(report.failures, [], f'm={m}')
            self.assertEqual(report.rank, m)

    def test_uqsl2_and_qtorus_rank(self):
        families = (UQSL2_FAMILY, ExampleFamily.qtorus(1), ExampleFamily.qtorus(3), ExampleFamily.qtorus(5))
        for family in families:
            for m in range(1, 5):
                for index in (0, 1):
                    report = goldie_decomposition(exceptional_table(family, m, index))
                    self.assertEqual(report.rank, m, f'{family.label}, m={m}, {[w.name for w in report.failures]}')

    def test_corrupted_translates_lose_rank(self):
        table = exceptional_table(USL2_FAMILY, 3)
        swapped = table.translates[1], table.translates[0], table.translates[2]
        report = goldie_decomposition(replace(table, translates=swapped))
        self.assertIsNone(report.rank)
        self.assertTrue(report.failures)

    def test_report_to_dict(self):
        data = goldie_decomposition(exceptional_table(USL2_FAMILY, 2)).to_dict()
        self.assertEqual(data['rank'], 2)
        self.assertEqual(data['failures'], [])
        self.assertGreater(data['witness_count'], 0)


class SpectrumReportTests(SimpleTestCase):

    def test_level_counts(self):
        report = spectrum_report(UQSL2_FAMILY, 2)
        data = report.to_dict()
        self.assertEqual(data['schema'], SCHEMA)
        self.assertEqual([level['d'] for level in data['levels']], [2, 2])
        self.assertEqual(len(data['height_one']['certificates']), 2)
        self.assertEqual(data['levels'][0]['lambdas'][0]['mu'], str(q_pow(0)))

    def test_usl2_report(self):
        data = spectrum_report(USL2_FAMILY, 3).to_dict()
        self.assertEqual([level['d'] for level in data['levels']], [1, 1, 1])
        first = data['levels'][1]['lambdas'][0]
        self.assertEqual(first['M_generator'], 't + 1')
        self.assertEqual(first['scan'], [2])
        self.assertEqual(first['goldie_rank'], 2)
        self.assertTrue(first['jm_closure'])

    def test_json_round_trip_and_determinism(self):
        family = ExampleFamily.qtorus(3)
        text = spectrum_report(family, 2).to_json()
        self.assertEqual(text, spectrum_report(family, 2).to_json())
        self.assertEqual(json.loads(text), spectrum_report(family, 2).to_dict())
        self.assertTrue(text.endswith('\n'))

    def test_markdown(self):
        text = spectrum_report(USL2_FAMILY, 2).to_markdown()
        self.assertTrue(text.startswith('# Espectro de U(sl2)'))
        self.assertIn('| 2 | + | 1 | (t + 1) | {2} | sí | 2 |', text)

    def test_adu_has_no_report(self):
        with self.assertRaises(ValidationError):
            spectrum_report(ADU_FAMILY, 2)


@override_settings(SKEWALG_MAX_M=6)
class SpectrumReportApiTests(SimpleTestCase):

    def test_report(self):
        response = self.client.get('/api/spectra/report/', {'example': 'usl2', 'm_max': 2})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['family'], 'U(sl2)')
        self.assertEqual(len(data['levels']), 2)

    def test_qtorus_report(self):
        response = self.client.get('/api/spectra/report/', {'example': 'qtorus', 'p': 3, 'm_max': 1})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['parameters'], {'p': 3})

    def test_bad_requests(self):
        for params in ({}, {'example': 'qtorus', 'p': 4}, {'example': 'usl2', 'm_max': 'x'},
                       {'example': 'usl2', 'm_max': 7}, {'example': 'adu'}):
            response = self.client.get('/api/spectra/report/', params)
            self.assertEqual(response.status_code, 400, params)
            self.assertIn('error', response.json())

    def test_status(self):
        response = self.client.get('/api/status/')
        self.assertEqual(response.json()['status'], 'online')
