import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from spectra.goldie import GoldieReport
from spectra.witnesses import WitnessFailure

from .options import FAILURE, USAGE_ERROR, output_path


def run(command, *args, **options):
    out, err = StringIO(), StringIO()
    call_command(command, *args, stdout=out, stderr=err, **options)
    return out.getvalue()


class UsageErrorTests(SimpleTestCase):

    def assertExitCode(self, code, command, **options):
        with self.assertRaises(CommandError) as ctx:
            run(command, **options)
        self.assertEqual(ctx.exception.returncode, code)

    def test_even_torus_rank(self):
        self.assertExitCode(USAGE_ERROR, 'report', example='qtorus', p=4)
        self.assertExitCode(USAGE_ERROR, 'find_pm', example='qtorus', p=2)

    def test_adu_has_no_spectral_commands(self):
        self.assertExitCode(USAGE_ERROR, 'exceptional', example='adu', n=1, f='k^-1')
        self.assertExitCode(USAGE_ERROR, 'report', example='adu', n=1, f='k^-1')
        self.assertExitCode(USAGE_ERROR, 'goldie', example='adu', n=1, f='k^-1', m=1)

    def test_m_max_out_of_range(self):
        self.assertExitCode(USAGE_ERROR, 'report', example='usl2', m_max=0)
        with override_settings(SKEWALG_MAX_M=3):
            self.assertExitCode(USAGE_ERROR, 'find_pm', example='usl2', m_max=4)

    def test_bad_lambda(self):
        self.assertExitCode(USAGE_ERROR, 'scan', example='usl2', **{'lambda': 'x'})

    def test_single_sign_family(self):
        self.assertExitCode(USAGE_ERROR, 'jm_table', example='usl2', m=2, sign='-')


class CommandOutputTests(SimpleTestCase):

    def test_check_identities(self):
        output = run('check_identities', example='usl2', m_max=3)
        self.assertIn('✓ m=3', output)
        self.assertIn('✓ Todas las identidades', output)

    def test_check_identities_fuzz_is_seeded(self):
        first = run('check_identities', example='adu', n=1, f='k^-1', m_max=1, fuzz=5, seed=7)
        second = run('check_identities', example='adu', n=1, f='k^-1', m_max=1, fuzz=5, seed=7)
        self.assertEqual(first, second)
        self.assertIn('semilla 7', first)

    def test_exceptional_json(self):
        payload = json.loads(run('exceptional', example='usl2', m_max=3, format='json'))
        self.assertEqual([row['value'] for row in payload['lambdas']], ['1/4', '1', '9/4'])
        self.assertEqual([row['scan'] for row in payload['lambdas']], [[1], [2], [3]])
        self.assertEqual(payload['lambdas'][1]['M_generator'], 't + 1')

    def test_exceptional_markdown(self):
        output = run('exceptional', '--example', 'usl2', '--m-max', '3', '--format', 'md')
        self.assertIn('| m | signo | λ | M | barrido |', output)
        self.assertIn('| 2 | + | 1 | (t + 1) | {2} |', output)
        self.assertNotIn('✓', output)

    def test_exceptional_rejects_unknown_format(self):
        with self.assertRaises(CommandError):
            run('exceptional', '--example', 'usl2', '--format', 'xml')

    def test_exceptional_text(self):
        output = run('exceptional', example='qtorus', p=3, m_max=1)
        self.assertEqual(output.count('✓'), 2)

    def test_scan(self):
        self.assertIn('no es maximal', run('scan', example='usl2', m_max=4, **{'lambda': '9/4'}))
        self.assertIn('es maximal hasta m=4', run('scan', example='usl2', m_max=4, **{'lambda': '1/3'}))

    def test_jm_table(self):
        output = run('jm_table', example='usl2', m=2)
        self.assertIn('I_0 = (t^2 - 1)', output)
        self.assertIn('I_-1 = (t - 1)', output)
        self.assertIn('✓ J(M) es un ideal bilátero', output)

    def test_goldie(self):
        output = run('goldie', example='uqsl2', m=2, sign='-')
        self.assertIn('Rango de Goldie a la derecha = 2', output)

    def test_find_pm(self):
        output = run('find_pm', example='usl2', m_max=2)
        self.assertIn('p_m(X) = X + 1', output)

    def test_find_pm_bivariate(self):
        output = run('find_pm', example='adu', n=1, f='k^-1', m_max=2)
        self.assertEqual(output.count('✓'), 2)
        self.assertIn('coeficiente de ck^n', output)


class ReportCommandTests(SimpleTestCase):

    def test_report_is_deterministic(self):
        first = run('report', example='usl2', m_max=2)
        self.assertEqual(first, run('report', example='usl2', m_max=2))
        data = json.loads(first)
        self.assertEqual(data['family'], 'U(sl2)')
        self.assertEqual([level['d'] for level in data['levels']], [1, 1])

    def test_report_qtorus_certificates_are_verified(self):
        output = run('report', '--example', 'qtorus', '--p', '5', '--m-max', '3', '--format', 'json')
        data = json.loads(output)
        self.assertEqual(data['schema'], 'skewalg/1')
        self.assertEqual(data['family'], 'QTorus(5)')
        self.assertEqual(data['m_max'], 3)
        certificates = data['height_one']['certificates']
        self.assertEqual([c['m'] for c in certificates], [1, 2, 3])
        self.assertTrue(all(c['verified'] is True for c in certificates))
        self.assertEqual(certificates[0]['modulus'], 'z5^2 - s^4')
        self.assertEqual([level['d'] for level in data['levels']], [2, 2, 2])
        for level in data['levels']:
            self.assertEqual([row['goldie_rank'] for row in level['lambdas']], [level['m']] * 2)
            self.assertTrue(all(row['maximal'] and row['jm_closure'] for row in level['lambdas']))

    def test_report_markdown(self):
        output = run('report', example='qtorus', p=3, m_max=1, format='md')
        self.assertTrue(output.startswith('# Espectro de QTorus(3)'))

    def test_report_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'usl2.json'
            output = run('report', example='usl2', m_max=1, out=str(target))
            self.assertIn('✓ Informe escrito', output)
            self.assertEqual(json.loads(target.read_text(encoding='utf-8'))['m_max'], 1)

    def test_bare_name_goes_to_report_dir(self):
        with tempfile.TemporaryDirectory() as tmp, override_settings(SKEWALG_REPORT_DIR=Path(tmp)):
            self.assertEqual(output_path('usl2.md'), Path(tmp) / 'usl2.md')
            self.assertEqual(output_path('./usl2.md'), Path('./usl2.md'))
            self.assertIsNone(output_path(None))

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            blocker = Path(tmp) / 'file'
            blocker.write_text('x')
            with self.assertRaises(CommandError) as ctx:
                run('report', example='usl2', m_max=1, out=str(blocker / 'report.json'))
        self.assertEqual(ctx.exception.returncode, FAILURE)

    def test_witness_failure_exit_code(self):
        failure = WitnessFailure('informe con testigos fallidos', ['m=1+:maximal'])
        with mock.patch('cli.management.commands.report.spectrum_report', side_effect=failure):
            with self.assertRaises(CommandError) as ctx:
                run('report', example='usl2', m_max=1)
        self.assertEqual(ctx.exception.returncode, FAILURE)

    def test_goldie_failure_exit_code(self):
        report = GoldieReport(2)
        report.record('comaximal[r=0]', False)
        with mock.patch('cli.management.commands.goldie.goldie_decomposition', return_value=report):
            with self.assertRaises(CommandError) as ctx:
                run('goldie', example='usl2', m=2)
        self.assertEqual(ctx.exception.returncode, FAILURE)
