"""
Comando para generar el informe espectral completo de una familia.

Uso:
    python manage.py report --example usl2 --m-max 4
    python manage.py report --example qtorus --p 3 --format md --out qtorus3.md
"""
import logging

from django.core.management.base import BaseCommand

from spectra.services import spectrum_report
from spectra.witnesses import WitnessFailure

from ...options import (
    CliConfig, add_family_arguments, add_format_argument, add_m_max_argument, failure, usage_error, write_output,
)

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Genera el informe del espectro primo (JSON o markdown) hasta m_max'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_m_max_argument(parser)
        add_format_argument(parser, default='json', help_text='Formato del informe (default: json)')
        parser.add_argument(
            '--out',
            help='Archivo de salida; un nombre sin directorio va a SKEWALG_REPORT_DIR (default: stdout)'
        )

    def handle(self, *args, **options):
        config = CliConfig.from_options('report', options)
        if not config.family.is_spectral:
            raise usage_error(f'{config.family.label} no tiene formas cerradas espectrales')

        try:
            report = spectrum_report(config.family, config.m_max)
        except WitnessFailure as exc:
            for name in exc.failures:
                self.stderr.write(f'✗ {name}')
            raise failure(f'{exc}: {len(exc.failures)} testigos fallidos')

        text = report.to_json() if config.fmt == 'json' else report.to_markdown()
        logger.info(f'informe {config.fmt} de {config.family.label} listo ({len(text)} caracteres)')
        write_output(self, text, config.out)
