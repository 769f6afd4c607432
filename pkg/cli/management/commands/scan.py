"""
Comando para barrer la maximalidad de (z - λ)R hasta m_max.

Uso:
    python manage.py scan --example usl2 --lambda 9/4 --m-max 6
    python manage.py scan --example uqsl2 --lambda "1/3" --m-max 10
"""
from django.core.management.base import BaseCommand

from spectra.witnesses import maximality_scan

from ...options import CliConfig, add_family_arguments, add_m_max_argument, usage_error


class Command(BaseCommand):
    help = 'Lista los m <= m_max para los que (u + λ) + α^m(u + λ) es propio'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_m_max_argument(parser)
        parser.add_argument(
            '--lambda',
            required=True,
            help='Valor de λ, p. ej. "9/4" o "s^3 + s"'
        )

    def handle(self, *args, **options):
        config = CliConfig.from_options('scan', options)
        if not config.family.is_spectral:
            raise usage_error(f'{config.family.label} no tiene formas cerradas espectrales')

        hits = maximality_scan(config.family, config.lam, config.m_max)
        if hits:
            levels = ', '.join(str(m) for m in hits)
            self.stdout.write(self.style.WARNING(
                f'✗ (z - {config.lam})R no es maximal: M propio para m ∈ {{{levels}}}'
            ))
        else:
            self.stdout.write(self.style.SUCCESS(
                f'✓ (z - {config.lam})R es maximal hasta m={config.m_max}'
            ))
