"""
Comando para listar los λ excepcionales de cada nivel m.

Uso:
    python manage.py exceptional --example usl2 --m-max 5
    python manage.py exceptional --example qtorus --p 3 --m-max 3 --format json
    python manage.py exceptional --example uqsl2 --m-max 2 --format md
"""
import json

from django.core.management.base import BaseCommand

from spectra.central import CentralView
from spectra.witnesses import exceptional_ideal, exceptional_lambdas, maximality_scan

from ...options import (
    SIGN_CHOICES, CliConfig, add_family_arguments, add_format_argument, add_m_max_argument, failure, usage_error,
)


class Command(BaseCommand):
    help = 'Lista los λ excepcionales hasta m_max con su ideal M y el barrido de maximalidad'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_m_max_argument(parser)
        add_format_argument(parser, help_text='Salida en json o md en lugar de texto')

    def handle(self, *args, **options):
        config = CliConfig.from_options('exceptional', options)
        family = config.family
        if not family.is_spectral:
            raise usage_error(f'{family.label} no tiene formas cerradas espectrales')

        rows = []
        for m in range(1, config.m_max + 1):
            for sign, lam in zip(SIGN_CHOICES, exceptional_lambdas(family, m)):
                view = CentralView.for_family(family, lam)
                M = exceptional_ideal(family, lam, m)
                rows.append({
                    'm': m,
                    'sign': sign,
                    'value': str(lam),
                    'M_generator': view.render(M),
                    'scan': maximality_scan(family, lam, config.m_max),
                })

        broken = [row for row in rows if row['scan'] != [row['m']]]

        if options.get('format') == 'json':
            payload = {'family': family.label, 'm_max': config.m_max, 'lambdas': rows}
            self.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False))
        elif options.get('format') == 'md':
            self.stdout.write(f'# λ excepcionales de {family.label}\n')
            self.stdout.write('| m | signo | λ | M | barrido |')
            self.stdout.write('|---|---|---|---|---|')
            for row in rows:
                scan = ', '.join(str(k) for k in row['scan']) or '∅'
                self.stdout.write(f"| {row['m']} | {row['sign']} | {row['value']} | ({row['M_generator']}) | {{{scan}}} |")
        else:
            self.stdout.write(f'λ excepcionales de {family.label} hasta m={config.m_max}:')
            for row in rows:
                ok = row['scan'] == [row['m']]
                line = f"  {'✓' if ok else '✗'} m={row['m']}{row['sign']}: λ = {row['value']}, M = ({row['M_generator']}), barrido {row['scan']}"
                self.stdout.write(self.style.SUCCESS(line) if ok else self.style.ERROR(line))

        if broken:
            raise failure(f'{len(broken)} λ con barrido distinto de su nivel')
