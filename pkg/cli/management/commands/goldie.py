"""
Comando para verificar la descomposición de W/J(M) en m ideales uniformes.

Uso:
    python manage.py goldie --example usl2 --m 3
    python manage.py goldie --example qtorus --p 5 --m 2 --sign - --verbosity 2
"""
from django.core.management.base import BaseCommand

from spectra.central import CentralView
from spectra.goldie import goldie_decomposition
from spectra.jm import build_jm
from spectra.witnesses import exceptional_ideal

from ...options import CliConfig, add_family_arguments, add_level_arguments, exceptional_choice, failure


class Command(BaseCommand):
    help = 'Verifica los testigos del rango de Goldie de W/J(M) para el λ excepcional de nivel m'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_level_arguments(parser)

    def handle(self, *args, **options):
        config = CliConfig.from_options('goldie', options)
        m = options['m']
        lam = exceptional_choice(config.family, m, options['sign'])
        view = CentralView.for_family(config.family, lam)
        table = build_jm(view, exceptional_ideal(config.family, lam, m), m)
        report = goldie_decomposition(table)

        self.stdout.write(f'{config.family.label}, λ = {lam}, m = {m}: {len(report.witnesses)} testigos')
        verbose = options.get('verbosity', 1) > 1
        for witness in report.witnesses:
            if witness.passed and not verbose:
                continue
            line = f"  {'✓' if witness.passed else '✗'} {witness.name}"
            if witness.detail:
                line += f' ({witness.detail})'
            self.stdout.write(self.style.SUCCESS(line) if witness.passed else self.style.ERROR(line))

        if report.rank is None:
            raise failure(f'{len(report.failures)} testigos fallidos; rango de Goldie no certificado')
        self.stdout.write(self.style.SUCCESS(f'\n✓ Rango de Goldie a la derecha = {report.rank}'))
