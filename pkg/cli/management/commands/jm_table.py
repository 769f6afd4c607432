"""
Comando para construir la tabla del ideal graduado J(M) de un λ excepcional.

Uso:
    python manage.py jm_table --example usl2 --m 2
    python manage.py jm_table --example uqsl2 --m 3 --sign -
"""
from django.core.management.base import BaseCommand

from spectra.central import CentralView
from spectra.jm import build_jm, closure_checks
from spectra.witnesses import exceptional_ideal

from ...options import CliConfig, add_family_arguments, add_level_arguments, exceptional_choice, failure


class Command(BaseCommand):
    help = 'Construye J(M) = ⊕ I_d Z^d para el λ excepcional de nivel m y verifica que es un ideal'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_level_arguments(parser)

    def handle(self, *args, **options):
        config = CliConfig.from_options('jm-table', options)
        m = options['m']
        lam = exceptional_choice(config.family, m, options['sign'])
        view = CentralView.for_family(config.family, lam)
        table = build_jm(view, exceptional_ideal(config.family, lam, m), m)

        self.stdout.write(f'{config.family.label}, λ = {lam}, m = {m}')
        self.stdout.write(f'  M = ({view.render(table.M)})')
        for i, M_i in enumerate(table.translates):
            self.stdout.write(f'  M_{i} = ({view.render(M_i)})')
        for d in sorted(table.components, reverse=True):
            self.stdout.write(f'  I_{d} = ({view.render(table.components[d])})')

        failed = [name for name, ok in closure_checks(table) if not ok]
        for name in failed:
            self.stdout.write(self.style.ERROR(f'  ✗ {name}'))
        if failed:
            raise failure(f'J(M) no es un ideal: {len(failed)} contenciones fallidas')
        self.stdout.write(self.style.SUCCESS('\n✓ J(M) es un ideal bilátero'))
