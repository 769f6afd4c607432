"""
Comando para verificar las identidades de conmutación y de potencias.

Uso:
    python manage.py check_identities --example qtorus --p 3 --m-max 8
    python manage.py check_identities --example adu --n 1 --f "k^-1" --fuzz 50 --seed 7
"""
import random

from django.conf import settings
from django.core.management.base import BaseCommand

from ambiskew.identities import check_skewcomm
from gwa.rings import from_ambiskew, power_identities
from spectra.families import make_example

from ...options import CliConfig, add_family_arguments, add_m_max_argument, failure

COEFFICIENTS = (1, -1, 2, 3)


def random_element(ring, rng: random.Random, terms: int = 3):
    """Elemento aleatorio Σ x^i a y^j con a un monomio de A."""
    sig = ring.sig
    result = ring.zero()
    for _ in range(terms):
        exponents = tuple(
            rng.randint(-1, 2) if sig.invertible[k] else rng.randint(0, 2) for k in range(sig.n)
        )
        a = sig.monomial(exponents, rng.choice(COEFFICIENTS))
        result = result + ring.term(rng.randint(0, 2), a, rng.randint(0, 2))
    return result


class Command(BaseCommand):
    help = 'Verifica las identidades de conmutación del anillo ambiskew y de potencias de su GWA'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_m_max_argument(parser)
        parser.add_argument(
            '--fuzz',
            type=int,
            default=0,
            help='Número de ternas aleatorias para probar la asociatividad (default: 0)'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Semilla de las ternas aleatorias (default: SKEWALG_FUZZ_SEED)'
        )

    def handle(self, *args, **options):
        config = CliConfig.from_options('check-identities', options)
        ring, u = make_example(config.family)
        gwa = from_ambiskew(ring, u)

        self.stdout.write(f'Verificando {config.family.label} hasta m={config.m_max}...')
        failed = []
        for m in range(1, config.m_max + 1):
            skew = check_skewcomm(ring, m)
            powers = power_identities(gwa, m)
            if skew and powers:
                self.stdout.write(self.style.SUCCESS(f'  ✓ m={m}: conmutación y potencias'))
            else:
                failed.append(m)
                self.stdout.write(self.style.ERROR(
                    f'  ✗ m={m}: conmutación {"✓" if skew else "✗"}, potencias {"✓" if powers else "✗"}'
                ))

        if options['fuzz']:
            seed = config.seed if config.seed is not None else settings.SKEWALG_FUZZ_SEED
            rng = random.Random(seed)
            broken = 0
            for _ in range(options['fuzz']):
                a, b, c = (random_element(ring, rng) for _ in range(3))
                if (a * b) * c != a * (b * c):
                    broken += 1
            if broken:
                failed.append('fuzz')
                self.stdout.write(self.style.ERROR(f'  ✗ asociatividad: {broken} ternas fallidas (semilla {seed})'))
            else:
                self.stdout.write(self.style.SUCCESS(f'  ✓ asociatividad: {options["fuzz"]} ternas (semilla {seed})'))

        if failed:
            raise failure(f'Identidades fallidas en {config.family.label}: {failed}')
        self.stdout.write(self.style.SUCCESS(f'\n✓ Todas las identidades de {config.family.label} se cumplen'))
