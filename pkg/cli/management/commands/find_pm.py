"""
Comando para calcular los certificados p_m de los primos de altura uno.

Uso:
    python manage.py find_pm --example qtorus --p 3 --m-max 4
    python manage.py find_pm --example adu --n 1 --f "k^-1" --m-max 3
"""
from django.core.management.base import BaseCommand

from idealkit.residues import DegenerateElimination, DegenerateModulus
from spectra.witnesses import WitnessFailure, find_pm, find_pm_bivariate

from ...options import CliConfig, add_family_arguments, add_m_max_argument, failure


class Command(BaseCommand):
    help = 'Calcula p_m con p_m(u) ∈ v^(m)A (p(u, c) para ADU) y lo verifica por reducción'

    def add_arguments(self, parser):
        add_family_arguments(parser)
        add_m_max_argument(parser)

    def handle(self, *args, **options):
        config = CliConfig.from_options('find-pm', options)
        family = config.family
        self.stdout.write(f'Certificados de {family.label} hasta m={config.m_max}:')

        for m in range(1, config.m_max + 1):
            try:
                if family.is_spectral:
                    witness = find_pm(family, m)
                    data = witness.to_dict()
                    self.stdout.write(self.style.SUCCESS(
                        f"  ✓ m={m}: p_m(X) = {data['p_m']}, v^(m) = {data['modulus']}"
                    ))
                else:
                    witness = find_pm_bivariate(family, m)
                    data = witness.to_dict()
                    self.stdout.write(self.style.SUCCESS(
                        f"  ✓ m={m}: c̄ = {data['c_bar']}, p(X, Y) = {data['p']}, "
                        f"coeficiente de ck^n = {data['v_m_leading_coefficient']}"
                    ))
            except (WitnessFailure, DegenerateModulus, DegenerateElimination) as exc:
                self.stdout.write(self.style.ERROR(f'  ✗ m={m}: {exc}'))
                raise failure(f'certificado de p_{m} no verificado en {family.label}')
