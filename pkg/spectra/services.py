"""
Servicio de informes espectrales: ensambla certificados, λ excepcionales,
tablas J(M) y descomposiciones de Goldie en un documento JSON o markdown.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from idealkit.ideals import CentralIdeal, is_maximal
from scalars.field import Scalar

from .central import CentralView
from .families import UQSL2, ExampleFamily
from .goldie import GoldieReport, goldie_decomposition
from .jm import JmTable, build_jm, verify_jm_closure
from .witnesses import (
    PmWitness, WitnessFailure, exceptional_ideal, exceptional_lambdas, find_pm,
    maximality_scan, require_spectral, uqsl2_mu,
)

logger = logging.getLogger(__name__)

SCHEMA = 'skewalg/1'
CONDITIONAL = 'resultado teórico, condicionado a los testigos verificados'

CONCLUSIONS = {
    'localization': 'la localización de R en las potencias de v es simple',
    'height_one': 'los primos de altura uno son exactamente (z - λ)R, λ ∈ K',
    'countable_exceptions': '(z - λ)R es maximal salvo para una cantidad numerable de valores de λ',
    'unique_prime': 'para λ excepcional, J(M) es el único primo no nulo de R/(z - λ)R',
    'completely_prime': 'el primo de altura dos es completamente primo cuando A/M es un dominio',
    'goldie_rank': 'R/P tiene rango de Goldie a la derecha m para cada primo de altura dos P',
}

FIELD_CAVEAT = (
    'La maximalidad en grado 2 se decide sobre Q(s), que no es algebraicamente cerrado: '
    'un cuadrático irreducible sobre Q(s) puede factorizar sobre K.'
)


@dataclass
class ExceptionalRecord:
    m: int
    sign: str
    lam: Scalar
    M: CentralIdeal
    maximal: bool
    scan: List[int]
    table: JmTable
    closure: bool
    goldie: GoldieReport
    mu: Optional[Scalar] = None

    @property
    def failures(self) -> List[str]:
        prefix = f'm={self.m}{self.sign}'
        failed = []
        if not self.maximal:
            failed.append(f'{prefix}:maximal')
        if self.scan != [self.m]:
            failed.append(f'{prefix}:scan')
        if not self.closure:
            failed.append(f'{prefix}:jm_closure')
        failed.extend(f'{prefix}:{w.name}' for w in self.goldie.failures)
        return failed

    def to_dict(self) -> Dict[str, Any]:
        render = self.table.view.render
        data = {
            'sign': self.sign,
            'value': str(self.lam),
            'M_generator': render(self.M),
            'maximal': self.maximal,
            'scan': list(self.scan),
            'jm_closure': self.closure,
            'jm_table': self.table.to_dict(),
            'goldie_rank': self.goldie.rank,
            'witness_count': len(self.goldie.witnesses),
        }
        if self.mu is not None:
            data['mu'] = str(self.mu)
        return data


@dataclass
class SpectrumReport:
    family: ExampleFamily
    m_max: int
    certificates: List[PmWitness] = field(default_factory=list)
    levels: Dict[int, List[ExceptionalRecord]] = field(default_factory=dict)

    @property
    def failures(self) -> List[str]:
        return [name for records in self.levels.values() for record in records for name in record.failures]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema': SCHEMA,
            'family': self.family.label,
            'kind': self.family.kind,
            'parameters': self.family.parameters,
            'm_max': self.m_max,
            'd': self.family.d,
            'height_zero': '0 es un ideal primo',
            'height_one': {
                'description': CONCLUSIONS['height_one'],
                'certificates': [certificate.to_dict() for certificate in self.certificates],
            },
            'levels': [
                {'m': m, 'd': len(records), 'lambdas': [record.to_dict() for record in records]}
                for m, records in sorted(self.levels.items())
            ],
            'structural_facts': self.family.structural_facts,
            'conclusions': {'status': CONDITIONAL, 'statements': dict(CONCLUSIONS)},
            'field_caveat': FIELD_CAVEAT,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'

    def to_markdown(self) -> str:
        lines = [f'# Espectro de {self.family.label}', '']
        for key, value in self.family.parameters.items():
            lines.append(f'- {key} = {value}')
        lines += [f'- m_max = {self.m_max}', f'- d = {self.family.d}', '']

        lines += ['## Altura uno', '', CONCLUSIONS['height_one'] + '.', '',
                  '| m | p_m(X) | v^(m) |', '|---|---|---|']
        for certificate in self.certificates:
            data = certificate.to_dict()
            lines.append(f"| {data['m']} | {data['p_m']} | {data['modulus']} |")

        lines += ['', '## Altura dos', '',
                  '| m | signo | λ | M | barrido | J(M) cerrado | rango de Goldie |',
                  '|---|---|---|---|---|---|---|']
        for m, records in sorted(self.levels.items()):
            for record in records:
                render = record.table.view.render
                scan = ', '.join(str(k) for k in record.scan) or '∅'
                closure = 'sí' if record.closure else 'no'
                rank = record.goldie.rank if record.goldie.rank is not None else '-'
                lines.append(f'| {m} | {record.sign} | {record.lam} | ({render(record.M)}) | {{{scan}}} | {closure} | {rank} |')

        lines += ['', '## Hechos estructurales', '']
        lines += [f'- {key}: {value}' for key, value in self.family.structural_facts.items()]
        lines += ['', f'## Conclusiones ({CONDITIONAL})', '']
        lines += [f'- {value}' for value in CONCLUSIONS.values()]
        lines += ['', f'> {FIELD_CAVEAT}', '']
        return '\n'.join(lines)


def exceptional_record(family: ExampleFamily, m: int, sign: str, lam: Scalar, m_max: int) -> ExceptionalRecord:
    view = CentralView.for_family(family, lam)
    M = exceptional_ideal(family, lam, m)
    table = build_jm(view, M, m)
    return ExceptionalRecord(
        m=m,
        sign=sign,
        lam=lam,
        M=M,
        maximal=is_maximal(M),
        scan=maximality_scan(family, lam, max(m_max, m)),
        table=table,
        closure=verify_jm_closure(table),
        goldie=goldie_decomposition(table),
        mu=uqsl2_mu(lam, m) if family.kind == UQSL2 else None,
    )


def spectrum_report(family: ExampleFamily, m_max: int) -> SpectrumReport:
    """
    Informe completo hasta m_max.

    Raises:
        WitnessFailure: algún testigo falló; ``failures`` los enumera.
    """
    require_spectral(family)
    if m_max < 1:
        raise ValueError('m_max debe ser >= 1')
    logger.info(f'Generando informe espectral de {family.label} hasta m={m_max}')
    report = SpectrumReport(family, m_max)
    for m in range(1, m_max + 1):
        report.certificates.append(find_pm(family, m))
        lambdas = exceptional_lambdas(family, m)
        report.levels[m] = [
            exceptional_record(family, m, sign, lam, m_max)
            for sign, lam in zip(('+', '-'), lambdas)
        ]
    failures = report.failures
    if failures:
        logger.error(f'{family.label}: {len(failures)} testigos fallidos: {failures}')
        raise WitnessFailure(f'informe de {family.label} con testigos fallidos', failures)
    logger.info(f'Informe de {family.label} completo: d={family.d}')
    return report
