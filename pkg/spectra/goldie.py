"""
Descomposición de W/J(M) en m ideales a la derecha uniformes J^(0), ..., J^(m-1).

Cada afirmación del argumento se reduce a un testigo sobre ideales del
subanillo central: sumas escalonadas, intersecciones, comaximalidad y
(no) pertenencia de traslados α^k(u). El rango m sólo se declara si pasan
todos.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from gwa.rings import d_element, e_element
from idealkit.ideals import (
    CentralIdeal, contained, contains, ideal_eq, ideal_intersect, ideal_product, ideal_sum, is_unit_ideal,
)

from .jm import JmTable, pi_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    name: str
    passed: bool
    detail: str = ''

    def to_dict(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class GoldieReport:
    m: int
    witnesses: List[Witness] = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = ''):
        self.witnesses.append(Witness(name, bool(passed), detail))
        if not passed:
            logger.warning(f'testigo fallido: {name} {detail}')

    @property
    def failures(self) -> List[Witness]:
        return [w for w in self.witnesses if not w.passed]

    @property
    def rank(self) -> Optional[int]:
        return None if self.failures else self.m

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'rank': self.rank,
            'witness_count': len(self.witnesses),
            'failures': [w.to_dict() for w in self.failures],
        }


def _staged_sums(report: GoldieReport, Pi, m: int):
    # grado 0
    for s in range(m):
        staged = _sum(Pi(0, m - 1, j) for j in range(s + 1))
        report.record(f'staged_sum[d=0,s={s}]', ideal_eq(staged, Pi(s + 1, m - 1)))
        if s < m - 1:
            meet = ideal_intersect(Pi(s + 1, m - 1), Pi(0, m - 1, s + 1))
            report.record(f'direct[d=0,s={s}]', ideal_eq(meet, Pi(0, m - 1)))
    for d in range(1, m):
        top = m - d - 1
        for s in range(top + 1):
            staged = _sum(Pi(0, top, j) for j in range(s + 1))
            report.record(f'staged_sum[d={d},s={s}]', ideal_eq(staged, Pi(s + 1, top)))
            if s < top:
                meet = ideal_intersect(Pi(s + 1, top), Pi(0, top, s + 1))
                report.record(f'direct[d={d},s={s}]', ideal_eq(meet, Pi(0, top)))
        for s in range(d, m):
            staged = _sum(Pi(d, m - 1, j) for j in range(d, s + 1))
            report.record(f'staged_sum[d={-d},s={s}]', ideal_eq(staged, Pi(s + 1, m - 1)))
            if s < m - 1:
                meet = ideal_intersect(Pi(s + 1, m - 1), Pi(d, m - 1, s + 1))
                report.record(f'direct[d={-d},s={s}]', ideal_eq(meet, Pi(d, m - 1)))


def _sum(ideals) -> CentralIdeal:
    ideals = list(ideals)
    result = ideals[0]
    for ideal in ideals[1:]:
        result = ideal_sum(result, ideal)
    return result


def _uniformity(report: GoldieReport, table: JmTable, Pi, r: int):
    view, m = table.view, table.m
    M_r = table.translates[r]
    translate = view.u_translate

    comaximal = ideal_sum(M_r, Pi(0, m - 1, r))
    report.record(f'comaximal[r={r}]', is_unit_ideal(comaximal), f'M_r + Π = ({view.render(comaximal)})')

    for d in range(1, m - r):
        report.record(f'injective[r={r},d={d}]', not contains(M_r, translate(d)), 'α^d(u) ∉ M_r')
    for d in range(1, r + 1):
        report.record(f'injective[r={r},d={-d}]', not contains(M_r, translate(1 - d)), 'α^{1-d}(u) ∉ M_r')

    annihilator = view.ideal(translate(-r))
    for d in range(1, m - r):
        product = ideal_product(Pi(0, m - 1 - d, r), annihilator)
        report.record(f'annihilation[r={r},d={d}]', contained(product, Pi(0, m - 1 - d)))
    for d in range(1, r + 1):
        product = ideal_product(Pi(d, m - 1, r), annihilator)
        report.record(f'annihilation[r={r},d={-d}]', contained(product, Pi(d, m - 1)))

    members = [l for l in range(r - m, r + m + 1) if contains(M_r, translate(-l))]
    window_ok = all(
        contains(M_r, translate(-l)) == (l == r) for l in range(r - m + 1, r + m)
    )
    report.record(
        f't_element[r={r}]', window_ok and members == [r - m, r],
        f'{{ℓ : α^-ℓ(u) ∈ M_r}} ∩ [{r - m}, {r + m}] = {members}',
    )


def _yxai(report: GoldieReport, table: JmTable):
    view, m = table.view, table.m
    W = view.ring
    u = view.ideal(view.u)
    for i in range(1, m):
        d_i = view.ideal(d_element(W, i))
        e_i = view.ideal(e_element(W, i))
        pairs = (
            ('d_i+u', d_i, u),
            ('d_i+alpha^m(u)', d_i, view.ideal(view.u_translate(m))),
            ('e_i+alpha^-i(u)', e_i, view.ideal(view.u_translate(-i))),
            ('e_i+alpha^(m-i)(u)', e_i, view.ideal(view.u_translate(m - i))),
        )
        for name, left, right in pairs:
            report.record(f'yxai[i={i},{name}]', is_unit_ideal(ideal_sum(left, right)))


def _ymorxm(report: GoldieReport, table: JmTable):
    view, m = table.view, table.m
    u = view.ideal(view.u)
    for j in range(1, m):
        report.record(f'ymorxm[j={j}]', is_unit_ideal(ideal_sum(u, view.ideal(view.u_translate(j)))))
    M = ideal_sum(u, view.ideal(view.u_translate(m)))
    report.record(f'ymorxm[j={m}]', ideal_eq(M, table.M) and not is_unit_ideal(M), f'M = ({view.render(M)})')


def goldie_decomposition(table: JmTable) -> GoldieReport:
    """
    Verifica que J^(0) + ... + J^(m-1) = W/J(M) es directa y que cada J^(r)
    es uniforme. ``rank`` es m si todos los testigos pasan, None si no.

    Examples:
        USL2, M=(t+1), m=2: J^(0)_0 ↔ (t-1), J^(1)_0 ↔ (t+1), rango 2
    """
    m = table.m
    logger.info(f'descomposición de Goldie: M=({table.view.render(table.M)}), m={m}')

    def Pi(i, j, skip=None):
        return pi_product(table.translates, i, j, skip)

    report = GoldieReport(m)
    _staged_sums(report, Pi, m)
    for r in range(m):
        _uniformity(report, table, Pi, r)
    _yxai(report, table)
    _ymorxm(report, table)
    logger.info(f'm={m}: {len(report.witnesses)} testigos, {len(report.failures)} fallidos, rango {report.rank}')
    return report
