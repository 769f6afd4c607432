"""
El ideal graduado J(M) de W = W(A, α, u + λ) y los productos Π(M, i, r̂, j).

Con M_i = α^{-i}(M) para 0 <= i <= m-1:
    I_i    = M_0 ∩ ... ∩ M_{m-1-i}
    I_{-i} = M_i ∩ ... ∩ M_{m-1}
y I_d = A para |d| >= m. J(M) = ⊕ I_i Y^i ⊕ I_{-i} X^i.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from idealkit.ideals import (
    CentralIdeal, contained, ideal_eq, ideal_intersect, ideal_product, is_maximal,
)

from .central import CentralView

logger = logging.getLogger(__name__)


class NonDistinctTranslates(ValueError):
    """Dos traslados M_i = α^{-i}(M) coinciden."""


def pi_product(
    translates: Sequence[CentralIdeal], i: int, j: int, skip: Optional[int] = None
) -> CentralIdeal:
    """
    Π(M, i, r̂, j) = M_i ⋯ M_{r-1} M_{r+1} ⋯ M_j; sin ``skip`` es Π(M, i, j).

    El producto vacío (j = i - 1, o i = j = skip) es el ideal unidad.

    Examples:
        USL2, m=2, M=(t+1): Π(M,0,1) = (t² - 1), Π(M,0,0̂,1) = (t - 1)
    """
    m = len(translates)
    if not translates:
        raise ValueError('la lista de traslados está vacía')
    if i < 0 or j > m - 1 or i > j + 1:
        raise IndexError(f'índices fuera de rango: i={i}, j={j}, m={m}')
    if skip is not None and not i <= skip <= j:
        raise IndexError(f'el factor omitido {skip} no está en [{i}, {j}]')
    result = CentralIdeal.unit(translates[0].laurent)
    for index in range(i, j + 1):
        if index != skip:
            result = ideal_product(result, translates[index])
    return result


@dataclass(frozen=True)
class JmTable:
    """Componentes I_d de J(M) para -(m-1) <= d <= m-1."""
    m: int
    M: CentralIdeal
    translates: Tuple[CentralIdeal, ...]
    components: Dict[int, CentralIdeal]
    view: CentralView

    def component(self, d: int) -> CentralIdeal:
        if abs(d) >= self.m:
            return self.view.unit()
        return self.components[d]

    def with_component(self, d: int, ideal: CentralIdeal) -> 'JmTable':
        components = dict(self.components)
        components[d] = ideal
        return replace(self, components=components)

    def to_dict(self) -> dict:
        render = self.view.render
        return {
            'm': self.m,
            'M': render(self.M),
            'translates': [render(M_i) for M_i in self.translates],
            'components': {str(d): render(self.components[d]) for d in sorted(self.components)},
        }


def _meet(ideals: Sequence[CentralIdeal]) -> CentralIdeal:
    result = ideals[0]
    for ideal in ideals[1:]:
        result = ideal_intersect(result, ideal)
    return result


def build_jm(view: CentralView, M: CentralIdeal, m: int) -> JmTable:
    """
    Tabla de J(M) en la GWA de ``view``.

    Raises:
        NonDistinctTranslates: algún M_i = M_j con i != j.
    """
    if m < 1:
        raise ValueError('m debe ser >= 1')
    if not is_maximal(M):
        raise ValueError(f'M = ({view.render(M)}) no es maximal')
    translates = tuple(view.translate(-i, M) for i in range(m))
    for i in range(m):
        for j in range(i + 1, m):
            if ideal_eq(translates[i], translates[j]):
                raise NonDistinctTranslates(f'M_{i} = M_{j} = ({view.render(translates[i])})')

    components: Dict[int, CentralIdeal] = {}
    for i in range(m):
        components[i] = _meet(translates[:m - i])
        if i:
            components[-i] = _meet(translates[i:])
    logger.debug(f'J(M) para M=({view.render(M)}), m={m}: {len(components)} componentes')
    return JmTable(m, M, translates, components, view)


def closure_checks(table: JmTable) -> List[Tuple[str, bool]]:
    """
    Contenciones que hacen de J(M) un ideal bilátero, grado a grado:

        Y·I_iY^i   ⊆ J:  α(I_i) ⊆ I_{i+1}
        I_iY^i·Y   ⊆ J:  I_i ⊆ I_{i+1}
        X·I_iY^i   ⊆ J:  α^{-1}(I_i)·(u) ⊆ I_{i-1}
        I_iY^i·X   ⊆ J:  I_i·(α^i(u)) ⊆ I_{i-1}
    y sus análogas en grado negativo, con I_0 en ambos lados.
    """
    view = table.view
    I = table.component
    u = view.ideal(view.u)
    checks: List[Tuple[str, bool]] = []
    for i in range(0, table.m + 1):
        checks.append((f'alpha(I_{i}) ⊆ I_{i + 1}', contained(view.translate(1, I(i)), I(i + 1))))
        checks.append((f'I_{i} ⊆ I_{i + 1}', contained(I(i), I(i + 1))))
        checks.append((f'alpha^-1(I_{-i}) ⊆ I_{-i - 1}', contained(view.translate(-1, I(-i)), I(-i - 1))))
        checks.append((f'I_{-i} ⊆ I_{-i - 1}', contained(I(-i), I(-i - 1))))
        if i == 0:
            continue
        left = ideal_product(view.translate(-1, I(i)), u)
        checks.append((f'alpha^-1(I_{i})(u) ⊆ I_{i - 1}', contained(left, I(i - 1))))
        right = ideal_product(I(i), view.ideal(view.u_translate(i)))
        checks.append((f'I_{i}(alpha^{i}(u)) ⊆ I_{i - 1}', contained(right, I(i - 1))))
        left = ideal_product(view.translate(1, I(-i)), view.ideal(view.u_translate(1)))
        checks.append((f'alpha(I_{-i})(alpha(u)) ⊆ I_{-i + 1}', contained(left, I(-i + 1))))
        right = ideal_product(I(-i), view.ideal(view.u_translate(1 - i)))
        checks.append((f'I_{-i}(alpha^{1 - i}(u)) ⊆ I_{-i + 1}', contained(right, I(-i + 1))))
    return checks


def verify_jm_closure(table: JmTable) -> bool:
    failures = [name for name, ok in closure_checks(table) if not ok]
    if failures:
        logger.warning(f'J(M) no es cerrado, m={table.m}: {failures}')
    return not failures
