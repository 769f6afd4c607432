"""
Álgebra lineal en F[X^±1]/(g) y eliminación por resultantes.
"""
import logging
from typing import List

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring as poly_ring

from scalars.field import FIELD, Scalar
from scalars.laurent import POLY_RING, X, LaurentPoly

from .ideals import CentralIdeal, CentralLike, NotCentralUnivariate, as_central, is_unit_ideal

logger = logging.getLogger(__name__)


class DegenerateModulus(ValueError):
    """El módulo es cero o una unidad: el cociente no es de dimensión finita positiva."""


class DegenerateElimination(ValueError):
    """Ninguno de los dos polinomios depende de la variable a eliminar."""


def reduce_mod(f: CentralLike, I: CentralIdeal):
    """Representante de f en el cociente por I, de grado menor que deg I."""
    f = as_central(f)
    g = I.poly
    if f.shift >= 0:
        return (f.poly * X ** f.shift).rem(g)
    if not I.laurent:
        raise NotCentralUnivariate(f'{f} tiene exponentes negativos en un anillo de polinomios')
    inverse = POLY_RING.dup_invert(X, g)
    return (f.poly * inverse ** (-f.shift)).rem(g)


def _coordinates(poly, n: int) -> List:
    coeffs = dict(poly.terms())
    return [coeffs.get((e,), FIELD.zero) for e in range(n)]


def residue_minpoly(g: CentralLike, f: CentralLike, laurent: bool) -> LaurentPoly:
    """
    Polinomio mínimo p de la imagen de f en F[X^±1]/(g).

    Expresa f^0, f^1, ... en la base {1, X, ..., X^{n-1}} y toma la primera
    dependencia lineal; p es mónico y p(f) ∈ (g).

    Examples:
        g = t + m - 1, f = -¼(t-1)² → X + m²/4
    """
    modulus = CentralIdeal.of(g, laurent)
    if modulus.is_zero or is_unit_ideal(modulus):
        raise DegenerateModulus(f'módulo degenerado {modulus}')
    n = modulus.degree
    image = reduce_mod(f, modulus)
    columns = []
    power = POLY_RING.one
    for j in range(n + 1):
        columns.append(_coordinates(power, n))
        if j:
            rows = [[column[r] for column in columns] for r in range(n)]
            basis = DomainMatrix(rows, (n, j + 1), FIELD).nullspace().to_list()
            if basis:
                relation = basis[0]
                lead = relation[j]
                minpoly = LaurentPoly.from_terms({i: Scalar(c / lead) for i, c in enumerate(relation)})
                logger.debug(f'polinomio mínimo módulo {modulus}: {minpoly}')
                return minpoly
        power = (power * image).rem(modulus.poly)
    raise ArithmeticError(f'sin dependencia lineal en dimensión {n}')


def resultant(f, g, eliminate: str):
    """
    Resultante respecto de ``eliminate`` de dos polinomios de un mismo
    anillo de sympy sobre F.

    Returns:
        Un ``Scalar`` si no quedan variables, o un polinomio en las restantes.

    Raises:
        DegenerateElimination: ni f ni g dependen de ``eliminate``.
    """
    if f.ring != g.ring:
        raise ValueError('f y g deben pertenecer al mismo anillo')
    names = [str(symbol) for symbol in f.ring.symbols]
    if eliminate not in names:
        raise ValueError(f'{eliminate} no es una variable de {names}')
    index = names.index(eliminate)
    if f.degree(index) <= 0 and g.degree(index) <= 0:
        raise DegenerateElimination(f'ni f ni g dependen de {eliminate}')
    ordered_names = [eliminate] + [name for name in names if name != eliminate]
    ordered = poly_ring(','.join(ordered_names), f.ring.domain)[0]
    result = ordered.dmp_resultant(f.set_ring(ordered), g.set_ring(ordered))
    if ordered.ngens == 1:
        return Scalar(FIELD.convert(result))
    return result
