"""
Ideales principales del subanillo central univariado F[X] o F[X^±1].

Todo ideal se guarda por su generador canónico:
    - Laurent: sin potencias de X como factor (término constante no nulo) y mónico;
    - polinomial: mónico.
El ideal cero tiene generador 0 y el ideal unidad generador 1.
"""
from dataclasses import dataclass
from typing import Union

from basealg.algebra import BaseElem, central_project
from basealg.automorphisms import CentralAction
from scalars.field import is_square
from scalars.laurent import POLY_RING, LaurentPoly


class MixedSubrings(ValueError):
    """Operación entre un ideal de F[X] y uno de F[X^±1]."""


class NotCentralUnivariate(ValueError):
    """El elemento no pertenece al subanillo central univariado."""


class UndecidableDegree(ValueError):
    """La maximalidad sólo se decide hasta grado 2."""


CentralLike = Union[LaurentPoly, BaseElem]


def _normalize(f: LaurentPoly, laurent: bool):
    if f.is_zero:
        return POLY_RING.zero
    if laurent:
        return f.poly.monic()
    if not f.is_polynomial:
        raise NotCentralUnivariate(f'{f} tiene exponentes negativos en un anillo de polinomios')
    return f.to_poly().monic()


def as_central(f: CentralLike) -> LaurentPoly:
    if isinstance(f, LaurentPoly):
        return f
    projected = central_project(f)
    if projected is None:
        raise NotCentralUnivariate(f'{f} no está en el subanillo central univariado')
    return projected


@dataclass(frozen=True)
class CentralIdeal:
    generator: LaurentPoly
    laurent: bool

    @classmethod
    def of(cls, f: CentralLike, laurent: bool) -> 'CentralIdeal':
        """Ideal generado por ``f`` con el generador ya normalizado."""
        return cls(LaurentPoly(_normalize(as_central(f), laurent), 0), laurent)

    @classmethod
    def zero(cls, laurent: bool) -> 'CentralIdeal':
        return cls(LaurentPoly(), laurent)

    @classmethod
    def unit(cls, laurent: bool) -> 'CentralIdeal':
        return cls(LaurentPoly.constant(1), laurent)

    @property
    def poly(self):
        return self.generator.to_poly()

    @property
    def is_zero(self) -> bool:
        return self.generator.is_zero

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else self.poly.degree()

    def to_dict(self, var: str = 'X') -> dict:
        return {'generator': self.generator.to_string(var), 'laurent': self.laurent}

    def __str__(self):
        return f'({self.generator})'


def _same_subring(I: CentralIdeal, J: CentralIdeal):
    if I.laurent != J.laurent:
        raise MixedSubrings('no se pueden combinar ideales de F[X] y F[X^±1]')


def _wrap(poly, laurent: bool) -> CentralIdeal:
    return CentralIdeal.of(LaurentPoly(poly, 0), laurent)


def ideal_sum(I: CentralIdeal, J: CentralIdeal) -> CentralIdeal:
    """I + J = (gcd)."""
    _same_subring(I, J)
    return _wrap(I.poly.gcd(J.poly), I.laurent)


def ideal_product(I: CentralIdeal, J: CentralIdeal) -> CentralIdeal:
    _same_subring(I, J)
    return _wrap(I.poly * J.poly, I.laurent)


def ideal_intersect(I: CentralIdeal, J: CentralIdeal) -> CentralIdeal:
    """I ∩ J = (lcm)."""
    _same_subring(I, J)
    if I.is_zero or J.is_zero:
        return CentralIdeal.zero(I.laurent)
    return _wrap(I.poly.lcm(J.poly), I.laurent)


def contains(I: CentralIdeal, f: CentralLike) -> bool:
    """
    True si f ∈ I.

    Examples:
        t² - q^{2-2m} ∈ (t - q^{1-m}) → True
    """
    f = as_central(f)
    if f.is_zero:
        return True
    if I.is_zero:
        return False
    if is_unit_ideal(I):
        return True
    return not _normalize(f, I.laurent).rem(I.poly)


def contained(I: CentralIdeal, J: CentralIdeal) -> bool:
    """I ⊆ J."""
    _same_subring(I, J)
    return contains(J, I.generator)


def is_unit_ideal(I: CentralIdeal) -> bool:
    return I.degree == 0


def ideal_eq(I: CentralIdeal, J: CentralIdeal) -> bool:
    _same_subring(I, J)
    return I.generator == J.generator


def is_maximal(I: CentralIdeal) -> bool:
    """
    Maximalidad hasta grado 2: lineal siempre; cuadrático si el
    discriminante no es un cuadrado en Q(s).

    Raises:
        UndecidableDegree: grado mayor que 2.
    """
    if I.is_zero or is_unit_ideal(I):
        return False
    if I.degree == 1:
        return True
    if I.degree == 2:
        a, b, c = (I.generator.coeff(e) for e in (2, 1, 0))
        discriminant = b * b - 4 * a * c
        return is_square(discriminant) is None
    raise UndecidableDegree(f'no se decide la maximalidad en grado {I.degree}')


def apply_auto_ideal(action: CentralAction, k: int, I: CentralIdeal) -> CentralIdeal:
    """φ^k(I), renormalizado."""
    if k == 0 or I.is_zero:
        return I
    return CentralIdeal.of(action.apply(k, I.generator), I.laurent)
