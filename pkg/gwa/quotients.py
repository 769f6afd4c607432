"""
Cocientes W/gW ≃ W(A/gA, ᾱ, ū) por un elemento central α-estable g.

Sólo se construyen cocientes realizables por sustitución: g = c·z_k + h
con c escalar, z_k una variable que conmuta con todas y h sin z_k. Entonces
A/gA es el álgebra sin z_k y la proyección es z_k ↦ -h/c.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ambiskew.rings import NotCentral, RingMismatch
from basealg.algebra import BaseElem, is_central, substitute_variable
from basealg.automorphisms import Scaling
from scalars.field import ONE, Scalar

from .rings import GwaElem, GwaRing

logger = logging.getLogger(__name__)


class NotStable(ValueError):
    """α(g) no es un múltiplo escalar de g."""


class DegenerateQuotient(ValueError):
    """El cociente es el anillo cero, o ū = 0 deja de ser regular."""


class NotRealizable(ValueError):
    """g es estable pero el cociente no se obtiene sustituyendo una variable."""


@dataclass(frozen=True)
class GwaQuotient:
    """La GWA cociente junto con los datos de la proyección canónica."""
    ring: GwaRing
    source: GwaRing
    generator: BaseElem
    index: int
    value: BaseElem

    def project_base(self, a: BaseElem) -> BaseElem:
        return substitute_variable(a, self.index, self.value)

    def project(self, element: GwaElem) -> GwaElem:
        return self.ring.element({d: self.project_base(a) for d, a in element.components.items()})


def stability_factor(ring: GwaRing, g: BaseElem) -> Optional[Scalar]:
    """c con α(g) = c·g, o None si no existe."""
    if g.is_zero:
        return ONE
    image = ring.alpha_power(1, g)
    exponents = next(iter(g.terms))
    factor = image.coeff(exponents) / g.coeff(exponents)
    return factor if image == g * factor else None


def _substitution(g: BaseElem) -> Optional[Tuple[int, BaseElem]]:
    sig = g.sig
    for index in range(sig.n):
        if not sig.commutes_with_all(index):
            continue
        carrying = [(e, c) for e, c in g.terms.items() if e[index]]
        if len(carrying) != 1:
            continue
        exponents, coeff = carrying[0]
        if exponents != sig.unit_vector(index):
            continue
        reduced = sig.drop_variable(index)
        rest = {e[:index] + e[index + 1:]: -c / coeff for e, c in g.terms.items() if not e[index]}
        value = BaseElem(reduced, rest)
        if sig.invertible[index] and len(value.terms) != 1:
            # z_k invertible exige que su imagen sea una unidad
            continue
        return index, value
    return None


def _is_unit(g: BaseElem) -> bool:
    if len(g.terms) != 1:
        return False
    exponents = next(iter(g.terms))
    return all(not e or g.sig.invertible[k] for k, e in enumerate(exponents))


def quotient_by_stable_central(ring: GwaRing, g: BaseElem) -> GwaQuotient:
    """
    Construye W/gW para g central con α(g) ∈ K^*·g.

    Raises:
        NotStable: α(g) no es múltiplo escalar de g.
        DegenerateQuotient: g es una unidad (cociente cero) o ū = 0.
        NotRealizable: no hay una variable que permita la sustitución.
    """
    if g.sig != ring.sig:
        raise RingMismatch('g no pertenece al álgebra base de la GWA')
    if g.is_scalar or _is_unit(g):
        raise DegenerateQuotient(f'g = {g} es constante o una unidad: el cociente es trivial')
    if not is_central(g):
        raise NotCentral(f'g = {g} no es central')
    factor = stability_factor(ring, g)
    if factor is None:
        raise NotStable(f'α({g}) = {ring.alpha_power(1, g)} no es múltiplo escalar de g')
    if not isinstance(ring.alpha, Scaling):
        raise NotRealizable('sólo los escalados inducen un automorfismo en el cociente')
    found = _substitution(g)
    if found is None:
        raise NotRealizable(f'g = {g} no es lineal en ninguna variable sustituible')
    index, value = found
    reduced_u = substitute_variable(ring.u, index, value)
    if reduced_u.is_zero:
        raise DegenerateQuotient('ū = 0 en el cociente')
    label = f'{ring.label}/({g})' if ring.label else ''
    quotient = GwaRing(value.sig, ring.alpha.restrict(index), reduced_u, label)
    logger.debug(f'cociente por {g}: {ring.sig.names[index]} ↦ {value}, ū = {reduced_u}')
    return GwaQuotient(ring=quotient, source=ring, generator=g, index=index, value=value)
