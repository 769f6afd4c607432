"""
Automorfismos α de las álgebras base: escalados diagonales z_i ↦ c_i z_i
y la traslación t ↦ t + μ de un único generador polinomial.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from scalars.field import ONE, Scalar
from scalars.laurent import LaurentPoly

from .algebra import AlgebraSignature, BaseElem, central_project


class InvalidAutomorphism(ValueError):
    """El automorfismo no es válido para la signatura dada."""


@dataclass(frozen=True)
class CentralAction:
    """Restricción de α a la variable central: ``scale`` (X ↦ cX) o ``shift`` (X ↦ X + μ)."""
    kind: str
    value: Scalar

    def apply(self, k: int, poly: LaurentPoly) -> LaurentPoly:
        if k == 0:
            return poly
        if self.kind == 'scale':
            return poly.scale_variable(self.value ** k)
        return poly.shift_variable(self.value * k)


class AutomorphismSpec:
    """Base de los automorfismos soportados."""

    def validate(self, sig: AlgebraSignature) -> None:
        raise NotImplementedError

    def central_action(self, sig: AlgebraSignature) -> CentralAction:
        raise NotImplementedError

    def _apply(self, k: int, a: BaseElem) -> BaseElem:
        raise NotImplementedError


@dataclass(frozen=True)
class Scaling(AutomorphismSpec):
    factors: Tuple[Scalar, ...]

    def validate(self, sig: AlgebraSignature) -> None:
        if len(self.factors) != sig.n:
            raise InvalidAutomorphism(f'Scaling necesita {sig.n} factores, recibió {len(self.factors)}')
        if any(Scalar(c).is_zero for c in self.factors):
            raise InvalidAutomorphism('los factores de Scaling deben ser no nulos')

    def central_action(self, sig: AlgebraSignature) -> CentralAction:
        return CentralAction('scale', Scalar(self.factors[sig.central_variable]))

    def _apply(self, k: int, a: BaseElem) -> BaseElem:
        cache: Dict[Tuple[int, int], Scalar] = {}

        def power(index, e):
            key = (index, e)
            if key not in cache:
                cache[key] = Scalar(self.factors[index]) ** (k * e)
            return cache[key]

        terms = {}
        for exponents, coeff in a.terms.items():
            factor = ONE
            for index, e in enumerate(exponents):
                if e:
                    factor = factor * power(index, e)
            terms[exponents] = coeff * factor
        return BaseElem(a.sig, terms)

    def restrict(self, index: int) -> 'Scaling':
        """El escalado inducido tras eliminar la variable ``index``."""
        return Scaling(self.factors[:index] + self.factors[index + 1:])


@dataclass(frozen=True)
class Shift(AutomorphismSpec):
    mu: Scalar

    def validate(self, sig: AlgebraSignature) -> None:
        if sig.n != 1 or sig.invertible[0]:
            raise InvalidAutomorphism('Shift sólo actúa sobre un único generador polinomial')
        if sig.central_variable != 0:
            raise InvalidAutomorphism('Shift requiere que t sea la variable central')

    def central_action(self, sig: AlgebraSignature) -> CentralAction:
        return CentralAction('shift', Scalar(self.mu))

    def _apply(self, k: int, a: BaseElem) -> BaseElem:
        poly = central_project(a)
        return a.sig.from_central(poly.shift_variable(Scalar(self.mu) * k))


@lru_cache(maxsize=8192)
def _apply_cached(phi: AutomorphismSpec, k: int, a: BaseElem) -> BaseElem:
    return phi._apply(k, a)


def apply_auto(phi: AutomorphismSpec, k: int, a: BaseElem) -> BaseElem:
    """
    Aplica φ^k a ``a``; k puede ser negativo (β = α^{-1}).

    Examples:
        Shift(2), k=1: t ↦ t + 2.
        Toro cuántico, k=1: z_1 ↦ q^{-1} z_1.
    """
    phi.validate(a.sig)
    if k == 0 or a.is_zero:
        return a
    return _apply_cached(phi, k, a)


def restrict_to_central(phi: AutomorphismSpec, sig: AlgebraSignature) -> CentralAction:
    phi.validate(sig)
    if sig.central_variable is None:
        raise InvalidAutomorphism('la signatura no tiene variable central')
    return phi.central_action(sig)
