"""
Álgebras de Weyl generalizadas W(A, α, u).

W está generada sobre A por X e Y con

    Y a = α(a) Y,    X a = α^{-1}(a) X,    Y X = α(u),    X Y = u,

y tiene una Z-graduación W_0 = A, W_i = A Y^i, W_{-i} = A X^i. Un
elemento se guarda como {d: a_d} con coeficientes a la izquierda: a_d Y^d
para d > 0 y a_d X^{-d} para d < 0.
"""
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from ambiskew.identities import splitting_check
from ambiskew.rings import AmbiskewRing, NotCentral, OreElem, RingMismatch
from basealg.algebra import AlgebraSignature, BaseElem, base_mul, is_central
from basealg.automorphisms import AutomorphismSpec, apply_auto
from scalars.field import Scalar

logger = logging.getLogger(__name__)


class NotConformal(ValueError):
    """El anillo ambiskew no es conforme con ρ = 1."""


@dataclass(frozen=True)
class GwaRing:
    sig: AlgebraSignature
    alpha: AutomorphismSpec
    u: BaseElem
    label: str = ''
    _bridge_memo: Dict[Tuple[int, int], BaseElem] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        self.alpha.validate(self.sig)
        if self.u.sig != self.sig:
            raise RingMismatch('u no pertenece al álgebra base')
        if not is_central(self.u):
            raise NotCentral(f'u = {self.u} no es central en A')

    def element(self, components: Mapping[int, BaseElem]) -> 'GwaElem':
        return GwaElem(self, components)

    def zero(self) -> 'GwaElem':
        return GwaElem(self, {})

    def one(self) -> 'GwaElem':
        return self.coefficient(self.sig.one())

    def coefficient(self, a: BaseElem) -> 'GwaElem':
        return GwaElem(self, {0: a})

    def X(self, power: int = 1) -> 'GwaElem':
        return GwaElem(self, {-power: self.sig.one()})

    def Y(self, power: int = 1) -> 'GwaElem':
        return GwaElem(self, {power: self.sig.one()})

    def alpha_power(self, k: int, a: BaseElem) -> BaseElem:
        return apply_auto(self.alpha, k, a)

    def bridge(self, d1: int, d2: int) -> BaseElem:
        """
        w(d1, d2) con Z^{d1} Z^{d2} = w(d1, d2) Z^{d1+d2}, donde Z^d es Y^d
        o X^{-d} según el signo.

            Y^i X^j = α^i(u) Y^{i-1} X^{j-1}
            X^i Y^j = α^{-(i-1)}(u) X^{i-1} Y^{j-1}
        """
        if d1 == 0 or d2 == 0 or (d1 > 0) == (d2 > 0):
            return self.sig.one()
        key = (d1, d2)
        cached = self._bridge_memo.get(key)
        if cached is not None:
            return cached
        if d1 > 0:
            head = self.alpha_power(d1, self.u)
            result = base_mul(head, self.bridge(d1 - 1, d2 + 1))
        else:
            head = self.alpha_power(d1 + 1, self.u)
            result = base_mul(head, self.bridge(d1 + 1, d2 - 1))
        self._bridge_memo[key] = result
        return result


class GwaElem:
    """Elemento graduado Σ a_d Z^d de una GWA."""

    __slots__ = ('ring', '_components')

    def __init__(self, ring: GwaRing, components: Mapping[int, BaseElem]):
        self.ring = ring
        self._components = MappingProxyType({d: a for d, a in components.items() if not a.is_zero})

    @property
    def components(self) -> Mapping[int, BaseElem]:
        return self._components

    @property
    def is_zero(self) -> bool:
        return not self._components

    def degrees(self):
        return sorted(self._components)

    def _check(self, other: 'GwaElem'):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch('los elementos pertenecen a GWAs distintas')

    def _combine(self, other: 'GwaElem', sign: int) -> 'GwaElem':
        self._check(other)
        collected = dict(self._components)
        for d, a in other._components.items():
            collected[d] = collected[d] + a * sign if d in collected else a * sign
        return GwaElem(self.ring, collected)

    def __add__(self, other):
        if not isinstance(other, GwaElem):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, GwaElem):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return GwaElem(self.ring, {d: -a for d, a in self._components.items()})

    def __mul__(self, other):
        if isinstance(other, GwaElem):
            return gwa_mul(self, other)
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return GwaElem(self.ring, {d: a * factor for d, a in self._components.items()})

    def __rmul__(self, other):
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return GwaElem(self.ring, {d: factor * a for d, a in self._components.items()})

    def __eq__(self, other):
        if not isinstance(other, GwaElem):
            return NotImplemented
        return self.ring == other.ring and dict(self._components) == dict(other._components)

    def __hash__(self):
        return hash(frozenset(self._components.items()))

    def __str__(self):
        if not self._components:
            return '0'
        pieces = []
        for d in sorted(self._components, reverse=True):
            coeff = f'({self._components[d]})'
            if d == 0:
                pieces.append(coeff)
            elif d > 0:
                pieces.append(f'{coeff}*Y' if d == 1 else f'{coeff}*Y^{d}')
            else:
                pieces.append(f'{coeff}*X' if d == -1 else f'{coeff}*X^{-d}')
        return ' + '.join(pieces)

    def __repr__(self):
        return f"GwaElem('{self}')"


def gwa_mul(e1: GwaElem, e2: GwaElem) -> GwaElem:
    """
    Producto graduado:

        (a Z^{d1})(b Z^{d2}) = a α^{d1}(b) w(d1, d2) Z^{d1+d2}

    Examples:
        X · Y = u,  Y · X = α(u),  X² · Y² = u α^{-1}(u).
    """
    e1._check(e2)
    ring = e1.ring
    collected: Dict[int, BaseElem] = {}
    for d1, a in e1.components.items():
        for d2, b in e2.components.items():
            coeff = base_mul(base_mul(a, ring.alpha_power(d1, b)), ring.bridge(d1, d2))
            d = d1 + d2
            collected[d] = collected[d] + coeff if d in collected else coeff
    return GwaElem(ring, collected)


def d_element(ring: GwaRing, i: int) -> BaseElem:
    """d_i = α(u) α²(u) ⋯ α^i(u), la parte de grado cero de Y^i X^i."""
    if i < 1:
        raise ValueError('i debe ser >= 1')
    result = ring.sig.one()
    for k in range(1, i + 1):
        result = base_mul(result, ring.alpha_power(k, ring.u))
    return result


def e_element(ring: GwaRing, i: int) -> BaseElem:
    """e_i = u α^{-1}(u) ⋯ α^{-(i-1)}(u) = α^{-i}(d_i)."""
    if i < 1:
        raise ValueError('i debe ser >= 1')
    result = ring.sig.one()
    for k in range(i):
        result = base_mul(result, ring.alpha_power(-k, ring.u))
    return result


def _stepwise_power(ring: GwaRing, generator: GwaElem, m: int) -> GwaElem:
    result = ring.one()
    for _ in range(m):
        result = gwa_mul(result, generator)
    return result


def power_identities(ring: GwaRing, m: int) -> bool:
    """Verifica X^m Y^m = Π α^{-i}(u) e Y^m X^m = Π α^i(u) con gwa_mul."""
    if m < 1:
        raise ValueError('m debe ser >= 1')
    x_m = _stepwise_power(ring, ring.X(), m)
    y_m = _stepwise_power(ring, ring.Y(), m)
    first = gwa_mul(x_m, y_m) == ring.coefficient(e_element(ring, m))
    second = gwa_mul(y_m, x_m) == ring.coefficient(d_element(ring, m))
    logger.debug(f'{ring.label} m={m}: X^mY^m={first} Y^mX^m={second}')
    return first and second


def from_ambiskew(ring: AmbiskewRing, u: BaseElem, lam=0) -> GwaRing:
    """
    W(A, α, u + λ) ≃ R/(z - λ)R para un anillo conforme con ρ = 1.
    """
    if not Scalar(ring.rho).is_one:
        raise NotConformal(f'ρ = {ring.rho}: la identificación con una GWA requiere ρ = 1')
    if not splitting_check(ring, u):
        raise NotConformal(f'u = {u} no es un elemento separador de {ring.label or "R"}')
    lam = Scalar(lam)
    label = ring.label if lam.is_zero else f'{ring.label}, λ={lam}'
    return GwaRing(ring.sig, ring.alpha, u + lam, label)


def ore_to_gwa(ring: GwaRing, element: OreElem) -> GwaElem:
    """Imagen de Σ x^i a y^j por x ↦ X, y ↦ Y (la proyección R → R/(z-λ)R)."""
    if element.ring.sig != ring.sig:
        raise RingMismatch('el anillo ambiskew y la GWA tienen álgebras base distintas')
    result = ring.zero()
    for (i, j), a in element.terms.items():
        head = ring.element({-i: ring.alpha_power(-i, a)})
        result = result + gwa_mul(head, ring.Y(j))
    return result
