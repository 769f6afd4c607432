"""
Anillos polinomiales ambiskew R(A, α, v, ρ).

R es la extensión de Ore iterada A[y; α][x; α^{-1}, δ] con

    y a = α(a) y,    x a = α^{-1}(a) x,    x y = ρ y x + v,

v central en A. Los elementos se guardan en la forma normal
Σ x^i · a_ij · y^j.
"""
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

from basealg.algebra import AlgebraSignature, BaseElem, base_mul, is_central
from basealg.automorphisms import AutomorphismSpec, apply_auto
from scalars.field import ONE, Scalar

logger = logging.getLogger(__name__)

Key = Tuple[int, int]
# término de y^j x^k en forma normal: (potencia de x, potencia de y, coeficiente)
Rewrite = List[Tuple[int, int, BaseElem]]


class RingMismatch(ValueError):
    """Producto entre elementos de anillos distintos."""


class NotCentral(ValueError):
    """Se esperaba un elemento central de A."""


class NotSplitting(ValueError):
    """u no cumple v = u - ρα(u)."""


@dataclass(frozen=True)
class AmbiskewRing:
    sig: AlgebraSignature
    alpha: AutomorphismSpec
    v: BaseElem
    rho: Scalar = ONE
    label: str = ''
    _yx_memo: Dict[Key, Rewrite] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        self.alpha.validate(self.sig)
        if self.v.sig != self.sig:
            raise RingMismatch('v no pertenece al álgebra base')
        if not is_central(self.v):
            raise NotCentral(f'v = {self.v} no es central en A')
        if Scalar(self.rho).is_zero:
            raise ValueError('ρ debe ser no nulo')

    def element(self, terms: Mapping[Key, BaseElem]) -> 'OreElem':
        return OreElem(self, terms)

    def zero(self) -> 'OreElem':
        return OreElem(self, {})

    def one(self) -> 'OreElem':
        return self.coefficient(self.sig.one())

    def coefficient(self, a: BaseElem) -> 'OreElem':
        return OreElem(self, {(0, 0): a})

    def x(self, power: int = 1) -> 'OreElem':
        return OreElem(self, {(power, 0): self.sig.one()})

    def y(self, power: int = 1) -> 'OreElem':
        return OreElem(self, {(0, power): self.sig.one()})

    def term(self, i: int, a: BaseElem, j: int) -> 'OreElem':
        """x^i · a · y^j."""
        return OreElem(self, {(i, j): a})

    def alpha_power(self, k: int, a: BaseElem) -> BaseElem:
        return apply_auto(self.alpha, k, a)

    def yx_rewrite(self, j: int, k: int) -> Rewrite:
        """
        Forma normal de y^j x^k, memorizada por anillo.

        Sólo usa la relación x y = ρ y x + v:
            y^j x   = ρ^{-1} (y^{j-1} x · y - α^{j-1}(v) y^{j-1})
            y^j x^k = Σ x^a c · (y^b x^{k-1})
        """
        key = (j, k)
        cached = self._yx_memo.get(key)
        if cached is not None:
            return cached
        one = self.sig.one()
        if k == 0:
            result = [(0, j, one)]
        elif j == 0:
            result = [(k, 0, one)]
        elif k == 1:
            inverse_rho = ONE / Scalar(self.rho)
            collected: Dict[Key, BaseElem] = {}
            for a, b, c in self.yx_rewrite(j - 1, 1):
                _accumulate(collected, (a, b + 1), c * inverse_rho)
            _accumulate(collected, (0, j - 1), self.alpha_power(j - 1, self.v) * (-inverse_rho))
            result = _as_rewrite(collected)
        else:
            collected = {}
            for a, b, c in self.yx_rewrite(j, 1):
                for a2, b2, c2 in self.yx_rewrite(b, k - 1):
                    _accumulate(collected, (a + a2, b2), base_mul(self.alpha_power(a2, c), c2))
            result = _as_rewrite(collected)
        self._yx_memo[key] = result
        return result


def _accumulate(collected: Dict[Key, BaseElem], key: Key, value: BaseElem):
    if key in collected:
        collected[key] = collected[key] + value
    else:
        collected[key] = value


def _as_rewrite(collected: Dict[Key, BaseElem]) -> Rewrite:
    return [(a, b, c) for (a, b), c in sorted(collected.items()) if not c.is_zero]


class OreElem:
    """Elemento Σ x^i a_ij y^j de un anillo ambiskew."""

    __slots__ = ('ring', '_terms')

    def __init__(self, ring: AmbiskewRing, terms: Mapping[Key, BaseElem]):
        self.ring = ring
        self._terms = MappingProxyType({key: a for key, a in terms.items() if not a.is_zero})

    @property
    def terms(self) -> Mapping[Key, BaseElem]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: 'OreElem'):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch('los elementos pertenecen a anillos ambiskew distintos')

    def _combine(self, other: 'OreElem', sign: int) -> 'OreElem':
        self._check(other)
        collected = dict(self._terms)
        for key, a in other._terms.items():
            _accumulate(collected, key, a * sign)
        return OreElem(self.ring, collected)

    def __add__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return OreElem(self.ring, {key: -a for key, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, OreElem):
            return ore_mul(self, other)
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return OreElem(self.ring, {key: a * factor for key, a in self._terms.items()})

    def __rmul__(self, other):
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return OreElem(self.ring, {key: factor * a for key, a in self._terms.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('potencias negativas no soportadas')
        result = self.ring.one()
        for _ in range(exponent):
            result = ore_mul(result, self)
        return result

    def __eq__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        return self.ring == other.ring and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for (i, j) in sorted(self._terms):
            parts = []
            if i:
                parts.append('x' if i == 1 else f'x^{i}')
            parts.append(f'({self._terms[(i, j)]})')
            if j:
                parts.append('y' if j == 1 else f'y^{j}')
            pieces.append(' * '.join(parts))
        return ' + '.join(pieces)

    def __repr__(self):
        return f"OreElem('{self}')"


def ore_mul(e1: OreElem, e2: OreElem) -> OreElem:
    """
    Producto en forma normal:

        (x^i a y^j)(x^k b y^l) = Σ x^{i+k'} α^{k'}(a) c α^{j'}(b) y^{j'+l}

    sumando sobre los términos (k', j', c) de y^j x^k.
    """
    e1._check(e2)
    ring = e1.ring
    collected: Dict[Key, BaseElem] = {}
    for (i, j), a in e1.terms.items():
        for (k, l), b in e2.terms.items():
            for k2, j2, c in ring.yx_rewrite(j, k):
                coeff = base_mul(base_mul(ring.alpha_power(k2, a), c), ring.alpha_power(j2, b))
                _accumulate(collected, (i + k2, j2 + l), coeff)
    return OreElem(ring, collected)
