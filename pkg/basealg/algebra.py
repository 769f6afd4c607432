"""
Álgebras base A de las familias de ejemplo.

Una ``AlgebraSignature`` describe n generadores z_1..z_n (algunos
invertibles) con relaciones z_i z_j = q_ij z_j z_i para i > j. Los
elementos (``BaseElem``) son combinaciones finitas de monomios z^e con
coeficientes en Q(s), en forma normal con las variables ordenadas.
"""
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

from scalars.field import ONE, ZERO, Scalar
from scalars.laurent import LaurentPoly

Exponents = Tuple[int, ...]


class InvalidSignature(ValueError):
    """Tabla de conmutación o variable central inconsistente."""


class SignatureMismatch(ValueError):
    """Operación entre elementos de álgebras distintas."""


@dataclass(frozen=True)
class AlgebraSignature:
    """
    Presentación de un álgebra base.

    ``commutation`` guarda sólo las entradas q_ij distintas de 1 como
    ternas (i, j, q_ij) con i > j e índices desde cero.
    """
    names: Tuple[str, ...]
    invertible: Tuple[bool, ...]
    commutation: Tuple[Tuple[int, int, Scalar], ...] = ()
    central_variable: Optional[int] = 0
    label: str = ''

    def __post_init__(self):
        if len(self.names) != len(self.invertible):
            raise InvalidSignature('names e invertible deben tener la misma longitud')
        for i, j, q_ij in self.commutation:
            if not (0 <= j < i < self.n):
                raise InvalidSignature(f'índices de conmutación inválidos ({i}, {j})')
            if Scalar(q_ij).is_zero:
                raise InvalidSignature(f'q_{i}{j} no puede ser cero')
            if self.central_variable in (i, j) and not Scalar(q_ij).is_one:
                raise InvalidSignature(
                    f'la variable central {self.names[self.central_variable]} no conmuta con las demás'
                )
        if self.central_variable is not None and not (0 <= self.central_variable < self.n):
            raise InvalidSignature('variable central fuera de rango')

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def _table(self) -> Dict[Tuple[int, int], Scalar]:
        return {(i, j): Scalar(q_ij) for i, j, q_ij in self.commutation if not Scalar(q_ij).is_one}

    @property
    def is_commutative(self) -> bool:
        return not self._table

    def q(self, i: int, j: int) -> Scalar:
        """q_ij para i > j."""
        return self._table.get((i, j), ONE)

    def commutes_with_all(self, index: int) -> bool:
        return all(index not in pair for pair in self._table)

    def unit_vector(self, index: int, power: int = 1) -> Exponents:
        return tuple(power if k == index else 0 for k in range(self.n))

    def zero(self) -> 'BaseElem':
        return BaseElem(self, {})

    def one(self) -> 'BaseElem':
        return self.scalar(ONE)

    def scalar(self, value) -> 'BaseElem':
        return BaseElem(self, {(0,) * self.n: Scalar(value)})

    def monomial(self, exponents: Exponents, coeff=ONE) -> 'BaseElem':
        return BaseElem(self, {tuple(exponents): Scalar(coeff)})

    def gen(self, index: int, power: int = 1) -> 'BaseElem':
        return self.monomial(self.unit_vector(index, power))

    def var(self, name: str, power: int = 1) -> 'BaseElem':
        return self.gen(self.names.index(name), power)

    def generators(self) -> List['BaseElem']:
        """Generadores como álgebra, incluyendo inversos de las variables invertibles."""
        gens = [self.gen(i) for i in range(self.n)]
        gens += [self.gen(i, -1) for i in range(self.n) if self.invertible[i]]
        return gens

    def from_central(self, poly: LaurentPoly) -> 'BaseElem':
        """Eleva un polinomio en la variable central a un elemento de A."""
        if self.central_variable is None:
            raise InvalidSignature(f'{self.label or self.names} no tiene variable central')
        return BaseElem(self, {
            self.unit_vector(self.central_variable, e): c for e, c in poly.terms().items()
        })

    def drop_variable(self, index: int) -> 'AlgebraSignature':
        """Signatura sin la variable ``index`` (para cocientes por sustitución)."""
        def reindex(k):
            return k if k < index else k - 1

        commutation = tuple(
            (reindex(i), reindex(j), q_ij) for i, j, q_ij in self.commutation if index not in (i, j)
        )
        central = self.central_variable
        if central == index:
            central = 0 if self.n > 1 else None
        elif central is not None:
            central = reindex(central)
        return AlgebraSignature(
            names=self.names[:index] + self.names[index + 1:],
            invertible=self.invertible[:index] + self.invertible[index + 1:],
            commutation=commutation,
            central_variable=central,
            label=f'{self.label}/({self.names[index]})' if self.label else '',
        )


class BaseElem:
    """Elemento inmutable de un álgebra base, en forma normal."""

    __slots__ = ('sig', '_terms', '_hash')

    def __init__(self, sig: AlgebraSignature, terms: Mapping[Exponents, Scalar]):
        cleaned: Dict[Exponents, Scalar] = {}
        for exponents, coeff in terms.items():
            coeff = Scalar(coeff)
            if coeff.is_zero:
                continue
            if len(exponents) != sig.n:
                raise SignatureMismatch(f'vector de exponentes {exponents} no tiene longitud {sig.n}')
            for k, e in enumerate(exponents):
                if e < 0 and not sig.invertible[k]:
                    raise ValueError(f'{sig.names[k]} no es invertible y aparece con exponente {e}')
            cleaned[tuple(exponents)] = coeff
        self.sig = sig
        self._terms = MappingProxyType(cleaned)
        self._hash = None

    @property
    def terms(self) -> Mapping[Exponents, Scalar]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_scalar(self) -> bool:
        return all(not any(e) for e in self._terms)

    def scalar_value(self) -> Scalar:
        if not self.is_scalar:
            raise ValueError(f'{self} no es un escalar')
        return self._terms.get((0,) * self.sig.n, ZERO)

    def coeff(self, exponents: Exponents) -> Scalar:
        return self._terms.get(tuple(exponents), ZERO)

    def _check(self, other: 'BaseElem'):
        if other.sig is not self.sig and other.sig != self.sig:
            raise SignatureMismatch(f'{self.sig.label} vs {other.sig.label}')

    def _combine(self, other: 'BaseElem', sign: int) -> 'BaseElem':
        self._check(other)
        merged = dict(self._terms)
        for exponents, coeff in other._terms.items():
            merged[exponents] = merged.get(exponents, ZERO) + coeff * sign
        return BaseElem(self.sig, merged)

    def _lift(self, value) -> Optional['BaseElem']:
        if isinstance(value, BaseElem):
            return value
        try:
            return self.sig.scalar(value)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self):
        return BaseElem(self.sig, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, BaseElem):
            return base_mul(self, other)
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return BaseElem(self.sig, {e: c * factor for e, c in self._terms.items()})

    def __rmul__(self, other):
        try:
            factor = Scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return BaseElem(self.sig, {e: factor * c for e, c in self._terms.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError(f'{self} no es una unidad')
            (exponents, coeff), = self._terms.items()
            inverse = self.sig.monomial(tuple(-e for e in exponents))
            # (c z^e)^{-1} = c^{-1} z^{-e} / factor(e, -e)
            inverse = inverse * (ONE / (coeff * monomial_factor(self.sig, exponents, tuple(-e for e in exponents))))
            return inverse ** -exponent
        result = self.sig.one()
        base = self
        while exponent:
            if exponent & 1:
                result = base_mul(result, base)
            base = base_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BaseElem):
            return self.sig == other.sig and dict(self._terms) == dict(other._terms)
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return dict(self._terms) == dict(lifted._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for exponents in sorted(self._terms):
            pieces.append(_format_term(self.sig, exponents, self._terms[exponents]))
        return ' + '.join(pieces)

    def __repr__(self):
        return f"BaseElem('{self}')"


def _format_monomial(sig: AlgebraSignature, exponents: Exponents) -> str:
    parts = []
    for name, e in zip(sig.names, exponents):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f'{name}^{e}')
    return '*'.join(parts)


def _format_term(sig: AlgebraSignature, exponents: Exponents, coeff: Scalar) -> str:
    mono = _format_monomial(sig, exponents)
    if not mono:
        return str(coeff)
    if coeff.is_one:
        return mono
    if (-coeff).is_one:
        return f'-{mono}'
    text = str(coeff) if coeff.is_atomic else f'({coeff})'
    return f'{text}*{mono}'


def monomial_factor(sig: AlgebraSignature, left: Exponents, right: Exponents) -> Scalar:
    """λ con z^left · z^right = λ z^(left+right), λ = Π_{i>j} q_ij^(left_i * right_j)."""
    factor = ONE
    for (i, j), q_ij in sig._table.items():
        power = left[i] * right[j]
        if power:
            factor = factor * q_ij ** power
    return factor


def base_mul(a: BaseElem, b: BaseElem) -> BaseElem:
    """
    Producto en forma normal.

    Examples:
        En el toro cuántico con p=3: z_2 · z_1 = q^{-1} z_1 z_2.
    """
    a._check(b)
    sig = a.sig
    result: Dict[Exponents, Scalar] = {}
    commutative = sig.is_commutative
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            exponents = tuple(x + y for x, y in zip(ea, eb))
            coeff = ca * cb
            if not commutative:
                coeff = coeff * monomial_factor(sig, ea, eb)
            result[exponents] = result.get(exponents, ZERO) + coeff
    return BaseElem(sig, result)


def is_central(a: BaseElem) -> bool:
    """True si ``a`` conmuta con todos los generadores."""
    sig = a.sig
    if sig.is_commutative:
        return True
    for exponents in a.terms:
        for index in range(sig.n):
            unit = sig.unit_vector(index)
            if monomial_factor(sig, exponents, unit) != monomial_factor(sig, unit, exponents):
                return False
    return True


def central_project(a: BaseElem) -> Optional[LaurentPoly]:
    """
    Vista de ``a`` como polinomio de Laurent en la variable central.

    Returns:
        El polinomio, o None si algún término usa otra variable.
    """
    central = a.sig.central_variable
    if central is None:
        return None
    terms = {}
    for exponents, coeff in a.terms.items():
        if any(e for k, e in enumerate(exponents) if k != central):
            return None
        terms[exponents[central]] = coeff
    return LaurentPoly.from_terms(terms)


def substitute_variable(a: BaseElem, index: int, value: BaseElem) -> BaseElem:
    """
    Sustituye z_index por ``value`` (elemento de la signatura sin z_index).

    Requiere que z_index conmute con todas las variables; exponentes
    negativos exigen que ``value`` sea una unidad.
    """
    sig = a.sig
    if not sig.commutes_with_all(index):
        raise SignatureMismatch(f'{sig.names[index]} no conmuta con todas las variables')
    target = value.sig
    powers: Dict[int, BaseElem] = {}
    result = target.zero()
    for exponents, coeff in a.terms.items():
        k = exponents[index]
        if k not in powers:
            powers[k] = value ** k
        rest = exponents[:index] + exponents[index + 1:]
        result = result + coeff * base_mul(target.monomial(rest), powers[k])
    return result
