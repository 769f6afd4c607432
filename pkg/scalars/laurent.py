"""
Polinomios de Laurent univariados sobre F = Q(s).

Representan los elementos del subanillo central univariado (t, z_p o k)
de las álgebras base. Un ``LaurentPoly`` es X^shift * poly con ``poly``
un polinomio de sympy en X sobre F cuyo término constante es no nulo.
"""
from typing import Dict, Mapping, Optional

from sympy.polys.rings import ring

from .field import FIELD, ONE, Scalar, ZERO, format_terms

POLY_RING, X = ring('X', FIELD)


def _lowest_degree(poly) -> int:
    return min(monom[0] for monom in poly.monoms())


def _drop_low_powers(poly, k: int):
    return POLY_RING.from_dict({(monom[0] - k,): coeff for monom, coeff in poly.terms()})


class LaurentPoly:
    """Polinomio de Laurent inmutable en una variable."""

    __slots__ = ('poly', 'shift')

    def __init__(self, poly=None, shift: int = 0):
        if poly is None:
            poly = POLY_RING.zero
        if not poly:
            shift = 0
        else:
            low = _lowest_degree(poly)
            if low:
                poly = _drop_low_powers(poly, low)
                shift += low
        self.poly = poly
        self.shift = shift

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> 'LaurentPoly':
        """Construye desde {exponente: coeficiente}; admite exponentes negativos."""
        terms = {e: c for e, c in terms.items() if not Scalar(c).is_zero}
        if not terms:
            return cls()
        low = min(terms)
        poly = POLY_RING.from_dict({(e - low,): Scalar(c).frac for e, c in terms.items()})
        return cls(poly, low)

    @classmethod
    def constant(cls, value) -> 'LaurentPoly':
        return cls.from_terms({0: Scalar(value)})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> 'LaurentPoly':
        return cls.from_terms({exponent: Scalar(coeff)})

    @classmethod
    def from_poly(cls, poly) -> 'LaurentPoly':
        return cls(poly, 0)

    def terms(self) -> Dict[int, Scalar]:
        return {monom[0] + self.shift: Scalar(coeff) for monom, coeff in self.poly.terms()}

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def min_exponent(self) -> Optional[int]:
        return None if self.is_zero else self.shift

    @property
    def max_exponent(self) -> Optional[int]:
        return None if self.is_zero else self.shift + self.poly.degree()

    @property
    def is_polynomial(self) -> bool:
        """True si no tiene exponentes negativos."""
        return self.is_zero or self.shift >= 0

    def to_poly(self):
        """Como polinomio de sympy; exige exponentes no negativos."""
        if not self.is_polynomial:
            raise ValueError(f'{self} tiene exponentes negativos')
        return self.poly * X ** self.shift

    def coeff(self, exponent: int) -> Scalar:
        return self.terms().get(exponent, ZERO)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly.from_terms(_merge(self.terms(), other.terms(), 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly.from_terms(_merge(self.terms(), other.terms(), -1))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return LaurentPoly(-self.poly, self.shift)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self.poly.terms()) != 1:
                raise ValueError(f'{self} no es una unidad')
            coeff = Scalar(self.poly.LC)
            return LaurentPoly.monomial(self.shift * exponent, coeff ** exponent)
        return LaurentPoly(self.poly ** exponent, self.shift * exponent)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.shift == other.shift and (self.poly - other.poly).is_zero

    def __hash__(self):
        return hash(tuple(sorted(self.terms().items())))

    def scale_variable(self, factor: Scalar) -> 'LaurentPoly':
        """Sustituye X por factor*X."""
        return LaurentPoly.from_terms({e: c * factor ** e for e, c in self.terms().items()})

    def shift_variable(self, amount: Scalar) -> 'LaurentPoly':
        """Sustituye X por X + amount; sólo para polinomios."""
        return LaurentPoly(self.to_poly().shift(Scalar(amount).frac), 0)

    def evaluate(self, point: Scalar) -> Scalar:
        total = ZERO
        for exponent, coeff in self.terms().items():
            total = total + coeff * Scalar(point) ** exponent
        return total

    def compose(self, inner: 'LaurentPoly') -> 'LaurentPoly':
        """p(inner) para p con exponentes no negativos."""
        result = LaurentPoly()
        for exponent, coeff in self.terms().items():
            if exponent < 0:
                raise ValueError('composición con exponentes negativos')
            result = result + inner ** exponent * LaurentPoly.constant(coeff)
        return result

    def to_string(self, var: str = 'X') -> str:
        items = sorted(self.terms().items(), key=lambda item: -item[0])
        if all(c.is_rational for _, c in items):
            return format_terms([(e, c.rational_value()) for e, c in items], var)
        pieces = []
        for exponent, coeff in items:
            mono = '' if exponent == 0 else (var if exponent == 1 else f'{var}^{exponent}')
            if not mono:
                pieces.append(str(coeff) if coeff.is_atomic else f'({coeff})')
            elif coeff.is_one:
                pieces.append(mono)
            elif (-coeff).is_one:
                pieces.append(f'-{mono}')
            else:
                text = str(coeff) if coeff.is_atomic else f'({coeff})'
                pieces.append(f'{text}*{mono}')
        if not pieces:
            return '0'
        text = pieces[0]
        for piece in pieces[1:]:
            text += f' - {piece[1:]}' if piece.startswith('-') else f' + {piece}'
        return text

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly('{self}')"


def _merge(left: Dict[int, Scalar], right: Dict[int, Scalar], sign: int) -> Dict[int, Scalar]:
    merged = dict(left)
    for exponent, coeff in right.items():
        merged[exponent] = merged.get(exponent, ZERO) + coeff * sign
    return merged


def _coerce(value) -> Optional[LaurentPoly]:
    if isinstance(value, LaurentPoly):
        return value
    try:
        return LaurentPoly.constant(Scalar(value))
    except (TypeError, ValueError):
        return None


LAURENT_ONE = LaurentPoly.constant(ONE)
LAURENT_X = LaurentPoly.monomial(1)
