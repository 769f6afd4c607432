"""
Aritmética exacta en el cuerpo F = Q(s).

Todas las familias q-deformadas usan q = s², de modo que las potencias
semienteras de q que aparecen en los valores excepcionales son potencias
enteras de s. Los elementos se guardan como fracciones de sympy sobre
``QQ.frac_field(s)`` en forma canónica: numerador y denominador coprimos
y denominador mónico.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from sympy import Basic, Symbol, integer_nthroot
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed

S = Symbol('s')
FIELD = QQ.frac_field(S)
_FRAC_FIELD = FIELD.field


class ScalarDivisionError(ZeroDivisionError):
    """División por el escalar cero."""


class ScalarParseError(ValueError):
    """Expresión escalar inválida; ``position`` apunta al carácter culpable."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f'{message} (posición {position})'
        super().__init__(message)
        self.position = position


ScalarLike = Union['Scalar', int, Fraction]


def _canonical(frac):
    """Divide numerador y denominador por el coeficiente principal del denominador."""
    lc = frac.denom.LC
    if lc == 1:
        return frac
    return _FRAC_FIELD.raw_new(frac.numer.quo_ground(lc), frac.denom.quo_ground(lc))


def _to_frac(value):
    if isinstance(value, Scalar):
        return value._frac
    if isinstance(value, bool):
        raise TypeError('bool no es un escalar')
    if isinstance(value, int):
        return _canonical(FIELD.convert(value))
    if isinstance(value, Fraction):
        return _canonical(FIELD.convert_from(QQ(value.numerator, value.denominator), QQ))
    if FIELD.of_type(value):
        return _canonical(value)
    if isinstance(value, Basic):
        try:
            return _canonical(FIELD.from_sympy(value))
        except CoercionFailed as exc:
            raise ValueError(f'{value} no pertenece a Q(s)') from exc
    raise TypeError(f'No se puede convertir {type(value).__name__} a Scalar')


def to_fraction(coeff) -> Fraction:
    """Convierte un racional de sympy (PythonMPQ o mpq) a ``Fraction``."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _monomial(exponent: int, var: str) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return var
    return f'{var}^{exponent}'


def format_terms(terms: List[Tuple[int, Fraction]], var: str) -> str:
    """
    Formatea una lista de términos (exponente, coeficiente racional).

    Los términos se escriben en el orden recibido, p. ej. ``s^2 + 1`` o
    ``-1/4*t^2 + 1/2*t - 1/4``.
    """
    if not terms:
        return '0'
    pieces = []
    for exponent, coeff in terms:
        mono = _monomial(exponent, var)
        magnitude = abs(coeff)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f'{magnitude}*{mono}'
        if not pieces:
            pieces.append(f'-{body}' if coeff < 0 else body)
        else:
            pieces.append(f' - {body}' if coeff < 0 else f' + {body}')
    return ''.join(pieces)


def _poly_terms(poly) -> List[Tuple[int, Fraction]]:
    items = [(monom[0], to_fraction(coeff)) for monom, coeff in poly.terms()]
    return sorted(items, key=lambda item: -item[0])


class Scalar:
    """Elemento inmutable de Q(s)."""

    __slots__ = ('_frac',)

    def __init__(self, value: ScalarLike = 0):
        self._frac = _to_frac(value)

    @classmethod
    def from_fraction(cls, numerator: int, denominator: int = 1) -> 'Scalar':
        if denominator == 0:
            raise ScalarDivisionError('denominador cero')
        return cls(Fraction(numerator, denominator))

    @property
    def frac(self):
        """Elemento subyacente de ``QQ.frac_field(s)``."""
        return self._frac

    @property
    def numerator(self):
        return self._frac.numer

    @property
    def denominator(self):
        return self._frac.denom

    @property
    def is_zero(self) -> bool:
        return not self._frac

    @property
    def is_one(self) -> bool:
        return self._frac == _FRAC_FIELD.one

    @property
    def is_rational(self) -> bool:
        return self._frac.numer.is_ground and self._frac.denom.is_ground

    @property
    def is_atomic(self) -> bool:
        """True si se puede escribir sin paréntesis como factor."""
        return len(self._frac.numer.terms()) <= 1 and self._frac.denom == _FRAC_FIELD.ring.one

    def to_expr(self):
        return FIELD.to_sympy(self._frac)

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f'{self} no es racional')
        return to_fraction(self._frac.numer.LC) if self._frac.numer else Fraction(0)

    def _wrap(self, frac) -> 'Scalar':
        result = Scalar.__new__(Scalar)
        result._frac = _canonical(frac)
        return result

    def __add__(self, other):
        try:
            return self._wrap(self._frac + _to_frac(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self._wrap(self._frac - _to_frac(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return self._wrap(_to_frac(other) - self._frac)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return self._wrap(self._frac * _to_frac(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            divisor = _to_frac(other)
        except TypeError:
            return NotImplemented
        if not divisor:
            raise ScalarDivisionError(f'división de {self} por cero')
        return self._wrap(self._frac / divisor)

    def __rtruediv__(self, other):
        try:
            dividend = _to_frac(other)
        except TypeError:
            return NotImplemented
        if not self._frac:
            raise ScalarDivisionError('división por cero')
        return self._wrap(dividend / self._frac)

    def __neg__(self):
        return self._wrap(-self._frac)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self._frac:
                raise ScalarDivisionError('potencia negativa de cero')
            return self._wrap(_FRAC_FIELD.one / self._frac ** -exponent)
        return self._wrap(self._frac ** exponent)

    def __bool__(self):
        return bool(self._frac)

    def __eq__(self, other):
        try:
            other_frac = _to_frac(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._frac == other_frac

    def __hash__(self):
        if self.is_rational:
            return hash(self.rational_value())
        return hash(self._frac)

    def __str__(self):
        numer = format_terms(_poly_terms(self._frac.numer), 's')
        denom_terms = _poly_terms(self._frac.denom)
        if denom_terms == [(0, Fraction(1))]:
            return numer
        if len(self._frac.numer.terms()) > 1:
            numer = f'({numer})'
        denom = format_terms(denom_terms, 's')
        if len(denom_terms) > 1:
            denom = f'({denom})'
        return f'{numer}/{denom}'

    def __repr__(self):
        return f"Scalar('{self}')"

    def __reduce__(self):
        return (_from_string, (str(self),))


def _from_string(text: str) -> Scalar:
    from .parsing import parse_scalar

    return parse_scalar(text)


ZERO = Scalar(0)
ONE = Scalar(1)


@lru_cache(maxsize=512)
def s_pow(k: int) -> Scalar:
    """s^k para cualquier entero k."""
    return Scalar(_FRAC_FIELD.gens[0]) ** k


def q_pow(j: int) -> Scalar:
    """q^j = s^(2j)."""
    return s_pow(2 * j)


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num_root, num_exact = integer_nthroot(value.numerator, 2)
    den_root, den_exact = integer_nthroot(value.denominator, 2)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num_root), int(den_root))


def _poly_sqrt(poly) -> Optional[Tuple[Fraction, object]]:
    """
    Raíz cuadrada de un polinomio de Q[s] salvo constante.

    Returns:
        (contenido, raíz) con poly = contenido * raíz², o None si algún
        factor irreducible aparece con multiplicidad impar.
    """
    content, factors = poly.factor_list()
    root = poly.ring.one
    for factor, multiplicity in factors:
        if multiplicity % 2:
            return None
        root *= factor ** (multiplicity // 2)
    return to_fraction(content), root


def is_square(a: Scalar) -> Optional[Scalar]:
    """
    Decide si ``a`` es un cuadrado en Q(s).

    Args:
        a: escalar a probar

    Returns:
        r con r² = a, o None si ``a`` no es un cuadrado

    Examples:
        >>> is_square(s_pow(4))
        Scalar('s^2')
        >>> is_square(s_pow(1)) is None
        True
    """
    if a.is_zero:
        return ZERO
    numer = _poly_sqrt(a.numerator)
    denom = _poly_sqrt(a.denominator)
    if numer is None or denom is None:
        return None
    content = numer[0] / denom[0]
    unit = _rational_sqrt(content)
    if unit is None:
        return None
    return Scalar(_FRAC_FIELD.new(numer[1], denom[1])) * Scalar(unit)
