"""
Lectura de escalares escritos por el usuario (opción ``--lambda``).

Se aceptan racionales, el símbolo ``s`` y ``q`` (que vale s²), con
``+ - * / ^ **`` y paréntesis. El formato de salida de ``Scalar`` se lee
de vuelta con esta misma función.
"""
import re
from tokenize import TokenError

from sympy import Add, Symbol, expand, nan, oo, zoo
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import CoercionFailed

from .field import FIELD, S, ZERO, Scalar, ScalarParseError
from .laurent import LaurentPoly

_ALLOWED = re.compile(r'[0-9sq+\-*/^()\s]')
_NAME = re.compile(r'[a-z_]+')
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_scalar(text: str) -> Scalar:
    """
    Convierte una expresión en s y racionales a ``Scalar``.

    Args:
        text: expresión, p. ej. ``"s*(s^2+1)"`` o ``"9/4"``

    Returns:
        Scalar canónico

    Raises:
        ScalarParseError: con la posición del primer carácter problemático
    """
    if not text or not text.strip():
        raise ScalarParseError('expresión vacía', 0)

    for position, char in enumerate(text):
        if not _ALLOWED.match(char):
            raise ScalarParseError(f'carácter no permitido {char!r}', position)

    for match in _NAME.finditer(text):
        if match.group() not in ('s', 'q'):
            raise ScalarParseError(f'símbolo desconocido {match.group()!r}', match.start())

    try:
        expr = parse_expr(
            text,
            local_dict={'s': S, 'q': S ** 2},
            transformations=_TRANSFORMATIONS,
        )
    except SyntaxError as exc:
        offset = (exc.offset - 1) if exc.offset else None
        raise ScalarParseError(f'sintaxis inválida: {exc.msg}', offset) from exc
    except (TokenError, TypeError) as exc:
        raise ScalarParseError(f'expresión incompleta: {text!r}', len(text)) from exc

    if expr.free_symbols - {S}:
        raise ScalarParseError(f'la expresión usa símbolos ajenos a s: {expr}')
    if expr.has(zoo, oo, nan):
        raise ScalarParseError('división por cero en la expresión')

    try:
        return Scalar(FIELD.from_sympy(expr))
    except (CoercionFailed, ZeroDivisionError) as exc:
        raise ScalarParseError(f'{expr} no es un elemento de Q(s)') from exc


def parse_laurent(text: str, var: str = 'k') -> LaurentPoly:
    """
    Lee un polinomio de Laurent en ``var`` con coeficientes en Q(s).

    Examples:
        ``parse_laurent("k^-1")`` y ``parse_laurent("s*k^2 - 1/k")``.
    """
    if not text or not text.strip():
        raise ScalarParseError('expresión vacía', 0)

    allowed = re.compile(rf'[0-9sq{var}+\-*/^()\s]')
    for position, char in enumerate(text):
        if not allowed.match(char):
            raise ScalarParseError(f'carácter no permitido {char!r}', position)
    for match in _NAME.finditer(text):
        if match.group() not in ('s', 'q', var):
            raise ScalarParseError(f'símbolo desconocido {match.group()!r}', match.start())

    symbol = Symbol(var)
    try:
        expr = parse_expr(
            text,
            local_dict={'s': S, 'q': S ** 2, var: symbol},
            transformations=_TRANSFORMATIONS,
        )
    except SyntaxError as exc:
        offset = (exc.offset - 1) if exc.offset else None
        raise ScalarParseError(f'sintaxis inválida: {exc.msg}', offset) from exc
    except (TokenError, TypeError) as exc:
        raise ScalarParseError(f'expresión incompleta: {text!r}', len(text)) from exc
    if expr.has(zoo, oo, nan):
        raise ScalarParseError('división por cero en la expresión')

    terms = {}
    for term in Add.make_args(expand(expr)):
        coeff, exponent = term.as_coeff_exponent(symbol)
        if symbol in coeff.free_symbols or not exponent.is_Integer:
            raise ScalarParseError(f'{term} no es un monomio de Laurent en {var}')
        try:
            value = Scalar(FIELD.from_sympy(coeff))
        except (CoercionFailed, ZeroDivisionError) as exc:
            raise ScalarParseError(f'{coeff} no es un elemento de Q(s)') from exc
        terms[int(exponent)] = terms.get(int(exponent), ZERO) + value
    return LaurentPoly.from_terms(terms)
