"""
Testigos de la primera parte del espectro: polinomios p_m con certificado,
barridos de maximalidad y valores excepcionales de λ con su ideal M.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from django.core.exceptions import ValidationError
from sympy.polys.rings import ring as poly_ring

from ambiskew.identities import v_power
from basealg.algebra import substitute_variable
from idealkit.ideals import CentralIdeal, contains, ideal_sum, is_unit_ideal
from idealkit.residues import DegenerateModulus, residue_minpoly, resultant
from scalars.field import FIELD, Scalar, q_pow, s_pow
from scalars.laurent import LaurentPoly

from .central import CentralView
from .families import ADU, QTORUS, UQSL2, USL2, ExampleFamily, make_example

logger = logging.getLogger(__name__)


class NotExceptional(ValueError):
    """(u + λ) + α^m(u + λ) es el ideal unidad: λ no es excepcional para m."""


class WitnessFailure(Exception):
    """Uno o más testigos no se verificaron."""

    def __init__(self, message: str, failures: List[str]):
        super().__init__(message)
        self.failures = list(failures)


def require_spectral(family: ExampleFamily):
    if not family.is_spectral:
        raise ValidationError(
            f'{family.label} no tiene formas cerradas espectrales', code='not_spectral'
        )


@dataclass(frozen=True)
class PmWitness:
    m: int
    p: LaurentPoly
    modulus: CentralIdeal
    var: str

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'p_m': self.p.to_string('X'),
            'modulus': self.modulus.generator.to_string(self.var),
            'verified': True,
        }


def find_pm(family: ExampleFamily, m: int) -> PmWitness:
    """
    Polinomio p_m con p_m(u) ∈ v^(m)A, verificado por reducción.

    Examples:
        USL2, m → X + m²/4
        QTORUS(p), m → X² - q^{(p+1)/2}(q^{-m} + 2 + q^m)
    """
    require_spectral(family)
    if m < 1:
        raise ValueError('m debe ser >= 1')
    ring, _ = make_example(family)
    view = CentralView.for_family(family)
    modulus = view.ideal(v_power(ring, m))
    p = residue_minpoly(modulus.generator, view.u, view.laurent)
    if not contains(modulus, p.compose(view.u)):
        logger.error(f'{family.label} m={m}: p_m(u) no está en v^(m)A')
        raise WitnessFailure(f'certificado de p_{m} inválido', ['pm_membership'])
    logger.debug(f'{family.label} m={m}: p_m = {p.to_string("X")}')
    return PmWitness(m, p, modulus, view.var)


def format_bivariate(poly) -> str:
    """Polinomio de sympy en varias variables con coeficientes de Q(s)."""
    names = [str(symbol) for symbol in poly.ring.symbols]
    pieces = []
    for monom, coeff in sorted(poly.terms(), key=lambda item: item[0], reverse=True):
        mono = '*'.join(name if e == 1 else f'{name}^{e}' for name, e in zip(names, monom) if e)
        value = Scalar(coeff)
        text = str(value) if value.is_atomic else f'({value})'
        if not mono:
            pieces.append(text)
        elif value.is_one:
            pieces.append(mono)
        else:
            pieces.append(f'{text}*{mono}')
    if not pieces:
        return '0'
    text = pieces[0]
    for piece in pieces[1:]:
        text += f' - {piece[1:]}' if piece.startswith('-') else f' + {piece}'
    return text


@dataclass(frozen=True)
class BivariateWitness:
    m: int
    c_bar: LaurentPoly
    u_bar: LaurentPoly
    p: object
    leading_coefficient: Scalar

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'c_bar': self.c_bar.to_string('k'),
            'u_bar': self.u_bar.to_string('k'),
            'p': format_bivariate(self.p),
            'v_m_leading_coefficient': str(self.leading_coefficient),
            'verified': True,
        }


def _split_in_c(v):
    """v = a(k)·c + b(k); devuelve (a, b) como polinomios de Laurent en k."""
    linear, constant = {}, {}
    for (c_exp, k_exp), coeff in v.terms.items():
        if c_exp == 1:
            linear[k_exp] = coeff
        elif c_exp == 0:
            constant[k_exp] = coeff
        else:
            raise DegenerateModulus(f'v^(m) tiene grado {c_exp} en c')
    return LaurentPoly.from_terms(linear), LaurentPoly.from_terms(constant)


def _cleared(R, k, f: LaurentPoly):
    """(a, k^a·f) con a >= 0 mínimo para que k^a·f sea polinomio."""
    a = max(0, -f.min_exponent) if not f.is_zero else 0
    poly = R.zero
    for exponent, coeff in f.terms().items():
        poly += k ** (exponent + a) * coeff.frac
    return a, poly


def find_pm_bivariate(family: ExampleFamily, m: int) -> BivariateWitness:
    """
    Para ADU(n, f): p(X, Y) con p(u, c) ∈ v^(m)A.

    Resuelve v^(m) = 0 en c (grado uno, coeficiente unidad) para obtener
    c̄(k) y ū(k) = c̄k^n + f(k), y elimina k con la resultante de
    k^a(X - ū) y k^b(Y - c̄). El certificado sustituye c := c̄ en p(u, c).

    Examples:
        ADU(1, k^-1): c̄ = q^{-2m}k^{-2}, p ∝ X² - (q^m + q^{-m})²Y
    """
    if family.kind != ADU:
        raise ValidationError('find_pm_bivariate sólo aplica a ADU', code='invalid_family')
    if m < 1:
        raise ValueError('m debe ser >= 1')
    logger.info(f'{family.label}: buscando p_{m}(u, c)')
    ring, u = make_example(family)
    sig = ring.sig
    v = v_power(ring, m)
    linear, constant = _split_in_c(v)
    if linear.is_zero or len(linear.terms()) != 1:
        raise DegenerateModulus(f'el coeficiente de c en v^({m}) no es una unidad: {linear.to_string("k")}')
    c_bar = -constant * linear ** -1
    u_bar = c_bar * LaurentPoly.monomial(family.n) + family.f

    R, k, X, Y = poly_ring('k,X,Y', FIELD)
    a, u_cleared = _cleared(R, k, u_bar)
    b, c_cleared = _cleared(R, k, c_bar)
    p = resultant(k ** a * X - u_cleared, k ** b * Y - c_cleared, 'k')
    if not p or p.degree(0) <= 0:
        raise WitnessFailure(f'p_{m} no depende de X', ['pm_involves_x'])
    p = p.monic()

    c, u_elem = sig.gen(0), u
    evaluated = sig.zero()
    for (i, j), coeff in p.terms():
        evaluated = evaluated + Scalar(coeff) * (u_elem ** i) * (c ** j)
    reduced = substitute_variable(evaluated, 0, sig.drop_variable(0).from_central(c_bar))
    if not reduced.is_zero:
        logger.error(f'{family.label} m={m}: p(u, c̄) = {reduced}')
        raise WitnessFailure(f'certificado de p_{m}(u, c) inválido', ['pm_substitution'])

    leading = linear.coeff(family.n)
    logger.info(f'{family.label} m={m}: p = {format_bivariate(p)}; coeficiente de ck^n en v^(m): {leading}')
    return BivariateWitness(m, c_bar, u_bar, p, leading)


def maximality_scan(family: ExampleFamily, lam, m_max: int) -> List[int]:
    """
    Los m <= m_max con (u + λ) + α^m(u + λ) propio.

    Lista vacía: (z - λ)R es maximal hasta m_max.
    """
    require_spectral(family)
    if m_max < 1:
        raise ValueError('m_max debe ser >= 1')
    view = CentralView.for_family(family, lam)
    base = view.ideal(view.u)
    hits = [
        m for m in range(1, m_max + 1)
        if not is_unit_ideal(ideal_sum(base, view.translate(m, base)))
    ]
    logger.debug(f'{family.label} λ={Scalar(lam)}: barrido hasta {m_max} → {hits}')
    return hits


def exceptional_lambdas(family: ExampleFamily, m: int) -> List[Scalar]:
    """
    Formas cerradas de los λ excepcionales para m; el signo + va primero.

    Examples:
        USL2, m=3 → [9/4]
        QTORUS(3), m=1 → [s^3 + s, -s^3 - s]
    """
    require_spectral(family)
    if m < 1:
        raise ValueError('m debe ser >= 1')
    if family.kind == USL2:
        return [Scalar(Fraction(m * m, 4))]
    if family.kind == UQSL2:
        value = (q_pow(-m) + q_pow(m)) / (q_pow(1) - q_pow(-1)) ** 2
    else:
        value = s_pow((family.p - 2 * m + 1) // 2) * (q_pow(m) + 1)
    return [value, -value]


def uqsl2_mu(lam: Scalar, m: int) -> Scalar:
    """μ = λ(q - q^{-1})² / (q^{-1} + q^{2m-1}); vale ±q^{1-m} en los λ excepcionales."""
    return Scalar(lam) * (q_pow(1) - q_pow(-1)) ** 2 / (q_pow(-1) + q_pow(2 * m - 1))


def exceptional_ideal(family: ExampleFamily, lam, m: int) -> CentralIdeal:
    """
    M = (u + λ) + α^m(u + λ).

    Raises:
        NotExceptional: la suma es el ideal unidad.
    """
    require_spectral(family)
    view = CentralView.for_family(family, lam)
    base = view.ideal(view.u)
    M = ideal_sum(base, view.translate(m, base))
    if is_unit_ideal(M):
        raise NotExceptional(f'λ = {Scalar(lam)} no es excepcional para m = {m} en {family.label}')
    logger.debug(f'{family.label} λ={Scalar(lam)} m={m}: M = ({view.render(M)})')
    return M

