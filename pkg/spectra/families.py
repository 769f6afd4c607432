"""
Familias de ejemplo: U(sl2), U_q(sl2), toros cuánticos y álgebras down-up
aumentadas, con sus elementos separadores y metadatos estructurales.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from django.core.exceptions import ValidationError

from ambiskew.rings import AmbiskewRing
from basealg.algebra import AlgebraSignature, BaseElem
from basealg.automorphisms import Scaling, apply_auto
from basealg.presets import (
    down_up_alpha, down_up_base, laurent_line, polynomial_line,
    quantum_torus, quantum_torus_alpha, uqsl2_alpha, usl2_alpha,
)
from gwa.rings import GwaRing
from scalars.field import ONE, Scalar, ScalarParseError, q_pow
from scalars.laurent import LaurentPoly
from scalars.parsing import parse_laurent

USL2 = 'usl2'
UQSL2 = 'uqsl2'
QTORUS = 'qtorus'
ADU = 'adu'

KIND_CHOICES = (USL2, UQSL2, QTORUS, ADU)
SPECTRAL_KINDS = (USL2, UQSL2, QTORUS)

# Hipótesis estructurales que no se calculan; se citan en los informes.
STRUCTURAL_FACTS: Dict[str, Dict[str, str]] = {
    USL2: {
        'alpha_simple': 'K[t] es α-simple para α(t) = t + 2 (característica cero)',
        'outer_powers': 'ninguna potencia no trivial de α es interior',
        'simple_ore_quotient': 'A/M ≃ K es un dominio de Ore a la derecha simple',
    },
    UQSL2: {
        'alpha_simple': 'K[t^±1] es α-simple para α(t) = q²t con q no raíz de la unidad',
        'outer_powers': 'ninguna potencia no trivial de α es interior',
        'simple_ore_quotient': 'A/M ≃ K es un dominio de Ore a la derecha simple',
    },
    QTORUS: {
        'alpha_simple': 'el toro cuántico es α-simple',
        'outer_powers': 'ninguna potencia no trivial de α es interior',
        'simple_ore_quotient': 'A/(z_p - μ)A es un toro cuántico simple, dominio de Ore a la derecha',
    },
    ADU: {
        'alpha_simple': 'K[c, k^±1] no es α-simple (c genera un ideal α-estable)',
        'outer_powers': 'ninguna potencia no trivial de α es interior',
        'simple_ore_quotient': 'no aplica: la familia no tiene informe espectral',
    },
}


@dataclass(frozen=True)
class ExampleFamily:
    """
    Selector de familia con sus parámetros.

    ``p`` sólo aplica a QTORUS (impar); ``n`` y ``f`` a ADU, con f un
    polinomio de Laurent en k cuyo coeficiente en k^n es cero.
    """
    kind: str
    p: Optional[int] = None
    n: Optional[int] = None
    f: Optional[LaurentPoly] = None

    def __post_init__(self):
        if self.kind not in KIND_CHOICES:
            raise ValidationError(f'Familia desconocida: {self.kind}', code='invalid_family')
        if self.kind == QTORUS:
            if self.p is None or self.p < 1 or self.p % 2 == 0:
                raise ValidationError(f'p debe ser un entero positivo impar (recibido {self.p})', code='invalid_p')
        if self.kind == ADU:
            if not self.n:
                raise ValidationError('n debe ser un entero no nulo', code='invalid_n')
            if self.f is None:
                raise ValidationError('ADU necesita el polinomio f(k)', code='invalid_f')
            if not self.f.coeff(self.n).is_zero:
                raise ValidationError(f'f debe tener a_{self.n} = 0 (recibido {self.f.coeff(self.n)})', code='invalid_f')

    @classmethod
    def usl2(cls) -> 'ExampleFamily':
        return cls(USL2)

    @classmethod
    def uqsl2(cls) -> 'ExampleFamily':
        return cls(UQSL2)

    @classmethod
    def qtorus(cls, p: int) -> 'ExampleFamily':
        return cls(QTORUS, p=p)

    @classmethod
    def adu(cls, n: int, f: LaurentPoly) -> 'ExampleFamily':
        return cls(ADU, n=n, f=f)

    @property
    def is_spectral(self) -> bool:
        return self.kind in SPECTRAL_KINDS

    @property
    def d(self) -> Optional[int]:
        """Número esperado de primos de altura dos por cada m."""
        return {USL2: 1, UQSL2: 2, QTORUS: 2}.get(self.kind)

    @property
    def label(self) -> str:
        if self.kind == QTORUS:
            return f'QTorus({self.p})'
        if self.kind == ADU:
            return f'ADU({self.n}, {self.f.to_string("k")})'
        return {USL2: 'U(sl2)', UQSL2: 'U_q(sl2)'}[self.kind]

    @property
    def parameters(self) -> Dict[str, object]:
        params: Dict[str, object] = {}
        if self.kind == QTORUS:
            params['p'] = self.p
        if self.kind == ADU:
            params['n'] = self.n
            params['f'] = self.f.to_string('k')
        return params

    @property
    def structural_facts(self) -> Dict[str, str]:
        return dict(STRUCTURAL_FACTS[self.kind])


def _usl2() -> Tuple[AmbiskewRing, BaseElem]:
    sig = polynomial_line()
    t = sig.gen(0)
    u = Scalar(Fraction(-1, 4)) * (t - 1) * (t - 1)
    return AmbiskewRing(sig, usl2_alpha(), t, ONE, 'U(sl2)'), u


def _uqsl2() -> Tuple[AmbiskewRing, BaseElem]:
    sig = laurent_line()
    t = sig.gen(0)
    q = q_pow(1)
    gap = q - q_pow(-1)
    u = -(t * q_pow(-1) + t ** -1 * q) * (ONE / gap ** 2)
    v = (t - t ** -1) * (ONE / gap)
    return AmbiskewRing(sig, uqsl2_alpha(), v, ONE, 'U_q(sl2)'), u


def _qtorus(p: int) -> Tuple[AmbiskewRing, BaseElem]:
    sig = quantum_torus(p)
    zp = sig.gen(p - 1)
    half = q_pow((p - 1) // 2)
    u = half * zp ** -1 + q_pow(1) * zp
    v = (1 - q_pow(1)) * (half * zp ** -1 - zp)
    return AmbiskewRing(sig, quantum_torus_alpha(p), v, ONE, f'QTorus({p})'), u


def _adu(n: int, f: LaurentPoly) -> Tuple[AmbiskewRing, BaseElem]:
    sig = down_up_base()
    c, k = sig.gen(0), sig.gen(1)
    u = c * k ** n + sig.from_central(f)
    v = u - apply_auto(down_up_alpha(), 1, u)
    return AmbiskewRing(sig, down_up_alpha(), v, ONE, f'ADU({n}, {f.to_string("k")})'), u


def make_example(family: ExampleFamily) -> Tuple[AmbiskewRing, BaseElem]:
    """
    Anillo conforme (ρ = 1) y elemento separador de la familia.

    Examples:
        USL2: A = K[t], α(t) = t + 2, v = t, u = -¼(t-1)².
        ADU(1, k^-1): A = K[c, k^±1], u = ck + k^-1.
    """
    if family.kind == USL2:
        return _usl2()
    if family.kind == UQSL2:
        return _uqsl2()
    if family.kind == QTORUS:
        return _qtorus(family.p)
    return _adu(family.n, family.f)


def adu_central_presentation(family: ExampleFamily) -> GwaRing:
    """
    R ≃ W(K[c, k^±1, z], α, u + z) con α(c) = c, α(z) = z, α(k) = q²k.

    z es la imagen del elemento de Casimir; el cociente por z - λ devuelve
    W(K[c, k^±1], α, u + λ).
    """
    if family.kind != ADU:
        raise ValidationError('La presentación central sólo está definida para ADU', code='invalid_family')
    base = down_up_base()
    sig = AlgebraSignature(
        names=base.names + ('z',),
        invertible=base.invertible + (False,),
        central_variable=base.central_variable,
        label='K[c,k^±1,z]',
    )
    c, k, z = sig.gen(0), sig.gen(1), sig.gen(2)
    u = c * k ** family.n + sig.from_central(family.f) + z
    alpha = Scaling(down_up_alpha().factors + (ONE,))
    return GwaRing(sig, alpha, u, f'{family.label} como GWA')


def _integer(value, name: str) -> int:
    if value is None or value == '':
        raise ValidationError(f'falta el parámetro {name}', code=f'invalid_{name}')
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValidationError(f'{name} debe ser un entero (recibido {value!r})', code=f'invalid_{name}')


def family_from_params(example: str, p=None, n=None, f: Optional[str] = None) -> ExampleFamily:
    """
    Familia a partir de parámetros textuales, como llegan de la CLI o de la API.

    ``f`` es un polinomio de Laurent en k, p. ej. ``"k^-1"``.
    """
    if example == QTORUS:
        return ExampleFamily.qtorus(_integer(p, 'p'))
    if example == ADU:
        if not f:
            raise ValidationError('ADU necesita el polinomio f(k)', code='invalid_f')
        try:
            poly = parse_laurent(f, 'k')
        except ScalarParseError as exc:
            raise ValidationError(f'f inválido: {exc}', code='invalid_f') from exc
        return ExampleFamily.adu(_integer(n, 'n'), poly)
    return ExampleFamily(example)
