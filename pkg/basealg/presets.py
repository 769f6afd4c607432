"""
Signaturas y automorfismos de las cuatro familias de ejemplo.

    K[t]            α(t) = t + 2                        (U(sl2))
    K[t^{±1}]       α(t) = q² t                         (U_q(sl2))
    toro cuántico   α(z_i) = q^{-1} z_i para i impar    (p impar)
    K[c, k^{±1}]    α(c) = c, α(k) = q² k                (down-up aumentadas)

Los índices son desde cero; en el toro cuántico z_1..z_p son las
posiciones 0..p-1.
"""
from typing import Tuple

from scalars.field import ONE, Scalar, q_pow

from .algebra import AlgebraSignature
from .automorphisms import Scaling, Shift


def polynomial_line(name: str = 't') -> AlgebraSignature:
    return AlgebraSignature(names=(name,), invertible=(False,), central_variable=0, label=f'K[{name}]')


def laurent_line(name: str = 't') -> AlgebraSignature:
    return AlgebraSignature(names=(name,), invertible=(True,), central_variable=0, label=f'K[{name}^±1]')


def quantum_torus(p: int) -> AlgebraSignature:
    """
    Toro cuántico con z_i z_j = q_ij z_j z_i, q_ij = q^{-1} si i es par y
    j impar (numeración desde 1), y 1 en otro caso. z_p es central.
    """
    commutation = []
    for i in range(1, p + 1):
        for j in range(1, i):
            if i % 2 == 0 and j % 2 == 1:
                commutation.append((i - 1, j - 1, q_pow(-1)))
    return AlgebraSignature(
        names=tuple(f'z{i}' for i in range(1, p + 1)),
        invertible=(True,) * p,
        commutation=tuple(commutation),
        central_variable=p - 1,
        label=f'QTorus({p})',
    )


def quantum_torus_alpha(p: int) -> Scaling:
    factors: Tuple[Scalar, ...] = tuple(q_pow(-1) if i % 2 == 1 else ONE for i in range(1, p + 1))
    return Scaling(factors)


def down_up_base() -> AlgebraSignature:
    return AlgebraSignature(
        names=('c', 'k'),
        invertible=(False, True),
        central_variable=1,
        label='K[c,k^±1]',
    )


def down_up_alpha() -> Scaling:
    return Scaling((ONE, q_pow(2)))


def usl2_alpha() -> Shift:
    return Shift(Scalar(2))


def uqsl2_alpha() -> Scaling:
    return Scaling((q_pow(2),))
