"""
Identidades de conmutación de los anillos ambiskew y elemento de Casimir.
"""
import logging

from basealg.algebra import BaseElem, is_central

from .rings import AmbiskewRing, NotCentral, NotSplitting, OreElem, RingMismatch

logger = logging.getLogger(__name__)


def v_power(ring: AmbiskewRing, m: int) -> BaseElem:
    """
    v^(m) = Σ_{l=0}^{m-1} ρ^l α^l(v).

    Examples:
        U(sl2), m=2: 2t + 2 = m(t + m - 1).
    """
    if m < 0:
        raise ValueError('m debe ser >= 0')
    total = ring.sig.zero()
    for l in range(m):
        total = total + ring.alpha_power(l, ring.v) * ring.rho ** l
    return total


def check_skewcomm(ring: AmbiskewRing, m: int) -> bool:
    """
    Verifica, expandiendo en forma normal:

        x y^m - ρ^m y^m x = v^(m) y^{m-1}
        x^m y - ρ^m y x^m = x^{m-1} v^(m) = α^{1-m}(v^(m)) x^{m-1}
    """
    if m < 1:
        raise ValueError('m debe ser >= 1')
    vm = v_power(ring, m)
    rho_m = ring.rho ** m
    x, y = ring.x(), ring.y()

    left_y = x * ring.y(m) - ring.y(m) * x * rho_m
    first = left_y == ring.term(0, vm, m - 1)

    left_x = ring.x(m) * y - y * ring.x(m) * rho_m
    second = left_x == ring.term(m - 1, vm, 0)

    third = ring.term(m - 1, vm, 0) == ring.coefficient(ring.alpha_power(1 - m, vm)) * ring.x(m - 1)

    logger.debug(f'{ring.label} m={m}: eq1={first} eq2={second} eq2_derecha={third}')
    return first and second and third


def splitting_check(ring: AmbiskewRing, u: BaseElem) -> bool:
    """True si v = u - ρα(u); exige u central."""
    if u.sig != ring.sig:
        raise RingMismatch('u no pertenece al álgebra base del anillo')
    if not is_central(u):
        raise NotCentral(f'u = {u} no es central')
    return ring.v == u - ring.alpha_power(1, u) * ring.rho


def casimir(ring: AmbiskewRing, u: BaseElem) -> OreElem:
    """z = xy - u para un elemento separador u."""
    if not splitting_check(ring, u):
        raise NotSplitting(f'u = {u} no es un elemento separador de {ring.label or "R"}')
    return ring.element({(1, 1): ring.sig.one(), (0, 0): -u})


def check_casimir_normality(z: OreElem) -> bool:
    """
    Comprueba z y = ρ y z, z x = ρ^{-1} x z, y además z a = a z para los
    generadores a de A (con sus inversos).
    """
    ring = z.ring
    x, y = ring.x(), ring.y()
    checks = [
        z * y == y * z * ring.rho,
        z * x * ring.rho == x * z,
    ]
    for gen in ring.sig.generators():
        a = ring.coefficient(gen)
        checks.append(z * a == a * z)
    return all(checks)
