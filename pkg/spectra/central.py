"""
Vista de una GWA W(A, α, u + λ) desde el subanillo central univariado de A.

Los testigos espectrales se reducen a aritmética de ideales principales en
F[X] o F[X^±1], donde X es t, z_p o k según la familia.
"""
from dataclasses import dataclass

from basealg.algebra import central_project
from basealg.automorphisms import CentralAction, restrict_to_central
from gwa.rings import GwaRing, from_ambiskew
from idealkit.ideals import CentralIdeal, CentralLike, NotCentralUnivariate, apply_auto_ideal
from scalars.laurent import LaurentPoly

from .families import ExampleFamily, make_example


@dataclass(frozen=True)
class CentralView:
    ring: GwaRing
    action: CentralAction
    laurent: bool
    var: str
    u: LaurentPoly

    @classmethod
    def of(cls, ring: GwaRing) -> 'CentralView':
        sig = ring.sig
        u = central_project(ring.u)
        if u is None:
            raise NotCentralUnivariate(f'u = {ring.u} no está en el subanillo central univariado')
        index = sig.central_variable
        return cls(ring, restrict_to_central(ring.alpha, sig), sig.invertible[index], sig.names[index], u)

    @classmethod
    def for_family(cls, family: ExampleFamily, lam=0) -> 'CentralView':
        ring, u = make_example(family)
        return cls.of(from_ambiskew(ring, u, lam))

    def alpha(self, k: int, f: LaurentPoly) -> LaurentPoly:
        return self.action.apply(k, f)

    def u_translate(self, k: int) -> LaurentPoly:
        """α^k(u)."""
        return self.alpha(k, self.u)

    def ideal(self, f: CentralLike) -> CentralIdeal:
        return CentralIdeal.of(f, self.laurent)

    def unit(self) -> CentralIdeal:
        return CentralIdeal.unit(self.laurent)

    def translate(self, k: int, ideal: CentralIdeal) -> CentralIdeal:
        return apply_auto_ideal(self.action, k, ideal)

    def render(self, ideal: CentralIdeal) -> str:
        return ideal.generator.to_string(self.var)
