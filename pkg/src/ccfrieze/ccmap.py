"""The modified Caldero-Chapoton map and the generalised frieze check.

    rho(c) = alpha(c) * sum over submodules M of Gc of beta([M])

with alpha = epsilon Q ind and beta = epsilon theta.  On direct sums rho is
computed as the product over the indecomposable summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ktheory import (
    Epsilon,
    KTheory,
    SplitK0Class,
    constant_epsilon,
    default_epsilon,
    default_variable_names,
    epsilon_from_assignment,
)
from .laurent import LaurentPoly, LaurentRing
from .mesh import MeshCategory, mesh_category
from .modules import (
    FlClass,
    MeshImageClass,
    ThinModule,
    classify_mesh_image,
    compute_G,
    module_class,
    submodule_class_counts,
)
from .polygon import ARMesh, Diagonal


class CCContext:
    """Validated (m, R, T, epsilon) with every per-object quantity precomputed."""

    def __init__(self, m: int, R: Iterable[Diagonal], T: Iterable[Diagonal],
                 epsilon: Epsilon | Mapping[Diagonal, LaurentPoly] | None = None,
                 names: Sequence[str] | None = None):
        self.mesh: MeshCategory = mesh_category(m)
        self.model = self.mesh.model
        for d in list(R) + list(T):
            self.model.check(d)
        self.kt = KTheory(self.model, list(R), list(T))
        self.R, self.T = self.kt.R, self.kt.T
        if epsilon is None:
            if names is None:
                names = default_variable_names(self.kt.Q.free_rank)
            epsilon = default_epsilon(self.kt, names)
        elif not isinstance(epsilon, Epsilon):
            ring = next(iter(epsilon.values())).ring
            epsilon = epsilon_from_assignment(ring, self.kt, epsilon)
        elif epsilon.violations(self.kt.N):
            raise ValueError("epsilon does not vanish on N")
        self.epsilon = epsilon
        self.ring: LaurentRing = epsilon.ring

        self.G: dict[Diagonal, ThinModule] = {
            c: compute_G(self.mesh, c, self.R) for c in self.model.objects
        }
        self._beta_simple = {
            r: self.epsilon(self.kt.theta_lift(FlClass.unit(self.R, r))) for r in self.R
        }
        self._rho = {c: self._rho_indec(c) for c in self.model.objects}

    @property
    def m(self) -> int:
        return self.model.m

    # -- alpha, beta, rho ------------------------------------------------------

    def alpha(self, c: Diagonal | Iterable[Diagonal]) -> LaurentPoly:
        return self.epsilon(self.kt.index(c))

    def beta(self, e: FlClass) -> LaurentPoly:
        if e.basis != self.R:
            raise ValueError("beta expects a class over R")
        out = self.ring.one()
        for r, k in zip(self.R, e.coords):
            if k:
                out = out * self._beta_simple[r] ** k
        return out

    def beta_via_theta(self, e: FlClass) -> LaurentPoly:
        """beta computed directly as epsilon of a theta lift, without multiplicativity."""
        return self.epsilon(self.kt.theta_lift(e))

    def _rho_indec(self, c: Diagonal) -> LaurentPoly:
        total = self.ring.zero()
        for e, chi in submodule_class_counts(self.G[c]).items():
            total = total + chi * self.beta(e)
        return self.alpha(c) * total

    def rho_indec(self, c: Diagonal) -> LaurentPoly:
        return self._rho[c]

    def rho(self, summands: Diagonal | Iterable[Diagonal]) -> LaurentPoly:
        """rho of a direct sum, given as an iterable of diagonals (empty = zero object)."""
        if isinstance(summands, Diagonal):
            return self._rho[summands]
        out = self.ring.one()
        for d in summands:
            out = out * self._rho[d]
        return out

    def values(self) -> dict[Diagonal, LaurentPoly]:
        return dict(self._rho)

    def classify(self, mesh: ARMesh) -> MeshImageClass:
        return classify_mesh_image(self.mesh, mesh, self.R, self.G)

    def unit_relation(self, c: Diagonal) -> LaurentPoly:
        """alpha(c + Sigma c) * beta([Gc]); equals 1 for a well-built context."""
        return self.alpha([c, self.model.suspend(c)]) * self.beta(module_class(self.G[c]))


@dataclass(frozen=True)
class MeshResult:
    mesh: ARMesh
    defect: LaurentPoly
    classification: MeshImageClass

    @property
    def defect_value(self) -> int | None:
        return self.defect.constant_value()

    @property
    def agrees(self) -> bool:
        expected = 0 if self.classification is MeshImageClass.SPLIT_SES else 1
        return self.defect_value == expected


@dataclass(frozen=True)
class FriezeReport:
    results: tuple[MeshResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.agrees for r in self.results)

    def defect_meshes(self) -> list[Diagonal]:
        """End objects of the meshes with defect 1."""
        return [r.mesh.end for r in self.results if r.defect_value == 1]

    def failures(self) -> list[MeshResult]:
        return [r for r in self.results if not r.agrees]

    def to_text(self) -> str:
        lines = [f"{'end':>8}  {'start':>8}  {'middles':<16}{'defect':>7}  class"]
        for r in self.results:
            mids = " + ".join(map(str, r.mesh.middles)) or "0"
            d = r.defect_value if r.defect_value is not None else str(r.defect)
            flag = "" if r.agrees else "  MISMATCH"
            lines.append(
                f"{str(r.mesh.end):>8}  {str(r.mesh.start):>8}  {mids:<16}{d!s:>7}  "
                f"{r.classification}{flag}"
            )
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {len(self.defect_meshes())} "
                     f"defect-1 meshes out of {len(self.results)}")
        return "\n".join(lines)


def frieze_check(ctx: CCContext) -> FriezeReport:
    results = []
    for c in sorted(ctx.model.objects):
        mesh = ctx.model.ar_mesh(c)
        defect = ctx.rho(mesh.start) * ctx.rho(c) - ctx.rho(mesh.middles)
        results.append(MeshResult(mesh, defect, ctx.classify(mesh)))
    return FriezeReport(tuple(results))


def original_cc_context(m: int, T: Iterable[Diagonal],
                        names: Mapping[Diagonal, str] | Sequence[str] | None = None) -> CCContext:
    """R = T with epsilon([t]) = x_t: the classical Caldero-Chapoton map."""
    T = sorted(set(T))
    if names is None:
        names = default_variable_names(len(T))
    if isinstance(names, Mapping):
        order = [names[t] for t in T]
    else:
        order = list(names)
    if len(order) != len(T):
        raise ValueError(f"need {len(T)} variable names, got {len(order)}")
    ring = LaurentRing(order)
    images = {t: ring.gen(n) for t, n in zip(T, order)}
    return CCContext(m, T, T, images)


def integer_context(m: int, R: Iterable[Diagonal], T: Iterable[Diagonal]) -> CCContext:
    """epsilon identically 1, so alpha = beta = 1 and rho counts submodules."""
    R, T = list(R), list(T)
    kt = KTheory(mesh_category(m).model, R, T)
    return CCContext(m, R, T, constant_epsilon(kt))


__all__ = [
    "CCContext",
    "FriezeReport",
    "MeshResult",
    "SplitK0Class",
    "frieze_check",
    "integer_context",
    "original_cc_context",
]
