"""Integer K-theory attached to a triangulation T and a rigid subset R of T.

Split Grothendieck group classes of T, the subgroup N spanned by the
exchange differences of diagonals in T outside R, the quotient by N in
Smith normal form, the homomorphisms kappa / theta_bar / theta, the index
of every diagonal, and exponential maps epsilon into Laurent units.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .laurent import LaurentPoly, LaurentRing
from .modules import FlClass, KClass
from .polygon import Diagonal, PolygonCategory, PolygonError, crossing


class SplitK0Class(KClass):
    """Class in the split Grothendieck group of T, in the basis [t]."""


class IndexPropagationError(RuntimeError):
    """Index propagation left some diagonal unsolved."""


class EpsilonError(ValueError):
    """An assignment that does not vanish on the subgroup N."""


@dataclass
class QuotientPresentation:
    """Z^k / N realised through a Smith normal form D = S A V.

    ``relation_matrix`` has the generators of N as columns.  A class x maps to
    ``S x``; coordinates with invariant factor 1 are dropped, those with a
    factor d > 1 are read mod d (torsion), and the remaining ones are free.
    ``free_change`` re-bases the free coordinates.
    """

    basis: tuple[Diagonal, ...]
    relation_matrix: list[list[int]]
    S: list[list[int]]
    V: list[list[int]]
    invariants: list[int]
    free_change: list[list[int]] = field(default_factory=list)

    @property
    def rank_N(self) -> int:
        return len(self.invariants)

    @property
    def free_rank(self) -> int:
        return len(self.basis) - self.rank_N

    @property
    def torsion_invariants(self) -> list[int]:
        return [d for d in self.invariants if d > 1]

    def _transformed(self, x: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, x)) for row in self.S]

    def free_coords(self, x: KClass) -> tuple[int, ...]:
        y = self._transformed(x.coords)[self.rank_N:]
        if self.free_change:
            y = [sum(a * b for a, b in zip(row, y)) for row in self.free_change]
        return tuple(y)

    def torsion_coords(self, x: KClass) -> tuple[int, ...]:
        y = self._transformed(x.coords)
        return tuple(y[i] % d for i, d in enumerate(self.invariants) if d > 1)

    def project(self, x: KClass) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Q(x) as (free part, torsion part); equal iff the difference lies in N."""
        if x.basis != self.basis:
            raise ValueError("class over a different basis")
        return self.free_coords(x), self.torsion_coords(x)

    def in_N(self, x: KClass) -> bool:
        free, tors = self.project(x)
        return not any(free) and not any(tors)

    def free_basis_representatives(self) -> list[Diagonal] | None:
        """Elements of T whose classes form the free basis, if the re-basing found one."""
        if self.free_rank == 0:
            return []
        reps = []
        for i in range(self.free_rank):
            hit = [t for t in self.basis
                   if self.free_coords(KClass.unit(self.basis, t)) ==
                   tuple(int(k == i) for k in range(self.free_rank))]
            if not hit:
                return None
            reps.append(hit[0])
        return reps


def quotient_presentation(basis: Sequence[Diagonal],
                          generators: Sequence[KClass]) -> QuotientPresentation:
    basis = tuple(basis)
    k = len(basis)
    A = [[g.coords[i] for g in generators] for i in range(k)]
    if not generators or all(not any(g.coords) for g in generators):
        ident = [[int(i == j) for j in range(k)] for i in range(k)]
        Q = QuotientPresentation(basis, A, ident, [], [])
    else:
        D, S, V = smith_normal_decomp(Matrix(A), domain=ZZ)
        invariants = []
        for i in range(min(D.shape)):
            if D[i, i] != 0:
                invariants.append(abs(int(D[i, i])))
        S = [[int(v) for v in S.row(i)] for i in range(k)]
        V = [[int(v) for v in V.row(i)] for i in range(V.shape[0])]
        Q = QuotientPresentation(basis, A, S, V, invariants)
    Q.free_change = _nice_free_basis(Q)
    return Q


def _nice_free_basis(Q: QuotientPresentation) -> list[list[int]]:
    """Unimodular change of free coordinates sending some classes [t] to unit vectors."""
    f = Q.free_rank
    if f == 0:
        return []
    cols = {t: list(Q.free_coords(KClass.unit(Q.basis, t))) for t in Q.basis}
    for combo in itertools.combinations(Q.basis, f):
        M = Matrix([[cols[t][i] for t in combo] for i in range(f)])
        if abs(M.det()) == 1:
            inv = M.inv()
            return [[int(inv[i, j]) for j in range(f)] for i in range(f)]
    return []


class KTheory:
    """Exchange data, N, the quotient and the index table for (R, T)."""

    def __init__(self, model: PolygonCategory, R: Sequence[Diagonal], T: Sequence[Diagonal]):
        self.model = model
        self.T = tuple(sorted(set(T)))
        self.R = tuple(sorted(set(R)))
        model.validate_rigid(self.R)
        model.validate_cluster_tilting(self.T, self.R)
        self.exchange = {t: model.exchange_pair(t, self.T) for t in self.T}
        self.N = subgroup_N(self)
        self.Q = quotient_presentation(self.T, self.N)
        self.index_table = solve_index(self)

    # -- classes -----------------------------------------------------------

    def split_class(self, values: Mapping[Diagonal, int]) -> SplitK0Class:
        return SplitK0Class.from_dict(self.T, values)

    def fl_T(self, values: Mapping[Diagonal, int]) -> FlClass:
        return FlClass.from_dict(self.T, values)

    def fl_R(self, values: Mapping[Diagonal, int]) -> FlClass:
        return FlClass.from_dict(self.R, values)

    def gbar_class(self, c: Diagonal) -> FlClass:
        """[C(-, Sigma c) restricted to T] = sum of the simples at t crossing c."""
        return FlClass(self.T, tuple(int(crossing(t, c)) for t in self.T))

    # -- homomorphisms -----------------------------------------------------

    def theta_bar_simple(self, t: Diagonal) -> SplitK0Class:
        if t not in self.exchange:
            raise PolygonError(f"{t} is not in T")
        pair = self.exchange[t]
        values: dict[Diagonal, int] = {}
        for a in pair.a:
            values[a] = values.get(a, 0) + 1
        for a in pair.a_prime:
            values[a] = values.get(a, 0) - 1
        return self.split_class(values)

    def theta_bar(self, e: FlClass) -> SplitK0Class:
        if e.basis != self.T:
            raise ValueError("theta_bar expects a class over T")
        total = SplitK0Class.zero(self.T)
        for t, k in zip(self.T, e.coords):
            if k:
                total = total + k * self.theta_bar_simple(t)
        return total

    def kappa(self, e: FlClass) -> FlClass:
        if e.basis != self.T:
            raise ValueError("kappa expects a class over T")
        return FlClass(self.R, tuple(e[r] for r in self.R))

    def kappa_preimage(self, e: FlClass, extra: Mapping[Diagonal, int] | None = None) -> FlClass:
        """The lift of e supported on R, plus optional coordinates outside R."""
        values = dict(e.as_dict())
        for t, k in (extra or {}).items():
            if t in self.R:
                raise ValueError(f"{t} is in R; a preimage may only vary outside R")
            values[t] = k
        return FlClass.from_dict(self.T, values)

    def theta_lift(self, e: FlClass) -> SplitK0Class:
        """theta_bar of the canonical kappa-preimage; represents theta(e) modulo N."""
        if e.basis != self.R:
            raise ValueError("theta expects a class over R")
        return self.theta_bar(self.kappa_preimage(e))

    def theta(self, e: FlClass):
        return self.Q.project(self.theta_lift(e))

    # -- index ----------------------------------------------------------------

    def index(self, c) -> SplitK0Class:
        """Index of a diagonal or of a direct sum given as an iterable of diagonals."""
        if isinstance(c, Diagonal):
            return self.index_table[c]
        total = SplitK0Class.zero(self.T)
        for d in c:
            total = total + self.index_table[d]
        return total

    def mesh_index_rhs(self, c: Diagonal) -> SplitK0Class:
        """Sum of the indices of the middle terms of the mesh ending at c."""
        if c in self.exchange:
            return self.theta_bar_simple(c)
        return -self.theta_bar(self.gbar_class(c))

    def identity_violations(self) -> list[str]:
        """Re-check both index identities over every diagonal and every mesh."""
        bad = []
        for c in self.model.objects:
            lhs = self.theta_bar(self.gbar_class(c))
            rhs = -(self.index(c) + self.index(self.model.suspend(c)))
            if lhs != rhs:
                bad.append(f"orbit identity fails at {c}: {lhs} != {rhs}")
            mesh = self.model.ar_mesh(c)
            if self.index(mesh.middles) != self.mesh_index_rhs(c):
                bad.append(f"mesh identity fails at {c}")
        return bad


def subgroup_N(kt: KTheory) -> list[SplitK0Class]:
    return [kt.theta_bar_simple(s) for s in kt.T if s not in kt.R]


def solve_index(kt: KTheory) -> dict[Diagonal, SplitK0Class]:
    """Index of every diagonal by propagating the orbit and mesh identities.

    Seeds: ind t = [t] and ind Sigma t = -[t] for t in T.
    Orbit:  ind c + ind Sigma c = -theta_bar([Gbar c]).
    Mesh:   sum of ind over the middles of the mesh ending at c is
            theta_bar([S_t]) if c = t in T, else -theta_bar([Gbar c]).
    """
    model = kt.model
    ind: dict[Diagonal, SplitK0Class] = {}
    for t in kt.T:
        ind[t] = SplitK0Class.unit(kt.T, t)
    for t in kt.T:
        s = model.suspend(t)
        if s in ind and ind[s] != -ind[t]:
            raise IndexPropagationError(f"conflicting seeds at {s}")
        ind[s] = -SplitK0Class.unit(kt.T, t)
    orbit = {c: -kt.theta_bar(kt.gbar_class(c)) for c in model.objects}
    meshes = [(model.ar_mesh(c), kt.mesh_index_rhs(c)) for c in model.objects]

    changed = True
    while changed and len(ind) < len(model.objects):
        changed = False
        for c in model.objects:
            s = model.suspend(c)
            if c in ind and s not in ind:
                ind[s] = orbit[c] - ind[c]
                changed = True
            elif s in ind and c not in ind:
                ind[c] = orbit[c] - ind[s]
                changed = True
        for mesh, rhs in meshes:
            unknown = [b for b in mesh.middles if b not in ind]
            if len(unknown) == 1:
                known = SplitK0Class.zero(kt.T)
                for b in mesh.middles:
                    if b in ind:
                        known = known + ind[b]
                ind[unknown[0]] = rhs - known
                changed = True
    missing = [c for c in model.objects if c not in ind]
    if missing:
        raise IndexPropagationError(
            f"index propagation left {len(missing)} diagonals unsolved: "
            + ", ".join(map(str, missing))
        )
    return ind


class Epsilon:
    """Exponential map on K_0^split(T)/N, stored by its values on the classes [t]."""

    def __init__(self, ring: LaurentRing, basis: Sequence[Diagonal],
                 images: Mapping[Diagonal, LaurentPoly]):
        self.ring = ring
        self.basis = tuple(basis)
        missing = [t for t in self.basis if t not in images]
        if missing:
            raise EpsilonError(f"no image given for {', '.join(map(str, missing))}")
        self.images = {}
        for t in self.basis:
            p = images[t]
            if p.ring != ring:
                raise EpsilonError(f"image of {t} lives in another ring")
            if not p.is_signed_monomial():
                raise EpsilonError(f"image of {t} is not a unit monomial: {p}")
            self.images[t] = p
        self._exps = {t: next(iter(p.terms)) for t, p in self.images.items()}
        self._signs = {t: next(iter(p.terms.values())) for t, p in self.images.items()}

    def __call__(self, x: KClass) -> LaurentPoly:
        if x.basis != self.basis:
            raise ValueError("class over a different basis")
        e = [0] * self.ring.nvars
        sign = 1
        for t, k in zip(self.basis, x.coords):
            if k:
                for i, a in enumerate(self._exps[t]):
                    e[i] += k * a
                if self._signs[t] == -1 and k % 2:
                    sign = -sign
        return self.ring.monomial(e, sign)

    def violations(self, generators: Sequence[KClass]) -> list[KClass]:
        one = self.ring.one()
        return [g for g in generators if self(g) != one]


def epsilon_from_assignment(ring: LaurentRing, kt: KTheory,
                            images: Mapping[Diagonal, LaurentPoly]) -> Epsilon:
    eps = Epsilon(ring, kt.T, images)
    bad = eps.violations(kt.N)
    if bad:
        raise EpsilonError(
            f"assignment is not well defined on the quotient: generator {bad[0]} "
            f"of N maps to {eps(bad[0])}"
        )
    return eps


def default_epsilon(kt: KTheory, names: Sequence[str]) -> Epsilon:
    """Send the free basis of the quotient to fresh variables, torsion to 1."""
    Q = kt.Q
    names = tuple(names)
    if len(names) != Q.free_rank:
        raise EpsilonError(f"need {Q.free_rank} variable names, got {len(names)}")
    if Q.torsion_invariants:
        warnings.warn(
            f"quotient has torsion {Q.torsion_invariants}; epsilon sends it to 1",
            stacklevel=2,
        )
    ring = LaurentRing(names)
    images = {t: ring.monomial(Q.free_coords(KClass.unit(kt.T, t))) for t in kt.T}
    return Epsilon(ring, kt.T, images)


def default_variable_names(k: int) -> list[str]:
    return [f"x{i}" for i in range(1, k + 1)]


def constant_epsilon(kt: KTheory) -> Epsilon:
    """The trivial exponential map: every class goes to 1 in Z."""
    ring = LaurentRing(())
    return Epsilon(ring, kt.T, {t: ring.one() for t in kt.T})
