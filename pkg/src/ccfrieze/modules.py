"""Thin functor modules C(-, Sigma c) restricted to a rigid set of diagonals.

Every graded piece of such a module is 0 or 1 dimensional, so a module is
determined by its support and the set of pairs (r, r') along which the
action is nonzero.  Submodules are then exactly the arrow-closed subsets of
the support and every submodule Grassmannian is a finite set of points.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .mesh import MeshCategory
from .polygon import ARMesh, Diagonal, PolygonError, crossing


@dataclass(frozen=True)
class KClass:
    """Integer vector over an ordered basis of diagonals."""

    basis: tuple[Diagonal, ...]
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.basis) != len(self.coords):
            raise ValueError("coordinate vector length does not match basis")

    @classmethod
    def zero(cls, basis: Sequence[Diagonal]):
        return cls(tuple(basis), (0,) * len(basis))

    @classmethod
    def unit(cls, basis: Sequence[Diagonal], d: Diagonal):
        basis = tuple(basis)
        if d not in basis:
            raise KeyError(f"{d} not in basis")
        return cls(basis, tuple(int(b == d) for b in basis))

    @classmethod
    def from_dict(cls, basis: Sequence[Diagonal], values: Mapping[Diagonal, int]):
        basis = tuple(basis)
        unknown = set(values) - set(basis)
        if unknown:
            raise KeyError(f"not in basis: {sorted(unknown)}")
        return cls(basis, tuple(values.get(b, 0) for b in basis))

    def _same(self, other):
        if self.basis != other.basis:
            raise ValueError("classes over different bases")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(self.basis, tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return type(self)(self.basis, tuple(k * a for a in self.coords))

    def __getitem__(self, d: Diagonal) -> int:
        return self.coords[self.basis.index(d)]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_dict(self) -> dict[Diagonal, int]:
        return {b: c for b, c in zip(self.basis, self.coords) if c}

    def __str__(self):
        parts = []
        for b, c in zip(self.basis, self.coords):
            if not c:
                continue
            sym = f"[{b.i},{b.j}]"
            term = sym if abs(c) == 1 else f"{abs(c)}{sym}"
            parts.append(("-" if c < 0 else "+") + term)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


class FlClass(KClass):
    """Class in K_0 of finite-length modules, in the basis of simples."""


@dataclass(frozen=True)
class ThinModule:
    base: tuple[Diagonal, ...]
    support: frozenset[Diagonal]
    arrows: frozenset[tuple[Diagonal, Diagonal]]

    def is_zero(self) -> bool:
        return not self.support

    def components(self) -> list[ThinModule]:
        """Connected components of the support under the (undirected) arrows."""
        left = set(self.support)
        out = []
        while left:
            seed = min(left)
            comp, stack = {seed}, [seed]
            while stack:
                v = stack.pop()
                for a, b in self.arrows:
                    for u, w in ((a, b), (b, a)):
                        if u == v and w not in comp:
                            comp.add(w)
                            stack.append(w)
            left -= comp
            arr = frozenset(p for p in self.arrows if p[0] in comp)
            out.append(ThinModule(self.base, frozenset(comp), arr))
        return out

    def to_json(self) -> str:
        return json.dumps({
            "support": [str(d) for d in sorted(self.support)],
            "arrows": [[str(a), str(b)] for a, b in sorted(self.arrows)],
        })


def zero_module(base: Sequence[Diagonal]) -> ThinModule:
    return ThinModule(tuple(base), frozenset(), frozenset())


def simple_module(base: Sequence[Diagonal], r: Diagonal) -> ThinModule:
    return ThinModule(tuple(base), frozenset([r]), frozenset())


def compute_G(mc: MeshCategory, c: Diagonal, base: Sequence[Diagonal]) -> ThinModule:
    """The module C(-, Sigma c) restricted to the rigid set ``base``.

    An arrow (r, r') records that the basis morphism r' -> r acts nontrivially,
    i.e. sends the r-component into the r'-component.
    """
    base = tuple(base)
    mc.model.validate_rigid(base)
    target = mc.model.suspend(c)
    support = frozenset(r for r in base if crossing(r, c))
    arrows = frozenset(
        (r, r2)
        for r in support
        for r2 in support
        if r != r2 and mc.hom_dim(r2, r) and mc.composite_nonzero(r2, r, target)
    )
    return ThinModule(base, support, arrows)


def closed_subsets(M: ThinModule) -> list[frozenset[Diagonal]]:
    """All submodules of M, as arrow-closed subsets of the support."""
    order = sorted(M.support)
    succ = {r: {b for a, b in M.arrows if a == r} for r in order}
    pred = {r: {a for a, b in M.arrows if b == r} for r in order}
    out: list[frozenset[Diagonal]] = []

    def extend(idx, inside: frozenset, outside: frozenset):
        if idx == len(order):
            out.append(inside)
            return
        r = order[idx]
        if r in inside or r in outside:
            extend(idx + 1, inside, outside)
            return
        # include r: everything reachable from r must be in
        forced = _reach(r, succ)
        if not forced & outside:
            extend(idx + 1, inside | forced, outside)
        # exclude r: everything reaching r must be out
        banned = _reach(r, pred)
        if not banned & inside:
            extend(idx + 1, inside, outside | banned)

    extend(0, frozenset(), frozenset())
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _reach(r, adj):
    seen, stack = {r}, [r]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def subset_class(base: Sequence[Diagonal], subset: Iterable[Diagonal]) -> FlClass:
    subset = set(subset)
    return FlClass(tuple(base), tuple(int(b in subset) for b in base))


def module_class(M: ThinModule) -> FlClass:
    return subset_class(M.base, M.support)


def grassmannian_euler(M: ThinModule, e: FlClass) -> int:
    """Euler characteristic of the submodules of class e: a point count here."""
    return sum(1 for s in closed_subsets(M) if subset_class(M.base, s) == e)


def submodule_class_counts(M: ThinModule) -> dict[FlClass, int]:
    counts: Counter[FlClass] = Counter()
    for s in closed_subsets(M):
        counts[subset_class(M.base, s)] += 1
    return dict(counts)


class MeshImageClass(enum.Enum):
    SPLIT_SES = "SplitSES"
    NONSPLIT_SES = "NonSplitSES"
    PROJ_CASE = "ProjCase"
    INJ_CASE = "InjCase"

    def __str__(self):
        return self.value


def isomorphic(summands_a: Iterable[ThinModule], summands_b: Iterable[ThinModule]) -> bool:
    """Isomorphism of direct sums of thin modules via indecomposable components."""

    def key(summands):
        return Counter(
            (comp.support, comp.arrows)
            for M in summands
            for comp in M.components()
        )

    return key(summands_a) == key(summands_b)


def classify_mesh_image(mc: MeshCategory, mesh: ARMesh, R: Sequence[Diagonal],
                        modules: Mapping[Diagonal, ThinModule] | None = None) -> MeshImageClass:
    """Which case G applied to the AR triangle ``mesh`` falls into."""
    R = tuple(R)
    c = mesh.end
    if c in R:
        return MeshImageClass.INJ_CASE
    if mesh.start in R:
        return MeshImageClass.PROJ_CASE

    def G(x):
        if modules is not None and x in modules:
            return modules[x]
        return compute_G(mc, x, R)

    left, right = G(mesh.start), G(c)
    middle = [G(b) for b in mesh.middles]
    for r in R:
        dims = sum(r in M.support for M in middle)
        if dims != (r in left.support) + (r in right.support):
            raise PolygonError(f"G of the mesh ending at {c} is not short exact at {r}")
    if isomorphic(middle, [left, right]):
        return MeshImageClass.SPLIT_SES
    return MeshImageClass.NONSPLIT_SES
