"""Morphisms of the cluster category of type A as a mesh category.

Hom(x, -) is computed by knitting: the mesh category is graded by path
length, and the degree-L part of Hom(x, y) is the cokernel of

    Hom_{L-2}(x, tau y)  ->  sum over arrows z -> y of Hom_{L-1}(x, z)

given by the two-arrow paths through each middle of the mesh ending at y.
Linear algebra is exact over the rationals, standing in for the
algebraically closed ground field; every Hom space here is at most one
dimensional so nothing depends on the field.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polygon import Diagonal, PolygonCategory, crossing

Matrix = list[list[Fraction]]


def left_kernel(rows: int, cols: int, A: Matrix) -> Matrix:
    """Basis (as rows) of {p : p A = 0} for an exact rows x cols matrix A."""
    # nullspace of A^T by Gauss-Jordan elimination
    At = [[Fraction(A[r][c]) for r in range(rows)] for c in range(cols)]
    pivots: list[int] = []
    row = 0
    for col in range(rows):
        piv = next((r for r in range(row, cols) if At[r][col] != 0), None)
        if piv is None:
            continue
        At[row], At[piv] = At[piv], At[row]
        lead = At[row][col]
        At[row] = [v / lead for v in At[row]]
        for r in range(cols):
            if r != row and At[r][col] != 0:
                f = At[r][col]
                At[r] = [a - f * b for a, b in zip(At[r], At[row])]
        pivots.append(col)
        row += 1
        if row == cols:
            break
    basis = []
    for free in (c for c in range(rows) if c not in pivots):
        v = [Fraction(0)] * rows
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -At[r][free]
        basis.append(v)
    return basis


def matvec(M: Matrix, v: list[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M]


@dataclass(frozen=True)
class Morphism:
    source: Diagonal
    target: Diagonal
    nonzero: bool


class _Knitting:
    """Graded pieces V[L][y] of Hom(x, y) with structure maps along arrows."""

    def __init__(self, model: PolygonCategory, preds, x: Diagonal):
        self.x = x
        # dims[L][y], maps[L][(z, y)] : V[L-1][z] -> V[L][y]
        self.dims: list[dict[Diagonal, int]] = [{x: 1}]
        self.maps: list[dict[tuple[Diagonal, Diagonal], Matrix]] = [{}]
        L = 0
        while self.dims[L]:
            L += 1
            if L > 2 * model.m + 2:
                raise AssertionError(f"knitting from {x} does not terminate")
            dims: dict[Diagonal, int] = {}
            maps: dict[tuple[Diagonal, Diagonal], Matrix] = {}
            for y in model.objects:
                zs = [z for z in preds[y] if self.dim(L - 1, z)]
                if not zs:
                    continue
                offsets, w = [], 0
                for z in zs:
                    offsets.append(w)
                    w += self.dim(L - 1, z)
                ty = model.suspend(y)
                r = self.dim(L - 2, ty) if L >= 2 else 0
                # relation map V[L-2][tau y] -> W, stacked over middles
                rel = [[Fraction(0)] * r for _ in range(w)]
                if r:
                    for z, off in zip(zs, offsets):
                        M = self.maps[L - 1].get((ty, z))
                        if M is None:
                            continue
                        for a in range(len(M)):
                            for b in range(r):
                                rel[off + a][b] = M[a][b]
                P = left_kernel(w, r, rel) if r else [
                    [Fraction(int(a == b)) for b in range(w)] for a in range(w)
                ]
                if not P:
                    continue
                dims[y] = len(P)
                for z, off in zip(zs, offsets):
                    d = self.dim(L - 1, z)
                    maps[(z, y)] = [row[off:off + d] for row in P]
            self.dims.append(dims)
            self.maps.append(maps)
        self.dims.pop()
        self.maps.pop()

    def dim(self, L: int, y: Diagonal) -> int:
        if L < 0 or L >= len(self.dims):
            return 0
        return self.dims[L].get(y, 0)

    def total_dim(self, y: Diagonal) -> int:
        return sum(d.get(y, 0) for d in self.dims)

    def degree(self, y: Diagonal) -> int | None:
        for L, d in enumerate(self.dims):
            if y in d:
                return L
        return None

    def push(self, v: list[Fraction], L: int, path: list[Diagonal]) -> list[Fraction]:
        """Image of v in V[L][path[0]] along the arrows of path."""
        for z, y in zip(path, path[1:]):
            L += 1
            M = self.maps[L].get((z, y)) if L < len(self.maps) else None
            if M is None:
                return []
            v = matvec(M, v)
        return v


class MeshCategory:
    """Hom dimensions, basis paths and composition scalars for C(A_{m-3})."""

    def __init__(self, model: PolygonCategory):
        self.model = model
        self.preds = {c: model.ar_mesh(c).middles for c in model.objects}
        self._knit = {x: _Knitting(model, self.preds, x) for x in model.objects}
        self._paths: dict[tuple[Diagonal, Diagonal], list[Diagonal] | None] = {}
        for x, k in self._knit.items():
            for y in model.objects:
                if k.total_dim(y) > 1:
                    raise AssertionError(f"Hom({x},{y}) has dimension {k.total_dim(y)} > 1")

    def hom_dim(self, x: Diagonal, y: Diagonal) -> int:
        return self._knit[x].total_dim(y)

    def hom_degree(self, x: Diagonal, y: Diagonal) -> int | None:
        """Path length of the nonzero morphisms x -> y, or None if Hom is zero."""
        return self._knit[x].degree(y)

    def basis_path(self, x: Diagonal, y: Diagonal) -> list[Diagonal] | None:
        """A path x -> ... -> y whose class spans Hom(x, y)."""
        key = (x, y)
        if key not in self._paths:
            self._paths[key] = self._find_path(x, y)
        return self._paths[key]

    def _find_path(self, x, y):
        k = self._knit[x]
        L = k.degree(y)
        if L is None:
            return None
        path = [y]
        while L > 0:
            for z in self.preds[path[-1]]:
                M = k.maps[L].get((z, path[-1]))
                if M is not None and any(v != 0 for row in M for v in row):
                    break
            else:  # pragma: no cover - ruled out by the spanning property
                raise AssertionError("knitting lost a basis path")
            path.append(z)
            L -= 1
        return path[::-1]

    def basis_vector(self, x: Diagonal, y: Diagonal) -> list[Fraction]:
        path = self.basis_path(x, y)
        return self._knit[x].push([Fraction(1)], 0, path)

    def compose(self, x: Diagonal, y: Diagonal, z: Diagonal) -> Fraction:
        """Scalar c with basis(y,z) o basis(x,y) = c * basis(x,z)."""
        if not self.hom_dim(x, y) or not self.hom_dim(y, z):
            raise ValueError(f"composite {x} -> {y} -> {z} has a zero factor")
        k = self._knit[x]
        L = k.degree(y)
        v = k.push(self.basis_vector(x, y), L, self.basis_path(y, z))
        if not v or all(c == 0 for c in v):
            return Fraction(0)
        ref = self.basis_vector(x, z)
        idx = next(i for i, c in enumerate(ref) if c != 0)
        return v[idx] / ref[idx]

    def composite_nonzero(self, x: Diagonal, y: Diagonal, z: Diagonal) -> bool:
        return self.compose(x, y, z) != 0

    def morphism(self, x: Diagonal, y: Diagonal) -> Morphism:
        return Morphism(x, y, bool(self.hom_dim(x, y)))

    def hom_matrix_csv(self) -> str:
        objs = self.model.objects
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [str(o) for o in objs])
        for x in objs:
            w.writerow([str(x)] + [self.hom_dim(x, y) for y in objs])
        return buf.getvalue()


def hom_dim_by_crossing(model: PolygonCategory, x: Diagonal, y: Diagonal) -> int:
    """dim Hom(x, y) read off the crossing rule: x crosses the inverse suspension of y."""
    return int(crossing(x, model.suspend_inverse(y)))


@lru_cache(maxsize=None)
def mesh_category(m: int) -> MeshCategory:
    return MeshCategory(PolygonCategory(m))
