"""Polygon model of the cluster category of type A_n.

Indecomposable objects are the diagonals of an m-gon (m = n + 3) with
vertices 1..m numbered anticlockwise.  Suspension (which is also the AR
translation) rotates a diagonal clockwise by one vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable


class PolygonError(ValueError):
    """Invalid diagonal, or a set of diagonals failing a validation."""


@total_ordering
@dataclass(frozen=True)
class Diagonal:
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def __lt__(self, other):
        return (self.i, self.j) < (other.i, other.j)

    def __str__(self):
        return f"{{{self.i},{self.j}}}"

    def __repr__(self):
        return f"D({self.i},{self.j})"

    def __iter__(self):
        yield self.i
        yield self.j

    @classmethod
    def parse(cls, text: str) -> Diagonal:
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise PolygonError(f"malformed diagonal {text!r}")
        try:
            i, j = (int(p) for p in body[1:-1].split(","))
        except ValueError:
            raise PolygonError(f"malformed diagonal {text!r}") from None
        return cls(i, j)


def crossing(x: Diagonal, y: Diagonal) -> bool:
    """True iff x and y cross in the interior of the polygon."""
    a, b = x.i, x.j
    if len({a, b, y.i, y.j}) < 4:
        return False
    return (a < y.i < b) != (a < y.j < b)


def diagonals_to_json(ds: Iterable[Diagonal]) -> str:
    return json.dumps([[d.i, d.j] for d in sorted(ds)])


@dataclass(frozen=True)
class ARMesh:
    """The AR triangle start -> middles -> end, with start = suspend(end)."""

    end: Diagonal
    start: Diagonal
    middles: tuple[Diagonal, ...]


@dataclass(frozen=True)
class ExchangePair:
    """Exchange triangles t_star -> a -> t and t -> a_prime -> t_star."""

    t: Diagonal
    t_star: Diagonal
    a: tuple[Diagonal, ...]
    a_prime: tuple[Diagonal, ...]


class PolygonCategory:
    """Objects, suspension and meshes of the cluster category of the m-gon."""

    def __init__(self, m: int):
        if m < 4:
            raise PolygonError(f"polygon size must be at least 4, got {m}")
        self.m = m
        self.objects = tuple(
            Diagonal(i, j)
            for i in range(1, m + 1)
            for j in range(i + 2, m + 1)
            if not (i == 1 and j == m)
        )
        assert len(self.objects) == m * (m - 3) // 2
        self._object_set = frozenset(self.objects)

    def __repr__(self):
        return f"PolygonCategory({self.m})"

    def _vertex(self, v: int) -> int:
        return (v - 1) % self.m + 1

    def is_proper(self, i: int, j: int) -> bool:
        i, j = self._vertex(i), self._vertex(j)
        return i != j and (j - i) % self.m not in (1, self.m - 1)

    def diagonal(self, i: int, j: int) -> Diagonal:
        """Validated diagonal; vertices are taken mod m."""
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise PolygonError(f"vertex out of range 1..{self.m} in {{{i},{j}}}")
        if not self.is_proper(i, j):
            raise PolygonError(f"degenerate diagonal {{{min(i, j)},{max(i, j)}}}")
        return Diagonal(i, j)

    def _maybe(self, i: int, j: int) -> Diagonal | None:
        """Diagonal on vertices i, j mod m, or None for a zero object."""
        if not self.is_proper(i, j):
            return None
        return Diagonal(self._vertex(i), self._vertex(j))

    def check(self, d: Diagonal) -> Diagonal:
        if d not in self._object_set:
            raise PolygonError(f"{d} is not a diagonal of the {self.m}-gon")
        return d

    def length(self, d: Diagonal) -> int:
        """Number of polygon edges on the shorter side of d."""
        k = d.j - d.i
        return min(k, self.m - k)

    def suspend(self, d: Diagonal, times: int = 1) -> Diagonal:
        return Diagonal(self._vertex(d.i - times), self._vertex(d.j - times))

    def suspend_inverse(self, d: Diagonal, times: int = 1) -> Diagonal:
        return self.suspend(d, -times)

    tau = suspend

    def ar_mesh(self, c: Diagonal) -> ARMesh:
        i, j = c.i, c.j
        middles = [d for d in (self._maybe(i - 1, j), self._maybe(i, j - 1)) if d is not None]
        return ARMesh(end=c, start=self.suspend(c), middles=tuple(sorted(middles)))

    def meshes(self) -> list[ARMesh]:
        return [self.ar_mesh(c) for c in self.objects]

    def arrows(self) -> list[tuple[Diagonal, Diagonal]]:
        """Irreducible morphisms b -> c of the AR quiver."""
        return [(b, mesh.end) for mesh in self.meshes() for b in mesh.middles]

    # -- triangulations ----------------------------------------------------

    def _edge_or_member(self, u: int, v: int, members: frozenset[Diagonal]) -> bool:
        if not self.is_proper(u, v):
            return u != v
        return Diagonal(u, v) in members

    def exchange_pair(self, t: Diagonal, T: Iterable[Diagonal]) -> ExchangePair:
        T = frozenset(T)
        if t not in T:
            raise PolygonError(f"{t} is not in the triangulation")
        self.validate_cluster_tilting(T, ())
        i, j = t.i, t.j
        # the apex of the triangle of T on each side of t
        inside = [k for k in range(i + 1, j)
                  if self._edge_or_member(i, k, T) and self._edge_or_member(k, j, T)]
        outside = [l for l in range(1, self.m + 1) if not i <= l <= j
                   if self._edge_or_member(i, l, T) and self._edge_or_member(l, j, T)]
        if len(inside) != 1 or len(outside) != 1:
            raise PolygonError(f"no unique quadrilateral around {t}")
        k, l = inside[0], outside[0]
        # i, k, j, l are anticlockwise
        a = [d for d in (self._maybe(i, k), self._maybe(j, l)) if d is not None]
        a_prime = [d for d in (self._maybe(i, l), self._maybe(j, k)) if d is not None]
        return ExchangePair(t=t, t_star=Diagonal(k, l), a=tuple(sorted(a)),
                            a_prime=tuple(sorted(a_prime)))

    def validate_rigid(self, R: Iterable[Diagonal]) -> None:
        """Raise PolygonError naming a crossing pair if R is not rigid."""
        R = sorted(set(self.check(d) for d in R))
        for idx, x in enumerate(R):
            for y in R[idx + 1:]:
                if crossing(x, y):
                    raise PolygonError(f"not rigid: {x} and {y} cross")

    def validate_cluster_tilting(self, T: Iterable[Diagonal], R: Iterable[Diagonal]) -> None:
        T = set(T)
        R = set(R)
        try:
            self.validate_rigid(T)
        except PolygonError as exc:
            raise PolygonError(f"T is not cluster tilting: {exc}") from None
        if len(T) != self.m - 3:
            raise PolygonError(
                f"T is not maximal: {len(T)} diagonals, a triangulation has {self.m - 3}"
            )
        missing = sorted(R - T)
        if missing:
            raise PolygonError(f"R is not contained in T: {', '.join(map(str, missing))}")

    def flip(self, t: Diagonal, T: Iterable[Diagonal]) -> frozenset[Diagonal]:
        T = frozenset(T)
        pair = self.exchange_pair(t, T)
        return (T - {t}) | {pair.t_star}


def random_triangulation(m: int, rng) -> frozenset[Diagonal]:
    """Uniform-ish random triangulation by recursive random fan splitting.

    ``rng`` is a :class:`random.Random` instance.
    """
    out: set[Diagonal] = set()

    def split(vertices: list[int]):
        if len(vertices) < 4:
            return
        # pick a random triangle on the base edge (vertices[0], vertices[-1])
        idx = rng.randrange(1, len(vertices) - 1)
        a, b, c = vertices[0], vertices[idx], vertices[-1]
        for u, v in ((a, b), (b, c)):
            if abs(vertices.index(v) - vertices.index(u)) > 1:
                out.add(Diagonal(u, v))
        split(vertices[: idx + 1])
        split(vertices[idx:])

    split(list(range(1, m + 1)))
    return frozenset(out)
