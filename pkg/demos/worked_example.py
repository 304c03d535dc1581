"""
Walk through one generalised frieze on the 8-gon, from the rigid object to
the mesh report.
"""

from ccfrieze import CCContext, Diagonal as D, LaurentRing, frieze_check
from ccfrieze.emit import emit_text_grid
from ccfrieze.modules import FlClass

## The configuration: a triangulation T with a rigid part R inside it
T = [D(1, 7), D(2, 4), D(2, 5), D(2, 7), D(5, 7)]
R = [D(2, 5), D(2, 7)]

## An exponential map: the free part of K_0(T)/N gets three variables
ring = LaurentRing(["u", "v", "z"])
u, v, z = ring.gens()
eps = {D(1, 7): u, D(2, 4): v, D(5, 7): z, D(2, 5): ring.one(), D(2, 7): ring.one()}

ctx = CCContext(8, R, T, eps)
print("quotient free rank:", ctx.kt.Q.free_rank)
print("generators of N:", ", ".join(str(g) for g in ctx.kt.N))

## One value by hand: {4,6}
c = D(4, 6)
G = ctx.G[c]
print("G{4,6} support:", sorted(map(str, G.support)))
print("index of {4,6}:", ctx.kt.index(c))
print("alpha:", ctx.alpha(c))
print("beta of the simple at {2,5}:", ctx.beta(FlClass.unit(ctx.R, D(2, 5))))
print("rho:", ctx.rho(c))

## The whole frieze, laid out like the AR quiver
print(emit_text_grid(ctx.values(), ctx.model))

## Mesh by mesh: defects are 0 or 1, and 1 exactly off the split meshes
report = frieze_check(ctx)
print(report.to_text())
