"""
The same triangulation seen three ways: the classical cluster character
(R = T), the modified map, and the integer frieze obtained by sending every
variable to 1.
"""

from ccfrieze import CCContext, Diagonal as D, frieze_check, integer_context, original_cc_context

T = [D(1, 7), D(2, 4), D(2, 5), D(2, 7), D(5, 7)]
R = [D(2, 5), D(2, 7)]

## Classical: every mesh has defect 1, the Conway-Coxeter rule
classical = original_cc_context(8, T, dict(zip(T, "uvxyz")))
for d, p in sorted(classical.values().items())[:6]:
    print(f"{str(d):>6}  {p}")
print("defect-1 meshes:", len(frieze_check(classical).defect_meshes()), "of 20")

## Modified with an automatically chosen epsilon (variables x1, x2, ...)
modified = CCContext(8, R, T)
print("variables:", modified.ring.names)
print("defect-1 meshes:", [str(d) for d in frieze_check(modified).defect_meshes()])

## Integer frieze: submodule counts weighted by 1
ints = integer_context(8, R, T)
ones = dict.fromkeys(modified.ring.names, 1)
for d in sorted(ints.values()):
    assert ints.rho(d).constant_value() == modified.rho(d).evaluate(ones)
print("integer values:", [ints.rho(d).constant_value() for d in sorted(ints.values())])
