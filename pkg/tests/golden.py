"""Reference frieze tables for the worked 8-gon configuration, transcribed by hand.

Values are kept as plain rational-function strings (implicit multiplication,
single-letter variables) and compared through sympy, so the comparison does
not depend on this package's own parser or printer.
"""

import random
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import (
    implicit_multiplication,
    parse_expr,
    split_symbols,
    standard_transformations,
)

from ccfrieze import Diagonal

WORKED_T = [(1, 7), (2, 4), (2, 5), (2, 7), (5, 7)]
WORKED_R = [(2, 5), (2, 7)]

# rows of the AR quiver of the 8-gon, top to bottom, as drawn
AR_ROWS = [
    [(5, 7), (6, 8), (1, 7), (2, 8), (1, 3)],
    [(5, 8), (1, 6), (2, 7), (3, 8)],
    [(4, 8), (1, 5), (2, 6), (3, 7), (4, 8)],
    [(1, 4), (2, 5), (3, 6), (4, 7)],
    [(1, 3), (2, 4), (3, 5), (4, 6), (5, 7)],
]

MODIFIED_ROWS = [
    ["z", "(u+z)/(uz)", "u", "1/u", "(1+uv+vz)/v"],
    ["(u+z)/u", "(u+z)/z", "1", "(1+uv+vz)/(uv)"],
    ["(1+uv+vz)/u", "u+z", "1/z", "(1+vz)/v", "(1+uv+vz)/u"],
    ["1+uv+vz", "1", "(1+vz)/(vz)", "1+vz"],
    ["(1+uv+vz)/v", "v", "1/v", "(1+vz)/z", "z"],
]

CLASSICAL_ROWS = [
    ["z", "(ux+uy+yz+z)/(uyz)", "u", "(y+1)/u", "(uvx+vz+xy+y)/(vxy)"],
    ["(ux+yz+z)/(uy)", "(ux+uy+z)/(yz)", "y", "(uvx+vyz+vz+xy+xy^2+y+y^2)/(uvxy)"],
    ["(uvx+vyz+vz+y+y^2)/(uxy)", "(ux+z)/y", "(x+y)/z", "(vz+xy+y)/(vx)",
     "(uvx+vyz+vz+y+y^2)/(uxy)"],
    ["(uvx+vz+y)/(xy)", "x", "(vz+x+x^2+xy+y)/(vxz)", "(vz+y)/x"],
    ["(uvx+vz+xy+y)/(vxy)", "v", "(x+1)/v", "(vz+x+y)/(xz)", "z"],
]

DEFECT_ONE = [(2, 5), (2, 7), (3, 6), (3, 8), (5, 8)]

_TRANSFORMS = standard_transformations + (split_symbols, implicit_multiplication)


def parse_rational(text: str) -> sympy.Expr:
    return parse_expr(text.replace("^", "**"), transformations=_TRANSFORMS)


def table(rows) -> dict[Diagonal, sympy.Expr]:
    out = {}
    for obj_row, val_row in zip(AR_ROWS, rows):
        for (i, j), text in zip(obj_row, val_row):
            d = Diagonal(i, j)
            expr = parse_rational(text)
            if d in out:
                assert sympy.simplify(out[d] - expr) == 0
            out[d] = expr
    return out


def to_sympy(p) -> sympy.Expr:
    syms = [sympy.Symbol(n) for n in p.ring.names]
    total = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Integer(c)
        for s, k in zip(syms, e):
            term *= s**k
        total += term
    return total


def same(p, expr) -> bool:
    return sympy.simplify(to_sympy(p) - expr) == 0


def diag(pairs):
    return [Diagonal(i, j) for i, j in pairs]


def fractions_at(names, seed):
    rng = random.Random(seed)
    return {n: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for n in names}
