"""Exact multivariate Laurent polynomials over the integers.

A :class:`LaurentRing` fixes an ordered tuple of variable names; every
:class:`LaurentPoly` carries its ring and maps exponent vectors to nonzero
integer coefficients.  Values are immutable and hashable.

Text form::

    poly := term (('+'|'-') term)*
    term := int? ('*'? mono)?
    mono := var('^'int)? ('*' var('^'int)?)*

plus the fraction form ``(poly)/mono``.  The printer uses the fraction form
whenever some variable appears with a negative exponent and the numerator has
more than one term, e.g. ``(1+v*z)/z``; single terms print with negative
exponents, e.g. ``u*z^-1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class LaurentRing:
    """The ring Z[x_1^{+-1}, ..., x_k^{+-1}] on a fixed ordered variable table."""

    def __init__(self, names: Iterable[str] = ()):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.names == other.names

    def __hash__(self):
        return hash(("LaurentRing", self.names))

    def __repr__(self):
        return f"LaurentRing({list(self.names)!r})"

    def zero(self) -> LaurentPoly:
        return LaurentPoly(self, {})

    def one(self) -> LaurentPoly:
        return self.constant(1)

    def constant(self, c: int) -> LaurentPoly:
        return LaurentPoly(self, {(0,) * self.nvars: c})

    def monomial(self, exponents: Iterable[int], coeff: int = 1) -> LaurentPoly:
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars:
            raise ValueError("exponent vector length does not match variable count")
        return LaurentPoly(self, {exponents: coeff})

    def gen(self, name: str) -> LaurentPoly:
        e = [0] * self.nvars
        e[self.names.index(name)] = 1
        return self.monomial(e)

    def gens(self) -> tuple[LaurentPoly, ...]:
        return tuple(self.gen(n) for n in self.names)

    def parse(self, text: str) -> LaurentPoly:
        return _Parser(self, text).parse()


class LaurentPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: Mapping[Exponents, int]):
        self.ring = ring
        self.terms = {e: int(c) for e, c in terms.items() if c != 0}
        self._hash = None

    # -- structure ---------------------------------------------------------

    def _check(self, other: LaurentPoly) -> None:
        if self.ring != other.ring:
            raise ValueError(
                f"variable-table mismatch: {self.ring.names} vs {other.ring.names}"
            )

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return all(e == zero for e in self.terms)

    def constant_value(self) -> int | None:
        """The integer this polynomial equals, or None if it is not constant."""
        if not self.is_constant():
            return None
        return self.terms.get((0,) * self.ring.nvars, 0)

    def is_signed_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in graded order: total degree ascending, then exponent vector descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), [-e for e in t[0]]))

    def denominator(self) -> Exponents:
        """Exponents of the smallest monomial clearing all negative exponents."""
        if not self.terms:
            return (0,) * self.ring.nvars
        return tuple(
            max(0, -min(e[i] for e in self.terms)) for i in range(self.ring.nvars)
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_signed_monomial():
                raise ValueError("only signed monomials are invertible")
            ((e, c),) = self.terms.items()
            return LaurentPoly(self.ring, {tuple(k * n for k in e): c ** (-n)})
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        return self ** -1

    def __eq__(self, other):
        if isinstance(other, int):
            return self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, int | Fraction]) -> Fraction:
        """Exact value at a total assignment of nonzero numbers to the variables."""
        values = []
        for name in self.ring.names:
            if name not in assignment:
                raise KeyError(f"no value assigned to {name!r}")
            v = Fraction(assignment[name])
            if v == 0:
                raise ZeroDivisionError(f"variable {name!r} assigned zero")
            values.append(v)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(values, e):
                t *= v**k
            total += t
        return total

    # -- text --------------------------------------------------------------

    def _mono_str(self, e: Exponents) -> str:
        parts = []
        for name, k in zip(self.ring.names, e):
            if k == 1:
                parts.append(name)
            elif k != 0:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def _sum_str(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = self._mono_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(sign + body)
        return "".join(out)

    def __str__(self):
        den = self.denominator()
        if len(self.terms) > 1 and any(den):
            num = self * self.ring.monomial(den)
            return f"({num._sum_str()})/{self._mono_str(den)}"
        return self._sum_str()

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|(\+)|(-)|(\()|(\))|(/))")


class _Parser:
    def __init__(self, ring: LaurentRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._lex(text)
        self.pos = 0

    def _lex(self, text):
        tokens = []
        i = 0
        kinds = ("int", "var", "^", "*", "+", "-", "(", ")", "/")
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN.match(text, i)
            if not m:
                raise ValueError(f"cannot parse {text!r} at position {i}")
            for kind, val in zip(kinds, m.groups()):
                if val is not None:
                    tokens.append((kind, val))
                    break
            i = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ValueError(f"unexpected end of input in {self.text!r}")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r}, got {tok[1]!r} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        p = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input {self.tokens[self.pos][1]!r} in {self.text!r}")
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        total = self.signed_term(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.signed_term(sign)
        return total

    def signed_term(self, sign: int) -> LaurentPoly:
        if self.peek() == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            if self.peek() == "/":
                self.take("/")
                inner = inner * self.mono().inverse()
            elif self.peek() == "*":
                self.take("*")
                inner = inner * self.mono()
            return inner * sign
        coeff = 1
        have_int = False
        if self.peek() == "int":
            coeff = int(self.take()[1])
            have_int = True
            if self.peek() == "*":
                self.take("*")
        if self.peek() == "var":
            term = self.mono() * coeff
        elif have_int:
            term = self.ring.constant(coeff)
        else:
            raise ValueError(f"empty term in {self.text!r}")
        if self.peek() == "/":
            self.take("/")
            term = term * self.mono().inverse()
        return term * sign

    def mono(self) -> LaurentPoly:
        e = [0] * self.ring.nvars
        while True:
            _, name = self.take("var")
            if name not in self.ring.names:
                raise ValueError(f"unknown variable {name!r} in {self.text!r}")
            k = 1
            if self.peek() == "^":
                self.take("^")
                neg = False
                if self.peek() == "-":
                    self.take("-")
                    neg = True
                k = int(self.take("int")[1])
                k = -k if neg else k
            e[self.ring.names.index(name)] += k
            if self.peek() == "*" and self._next_is_var():
                self.take("*")
                continue
            return self.ring.monomial(e)

    def _next_is_var(self):
        return self.pos + 1 < len(self.tokens) and self.tokens[self.pos + 1][0] == "var"
