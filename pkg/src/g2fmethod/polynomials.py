"""Sparse multivariate polynomials in the five dual coordinates.

A polynomial is a dict from exponent tuples to ``LambdaPoly`` coefficients;
zero coefficients are never stored.  The canonical term order is graded
lexicographic with the first variable largest, which makes every serialized
form byte-stable.

The text grammar writes the variables as ``x1 .. x5``:

    4*x1*x4 + x3^2
    (2*L + 5)*x1 - 1/2*x3
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple, Union

from .scalars import LambdaPoly, Scalar

NVARS = 5

Monomial = Tuple[int, ...]

ZERO_MONO: Monomial = (0,) * NVARS


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def term_sort_key(m: Monomial):
    """Graded lex, biggest first when sorting with reverse=True."""
    return (sum(m), m)


class XiPolynomial:
    """Polynomial in the five dual coordinates over the parameter ring."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, LambdaPoly]] = None):
        clean: Dict[Monomial, LambdaPoly] = {}
        if terms:
            for m, c in terms.items():
                c = LambdaPoly.coerce(c)
                if not c.is_zero():
                    if len(m) != NVARS:
                        raise ValueError(f"monomial {m} must have {NVARS} exponents")
                    clean[tuple(m)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "XiPolynomial":
        return XiPolynomial()

    @staticmethod
    def constant(c: Scalar) -> "XiPolynomial":
        return XiPolynomial({ZERO_MONO: LambdaPoly.coerce(c)})

    @staticmethod
    def variable(i: int) -> "XiPolynomial":
        """The i-th coordinate, 1-based."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * NVARS
        e[i - 1] = 1
        return XiPolynomial({tuple(e): LambdaPoly.const(1)})

    @staticmethod
    def monomial(m: Monomial, c: Scalar = 1) -> "XiPolynomial":
        return XiPolynomial({tuple(m): LambdaPoly.coerce(c)})

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m: Monomial) -> LambdaPoly:
        return self.terms.get(tuple(m), LambdaPoly())

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> Iterator[Tuple[Monomial, LambdaPoly]]:
        for m in sorted(self.terms, key=term_sort_key, reverse=True):
            yield m, self.terms[m]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "XiPolynomial") -> "XiPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, LambdaPoly()) + c
        return XiPolynomial(out)

    def __neg__(self) -> "XiPolynomial":
        return XiPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "XiPolynomial") -> "XiPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["XiPolynomial", int, Fraction, LambdaPoly]) -> "XiPolynomial":
        if not isinstance(other, XiPolynomial):
            c = LambdaPoly.coerce(other)
            return XiPolynomial({m: v * c for m, v in self.terms.items()})
        out: Dict[Monomial, LambdaPoly] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, LambdaPoly()) + ca * cb
        return XiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "XiPolynomial":
        if n < 0:
            raise ValueError("negative power")
        r = XiPolynomial.constant(1)
        for _ in range(n):
            r = r * self
        return r

    def scale(self, c: Scalar) -> "XiPolynomial":
        return self * LambdaPoly.coerce(c)

    def evaluate_lambda(self, x: Fraction) -> "XiPolynomial":
        """Substitute an exact rational for the formal parameter."""
        return XiPolynomial(
            {m: LambdaPoly.const(c(x)) for m, c in self.terms.items()}
        )

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return format_terms(self.sorted_terms(), _XI_NAMES)

    def __repr__(self) -> str:
        return f"XiPolynomial({self})"

    def to_latex(self) -> str:
        return format_terms(self.sorted_terms(), _XI_LATEX, latex=True)


def poly_arith(a: XiPolynomial, b: XiPolynomial, op: str) -> XiPolynomial:
    """Exact ring operation on polynomials; op is 'add', 'sub' or 'mul'."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# shared term formatting / parsing for the polynomial-like grammars
# ---------------------------------------------------------------------------

_XI_NAMES = tuple(f"x{i}" for i in range(1, NVARS + 1))
_XI_LATEX = tuple(rf"\xi_{i}" for i in range(1, NVARS + 1))


def format_coefficient(c: LambdaPoly, latex: bool = False) -> Tuple[str, str]:
    """Split a coefficient into (sign, magnitude-string); '' means +.

    Nonconstant parameter polynomials are parenthesized and always carry
    sign '+' so the parenthesis holds the full polynomial.
    """
    if c.is_constant():
        v = c.constant_value()
        sign = "-" if v < 0 else "+"
        return sign, str(abs(v))
    s = str(c)
    if latex:
        s = s.replace("L", r"\lambda").replace("*", " ")
    return "+", f"({s})"


def format_monomial(m: Monomial, names: Tuple[str, ...], latex: bool = False) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif latex:
            parts.append(f"{name}^{{{e}}}" if e >= 10 else f"{name}^{e}")
        else:
            parts.append(f"{name}^{e}")
    joiner = " " if latex else "*"
    return joiner.join(parts)


def format_terms(sorted_terms, names: Tuple[str, ...], latex: bool = False) -> str:
    """Render (monomial, coefficient) pairs as a signed sum."""
    pieces = []
    for m, c in sorted_terms:
        sign, mag = format_coefficient(c, latex=latex)
        body = format_monomial(m, names, latex=latex)
        if body:
            joiner = " " if latex else "*"
            term = body if mag == "1" else f"{mag}{joiner}{body}"
        else:
            term = mag
        if not pieces:
            pieces.append(term if sign == "+" else f"-{term}")
        else:
            pieces.append(f"+ {term}" if sign == "+" else f"- {term}")
    if not pieces:
        return "0"
    return " ".join(pieces)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<lparen>\()|(?P<rparen>\))"
    r"|(?P<name>g_-\d+|[A-Za-z_][A-Za-z0-9_]*)|(?P<pow>\^)|(?P<mul>\*))"
)


def tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize near {s[pos:]!r}")
        for kind in ("sign", "num", "lparen", "rparen", "name", "pow", "mul"):
            if m.group(kind):
                out.append((kind, m.group(kind)))
                break
        pos = m.end()
    return out


def parse_terms(s: str, names: Tuple[str, ...]):
    """Parse the signed-sum grammar; yields (exponent tuple, LambdaPoly).

    ``names`` maps variable spellings to positions.  A name not listed is an
    error, except the special trailing 'v' handled by the caller via names.
    """
    from .scalars import parse_lambda_poly

    index = {n: i for i, n in enumerate(names)}
    toks = tokenize(s.strip())
    if not toks:
        raise ValueError("empty polynomial text")
    i = 0
    n = len(toks)
    while i < n:
        sign = 1
        while i < n and toks[i][0] == "sign":
            if toks[i][1] == "-":
                sign = -sign
            i += 1
        coeff = LambdaPoly.const(1)
        expo = [0] * len(names)
        saw_factor = False
        expect_factor = True
        while i < n:
            kind, val = toks[i]
            if kind == "sign" and not expect_factor:
                break
            if kind == "mul":
                i += 1
                expect_factor = True
                continue
            if kind == "num":
                coeff = coeff * Fraction(val)
                saw_factor = True
                expect_factor = False
                i += 1
            elif kind == "lparen":
                depth, j = 1, i + 1
                while j < n and depth:
                    if toks[j][0] == "lparen":
                        depth += 1
                    elif toks[j][0] == "rparen":
                        depth -= 1
                    j += 1
                inner = " ".join(t[1] for t in toks[i + 1 : j - 1])
                coeff = coeff * parse_lambda_poly(inner)
                saw_factor = True
                expect_factor = False
                i = j
            elif kind == "name":
                if val == "L":
                    p = 1
                    if i + 1 < n and toks[i + 1][0] == "pow":
                        p = int(toks[i + 2][1])
                        i += 2
                    coeff = coeff * (LambdaPoly.gen() ** p)
                    saw_factor = True
                    expect_factor = False
                    i += 1
                    continue
                if val not in index:
                    raise ValueError(f"unknown symbol {val!r}")
                p = 1
                if i + 1 < n and toks[i + 1][0] == "pow":
                    p = int(toks[i + 2][1])
                    i += 2
                expo[index[val]] += p
                saw_factor = True
                expect_factor = False
                i += 1
            else:
                raise ValueError(f"unexpected token {val!r}")
        if not saw_factor:
            raise ValueError("dangling sign in polynomial text")
        yield tuple(expo), coeff * sign


def parse_xi_polynomial(s: str) -> XiPolynomial:
    """Inverse of ``str(XiPolynomial)``."""
    s = s.strip()
    if s == "0":
        return XiPolynomial.zero()
    out: Dict[Monomial, LambdaPoly] = {}
    for expo, coeff in parse_terms(s, _XI_NAMES):
        out[expo] = out.get(expo, LambdaPoly()) + coeff
    return XiPolynomial(out)
