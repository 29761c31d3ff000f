"""Exact scalars: arbitrary-precision rationals and univariate polynomials in
a formal parameter over the rationals.

Rationals are ``fractions.Fraction`` (always lowest terms, positive
denominator).  The formal parameter is printed as ``L`` in the text grammar;
polynomials in it are the coefficient ring of every symbolic computation in
the engine, so no floating point appears anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction, "LambdaPoly"]


def rational_from_string(s: str) -> Fraction:
    """Parse 'p' or 'p/q' into an exact rational; reject anything else."""
    s = s.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ValueError(f"not a rational: {s!r}")
    return Fraction(s)


def rational_to_string(x: Fraction) -> str:
    """Render a rational as 'p' or 'p/q' (denominator omitted when 1)."""
    return str(x)


class LambdaPoly:
    """Polynomial in the formal parameter with Fraction coefficients.

    Immutable.  ``coeffs[i]`` is the coefficient of the i-th power; the list
    never has a trailing zero, and the zero polynomial has an empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Union[int, Fraction]) -> "LambdaPoly":
        return LambdaPoly([c])

    @staticmethod
    def gen() -> "LambdaPoly":
        """The parameter itself."""
        return LambdaPoly([0, 1])

    @staticmethod
    def coerce(x: Scalar) -> "LambdaPoly":
        if isinstance(x, LambdaPoly):
            return x
        return LambdaPoly([Fraction(x)])

    # -- structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial conventionally -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value as a Fraction; raises if the parameter occurs."""
        if len(self.coeffs) > 1:
            raise ValueError(f"not constant: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly([other])
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: Scalar) -> "LambdaPoly":
        other = LambdaPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return LambdaPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly([-c for c in self.coeffs])

    def __sub__(self, other: Scalar) -> "LambdaPoly":
        return self + (-LambdaPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LambdaPoly":
        return LambdaPoly.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "LambdaPoly":
        other = LambdaPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LambdaPoly":
        if n < 0:
            raise ValueError("negative power")
        r = LambdaPoly([1])
        for _ in range(n):
            r = r * self
        return r

    def divmod(self, other: "LambdaPoly") -> tuple["LambdaPoly", "LambdaPoly"]:
        """Polynomial long division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return LambdaPoly(q), LambdaPoly(rem)

    def exact_div(self, other: "LambdaPoly") -> "LambdaPoly":
        """Division known to be exact; raises if a remainder survives."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division: {self} by {other}")
        return q

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- root extraction ------------------------------------------------

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, by the rational-root theorem, sorted.

        The zero polynomial is rejected: every point would be a root.
        """
        if self.is_zero():
            raise ValueError("zero polynomial rejected")
        coeffs = list(self.coeffs)
        roots: set[Fraction] = set()
        # Strip powers of the parameter: they contribute the root 0.
        low = 0
        while coeffs[low] == 0:
            low += 1
        if low > 0:
            roots.add(Fraction(0))
            coeffs = coeffs[low:]
        if len(coeffs) > 1:
            denom_lcm = 1
            for c in coeffs:
                denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
            ints = [int(c * denom_lcm) for c in coeffs]
            a0, an = abs(ints[0]), abs(ints[-1])
            for p in _divisors(a0):
                for q in _divisors(an):
                    for cand in (Fraction(p, q), Fraction(-p, q)):
                        if self(cand) == 0:
                            roots.add(cand)
        return sorted(roots)

    def deflate_rational_roots(self) -> "LambdaPoly":
        """Divide out all rational roots (with multiplicity)."""
        p = self
        for r in self.rational_roots():
            factor = LambdaPoly([-r, 1])
            while True:
                q, rem = p.divmod(factor)
                if rem.is_zero() and not q.is_zero():
                    p = q
                else:
                    break
        return p

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                lam = "L" if i == 1 else f"L^{i}"
                body = lam if mag == 1 else f"{mag}*{lam}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LambdaPoly({self})"


LAMBDA = LambdaPoly.gen()
ZERO = LambdaPoly()
ONE = LambdaPoly([1])


def poly_gcd(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    """Monic gcd in the polynomial ring over the rationals."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a * LambdaPoly([1 / a.leading()])


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*(?:\*?\s*L(?:\s*\^\s*(?P<pow>\d+))?)?"
)


def parse_lambda_poly(s: str) -> LambdaPoly:
    """Parse the textual form produced by ``str(LambdaPoly)``."""
    s = s.strip()
    if s in ("0", ""):
        return ZERO
    out = ZERO
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad parameter polynomial near {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        has_lam = "L" in s[m.start() : m.end()]
        power = int(m.group("pow")) if m.group("pow") else (1 if has_lam else 0)
        if m.group("coef") is None and not has_lam:
            raise ValueError(f"bad parameter polynomial near {s[pos:]!r}")
        term = [Fraction(0)] * power + [sign * coef]
        out = out + LambdaPoly(term)
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    """Positive divisors of |n|, with the convention that 0 has divisor 1."""
    n = abs(n)
    if n == 0:
        return [1]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]
