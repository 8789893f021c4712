"""The target ring for virtual classes: Z[q], its localization, and Q(q).

`ClassPoly` is a univariate polynomial in q = [A^1] over arbitrary-precision
integers.  `ClassExpr` is an exact fraction of two such polynomials; the
pipeline computes in the full fraction field but asserts `is_localized`
(denominator a product of powers of q and q-1) on TQFT intermediates and
forces final results through `as_polynomial`.

E-polynomials are obtained by the substitution q = u*v and are returned as
plain bivariate `Poly` values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from .poly import ParseError, Poly, parse_poly


class NotPolynomial(ValueError):
    """A localized class was asked to be a polynomial but has a denominator."""


class PoleAtPoint(ZeroDivisionError):
    """Evaluation point hits a zero of the denominator."""


class ClassPoly:
    """Element of Z[q], stored as a dense coefficient tuple (low to high)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------

    @staticmethod
    def const(c: int) -> "ClassPoly":
        return ClassPoly((c,))

    @staticmethod
    def q(power: int = 1) -> "ClassPoly":
        return ClassPoly([0] * power + [1])

    @staticmethod
    def parse(text: str) -> "ClassPoly":
        p = parse_poly(text)
        extra = p.variables() - {"q"}
        if extra:
            raise ParseError(f"expected a polynomial in q, found {sorted(extra)}")
        out = [0] * (p.degree_in("q") + 1)
        for mono, c in p.terms.items():
            e = mono[0][1] if mono else 0
            out[e] = c
        return ClassPoly(out)

    @staticmethod
    def from_poly(p: Poly) -> "ClassPoly":
        return ClassPoly.parse(str(p))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
            if g == 1:
                break
        return g

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ClassPoly.const(other)
        if not isinstance(other, ClassPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "ClassPoly":
        other = _as_cp(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ClassPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ClassPoly":
        return ClassPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "ClassPoly":
        return self + (-_as_cp(other))

    def __rsub__(self, other) -> "ClassPoly":
        return _as_cp(other) + (-self)

    def __mul__(self, other) -> "ClassPoly":
        other = _as_cp(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ClassPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ClassPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ClassPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = ClassPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "ClassPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return ClassPoly([0] * k + list(self.coeffs))

    def divmod_exact(self, other: "ClassPoly"):
        """(quotient, remainder) over Q, returned only when both are integral."""
        q, r = _poly_divmod_q(self.coeffs, other.coeffs)
        if q is None:
            return None, None
        return ClassPoly(q), ClassPoly(r)

    def exact_div(self, other: "ClassPoly") -> Optional["ClassPoly"]:
        q, r = self.divmod_exact(other)
        if q is None or (r is not None and not r.is_zero()):
            return None
        return q

    def evaluate(self, point) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- printing --------------------------------------------------------------

    def to_poly(self) -> Poly:
        q = Poly.var("q")
        acc = Poly.zero()
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + Poly.const(c) * q**i
        return acc

    def __str__(self) -> str:
        return str(self.to_poly())

    def __repr__(self) -> str:
        return f"ClassPoly({self})"

    def factored_str(self) -> str:
        """`q^3*(q-1)^5*(q-2)` style printing.

        Pulls out maximal powers of q, (q-1) and (q-2); any remaining factor
        is printed expanded in parentheses.  Falls back to the expanded form
        when nothing splits off.
        """
        if not self.coeffs:
            return "0"
        rest = self
        powers = []
        for base, label in ((ClassPoly((0, 1)), "q"), (ClassPoly((-1, 1)), "(q-1)"), (ClassPoly((-2, 1)), "(q-2)")):
            n = 0
            while True:
                quot = rest.exact_div(base)
                if quot is None:
                    break
                rest = quot
                n += 1
            if n:
                powers.append(f"{label}^{n}" if n > 1 else label)
        if not powers:
            return str(self)
        if rest == ClassPoly.const(1):
            return "*".join(powers)
        if rest == ClassPoly.const(-1):
            return "-" + "*".join(powers)
        if rest.degree() == 0:
            return "*".join([str(rest.coeffs[0])] + powers)
        return "*".join(powers + [f"({rest})"])


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _as_cp(x) -> ClassPoly:
    if isinstance(x, ClassPoly):
        return x
    if isinstance(x, int):
        return ClassPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ClassPoly")


def _poly_divmod_q(a: tuple, b: tuple):
    """Division over Q; returns integer-coefficient (q, r) or (None, None)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    deg_b = len(b) - 1
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * max(0, len(a) - deg_b)
    while len(a) - 1 >= deg_b and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < deg_b:
            break
        k = len(a) - 1 - deg_b
        f = a[-1] / lead
        quot[k] = f
        for i, c in enumerate(b):
            a[k + i] -= f * c
        a.pop()
    rem = a
    if any(c.denominator != 1 for c in quot) or any(c.denominator != 1 for c in rem):
        return None, None
    return [int(c) for c in quot], [int(c) for c in rem]


def _poly_gcd(a: ClassPoly, b: ClassPoly) -> ClassPoly:
    """Primitive gcd in Z[q] with positive leading coefficient."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]
    while fb and any(fb):
        fa, fb = fb, _frac_mod(fa, fb)
    while fa and fa[-1] == 0:
        fa.pop()
    if not fa:
        return ClassPoly()
    # scale to primitive integer coefficients, positive leading coefficient
    from math import lcm

    den = 1
    for c in fa:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in fa]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return ClassPoly([c // g for c in ints])


def _frac_mod(a: list, b: list) -> list:
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    deg_b = len(b) - 1
    lead = b[-1]
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    while len(r) - 1 >= deg_b:
        f = r[-1] / lead
        k = len(r) - 1 - deg_b
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


ONE = ClassPoly.const(1)


class ClassExpr:
    """Exact fraction num/den of elements of Z[q], canonical form.

    gcd(num, den) = 1 over Q, both with integer coefficients of joint
    content 1, and den has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_cp(num)
        den = _as_cp(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ClassPoly(), ONE
            return
        g = _poly_gcd(num, den)
        if g.degree() > 0 or g.leading() != 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
        cn, cd = num.content(), den.content()
        c = _gcd(cn, cd)
        if den.leading() < 0:
            c = -c
        if c != 1:
            num = ClassPoly([x // c for x in num.coeffs])
            den = ClassPoly([x // c for x in den.coeffs])
        self.num, self.den = num, den

    @staticmethod
    def from_poly(p: ClassPoly) -> "ClassExpr":
        return ClassExpr(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, ClassPoly)):
            other = ClassExpr(other)
        if not isinstance(other, ClassExpr):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> "ClassExpr":
        other = _as_ce(other)
        return ClassExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "ClassExpr":
        return ClassExpr(-self.num, self.den)

    def __sub__(self, other) -> "ClassExpr":
        return self + (-_as_ce(other))

    def __rsub__(self, other) -> "ClassExpr":
        return _as_ce(other) + (-self)

    def __mul__(self, other) -> "ClassExpr":
        other = _as_ce(other)
        return ClassExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ClassExpr":
        other = _as_ce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero class")
        return ClassExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "ClassExpr":
        return _as_ce(other) / self

    def __pow__(self, n: int) -> "ClassExpr":
        if n < 0:
            inv = ClassExpr(self.den, self.num)
            return inv ** (-n)
        return ClassExpr(self.num**n, self.den**n)

    def is_localized(self) -> bool:
        """True iff the denominator is q^a * (q-1)^b for some a, b >= 0."""
        rest = self.den
        for base in (ClassPoly((0, 1)), ClassPoly((-1, 1))):
            while True:
                quot = rest.exact_div(base)
                if quot is None:
                    break
                rest = quot
        return rest == ONE

    def as_polynomial(self) -> ClassPoly:
        if self.den != ONE:
            raise NotPolynomial(f"denominator {self.den} is not trivial")
        return self.num

    def evaluate_at(self, point) -> Fraction:
        point = Fraction(point)
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleAtPoint(f"pole at q = {point}")
        return self.num.evaluate(point) / d

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def factored_str(self) -> str:
        if self.den == ONE:
            return self.num.factored_str()
        return f"({self.num.factored_str()}) / ({self.den.factored_str()})"

    def __repr__(self) -> str:
        return f"ClassExpr({self})"


def _as_ce(x) -> ClassExpr:
    if isinstance(x, ClassExpr):
        return x
    if isinstance(x, (int, ClassPoly)):
        return ClassExpr(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ClassExpr")


def evaluate_at(a: Union[ClassPoly, ClassExpr], point) -> Fraction:
    """Exact evaluation q -> point; realizes F_p point counts for good classes."""
    if isinstance(a, ClassPoly):
        return a.evaluate(Fraction(point))
    return a.evaluate_at(point)


def e_polynomial(a: ClassPoly) -> Poly:
    """Substitute q = u*v; the Deligne-Hodge specialization of the class."""
    terms = {}
    for i, c in enumerate(a.coeffs):
        if c:
            mono = (("u", i), ("v", i)) if i else ()
            terms[mono] = c
    return Poly(terms)
