"""Exact sparse multivariate polynomials over arbitrary-precision integers.

A monomial is a tuple of (variable, exponent) pairs, sorted by variable name,
with all exponents positive; the empty tuple is the constant monomial.  A
polynomial is a map from monomials to nonzero integer coefficients, so equal
polynomials always have identical term maps.  The canonical term order is
graded lexicographic on variable names (total degree first, then earlier
variables dominate), which fixes leading terms, printing, and the sign
convention used for square roots.

Rationals only enter through root values (`fractions.Fraction`); all ring
arithmetic stays in Z[x1, ..., xn].
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

Monomial = tuple  # tuple[tuple[str, int], ...]

VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

Rational = Fraction


class NonLinearFactorization(Exception):
    """A univariate polynomial has an irreducible factor of degree >= 2 over Q."""


class ParseError(ValueError):
    """Malformed polynomial or variety text."""


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(m: Monomial, d: Monomial) -> Optional[Monomial]:
    """m / d, or None if d does not divide m."""
    rem = dict(m)
    for v, e in d:
        have = rem.get(v, 0)
        if have < e:
            return None
        if have == e:
            del rem[v]
        else:
            rem[v] = have - e
    return tuple(sorted(rem.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


_MONO_KEY_CACHE: dict = {}


def _mono_key(m: Monomial):
    # Ascending sort under this key == descending graded-lex term order.
    k = _MONO_KEY_CACHE.get(m)
    if k is None:
        k = (-_mono_deg(m), tuple((v, -e) for v, e in m))
        if len(_MONO_KEY_CACHE) > 1_000_000:
            _MONO_KEY_CACHE.clear()
        _MONO_KEY_CACHE[m] = k
    return k


def _int_nth_root(c: int, n: int) -> Optional[int]:
    """Exact integer n-th root of c, or None."""
    if c == 0:
        return 0
    neg = c < 0
    if neg and n % 2 == 0:
        return None
    a = abs(c)
    r = round(a ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand > 0 and cand**n == a:
            return -cand if neg else cand
    return None


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


class Poly:
    """Immutable multivariate polynomial with integer coefficients."""

    __slots__ = ("terms", "_hash", "_key", "_skey", "_str", "_vars", "_degs", "_ord")

    def __init__(self, terms: dict):
        self.terms = terms
        self._hash = None
        self._key = None
        self._skey = None
        self._str = None
        self._vars = None
        self._degs = None
        self._ord = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def const(c: int) -> "Poly":
        if c == 0:
            return _ZERO
        return Poly({(): int(c)})

    @staticmethod
    def var(name: str, exp: int = 1) -> "Poly":
        if not VAR_RE.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
        if exp == 0:
            return Poly.const(1)
        return Poly({((name, exp),): 1})

    @staticmethod
    def _from_raw(terms: dict) -> "Poly":
        return Poly({m: c for m, c in terms.items() if c})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> int:
        if not self.terms:
            return 0
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        raise ValueError("not a constant polynomial")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> frozenset:
        vs = self._vars
        if vs is None:
            out = set()
            for m in self.terms:
                for v, _ in m:
                    out.add(v)
            vs = frozenset(out)
            self._vars = vs
        return vs

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(_mono_deg(m) for m in self.terms)

    def degree_in(self, x: str) -> int:
        return self.degrees().get(x, 0)

    def degrees(self) -> dict:
        """Max degree per variable."""
        out = self._degs
        if out is None:
            out = {}
            for m in self.terms:
                for v, e in m:
                    if e > out.get(v, 0):
                        out[v] = e
            self._degs = out
        return out

    def ordered_terms(self) -> list:
        """Terms as (monomial, coeff) pairs in canonical (descending) order."""
        out = self._ord
        if out is None:
            out = sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))
            self._ord = out
        return out

    _ordered = ordered_terms

    def leading(self) -> tuple:
        """(monomial, coeff) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = min(self.terms, key=_mono_key)
        return m, self.terms[m]

    def trailing(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no trailing term")
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def content(self) -> int:
        """Positive gcd of coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = _gcd(g, c)
            if g == 1:
                return 1
        return g

    def monomial_gcd(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        try:
            first = next(it)
        except StopIteration:
            return ()
        common = dict(first)
        for m in it:
            if not common:
                break
            d = dict(m)
            for v in list(common):
                e = d.get(v, 0)
                if e == 0:
                    del common[v]
                elif e < common[v]:
                    common[v] = e
        return tuple(sorted(common.items()))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            n = out.get(m, 0) + c
            if n:
                out[m] = n
            else:
                del out[m]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((m1, c1),) = a.items()
            if not m1:
                return Poly({m: c1 * c for m, c in b.items()})
            return Poly({_mono_mul(m1, m): c1 * c for m, c in b.items()})
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                n = out.get(m, 0) + c1 * c2
                if n:
                    out[m] = n
                else:
                    del out[m]
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_constant() and (self.constant_value() == other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            self._hash = h
        return h

    def sort_key(self):
        """Canonical total order on polynomials (graded-lex of the printed form)."""
        k = self._key
        if k is None:
            flat = []
            for m, c in self._ordered():
                flat.append((_mono_key(m), c))
            k = (self.total_degree(), len(self.terms), tuple(flat))
            self._key = k
        return k

    def struct_key(self):
        """Name-free shape: invariant under variable renaming."""
        k = self._skey
        if k is None:
            shape = sorted(
                (tuple(sorted((e for _, e in m), reverse=True)), c) for m, c in self.terms.items()
            )
            k = (self.total_degree(), len(self.terms), tuple(shape))
            self._skey = k
        return k

    def __lt__(self, other) -> bool:
        return self.sort_key() < other.sort_key()

    # -- normalization ----------------------------------------------------

    def primitive_signed(self) -> "Poly":
        """Divide out the integer content and make the leading coefficient positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading()[1] < 0:
            c = -c
        if c == 1:
            return self
        return Poly({m: v // c for m, v in self.terms.items()})

    def divide_monomial(self, mono: Monomial) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            d = _mono_div(m, mono)
            if d is None:
                raise ValueError("monomial does not divide polynomial")
            out[d] = c
        return Poly(out)

    # -- substitution ------------------------------------------------------

    def coefficients_in(self, x: str) -> list:
        """Coefficient polynomials of x^0, x^1, ..., x^deg; each free of x."""
        d = self.degree_in(x)
        buckets: list = [dict() for _ in range(d + 1)]
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, ve in m:
                if v == x:
                    e = ve
                else:
                    rest.append((v, ve))
            buckets[e][tuple(rest)] = c
        return [Poly(b) for b in buckets]

    def substitute(self, x: str, value) -> "Poly":
        """Replace x by a polynomial (or integer), fully expanded."""
        if x not in self.variables():
            return self
        u = _coerce(value)
        coeffs = self.coefficients_in(x)
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * u + c
        return acc

    def substitute_cleared(self, x: str, num, den) -> "Poly":
        """den^deg_x(self) * self(x := num/den), expanded over Z.

        Uses exactly deg_x(self) clearing factors even when num/den cancels.
        """
        if x not in self.variables():
            return self
        num = _coerce(num)
        den = _coerce(den)
        coeffs = self.coefficients_in(x)
        acc = coeffs[-1]
        vp = Poly.const(1)
        for c in reversed(coeffs[:-1]):
            vp = vp * den
            acc = acc * num + c * vp
        return acc

    def compose(self, mapping: dict) -> "Poly":
        """Evaluate with every variable replaced by a polynomial (or int)."""
        cache: dict = {}

        def power(v: str, e: int) -> Poly:
            p = cache.get((v, e))
            if p is None:
                base = _coerce(mapping.get(v, Poly.var(v)))
                p = base**e
                cache[(v, e)] = p
            return p

        acc = _ZERO
        for m, c in self.terms.items():
            t = Poly.const(c)
            for v, e in m:
                t = t * power(v, e)
            acc = acc + t
        return acc

    def evaluate(self, point: dict):
        """Exact evaluation at a rational/integer point."""
        acc = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= point[v] ** e
            acc += t
        return acc

    def derivative(self, x: str) -> "Poly":
        out: dict = {}
        for m, c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                if v == x:
                    rest = m[:idx] + ((v, e - 1),) + m[idx + 1 :] if e > 1 else m[:idx] + m[idx + 1 :]
                    out[rest] = out.get(rest, 0) + c * e
                    break
        return Poly._from_raw(out)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        s = self._str
        if s is None:
            s = _format_poly(self)
            self._str = s
        return s

    def __repr__(self) -> str:
        return f"Poly({self})"


def mono_deg(m: Monomial) -> int:
    """Total degree of a monomial."""
    return _mono_deg(m)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


_ZERO = Poly({})


def _format_mono(m: Monomial, c: int) -> str:
    parts = [f"{v}^{e}" if e > 1 else v for v, e in m]
    body = "*".join(parts)
    a = abs(c)
    if not body:
        return str(a)
    if a == 1:
        return body
    return f"{a}*{body}"


def _format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p._ordered()):
        piece = _format_mono(m, c)
        if i == 0:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f" + {piece}" if c > 0 else f" - {piece}")
    return "".join(out)


# -- structural queries used by the class-computation rules -----------------


def exact_div(f: Poly, u: Poly) -> Optional[Poly]:
    """f / u if u divides f exactly over Z[S], else None."""
    if u.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return _ZERO
    if u.is_constant():
        c = u.constant_value()
        out = {}
        for m, v in f.terms.items():
            q, r = divmod(v, c)
            if r:
                return None
            out[m] = q
        return Poly(out)
    import heapq

    u_lt, u_lc = u.leading()
    rem = dict(f.terms)
    quot: dict = {}
    heap = [(_mono_key(m), m) for m in rem]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if not c:
            continue
        dm = _mono_div(m, u_lt)
        if dm is None:
            return None
        dc, r = divmod(c, u_lc)
        if r:
            return None
        quot[dm] = quot.get(dm, 0) + dc
        for m2, c2 in u.terms.items():
            mm = _mono_mul(dm, m2)
            old = rem.get(mm, 0)
            n = old - dc * c2
            if n:
                if not old and mm != m:
                    heapq.heappush(heap, (_mono_key(mm), mm))
                rem[mm] = n
            else:
                rem.pop(mm, None)
    if any(rem.values()):
        return None
    return Poly(quot)


def nth_root(f: Poly, n: int) -> Optional[Poly]:
    """Exact n-th root of f over Z[S], or None.

    The returned root has a positive leading coefficient when n is even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return f
    if f.is_zero():
        return _ZERO
    if f.is_constant():
        r = _int_nth_root(f.constant_value(), n)
        return None if r is None else Poly.const(r)
    content = f.content()
    if f.leading()[1] < 0:
        content = -content
    croot = _int_nth_root(content, n)
    if croot is None:
        return None
    prim = Poly({m: c // content for m, c in f.terms.items()})
    root = _nth_root_primitive(prim, n)
    if root is None:
        return None
    return root * croot


def _nth_root_primitive(f: Poly, n: int) -> Optional[Poly]:
    x = min(f.variables())
    d = f.degree_in(x)
    if d % n:
        return None
    m = d // n
    coeffs = f.coefficients_in(x)
    lead_root = nth_root(coeffs[d], n)
    if lead_root is None:
        return None
    xpoly = Poly.var(x)
    u = lead_root * xpoly**m
    denom = n * lead_root ** (n - 1)
    for k in range(m - 1, -1, -1):
        # Match the coefficient of x^((n-1)m + k) in f against u^n.
        target_pow = (n - 1) * m + k
        current = (u**n).coefficients_in(x)
        have = current[target_pow] if target_pow < len(current) else _ZERO
        want = coeffs[target_pow] if target_pow <= d else _ZERO
        diff = want - have
        if diff.is_zero():
            continue
        uk = exact_div(diff, denom)
        if uk is None:
            return None
        u = u + uk * xpoly**k
    if u**n == f:
        return u
    return None


def _content_wrt(f: Poly, x: str) -> Poly:
    """GCD of the coefficient polynomials of f as a polynomial in x."""
    coeffs = [c for c in f.coefficients_in(x) if not c.is_zero()]
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant() and abs(g.constant_value()) == 1:
            break
        g = poly_gcd(g, c)
    return g


def _pseudo_rem(a: Poly, b: Poly, x: str) -> Poly:
    """Pseudo-remainder of a by b in the variable x."""
    db = b.degree_in(x)
    lb = b.coefficients_in(x)[db]
    r = a
    while not r.is_zero():
        dr = r.degree_in(x)
        if dr < db:
            break
        lr = r.coefficients_in(x)[dr]
        r = r * lb - b * lr * Poly.var(x, dr - db)
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """GCD over Z[S] by primitive pseudo-remainder sequences.

    Normalized to positive leading coefficient.  Used for the repeated-factor
    stage of split_product only; general GCD is otherwise out of scope.
    """
    if a.is_zero():
        return _pos(b)
    if b.is_zero():
        return _pos(a)
    ca, cb = a.content(), b.content()
    ccontent = _gcd(ca, cb)
    if a.is_constant() or b.is_constant():
        return Poly.const(ccontent)
    common = a.variables() & b.variables()
    if not common:
        ga = _gcd_of_all_coeffs_poly(a)
        gb = _gcd_of_all_coeffs_poly(b)
        return Poly.const(_gcd(ga, gb))
    x = min(common)
    conta = _content_wrt(a, x)
    contb = _content_wrt(b, x)
    pa = exact_div(a, conta)
    pb = exact_div(b, contb)
    # primitive PRS on the primitive parts
    f, g = pa, pb
    if f.degree_in(x) < g.degree_in(x):
        f, g = g, f
    while not g.is_zero() and x in g.variables():
        r = _pseudo_rem(f, g, x)
        if r.is_zero():
            f, g = g, Poly.zero()
            break
        r = exact_div(r, _content_wrt(r, x)) if x in r.variables() else r.primitive_signed()
        f, g = g, r
    if not g.is_zero():
        # remainder chain bottomed out in an x-free polynomial: primitive
        # parts are coprime in x
        prim = Poly.const(1)
    else:
        prim = exact_div(f, _content_wrt(f, x)) if x in f.variables() else f.primitive_signed()
    return _pos(poly_gcd(conta, contb) * prim)


def _gcd_of_all_coeffs_poly(p: Poly) -> int:
    return p.content()


def _pos(p: Poly) -> Poly:
    if not p.is_zero() and p.leading()[1] < 0:
        return -p
    return p


@lru_cache(maxsize=1 << 16)
def perfect_power(f: Poly) -> Optional[tuple]:
    """(u, n) with u^n = f and n >= 2 maximal, or None."""
    if f.is_zero():
        raise ValueError("perfect_power of zero polynomial")
    if f.is_constant():
        c = f.constant_value()
        if abs(c) <= 1:
            return None
        for n in range(abs(c).bit_length(), 1, -1):
            r = _int_nth_root(c, n)
            if r is not None:
                return Poly.const(r), n
        return None
    degs = f.degrees()
    b = 0
    for e in degs.values():
        b = _gcd(b, e)
        if b == 1:
            return None
    for n in sorted(_divisors(b), reverse=True):
        if n < 2:
            continue
        u = nth_root(f, n)
        if u is not None:
            return u, n
    return None


def perfect_square_root(f: Poly) -> Optional[Poly]:
    """h with h^2 = f, leading coefficient positive, or None."""
    if f.is_zero():
        raise ValueError("perfect_square_root of zero polynomial")
    h = nth_root(f, 2)
    if h is None:
        return None
    if h.leading()[1] < 0:
        h = -h
    return h


def univariate_linear_roots(f: Poly, x: str) -> list:
    """All rational roots with multiplicity, for univariate f splitting over Q.

    Raises NonLinearFactorization if an irreducible factor of degree >= 2
    remains after all rational roots are divided out.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.variables() != frozenset({x}):
        raise ValueError(f"polynomial is not univariate in {x}")
    d = f.degree_in(x)
    coeffs = [c.constant_value() for c in f.coefficients_in(x)]
    g = _gcd(0, coeffs[0])
    for c in coeffs[1:]:
        g = _gcd(g, c)
    coeffs = [c // g for c in coeffs]
    roots = []
    t = 0
    while coeffs[t] == 0:
        t += 1
    if t:
        roots.append((Fraction(0), t))
        coeffs = coeffs[t:]
    while len(coeffs) > 2:
        root = _find_rational_root(coeffs)
        if root is None:
            raise NonLinearFactorization(f"no rational root of degree-{len(coeffs)-1} factor")
        mult = 0
        while True:
            nxt = _synthetic_div(coeffs, root)
            if nxt is None:
                break
            coeffs = nxt
            mult += 1
        roots.append((root, mult))
    if len(coeffs) == 2:
        roots.append((Fraction(-coeffs[0], coeffs[1]), 1))
    return sorted(roots)


def _find_rational_root(coeffs: list) -> Optional[Fraction]:
    c0, cd = coeffs[0], coeffs[-1]
    for num in _divisors(c0):
        for den in _divisors(cd):
            if _gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                acc = Fraction(0)
                for c in reversed(coeffs):
                    acc = acc * cand + c
                if acc == 0:
                    return cand
    return None


def _synthetic_div(coeffs: list, root: Fraction) -> Optional[list]:
    """coeffs / (den*x - num) over Z, or None if the root does not divide."""
    num, den = root.numerator, root.denominator
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        top = coeffs[i] + carry
        q, r = divmod(top, den)
        if r:
            return None
        out[i - 1] = q
        carry = q * num
    if coeffs[0] + carry != 0:
        return None
    return out


def _mono_divisors(m: Monomial, max_deg: int) -> Iterator[Monomial]:
    """All monomials dividing m with total degree <= max_deg, ascending degree."""
    items = list(m)

    def rec(i: int, cur: list, deg: int):
        if i == len(items):
            yield tuple(cur)
            return
        v, e = items[i]
        for k in range(0, e + 1):
            if deg + k > max_deg:
                break
            if k:
                cur.append((v, k))
            yield from rec(i + 1, cur, deg + k)
            if k:
                cur.pop()

    yield from sorted(rec(0, [], 0), key=lambda mm: (_mono_deg(mm), mm))


@lru_cache(maxsize=1 << 16)
def split_product(f: Poly, degree_bound: int = 6) -> Optional[tuple]:
    """A factorization f = u*v with both factors nonconstant, or None.

    Bounded heuristic: monomial extraction, then univariate rational-root
    splitting, then binomial power differences, then trial division by
    two-term candidates built from the leading and trailing terms.
    """
    if f.is_zero() or f.is_constant():
        return None
    # 1. common monomial factor
    mg = f.monomial_gcd()
    if mg and len(f.terms) > 1:
        return Poly({mg: 1}), f.divide_monomial(mg)
    if len(f.terms) == 1:
        ((m, c),) = f.terms.items()
        if _mono_deg(m) < 2:
            return None
        v0, e0 = m[0]
        if len(m) == 1:
            return Poly.var(v0), Poly({((v0, e0 - 1),) if e0 > 1 else (): c})
        return Poly.var(v0, e0), Poly({m[1:]: c})
    # 2. univariate rational-root split
    fvars = f.variables()
    if len(fvars) == 1:
        (x,) = fvars
        if f.degree_in(x) >= 2:
            try:
                roots = univariate_linear_roots(f, x)
            except NonLinearFactorization:
                roots = []
            if roots:
                root = roots[0][0]
                u = Poly.var(x) * root.denominator - root.numerator
                v = exact_div(f, u)
                if v is not None and not v.is_constant():
                    return u, v
    # 3. binomial a^n -/+ b^n
    if len(f.terms) == 2:
        (m1, c1), (m2, c2) = f._ordered()
        t1 = Poly({m1: c1})
        t2 = Poly({m2: c2})
        top = max(2, _gcd(_mono_deg(m1), _mono_deg(m2)) or 2)
        for n in range(top, 1, -1):
            a = nth_root(t1, n)
            if a is None:
                continue
            b = nth_root(-t2, n)
            if b is not None:
                u = a - b
                v = exact_div(f, u)
                if v is not None and not u.is_constant() and not v.is_constant():
                    return u, v
            if n % 2 == 1:
                b = nth_root(t2, n)
                if b is not None:
                    u = a + b
                    v = exact_div(f, u)
                    if v is not None and not u.is_constant() and not v.is_constant():
                        return u, v
    # 4. repeated factors via derivative gcds (a repeated nonconstant factor
    #    forces some variable degree >= 2, so multilinear inputs skip this)
    multilinear = all(d <= 1 for d in f.degrees().values())
    if not multilinear:
        split = _derivative_gcd_split(f)
        if split is not None:
            return split
    # 5. trial division by two-term candidates anchored at the extreme terms
    lt_m, lt_c = f.leading()
    tt_m, tt_c = f.trailing()
    deg_f = f.total_degree()
    budget = 200
    for m1 in _mono_divisors(lt_m, min(degree_bound, deg_f - 1)):
        if not m1:
            continue
        for m2 in _mono_divisors(tt_m, _mono_deg(m1)):
            if m2 == m1:
                continue
            for c1 in _divisors(lt_c):
                for c2 in _divisors(tt_c):
                    budget -= 1
                    if budget <= 0:
                        return None
                    for s in (1, -1):
                        u = Poly({m1: c1, m2: s * c2}) if m2 != m1 else None
                        if u is None:
                            continue
                        v = exact_div(f, u)
                        if v is not None and not v.is_constant():
                            return u, v
    # 6. variable-disjoint factors of multilinear polynomials, via the same
    #    derivative-gcd device (the gcd picks up the x-free factor)
    if multilinear:
        return _derivative_gcd_split(f)
    return None


def _derivative_gcd_split(f: Poly) -> Optional[tuple]:
    for x in sorted(f.variables()):
        g = poly_gcd(f, f.derivative(x))
        if not g.is_constant():
            v = exact_div(f, g)
            if v is not None and not v.is_constant():
                return g, v
    return None


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
            break
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> Poly:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_ = self.take()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer literal")
            return base**eval_
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "int":
            return Poly.const(val)
        if kind == "name":
            return Poly.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ParseError("expected ')'")
            return inner
        if kind == "op" and val == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(text: str) -> Poly:
    """Parse `a_1*b_2 - a_2*b_1 + 3*(c^2 - 1)` style expressions."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial expression")
    parser = _Parser(tokens)
    result = parser.expr()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing input after offset {parser.pos}")
    return result
