"""Affine constraint varieties X(S, F, G) and their virtual classes.

A constraint variety is a variable set S, a set F of polynomials that must
vanish and a set G of polynomials that must not.  `Engine.class_of` computes
the class [X] in Z[q] by the recursive stratification rules:

  1. nonzero constant in F, or 0 in G            -> [X] = 0
  2. no constraints                              -> [X] = q^#S
  3. variable absent from all constraints        -> [X] = q * [X']
  4. constraint is a perfect power u^n           -> replace by u
  5. univariate constraint with rational roots   -> sum over the roots
  6. constraint factors as u*v                   -> [u=0] + [u!=0, v=0]
  7. constraint linear in x                      -> eliminate x on u != 0
  8. constraint quadratic in x, square discriminant -> four-way split
  9. drop an inequation g                        -> [without g] - [with g=0]

Rules fire strictly in this order; within a rule, constraints are scanned in
canonical order and the lowest-degree eligible variable wins (ties broken by
smallest cofactor, then name).  Subproblems are memoized up to variable
renaming.  `count_points` provides the independent finite-field oracle.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .classring import ClassPoly
from .poly import (
    NonLinearFactorization,
    ParseError,
    Poly,
    mono_deg,
    parse_poly,
    perfect_power,
    perfect_square_root,
    split_product,
    univariate_linear_roots,
)


class Unresolvable(Exception):
    """No rule applies to the current constraint system."""


class DepthExceeded(Exception):
    """The recursion budget ran out (termination is not guaranteed)."""


class BudgetExceeded(Exception):
    """Point enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class Variety:
    """X(S, F, G): eqs must vanish, neqs must not."""

    variables: tuple
    eqs: tuple
    neqs: tuple

    @staticmethod
    def make(variables: Iterable[str], eqs: Iterable[Poly] = (), neqs: Iterable[Poly] = ()) -> "Variety":
        vs = tuple(dict.fromkeys(variables))
        eqs = tuple(sorted(set(eqs)))
        neqs = tuple(sorted(set(neqs)))
        declared = set(vs)
        for p in (*eqs, *neqs):
            stray = p.variables() - declared
            if stray:
                raise ValueError(f"constraint {p} uses undeclared variables {sorted(stray)}")
        return Variety(vs, eqs, neqs)

    def to_text(self) -> str:
        lines = []
        if self.variables:
            lines.append("vars: " + ", ".join(self.variables))
        for f in self.eqs:
            lines.append(f"eq: {f}")
        for g in self.neqs:
            lines.append(f"neq: {g}")
        return "\n".join(lines) + "\n"


def parse_variety(text: str) -> Variety:
    """Parse the line-oriented `vars:`/`eq:`/`neq:` format."""
    variables: list = []
    eqs: list = []
    neqs: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        try:
            if key == "vars":
                names = [v.strip() for v in rest.split(",") if v.strip()]
                variables.extend(names)
            elif key == "eq":
                eqs.append(parse_poly(rest))
            elif key == "neq":
                neqs.append(parse_poly(rest))
            else:
                raise ParseError(f"unknown directive {key!r}")
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    try:
        return Variety.make(variables, eqs, neqs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_variety(path) -> Variety:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_variety(fh.read())


@dataclass
class Stats:
    rules: dict = field(default_factory=dict)
    nodes: int = 0
    memo_hits: int = 0
    max_depth: int = 0
    # Integer constants that must stay nonzero mod p for the class to count
    # F_p points (stripped contents, dropped constants, root denominators and
    # separations, the 2 of the quadratic split).
    bad_constants: set = field(default_factory=set)

    def bump(self, rule: int, by: int = 1) -> None:
        self.rules[rule] = self.rules.get(rule, 0) + by

    def record_constant(self, c: int) -> None:
        c = abs(c)
        if c > 1:
            self.bad_constants.add(c)

    def good_prime(self, p: int) -> bool:
        return all(c % p for c in self.bad_constants)

    def as_dict(self) -> dict:
        return {
            "rules": {str(k): v for k, v in sorted(self.rules.items())},
            "nodes": self.nodes,
            "memo_hits": self.memo_hits,
            "max_depth": self.max_depth,
            "bad_constants": sorted(self.bad_constants),
        }


@dataclass
class ClassResult:
    value: ClassPoly
    stats: Stats


_EMPTY = object()
_QM1 = ClassPoly((-1, 1))


def _bare_variable(g: Poly) -> Optional[str]:
    """The variable x when g is exactly x, else None."""
    if len(g.terms) != 1:
        return None
    ((m, c),) = g.terms.items()
    if c == 1 and len(m) == 1 and m[0][1] == 1:
        return m[0][0]
    return None


class Engine:
    """Memoizing evaluator for the class-computation rules.

    One engine owns one memo table; results are deterministic for a fixed
    configuration.  Engines are cheap, but reusing one across many related
    computations (as the transfer-matrix pipeline does) shares subproblems.
    """

    def __init__(self, split_degree_bound: int = 6, max_depth: int = 10000):
        self.split_degree_bound = split_degree_bound
        self.max_depth = max_depth
        self.memo: dict = {}
        # shared across calls: memoized subtrees skip re-recording, so the
        # accumulated set stays a sound (over-)approximation
        self._bad: set = set()
        self.stats = Stats(bad_constants=self._bad)

    # -- public entry points -------------------------------------------------

    def class_of(self, X: Variety) -> ClassResult:
        self.stats = Stats()
        box: list = []

        def run():
            try:
                box.append(self._child(X.eqs, X.neqs, len(X.variables), 0))
            except BaseException as exc:  # re-raised in the caller
                box.append(exc)

        # Deep recursions need more than the default C stack.
        old_limit = _bump_recursion_limit(3 * self.max_depth + 10000)
        try:
            threading.stack_size(512 * 1024 * 1024)
            t = threading.Thread(target=run, name="grotto-classof")
            t.start()
            t.join()
        finally:
            threading.stack_size(0)
            import sys

            sys.setrecursionlimit(old_limit)
        result = box[0]
        if isinstance(result, BaseException):
            raise result
        return ClassResult(result, self.stats)

    def stratify_check(self, X: Variety, h: Poly):
        """([X ∩ {h=0}], [X ∩ {h≠0}], [X]), each computed independently."""
        zero = self.class_of(Variety.make(X.variables, X.eqs + (h,), X.neqs)).value
        nonzero = self.class_of(Variety.make(X.variables, X.eqs, X.neqs + (h,))).value
        whole = self.class_of(X).value
        return zero, nonzero, whole

    # -- recursion ------------------------------------------------------------

    def _child(self, F: Sequence[Poly], G: Sequence[Poly], ambient: int, depth: int) -> ClassPoly:
        state = self._canonical(F, G)
        if state is _EMPTY:
            self.stats.bump(1)
            return ClassPoly()
        cf, cg = state
        # A variable constrained only by its own bare inequation contributes a
        # G_m factor (q - 1); an entirely absent variable a factor q (rule 3).
        counts: dict = {}
        for p in (*cf, *cg):
            for v in p.variables():
                counts[v] = counts.get(v, 0) + 1
        lonely = []
        kept = []
        for g in cg:
            x = _bare_variable(g)
            if x is not None and counts[x] == 1:
                lonely.append(x)
            else:
                kept.append(g)
        if lonely:
            cg = tuple(kept)
        used = set()
        for p in (*cf, *cg):
            used.update(p.variables())
        extra = ambient - len(used) - len(lonely)
        value = self._split_components(cf, cg, depth)
        if lonely:
            self.stats.bump(3, len(lonely))
            value = value * (_QM1 ** len(lonely))
        if extra:
            self.stats.bump(3, extra)
            value = value.shift(extra)
        return value

    def _split_components(self, F: tuple, G: tuple, depth: int) -> ClassPoly:
        """Factor over connected components of the variable-sharing graph.

        Constraints on disjoint variable sets cut out a product variety, so
        the class is the product of the component classes (the general form
        of the absent-variable rule).  Counted under rule 0 in the stats.
        """
        polys = (*F, *G)
        if len(polys) <= 1:
            return self._node(F, G, depth)
        parent: dict = {}

        def find(v):
            root = v
            while parent[root] != root:
                root = parent[root]
            while parent[v] != root:
                parent[v], v = root, parent[v]
            return root

        for p in polys:
            it = iter(p.variables())
            first = next(it)
            if first not in parent:
                parent[first] = first
            r = find(first)
            for v in it:
                if v not in parent:
                    parent[v] = r
                else:
                    parent[find(v)] = r
        roots = {find(v) for v in parent}
        if len(roots) == 1:
            return self._node(F, G, depth)
        self.stats.bump(0)
        value = ClassPoly.const(1)
        for root in sorted(roots):
            fc = tuple(p for p in F if find(next(iter(p.variables()))) == root)
            gc = tuple(p for p in G if find(next(iter(p.variables()))) == root)
            value = value * self._node(fc, gc, depth)
        return value

    def _canonical(self, F, G):
        """Normalize a constraint system; returns _EMPTY or (F, G) tuples.

        Content and sign are stripped everywhere.  Monomial factors of
        inequations split into their variables (x^a*h != 0 iff x != 0 and
        h != 0), and unit variables (bare inequations) are cancelled from
        equation monomial factors.
        """
        record = self.stats.record_constant
        gset = set()
        for g in G:
            if g.is_zero():
                return _EMPTY
            record(g.content())
            g = g.primitive_signed()
            if g.is_constant():
                record(g.constant_value())
                continue
            mg = g.monomial_gcd()
            if mg:
                for v, _ in mg:
                    gset.add(Poly.var(v))
                h = g.divide_monomial(mg)
                if not h.is_constant():
                    gset.add(h)
            else:
                gset.add(g)
        units = set()
        for g in gset:
            x = _bare_variable(g)
            if x is not None:
                units.add(x)
        fset = set()
        for f in F:
            if f.is_zero():
                continue
            f = f.primitive_signed()
            if not f.is_constant() and units:
                mg = f.monomial_gcd()
                strip = tuple((v, e) for v, e in mg if v in units)
                if strip:
                    f = f.divide_monomial(strip)
            if f.is_constant():
                if f.constant_value() != 0:
                    return _EMPTY
                continue
            fset.add(f)
        if fset & gset:
            return _EMPTY
        return tuple(sorted(fset)), tuple(sorted(gset))

    def _node(self, F: tuple, G: tuple, depth: int) -> ClassPoly:
        key = _memo_key(F, G)
        hit = self.memo.get(key)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        value = self._apply_rules(F, G, depth)
        self.memo[key] = value
        return value

    def _apply_rules(self, F: tuple, G: tuple, depth: int) -> ClassPoly:
        if depth >= self.max_depth:
            raise DepthExceeded(f"recursion depth {depth} reached")
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth

        # Rule 2: no constraints left; ambient here is exactly the used vars.
        if not F and not G:
            st.bump(2)
            return ClassPoly.const(1)

        nvars = len(set().union(*(p.variables() for p in (*F, *G))))

        # Rule 4: replace perfect powers, F first, then G.
        for which, polys in (("F", F), ("G", G)):
            for i, f in enumerate(polys):
                pp = perfect_power(f)
                if pp is None:
                    continue
                st.bump(4)
                repl = list(polys)
                repl[i] = pp[0]
                if which == "F":
                    return self._child(repl, G, nvars, depth + 1)
                return self._child(F, repl, nvars, depth + 1)

        # Rule 5: univariate equation, split over its rational roots.
        for i, f in enumerate(F):
            fv = f.variables()
            if len(fv) != 1:
                continue
            (x,) = fv
            try:
                roots = univariate_linear_roots(f, x)
            except NonLinearFactorization:
                continue
            st.bump(5)
            rest = F[:i] + F[i + 1 :]
            total = ClassPoly()
            for root, _mult in roots:
                F2 = [_sub_root(h, x, root) for h in rest]
                G2 = [_sub_root(g, x, root) for g in G]
                total = total + self._child(F2, G2, nvars - 1, depth + 1)
            return total

        # Rule 6: equation splits as a product.
        for i, f in enumerate(F):
            sp = split_product(f, self.split_degree_bound)
            if sp is None:
                continue
            u, v = sp
            st.bump(6)
            rest = F[:i] + F[i + 1 :]
            a = self._child(rest + (u,), G, nvars, depth + 1)
            b = self._child(rest + (v,), G + (u,), nvars, depth + 1)
            return a + b

        # Rule 7: equation linear in some variable.
        for i, f in enumerate(F):
            pick = _pick_variable(f, 1)
            if pick is None:
                continue
            x = pick
            st.bump(7)
            coeffs = f.coefficients_in(x)
            v, u = coeffs[0], coeffs[1]
            rest = F[:i] + F[i + 1 :]
            a = self._child(rest + (u, v), G, nvars, depth + 1)
            F2 = [h.substitute_cleared(x, -v, u) for h in rest]
            G2 = [g.substitute_cleared(x, -v, u) for g in G]
            b = self._child(F2, G2 + [u], nvars - 1, depth + 1)
            return a + b

        # Rule 8: equation quadratic in some variable with square discriminant.
        for i, f in enumerate(F):
            degs = f.degrees()
            cands = []
            for x, d in degs.items():
                if d != 2:
                    continue
                coeffs = f.coefficients_in(x)
                w, v, u = coeffs[0], coeffs[1], coeffs[2]
                disc = v * v - 4 * u * w
                if disc.is_zero():
                    h = Poly.zero()
                else:
                    h = perfect_square_root(disc)
                    if h is None:
                        continue
                cands.append(((u.total_degree(), len(u.terms), x), x, u, v, w, disc, h))
            if not cands:
                continue
            st.bump(8)
            _, x, u, v, w, disc, h = min(cands)
            rest = F[:i] + F[i + 1 :]
            xp = Poly.var(x)
            total = self._child(rest + (u, xp * v + w), G, nvars, depth + 1)
            u2 = 2 * u
            branches = [(-v, rest + (disc,), G + (u,))]
            if not disc.is_zero():
                branches.append((-v - h, rest, G + (u, disc)))
                branches.append((-v + h, rest, G + (u, disc)))
            for num, fpart, gpart in branches:
                F2 = [p.substitute_cleared(x, num, u2) for p in fpart]
                G2 = [p.substitute_cleared(x, num, u2) for p in gpart]
                total = total + self._child(F2, G2, nvars - 1, depth + 1)
            return total

        # Rule 9: trade an inequation for an equation.
        if G:
            st.bump(9)
            g, rest = G[0], G[1:]
            a = self._child(F, rest, nvars, depth + 1)
            b = self._child(F + (g,), rest, nvars, depth + 1)
            return a - b

        raise Unresolvable(
            "no rule applies to F = {%s}, G = {%s}"
            % (", ".join(map(str, F)), ", ".join(map(str, G)))
        )


def _pick_variable(f: Poly, want_degree: int) -> Optional[str]:
    """Lowest-degree eligible variable of f; ties by smallest leading cofactor.

    Single pass: for each candidate x the tie-break needs only the term count
    and total degree of the coefficient of x^want_degree.
    """
    cands = {x for x, d in f.degrees().items() if d == want_degree}
    if not cands:
        return None
    if len(cands) == 1:
        return next(iter(cands))
    nterms = {x: 0 for x in cands}
    maxdeg = {x: 0 for x in cands}
    for m, _c in f.terms.items():
        deg = 0
        hit = []
        for v, e in m:
            deg += e
            if e == want_degree and v in cands:
                hit.append(v)
        for v in hit:
            nterms[v] += 1
            if deg - want_degree > maxdeg[v]:
                maxdeg[v] = deg - want_degree
    return min(cands, key=lambda x: (maxdeg[x], nterms[x], x))


def _sub_root(p: Poly, x: str, root: Fraction) -> Poly:
    if root.denominator == 1:
        return p.substitute(x, int(root))
    return p.substitute_cleared(x, int(root.numerator), int(root.denominator))


def _memo_key(F: tuple, G: tuple):
    """Key for (F, G) up to variable renaming.

    Constraints are ordered by a name-free structural key first, so renamed
    copies of a subproblem usually sort identically; variables are then
    renumbered by first occurrence.  Identical keys always mean isomorphic
    systems, so memo hits are sound; a missed hit only costs time.
    """
    mapping: dict = {}

    def poly_key(p: Poly):
        out = []
        for m, c in p.ordered_terms():
            mm = []
            for v, e in m:
                idx = mapping.get(v)
                if idx is None:
                    idx = len(mapping)
                    mapping[v] = idx
                mm.append((idx, e))
            mm.sort()
            out.append((tuple(mm), c))
        return tuple(out)

    forder = sorted(F, key=lambda p: (p.struct_key(), p.sort_key()))
    gorder = sorted(G, key=lambda p: (p.struct_key(), p.sort_key()))
    return tuple(poly_key(f) for f in forder), None, tuple(poly_key(g) for g in gorder)


def _bump_recursion_limit(limit: int) -> int:
    import sys

    old = sys.getrecursionlimit()
    if limit > old:
        sys.setrecursionlimit(limit)
    return old


def class_of(
    X: Variety, split_degree_bound: int = 6, max_depth: int = 10000, engine: Optional[Engine] = None
) -> ClassResult:
    """One-shot wrapper around Engine.class_of."""
    if engine is None:
        engine = Engine(split_degree_bound=split_degree_bound, max_depth=max_depth)
    return engine.class_of(X)


# -- finite-field point counting (the independent oracle) ----------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def count_points(X: Variety, p: int, budget: int = 8_000_000) -> int:
    """Number of F_p points of X by brute-force enumeration.

    Evaluation is vectorized over the full p^n grid with coefficients reduced
    mod p; this is an implementation detail, the semantics are plain
    exhaustive enumeration.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = len(X.variables)
    total = p**n
    if total > budget:
        raise BudgetExceeded(f"{p}^{n} points exceed budget {budget}")
    if n == 0:
        for f in X.eqs:
            if f.constant_value() % p:
                return 0
        for g in X.neqs:
            if g.constant_value() % p == 0:
                return 0
        return 1

    import numpy as np

    index = {v: i for i, v in enumerate(X.variables)}
    grid = np.indices((p,) * n, dtype=np.int64).reshape(n, total)
    power_cache: dict = {}

    def var_power(v: str, e: int):
        arr = power_cache.get((v, e))
        if arr is None:
            if e == 1:
                arr = grid[index[v]]
            else:
                arr = var_power(v, e - 1) * grid[index[v]] % p
            power_cache[(v, e)] = arr
        return arr

    def eval_mod(f: Poly):
        acc = np.zeros(total, dtype=np.int64)
        for m, c in f.terms.items():
            t = np.full(total, c % p, dtype=np.int64)
            for v, e in m:
                t = t * var_power(v, e) % p
            acc += t
            acc %= p
        return acc

    mask = np.ones(total, dtype=bool)
    for f in X.eqs:
        mask &= eval_mod(f) == 0
        if not mask.any():
            return 0
    for g in X.neqs:
        mask &= eval_mod(g) != 0
        if not mask.any():
            return 0
    return int(np.count_nonzero(mask))
