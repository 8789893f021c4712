"""Symbolic upper-triangular groups of rank 2, 3, 4 and their strata.

A generic element carries one fresh variable per upper-triangular position
(letters row by row, suffixed by the element index), with the diagonal
variables forming the unit set.  Matrix entries are fractions whose
denominators are monomials in diagonal variables, so inversion and
commutators stay exact and membership constraints clear denominators by the
minimal monomial.

Strata of the unipotent locus are stored in coordinates a01, a02, ... where
a{i}{j} is the (i+1, j+1) entry of a unipotent matrix.  Stored stratum
classes are verified at load time by running the class engine on the
membership constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .classring import ClassPoly
from .poly import Poly, parse_poly
from .variety import Engine, Variety

_Q = ClassPoly.q()
_ONE = ClassPoly.const(1)


class StrataClassMismatch(Exception):
    """A computed stratum class disagrees with the stored table."""


# -- monomial fractions ---------------------------------------------------------


def _mono_lcm(m1, m2):
    d = dict(m1)
    for v, e in m2:
        if e > d.get(v, 0):
            d[v] = e
    return tuple(sorted(d.items()))


def _mono_sub(m, d):
    out = dict(m)
    for v, e in d:
        out[v] -= e
        if not out[v]:
            del out[v]
    return tuple(sorted(out.items()))


class MFrac:
    """num / den with den a monomial (unit on the ambient group)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den=()):
        if num.is_zero():
            den = ()
        elif den:
            mg = num.monomial_gcd()
            if mg:
                common = dict()
                dd = dict(den)
                for v, e in mg:
                    k = min(e, dd.get(v, 0))
                    if k:
                        common[v] = k
                if common:
                    cm = tuple(sorted(common.items()))
                    num = num.divide_monomial(cm)
                    den = _mono_sub(den, cm)
        self.num = num
        self.den = den

    @staticmethod
    def of(x) -> "MFrac":
        if isinstance(x, MFrac):
            return x
        if isinstance(x, int):
            return MFrac(Poly.const(x))
        if isinstance(x, Poly):
            return MFrac(x)
        raise TypeError(type(x).__name__)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "MFrac":
        other = MFrac.of(other)
        lcm = _mono_lcm(self.den, other.den)
        a = self.num if lcm == self.den else self.num * Poly({_mono_sub(lcm, self.den): 1})
        b = other.num if lcm == other.den else other.num * Poly({_mono_sub(lcm, other.den): 1})
        return MFrac(a + b, lcm)

    def __sub__(self, other) -> "MFrac":
        return self + (-MFrac.of(other))

    def __neg__(self) -> "MFrac":
        return MFrac(-self.num, self.den)

    def __mul__(self, other) -> "MFrac":
        other = MFrac.of(other)
        return MFrac(self.num * other.num, _mono_mul_pairs(self.den, other.den))

    def div_by_monomial_term(self, other: "MFrac") -> "MFrac":
        """Divide by a fraction whose numerator is a single +/-1 monomial."""
        if len(other.num.terms) != 1:
            raise ValueError("divisor numerator is not a monomial")
        ((m, c),) = other.num.terms.items()
        if c not in (1, -1):
            raise ValueError("divisor coefficient must be a unit")
        num = self.num * Poly({other.den: c})
        return MFrac(num, _mono_mul_pairs(self.den, m))

    def __eq__(self, other) -> bool:
        other = MFrac.of(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        return f"({self.num})/({Poly({self.den: 1})})"

    __repr__ = __str__


def _mono_mul_pairs(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


_MF_ZERO = MFrac(Poly.zero())
_MF_ONE = MFrac(Poly.const(1))


class SymbolicMatrix:
    """Upper-triangular square matrix of monomial-denominator fractions."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.n = len(rows)
        self.rows = tuple(tuple(MFrac.of(x) for x in row) for row in rows)
        for i in range(self.n):
            for j in range(i):
                if not self.rows[i][j].is_zero():
                    raise ValueError("matrix is not upper triangular")

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    @staticmethod
    def identity(n: int) -> "SymbolicMatrix":
        return SymbolicMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_ints(rows: Sequence[Sequence[int]]) -> "SymbolicMatrix":
        return SymbolicMatrix(rows)

    def is_identity(self) -> bool:
        one, zero = _MF_ONE, _MF_ZERO
        for i in range(self.n):
            for j in range(self.n):
                if self.rows[i][j] != (one if i == j else zero):
                    return False
        return True

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"


def mat_mul(a: SymbolicMatrix, b: SymbolicMatrix) -> SymbolicMatrix:
    if a.n != b.n:
        raise ValueError("rank mismatch")
    n = a.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(0)
                continue
            acc = _MF_ZERO
            for k in range(i, j + 1):
                x, y = a.rows[i][k], b.rows[k][j]
                if not (x.is_zero() or y.is_zero()):
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return SymbolicMatrix(out)


def mat_inv(a: SymbolicMatrix) -> SymbolicMatrix:
    """Back-substitution inverse; denominators stay monomial for group elements."""
    n = a.n
    inv = [[_MF_ZERO] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = _MF_ONE.div_by_monomial_term(a.rows[i][i])
    for span in range(1, n):
        for i in range(n - span):
            j = i + span
            acc = _MF_ZERO
            for k in range(i + 1, j + 1):
                acc = acc + a.rows[i][k] * inv[k][j]
            inv[i][j] = (-acc).div_by_monomial_term(a.rows[i][i])
    return SymbolicMatrix(inv)


def commutator(g1: SymbolicMatrix, g2: SymbolicMatrix) -> SymbolicMatrix:
    """g1 g2 g1^-1 g2^-1; asserts ones on the diagonal."""
    k = mat_mul(mat_mul(mat_mul(g1, g2), mat_inv(g1)), mat_inv(g2))
    for i in range(k.n):
        if k.rows[i][i] != _MF_ONE:
            raise AssertionError(f"commutator diagonal entry {i} is {k.rows[i][i]}")
    return k


# -- groups ------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    name: str
    rank: int
    letters: tuple  # one letter per upper-triangular position, row by row
    group_class: ClassPoly

    @property
    def dim(self) -> int:
        return self.rank * (self.rank + 1) // 2

    def positions(self):
        k = 0
        for i in range(self.rank):
            for j in range(i, self.rank):
                yield (i, j), self.letters[k]
                k += 1

    def coords(self) -> tuple:
        """Unipotent coordinate names a{i}{j} for i < j."""
        return tuple(f"a{i}{j}" for i in range(self.rank) for j in range(i + 1, self.rank))


def _make_group(rank: int) -> GroupSpec:
    letters = {2: "abc", 3: "abcdef", 4: "abcdefghij"}[rank]
    cls = ClassPoly.q(rank * (rank - 1) // 2) * (_Q - 1) ** rank
    return GroupSpec(f"u{rank}", rank, tuple(letters), cls)


U2 = _make_group(2)
U3 = _make_group(3)
U4 = _make_group(4)
_GROUPS = {"u2": U2, "u3": U3, "u4": U4, 2: U2, 3: U3, 4: U4}


def group(key) -> GroupSpec:
    try:
        return _GROUPS[key if isinstance(key, int) else str(key).lower()]
    except KeyError:
        raise ValueError(f"unknown group {key!r}") from None


def generic_element(g: GroupSpec, index: int):
    """(matrix with fresh entry variables, diagonal unit variables)."""
    if index < 1:
        raise ValueError("index must be >= 1")
    rows = [[Poly.const(0)] * g.rank for _ in range(g.rank)]
    units = set()
    for (i, j), letter in g.positions():
        name = f"{letter}{index}"
        rows[i][j] = Poly.var(name)
        if i == j:
            units.add(name)
    return SymbolicMatrix(rows), frozenset(units)


def element_variables(g: GroupSpec, index: int) -> tuple:
    return tuple(f"{letter}{index}" for _, letter in g.positions())


# -- strata -------------------------------------------------------------------------


@dataclass(frozen=True)
class StratumSpec:
    label: str
    eqs: tuple  # membership predicate over unipotent coords (None for u2:M)
    neqs: tuple
    representative: SymbolicMatrix
    stratum_class: ClassPoly  # class of the whole stratum
    orbit_class: ClassPoly  # class of the orbit space C_i
    fiber_class: ClassPoly  # class of one orbit (the eta entry)

    @property
    def reaches_unipotent(self) -> bool:
        return self.eqs is not None


def _unipotent_rep(n: int, ones: Sequence[tuple]) -> SymbolicMatrix:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in ones:
        rows[i][j] = 1
    return SymbolicMatrix(rows)


def _parse_all(exprs: Sequence[str]) -> tuple:
    return tuple(parse_poly(e) for e in exprs)


# Unipotent conjugacy-class tables.  eqs/neqs in coordinates a{i}{j}; the
# stored classes are re-derived by the engine at load time.
_U3_STRATA = [
    ("C1", ["a01", "a02", "a12"], [], [], "1"),
    ("C2", [], ["a01", "a12"], [(0, 1), (1, 2)], "q*(q-1)^2"),
    ("C3", ["a12"], ["a01"], [(0, 1)], "q*(q-1)"),
    ("C4", ["a01"], ["a12"], [(1, 2)], "q*(q-1)"),
    ("C5", ["a01", "a12"], ["a02"], [(0, 2)], "q-1"),
]

_U4_STRATA = [
    ("C1", ["a01", "a02", "a03", "a12", "a13", "a23"], [], [], "1"),
    ("C2", ["a12", "a13", "a23"], ["a01"], [(0, 1)], "q^2*(q-1)"),
    ("C3", ["a01", "a12", "a13", "a23"], ["a02"], [(0, 2)], "q*(q-1)"),
    ("C4", ["a01", "a02", "a12", "a13", "a23"], ["a03"], [(0, 3)], "q-1"),
    ("C5", ["a01", "a23", "a03*a12 - a02*a13"], ["a12"], [(1, 2)], "q^2*(q-1)"),
    ("C6", ["a01", "a02", "a12", "a23"], ["a13"], [(1, 3)], "q*(q-1)"),
    ("C7", ["a01", "a02", "a12"], ["a23"], [(2, 3)], "q^2*(q-1)"),
    ("C8", ["a23"], ["a01", "a12"], [(0, 1), (1, 2)], "q^3*(q-1)^2"),
    ("C9", ["a12", "a23"], ["a01", "a13"], [(0, 1), (1, 3)], "q^2*(q-1)^2"),
    ("C10", ["a12", "a02*a23 + a01*a13"], ["a01", "a23"], [(0, 1), (2, 3)], "q^2*(q-1)^2"),
    ("C11", ["a01", "a12", "a23"], ["a02", "a13"], [(0, 2), (1, 3)], "q*(q-1)^2"),
    ("C12", ["a01", "a12"], ["a02", "a23"], [(0, 2), (2, 3)], "q^2*(q-1)^2"),
    ("C13", ["a01"], ["a12", "a23"], [(1, 2), (2, 3)], "q^3*(q-1)^2"),
    ("C14", ["a01", "a23"], ["a12", "a03*a12 - a02*a13"], [(0, 3), (1, 2)], "q^2*(q-1)^2"),
    ("C15", [], ["a01", "a12", "a23"], [(0, 1), (1, 2), (2, 3)], "q^3*(q-1)^3"),
    ("C16", ["a12"], ["a01", "a23", "a02*a23 + a01*a13"], [(0, 1), (0, 2), (2, 3)], "q^2*(q-1)^3"),
]


def _build_unipotent_strata(g: GroupSpec, table) -> tuple:
    out = []
    for label, eqs, neqs, ones, cls in table:
        spec = StratumSpec(
            label=label,
            eqs=_parse_all(eqs),
            neqs=_parse_all(neqs),
            representative=_unipotent_rep(g.rank, ones),
            stratum_class=ClassPoly.parse(cls),
            orbit_class=_ONE,
            fiber_class=ClassPoly.parse(cls),
        )
        out.append(spec)
    return tuple(out)


def _build_u2_strata() -> tuple:
    qm1 = _Q - 1
    a01 = (parse_poly("a01"),)
    return (
        StratumSpec("S", a01, (), _unipotent_rep(2, []), qm1, qm1, _ONE),
        StratumSpec("J", (), a01, _unipotent_rep(2, [(0, 1)]), qm1 * qm1, qm1, qm1),
        StratumSpec(
            "M",
            None,
            None,
            SymbolicMatrix([[2, 0], [0, 1]]),
            _Q * qm1 * (_Q - 2),
            qm1 * (_Q - 2),
            _Q,
        ),
    )


def _rep_satisfies(stratum: StratumSpec, rep: SymbolicMatrix, coords) -> bool:
    if stratum.eqs is None:
        return True
    point = {}
    for name in coords:
        i, j = int(name[1]), int(name[2])
        entry = rep.rows[i][j]
        point[name] = entry.num.constant_value() if entry.num.is_constant() else None
    for p in stratum.eqs:
        if p.evaluate(point) != 0:
            return False
    for p in stratum.neqs:
        if p.evaluate(point) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def strata(g: GroupSpec) -> tuple:
    """The stratification, verified at load time.

    For the unipotent stratifications (rank 3, 4) every stored class is
    recomputed by the engine and the total is checked against q^dim of the
    unipotent locus; representatives are checked to satisfy exactly their
    own membership predicate.
    """
    if g.rank == 2:
        return _build_u2_strata()
    table = _U3_STRATA if g.rank == 3 else _U4_STRATA
    specs = _build_unipotent_strata(g, table)
    coords = g.coords()
    engine = Engine()
    total = ClassPoly()
    for spec in specs:
        if not _rep_satisfies(spec, spec.representative, coords):
            raise StrataClassMismatch(f"{g.name}:{spec.label} representative violates its predicate")
        for other in specs:
            if other is not spec and _rep_satisfies(other, spec.representative, coords):
                raise StrataClassMismatch(
                    f"{g.name}:{spec.label} representative also satisfies {other.label}"
                )
        X = Variety.make(coords, spec.eqs, spec.neqs)
        computed = engine.class_of(X).value
        if computed != spec.stratum_class:
            raise StrataClassMismatch(
                f"{g.name}:{spec.label} computed class {computed} != stored {spec.stratum_class}"
            )
        total = total + computed
    if total != ClassPoly.q(len(coords)):
        raise StrataClassMismatch(f"{g.name} strata do not fill the unipotent locus: {total}")
    return specs


def stratum_by_label(g: GroupSpec, label: str) -> StratumSpec:
    for s in strata(g):
        if s.label.lower() == label.lower():
            return s
    raise ValueError(f"no stratum {label!r} in {g.name}")


def membership_constraints(m: SymbolicMatrix, s: StratumSpec, ambient_units: frozenset):
    """Polynomial constraints expressing m in the stratum, denominators cleared.

    Denominators are unit monomials on the ambient variety, so multiplying
    each numerator through is an isomorphism-preserving clearing.
    """
    if s.eqs is None:
        raise ValueError(f"stratum {s.label} has no unipotent-coordinate predicate")
    n = m.n
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            entries[f"a{i}{j}"] = m.rows[i][j]
    eqs, neqs = [], []
    for target, preds in ((eqs, s.eqs), (neqs, s.neqs)):
        for p in preds:
            val = _compose_frac(p, entries)
            stray = set(v for v, _ in val.den) - ambient_units
            if stray:
                raise ValueError(f"denominator variables {sorted(stray)} are not ambient units")
            target.append(val.num)
    return tuple(eqs), tuple(neqs)


def _compose_frac(p: Poly, entries: dict) -> MFrac:
    acc = _MF_ZERO
    for mono, c in p.terms.items():
        t = MFrac(Poly.const(c))
        for v, e in mono:
            f = entries[v]
            for _ in range(e):
                t = t * f
        acc = acc + t
    return acc


def commutator_membership_variety(g: GroupSpec, s: StratumSpec) -> Variety:
    """{(g1, g2) in G^2 : [g1, g2] in the stratum} as a constraint variety."""
    g1, u1 = generic_element(g, 1)
    g2, u2 = generic_element(g, 2)
    units = u1 | u2
    k = commutator(g1, g2)
    eqs, neqs = membership_constraints(k, s, units)
    variables = element_variables(g, 1) + element_variables(g, 2)
    unit_polys = tuple(Poly.var(v) for v in sorted(units))
    return Variety.make(variables, eqs, neqs + unit_polys)


def translate_membership_variety(g: GroupSpec, i: int, j: int, k: int) -> Variety:
    """{g in C_j : g * xi_k in C_i} over the unipotent coordinates."""
    ss = strata(g)
    coords = g.coords()
    rows = [[1 if r == c else 0 for c in range(g.rank)] for r in range(g.rank)]
    mat = [[Poly.const(v) for v in row] for row in rows]
    for r in range(g.rank):
        for c in range(r + 1, g.rank):
            mat[r][c] = Poly.var(f"a{r}{c}")
    gmat = SymbolicMatrix(mat)
    prod = mat_mul(gmat, ss[k].representative)
    eqs_j, neqs_j = membership_constraints(gmat, ss[j], frozenset())
    eqs_i, neqs_i = membership_constraints(prod, ss[i], frozenset())
    return Variety.make(coords, eqs_j + eqs_i, neqs_j + neqs_i)
