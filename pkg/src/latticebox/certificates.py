"""Box-feasibility certificates built from floor/ceiling expressions.

For a lattice with a divisor chain there is a finite set of integer-valued
expressions in the 2n box bounds (a_1, b_1, ..., a_n, b_n), built from
projections by negation, differences, and floor/ceiling division, whose
simultaneous nonnegativity decides whether the lattice meets the box. The
set depends only on the lattice, so it is generated once and reused across
boxes. solve_box extracts an explicit witness by the same recursion.

Expression trees here are a superset of the minimal grammar (explicit Neg
and Diff nodes, inputs at both polarities). Only the division-nesting
depth bound matters: every generated expression has depth <= the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .arith import ceil_div, floor_div
from .chains import ChainCertificate, DivisorVector, IndexMap, map_point
from .errors import CapExceededError, DimensionError, InconsistencyError
from .lattice import Lattice, solve_integer_system

DEFAULT_ORACLE_CAP = 10**6


class Expr:
    """Base class for certificate expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Lower(Expr):
    """Projection onto the lower bound a_i (0-based index)."""

    i: int


@dataclass(frozen=True)
class Upper(Expr):
    """Projection onto the upper bound b_i (0-based index)."""

    i: int


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class FloorDiv(Expr):
    arg: Expr
    m: int

    def __post_init__(self):
        if self.m == 0:
            raise ValueError("FloorDiv: zero divisor")


@dataclass(frozen=True)
class CeilDiv(Expr):
    arg: Expr
    m: int

    def __post_init__(self):
        if self.m == 0:
            raise ValueError("CeilDiv: zero divisor")


@dataclass(frozen=True)
class Diff(Expr):
    lhs: Expr
    rhs: Expr


def evaluate(expr: Expr, a, b) -> int:
    """Exact recursive evaluation at lower bounds a and upper bounds b."""
    if isinstance(expr, Lower):
        return int(a[expr.i])
    if isinstance(expr, Upper):
        return int(b[expr.i])
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, a, b)
    if isinstance(expr, FloorDiv):
        return floor_div(evaluate(expr.arg, a, b), expr.m)
    if isinstance(expr, CeilDiv):
        return ceil_div(evaluate(expr.arg, a, b), expr.m)
    if isinstance(expr, Diff):
        return evaluate(expr.lhs, a, b) - evaluate(expr.rhs, a, b)
    raise TypeError(f"not an expression node: {expr!r}")


def expr_order(expr: Expr) -> int:
    """Maximum floor/ceiling nesting depth along any root-to-leaf path."""
    if isinstance(expr, (Lower, Upper)):
        return 0
    if isinstance(expr, Neg):
        return expr_order(expr.arg)
    if isinstance(expr, (FloorDiv, CeilDiv)):
        return 1 + expr_order(expr.arg)
    if isinstance(expr, Diff):
        return max(expr_order(expr.lhs), expr_order(expr.rhs))
    raise TypeError(f"not an expression node: {expr!r}")


def substitute(expr: Expr, lowers: list[Expr], uppers: list[Expr]) -> Expr:
    """Replace each Lower(i)/Upper(i) leaf with the given expressions."""
    if isinstance(expr, Lower):
        return lowers[expr.i]
    if isinstance(expr, Upper):
        return uppers[expr.i]
    if isinstance(expr, Neg):
        return Neg(substitute(expr.arg, lowers, uppers))
    if isinstance(expr, FloorDiv):
        return FloorDiv(substitute(expr.arg, lowers, uppers), expr.m)
    if isinstance(expr, CeilDiv):
        return CeilDiv(substitute(expr.arg, lowers, uppers), expr.m)
    if isinstance(expr, Diff):
        return Diff(
            substitute(expr.lhs, lowers, uppers),
            substitute(expr.rhs, lowers, uppers),
        )
    raise TypeError(f"not an expression node: {expr!r}")


@dataclass(frozen=True)
class Box:
    """Integer bounds a_i <= x_i <= b_i."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise DimensionError("box bound lengths differ")
        for lo, hi in zip(self.lower, self.upper):
            if lo > hi:
                raise ValueError(f"empty box interval [{lo}, {hi}]")

    @classmethod
    def of(cls, lower, upper) -> "Box":
        return cls(tuple(int(x) for x in lower), tuple(int(x) for x in upper))

    @property
    def dim(self) -> int:
        return len(self.lower)

    def point_count(self) -> int:
        return prod(hi - lo + 1 for lo, hi in zip(self.lower, self.upper))


@dataclass(frozen=True)
class CertificateSet:
    """Finite expression set over the 2n bounds of an n-dimensional box."""

    ambient_dim: int
    rank: int
    exprs: tuple[Expr, ...]


def rank1_certificates(div: DivisorVector) -> list[Expr]:
    """Certificate family for the rank-1 lattice generated by div.

    Members are t·v, so each nonzero coordinate pins t to an interval and
    feasibility is the pairwise compatibility of rounded interval ends.
    Zero coordinates of v are zero in every member, which needs
    a_i <= 0 <= b_i: emitted as the two expressions b_i and -a_i. (The
    single difference b_i - a_i would accept boxes with 0 < a_i <= b_i
    that contain no lattice point.)
    """
    part = div.partition
    v = div.v
    out: list[Expr] = []
    for i in part.pos:
        for j in part.pos:
            out.append(Diff(FloorDiv(Upper(j), v[j]), CeilDiv(Lower(i), v[i])))
    for i in part.neg:
        for j in part.neg:
            out.append(Diff(FloorDiv(Lower(j), v[j]), CeilDiv(Upper(i), v[i])))
    for i in part.pos:
        for j in part.neg:
            out.append(Diff(FloorDiv(Lower(j), v[j]), CeilDiv(Lower(i), v[i])))
    for i in part.pos:
        for j in part.neg:
            out.append(Diff(FloorDiv(Upper(i), v[i]), CeilDiv(Upper(j), v[j])))
    for k in part.zero:
        out.append(Upper(k))
        out.append(Neg(Lower(k)))
    return out


def reduced_bounds_exprs(
    div: DivisorVector, imap: IndexMap
) -> tuple[list[Expr], list[Expr]]:
    """Bound expressions for each reduced coordinate, as (lowers, uppers).

    For a pair coordinate (i, j) the interval bounds the quotient
    difference y_i/v_i - y_j/v_j of any member that can be completed to a
    box point; the rounding pattern depends on the two coordinate signs.
    Zero coordinates pass their bounds through unchanged.
    """
    v = div.v
    lowers: list[Expr] = []
    uppers: list[Expr] = []
    for i, j in imap.pairs:
        pi, pj = v[i] > 0, v[j] > 0
        if pi and pj:
            lo = Diff(CeilDiv(Lower(i), v[i]), FloorDiv(Upper(j), v[j]))
            hi = Diff(FloorDiv(Upper(i), v[i]), CeilDiv(Lower(j), v[j]))
        elif not pi and not pj:
            lo = Diff(CeilDiv(Upper(i), v[i]), FloorDiv(Lower(j), v[j]))
            hi = Diff(FloorDiv(Lower(i), v[i]), CeilDiv(Upper(j), v[j]))
        elif pi:
            lo = Diff(CeilDiv(Lower(i), v[i]), FloorDiv(Lower(j), v[j]))
            hi = Diff(FloorDiv(Upper(i), v[i]), CeilDiv(Upper(j), v[j]))
        else:
            # negative i, positive j: mirror of the mixed case above, since
            # the pair value is the negation of the (j, i) pair value.
            lo = Diff(CeilDiv(Upper(i), v[i]), FloorDiv(Upper(j), v[j]))
            hi = Diff(FloorDiv(Lower(i), v[i]), CeilDiv(Lower(j), v[j]))
        lowers.append(lo)
        uppers.append(hi)
    for k in imap.zeros:
        lowers.append(Lower(k))
        uppers.append(Upper(k))
    return lowers, uppers


def _interval_certs(div: DivisorVector) -> list[Expr]:
    """Per-coordinate conditions: each nonzero coordinate admits some t."""
    v = div.v
    out: list[Expr] = []
    for i in div.partition.pos:
        out.append(Diff(FloorDiv(Upper(i), v[i]), CeilDiv(Lower(i), v[i])))
    for j in div.partition.neg:
        out.append(Diff(FloorDiv(Lower(j), v[j]), CeilDiv(Upper(j), v[j])))
    return out


def generate_certificates(cert: ChainCertificate) -> CertificateSet:
    """Build the certificate set for a chain-certified lattice.

    Rank 1 uses the closed family directly. Otherwise the child set is
    generated for the image lattice and every child input leaf is replaced
    by the matching reduced-bound expression (raising the division depth
    by at most one), then the per-coordinate interval conditions for the
    divisor are appended.
    """
    lat = cert.lattice
    if cert.child is None:
        exprs = rank1_certificates(cert.divisor)
        return CertificateSet(lat.ambient_dim, 1, tuple(exprs))
    child_set = generate_certificates(cert.child)
    lowers, uppers = reduced_bounds_exprs(cert.divisor, cert.index_map)
    exprs = [substitute(e, lowers, uppers) for e in child_set.exprs]
    exprs.extend(_interval_certs(cert.divisor))
    return CertificateSet(lat.ambient_dim, child_set.rank + 1, tuple(exprs))


def feasible_by_certificates(certs: CertificateSet, box: Box) -> bool:
    """True iff every certificate expression is nonnegative at the bounds."""
    if box.dim != certs.ambient_dim:
        raise DimensionError(
            f"box dimension {box.dim}, certificates expect {certs.ambient_dim}"
        )
    return all(evaluate(e, box.lower, box.upper) >= 0 for e in certs.exprs)


def _t_interval(div: DivisorVector, lower, upper):
    """Integer range of t with lower <= t·v <= upper on nonzero coords."""
    v = div.v
    lo = None
    hi = None
    for i in div.partition.pos:
        li = ceil_div(lower[i], v[i])
        ui = floor_div(upper[i], v[i])
        lo = li if lo is None else max(lo, li)
        hi = ui if hi is None else min(hi, ui)
    for i in div.partition.neg:
        li = ceil_div(upper[i], v[i])
        ui = floor_div(lower[i], v[i])
        lo = li if lo is None else max(lo, li)
        hi = ui if hi is None else min(hi, ui)
    return lo, hi


def solve_box(cert: ChainCertificate, box: Box):
    """Explicit lattice point in the box, or None when there is none.

    Follows the constructive recursion: check the per-coordinate interval
    conditions, evaluate the reduced bounds numerically, solve the child,
    lift the child witness through a direct-sum complement of the divisor,
    then pick the smallest feasible multiplier t. Returns None exactly on
    the inputs where the certificate set evaluates negative somewhere; a
    child success that cannot be lifted is an internal inconsistency.
    """
    lat = cert.lattice
    if box.dim != lat.ambient_dim:
        raise DimensionError(
            f"box dimension {box.dim}, lattice ambient is {lat.ambient_dim}"
        )
    div = cert.divisor
    v = div.v
    a, b = box.lower, box.upper
    if cert.child is None:
        for k in div.partition.zero:
            if not (a[k] <= 0 <= b[k]):
                return None
        lo, hi = _t_interval(div, a, b)
        if lo > hi:
            return None
        return tuple(lo * x for x in v)

    for i in div.partition.pos:
        if floor_div(b[i], v[i]) < ceil_div(a[i], v[i]):
            return None
    for j in div.partition.neg:
        if floor_div(a[j], v[j]) < ceil_div(b[j], v[j]):
            return None

    lower_exprs, upper_exprs = reduced_bounds_exprs(div, cert.index_map)
    red_lo = [evaluate(e, a, b) for e in lower_exprs]
    red_hi = [evaluate(e, a, b) for e in upper_exprs]
    if any(lo > hi for lo, hi in zip(red_lo, red_hi)):
        return None
    z = solve_box(cert.child, Box.of(red_lo, red_hi))
    if z is None:
        return None

    comp = lat.complement_of(v)
    images = [map_point(div, cert.index_map, row) for row in comp.basis]
    cols = [[img[r] for img in images] for r in range(cert.index_map.output_dim)]
    coeffs = solve_integer_system(cols, list(z))
    if coeffs is None:
        raise InconsistencyError("child witness is outside the complement image")
    y = [
        sum(coeffs[k] * comp.basis[k][j] for k in range(comp.rank))
        for j in range(lat.ambient_dim)
    ]
    for k in div.partition.zero:
        if not (a[k] <= y[k] <= b[k]):
            raise InconsistencyError("lifted point leaves the box on a zero coordinate")
    lo, hi = _t_interval(
        div,
        [a[i] - y[i] for i in range(lat.ambient_dim)],
        [b[i] - y[i] for i in range(lat.ambient_dim)],
    )
    if lo > hi:
        raise InconsistencyError("no multiplier fits the lifted point")
    return tuple(lo * v[i] + y[i] for i in range(lat.ambient_dim))


def brute_force_solve(lat: Lattice, box: Box, cap: int = DEFAULT_ORACLE_CAP):
    """First lattice point of the box in lexicographic scan order, or None."""
    if box.dim != lat.ambient_dim:
        raise DimensionError(
            f"box dimension {box.dim}, lattice ambient is {lat.ambient_dim}"
        )
    total = box.point_count()
    if total > cap:
        raise CapExceededError(f"box holds {total} points, cap is {cap}")
    ranges = [range(lo, hi + 1) for lo, hi in zip(box.lower, box.upper)]
    for point in product(*ranges):
        if lat.member(point):
            return point
    return None
